// primhom command line front end.  All computation goes through the C API in
// primhom.h; this file only handles files, flags and report rendering.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "primhom.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "primhom: " << msg << "\n";
  std::exit(code);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitUsage, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die(kExitUsage, "cannot write '" + path + "'");
  out << text;
}

Json parse_or_die(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) die(kExitUsage, "malformed JSON in " + what);
  return j;
}

[[noreturn]] void die_api(const std::string& what) {
  int st = ph_last_status();
  int code = st == PH_BUDGET ? kExitBudget : st == PH_BAD_INPUT ? kExitUsage : kExitMathFail;
  die(code, what + ": " + ph_last_error());
}

// hom files may reference the group by path; splice the spec in
std::string load_hom_text(const std::string& path) {
  Json j = parse_or_die(read_file(path), path);
  if (j.contains("group") && j["group"].is_string()) {
    std::string gpath = j["group"].get<std::string>();
    j["group"] = parse_or_die(read_file(gpath), gpath);
  }
  return j.dump();
}

struct CommonOpts {
  std::string hom_path, group_path, table_spec = "auto", preset_path, format = "json", out_path;
  long long budget = 0;
  int word_budget = 0;
};

std::string opts_json(const CommonOpts& c, bool track_words = true) {
  long long budget = c.budget;
  if (budget == 0) {
    if (const char* env = std::getenv("PHL_STATE_BUDGET")) budget = std::atoll(env);
  }
  Json j;
  if (budget > 0) j["state_budget"] = budget;
  if (c.word_budget > 0) j["word_budget"] = c.word_budget;
  j["track_words"] = track_words;
  return j.dump();
}

void render_text(const Json& j, std::ostream& os, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                     (it.value()[0].is_object() || it.value()[0].is_array()))) {
        os << pad << it.key() << ":\n";
        render_text(it.value(), os, indent + 2);
      } else {
        os << pad << it.key() << ": " << it.value().dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        os << pad << "-\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << "- " << v.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

[[noreturn]] void emit_and_exit(char* report, const CommonOpts& c) {
  if (!report) die_api("run failed");
  std::string text = report;
  ph_string_free(report);
  Json j = parse_or_die(text, "report");
  std::string rendered = c.format == "text" ? [&] {
    std::ostringstream os;
    render_text(j, os, 0);
    return os.str();
  }() : text + "\n";
  if (!c.out_path.empty())
    write_file(c.out_path, rendered);
  else
    std::cout << rendered;
  bool ok = !j.contains("ok") || j["ok"].get<bool>();
  std::exit(ok ? kExitOk : kExitMathFail);
}

ph_hom* load_hom(const CommonOpts& c) {
  if (c.hom_path.empty()) die(kExitUsage, "--hom is required");
  ph_hom* h = ph_hom_from_json(load_hom_text(c.hom_path).c_str());
  if (!h) die_api("loading hom");
  return h;
}

std::string cache_dir() {
  if (const char* env = std::getenv("PHL_CACHE_DIR")) return env;
  return ".phl_cache";
}

// --table auto: compute or load from the cache keyed by the group hash
ph_table* resolve_table(const CommonOpts& c, const std::string& hom_text) {
  if (c.table_spec != "auto") {
    ph_table* t = ph_table_from_json(read_file(c.table_spec).c_str());
    if (!t) die_api("loading table '" + c.table_spec + "'");
    return t;
  }
  Json hom = parse_or_die(hom_text, "hom spec");
  ph_group* g = ph_group_from_json(hom["group"].dump().c_str());
  if (!g) die_api("loading group");
  char* hash = ph_group_hash(g);
  std::string key = hash;
  ph_string_free(hash);
  std::string path = cache_dir() + "/" + key + ".json";
  {
    std::ifstream probe(path);
    if (probe) {
      ph_table* t = ph_table_from_json(read_file(path).c_str());
      if (t) {
        ph_group_free(g);
        return t;
      }
      // fall through and recompute on a bad cache entry
    }
  }
  ph_table* t = ph_table_compute(g);
  ph_group_free(g);
  if (!t) die_api("computing character table");
  char* tj = ph_table_to_json(t);
  if (tj) {
#ifdef _WIN32
#else
    std::string mk = "mkdir -p '" + cache_dir() + "'";
    std::system(mk.c_str());
#endif
    write_file(path, tj);
    ph_string_free(tj);
  }
  return t;
}

void add_common(CLI::App* cmd, CommonOpts& c, bool with_hom = true, bool with_table = false,
                bool with_word_budget = false, bool with_preset = false) {
  if (with_hom) cmd->add_option("--hom", c.hom_path, "homomorphism spec file (JSON)");
  if (with_table) cmd->add_option("--table", c.table_spec, "auto or a table JSON path");
  if (with_word_budget) cmd->add_option("--word-budget", c.word_budget, "Nielsen move depth");
  if (with_preset) cmd->add_option("--preset", c.preset_path, "surface preset JSON path");
  cmd->add_option("--budget", c.budget, "state budget (default 1e8, env PHL_STATE_BUDGET)");
  cmd->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", c.out_path, "write the report to a file");
}

ph_preset* load_preset(const CommonOpts& c) {
  if (c.preset_path.empty()) return nullptr;
  ph_preset* p = ph_preset_from_json(read_file(c.preset_path).c_str());
  if (!p) die_api("loading preset");
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact primitive-homology computations for finite covers of graphs"};
  app.require_subcommand(1);

  CommonOpts c;
  int torus_p = 3;
  int sweep_max_order = 200, sweep_rank = 3;
  std::string group_path;

  auto* prim = app.add_subcommand("prim-images", "all images of primitive elements under phi");
  add_common(prim, c);
  auto* kp = app.add_subcommand("kernel-primitive", "decide primitive-in-kernel with a witness");
  add_common(kp, c);
  auto* irrpr = app.add_subcommand("irrpr", "irreducibles with a vector fixed by a primitive image");
  add_common(irrpr, c, true, true);
  auto* chart = app.add_subcommand("chartable", "compute (and cache) the exact character table");
  chart->add_option("--group", group_path, "group spec file (JSON)")->required();
  chart->add_option("--format", c.format, "json or text");
  chart->add_option("--out", c.out_path, "write the table to a file");
  auto* cw = app.add_subcommand("chevalley-weil", "verify H1(Y) = (n-1)C[G] + C exactly");
  add_common(cw, c);
  auto* ph = app.add_subcommand("prim-homology", "bracket the primitive-homology multiplicities");
  add_common(ph, c, true, true, true);
  auto* qc = app.add_subcommand("quotient-check", "dim H1(Y)^<g> vs rank H1(Y/<g>) for all g");
  add_common(qc, c);
  auto* scc = app.add_subcommand("scc-images", "images of simple closed curves on the surface");
  add_common(scc, c, true, false, false, true);
  auto* irrscc = app.add_subcommand("irrscc", "irreducibles fixed by a simple-closed-curve image");
  add_common(irrscc, c, true, true, false, true);
  auto* torus = app.add_subcommand("torus-example", "exhaustive torus homology cover check");
  torus->add_option("-p,--p", torus_p, "odd prime (3, 5 or 7)");
  torus->add_option("--format", c.format, "json or text");
  torus->add_option("--out", c.out_path, "write the report to a file");
  auto* gamma = app.add_subcommand("gamma-example", "order-32 nilpotent example verification");
  gamma->add_option("--format", c.format, "json or text");
  gamma->add_option("--out", c.out_path, "write the report to a file");
  auto* sweep = app.add_subcommand("sphere-search", "kernel-primitive sweep of the catalog");
  sweep->add_option("--max-order", sweep_max_order, "largest group order (default 200)");
  sweep->add_option("--rank", sweep_rank, "free group rank (2 or 3)");
  sweep->add_option("--budget", c.budget, "state budget");
  sweep->add_option("--format", c.format, "json or text");
  sweep->add_option("--out", c.out_path, "write the report to a file");

  CLI11_PARSE(app, argc, argv);

  if (prim->parsed()) {
    ph_hom* h = load_hom(c);
    emit_and_exit(ph_run_prim_images(h, opts_json(c).c_str()), c);
  }
  if (kp->parsed()) {
    ph_hom* h = load_hom(c);
    emit_and_exit(ph_run_kernel_primitive(h, opts_json(c).c_str()), c);
  }
  if (irrpr->parsed()) {
    std::string hom_text = load_hom_text(c.hom_path.empty()
                                             ? (die(kExitUsage, "--hom is required"), "")
                                             : c.hom_path);
    ph_hom* h = ph_hom_from_json(hom_text.c_str());
    if (!h) die_api("loading hom");
    ph_table* t = resolve_table(c, hom_text);
    emit_and_exit(ph_run_irrpr(h, t, opts_json(c).c_str()), c);
  }
  if (chart->parsed()) {
    ph_group* g = ph_group_from_json(read_file(group_path).c_str());
    if (!g) die_api("loading group");
    ph_table* t = ph_table_compute(g);
    if (!t) die_api("computing character table");
    char* tj = ph_table_to_json(t);
    if (!tj) die_api("serializing table");
    std::string text = tj;
    ph_string_free(tj);
    if (!c.out_path.empty())
      write_file(c.out_path, text);
    else
      std::cout << text << "\n";
    return kExitOk;
  }
  if (cw->parsed()) {
    ph_hom* h = load_hom(c);
    emit_and_exit(ph_run_chevalley_weil(h), c);
  }
  if (ph->parsed()) {
    std::string hom_text = load_hom_text(c.hom_path.empty()
                                             ? (die(kExitUsage, "--hom is required"), "")
                                             : c.hom_path);
    ph_hom* h = ph_hom_from_json(hom_text.c_str());
    if (!h) die_api("loading hom");
    ph_table* t = resolve_table(c, hom_text);
    emit_and_exit(ph_run_prim_homology(h, t, opts_json(c).c_str()), c);
  }
  if (qc->parsed()) {
    ph_hom* h = load_hom(c);
    emit_and_exit(ph_run_quotient_check(h), c);
  }
  if (scc->parsed()) {
    ph_hom* h = load_hom(c);
    emit_and_exit(ph_run_scc_images(h, load_preset(c), opts_json(c).c_str()), c);
  }
  if (irrscc->parsed()) {
    std::string hom_text = load_hom_text(c.hom_path.empty()
                                             ? (die(kExitUsage, "--hom is required"), "")
                                             : c.hom_path);
    ph_hom* h = ph_hom_from_json(hom_text.c_str());
    if (!h) die_api("loading hom");
    ph_table* t = resolve_table(c, hom_text);
    emit_and_exit(ph_run_irrscc(h, t, load_preset(c), opts_json(c).c_str()), c);
  }
  if (torus->parsed()) {
    emit_and_exit(ph_run_torus_example(torus_p), c);
  }
  if (gamma->parsed()) {
    emit_and_exit(ph_run_gamma_example(), c);
  }
  if (sweep->parsed()) {
    emit_and_exit(ph_run_sphere_search(sweep_max_order, sweep_rank, opts_json(c).c_str()), c);
  }
  die(kExitUsage, "no subcommand");
}
