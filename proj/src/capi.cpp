#include "primhom.h"

#include <cstring>
#include <sstream>

#include "cover.hpp"
#include "examples.hpp"
#include "json_io.hpp"

using namespace primhom;

struct ph_group {
  GroupPtr g;
};
struct ph_hom {
  Hom h;
};
struct ph_table {
  TablePtr t;
};
struct ph_preset {
  SurfacePreset p;
};

namespace {

thread_local int g_status = PH_OK;
thread_local std::string g_error;

int status_of(const PHError& e) {
  switch (e.code) {
    case Err::Schema:
    case Err::BadParameters:
    case Err::Io:
    case Err::NotAPGroup:
    case Err::EmptyWord:
      return PH_BAD_INPUT;
    case Err::StateBudgetExceeded:
    case Err::ClosureBoundExceeded:
      return PH_BUDGET;
    case Err::NotAssociative:
    case Err::DivisionByZero:
    case Err::PrimeSearchFailed:
    case Err::InternalNonInteger:
    case Err::NotAnAutomorphism:
    case Err::ChevalleyWeilViolation:
    case Err::OrthogonalityError:
    case Err::ExhaustiveCheckFailed:
      return PH_FAILED_CHECK;
    default:
      return PH_INTERNAL;
  }
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  g_status = PH_OK;
  g_error.clear();
  try {
    return f();
  } catch (const PHError& e) {
    g_status = status_of(e);
    g_error = e.what();
  } catch (const std::exception& e) {
    g_status = PH_INTERNAL;
    g_error = e.what();
  }
  return nullptr;
}

char* dup_string(const std::string& s) {
  char* out = (char*)malloc(s.size() + 1);
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dump_report(const Json& j) { return dup_string(j.dump(2)); }

struct Opts {
  long long state_budget = 100000000;
  int word_budget = 16;
  bool track_words = true;
  bool compute_redundant = false;
  bool check_induced = true;
};

Opts parse_opts(const char* opts_json) {
  Opts o;
  if (!opts_json || !*opts_json) return o;
  Json j = parse_json_text(opts_json);
  check(j.is_object(), Err::Schema, "options must be a JSON object");
  if (j.contains("state_budget")) o.state_budget = j["state_budget"].get<long long>();
  if (j.contains("word_budget")) o.word_budget = j["word_budget"].get<int>();
  if (j.contains("track_words")) o.track_words = j["track_words"].get<bool>();
  if (j.contains("compute_redundant")) o.compute_redundant = j["compute_redundant"].get<bool>();
  if (j.contains("check_induced")) o.check_induced = j["check_induced"].get<bool>();
  check(o.state_budget > 0 && o.word_budget > 0, Err::Schema, "budgets must be positive");
  return o;
}

Json group_brief(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["classes"] = g.num_classes();
  j["exponent"] = g.exponent();
  j["abelian"] = g.is_abelian();
  return j;
}

TablePtr table_or_compute(const ph_hom* h, const ph_table* t) {
  if (t) {
    check(generator_matching_isomorphic(*t->t->group, *h->h.group) ||
              t->t->group.get() == h->h.group.get(),
          Err::Schema, "table group differs from the homomorphism's group");
    return t->t;
  }
  return character_table(h->h.group);
}

}  // namespace

extern "C" {

int ph_last_status(void) { return g_status; }
const char* ph_last_error(void) { return g_error.c_str(); }
void ph_string_free(char* s) { free(s); }
const char* ph_version(void) { return "primhom 1.0.0"; }

ph_group* ph_group_from_json(const char* json_text) {
  return guarded([&]() -> ph_group* {
    check(json_text != nullptr, Err::Schema, "null spec");
    return new ph_group{group_from_json(parse_json_text(json_text))};
  });
}

void ph_group_free(ph_group* g) { delete g; }

int ph_group_order(const ph_group* g) { return g ? g->g->order() : 0; }

char* ph_group_to_json(const ph_group* g) {
  return guarded([&]() -> char* {
    check(g != nullptr, Err::Schema, "null group");
    return dup_string(group_to_json(*g->g).dump(2));
  });
}

char* ph_group_hash(const ph_group* g) {
  return guarded([&]() -> char* {
    check(g != nullptr, Err::Schema, "null group");
    std::ostringstream os;
    os << std::hex << g->g->canonical_hash();
    return dup_string(os.str());
  });
}

ph_hom* ph_hom_from_json(const char* json_text) {
  return guarded([&]() -> ph_hom* {
    check(json_text != nullptr, Err::Schema, "null spec");
    return new ph_hom{hom_from_json(parse_json_text(json_text))};
  });
}

void ph_hom_free(ph_hom* h) { delete h; }

ph_table* ph_table_compute(const ph_group* g) {
  return guarded([&]() -> ph_table* {
    check(g != nullptr, Err::Schema, "null group");
    return new ph_table{character_table(g->g)};
  });
}

ph_table* ph_table_from_json(const char* json_text) {
  return guarded([&]() -> ph_table* {
    check(json_text != nullptr, Err::Schema, "null spec");
    return new ph_table{table_from_json(parse_json_text(json_text))};
  });
}

void ph_table_free(ph_table* t) { delete t; }

char* ph_table_to_json(const ph_table* t) {
  return guarded([&]() -> char* {
    check(t != nullptr, Err::Schema, "null table");
    return dup_string(table_to_json(*t->t).dump(2));
  });
}

ph_preset* ph_preset_from_json(const char* json_text) {
  return guarded([&]() -> ph_preset* {
    check(json_text != nullptr, Err::Schema, "null spec");
    return new ph_preset{preset_from_json(parse_json_text(json_text))};
  });
}

ph_preset* ph_preset_torus_two_punctures(void) {
  return guarded([&]() -> ph_preset* { return new ph_preset{torus_two_punctures_preset()}; });
}

void ph_preset_free(ph_preset* p) { delete p; }

char* ph_preset_to_json(const ph_preset* p) {
  return guarded([&]() -> char* {
    check(p != nullptr, Err::Schema, "null preset");
    return dup_string(preset_to_json(p->p).dump(2));
  });
}

char* ph_run_prim_images(const ph_hom* h, const char* opts_json) {
  return guarded([&]() -> char* {
    check(h != nullptr, Err::Schema, "null hom");
    Opts o = parse_opts(opts_json);
    OrbitOptions oo;
    oo.state_budget = o.state_budget;
    oo.track_words = o.track_words;
    oo.compute_redundant = o.compute_redundant;
    OrbitResult r = primitive_image_set(h->h, oo);
    Json j;
    j["command"] = "prim-images";
    j["group"] = group_brief(*h->h.group);
    j["rank"] = h->h.rank();
    j["images"] = r.images;
    Json labels = Json::array();
    for (int x : r.images) labels.push_back(h->h.group->label_of(x));
    j["image_labels"] = labels;
    j["image_count"] = (long long)r.images.size();
    j["kernel_primitive"] = std::binary_search(r.images.begin(), r.images.end(), 0);
    if (o.track_words) {
      Json w = Json::object();
      for (auto& [img, word] : r.witnesses) w[std::to_string(img)] = word.str();
      j["witnesses"] = w;
    }
    if (r.redundant_computed) j["component_has_redundant"] = r.component_has_redundant;
    j["visited"] = r.visited;
    j["ok"] = true;
    return dump_report(j);
  });
}

char* ph_run_kernel_primitive(const ph_hom* h, const char* opts_json) {
  return guarded([&]() -> char* {
    check(h != nullptr, Err::Schema, "null hom");
    Opts o = parse_opts(opts_json);
    auto [found, witness] = has_primitive_in_kernel(h->h, o.track_words, o.state_budget);
    Json j;
    j["command"] = "kernel-primitive";
    j["group"] = group_brief(*h->h.group);
    j["rank"] = h->h.rank();
    j["kernel_primitive"] = found;
    if (witness) {
      j["witness"] = witness->str();
      j["witness_letters"] = word_to_json(*witness);
      j["witness_verified"] = evaluate(h->h, *witness) == 0;
    }
    j["ok"] = true;
    return dump_report(j);
  });
}

char* ph_run_irrpr(const ph_hom* h, const ph_table* t, const char* opts_json) {
  return guarded([&]() -> char* {
    check(h != nullptr, Err::Schema, "null hom");
    Opts o = parse_opts(opts_json);
    TablePtr tab = table_or_compute(h, t);
    OrbitOptions oo;
    oo.state_budget = o.state_budget;
    auto rows = irrpr_rows(h->h, *tab, oo);
    Json j;
    j["command"] = "irrpr";
    j["group"] = group_brief(*h->h.group);
    j["num_irreducibles"] = tab->num_rows();
    j["degrees"] = tab->dims;
    j["irrpr_rows"] = rows;
    Json excluded = Json::array();
    for (int i = 0; i < tab->num_rows(); ++i)
      if (!std::binary_search(rows.begin(), rows.end(), i)) excluded.push_back(i);
    j["excluded_rows"] = excluded;
    j["equals_irr"] = (int)rows.size() == tab->num_rows();
    j["ok"] = true;
    return dump_report(j);
  });
}

char* ph_run_chevalley_weil(const ph_hom* h) {
  return guarded([&]() -> char* {
    check(h != nullptr, Err::Schema, "null hom");
    CoverGraph c = build_cover(h->h);
    HomologySpace hs = homology_action(c, h->h);  // asserts the identity
    Json j;
    j["command"] = "chevalley-weil";
    j["group"] = group_brief(*h->h.group);
    j["rank"] = h->h.rank();
    j["vertices"] = c.n_vertices;
    j["edges"] = c.n_edges();
    j["dim"] = hs.dim;
    j["character"] = hs.character;
    j["cw_check"] = true;
    j["ok"] = true;
    return dump_report(j);
  });
}

char* ph_run_prim_homology(const ph_hom* h, const ph_table* t, const char* opts_json) {
  return guarded([&]() -> char* {
    check(h != nullptr, Err::Schema, "null hom");
    Opts o = parse_opts(opts_json);
    TablePtr tab = table_or_compute(h, t);
    SpanOptions so;
    so.state_budget = o.state_budget;
    so.check_induced = o.check_induced;
    SubrepSpan span = primitive_homology_span(h->h, *tab, o.word_budget, so);
    Json j;
    j["command"] = "prim-homology";
    j["group"] = group_brief(*h->h.group);
    j["cw_check"] = true;
    j["dim"] = span.dim;
    j["rank"] = span.rank;
    j["irrpr_rows"] = span.irrpr;
    j["degrees"] = tab->dims;
    j["lower_mult"] = span.lower_mult;
    j["upper_mult"] = span.upper_mult;
    j["determined"] = span.determined;
    j["budget"] = span.word_budget;
    j["budget_truncated"] = span.budget_truncated;
    j["words_used"] = span.words_used;
    long long upper_dim = 0;
    for (size_t i = 0; i < span.upper_mult.size(); ++i)
      upper_dim += (long long)span.upper_mult[i] * tab->dims[i];
    j["upper_dim"] = upper_dim;
    j["ok"] = true;
    return dump_report(j);
  });
}

char* ph_run_quotient_check(const ph_hom* h) {
  return guarded([&]() -> char* {
    check(h != nullptr, Err::Schema, "null hom");
    CoverGraph c = build_cover(h->h);
    HomologySpace hs = homology_action(c, h->h);
    Json rows = Json::array();
    bool ok = true;
    for (int g = 0; g < h->h.group->order(); ++g) {
      auto rep = quotient_fixed_check(hs, h->h, g);  // throws on mismatch
      Json row;
      row["g"] = g;
      row["order"] = h->h.group->element_order(g);
      row["fixed_dim"] = rep.fixed_dim;
      row["quotient_rank"] = rep.quotient_rank;
      rows.push_back(row);
    }
    Json j;
    j["command"] = "quotient-check";
    j["group"] = group_brief(*h->h.group);
    j["elements"] = rows;
    j["ok"] = ok;
    return dump_report(j);
  });
}

char* ph_run_scc_images(const ph_hom* h, const ph_preset* p, const char* opts_json) {
  return guarded([&]() -> char* {
    check(h != nullptr, Err::Schema, "null hom");
    Opts o = parse_opts(opts_json);
    SurfacePreset preset = p ? p->p : torus_two_punctures_preset();
    OrbitOptions oo;
    oo.state_budget = o.state_budget;
    auto images = scc_image_set(h->h, preset, oo);
    Json j;
    j["command"] = "scc-images";
    j["group"] = group_brief(*h->h.group);
    j["rank"] = h->h.rank();
    j["images"] = images;
    Json labels = Json::array();
    for (int x : images) labels.push_back(h->h.group->label_of(x));
    j["image_labels"] = labels;
    j["image_count"] = (long long)images.size();
    j["identity_is_scc_image"] = std::binary_search(images.begin(), images.end(), 0);
    j["ok"] = true;
    return dump_report(j);
  });
}

char* ph_run_irrscc(const ph_hom* h, const ph_table* t, const ph_preset* p,
                    const char* opts_json) {
  return guarded([&]() -> char* {
    check(h != nullptr, Err::Schema, "null hom");
    Opts o = parse_opts(opts_json);
    TablePtr tab = table_or_compute(h, t);
    SurfacePreset preset = p ? p->p : torus_two_punctures_preset();
    OrbitOptions oo;
    oo.state_budget = o.state_budget;
    auto rows = irrscc_rows(h->h, *tab, preset, oo);
    Json j;
    j["command"] = "irrscc";
    j["group"] = group_brief(*h->h.group);
    j["num_irreducibles"] = tab->num_rows();
    j["degrees"] = tab->dims;
    j["irrscc_rows"] = rows;
    j["equals_irr"] = (int)rows.size() == tab->num_rows();
    // reference multiplicity bound for closed-surface covers (genus 2 shown)
    const int genus = 2;
    Json bound = Json::array();
    for (int i = 0; i < tab->num_rows(); ++i) {
      bool in = std::binary_search(rows.begin(), rows.end(), i);
      long long m = in ? (long long)(2 * genus - 2) * tab->dims[i] : 0;
      if (i == 0) m += 2;
      bound.push_back(m);
    }
    j["closed_surface_bound"] = Json{{"genus", genus}, {"mult", bound}};
    j["ok"] = true;
    return dump_report(j);
  });
}

char* ph_run_torus_example(int p) {
  return guarded([&]() -> char* {
    TorusCoverReport r = torus_cover_verify(p);
    Json j;
    j["command"] = "torus-example";
    j["p"] = r.p;
    j["matrix_identities"] = r.matrix_identities;
    j["family_counts"] = Json::array({r.family_count[0], r.family_count[1], r.family_count[2]});
    j["qualifying"] = r.qualifying;
    j["classifier_matches"] = r.classifier_matches;
    j["exponent_nonzero"] = r.exponent_nonzero;
    j["ok"] = r.ok;
    return dump_report(j);
  });
}

char* ph_run_gamma_example(void) {
  return guarded([&]() -> char* {
    GammaReport r = gamma_example_verify();
    Json j;
    j["command"] = "gamma-example";
    j["order"] = r.order;
    j["rho_is_homomorphism"] = r.rho_is_homomorphism;
    j["generator_matrices_order_four"] = r.generator_matrices_order_four;
    j["commutator_maps_to_minus_identity"] = r.commutator_maps_to_minus_identity;
    j["identity_not_primitive_image"] = r.identity_not_primitive_image;
    j["no_eigenvalue_one_on_primitive_images"] = r.no_eigenvalue_one_on_primitive_images;
    j["nontrivial_kernel_element"] = r.nontrivial_kernel_element;
    j["rho_row_excluded_from_irrpr"] = r.rho_row_excluded_from_irrpr;
    j["cw_dim"] = r.cw_dim;
    j["upper_bound_dim"] = r.upper_bound_dim;
    j["upper_below_cw"] = r.upper_below_cw;
    j["ok"] = r.ok;
    return dump_report(j);
  });
}

char* ph_run_sphere_search(int max_order, int rank, const char* opts_json) {
  return guarded([&]() -> char* {
    Opts o = parse_opts(opts_json);
    SphereSearchReport r = sphere_catalog_search(max_order, rank, o.state_budget);
    Json j;
    j["command"] = "sphere-search";
    j["max_order"] = r.max_order;
    j["rank"] = r.rank;
    j["groups"] = r.groups;
    j["surjections"] = r.surjections;
    j["components_explored"] = r.components_explored;
    Json fails = Json::array();
    for (const auto& f : r.failures) {
      Json fj;
      fj["group"] = f.group;
      fj["tuple"] = f.tuple;
      fj["tuple_labels"] = f.tuple_labels;
      fails.push_back(fj);
    }
    j["no_kernel_primitive"] = fails;
    j["failure_count"] = (long long)r.failures.size();
    j["ok"] = r.ok;
    return dump_report(j);
  });
}

char* ph_run_frattini_check(const ph_hom* h) {
  return guarded([&]() -> char* {
    check(h != nullptr, Err::Schema, "null hom");
    bool basis = frattini_basis_check(h->h);
    Json j;
    j["command"] = "frattini-check";
    j["group"] = group_brief(*h->h.group);
    j["is_basis_mod_frattini"] = basis;
    j["ok"] = true;
    return dump_report(j);
  });
}

}  // extern "C"
