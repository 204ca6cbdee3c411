#include "json_io.hpp"

#include <algorithm>

namespace primhom {

namespace {

void require(bool ok, const std::string& what) {
  check(ok, Err::Schema, "bad spec: " + what);
}

int get_int(const Json& j, const char* key) {
  require(j.contains(key) && j[key].is_number_integer(), std::string(key) + " must be an integer");
  return j[key].get<int>();
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  check(!j.is_discarded(), Err::Schema, "malformed JSON");
  return j;
}

Json cyclo_to_json(const Cyclo& c) {
  Json j;
  j["N"] = c.conductor();
  Json arr = Json::array();
  for (const auto& r : c.coeffs()) arr.push_back(rat_to_string(r));
  j["c"] = arr;
  return j;
}

Cyclo cyclo_from_json(const Json& j) {
  require(j.is_object() && j.contains("N") && j.contains("c"), "cyclotomic needs N and c");
  int n = get_int(j, "N");
  require(n >= 1, "conductor must be positive");
  std::vector<Rat> coeffs;
  for (const auto& v : j["c"]) {
    require(v.is_string() || v.is_number_integer(), "coefficients are strings or ints");
    coeffs.push_back(v.is_string() ? rat_from_string(v.get<std::string>())
                                   : Rat(v.get<long long>()));
  }
  return Cyclo::from_coeffs(n, std::move(coeffs));
}

Json word_to_json(const Word& w) {
  Json arr = Json::array();
  for (int l : w.ls) arr.push_back(l);
  return arr;
}

Word word_from_json(const Json& j) {
  require(j.is_array(), "word must be an array of nonzero letters");
  std::vector<int> ls;
  for (const auto& v : j) {
    require(v.is_number_integer(), "word letters must be integers");
    int l = v.get<int>();
    require(l != 0, "word letters must be nonzero");
    ls.push_back(l);
  }
  return Word(std::move(ls));
}

GroupPtr group_from_json(const Json& j) {
  require(j.is_object() && j.contains("kind") && j["kind"].is_string(), "group needs a kind");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "metacyclic") {
    return FiniteGroup::metacyclic(get_int(j, "m"), get_int(j, "k"), get_int(j, "r"));
  }
  if (kind == "metacyclic_ext") {
    return FiniteGroup::metacyclic_ext(get_int(j, "m"), get_int(j, "k"), get_int(j, "r"),
                                       get_int(j, "conj_a"), get_int(j, "conj_b"),
                                       get_int(j, "sq"));
  }
  if (kind == "abelian") {
    require(j.contains("moduli") && j["moduli"].is_array(), "abelian needs moduli");
    std::vector<int> moduli;
    for (const auto& v : j["moduli"]) moduli.push_back(v.get<int>());
    return FiniteGroup::abelian(moduli);
  }
  if (kind == "nilpotent2") {
    std::vector<std::vector<int>> cq;
    if (j.contains("center_quotient")) {
      require(j["center_quotient"].is_array(), "center_quotient must be an array of vectors");
      for (const auto& row : j["center_quotient"]) {
        std::vector<int> v;
        for (const auto& x : row) v.push_back(x.get<int>());
        cq.push_back(std::move(v));
      }
    }
    return FiniteGroup::nilpotent2(get_int(j, "rank"), get_int(j, "modulus"), cq);
  }
  if (kind == "permutation") {
    require(j.contains("gens") && j["gens"].is_array(), "permutation needs gens");
    std::vector<std::vector<int>> gens;
    for (const auto& p : j["gens"]) {
      std::vector<int> perm;
      for (const auto& v : p) perm.push_back(v.get<int>());
      gens.push_back(std::move(perm));
    }
    return FiniteGroup::from_permutations(gens);
  }
  if (kind == "table") {
    int order = get_int(j, "order");
    require(j.contains("mult") && j["mult"].is_array(), "table needs mult");
    std::vector<int> flat;
    for (const auto& v : j["mult"]) flat.push_back(v.get<int>());
    std::vector<int> gens;
    require(j.contains("gens") && j["gens"].is_array(), "table needs gens");
    for (const auto& v : j["gens"]) gens.push_back(v.get<int>());
    std::vector<std::string> labels;
    if (j.contains("labels"))
      for (const auto& v : j["labels"]) labels.push_back(v.get<std::string>());
    return FiniteGroup::from_table(order, std::move(flat), std::move(gens), std::move(labels));
  }
  fail(Err::Schema, "unknown group kind '" + kind + "'");
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["kind"] = "table";
  j["order"] = g.order();
  Json mult = Json::array();
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) mult.push_back(g.mult(a, b));
  j["mult"] = mult;
  j["gens"] = g.generators();
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Hom hom_from_json(const Json& j) {
  require(j.is_object() && j.contains("group") && j.contains("images"), "hom needs group, images");
  GroupPtr g = group_from_json(j["group"]);
  std::vector<int> images;
  for (const auto& v : j["images"]) {
    if (v.is_number_integer()) {
      int x = v.get<int>();
      require(x >= 0 && x < g->order(), "image index out of range");
      images.push_back(x);
    } else if (v.is_string()) {
      auto x = g->element_by_label(v.get<std::string>());
      require(x.has_value(), "unknown element label '" + v.get<std::string>() + "'");
      images.push_back(*x);
    } else {
      require(false, "images are indices or labels");
    }
  }
  require(!images.empty(), "empty image tuple");
  if (j.contains("rank"))
    require(get_int(j, "rank") == (int)images.size(), "rank disagrees with images length");
  return Hom{g, images};
}

Json table_to_json(const CharacterTable& t) {
  Json j;
  j["group"] = group_to_json(*t.group);
  Json classes = Json::array();
  for (int c = 0; c < t.group->num_classes(); ++c)
    classes.push_back(Json::array({t.group->class_rep(c), t.group->class_size(c)}));
  j["classes"] = classes;
  Json chars = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(cyclo_to_json(v));
    chars.push_back(r);
  }
  j["chars"] = chars;
  return j;
}

TablePtr table_from_json(const Json& j) {
  require(j.is_object() && j.contains("group") && j.contains("classes") && j.contains("chars"),
          "table needs group, classes, chars");
  GroupPtr g = group_from_json(j["group"]);
  int r = g->num_classes();
  // classes may be listed in any order; match them by representative
  require((int)j["classes"].size() == r, "class count mismatch");
  std::vector<int> col_of(r, -1);  // file column -> canonical class
  for (int c = 0; c < r; ++c) {
    const auto& pair = j["classes"][c];
    require(pair.is_array() && pair.size() == 2, "classes are [rep, size] pairs");
    int rep = pair[0].get<int>(), size = pair[1].get<int>();
    require(rep >= 0 && rep < g->order(), "class representative out of range");
    int cls = g->class_of(rep);
    require(g->class_size(cls) == size, "class size mismatch");
    require(col_of[c] == -1, "duplicate class column");
    for (int prev = 0; prev < c; ++prev) require(col_of[prev] != cls, "duplicate class column");
    col_of[c] = cls;
  }
  auto t = std::make_shared<CharacterTable>();
  t->group = g;
  for (const auto& row_j : j["chars"]) {
    require((int)row_j.size() == r, "character row length mismatch");
    std::vector<Cyclo> row(r);
    for (int c = 0; c < r; ++c) row[col_of[c]] = cyclo_from_json(row_j[c]);
    Cyclo deg = row[g->class_of(0)];
    check(deg.is_rational() && rat_is_integer(deg.to_rational()), Err::OrthogonalityError,
          "degree entry is not an integer");
    t->rows.push_back(std::move(row));
    t->dims.push_back((int)rat_to_ll(t->rows.back()[g->class_of(0)].to_rational()));
  }
  // canonical row order: trivial first, then by degree and class values
  int rr = (int)t->rows.size();
  std::vector<int> idx(rr);
  for (int i = 0; i < rr; ++i) idx[i] = i;
  int trivial = -1;
  for (int i = 0; i < rr; ++i) {
    bool all_one = true;
    for (int c = 0; c < r && all_one; ++c) all_one = t->rows[i][c] == Cyclo::one();
    if (all_one) trivial = i;
  }
  check(trivial >= 0, Err::OrthogonalityError, "table lacks the trivial character");
  std::sort(idx.begin(), idx.end(), [&](int i, int jj) {
    if (i == trivial || jj == trivial) return i == trivial;
    if (t->dims[i] != t->dims[jj]) return t->dims[i] < t->dims[jj];
    for (int c = 0; c < r; ++c) {
      int cmp = Cyclo::compare(t->rows[i][c], t->rows[jj][c]);
      if (cmp) return cmp < 0;
    }
    return false;
  });
  auto sorted = std::make_shared<CharacterTable>();
  sorted->group = g;
  for (int i : idx) {
    sorted->rows.push_back(std::move(t->rows[i]));
    sorted->dims.push_back(t->dims[i]);
  }
  validate_table(*sorted);
  return sorted;
}

SurfacePreset preset_from_json(const Json& j) {
  require(j.is_object() && j.contains("rank") && j.contains("autos") && j.contains("inverses") &&
              j.contains("seeds"),
          "preset needs rank, autos, inverses, seeds");
  SurfacePreset p;
  p.rank = get_int(j, "rank");
  require(j["autos"].size() == j["inverses"].size(), "autos and inverses differ in length");
  for (size_t i = 0; i < j["autos"].size(); ++i) {
    BasisAuto a;
    for (const auto& w : j["autos"][i]) a.subst.push_back(word_from_json(w));
    for (const auto& w : j["inverses"][i]) a.inverse.push_back(word_from_json(w));
    p.autos.push_back(std::move(a));
  }
  for (const auto& w : j["seeds"]) p.seeds.push_back(word_from_json(w));
  if (j.contains("peripheral"))
    for (const auto& w : j["peripheral"]) p.peripheral.push_back(word_from_json(w));
  validate_preset(p);
  return p;
}

Json preset_to_json(const SurfacePreset& p) {
  Json j;
  j["rank"] = p.rank;
  Json autos = Json::array(), invs = Json::array();
  for (const auto& a : p.autos) {
    Json s = Json::array(), si = Json::array();
    for (const auto& w : a.subst) s.push_back(word_to_json(w));
    for (const auto& w : a.inverse) si.push_back(word_to_json(w));
    autos.push_back(s);
    invs.push_back(si);
  }
  j["autos"] = autos;
  j["inverses"] = invs;
  Json seeds = Json::array();
  for (const auto& w : p.seeds) seeds.push_back(word_to_json(w));
  j["seeds"] = seeds;
  Json per = Json::array();
  for (const auto& w : p.peripheral) per.push_back(word_to_json(w));
  j["peripheral"] = per;
  return j;
}

}  // namespace primhom
