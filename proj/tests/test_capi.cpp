// exercises the shared-library surface the CLI uses
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <string>

#include "primhom.h"

using Json = nlohmann::json;

namespace {

Json run(char* report) {
  REQUIRE(report != nullptr);
  Json j = Json::parse(std::string(report));
  ph_string_free(report);
  return j;
}

}  // namespace

TEST_CASE("group handles") {
  ph_group* g = ph_group_from_json(R"({"kind":"metacyclic","m":3,"k":8,"r":2})");
  REQUIRE(g != nullptr);
  CHECK(ph_group_order(g) == 24);
  char* hash = ph_group_hash(g);
  REQUIRE(hash != nullptr);
  CHECK(std::strlen(hash) > 0);
  ph_string_free(hash);
  char* tj = ph_group_to_json(g);
  REQUIRE(tj != nullptr);
  ph_group* g2 = ph_group_from_json(tj);  // table form round-trips
  REQUIRE(g2 != nullptr);
  CHECK(ph_group_order(g2) == 24);
  ph_string_free(tj);
  ph_group_free(g2);
  ph_group_free(g);
}

TEST_CASE("bad input sets status and message") {
  CHECK(ph_group_from_json("{not json") == nullptr);
  CHECK(ph_last_status() == PH_BAD_INPUT);
  CHECK(std::strlen(ph_last_error()) > 0);
  CHECK(ph_group_from_json(R"({"kind":"metacyclic","m":4,"k":2,"r":2})") == nullptr);
  CHECK(ph_last_status() == PH_BAD_INPUT);
  CHECK(ph_hom_from_json(R"({"group":{"kind":"abelian","moduli":[6]},"images":[9]})") == nullptr);
  CHECK(ph_last_status() == PH_BAD_INPUT);
}

TEST_CASE("prim-images and kernel-primitive reports") {
  ph_hom* h = ph_hom_from_json(R"({"group":{"kind":"abelian","moduli":[6]},"images":[2,3]})");
  REQUIRE(h != nullptr);
  Json j = run(ph_run_prim_images(h, nullptr));
  CHECK(j["kernel_primitive"] == true);
  CHECK(j["image_count"] == 6);
  Json k = run(ph_run_kernel_primitive(h, nullptr));
  CHECK(k["kernel_primitive"] == true);
  CHECK(k["witness_verified"] == true);
  ph_hom_free(h);
}

TEST_CASE("budget exhaustion reports PH_BUDGET") {
  ph_hom* h = ph_hom_from_json(
      R"({"group":{"kind":"metacyclic","m":3,"k":8,"r":2},"images":["a","b"]})");
  REQUIRE(h != nullptr);
  char* rep = ph_run_prim_images(h, R"({"state_budget": 5})");
  CHECK(rep == nullptr);
  CHECK(ph_last_status() == PH_BUDGET);
  ph_hom_free(h);
}

TEST_CASE("table compute, serialize, reload") {
  ph_group* g = ph_group_from_json(R"({"kind":"abelian","moduli":[2,2]})");
  REQUIRE(g != nullptr);
  ph_table* t = ph_table_compute(g);
  REQUIRE(t != nullptr);
  char* tj = ph_table_to_json(t);
  REQUIRE(tj != nullptr);
  ph_table* t2 = ph_table_from_json(tj);
  REQUIRE(t2 != nullptr);
  char* tj2 = ph_table_to_json(t2);
  CHECK(std::string(tj) == tj2);
  ph_string_free(tj);
  ph_string_free(tj2);
  ph_table_free(t);
  ph_table_free(t2);
  ph_group_free(g);
}

TEST_CASE("irrpr through the C API excludes a row for the order-24 group") {
  ph_hom* h = ph_hom_from_json(
      R"({"group":{"kind":"metacyclic","m":3,"k":8,"r":2},"images":["a","b"]})");
  REQUIRE(h != nullptr);
  Json j = run(ph_run_irrpr(h, nullptr, nullptr));
  CHECK(j["equals_irr"] == false);
  CHECK(j["excluded_rows"].size() > 0);
  ph_hom_free(h);
}

TEST_CASE("chevalley-weil and prim-homology reports") {
  ph_hom* h = ph_hom_from_json(R"({"group":{"kind":"abelian","moduli":[6]},"images":[2,3]})");
  REQUIRE(h != nullptr);
  Json cw = run(ph_run_chevalley_weil(h));
  CHECK(cw["cw_check"] == true);
  CHECK(cw["dim"] == 7);
  Json ph = run(ph_run_prim_homology(h, nullptr, R"({"word_budget": 16})"));
  CHECK(ph["determined"] == true);
  CHECK(ph["lower_mult"] == ph["upper_mult"]);
  ph_hom_free(h);
}

TEST_CASE("scc-images via the built-in preset") {
  ph_hom* h = ph_hom_from_json(
      R"({"group":{"kind":"metacyclic_ext","m":3,"k":4,"r":2,"conj_a":1,"conj_b":3,"sq":2},
          "images":["a","b","c"]})");
  REQUIRE(h != nullptr);
  Json j = run(ph_run_scc_images(h, nullptr, nullptr));
  CHECK(j["identity_is_scc_image"] == false);
  Json i = run(ph_run_irrscc(h, nullptr, nullptr, nullptr));
  CHECK(i["equals_irr"] == false);
  ph_hom_free(h);
}

TEST_CASE("worked-example runners") {
  Json t = run(ph_run_torus_example(3));
  CHECK(t["ok"] == true);
  Json g = run(ph_run_gamma_example());
  CHECK(g["ok"] == true);
  Json s = run(ph_run_sphere_search(24, 2, nullptr));
  CHECK(s["failure_count"].get<int>() > 0);
}

TEST_CASE("version string") {
  CHECK(std::string(ph_version()).find("primhom") != std::string::npos);
}
