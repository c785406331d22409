#include <random>

#include "doctest.h"
#include "fgre/error.hpp"
#include "fgre/io.hpp"
#include "random_scalars.hpp"

using namespace fgre;

#ifndef FGRE_DATA_DIR
#define FGRE_DATA_DIR "data"
#endif

namespace {

std::string data(const std::string& name) { return std::string(FGRE_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("scalar and matrix encodings") {
  CHECK(rational_to_json(Rational(-3, 4)) == "-3/4");
  CHECK(rational_from_json(Json("5")) == 5);
  CHECK(rational_from_json(Json(7)) == 7);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), Error);
  const Json w = scalar_to_json(cyc_omega());
  CHECK(w.dump() == R"(["-1","0","0","0","1","0","0","0"])");
  CHECK(scalar_from_json(w) == cyc_omega());
  CHECK(scalar_from_json(Json("1/2")) == CycScalar(Rational(1, 2)));
  CHECK_THROWS_AS(scalar_from_json(Json::array({"1", "2"})), Error);
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto m = testing::random_matrix(rng, 3, 2, true);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
  }
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), Error);
}

TEST_CASE("group definition files") {
  const auto z3 = resolve_group("file:" + data("z3.json"));
  CHECK(z3->order() == 3);
  CHECK(z3->generator_names() == std::vector<std::string>{"w"});
  const auto t = resolve_group("file:" + data("2t.json"));
  CHECK(class_profile(*t) == class_profile(*builtin_group("2T")));
  const auto s4 = resolve_group("file:" + data("s4.json"));
  CHECK(s4->order() == 24);
  const auto k4 = resolve_group("file:" + data("klein4.json"));
  CHECK(k4->order() == 4);
  CHECK(k4->is_abelian());
  CHECK(k4->label(0) == "e");

  CHECK_THROWS_AS(resolve_group("builtin:Q9"), Error);
  CHECK_THROWS_AS(resolve_group("Q8"), Error);
  CHECK_THROWS_AS(resolve_group("file:/nonexistent.json"), Error);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"kind":"lie"})")), Error);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"kind":"cayley","table":[[0,1],[1,1]]})")), Error);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"kind":"quaternion","generators":[["1","1","0","0"]]})"), 50), Error);
}

TEST_CASE("group JSON round-trips byte for byte") {
  for (const auto* name : {"Q8", "2T", "Z3", "Z4", "1"}) {
    const auto g = builtin_group(name);
    const std::string first = dump_json(group_to_json(*g));
    const auto again = group_from_json(Json::parse(first));
    CHECK(dump_json(group_to_json(again)) == first);
    CHECK(class_profile(again) == class_profile(*g));
  }
  const auto s4 = resolve_group("file:" + data("s4.json"));
  const std::string first = dump_json(group_to_json(*s4));
  CHECK(dump_json(group_to_json(group_from_json(Json::parse(first)))) == first);
}

TEST_CASE("table JSON round-trips") {
  for (const auto* name : {"Q8", "2T", "Z3"}) {
    const auto g = builtin_group(name);
    const auto complex = complex_character_table(g);
    for (const auto& t : {complex, real_character_table(complex)}) {
      const std::string first = dump_json(table_to_json(t));
      const auto parsed = table_from_json(Json::parse(first), g);
      CHECK(dump_json(table_to_json(parsed)) == first);
      for (std::size_t r = 0; r < t.rows.size(); ++r) CHECK(parsed.rows[r].values == t.rows[r].values);
    }
  }
  const auto j = table_to_json(real_character_table(complex_character_table(builtin_group("2T"))));
  CHECK(j["rows"].size() == 5);
  CHECK(j["classes"].size() == 5);
  CHECK(j["rows"][3]["fs"] == -1);
}

TEST_CASE("element and rep JSON round-trips") {
  const auto g = builtin_group("2T");
  for (const auto& named : tetrahedral_idempotents(g)) {
    const std::string first = dump_json(element_to_json(named.element));
    const auto parsed = element_from_json(Json::parse(first), g);
    CHECK(parsed == named.element);
    CHECK(dump_json(element_to_json(parsed)) == first);
  }
  const auto cyc = central_idempotents(complex_character_table(g))[1];
  CHECK(cyc.ring() == Ring::kCyc);
  const std::string first = dump_json(element_to_json(cyc));
  CHECK(dump_json(element_to_json(element_from_json(Json::parse(first), g))) == first);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"ring":"int","coeffs":["1/2"]})"), builtin_group("1")), Error);

  for (const auto& name : builtin_rep_names()) {
    const auto r = builtin_rep(name);
    const std::string text = dump_json(rep_to_json(r));
    const auto parsed = rep_from_json(Json::parse(text), g);
    CHECK(parsed.generator_images() == r.generator_images());
    CHECK(dump_json(rep_to_json(parsed)) == text);
  }
}

TEST_CASE("generator set files match the built-in candidates") {
  const auto sets = f4_candidate_sets();
  const std::vector<std::string> files = {"f4_generators.json", "f4_lr_conj.json", "f4_lr_conj_bar.json"};
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto s = generator_set_from_json(read_json_file(data(files[k])));
    CHECK(s.name == sets[k].name);
    CHECK(s.generators == sets[k].generators);
    CHECK(s.expected_order == sets[k].expected_order);
    CHECK(s.blocking == sets[k].blocking);
  }
}

TEST_CASE("text renderings") {
  const auto g = builtin_group("2T");
  const std::string classes = render_class_table(*g);
  CHECK(classes.rfind("Size | Elements", 0) == 0);
  CHECK(std::count(classes.begin(), classes.end(), '\n') == 9);
  const auto complex = complex_character_table(g);
  const std::string text = render_table_text(complex);
  CHECK(text.find("ω") != std::string::npos);
  const std::string csv = render_table_csv(real_character_table(complex));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
  CHECK(csv.find("4H,4,-4,0,-2,2,-1") != std::string::npos);
}
