#include <doctest.h>
#include <json.hpp>

#include "gca/classify.hpp"
#include "gca/errors.hpp"
#include "gca/fixture_gen.hpp"
#include "gca/primtop.hpp"
#include "gca/tails.hpp"

using namespace gca;
using nlohmann::json;

namespace {

ExmClassSpec spec_from_text(const char* text) {
  return ExmClassSpec::from_json(json::parse(text));
}

}  // namespace

TEST_CASE("from_json validation") {
  CHECK_THROWS_AS(spec_from_text("{}"), InvalidSpec);
  CHECK_THROWS_AS(spec_from_text(R"({"rows":[0],"components":["a -> a x2"]})"),
                  InvalidSpec);
  CHECK_THROWS_AS(spec_from_text(R"({"rows":[1],"components":[7]})"), InvalidSpec);
  ExmClassSpec s = spec_from_text(
      R"({"rows":[1,2],"row_edges":[[["inf",2]]],"components":["a -> a x2","b -> b x2"]})");
  CHECK(s.rows == std::vector<int>{1, 2});
  REQUIRE(s.row_edges.size() == 1);
  CHECK(s.row_edges[0][0][0].is_inf());
  CHECK(s.row_edges[0][0][1] == Mult(2));
}

TEST_CASE("n=1 single-loop component") {
  ExmClassSpec s = spec_from_text(R"({"rows":[1],"components":["a -> a x2"]})");
  Graph g = gen_fixture(s);
  CHECK(g.size() == 2);
  CHECK(g.has_vertex("w1_1"));
  CHECK(g.has_vertex("g1_a"));
  auto tails = maximal_tails(g);
  REQUIRE(tails.size() == 1);
  CHECK(tails[0].vertices == g.all());
  CHECK(t1_check(g).t1);
}

TEST_CASE("n=2 chain") {
  ExmClassSpec s = spec_from_text(
      R"({"rows":[1,1],"row_edges":[[[1]]],"components":["a -> a x2","a -> a x2"]})");
  Graph g = gen_fixture(s);
  CHECK(g.size() == 4);
  auto tails = maximal_tails(g);
  REQUIRE(tails.size() == 2);
  // Antichain: neither tail contains the other.
  CHECK((tails[0].vertices & ~tails[1].vertices) != 0);
  CHECK((tails[1].vertices & ~tails[0].vertices) != 0);
  CHECK(t1_check(g).t1);
  auto rep = discreteness_report(g);
  CHECK(rep.all_isolated);
  CHECK(rep.shape == std::vector<SetKind>(2, SetKind::point));
}

TEST_CASE("n=3 with wider rows") {
  ExmClassSpec s = spec_from_text(R"({
    "rows": [1, 2, 1],
    "row_edges": [[[1, 2]], [[1], [3]]],
    "components": ["a -> a x2", "a -> b x1\nb -> a x2", "a -> a x2"]
  })");
  Graph g = gen_fixture(s);
  auto tails = maximal_tails(g);
  CHECK(tails.size() == 3);
  CHECK(t1_check(g).t1);
  CHECK(discreteness_report(g).all_isolated);
}

TEST_CASE("invalid specs") {
  // Component with a nontrivial hereditary saturated subset ({a} here).
  ExmClassSpec s = spec_from_text(R"({"rows":[1],"components":["a -> a x2\nb -> b x2"]})");
  CHECK_THROWS_AS(gen_fixture(s), InvalidSpec);
  // Component with a single loop (neither loop-free nor condition (K)).
  s = spec_from_text(R"({"rows":[1],"components":["a -> a x1"]})");
  CHECK_THROWS_AS(gen_fixture(s), InvalidSpec);
  // Missing multiplicity matrix.
  s = spec_from_text(R"({"rows":[1,1],"components":["a -> a x2","a -> a x2"]})");
  CHECK_THROWS_AS(gen_fixture(s), InvalidSpec);
  // Unreached second-row vertex.
  s = spec_from_text(
      R"({"rows":[1,2],"row_edges":[[[1,0]]],"components":["a -> a x2","a -> a x2"]})");
  CHECK_THROWS_AS(gen_fixture(s), InvalidSpec);
}
