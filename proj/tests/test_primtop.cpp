#include <random>

#include <doctest.h>

#include "fixtures.hpp"
#include "gca/errors.hpp"
#include "gca/primtop.hpp"
#include "naive.hpp"

using namespace gca;

namespace {

PrimSubset gamma_singleton(VMask m) {
  PrimSubset s;
  s.gamma = {m};
  return s;
}

PrimSubset tau_part(VMask m, CircleSet c) {
  PrimSubset s;
  s.tau[m] = std::move(c);
  return s;
}

}  // namespace

TEST_CASE("Angle") {
  CHECK(Angle::make(2, 8) == Angle::make(1, 4));
  CHECK(Angle::make(5, 4) == Angle::make(1, 4));
  CHECK(Angle::make(-1, 4) == Angle::make(3, 4));
  CHECK(Angle::make(0, 7).str() == "0");
  CHECK(Angle::make(1, 3).str() == "1/3");
  CHECK(Angle::parse("3/6") == Angle::make(1, 2));
  CHECK(Angle::parse("0") == Angle{});
  CHECK(Angle::make(1, 4) < Angle::make(1, 3));
}

TEST_CASE("CircleSet") {
  CircleSet a = CircleSet::finite({Angle::make(1, 2), Angle::make(0, 1)});
  CircleSet b = CircleSet::finite({Angle::make(1, 2)});
  CHECK(b.subset_of(a));
  CHECK_FALSE(a.subset_of(b));
  CHECK(a.subset_of(CircleSet::full()));
  CHECK(CircleSet::empty().subset_of(b));
  CHECK(a.unite(b) == a);
  CHECK(a.unite(CircleSet::full()) == CircleSet::full());
  CHECK(CircleSet::finite({}) == CircleSet::empty());
  CHECK(CircleSet::finite({Angle::make(1, 2), Angle::make(1, 2)}).angles().size() == 1);
}

TEST_CASE("prim_space on fixtures") {
  Graph bv = fx::parse(fx::kBv);
  PrimSubset sp = prim_space(bv);
  REQUIRE(sp.gamma.size() == 1);
  CHECK(sp.gamma[0] == fx::verts(bv, {"a", "v"}));
  CHECK(sp.bv == fx::verts(bv, {"v"}));
  REQUIRE(sp.tau.size() == 1);
  CHECK(sp.tau.begin()->first == fx::verts(bv, {"v"}));
  CHECK(sp.tau.begin()->second.is_full());

  Graph fork = fx::parse(fx::kFork);
  sp = prim_space(fork);
  CHECK(sp.gamma.size() == 2);
  CHECK(sp.bv == 0);
  CHECK(sp.tau.empty());
}

TEST_CASE("closure rejects invalid subsets") {
  Graph fork = fx::parse(fx::kFork);
  CHECK_THROWS_AS(closure(fork, gamma_singleton(fx::verts(fork, {"b"}))), InvalidSubset);
  PrimSubset s;
  s.bv = fx::verts(fork, {"a"});
  CHECK_THROWS_AS(closure(fork, s), InvalidSubset);
  Graph bv = fx::parse(fx::kBv);
  CHECK_THROWS_AS(closure(bv, tau_part(fx::verts(bv, {"a", "v"}), CircleSet::full())),
                  InvalidSubset);
}

TEST_CASE("closure on FX_BV") {
  Graph g = fx::parse(fx::kBv);
  VMask Mg = fx::verts(g, {"a", "v"});
  VMask Mt = fx::verts(g, {"v"});

  // Singleton gamma point: its ideal is zero, so the closure is everything.
  PrimSubset gs = gamma_singleton(Mg);
  CHECK(closure(g, gs) == prim_space(g));
  CHECK_FALSE(is_closed(g, gs));

  // Singleton breaking vertex: closure adds the full circle of the tau tail
  // below it, but not the gamma point.
  PrimSubset bs;
  bs.bv = Mt;
  PrimSubset cl = closure(g, bs);
  CHECK(cl.bv == Mt);
  CHECK(cl.gamma.empty());
  CHECK(cl.tau.at(Mt).is_full());
  CHECK_FALSE(is_closed(g, bs));

  // A single tau circle point is closed: nothing sits above its ideal.
  PrimSubset ts = tau_part(Mt, CircleSet::finite({Angle::make(1, 3)}));
  CHECK(closure(g, ts) == ts);

  // The full tau circle is closed but not clopen (its complement's closure
  // meets it again through the breaking vertex).
  PrimSubset fs = tau_part(Mt, CircleSet::full());
  CHECK(is_closed(g, fs));
  CHECK_FALSE(is_clopen(g, fs));

  // The whole space is closed.
  CHECK(is_closed(g, prim_space(g)));
}

TEST_CASE("closure on FX_TAU") {
  Graph g = fx::parse(fx::kTau);
  VMask Mt = fx::verts(g, {"a"});
  VMask Mg = fx::verts(g, {"a", "b"});

  // The gamma singleton is not closed: infinitely many edges from b into a.
  PrimSubset gs = gamma_singleton(Mg);
  PrimSubset cl = closure(g, gs);
  CHECK(cl.gamma == std::vector<VMask>{Mg});
  REQUIRE(cl.tau.size() == 1);
  CHECK(cl.tau.at(Mt).is_full());
  CHECK_FALSE(is_closed(g, gs));

  // A tau circle point is closed here (nothing lies above the tau tail's z).
  PrimSubset ts = tau_part(Mt, CircleSet::finite({Angle{}}));
  CHECK(closure(g, ts) == ts);
}

TEST_CASE("closure on FX_2TAU") {
  Graph g = fx::parse(fx::k2Tau);
  VMask Ma = fx::verts(g, {"a"});
  VMask Mb = fx::verts(g, {"a", "b"});

  // The inner tail {a} sits below {a,b}, so closing a point of the outer
  // tail pulls in the inner tail's full circle; inner-tail points are closed.
  PrimSubset o = tau_part(Mb, CircleSet::finite({Angle::make(1, 2)}));
  PrimSubset cl = closure(g, o);
  CHECK(cl.tau.at(Mb) == CircleSet::finite({Angle::make(1, 2)}));
  REQUIRE(cl.tau.count(Ma) == 1);
  CHECK(cl.tau.at(Ma).is_full());
  CHECK(cl.gamma.empty());

  PrimSubset s = tau_part(Ma, CircleSet::finite({Angle{}}));
  CHECK(closure(g, s) == s);
  CHECK(is_closed(g, prim_space(g)));
}

TEST_CASE("is_clopen and UnrepresentableComplement") {
  Graph fork = fx::parse(fx::kFork);
  auto sp = prim_space(fork);
  CHECK(is_clopen(fork, sp));
  PrimSubset empty;
  CHECK(is_clopen(fork, empty));
  CHECK(is_clopen(fork, gamma_singleton(sp.gamma[0])));

  Graph bv = fx::parse(fx::kBv);
  PrimSubset ts = tau_part(fx::verts(bv, {"v"}), CircleSet::finite({Angle{}}));
  CHECK_THROWS_AS(is_clopen(bv, ts), UnrepresentableComplement);
}

TEST_CASE("t1_check on fixtures") {
  struct Row { const char* text; bool t1; };
  const Row rows[] = {
      {fx::kPoint, true},    {fx::kLoop1, true},  {fx::kLoop2, true},
      {fx::kLine, true},     {fx::kBv, false},    {fx::kTau, false},
      {fx::k2Tau, false},    {fx::kInfSink, false}, {fx::kFork, true},
      {fx::kMixed, true},    {fx::kLadder3, true},
  };
  for (const Row& r : rows) {
    Graph g = fx::parse(r.text);
    CAPTURE(r.text);
    CHECK(t1_check(g).t1 == r.t1);
  }
}

TEST_CASE("t1 witnesses") {
  Graph bv = fx::parse(fx::kBv);
  auto verdict = t1_check(bv);
  REQUIRE_FALSE(verdict.t1);
  REQUIRE(verdict.witnesses.size() >= 1);
  const T1Witness& w = verdict.witnesses[0];
  CHECK(w.kind == T1Witness::Kind::breaking_vertex);
  CHECK(bv.name(w.vertex) == "v");

  Graph is = fx::parse(fx::kInfSink);
  verdict = t1_check(is);
  REQUIRE_FALSE(verdict.t1);
  REQUIRE(verdict.witnesses.size() == 1);
  CHECK(verdict.witnesses[0].kind == T1Witness::Kind::tail_pair);
  CHECK(verdict.witnesses[0].m == fx::verts(is, {"w"}));
  CHECK(verdict.witnesses[0].n == fx::verts(is, {"s", "w"}));
  CHECK(verdict.witnesses[0].reason == T1Witness::Reason::infinite_edge_count);

  Graph t2 = fx::parse(fx::k2Tau);
  verdict = t1_check(t2);
  REQUIRE_FALSE(verdict.t1);
  REQUIRE(verdict.witnesses.size() == 1);
  CHECK(verdict.witnesses[0].kind == T1Witness::Kind::tail_pair);
  CHECK(verdict.witnesses[0].m == fx::verts(t2, {"a"}));
  CHECK(verdict.witnesses[0].n == fx::verts(t2, {"a", "b"}));
}

TEST_CASE("three t1 deciders agree on fixtures") {
  for (const auto& [name, text] : fx::all()) {
    Graph g = Graph::parse(text);
    CAPTURE(name);
    bool direct = t1_check(g).t1;
    CHECK(t1_check_via_lattice(g) == direct);
    CHECK(t1_check_via_closure(g) == direct);
  }
}

TEST_CASE("property: three t1 deciders agree on random graphs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = naive::random_graph(rng, 5);
    bool direct = t1_check(g).t1;
    CHECK(t1_check_via_lattice(g) == direct);
    CHECK(t1_check_via_closure(g) == direct);
  }
}

TEST_CASE("property: Kuratowski axioms on random subsets") {
  std::mt19937 rng(32);
  int done = 0;
  while (done < 200) {
    Graph g = naive::random_graph(rng, 5);
    PrimSubset sp = prim_space(g);
    PrimSubset s = naive::random_prim_subset(rng, sp);
    PrimSubset t = naive::random_prim_subset(rng, sp);
    PrimSubset cs = closure(g, s);
    CHECK(s.subset_of(cs));                        // extensive
    CHECK(closure(g, cs) == cs);                   // idempotent
    CHECK(closure(g, s.unite(t)) == cs.unite(closure(g, t)));  // additive
    CHECK(closure(g, PrimSubset{}) == PrimSubset{});
    ++done;
  }
}

TEST_CASE("property: closure matches the ideal-order oracle under condition (K)") {
  std::mt19937 rng(33);
  int done = 0;
  while (done < 150) {
    Graph g = naive::random_graph(rng, 5);
    if (!g.condition_k()) continue;
    PrimSubset sp = prim_space(g);
    PrimSubset s = naive::random_prim_subset(rng, sp);
    CHECK(closure(g, s) == closure_oracle_condition_k(g, s));
    ++done;
  }
}

TEST_CASE("closure_oracle requires condition (K)") {
  Graph tau = fx::parse(fx::kTau);
  CHECK_THROWS_AS(closure_oracle_condition_k(tau, PrimSubset{}), ConditionKRequired);
}
