#include <doctest.h>

#include <random>

#include "glr/diagram.hpp"
#include "oracles.hpp"

using namespace glr;

namespace {
  // Random valid word: grows for a while, then closes every strand.
  std::vector<Event> random_word(std::mt19937_64& rng, int steps) {
    std::vector<Event> w;
    int                k = 0;
    auto pick = [&rng](int hi) { return std::uniform_int_distribution<int>(1, hi)(rng); };
    for (int s = 0; s < steps || k > 0; ++s) {
      int const choice = std::uniform_int_distribution<int>(0, 2)(rng);
      bool const closing = s >= steps;
      if (k == 0 || (choice == 0 && !closing && k < 8)) {
        w.push_back(L(pick(k + 1)));
        k += 2;
      } else if (choice == 1 && k >= 2) {
        w.push_back(X(pick(k - 1)));
      } else {
        w.push_back(R(pick(k - 1)));
        k -= 2;
      }
    }
    return w;
  }

  std::vector<int> random_orientation(std::mt19937_64& rng, std::size_t components) {
    std::vector<int> o;
    for (std::size_t i = 0; i < components; ++i) o.push_back(rng() % 2 ? 1 : -1);
    return o;
  }

  void check_against_oracle(FrontDiagram const& d) {
    auto const t   = oracle::trace(d.events(), d.orientation());
    auto const inv = classical_invariants(d);
    CHECK(d.components() == t.components);
    CHECK(d.strands().segments.size() == t.segments);
    CHECK(inv.writhe == t.writhe);
    CHECK(inv.tb == oracle::tb(t));
    CHECK(inv.rotation == oracle::rotation(t));
  }
}  // namespace

TEST_CASE("parse and write fronts") {
  auto const d = parse_diagram("# unknot\nfront: L1 R1\norient: +\n");
  CHECK(d.events() == std::vector<Event>{L(1), R(1)});
  CHECK(parse_diagram(write_diagram(d)) == d);
  auto const t = parse_diagram("front: L1 L3 X2 X2 X2 R3 R1\norient: +");
  CHECK(t.events().size() == 7);
  CHECK_THROWS_AS(parse_diagram("front: L1 R2\n"), FormatError);
  CHECK_THROWS_AS(parse_diagram("front: L1 Q1 R1\n"), FormatError);
  CHECK_THROWS_AS(parse_diagram("front: L1\n"), FormatError);
  CHECK_THROWS_AS(parse_diagram("front: L1 R1\norient: + +\n"), FormatError);
  CHECK_THROWS_AS(parse_diagram("orient: +\n"), FormatError);
  CHECK(first_invalid_event({L(1), R(2)}) == 1);
  CHECK(first_invalid_event({L(1)}) == 1);
  CHECK(first_invalid_event({L(1), X(1), R(1)}) == -1);
}

TEST_CASE("trace counts") {
  CHECK(FrontDiagram({L(1), R(1)}).strands().segments.size() == 2);
  CHECK(FrontDiagram({L(1), R(1)}).components() == 1);
  auto const tre = standard_diagram("trefoil");
  CHECK(tre.strands().segments.size() == 10);
  CHECK(tre.components() == 1);
  CHECK(FrontDiagram({L(1), R(1), L(1), R(1)}).components() == 2);
}

TEST_CASE("cusp classification") {
  auto const cusps = classify_cusps(FrontDiagram({L(1), R(1)}));
  REQUIRE(cusps.size() == 2);
  CHECK(cusps[0].event == 0);
  CHECK(cusps[0].type == CuspType::down);
  CHECK(cusps[1].type == CuspType::up);
  auto count = [](FrontDiagram const& d, CuspType k) {
    std::size_t c = 0;
    for (auto const& x : classify_cusps(d)) c += x.type == k;
    return c;
  };
  auto const u13 = standard_diagram("U(1,3)");
  CHECK(count(u13, CuspType::up) == 3);
  CHECK(count(u13, CuspType::down) == 1);
  auto const tre = standard_diagram("trefoil");
  CHECK(count(tre, CuspType::up) == 2);
  CHECK(count(tre, CuspType::down) == 2);
  auto const flipped = FrontDiagram(u13.events(), {-1});
  CHECK(count(flipped, CuspType::up) == 1);
  CHECK(count(flipped, CuspType::down) == 3);
}

TEST_CASE("crossing signs and classical invariants") {
  auto const tre = standard_diagram("trefoil");
  CHECK(crossing_signs(tre) == std::vector<int>{1, 1, 1});
  CHECK(crossing_signs(FrontDiagram({L(1), L(2), X(1), R(2), R(1)})) == std::vector<int>{1});
  CHECK(classical_invariants(FrontDiagram({L(1), R(1)})) == ClassicalInvariants{0, -1, 0});
  CHECK(classical_invariants(standard_diagram("U(1,3)")) == ClassicalInvariants{0, -2, -1});
  CHECK(classical_invariants(tre) == ClassicalInvariants{3, 1, 0});
  // two components both reversed keep their signs
  FrontDiagram two({L(1), L(3), X(2), X(2), R(3), R(1)});
  REQUIRE(two.components() == 2);
  CHECK(crossing_signs(FrontDiagram(two.events(), {-1, -1})) == crossing_signs(two));
  CHECK(crossing_signs(FrontDiagram(two.events(), {1, -1}))
        == std::vector<int>{-crossing_signs(two)[0], -crossing_signs(two)[1]});
}

TEST_CASE("standard diagrams") {
  CHECK(standard_diagram("U(1,1)").events() == std::vector<Event>{L(1), R(1)});
  for (int m = 1; m <= 4; ++m) {
    auto const a = classical_invariants(standard_diagram(StandardKnot::unknot_one_chain, m));
    CHECK(a.tb == -m);
    CHECK(a.rotation == 1 - m);
  }
  auto const u22 = standard_diagram("U(2,2)");
  CHECK(classify_cusps(u22).size() == 4);
  CHECK(classical_invariants(u22).rotation == 0);
  CHECK_THROWS(standard_diagram("U(1,2)"));
  CHECK_THROWS(standard_diagram("figure-eight"));
}

TEST_CASE("library trace agrees with the oracle tracer on random words") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto const w = random_word(rng, 4 + static_cast<int>(rng() % 10));
    FrontDiagram plain(w);
    FrontDiagram d(w, random_orientation(rng, plain.components()));
    check_against_oracle(d);
    auto const t = oracle::trace(d.events(), d.orientation());
    CHECK(t.dir.size() == d.strands().segments.size());
    for (std::size_t s = 0; s < t.dir.size(); ++s) {
      CHECK((t.dir[s] > 0) == d.strands().segments[s].rightward);
    }
  }
}

TEST_CASE("LR1a insertion example and its inverse") {
  FrontDiagram const u({L(1), R(1)});
  auto const         ins = apply_move(u, {MoveKind::LR1a, 1, MoveDirection::forward, 1, 0});
  CHECK(ins.events() == std::vector<Event>{L(1), L(2), X(1), R(2), R(1)});
  CHECK(classical_invariants(ins).tb == -1);
  auto const back = apply_move(ins, {MoveKind::LR1a, 1, MoveDirection::backward, 1, 0});
  CHECK(back == u);
  CHECK_THROWS_AS(apply_move(u, {MoveKind::LR3, 0}), MoveNotApplicable);
}

TEST_CASE("every applicable move preserves components, tb and r") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    auto const w = random_word(rng, 3 + static_cast<int>(rng() % 6));
    FrontDiagram plain(w);
    FrontDiagram d(w, random_orientation(rng, plain.components()));
    auto const before = classical_invariants(d);
    for (auto const& mv : applicable_moves(d, true)) {
      auto const e = apply_move(d, mv);
      CAPTURE(to_string(d.events()));
      CAPTURE(to_string(mv));
      CHECK(e.components() == d.components());
      auto const after = classical_invariants(e);
      CHECK(after.tb == before.tb);
      CHECK(after.rotation == before.rotation);
      check_against_oracle(e);
    }
  }
}

TEST_CASE("random_moves is seeded and invariant") {
  auto const tre = standard_diagram("trefoil");
  CHECK(random_moves(tre, 0, 3) == tre);
  auto const a = random_moves(tre, 50, 7);
  CHECK(a == random_moves(tre, 50, 7));
  CHECK(classical_invariants(a).tb == 1);
  CHECK(classical_invariants(a).rotation == 0);
  CHECK(a.components() == 1);
}

TEST_CASE("stabilization lowers tb by one") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    FrontDiagram d(random_word(rng, 4));
    auto const   before = classical_invariants(d);
    auto const   s      = stabilize(d, 1, 1, rng() % 2 == 0);
    auto const   after  = classical_invariants(s);
    CHECK(after.tb == before.tb - 1);
    CHECK(std::abs(after.rotation - before.rotation) == 1);
  }
}
