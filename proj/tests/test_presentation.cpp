#include <doctest.h>

#include <random>

#include "glr/presentation.hpp"
#include "oracles.hpp"

using namespace glr;

namespace {
  GLWord random_word(std::mt19937_64& rng, std::size_t gens, int depth) {
    int const pick = depth <= 0 ? 0 : static_cast<int>(rng() % 5);
    switch (pick) {
      case 0: return GLWord::gen(rng() % gens);
      case 1: return GLWord::up(random_word(rng, gens, depth - 1));
      case 2: return GLWord::down(random_word(rng, gens, depth - 1));
      default:
        return GLWord::op(random_word(rng, gens, depth - 1), random_word(rng, gens, depth - 1),
                          rng() % 2 ? 1 : -1);
    }
  }

  std::vector<Event> random_front(std::mt19937_64& rng, int steps) {
    std::vector<Event> w;
    int                k = 0;
    for (int s = 0; s < steps || k > 0; ++s) {
      auto lvl = [&rng](int hi) { return 1 + static_cast<int>(rng() % static_cast<unsigned>(hi)); };
      int const c = static_cast<int>(rng() % 3);
      if (k == 0 || (c == 0 && s < steps && k < 6)) {
        w.push_back(L(lvl(k + 1)));
        k += 2;
      } else if (c == 1 && k >= 2) {
        w.push_back(X(lvl(k - 1)));
      } else {
        w.push_back(R(lvl(k - 1)));
        k -= 2;
      }
    }
    return w;
  }

  FiniteGLRack z4_rack() {
    return FiniteGLRack(permutation_rack({2, 3, 0, 1}), {1, 2, 3, 0}, {1, 2, 3, 0});
  }
}  // namespace

TEST_CASE("normal form rewriting examples") {
  auto x = GLWord::gen(0), y = GLWord::gen(1);
  CHECK(normal_form(GLWord::op(x, GLWord::up(y))) == GLWord::op(x, y));
  CHECK(normal_form(GLWord::op(GLWord::up(x), GLWord::down(y)))
        == GLWord::up(GLWord::op(x, y)));
  CHECK(normal_form(GLWord::up(GLWord::down(GLWord::op(x, x)))) == x);
  CHECK(normal_form(GLWord::op(GLWord::op(x, y), y, -1)) == x);
  CHECK(GLWord::op(x, GLWord::op(y, x), -1).to_string() == "x0 / (x1 * x0)");
}

TEST_CASE("normal form preserves values in every small GL-rack") {
  std::mt19937_64 rng(23);
  auto const      racks = oracle::gl_racks_up_to(3);
  for (int i = 0; i < 400; ++i) {
    auto const w  = random_word(rng, 3, 4);
    auto const nf = normal_form(w);
    CHECK(normal_form(nf) == nf);
    for (int j = 0; j < 5; ++j) {
      auto const&          r = racks[rng() % racks.size()];
      std::vector<Element> a(3);
      for (auto& v : a) v = rng() % r.size();
      CAPTURE(w.to_string());
      CHECK(evaluate_word(w, r, a) == evaluate_word(nf, r, a));
    }
  }
  CHECK_THROWS_AS(evaluate_word(GLWord::gen(4), z4_rack(), {0}), DomainError);
}

TEST_CASE("presentation of the trefoil") {
  auto const p = gl_presentation(standard_diagram("trefoil"));
  CHECK(p.generators == 10);
  CHECK(p.relations.size() == 3 * 2 + 4);
  auto const q = underlying_quandle_presentation(p);
  CHECK(q.generators == 3);
  CHECK(q.relations.size() == 3);
  CHECK(p.to_string().rfind("gens: x0 x1", 0) == 0);
}

TEST_CASE("colorings agree with the oracle on random fronts") {
  std::mt19937_64 rng(41);
  auto const      racks = oracle::gl_racks_up_to(3);
  for (int i = 0; i < 150; ++i) {
    FrontDiagram plain(random_front(rng, 3 + static_cast<int>(rng() % 6)));
    std::vector<int> orient;
    for (std::size_t c = 0; c < plain.components(); ++c) orient.push_back(rng() % 2 ? 1 : -1);
    FrontDiagram const d(plain.events(), orient);
    auto const&        r    = racks[rng() % racks.size()];
    auto const         want = oracle::colorings(oracle::trace(d.events(), orient), r);
    CAPTURE(to_string(d.events()));
    CHECK(count_colorings(d, r) == want.size());
    auto const listed = list_colorings(d, r);
    CHECK(listed == want);
    auto const p = gl_presentation(d);
    for (auto const& c : listed) {
      for (auto const& rel : p.relations) {
        CHECK(evaluate_word(rel.lhs, r, c) == evaluate_word(rel.rhs, r, c));
      }
    }
  }
}

TEST_CASE("coloring counts separate the unknots") {
  auto const z4 = z4_rack();
  CHECK(count_colorings(standard_diagram("U(1,1)"), z4) == 0);
  CHECK(count_colorings(standard_diagram("U(1,3)"), z4) == 4);
  auto const z9 = FiniteGLRack(permutation_rack({3, 4, 5, 6, 7, 8, 0, 1, 2}),
                               {1, 2, 3, 4, 5, 6, 7, 8, 0}, {5, 6, 7, 8, 0, 1, 2, 3, 4});
  CHECK(count_colorings(standard_diagram("U(3,3)"), z9) == 9);
  CHECK(count_colorings(standard_diagram("U(1,5)"), z9) == 0);
  CHECK(coloring_profile(standard_diagram("trefoil"), {trivial_gl_rack(dihedral_quandle(3))})
        == std::vector<std::uint64_t>{9});
}

TEST_CASE("group words reduce") {
  CHECK(free_reduce({{0, 1}, {1, 1}, {1, -1}, {0, -1}}).empty());
  CHECK(cyclic_reduce({{0, 1}, {1, 1}, {0, -1}}) == GroupWord{{1, 1}});
}

TEST_CASE("enveloping groups") {
  GroupPresentation ab{{"a", "b"}, {{{0, 1}, {1, -1}}}};
  auto const        c = collapse_ud(ab);
  CHECK(c.generators.size() == 1);
  CHECK(c.relators.empty());
  GroupPresentation chain{{"a", "b", "c"}, {{{0, 1}, {1, -1}}, {{1, 1}, {2, -1}}}};
  CHECK(collapse_ud(chain).generators.size() == 1);
  for (int m = 1; m <= 4; ++m) {
    auto const d = standard_diagram(StandardKnot::unknot_one_chain, m);
    auto const g = abelianization(collapse_ud(env_of_presentation(gl_presentation(d))));
    CHECK(g == AbGroupInvariants{1, {}});
  }
  FiniteGLRack flip(trivial_rack(2), {1, 0}, {1, 0});
  CHECK(abelianization(collapse_ud(env_of_gl_rack(flip))).free_rank == 1);
  CHECK(abelianization(collapse_ud(env_of_gl_rack(trivial_gl_rack(trivial_rack(2))))).free_rank
        == 2);
  auto const tre = collapse_ud(env_of_presentation(gl_presentation(standard_diagram("trefoil"))));
  CHECK(tre.generators.size() == 3);
  CHECK(abelianization(tre) == AbGroupInvariants{1, {}});
}
