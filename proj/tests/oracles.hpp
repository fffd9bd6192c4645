#pragma once

// Independent reference implementations used to check the library. They are
// written from the definitions and share only plain data types and the
// Smith normal form with the code under test.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "glr/algebra.hpp"
#include "glr/diagram.hpp"
#include "glr/smith.hpp"

namespace oracle {

  using glr::Element;
  using glr::Permutation;
  using glr::Table;
  using I64 = std::int64_t;

  inline std::vector<Permutation> all_permutations(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  inline bool is_rack(Table const& t) {
    std::size_t const n = t.size();
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<bool> hit(n, false);
      for (std::size_t x = 0; x < n; ++x) {
        hit[t[x][y]] = true;
      }
      if (std::count(hit.begin(), hit.end(), true) != static_cast<long>(n)) {
        return false;
      }
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (t[t[x][y]][z] != t[t[x][z]][t[y][z]]) return false;
    return true;
  }

  // (L1)-(L3') read off the definition.
  inline bool is_gl(Table const& t, Permutation const& u, Permutation const& d) {
    std::size_t const n = t.size();
    for (std::size_t x = 0; x < n; ++x) {
      if (u[d[t[x][x]]] != x || d[u[t[x][x]]] != x) return false;
      for (std::size_t y = 0; y < n; ++y) {
        if (u[t[x][y]] != t[u[x]][y] || d[t[x][y]] != t[d[x]][y]) return false;
        if (t[x][u[y]] != t[x][y] || t[x][d[y]] != t[x][y]) return false;
      }
    }
    return true;
  }

  inline std::vector<std::pair<Permutation, Permutation>> gl_pairs(Table const& t,
                                                                  bool u_equals_d = false) {
    std::vector<std::pair<Permutation, Permutation>> out;
    auto const perms = all_permutations(t.size());
    for (auto const& u : perms)
      for (auto const& d : perms)
        if ((!u_equals_d || u == d) && is_gl(t, u, d)) out.emplace_back(u, d);
    return out;
  }

  // ---- fronts -------------------------------------------------------------

  struct Relation {
    enum Kind { crossing, cusp } kind;
    int sign = 1;  // crossing sign
    bool up = false;
    std::size_t in = 0, out = 0, over = 0;  // segment ids
  };

  struct Traced {
    std::size_t           segments = 0;
    std::size_t           components = 0;
    std::vector<int>      dir;  // +1 rightward, -1 leftward
    std::vector<Relation> relations;
    int                   writhe = 0;
    int                   up = 0, down = 0;
  };

  // Traces the word with a plain list of open strands per level.
  inline Traced trace(std::vector<glr::Event> const& events, std::vector<int> orient = {}) {
    struct End {
      std::size_t event;
      int         slot;
    };
    std::vector<End> left, right;
    std::vector<std::array<std::size_t, 2>> in(events.size()), out(events.size());
    std::vector<std::size_t> open;
    auto fresh = [&](std::size_t j, int slot) {
      left.push_back({j, slot});
      right.push_back({0, -1});
      return left.size() - 1;
    };
    for (std::size_t j = 0; j < events.size(); ++j) {
      auto const   e = events[j];
      auto const   p = static_cast<std::size_t>(e.level - 1);
      if (e.kind == glr::EventKind::left_cusp) {
        auto a = fresh(j, 0);
        auto b = fresh(j, 1);
        out[j] = {a, b};
        open.insert(open.begin() + static_cast<long>(p), {a, b});
        continue;
      }
      in[j]            = {open[p], open[p + 1]};
      right[open[p]]     = {j, 0};
      right[open[p + 1]] = {j, 1};
      if (e.kind == glr::EventKind::right_cusp) {
        open.erase(open.begin() + static_cast<long>(p), open.begin() + static_cast<long>(p) + 2);
      } else {
        auto a = fresh(j, 0);
        auto b = fresh(j, 1);
        out[j]       = {a, b};
        open[p]      = a;
        open[p + 1]  = b;
      }
    }
    Traced t;
    t.segments = left.size();
    t.dir.assign(t.segments, 0);
    for (std::size_t s = 0; s < t.segments; ++s) {
      if (t.dir[s] != 0) continue;
      int const o = t.components < orient.size() ? orient[t.components] : 1;
      ++t.components;
      std::size_t cur = s;
      int         dir = o;
      do {
        t.dir[cur] = dir;
        End const   end  = dir > 0 ? right[cur] : left[cur];
        auto const  kind = events[end.event].kind;
        auto const  slot = static_cast<std::size_t>(1 - end.slot);
        if (kind == glr::EventKind::crossing) {
          cur = dir > 0 ? out[end.event][slot] : in[end.event][slot];
        } else {
          cur = dir > 0 ? in[end.event][slot] : out[end.event][slot];
          dir = -dir;
        }
      } while (cur != s);
    }
    for (std::size_t j = 0; j < events.size(); ++j) {
      Relation r{};
      if (events[j].kind == glr::EventKind::crossing) {
        // over: in[1] -> out[0] descending; under: in[0] -> out[1] ascending
        int const ox = t.dir[in[j][1]], ux = t.dir[in[j][0]];
        // det((ox, -ox), (ux, ux)) = 2 ox ux
        r.kind = Relation::crossing;
        r.sign = ox * ux;
        r.over = in[j][1];
        r.in   = ux > 0 ? in[j][0] : out[j][1];
        r.out  = ux > 0 ? out[j][1] : in[j][0];
        t.writhe += r.sign;
        t.relations.push_back(r);
        // the over strand keeps its color
        Relation same{};
        same.kind = Relation::crossing;
        same.sign = 0;
        same.in   = in[j][1];
        same.out  = out[j][0];
        t.relations.push_back(same);
      } else {
        auto const& br = events[j].kind == glr::EventKind::left_cusp ? out[j] : in[j];
        // the flow arrives on the branch pointing into the cusp
        bool const lower_in = events[j].kind == glr::EventKind::left_cusp
                                  ? t.dir[br[0]] < 0
                                  : t.dir[br[0]] > 0;
        r.kind = Relation::cusp;
        r.in   = lower_in ? br[0] : br[1];
        r.out  = lower_in ? br[1] : br[0];
        r.up   = lower_in;
        (r.up ? t.up : t.down) += 1;
        t.relations.push_back(r);
      }
    }
    return t;
  }

  inline int tb(Traced const& t) {
    return t.writhe - (t.up + t.down) / 2;
  }
  inline int rotation(Traced const& t) {
    return (t.down - t.up) / 2;
  }

  // Every coloring by backtracking over segments in id order.
  inline std::vector<std::vector<Element>> colorings(Traced const& t,
                                                     glr::FiniteGLRack const& r) {
    std::vector<std::vector<Relation const*>> due(t.segments);
    for (auto const& rel : t.relations) {
      due[std::max({rel.in, rel.out, rel.kind == Relation::crossing && rel.sign != 0
                                             ? rel.over
                                             : std::size_t{0}})]
          .push_back(&rel);
    }
    std::vector<Element>              c(t.segments);
    std::vector<std::vector<Element>> out;
    auto holds = [&](Relation const& rel) {
      if (rel.kind == Relation::cusp) {
        return c[rel.out] == (rel.up ? r.up(c[rel.in]) : r.down(c[rel.in]));
      }
      if (rel.sign == 0) return c[rel.out] == c[rel.in];
      return c[rel.out] == r.op(c[rel.in], c[rel.over], rel.sign);
    };
    std::function<void(std::size_t)> rec = [&](std::size_t s) {
      if (s == t.segments) {
        out.push_back(c);
        return;
      }
      for (Element x = 0; x < r.size(); ++x) {
        c[s] = x;
        bool ok = true;
        for (auto const* rel : due[s]) ok = ok && holds(*rel);
        if (ok) rec(s + 1);
      }
    };
    rec(0);
    return out;
  }

  // exponent -> multiplicity. phi is indexed phi[x * n + y].
  inline std::map<I64, std::uint64_t> state_sum(Traced const& t, glr::FiniteGLRack const& r,
                                                std::vector<I64> const& phi, I64 m) {
    std::map<I64, std::uint64_t> sum;
    auto const                   n = r.size();
    for (auto const& c : colorings(t, r)) {
      I64 e = 0;
      for (auto const& rel : t.relations) {
        if (rel.kind != Relation::crossing || rel.sign == 0) continue;
        e += rel.sign > 0 ? phi[c[rel.in] * n + c[rel.over]] : -phi[c[rel.out] * n + c[rel.over]];
      }
      ++sum[((e % m) + m) % m];
    }
    return sum;
  }

  // Classical state sum of the closure of the 2-strand braid s1^k, every
  // crossing positive: colors (x, y) become (y, x * y), weight phi(x, y).
  inline std::map<I64, std::uint64_t> cjkls_torus_2k(glr::FiniteRack const& q, int k,
                                                     std::vector<I64> const& phi, I64 m) {
    std::map<I64, std::uint64_t> sum;
    auto const                   n = q.size();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element x = a, y = b;
        I64     e = 0;
        for (int i = 0; i < k; ++i) {
          e += phi[x * n + y];
          Element const nx = y, ny = q.op(x, y);
          x = nx;
          y = ny;
        }
        if (x == a && y == b) ++sum[e % m];
      }
    }
    return sum;
  }

  // ---- homology -----------------------------------------------------------

  inline std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
  }

  inline std::vector<Element> tuple_of(std::size_t idx, std::size_t n, std::size_t k) {
    std::vector<Element> t(k);
    for (std::size_t i = k; i-- > 0;) {
      t[i] = idx % n;
      idx /= n;
    }
    return t;
  }

  inline std::size_t index_of(std::vector<Element> const& t, std::size_t n) {
    std::size_t idx = 0;
    for (auto x : t) idx = idx * n + x;
    return idx;
  }

  // Full rack boundary C_k -> C_{k-1} on all tuples; columns are tuples.
  inline glr::IntMatrix rack_boundary(glr::FiniteRack const& q, std::size_t k) {
    auto const     n = q.size();
    glr::IntMatrix m(k >= 1 ? ipow(n, k - 1) : 0, ipow(n, k));
    if (k <= 1) return m;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto const t = tuple_of(c, n, k);
      for (std::size_t i = 0; i < k; ++i) {
        I64 const            s = (i + 1) % 2 == 0 ? 1 : -1;
        std::vector<Element> a, b;
        for (std::size_t j = 0; j < k; ++j) {
          if (j == i) continue;
          a.push_back(t[j]);
          b.push_back(j < i ? q.op(t[j], t[i]) : t[j]);
        }
        m(index_of(a, n), c) += s;
        m(index_of(b, n), c) -= s;
      }
    }
    return m;
  }

  // Generators of the degenerate subcomplex in degree k as columns. With
  // quandle_only, only tuples with equal neighbours.
  inline glr::IntMatrix degenerate_span(glr::FiniteGLRack const& r, std::size_t k,
                                        bool quandle_only) {
    auto const                          n = r.size();
    std::vector<std::vector<I64>>       cols;
    std::size_t const                   N = ipow(n, k);
    for (std::size_t c = 0; c < N; ++c) {
      auto const t = tuple_of(c, n, k);
      for (std::size_t i = 0; i + 1 < k; ++i) {
        if (t[i] == t[i + 1]) {
          std::vector<I64> v(N, 0);
          v[c] = 1;
          cols.push_back(v);
          break;
        }
      }
      if (quandle_only) continue;
      for (std::size_t i = 0; i < k; ++i) {
        for (auto const* f : {&r.u(), &r.d()}) {
          auto s = t;
          s[i]   = (*f)[t[i]];
          if (s == t) continue;
          std::vector<I64> v(N, 0);
          v[c] += 1;
          v[index_of(s, n)] -= 1;
          cols.push_back(v);
        }
      }
    }
    glr::IntMatrix m(N, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < N; ++i) m(i, j) = cols[j][i];
    return m;
  }

  inline glr::IntMatrix hcat(glr::IntMatrix const& a, glr::IntMatrix const& b) {
    glr::IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
  }

  // A basis of the column lattice of m.
  inline glr::IntMatrix column_basis(glr::IntMatrix const& m) {
    auto const     f  = glr::smith_normal_form(m);
    auto const     mv = m * f.v;
    glr::IntMatrix b(m.rows(), f.rank());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < f.rank(); ++j) b(i, j) = mv(i, j);
    return b;
  }

  // Homology of C/D in degree k computed as {c : dc in D} / (D + im d),
  // without assuming anything about the shape of D.
  inline glr::AbGroupInvariants quotient_homology(glr::FiniteGLRack const& r, std::size_t k,
                                                  bool quandle_only) {
    auto const n  = r.size();
    auto const Nk = ipow(n, k);
    // cycles relative to D_{k-1}
    glr::IntMatrix gens;
    if (k == 1) {
      gens = glr::IntMatrix::identity(Nk);
    } else {
      auto const     dk = rack_boundary(r.rack(), k);
      auto const     Dm = degenerate_span(r, k - 1, quandle_only);
      glr::IntMatrix negD(Dm.rows(), Dm.cols());
      for (std::size_t i = 0; i < Dm.rows(); ++i)
        for (std::size_t j = 0; j < Dm.cols(); ++j) negD(i, j) = -Dm(i, j);
      auto const a = hcat(dk, negD);
      auto const f = glr::smith_normal_form(a);
      gens         = glr::IntMatrix(Nk, a.cols() - f.rank());
      for (std::size_t j = f.rank(); j < a.cols(); ++j)
        for (std::size_t i = 0; i < Nk; ++i) gens(i, j - f.rank()) = f.v(i, j);
    }
    auto const z = column_basis(gens);
    auto const w = hcat(degenerate_span(r, k, quandle_only), rack_boundary(r.rack(), k + 1));
    // express each column of w in the basis z
    auto const     f  = glr::smith_normal_form(z);
    auto const     uw = f.u * w;
    glr::IntMatrix coords(z.cols(), w.cols());
    for (std::size_t j = 0; j < w.cols(); ++j) {
      std::vector<I64> y(z.cols(), 0);
      for (std::size_t i = 0; i < uw.rows(); ++i) {
        if (i < f.rank()) {
          if (uw(i, j) % f.d(i, i) != 0) throw std::logic_error("boundary not in cycle lattice");
          y[i] = uw(i, j) / f.d(i, i);
        } else if (uw(i, j) != 0) {
          throw std::logic_error("boundary not in cycle lattice");
        }
      }
      for (std::size_t i = 0; i < z.cols(); ++i) {
        I64 s = 0;
        for (std::size_t l = 0; l < z.cols(); ++l) s += f.v(i, l) * y[l];
        coords(i, j) = s;
      }
    }
    return glr::cokernel_of_relations(coords.transpose());
  }

  // ---- cocycles -----------------------------------------------------------

  // Every phi : X^2 -> Z_m constant under u/d in each coordinate, zero on the
  // diagonal, and satisfying the 2-cocycle identity. Found by exhaustion over
  // the free values on orbit representatives.
  inline std::vector<std::vector<I64>> all_cocycles(glr::FiniteGLRack const& r, I64 m) {
    auto const n = r.size();
    // orbit labels on X^2 by flood fill
    std::vector<int> label(n * n, -1);
    int              classes = 0;
    for (std::size_t s = 0; s < n * n; ++s) {
      if (label[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      label[s] = classes;
      while (!stack.empty()) {
        auto const c = stack.back();
        stack.pop_back();
        Element const x = c / n, y = c % n;
        for (std::size_t nb : {r.up(x) * n + y, r.down(x) * n + y, x * n + r.up(y),
                               x * n + r.down(y)}) {
          if (label[nb] < 0) {
            label[nb] = classes;
            stack.push_back(nb);
          }
        }
      }
      ++classes;
    }
    std::vector<bool> zero(classes, false);
    for (Element x = 0; x < n; ++x) zero[label[x * n + x]] = true;
    std::vector<int> free;
    for (int c = 0; c < classes; ++c)
      if (!zero[c]) free.push_back(c);
    std::vector<std::vector<I64>> out;
    std::vector<I64>              val(classes, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == free.size()) {
        std::vector<I64> phi(n * n);
        for (std::size_t s = 0; s < n * n; ++s) phi[s] = val[label[s]];
        auto f = [&](Element a, Element b) { return phi[a * n + b]; };
        for (Element x1 = 0; x1 < n; ++x1)
          for (Element x2 = 0; x2 < n; ++x2)
            for (Element x3 = 0; x3 < n; ++x3)
              if ((f(x1, x3) + f(r.op(x1, x3), r.op(x2, x3)) - f(r.op(x1, x2), x3) - f(x1, x2))
                      % m
                  != 0)
                return;
        out.push_back(phi);
        return;
      }
      for (I64 v = 0; v < m; ++v) {
        val[free[i]] = v;
        rec(i + 1);
      }
      val[free[i]] = 0;
    };
    rec(0);
    return out;
  }

  // All GL-racks of order <= max_n found by brute force over tables and
  // permutation pairs is too slow at order 4, so racks come from the library
  // enumeration and structures from gl_pairs.
  inline std::vector<glr::FiniteGLRack> gl_racks_up_to(std::size_t max_n) {
    std::vector<glr::FiniteGLRack> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (auto const& q : glr::enumerate_racks(n)) {
        for (auto const& [u, d] : gl_pairs(q.table())) out.emplace_back(q, u, d);
      }
    }
    return out;
  }

}  // namespace oracle
