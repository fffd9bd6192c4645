#include "glr/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace glr {

  Limits Limits::from_env() {
    Limits      limits;
    char const* cap = std::getenv("GLR_CAP");
    if (cap != nullptr && *cap != '\0') {
      char*              end = nullptr;
      unsigned long long v   = std::strtoull(cap, &end, 10);
      if (end != nullptr && *end == '\0' && v > 0) {
        limits.max_order = static_cast<std::size_t>(v);
      }
    }
    return limits;
  }

  namespace perm {
    Permutation identity(std::size_t n) {
      Permutation p(n);
      std::iota(p.begin(), p.end(), Element{0});
      return p;
    }

    bool is_permutation(std::vector<Element> const& p) {
      std::vector<bool> seen(p.size(), false);
      for (auto x : p) {
        if (x >= p.size() || seen[x]) {
          return false;
        }
        seen[x] = true;
      }
      return true;
    }

    Permutation compose(Permutation const& a, Permutation const& b) {
      Permutation c(b.size());
      for (std::size_t x = 0; x < b.size(); ++x) {
        c[x] = a[b[x]];
      }
      return c;
    }

    Permutation inverse(Permutation const& p) {
      Permutation q(p.size());
      for (std::size_t x = 0; x < p.size(); ++x) {
        q[p[x]] = x;
      }
      return q;
    }

    Permutation power(Permutation const& p, long k) {
      Permutation base = k < 0 ? inverse(p) : p;
      Permutation out  = identity(p.size());
      for (long i = 0; i < (k < 0 ? -k : k); ++i) {
        out = compose(base, out);
      }
      return out;
    }

    std::string to_string(Permutation const& p) {
      std::ostringstream os;
      for (std::size_t i = 0; i < p.size(); ++i) {
        os << (i == 0 ? "" : " ") << p[i];
      }
      return os.str();
    }
  }  // namespace perm

  std::string ValidationReport::to_string() const {
    if (ok()) {
      return "ok";
    }
    std::ostringstream os;
    for (auto const& v : violations) {
      os << "violated " << v.axiom << " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        os << (i == 0 ? "" : ", ") << v.witness[i];
      }
      os << ")\n";
    }
    std::string s = os.str();
    s.pop_back();
    return s;
  }

  namespace {
    void check_shape(Table const& table) {
      std::size_t const n = table.size();
      if (n == 0) {
        throw FormatError("table is empty");
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (table[x].size() != n) {
          throw FormatError("table is not square: row " + std::to_string(x)
                            + " has " + std::to_string(table[x].size())
                            + " entries, expected " + std::to_string(n));
        }
        for (std::size_t y = 0; y < n; ++y) {
          if (table[x][y] >= n) {
            throw FormatError("table entry (" + std::to_string(x) + ", "
                              + std::to_string(y) + ") = "
                              + std::to_string(table[x][y])
                              + " is out of range");
          }
        }
      }
    }
  }  // namespace

  ValidationReport validate_rack(Table const& t) {
    check_shape(t);
    std::size_t const n = t.size();
    ValidationReport  report;
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<std::size_t> hits(n, 0);
      for (std::size_t x = 0; x < n; ++x) {
        ++hits[t[x][y]];
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (hits[x] != 1) {
          // x has no preimage or several under S_y
          report.violations.push_back({"column bijectivity", {x, y}});
          break;
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (t[t[x][y]][z] != t[t[x][z]][t[y][z]]) {
            report.violations.push_back({"self-distributivity", {x, y, z}});
          }
        }
      }
    }
    return report;
  }

  FiniteRack::FiniteRack(Table const& table)
      : n_(table.size()), op_(), inv_() {
    auto report = validate_rack(table);
    if (!report.ok()) {
      throw DomainError("not a rack: " + report.violations.front().axiom
                        + "\n" + report.to_string());
    }
    op_.resize(n_ * n_);
    inv_.resize(n_ * n_);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        op_[x * n_ + y]           = table[x][y];
        inv_[table[x][y] * n_ + y] = x;
      }
    }
  }

  Permutation FiniteRack::column(Element y) const {
    Permutation p(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      p[x] = op(x, y);
    }
    return p;
  }

  Table FiniteRack::table() const {
    Table t(n_, std::vector<Element>(n_));
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        t[x][y] = op(x, y);
      }
    }
    return t;
  }

  ValidationReport validate_gl_rack(FiniteRack const&           rack,
                                    std::vector<Element> const& u,
                                    std::vector<Element> const& d) {
    std::size_t const n = rack.size();
    if (u.size() != n || d.size() != n) {
      throw FormatError("u and d must have " + std::to_string(n)
                        + " entries");
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (u[x] >= n || d[x] >= n) {
        throw FormatError("u or d entry out of range at "
                          + std::to_string(x));
      }
    }
    ValidationReport report;
    for (std::size_t x = 0; x < n; ++x) {
      Element xx = rack.op(x, x);
      if (u[d[xx]] != x) {
        report.violations.push_back({"(L1) ud(x*x) = x", {x}});
      }
      if (d[u[xx]] != x) {
        report.violations.push_back({"(L1') du(x*x) = x", {x}});
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        Element xy = rack.op(x, y);
        if (u[xy] != rack.op(u[x], y)) {
          report.violations.push_back({"(L2) u(x*y) = u(x)*y", {x, y}});
        }
        if (d[xy] != rack.op(d[x], y)) {
          report.violations.push_back({"(L2') d(x*y) = d(x)*y", {x, y}});
        }
        if (rack.op(x, u[y]) != xy) {
          report.violations.push_back({"(L3) x*u(y) = x*y", {x, y}});
        }
        if (rack.op(x, d[y]) != xy) {
          report.violations.push_back({"(L3') x*d(y) = x*y", {x, y}});
        }
      }
    }
    return report;
  }

  FiniteGLRack::FiniteGLRack(FiniteRack rack, Permutation u, Permutation d)
      : rack_(std::move(rack)), u_(std::move(u)), d_(std::move(d)) {
    auto report = validate_gl_rack(rack_, u_, d_);
    if (!report.ok()) {
      throw DomainError("not a GL-rack: " + report.violations.front().axiom
                        + "\n" + report.to_string());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  FiniteGroup::FiniteGroup(Table const& table)
      : n_(table.size()), mul_(), inv_() {
    check_shape(table);
    mul_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        mul_[a * n_ + b] = table[a][b];
      }
    }
    for (std::size_t a = 0; a < n_; ++a) {
      if (mul(0, a) != a || mul(a, 0) != a) {
        throw FormatError("not a group: element 0 is not the identity (fails at "
                          + std::to_string(a) + ")");
      }
    }
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        for (std::size_t c = 0; c < n_; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw FormatError("not a group: associativity fails at ("
                              + std::to_string(a) + ", " + std::to_string(b)
                              + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
    inv_.assign(n_, n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (mul(a, b) == 0 && mul(b, a) == 0) {
          inv_[a] = b;
          break;
        }
      }
      if (inv_[a] == n_) {
        throw FormatError("not a group: element " + std::to_string(a)
                          + " has no inverse");
      }
    }
  }

  Table FiniteGroup::table() const {
    Table t(n_, std::vector<Element>(n_));
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        t[a][b] = mul(a, b);
      }
    }
    return t;
  }

  FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    Table t(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = (a + b) % n;
      }
    }
    return FiniteGroup(t);
  }

  FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    std::vector<Permutation> all;
    Permutation              p = perm::identity(n);
    do {
      all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return of_permutations(all);
  }

  FiniteGroup
  FiniteGroup::of_permutations(std::vector<Permutation> const& elements) {
    std::size_t const n = elements.size();
    Table             t(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto c  = perm::compose(elements[a], elements[b]);
        auto it = std::lower_bound(elements.begin(), elements.end(), c);
        if (it == elements.end() || *it != c) {
          throw FormatError("permutation list is not closed or not sorted");
        }
        t[a][b] = static_cast<Element>(it - elements.begin());
      }
    }
    return FiniteGroup(t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates and automorphisms
  ////////////////////////////////////////////////////////////////////////

  bool is_quandle(FiniteGLRack const& r) {
    for (std::size_t x = 0; x < r.size(); ++x) {
      if (r.op(x, x) != x) {
        return false;
      }
    }
    return true;
  }

  Permutation inner_automorphism(FiniteGLRack const& r, Element y) {
    if (y >= r.size()) {
      throw DomainError("element " + std::to_string(y) + " out of range");
    }
    return r.rack().column(y);
  }

  bool is_automorphism(FiniteGLRack const& r, Permutation const& p) {
    std::size_t const n = r.size();
    if (p.size() != n || !perm::is_permutation(p)) {
      return false;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (p[r.up(x)] != r.up(p[x]) || p[r.down(x)] != r.down(p[x])) {
        return false;
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (p[r.op(x, y)] != r.op(p[x], p[y])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    void check_order(std::size_t n, Limits const& limits, char const* what) {
      if (n > limits.max_order) {
        throw ResourceError(std::string(what) + ": order " + std::to_string(n)
                            + " exceeds the cap " + std::to_string(limits.max_order)
                            + " (set GLR_CAP to override)");
      }
    }

    // Backtracking search for structure-preserving bijections src -> dst.
    // Each choice f(x) = y is closed under f(u x) = u' f(x), f(d x) = d' f(x)
    // and f(a * b) = f(a) *' f(b) before branching again.
    class MorphismSearch {
     public:
      MorphismSearch(FiniteGLRack const& src, FiniteGLRack const& dst)
          : src_(src), dst_(dst), n_(src.size()) {}

      template <typename Visit>
      void run(Visit&& visit) {
        std::vector<Element> f(n_, kUnset);
        std::vector<bool>    used(n_, false);
        recurse(f, used, visit);
      }

     private:
      static constexpr Element kUnset = static_cast<Element>(-1);

      bool assign(std::vector<Element>& f,
                  std::vector<bool>&    used,
                  Element               x,
                  Element               y) {
        std::vector<std::pair<Element, Element>> queue{{x, y}};
        while (!queue.empty()) {
          auto [a, b] = queue.back();
          queue.pop_back();
          if (f[a] != kUnset) {
            if (f[a] != b) {
              return false;
            }
            continue;
          }
          if (used[b]) {
            return false;
          }
          f[a]    = b;
          used[b] = true;
          queue.emplace_back(src_.up(a), dst_.up(b));
          queue.emplace_back(src_.down(a), dst_.down(b));
          for (std::size_t c = 0; c < n_; ++c) {
            if (f[c] == kUnset) {
              continue;
            }
            queue.emplace_back(src_.op(a, c), dst_.op(b, f[c]));
            queue.emplace_back(src_.op(c, a), dst_.op(f[c], b));
          }
        }
        return true;
      }

      template <typename Visit>
      bool recurse(std::vector<Element>& f,
                   std::vector<bool>&    used,
                   Visit&                visit) {
        auto it = std::find(f.begin(), f.end(), kUnset);
        if (it == f.end()) {
          return visit(f);
        }
        Element x = static_cast<Element>(it - f.begin());
        for (Element y = 0; y < n_; ++y) {
          if (used[y]) {
            continue;
          }
          auto f2    = f;
          auto used2 = used;
          if (assign(f2, used2, x, y)) {
            if (!recurse(f2, used2, visit)) {
              return false;
            }
          }
        }
        return true;
      }

      FiniteGLRack const& src_;
      FiniteGLRack const& dst_;
      std::size_t         n_;
    };
  }  // namespace

  std::vector<Permutation> automorphism_group(FiniteGLRack const& r,
                                              Limits const&       limits) {
    check_order(r.size(), limits, "automorphism_group");
    std::vector<Permutation> result;
    MorphismSearch(r, r).run([&result](std::vector<Element> const& f) {
      result.push_back(f);
      return true;
    });
    std::sort(result.begin(), result.end());
    return result;
  }

  std::optional<Permutation> gl_rack_isomorphic(FiniteGLRack const& r1,
                                                FiniteGLRack const& r2,
                                                Limits const&       limits) {
    if (r1.size() != r2.size()) {
      return std::nullopt;
    }
    check_order(r1.size(), limits, "gl_rack_isomorphic");
    std::optional<Permutation> found;
    MorphismSearch(r1, r2).run([&found](std::vector<Element> const& f) {
      found = f;
      return false;
    });
    return found;
  }

  std::vector<std::vector<Element>>
  orbits(std::size_t n, std::vector<Permutation> const& group) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (auto const& g : group) {
      for (std::size_t x = 0; x < n; ++x) {
        auto a = find(x), b = find(g[x]);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    std::vector<std::vector<Element>> out;
    std::vector<std::size_t>          slot(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      auto root = find(x);
      if (slot[root] == n) {
        slot[root] = out.size();
        out.emplace_back();
      }
      out[slot[root]].push_back(x);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // GL-structures
  ////////////////////////////////////////////////////////////////////////

  std::vector<GLStructure> enumerate_gl_structures(FiniteRack const& rack,
                                                   StructureMode     mode,
                                                   Limits const&     limits) {
    std::size_t const n = rack.size();
    check_order(n, limits, "enumerate_gl_structures");
    // Candidates for u and for d satisfy the same single-map conditions:
    // commuting with every column S_y, and S_{f(y)} = S_y.
    std::vector<Permutation> candidates;
    Permutation              p = perm::identity(n);
    do {
      bool good = true;
      for (std::size_t x = 0; x < n && good; ++x) {
        for (std::size_t y = 0; y < n && good; ++y) {
          good = p[rack.op(x, y)] == rack.op(p[x], y)
                 && rack.op(x, p[y]) == rack.op(x, y);
        }
      }
      if (good) {
        candidates.push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<GLStructure> out;
    for (auto const& u : candidates) {
      for (auto const& d : candidates) {
        if (mode == StructureMode::u_equals_d && u != d) {
          continue;
        }
        bool good = true;
        for (std::size_t x = 0; x < n && good; ++x) {
          Element xx = rack.op(x, x);
          good       = u[d[xx]] == x && d[u[xx]] == x;
        }
        if (good) {
          out.push_back({u, d});
        }
      }
    }
    return out;
  }

  std::vector<FiniteRack> enumerate_racks(std::size_t n) {
    std::vector<Permutation> all;
    Permutation              p = perm::identity(n);
    do {
      all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<FiniteRack>  out;
    std::vector<std::size_t> choice(n, 0);
    // columns[y] = S_y; self-distributivity reads S_z S_y = S_{S_z(y)} S_z.
    auto consistent = [&](std::size_t upto) {
      for (std::size_t y = 0; y <= upto; ++y) {
        for (std::size_t z = 0; z <= upto; ++z) {
          auto const& sy  = all[choice[y]];
          auto const& sz  = all[choice[z]];
          Element     yz  = sz[y];
          if (yz > upto) {
            continue;
          }
          auto const& syz = all[choice[yz]];
          for (std::size_t x = 0; x < n; ++x) {
            if (sz[sy[x]] != syz[sz[x]]) {
              return false;
            }
          }
        }
      }
      return true;
    };
    auto recurse = [&](auto&& self, std::size_t level) -> void {
      for (std::size_t c = 0; c < all.size(); ++c) {
        choice[level] = c;
        if (!consistent(level)) {
          continue;
        }
        if (level + 1 < n) {
          self(self, level + 1);
          continue;
        }
        Table t(n, std::vector<Element>(n));
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            t[x][y] = all[choice[y]][x];
          }
        }
        out.emplace_back(t);
      }
    };
    recurse(recurse, 0);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Named constructions
  ////////////////////////////////////////////////////////////////////////

  FiniteRack permutation_rack(Permutation const& sigma) {
    if (!perm::is_permutation(sigma) || sigma.empty()) {
      throw FormatError("sigma is not a permutation");
    }
    std::size_t const n = sigma.size();
    Table             t(n, std::vector<Element>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = sigma[x];
      }
    }
    return FiniteRack(t);
  }

  FiniteRack trivial_rack(std::size_t n) {
    return permutation_rack(perm::identity(n));
  }

  FiniteRack dihedral_quandle(std::size_t n) {
    Table t(n, std::vector<Element>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = (2 * y + n - x) % n;
      }
    }
    return FiniteRack(t);
  }

  FiniteGLRack trivial_gl_rack(FiniteRack const& quandle) {
    auto id = perm::identity(quandle.size());
    return FiniteGLRack(quandle, id, id);
  }

  FiniteGLRack conjugation_gl_rack(FiniteGroup const& g) {
    std::size_t const n = g.size();
    Table             t(n, std::vector<Element>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = g.mul(g.mul(g.inv(y), x), y);
      }
    }
    return trivial_gl_rack(FiniteRack(t));
  }

  FiniteGLRack group_family_gl_rack(FiniteGroup const& g,
                                    Element            a,
                                    Element            b,
                                    Element            c) {
    std::size_t const n = g.size();
    if (a >= n || b >= n || c >= n) {
      throw DomainError("group element out of range");
    }
    auto commute = [&g](Element x, Element y) {
      return g.mul(x, y) == g.mul(y, x);
    };
    if (!commute(a, b)) {
      throw DomainError("group_family_gl_rack: u and v do not commute");
    }
    if (!commute(a, c)) {
      throw DomainError("group_family_gl_rack: u and w do not commute");
    }
    if (!commute(b, c)) {
      throw DomainError("group_family_gl_rack: v and w do not commute");
    }
    if (g.mul(g.mul(a, b), c) != 0) {
      throw DomainError("group_family_gl_rack: uvw != 1");
    }
    Table       t(n, std::vector<Element>(n));
    Permutation u(n), d(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = g.mul(g.mul(g.mul(y, a), g.inv(y)), x);
      }
      u[x] = g.mul(x, b);
      d[x] = g.mul(x, c);
    }
    return FiniteGLRack(FiniteRack(t), u, d);
  }

  FiniteGLRack inverse_gl_structure(FiniteGLRack const& r) {
    std::size_t const n = r.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (r.op(r.op(x, y), y) != x) {
          throw DomainError("inverse_gl_structure: rack is not involutory at ("
                            + std::to_string(x) + ", " + std::to_string(y)
                            + ")");
        }
      }
    }
    return FiniteGLRack(r.rack(), perm::inverse(r.u()), perm::inverse(r.d()));
  }

}  // namespace glr
