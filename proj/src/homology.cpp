#include "glr/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace glr {

  std::size_t TupleClassIndex::index(Tuple const& t) const {
    std::size_t i = 0;
    for (auto x : t) {
      i = i * base + x;
    }
    return i;
  }

  Tuple TupleClassIndex::tuple(std::size_t i) const {
    Tuple t(degree);
    for (std::size_t k = degree; k-- > 0;) {
      t[k] = i % base;
      i /= base;
    }
    return t;
  }

  namespace {
    std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    }

    std::size_t tuple_count(std::size_t n, std::size_t degree, Limits const& limits) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < degree; ++i) {
        if (n != 0 && total > limits.max_tuples / n) {
          throw ResourceError("|X|^" + std::to_string(degree) + " exceeds the tuple cap of "
                              + std::to_string(limits.max_tuples));
        }
        total *= n;
      }
      if (total > limits.max_tuples) {
        throw ResourceError("|X|^" + std::to_string(degree) + " exceeds the tuple cap of "
                            + std::to_string(limits.max_tuples));
      }
      return total;
    }

    std::int64_t mod(std::int64_t a, std::int64_t m) {
      if (m == 0) {
        return a;
      }
      a %= m;
      return a < 0 ? a + m : a;
    }
  }  // namespace

  TupleClassIndex tuple_classes(FiniteGLRack const& r, std::size_t n, Limits const& limits) {
    if (n == 0) {
      throw DomainError("tuple_classes: degree must be at least 1");
    }
    TupleClassIndex idx;
    idx.degree              = n;
    idx.base                = r.size();
    std::size_t const total = tuple_count(r.size(), n, limits);
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::size_t> weight(n, 1);  // place value of coordinate i
    for (std::size_t i = n - 1; i-- > 0;) {
      weight[i] = weight[i + 1] * r.size();
    }
    for (std::size_t t = 0; t < total; ++t) {
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t const x = (t / weight[i]) % r.size();
        for (Element y : {r.up(x), r.down(x)}) {
          std::size_t const s = t + (y - x) * weight[i];
          auto              a = find(parent, t), b = find(parent, s);
          if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
          }
        }
      }
    }
    // roots are the least members, so classes numbered by root order are
    // numbered by least tuple
    std::vector<std::size_t> class_of_root(total, TupleClassIndex::npos);
    idx.class_of.resize(total);
    for (std::size_t t = 0; t < total; ++t) {
      auto root = find(parent, t);
      if (class_of_root[root] == TupleClassIndex::npos) {
        class_of_root[root] = idx.representative.size();
        idx.representative.push_back(root);
        idx.degenerate.push_back(false);
      }
      std::size_t const c = class_of_root[root];
      idx.class_of[t]     = c;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if ((t / weight[i]) % r.size() == (t / weight[i + 1]) % r.size()) {
          idx.degenerate[c] = true;
        }
      }
    }
    idx.basis_position.assign(idx.classes(), TupleClassIndex::npos);
    for (std::size_t c = 0; c < idx.classes(); ++c) {
      if (!idx.degenerate[c]) {
        idx.basis_position[c] = idx.basis.size();
        idx.basis.push_back(c);
      }
    }
    return idx;
  }

  std::vector<std::pair<Tuple, std::int64_t>> rack_boundary(FiniteRack const& r,
                                                            Tuple const&      t) {
    std::vector<std::pair<Tuple, std::int64_t>> out;
    if (t.size() <= 1) {
      return out;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::int64_t const sign = (i % 2 == 0) ? -1 : 1;  // (-1)^(i+1), 1-based
      Tuple              a, b;
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (j == i) {
          continue;
        }
        a.push_back(t[j]);
        b.push_back(j < i ? r.op(t[j], t[i]) : t[j]);
      }
      out.emplace_back(std::move(a), sign);
      out.emplace_back(std::move(b), -sign);
    }
    return out;
  }

  namespace {
    IntMatrix induced_boundary(FiniteGLRack const& r, TupleClassIndex const& hi,
                               TupleClassIndex const& lo) {
      IntMatrix m(lo.basis.size(), hi.basis.size());
      if (hi.degree <= 1) {
        return m;
      }
      auto project = [&](std::size_t t) {
        std::map<std::size_t, std::int64_t> col;
        for (auto const& [s, coeff] : rack_boundary(r.rack(), hi.tuple(t))) {
          auto const pos = lo.basis_position[lo.class_of[lo.index(s)]];
          if (pos != TupleClassIndex::npos) {
            col[pos] += coeff;
          }
        }
        std::erase_if(col, [](auto const& kv) { return kv.second == 0; });
        return col;
      };
      std::vector<std::map<std::size_t, std::int64_t>> columns(hi.classes());
      std::vector<bool>                                done(hi.classes(), false);
      for (std::size_t t = 0; t < hi.class_of.size(); ++t) {
        std::size_t const c   = hi.class_of[t];
        auto              col = project(t);
        if (hi.degenerate[c]) {
          if (!col.empty()) {
            throw DomainError("boundary of a degenerate tuple does not vanish in the quotient");
          }
          continue;
        }
        if (!done[c]) {
          columns[c] = std::move(col);
          done[c]    = true;
        } else if (columns[c] != col) {
          throw DomainError("boundary is not constant on a u/d class");
        }
      }
      for (std::size_t j = 0; j < hi.basis.size(); ++j) {
        for (auto const& [row, coeff] : columns[hi.basis[j]]) {
          m(row, j) = coeff;
        }
      }
      return m;
    }

    // ker(out) / im(in) for a complex of free modules, in_map: a -> b and
    // out_map: b -> c given as b x a and c x b matrices.
    AbGroupInvariants subquotient(std::size_t b, IntMatrix const& in_map,
                                  IntMatrix const& out_map) {
      auto const        in  = smith_normal_form(in_map, false);
      auto const        out = smith_normal_form(out_map, false);
      AbGroupInvariants g;
      g.free_rank = b - in.rank() - out.rank();
      for (auto f : in.factors) {
        if (f > 1) {
          g.torsion.push_back(f);
        }
      }
      return g;
    }

    // Invariant factors of a direct sum of cyclic groups Z/c.
    std::vector<std::int64_t> normalise(std::vector<std::int64_t> const& orders) {
      IntMatrix m(orders.size(), orders.size());
      for (std::size_t i = 0; i < orders.size(); ++i) {
        m(i, i) = orders[i];
      }
      std::vector<std::int64_t> out;
      for (auto f : smith_normal_form(m, false).factors) {
        if (f > 1) {
          out.push_back(f);
        }
      }
      return out;
    }
  }  // namespace

  IntMatrix boundary_matrix(FiniteGLRack const& r, std::size_t n, Limits const& limits) {
    auto const hi = tuple_classes(r, n, limits);
    if (n <= 1) {
      return IntMatrix(0, hi.basis.size());
    }
    return induced_boundary(r, hi, tuple_classes(r, n - 1, limits));
  }

  AbGroupInvariants legendrian_homology(FiniteGLRack const& r, std::size_t n,
                                        Limits const& limits) {
    auto const here = tuple_classes(r, n, limits);
    auto const up   = tuple_classes(r, n + 1, limits);
    IntMatrix  in   = induced_boundary(r, up, here);
    IntMatrix  out  = n <= 1 ? IntMatrix(0, here.basis.size())
                             : induced_boundary(r, here, tuple_classes(r, n - 1, limits));
    return subquotient(here.basis.size(), in, out);
  }

  AbGroupInvariants legendrian_cohomology(FiniteGLRack const& r, std::size_t n,
                                          std::int64_t m, Limits const& limits) {
    if (m < 0 || m == 1) {
      throw DomainError("coefficient modulus must be 0 or at least 2");
    }
    if (m == 0) {
      // dual complex: delta^{n-1} = d_n^T into degree n, delta^n = d_{n+1}^T out
      auto const here = tuple_classes(r, n, limits);
      IntMatrix  out  = induced_boundary(r, tuple_classes(r, n + 1, limits), here).transpose();
      IntMatrix  in   = n <= 1 ? IntMatrix(here.basis.size(), 0)
                               : induced_boundary(r, here, tuple_classes(r, n - 1, limits))
                                   .transpose();
      return subquotient(here.basis.size(), in, out);
    }
    // universal coefficients: Hom(H_n, Z_m) + Ext(H_{n-1}, Z_m)
    auto const                h = legendrian_homology(r, n, limits);
    std::vector<std::int64_t> orders(h.free_rank, m);
    for (auto t : h.torsion) {
      orders.push_back(std::gcd(t, m));
    }
    if (n >= 2) {
      for (auto t : legendrian_homology(r, n - 1, limits).torsion) {
        orders.push_back(std::gcd(t, m));
      }
    }
    return {0, normalise(orders)};
  }

  std::vector<std::string> cocycle_violations(FiniteGLRack const& r, std::int64_t m,
                                              std::vector<std::int64_t> const& values) {
    std::size_t const        n = r.size();
    std::vector<std::string> out;
    if (values.size() != n * n) {
      out.push_back("expected " + std::to_string(n * n) + " values");
      return out;
    }
    auto phi = [&](Element x, Element y) { return values[x * n + y]; };
    auto eq  = [m](std::int64_t a, std::int64_t b) { return mod(a - b, m) == 0; };
    auto pt  = [](std::initializer_list<Element> xs) {
      std::string s = "(";
      for (auto x : xs) {
        s += (s.size() > 1 ? "," : "") + std::to_string(x);
      }
      return s + ")";
    };
    for (Element a = 0; a < n && out.empty(); ++a) {
      for (Element b = 0; b < n && out.empty(); ++b) {
        for (Element c = 0; c < n; ++c) {
          if (!eq(phi(a, c) + phi(r.op(a, c), r.op(b, c)), phi(r.op(a, b), c) + phi(a, b))) {
            out.push_back("condition (1) fails at " + pt({a, b, c}));
            break;
          }
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (!eq(phi(x, x), 0)) {
        out.push_back("condition (2) fails at " + pt({x}));
        break;
      }
    }
    char const* names[] = {"(3)", "(4)", "(5)", "(6)"};
    for (int k = 0; k < 4; ++k) {
      bool const use_u = k < 2, first = k % 2 == 0;
      for (Element a = 0; a < n; ++a) {
        bool bad = false;
        for (Element b = 0; b < n; ++b) {
          Element const a2 = first ? (use_u ? r.up(a) : r.down(a)) : a;
          Element const b2 = first ? b : (use_u ? r.up(b) : r.down(b));
          if (!eq(phi(a, b), phi(a2, b2))) {
            out.push_back(std::string("condition ") + names[k] + " fails at " + pt({a, b}));
            bad = true;
            break;
          }
        }
        if (bad) {
          break;
        }
      }
    }
    return out;
  }

  Cocycle2::Cocycle2(FiniteGLRack const& r, std::int64_t modulus,
                     std::vector<std::int64_t> values)
      : modulus_(modulus), n_(r.size()), values_(std::move(values)) {
    if (modulus_ < 0 || modulus_ == 1) {
      throw DomainError("coefficient modulus must be 0 or at least 2");
    }
    for (auto& v : values_) {
      v = mod(v, modulus_);
    }
    auto errors = cocycle_violations(r, modulus_, values_);
    if (!errors.empty()) {
      throw DomainError("not a 2-cocycle: " + errors.front());
    }
  }

  namespace {
    // Generators of the kernel of A mod m, in coordinates of A's columns.
    std::vector<std::vector<std::int64_t>> kernel_mod(IntMatrix const& a, std::int64_t m) {
      auto const                             snf = smith_normal_form(a, true);
      std::vector<std::vector<std::int64_t>> gens;
      for (std::size_t i = 0; i < a.cols(); ++i) {
        std::int64_t scale = 1;
        if (i < snf.rank()) {
          scale = m / std::gcd(snf.factors[i], m);
          if (scale == m) {
            continue;
          }
        }
        std::vector<std::int64_t> v(a.cols());
        bool                      nonzero = false;
        for (std::size_t j = 0; j < a.cols(); ++j) {
          v[j]    = mod(checked_mul(snf.v(j, i) % m, scale), m);
          nonzero = nonzero || v[j] != 0;
        }
        if (nonzero) {
          gens.push_back(std::move(v));
        }
      }
      return gens;
    }

    std::vector<std::int64_t> spread(TupleClassIndex const& idx,
                                     std::vector<std::int64_t> const& on_basis) {
      std::vector<std::int64_t> values(idx.class_of.size(), 0);
      for (std::size_t t = 0; t < values.size(); ++t) {
        auto pos = idx.basis_position[idx.class_of[t]];
        if (pos != TupleClassIndex::npos) {
          values[t] = on_basis[pos];
        }
      }
      return values;
    }

    void require_modulus(std::int64_t m) {
      if (m < 2) {
        throw DomainError("coefficient modulus must be at least 2");
      }
    }
  }  // namespace

  std::vector<Cocycle2> cocycle_space_2(FiniteGLRack const& r, std::int64_t m) {
    require_modulus(m);
    auto const        idx = tuple_classes(r, 2);
    std::size_t const n   = r.size();
    std::set<std::vector<std::int64_t>> rows;
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          std::vector<std::int64_t> row(idx.basis.size(), 0);
          auto add = [&](Element x, Element y, std::int64_t s) {
            auto pos = idx.basis_position[idx.class_of[x * n + y]];
            if (pos != TupleClassIndex::npos) {
              row[pos] += s;
            }
          };
          add(a, c, 1);
          add(r.op(a, c), r.op(b, c), 1);
          add(r.op(a, b), c, -1);
          add(a, b, -1);
          if (std::any_of(row.begin(), row.end(), [](auto v) { return v != 0; })) {
            rows.insert(row);
          }
        }
      }
    }
    IntMatrix a(rows.size(), idx.basis.size());
    std::size_t i = 0;
    for (auto const& row : rows) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        a(i, j) = row[j];
      }
      ++i;
    }
    std::vector<Cocycle2> out;
    for (auto const& g : kernel_mod(a, m)) {
      out.emplace_back(r, m, spread(idx, g));
    }
    return out;
  }

  std::vector<std::int64_t> coboundary_values(FiniteGLRack const& r, std::int64_t m,
                                              std::vector<std::int64_t> const& lambda) {
    std::size_t const n = r.size();
    if (lambda.size() != n) {
      throw DomainError("1-cochain needs one value per element");
    }
    std::vector<std::int64_t> out(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        out[x * n + y] = mod(lambda[x] - lambda[r.op(x, y)], m);
      }
    }
    return out;
  }

  std::vector<Cocycle2> coboundary_space_2(FiniteGLRack const& r, std::int64_t m) {
    require_modulus(m);
    auto const            idx = tuple_classes(r, 1);
    std::vector<Cocycle2> out;
    for (std::size_t c : idx.basis) {
      std::vector<std::int64_t> lambda(r.size(), 0);
      for (Element x = 0; x < r.size(); ++x) {
        lambda[x] = idx.class_of[x] == c ? 1 : 0;
      }
      auto values = coboundary_values(r, m, lambda);
      if (std::any_of(values.begin(), values.end(), [](auto v) { return v != 0; })) {
        out.emplace_back(r, m, std::move(values));
      }
    }
    return out;
  }

  namespace {
    // Product of the invariant factors of (gens; m I), i.e. the index of the
    // generated lattice in Z^k.
    std::vector<std::int64_t> lattice_factors(std::vector<std::vector<std::int64_t>> const& gens,
                                              std::size_t k, std::int64_t m) {
      IntMatrix a(gens.size() + k, k);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != k) {
          throw DomainError("span: vector length mismatch");
        }
        for (std::size_t j = 0; j < k; ++j) {
          a(i, j) = mod(gens[i][j], m);
        }
      }
      for (std::size_t j = 0; j < k; ++j) {
        a(gens.size() + j, j) = m;
      }
      return smith_normal_form(a, false).factors;
    }
  }  // namespace

  std::uint64_t span_size_mod(std::vector<std::vector<std::int64_t>> const& gens,
                              std::size_t k, std::int64_t m) {
    require_modulus(m);
    std::uint64_t size = 1;
    for (auto f : lattice_factors(gens, k, m)) {
      std::uint64_t next;
      if (__builtin_mul_overflow(size, static_cast<std::uint64_t>(m / f), &next)) {
        throw ResourceError("span size overflows 64 bits");
      }
      size = next;
    }
    return size;
  }

  bool in_span_mod(std::vector<std::vector<std::int64_t>> const& gens,
                   std::vector<std::int64_t> const& v, std::int64_t m) {
    require_modulus(m);
    auto with = gens;
    with.push_back(v);
    return lattice_factors(gens, v.size(), m) == lattice_factors(with, v.size(), m);
  }

  std::string write_cocycle(FiniteGLRack const& r, Cocycle2 const& c) {
    auto const  idx = tuple_classes(r, 2);
    std::string s   = "cocycle\ncoeff: " + std::to_string(c.modulus()) + "\n";
    for (std::size_t cls : idx.basis) {
      auto t = idx.tuple(idx.representative[cls]);
      s += std::to_string(t[0]) + " " + std::to_string(t[1]) + " "
           + std::to_string(c(t[0], t[1])) + "\n";
    }
    return s;
  }

  Cocycle2 parse_cocycle(std::string_view text, FiniteGLRack const& r) {
    std::istringstream in{std::string(text)};
    std::string        raw;
    std::size_t        number = 0;
    int                stage  = 0;  // 0 header, 1 coeff, 2 values
    std::int64_t       m      = 0;
    auto const         idx    = tuple_classes(r, 2);
    std::vector<std::optional<std::int64_t>> by_class(idx.classes());
    auto fail = [&](std::string const& msg) {
      throw FormatError("line " + std::to_string(number) + ": " + msg);
    };
    while (std::getline(in, raw)) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) {
        raw.erase(hash);
      }
      std::istringstream       ls(raw);
      std::vector<std::string> tok;
      for (std::string t; ls >> t;) {
        tok.push_back(t);
      }
      if (tok.empty()) {
        continue;
      }
      auto integer = [&](std::string const& t) {
        try {
          std::size_t used = 0;
          auto        v    = std::stoll(t, &used);
          if (used != t.size()) {
            fail("expected an integer, got '" + t + "'");
          }
          return static_cast<std::int64_t>(v);
        } catch (std::logic_error const&) {
        }
        fail("expected an integer, got '" + t + "'");
        return std::int64_t{0};
      };
      if (stage == 0) {
        if (tok != std::vector<std::string>{"cocycle"}) {
          fail("expected header 'cocycle'");
        }
        stage = 1;
      } else if (stage == 1) {
        if (tok.size() != 2 || tok[0] != "coeff:") {
          fail("expected 'coeff: m'");
        }
        m = integer(tok[1]);
        if (m < 2) {
          fail("coefficient modulus must be at least 2");
        }
        stage = 2;
      } else {
        if (tok.size() != 3) {
          fail("expected 'x y value'");
        }
        auto x = integer(tok[0]), y = integer(tok[1]), v = mod(integer(tok[2]), m);
        if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= r.size()
            || static_cast<std::size_t>(y) >= r.size()) {
          fail("element out of range");
        }
        auto cls = idx.class_of[static_cast<std::size_t>(x) * r.size()
                                + static_cast<std::size_t>(y)];
        if (by_class[cls] && *by_class[cls] != v) {
          fail("conflicting values on one u/d class");
        }
        by_class[cls] = v;
      }
    }
    if (stage < 2) {
      throw FormatError("cocycle file needs a 'cocycle' header and a 'coeff:' line");
    }
    std::vector<std::int64_t> values(idx.class_of.size());
    for (std::size_t t = 0; t < values.size(); ++t) {
      values[t] = by_class[idx.class_of[t]].value_or(0);
    }
    return Cocycle2(r, m, std::move(values));
  }

}  // namespace glr
