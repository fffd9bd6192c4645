#include <algorithm>
#include <map>
#include <set>

#include "glr/algebra.hpp"

namespace glr {

  namespace {
    std::string idx(std::size_t i) {
      return std::to_string(i);
    }

    bool contains(std::vector<Element> const& sorted, Element x) {
      return std::binary_search(sorted.begin(), sorted.end(), x);
    }
  }  // namespace

  std::vector<std::string> check_coset_conditions(CosetGLData const& data) {
    FiniteGroup const g(data.group);
    std::size_t const k = data.subgroups.size();
    std::vector<std::string> errors;
    if (data.z.size() != k || data.r.size() != k || data.s.size() != k
        || data.tau.size() != k) {
      errors.push_back("z, r, s and tau must have one entry per subgroup");
      return errors;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (data.z[i] >= g.size() || data.r[i] >= g.size()
          || data.s[i] >= g.size() || data.tau[i] >= k) {
        errors.push_back("entry out of range at index " + idx(i));
        return errors;
      }
    }
    if (!perm::is_permutation(data.tau)) {
      errors.push_back("tau is not a bijection of the index set");
      return errors;
    }
    auto const mu = perm::inverse(data.tau);

    std::vector<std::vector<Element>> h(k);
    for (std::size_t i = 0; i < k; ++i) {
      h[i] = data.subgroups[i];
      std::sort(h[i].begin(), h[i].end());
      h[i].erase(std::unique(h[i].begin(), h[i].end()), h[i].end());
      bool closed = !h[i].empty() && h[i].front() == 0;
      for (auto a : h[i]) {
        if (a >= g.size()) {
          errors.push_back("H_" + idx(i) + " has an element out of range");
          return errors;
        }
        closed = closed && contains(h[i], g.inv(a));
        for (auto b : h[i]) {
          closed = closed && contains(h[i], g.mul(a, b));
        }
      }
      if (!closed) {
        errors.push_back("H_" + idx(i) + " is not a subgroup");
        continue;
      }
      for (auto a : h[i]) {
        if (g.mul(a, data.z[i]) != g.mul(data.z[i], a)) {
          errors.push_back("H_" + idx(i) + " does not centralize z_" + idx(i)
                           + " (witness " + idx(a) + ")");
          break;
        }
      }
    }
    if (!errors.empty()) {
      return errors;
    }
    auto conj = [&g](Element x, Element a) {  // x^-1 a x
      return g.mul(g.mul(g.inv(x), a), x);
    };
    for (std::size_t i = 0; i < k; ++i) {
      Element const z = data.z[i], r = data.r[i], s = data.s[i];
      for (auto a : h[i]) {
        if (!contains(h[data.tau[i]], conj(r, a))) {
          errors.push_back("condition (1) r_i^-1 h r_i in H_tau(i) fails at i = "
                           + idx(i) + " (witness " + idx(a) + ")");
          break;
        }
      }
      for (auto a : h[i]) {
        if (!contains(h[mu[i]], conj(s, a))) {
          errors.push_back("condition (2) s_i^-1 h s_i in H_mu(i) fails at i = "
                           + idx(i) + " (witness " + idx(a) + ")");
          break;
        }
      }
      if (!contains(h[i], g.mul(g.mul(z, r), data.s[data.tau[i]]))) {
        errors.push_back("condition (3) z_i r_i s_tau(i) in H_i fails at i = "
                         + idx(i));
      }
      if (!contains(h[i], g.mul(g.mul(z, s), data.r[mu[i]]))) {
        errors.push_back("condition (4) z_i s_i r_mu(i) in H_i fails at i = "
                         + idx(i));
      }
      if (g.mul(z, r) != g.mul(r, data.z[data.tau[i]])) {
        errors.push_back("condition (5) z_i r_i = r_i z_tau(i) fails at i = "
                         + idx(i));
      }
      if (g.mul(z, s) != g.mul(s, data.z[mu[i]])) {
        errors.push_back("condition (6) z_i s_i = s_i z_mu(i) fails at i = "
                         + idx(i));
      }
    }
    return errors;
  }

  FiniteGLRack coset_gl_rack(CosetGLData const& data, CosetLayout* layout) {
    auto errors = check_coset_conditions(data);
    if (!errors.empty()) {
      throw DomainError("coset_gl_rack: " + errors.front());
    }
    FiniteGroup const g(data.group);
    std::size_t const k  = data.subgroups.size();
    auto const        mu = perm::inverse(data.tau);

    // (i, x) -> coset index, via the least representative of xH_i
    std::vector<std::vector<Element>> index_of(k,
                                               std::vector<Element>(g.size()));
    CosetLayout lay;
    for (std::size_t i = 0; i < k; ++i) {
      std::map<Element, Element> rep_index;
      for (Element x = 0; x < g.size(); ++x) {
        Element least = g.size();
        for (auto a : data.subgroups[i]) {
          least = std::min(least, g.mul(x, a));
        }
        auto it = rep_index.find(least);
        if (it == rep_index.end()) {
          it = rep_index.emplace(least, lay.cosets.size()).first;
          lay.cosets.emplace_back(i, least);
        }
        index_of[i][x] = it->second;
      }
    }
    std::size_t const n = lay.cosets.size();
    Table             t(n, std::vector<Element>(n));
    Permutation       u(n), d(n);
    for (std::size_t a = 0; a < n; ++a) {
      auto [i, x] = lay.cosets[a];
      for (std::size_t b = 0; b < n; ++b) {
        auto [j, y] = lay.cosets[b];
        Element yzy = g.mul(g.mul(y, data.z[j]), g.inv(y));
        t[a][b]     = index_of[i][g.mul(yzy, x)];
      }
      u[a] = index_of[data.tau[i]][g.mul(x, data.r[i])];
      d[a] = index_of[mu[i]][g.mul(x, data.s[i])];
    }
    if (layout != nullptr) {
      *layout = lay;
    }
    return FiniteGLRack(FiniteRack(t), u, d);
  }

  HomogeneousRepresentation homogeneous_representation(FiniteGLRack const& r,
                                                       Limits const& limits) {
    auto const        auts = automorphism_group(r, limits);
    FiniteGroup const g    = FiniteGroup::of_permutations(auts);
    auto const        orb  = orbits(r.size(), auts);
    std::size_t const k    = orb.size();

    std::vector<std::size_t> orbit_of(r.size());
    for (std::size_t i = 0; i < k; ++i) {
      for (auto x : orb[i]) {
        orbit_of[x] = i;
      }
    }
    auto index_of = [&auts](Permutation const& p) {
      return static_cast<Element>(
          std::lower_bound(auts.begin(), auts.end(), p) - auts.begin());
    };

    HomogeneousRepresentation out;
    out.group_elements = auts;
    out.data.group     = g.table();
    out.data.subgroups.resize(k);
    out.data.z.resize(k);
    out.data.r.resize(k);
    out.data.s.resize(k);
    out.data.tau.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      out.base_points.push_back(orb[i].front());
    }
    for (std::size_t i = 0; i < k; ++i) {
      Element const p = out.base_points[i];
      for (Element e = 0; e < auts.size(); ++e) {
        if (auts[e][p] == p) {
          out.data.subgroups[i].push_back(e);
        }
      }
      out.data.z[i]   = index_of(r.rack().column(p));
      out.data.tau[i] = orbit_of[r.up(p)];
    }
    auto const mu = perm::inverse(out.data.tau);
    for (std::size_t i = 0; i < k; ++i) {
      Element const p  = out.base_points[i];
      Element const pu = out.base_points[out.data.tau[i]];
      Element const pd = out.base_points[mu[i]];
      auto          first = [&](Element from, Element to) {
        for (Element e = 0; e < auts.size(); ++e) {
          if (auts[e][from] == to) {
            return e;
          }
        }
        throw DomainError("homogeneous_representation: orbit map is inconsistent");
      };
      out.data.r[i] = first(pu, r.up(p));
      out.data.s[i] = first(pd, r.down(p));
    }

    CosetLayout layout;
    coset_gl_rack(out.data, &layout);
    for (auto [j, xi] : layout.cosets) {
      out.iso.push_back(auts[xi][out.base_points[j]]);
    }
    return out;
  }

}  // namespace glr
