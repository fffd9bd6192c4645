#include "glr/statesum.hpp"

#include "scan.hpp"

namespace glr {

  void GroupRingElement::add(std::int64_t exponent, std::uint64_t multiplicity) {
    if (modulus_ != 0) {
      exponent %= modulus_;
      if (exponent < 0) {
        exponent += modulus_;
      }
    }
    if (multiplicity != 0) {
      terms_[exponent] += multiplicity;
    }
  }

  std::uint64_t GroupRingElement::total() const {
    std::uint64_t n = 0;
    for (auto [e, c] : terms_) {
      n += c;
    }
    return n;
  }

  std::string GroupRingElement::to_string() const {
    std::string s;
    for (auto [e, c] : terms_) {
      std::string mono = e == 0   ? ""
                         : e == 1 ? "t"
                                  : "t^" + std::to_string(e);
      std::string term = mono.empty()  ? std::to_string(c)
                         : c == 1      ? mono
                                       : std::to_string(c) + "*" + mono;
      s += (s.empty() ? "" : " + ") + term;
    }
    return s.empty() ? "0" : s;
  }

  std::int64_t boltzmann_weight(int sign, Element x, Element y, FiniteGLRack const& r,
                                Cocycle2 const& phi) {
    return sign > 0 ? phi(x, y) : -phi(r.op_inverse(x, y), y);
  }

  GroupRingElement state_sum(FrontDiagram const& d, FiniteGLRack const& r,
                             Cocycle2 const& phi) {
    if (phi.size() != r.size()) {
      throw DomainError("state_sum: cocycle and rack sizes differ");
    }
    auto weight = [&](int sign, Element x, Element y) {
      return boltzmann_weight(sign, x, y, r, phi);
    };
    GroupRingElement out(phi.modulus());
    for (auto [e, c] : detail::scan_colorings(d, r, weight, phi.modulus())) {
      out.add(e, c);
    }
    return out;
  }

  bool state_sum_equal(GroupRingElement const& a, GroupRingElement const& b) {
    if (a.modulus() != b.modulus()) {
      throw DomainError("state sums over different coefficient groups");
    }
    return a == b;
  }

  bool cohomologous_invariance_check(FrontDiagram const& d, FiniteGLRack const& r,
                                     Cocycle2 const& phi,
                                     std::vector<std::int64_t> const& lambda) {
    auto delta  = coboundary_values(r, phi.modulus(), lambda);
    auto values = phi.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] += delta[i];
    }
    Cocycle2 const shifted(r, phi.modulus(), std::move(values));
    return state_sum_equal(state_sum(d, r, phi), state_sum(d, r, shifted));
  }

}  // namespace glr
