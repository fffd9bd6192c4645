#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glr/diagram.hpp"
#include "glr/homology.hpp"

namespace glr {

  // Element of Z[Z_m], stored as exponent -> multiplicity with no zero entries.
  class GroupRingElement {
   public:
    explicit GroupRingElement(std::int64_t modulus) : modulus_(modulus) {}

    std::int64_t modulus() const noexcept {
      return modulus_;
    }
    std::map<std::int64_t, std::uint64_t> const& terms() const noexcept {
      return terms_;
    }
    void          add(std::int64_t exponent, std::uint64_t multiplicity = 1);
    std::uint64_t total() const;

    // "4 + 12*t + t^2", or "0"
    std::string to_string() const;

    bool operator==(GroupRingElement const&) const = default;

   private:
    std::int64_t                          modulus_;
    std::map<std::int64_t, std::uint64_t> terms_;
  };

  // phi(x, y) at a positive crossing, -phi(x *^-1 y, y) at a negative one;
  // x colors the incoming under-arc and y the over-arc.
  std::int64_t boltzmann_weight(int sign, Element x, Element y, FiniteGLRack const& r,
                                Cocycle2 const& phi);

  GroupRingElement state_sum(FrontDiagram const& d, FiniteGLRack const& r,
                             Cocycle2 const& phi);

  // Throws DomainError on a modulus mismatch.
  bool state_sum_equal(GroupRingElement const& a, GroupRingElement const& b);

  // Compares the state sums for phi and phi + delta(lambda). lambda must be
  // constant on u/d classes.
  bool cohomologous_invariance_check(FrontDiagram const& d, FiniteGLRack const& r,
                                     Cocycle2 const& phi,
                                     std::vector<std::int64_t> const& lambda);

}  // namespace glr
