#pragma once

// Left-to-right coloring scan shared by coloring counts and state sums.

#include <cstdint>
#include <functional>
#include <map>

#include "glr/algebra.hpp"
#include "glr/diagram.hpp"

namespace glr::detail {

  // exponent -> number of colorings
  using ExponentCounts = std::map<std::int64_t, std::uint64_t>;

  // Returns the exponent added by a crossing of the given sign whose
  // incoming under-strand carries x and whose over-strand carries y.
  using CrossingWeight = std::function<std::int64_t(int sign, Element x, Element y)>;

  // Sums t^(total weight) over all colorings. A null weight counts colorings
  // at exponent 0. Exponents are reduced mod `modulus` unless it is 0.
  ExponentCounts scan_colorings(FrontDiagram const& d, FiniteGLRack const& r,
                                CrossingWeight const& weight, std::int64_t modulus);

}  // namespace glr::detail
