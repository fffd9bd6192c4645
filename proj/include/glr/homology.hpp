#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "glr/algebra.hpp"
#include "glr/smith.hpp"

namespace glr {

  using Tuple = std::vector<Element>;

  // Orbits of X^n under coordinatewise u and d, with a flag for classes that
  // contain a tuple with two equal adjacent entries. Tuples are indexed in
  // base |X| with the first coordinate most significant.
  struct TupleClassIndex {
    std::size_t              degree = 0;
    std::size_t              base   = 0;
    std::vector<std::size_t> class_of;     // tuple index -> class
    std::vector<bool>        degenerate;   // per class
    std::vector<std::size_t> representative;  // least tuple index per class
    // non-degenerate classes in order of their least tuple; class -> basis
    // position, or npos
    std::vector<std::size_t> basis;
    std::vector<std::size_t> basis_position;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t classes() const noexcept {
      return degenerate.size();
    }
    std::size_t index(Tuple const& t) const;
    Tuple       tuple(std::size_t index) const;
  };

  // Throws ResourceError when |X|^n exceeds the tuple cap, DomainError for n = 0.
  TupleClassIndex tuple_classes(FiniteGLRack const& r, std::size_t n,
                                Limits const& limits = {});

  // Boundary of a tuple in the full rack complex, as (tuple, coefficient).
  std::vector<std::pair<Tuple, std::int64_t>> rack_boundary(FiniteRack const& r,
                                                            Tuple const&      t);

  // Matrix of the induced boundary C_n^L -> C_{n-1}^L on the class bases:
  // rows index basis of degree n-1, columns basis of degree n. Zero for n <= 1.
  // Throws DomainError if a lift is not class-independent.
  IntMatrix boundary_matrix(FiniteGLRack const& r, std::size_t n,
                            Limits const& limits = {});

  AbGroupInvariants legendrian_homology(FiniteGLRack const& r, std::size_t n,
                                        Limits const& limits = {});
  // m = 0 for integer coefficients, m >= 2 for Z_m.
  AbGroupInvariants legendrian_cohomology(FiniteGLRack const& r, std::size_t n,
                                          std::int64_t m,
                                          Limits const& limits = {});

  // 2-cocycle: value on each tuple of X^2, constant on classes, zero on
  // degenerate classes.
  class Cocycle2 {
   public:
    // Validates the class, degeneracy and cocycle conditions; throws
    // DomainError otherwise. values[x * n + y] = phi(x, y), reduced mod m.
    Cocycle2(FiniteGLRack const& r, std::int64_t modulus,
             std::vector<std::int64_t> values);

    std::int64_t modulus() const noexcept {
      return modulus_;
    }
    std::size_t size() const noexcept {
      return n_;
    }
    std::int64_t operator()(Element x, Element y) const {
      return values_[x * n_ + y];
    }
    std::vector<std::int64_t> const& values() const noexcept {
      return values_;
    }
    bool operator==(Cocycle2 const&) const = default;

   private:
    std::int64_t              modulus_;
    std::size_t               n_;
    std::vector<std::int64_t> values_;
  };

  // Reasons a value table fails to be a 2-cocycle; empty when it is one.
  std::vector<std::string> cocycle_violations(FiniteGLRack const& r, std::int64_t m,
                                              std::vector<std::int64_t> const& values);

  // Generators of Z^2_L(X; Z_m) as an abelian group, m >= 2.
  std::vector<Cocycle2> cocycle_space_2(FiniteGLRack const& r, std::int64_t m);
  // Generators of B^2_L(X; Z_m): the coboundaries of class-constant 1-cochains.
  std::vector<Cocycle2> coboundary_space_2(FiniteGLRack const& r, std::int64_t m);
  // delta(lambda)(x, y) = lambda(x) - lambda(x * y) for a 1-cochain lambda
  // constant on u/d classes.
  std::vector<std::int64_t> coboundary_values(FiniteGLRack const& r, std::int64_t m,
                                              std::vector<std::int64_t> const& lambda);

  // Number of elements of the subgroup of Z_m^k generated by `gens`.
  std::uint64_t span_size_mod(std::vector<std::vector<std::int64_t>> const& gens,
                              std::size_t k, std::int64_t m);
  // Whether v lies in the subgroup of Z_m^k generated by `gens`.
  bool in_span_mod(std::vector<std::vector<std::int64_t>> const& gens,
                   std::vector<std::int64_t> const& v, std::int64_t m);

  // Format: `cocycle`, `coeff: m`, then one `x y value` line per
  // non-degenerate class representative.
  std::string write_cocycle(FiniteGLRack const& r, Cocycle2 const& c);
  // Values on missing tuples are filled in by class; throws FormatError or
  // DomainError.
  Cocycle2 parse_cocycle(std::string_view text, FiniteGLRack const& r);

}  // namespace glr
