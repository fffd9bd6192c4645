#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "glr/error.hpp"

namespace glr {

  // Dense integer matrix. Arithmetic on entries is overflow-checked; an
  // overflow throws ResourceError rather than returning a wrong answer.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    IntMatrix(std::vector<std::vector<std::int64_t>> const& rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }
    std::int64_t& operator()(std::size_t i, std::size_t j) {
      return a_[i * cols_ + j];
    }
    std::int64_t operator()(std::size_t i, std::size_t j) const {
      return a_[i * cols_ + j];
    }

    IntMatrix transpose() const;
    bool      is_zero() const;
    bool      operator==(IntMatrix const&) const = default;

   private:
    std::size_t               rows_ = 0;
    std::size_t               cols_ = 0;
    std::vector<std::int64_t> a_;
  };

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);

  std::int64_t checked_add(std::int64_t a, std::int64_t b);
  std::int64_t checked_mul(std::int64_t a, std::int64_t b);

  struct SmithForm {
    IntMatrix u;  // rows x rows, unimodular
    IntMatrix d;  // diagonal, d_i | d_{i+1}, d_i > 0 for i < rank
    IntMatrix v;  // cols x cols, unimodular
    std::vector<std::int64_t> factors;  // nonzero diagonal entries

    std::size_t rank() const noexcept {
      return factors.size();
    }
  };

  // u * m * v == d. Pivots are chosen by smallest absolute value. Without
  // transforms, u and v are left empty.
  SmithForm smith_normal_form(IntMatrix const& m, bool with_transforms = true);

  struct AbGroupInvariants {
    std::size_t               free_rank = 0;
    std::vector<std::int64_t> torsion;  // each >= 2, each divides the next

    bool operator==(AbGroupInvariants const&) const = default;
  };

  // "0", "Z", "Z^2 + Z/2 + Z/6"
  std::string to_string(AbGroupInvariants const& g);

  // Z^cols modulo the row span: one generator per column, one relation per row.
  AbGroupInvariants cokernel_of_relations(IntMatrix const& relations);

}  // namespace glr
