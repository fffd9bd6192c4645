#include "glr/smith.hpp"

#include <cstdlib>
#include <utility>

namespace glr {

  IntMatrix::IntMatrix(std::vector<std::vector<std::int64_t>> const& rows)
      : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    for (auto const& r : rows) {
      if (r.size() != cols_) {
        throw FormatError("IntMatrix: ragged rows");
      }
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  bool IntMatrix::is_zero() const {
    for (auto x : a_) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw ResourceError("integer overflow in matrix arithmetic");
    }
    return r;
  }

  std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw ResourceError("integer overflow in matrix arithmetic");
    }
    return r;
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw DomainError("matrix product: dimension mismatch");
    }
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c(i, j) = checked_add(c(i, j), checked_mul(a(i, k), b(k, j)));
        }
      }
    }
    return c;
  }

  namespace {
    struct Reducer {
      IntMatrix d, u, v;
      bool      track;

      // row i += q * row k
      void add_row(std::size_t i, std::size_t k, std::int64_t q) {
        for (std::size_t j = 0; j < d.cols(); ++j) {
          d(i, j) = checked_add(d(i, j), checked_mul(q, d(k, j)));
        }
        if (track) {
          for (std::size_t j = 0; j < u.cols(); ++j) {
            u(i, j) = checked_add(u(i, j), checked_mul(q, u(k, j)));
          }
        }
      }
      void add_col(std::size_t j, std::size_t k, std::int64_t q) {
        for (std::size_t i = 0; i < d.rows(); ++i) {
          d(i, j) = checked_add(d(i, j), checked_mul(q, d(i, k)));
        }
        if (track) {
          for (std::size_t i = 0; i < v.rows(); ++i) {
            v(i, j) = checked_add(v(i, j), checked_mul(q, v(i, k)));
          }
        }
      }
      void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) {
          return;
        }
        for (std::size_t j = 0; j < d.cols(); ++j) {
          std::swap(d(i, j), d(k, j));
        }
        if (track) {
          for (std::size_t j = 0; j < u.cols(); ++j) {
            std::swap(u(i, j), u(k, j));
          }
        }
      }
      void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) {
          return;
        }
        for (std::size_t i = 0; i < d.rows(); ++i) {
          std::swap(d(i, j), d(i, k));
        }
        if (track) {
          for (std::size_t i = 0; i < v.rows(); ++i) {
            std::swap(v(i, j), v(i, k));
          }
        }
      }
      void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < d.cols(); ++j) {
          d(i, j) = -d(i, j);
        }
        if (track) {
          for (std::size_t j = 0; j < u.cols(); ++j) {
            u(i, j) = -u(i, j);
          }
        }
      }

      // Moves the entry of least absolute value in the block [t.., t..] to
      // (t, t). Returns false if the block is zero.
      bool place_pivot(std::size_t t) {
        std::size_t  bi = 0, bj = 0;
        std::int64_t best = 0;
        for (std::size_t i = t; i < d.rows(); ++i) {
          for (std::size_t j = t; j < d.cols(); ++j) {
            auto a = std::llabs(d(i, j));
            if (a != 0 && (best == 0 || a < best)) {
              best = a, bi = i, bj = j;
            }
          }
        }
        if (best == 0) {
          return false;
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
      }

      void reduce(std::size_t t) {
        for (;;) {
          bool clean = true;
          for (std::size_t i = t + 1; i < d.rows(); ++i) {
            if (d(i, t) != 0) {
              add_row(i, t, -(d(i, t) / d(t, t)));
              clean = clean && d(i, t) == 0;
            }
          }
          for (std::size_t j = t + 1; j < d.cols(); ++j) {
            if (d(t, j) != 0) {
              add_col(j, t, -(d(t, j) / d(t, t)));
              clean = clean && d(t, j) == 0;
            }
          }
          if (!clean) {
            // a remainder smaller than the pivot is left in row or column t
            std::size_t bi = t, bj = t;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
              if (d(i, t) != 0 && std::llabs(d(i, t)) < std::llabs(d(bi, bj))) {
                bi = i, bj = t;
              }
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
              if (d(t, j) != 0 && std::llabs(d(t, j)) < std::llabs(d(bi, bj))) {
                bi = t, bj = j;
              }
            }
            swap_rows(t, bi);
            swap_cols(t, bj);
            continue;
          }
          bool divides = true;
          for (std::size_t i = t + 1; i < d.rows() && divides; ++i) {
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
              if (d(i, j) % d(t, t) != 0) {
                add_row(t, i, 1);
                divides = false;
                break;
              }
            }
          }
          if (divides) {
            break;
          }
        }
        if (d(t, t) < 0) {
          negate_row(t);
        }
      }
    };
  }  // namespace

  SmithForm smith_normal_form(IntMatrix const& m, bool with_transforms) {
    Reducer r{m, {}, {}, with_transforms};
    if (with_transforms) {
      r.u = IntMatrix::identity(m.rows());
      r.v = IntMatrix::identity(m.cols());
    }
    SmithForm out;
    for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t) {
      if (!r.place_pivot(t)) {
        break;
      }
      r.reduce(t);
      out.factors.push_back(r.d(t, t));
    }
    out.u = std::move(r.u);
    out.d = std::move(r.d);
    out.v = std::move(r.v);
    return out;
  }

  std::string to_string(AbGroupInvariants const& g) {
    std::string s;
    if (g.free_rank == 1) {
      s = "Z";
    } else if (g.free_rank > 1) {
      s = "Z^" + std::to_string(g.free_rank);
    }
    for (auto t : g.torsion) {
      s += (s.empty() ? "" : " + ") + std::string("Z/") + std::to_string(t);
    }
    return s.empty() ? "0" : s;
  }

  AbGroupInvariants cokernel_of_relations(IntMatrix const& relations) {
    auto const        snf = smith_normal_form(relations, false);
    AbGroupInvariants g;
    g.free_rank = relations.cols() - snf.rank();
    for (auto f : snf.factors) {
      if (f > 1) {
        g.torsion.push_back(f);
      }
    }
    return g;
  }

}  // namespace glr
