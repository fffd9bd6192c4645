#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "glr/algebra.hpp"

namespace glr {

  // Text form of a rack file before validation. A `glrack` file carries u and
  // d; a `rack` file carries only the table.
  struct RackFile {
    Table                      op;
    std::optional<Permutation> u;
    std::optional<Permutation> d;
  };

  // Format:
  //   glrack            (or `rack`, `group`)
  //   size: n
  //   op:
  //   <n lines of n integers>
  //   u: p0 ... p(n-1)
  //   d: q0 ... q(n-1)
  // `#` starts a comment; blank lines are ignored. Throws FormatError with the
  // offending line number.
  RackFile parse_rack_file(std::string_view text,
                           std::string_view expected_header = "glrack");

  FiniteGLRack parse_gl_rack(std::string_view text);
  FiniteRack   parse_rack(std::string_view text);
  FiniteGroup  parse_group(std::string_view text);

  std::string write_gl_rack(FiniteGLRack const& r);
  std::string write_rack(FiniteRack const& r);
  std::string write_group(FiniteGroup const& g);

  std::string read_file(std::string const& path);

}  // namespace glr
