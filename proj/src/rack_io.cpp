#include "glr/rack_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace glr {

  namespace {
    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line>  lines;
      std::istringstream in{std::string(text)};
      std::string        raw;
      std::size_t        number = 0;
      while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
          raw.erase(hash);
        }
        std::istringstream ls(raw);
        Line               line{number, {}};
        std::string        tok;
        while (ls >> tok) {
          line.tokens.push_back(tok);
        }
        if (!line.tokens.empty()) {
          lines.push_back(std::move(line));
        }
      }
      return lines;
    }

    [[noreturn]] void fail(std::size_t line, std::string const& msg) {
      throw FormatError("line " + std::to_string(line) + ": " + msg);
    }

    Element parse_index(std::string const& tok, std::size_t line) {
      if (tok.empty()
          || tok.find_first_not_of("0123456789") != std::string::npos) {
        fail(line, "expected a non-negative integer, got '" + tok + "'");
      }
      try {
        return static_cast<Element>(std::stoull(tok));
      } catch (std::exception const&) {
        fail(line, "integer out of range: '" + tok + "'");
      }
    }

    std::vector<Element> parse_row(Line const& line, std::size_t first,
                                   std::size_t n) {
      if (line.tokens.size() - first != n) {
        fail(line.number, "expected " + std::to_string(n) + " entries, got "
                              + std::to_string(line.tokens.size() - first));
      }
      std::vector<Element> row;
      for (std::size_t i = first; i < line.tokens.size(); ++i) {
        row.push_back(parse_index(line.tokens[i], line.number));
      }
      return row;
    }

    std::string format_row(std::vector<Element> const& row) {
      std::string s;
      for (std::size_t i = 0; i < row.size(); ++i) {
        s += (i == 0 ? "" : " ") + std::to_string(row[i]);
      }
      return s;
    }
  }  // namespace

  RackFile parse_rack_file(std::string_view text,
                           std::string_view expected_header) {
    auto lines = tokenize(text);
    if (lines.empty()) {
      throw FormatError("empty file");
    }
    std::string const header = lines[0].tokens[0];
    bool header_ok = header == expected_header && lines[0].tokens.size() == 1;
    if (expected_header == "rack" && header == "glrack") {
      header_ok = lines[0].tokens.size() == 1;
    }
    if (!header_ok) {
      fail(lines[0].number, "expected header '" + std::string(expected_header)
                                + "'");
    }
    if (lines.size() < 2 || lines[1].tokens.size() != 2
        || lines[1].tokens[0] != "size:") {
      fail(lines.size() < 2 ? lines[0].number : lines[1].number,
           "expected 'size: n'");
    }
    std::size_t const n = parse_index(lines[1].tokens[1], lines[1].number);
    if (n == 0) {
      fail(lines[1].number, "size must be positive");
    }
    std::size_t pos = 2;
    if (pos >= lines.size() || lines[pos].tokens != std::vector<std::string>{"op:"}) {
      fail(pos < lines.size() ? lines[pos].number : lines.back().number,
           "expected 'op:'");
    }
    ++pos;
    RackFile out;
    for (std::size_t x = 0; x < n; ++x, ++pos) {
      if (pos >= lines.size()) {
        fail(lines.back().number, "table has fewer than " + std::to_string(n)
                                      + " rows");
      }
      out.op.push_back(parse_row(lines[pos], 0, n));
    }
    for (; pos < lines.size(); ++pos) {
      auto const& line = lines[pos];
      auto const& key  = line.tokens[0];
      if (key == "u:" && !out.u) {
        out.u = parse_row(line, 1, n);
      } else if (key == "d:" && !out.d) {
        out.d = parse_row(line, 1, n);
      } else {
        fail(line.number, "unexpected '" + key + "'");
      }
    }
    for (auto const& row : out.op) {
      for (auto e : row) {
        if (e >= n) {
          throw FormatError("table entry " + std::to_string(e)
                            + " out of range");
        }
      }
    }
    return out;
  }

  FiniteGLRack parse_gl_rack(std::string_view text) {
    auto file = parse_rack_file(text, "glrack");
    if (!file.u || !file.d) {
      throw FormatError("glrack file needs both 'u:' and 'd:' lines");
    }
    return FiniteGLRack(FiniteRack(file.op), *file.u, *file.d);
  }

  FiniteRack parse_rack(std::string_view text) {
    return FiniteRack(parse_rack_file(text, "rack").op);
  }

  FiniteGroup parse_group(std::string_view text) {
    auto file = parse_rack_file(text, "group");
    if (file.u || file.d) {
      throw FormatError("group file must not contain u or d");
    }
    return FiniteGroup(file.op);
  }

  namespace {
    std::string write_table(std::string_view header, Table const& t) {
      std::string s = std::string(header) + "\nsize: "
                      + std::to_string(t.size()) + "\nop:\n";
      for (auto const& row : t) {
        s += format_row(row) + "\n";
      }
      return s;
    }
  }  // namespace

  std::string write_gl_rack(FiniteGLRack const& r) {
    return write_table("glrack", r.rack().table()) + "u: " + format_row(r.u())
           + "\nd: " + format_row(r.d()) + "\n";
  }

  std::string write_rack(FiniteRack const& r) {
    return write_table("rack", r.table());
  }

  std::string write_group(FiniteGroup const& g) {
    return write_table("group", g.table());
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw FormatError("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

}  // namespace glr
