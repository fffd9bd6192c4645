#include "glr/diagram.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <regex>
#include <sstream>

namespace glr {

  Event L(int level) {
    return {EventKind::left_cusp, level};
  }
  Event R(int level) {
    return {EventKind::right_cusp, level};
  }
  Event X(int level) {
    return {EventKind::crossing, level};
  }

  std::string to_string(Event e) {
    return static_cast<char>(e.kind) + std::to_string(e.level);
  }

  std::string to_string(std::vector<Event> const& events) {
    std::string s;
    for (std::size_t i = 0; i < events.size(); ++i) {
      s += (i == 0 ? "" : " ") + to_string(events[i]);
    }
    return s;
  }

  long first_invalid_event(std::vector<Event> const& events) {
    int k = 0;
    for (std::size_t j = 0; j < events.size(); ++j) {
      auto const [kind, i] = events[j];
      if (i < 1) {
        return static_cast<long>(j);
      }
      switch (kind) {
        case EventKind::left_cusp:
          if (i > k + 1) {
            return static_cast<long>(j);
          }
          k += 2;
          break;
        case EventKind::right_cusp:
          if (i > k - 1) {
            return static_cast<long>(j);
          }
          k -= 2;
          break;
        case EventKind::crossing:
          if (i > k - 1) {
            return static_cast<long>(j);
          }
          break;
      }
    }
    return k == 0 ? -1 : static_cast<long>(events.size());
  }

  StrandMap trace(std::vector<Event> const& events,
                  std::vector<int> const&   orientation) {
    if (auto bad = first_invalid_event(events); bad >= 0) {
      if (static_cast<std::size_t>(bad) == events.size()) {
        throw DomainError("front diagram ends with strands still open");
      }
      throw DomainError("event " + std::to_string(bad + 1) + " ("
                        + to_string(events[static_cast<std::size_t>(bad)])
                        + ") breaks the scanning rule");
    }
    StrandMap              m;
    std::vector<SegmentId> strands;
    auto                   open = [&](std::size_t j, int slot) {
      m.segments.push_back({j, 0, slot, 0, 0, true});
      return m.segments.size() - 1;
    };
    auto close = [&](SegmentId s, std::size_t j, int slot) {
      m.segments[s].right_event = j;
      m.segments[s].right_slot  = slot;
    };
    m.events.resize(events.size());
    for (std::size_t j = 0; j < events.size(); ++j) {
      m.width.push_back(static_cast<int>(strands.size()));
      auto const [kind, level] = events[j];
      auto const pos           = static_cast<std::size_t>(level - 1);
      auto&      inc           = m.events[j];
      if (kind == EventKind::left_cusp) {
        SegmentId lo = open(j, 0);
        SegmentId hi = open(j, 1);
        inc.out      = {lo, hi};
        strands.insert(strands.begin() + static_cast<long>(pos), {lo, hi});
        continue;
      }
      inc.in = {strands[pos], strands[pos + 1]};
      close(inc.in[0], j, 0);
      close(inc.in[1], j, 1);
      if (kind == EventKind::right_cusp) {
        strands.erase(strands.begin() + static_cast<long>(pos),
                      strands.begin() + static_cast<long>(pos) + 2);
      } else {
        inc.out          = {open(j, 0), open(j, 1)};
        strands[pos]     = inc.out[0];
        strands[pos + 1] = inc.out[1];
      }
    }
    m.width.push_back(0);

    std::vector<bool> seen(m.segments.size(), false);
    for (SegmentId first = 0; first < m.segments.size(); ++first) {
      if (seen[first]) {
        continue;
      }
      std::size_t const c = m.components++;
      int sign = c < orientation.size() ? orientation[c] : 1;
      if (sign != 1 && sign != -1) {
        throw DomainError("orientation signs must be + or -");
      }
      SegmentId s     = first;
      bool      right = true;
      while (!seen[s]) {
        seen[s]                 = true;
        m.segments[s].component = c;
        m.segments[s].rightward = right == (sign == 1);
        auto const& seg         = m.segments[s];
        if (right) {
          auto const& inc = m.events[seg.right_event];
          if (events[seg.right_event].kind == EventKind::right_cusp) {
            s     = inc.in[1 - seg.right_slot];
            right = false;
          } else {
            s = inc.out[1 - seg.right_slot];
          }
        } else {
          auto const& inc = m.events[seg.left_event];
          if (events[seg.left_event].kind == EventKind::left_cusp) {
            s     = inc.out[1 - seg.left_slot];
            right = true;
          } else {
            s = inc.in[1 - seg.left_slot];
          }
        }
      }
    }
    if (!orientation.empty() && orientation.size() != m.components) {
      throw DomainError("orientation has " + std::to_string(orientation.size())
                        + " signs but the diagram has "
                        + std::to_string(m.components) + " components");
    }
    return m;
  }

  FrontDiagram::FrontDiagram(std::vector<Event> events,
                             std::vector<int>   orientation)
      : events_(std::move(events)), map_(trace(events_, orientation)) {
    orientation_ = orientation.empty()
                       ? std::vector<int>(map_.components, 1)
                       : std::move(orientation);
  }

  FrontDiagram parse_diagram(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        raw;
    std::size_t        number = 0;
    std::optional<std::vector<Event>> events;
    std::optional<std::vector<int>>   orient;
    auto fail = [&](std::size_t column, std::string const& msg) {
      throw FormatError("line " + std::to_string(number) + ", column "
                        + std::to_string(column) + ": " + msg);
    };
    while (std::getline(in, raw)) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) {
        raw.erase(hash);
      }
      // tokens with their 1-based columns
      std::vector<std::pair<std::string, std::size_t>> toks;
      for (std::size_t i = 0; i < raw.size();) {
        if (std::isspace(static_cast<unsigned char>(raw[i]))) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) {
          ++j;
        }
        toks.emplace_back(raw.substr(i, j - i), i + 1);
        i = j;
      }
      if (toks.empty()) {
        continue;
      }
      auto const& key = toks[0].first;
      if (key == "front:" && !events) {
        events.emplace();
        for (std::size_t t = 1; t < toks.size(); ++t) {
          auto const& [tok, col] = toks[t];
          if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'R' && tok[0] != 'X')) {
            fail(col, "expected an event like L1, R2 or X3, got '" + tok + "'");
          }
          int  level = 0;
          auto res   = std::from_chars(tok.data() + 1, tok.data() + tok.size(), level);
          if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || level < 1) {
            fail(col, "bad level in '" + tok + "'");
          }
          events->push_back({static_cast<EventKind>(tok[0]), level});
        }
      } else if (key == "orient:" && !orient) {
        orient.emplace();
        for (std::size_t t = 1; t < toks.size(); ++t) {
          auto const& [tok, col] = toks[t];
          if (tok != "+" && tok != "-") {
            fail(col, "orientation must be '+' or '-', got '" + tok + "'");
          }
          orient->push_back(tok == "+" ? 1 : -1);
        }
      } else {
        fail(toks[0].second, "unexpected '" + key + "'");
      }
    }
    if (!events) {
      throw FormatError("missing 'front:' line");
    }
    if (auto bad = first_invalid_event(*events); bad >= 0) {
      if (static_cast<std::size_t>(bad) == events->size()) {
        throw FormatError("front diagram ends with strands still open");
      }
      throw FormatError("event " + std::to_string(bad + 1) + " ("
                        + to_string((*events)[static_cast<std::size_t>(bad)])
                        + ") breaks the scanning rule");
    }
    try {
      return FrontDiagram(std::move(*events), orient.value_or(std::vector<int>{}));
    } catch (DomainError const& e) {
      throw FormatError(e.what());
    }
  }

  std::string write_diagram(FrontDiagram const& d) {
    std::string s = "front: " + to_string(d.events()) + "\norient:";
    for (int o : d.orientation()) {
      s += o == 1 ? " +" : " -";
    }
    return s + "\n";
  }

  std::vector<Cusp> classify_cusps(FrontDiagram const& d) {
    auto const&       m = d.strands();
    std::vector<Cusp> out;
    for (std::size_t j = 0; j < d.events().size(); ++j) {
      auto const kind = d.events()[j].kind;
      if (kind == EventKind::crossing) {
        continue;
      }
      auto const& branches = kind == EventKind::left_cusp ? m.events[j].out
                                                          : m.events[j].in;
      SegmentId lo = branches[0], hi = branches[1];
      // At a left cusp the flow arrives on the leftward branch; at a right
      // cusp on the rightward one.
      bool const lo_right = m.segments[lo].rightward;
      bool const arrive_lo = kind == EventKind::left_cusp ? !lo_right : lo_right;
      out.push_back({j, arrive_lo ? CuspType::up : CuspType::down,
                     arrive_lo ? lo : hi, arrive_lo ? hi : lo});
    }
    return out;
  }

  std::vector<Crossing> crossings(FrontDiagram const& d) {
    auto const&           m = d.strands();
    std::vector<Crossing> out;
    for (std::size_t j = 0; j < d.events().size(); ++j) {
      if (d.events()[j].kind != EventKind::crossing) {
        continue;
      }
      auto const& inc = m.events[j];
      // over: upper input to lower output; under: lower input to upper output
      bool const over_right  = m.segments[inc.in[1]].rightward;
      bool const under_right = m.segments[inc.in[0]].rightward;
      Crossing c{};
      c.event     = j;
      c.sign      = over_right == under_right ? 1 : -1;
      c.over_in   = over_right ? inc.in[1] : inc.out[0];
      c.over_out  = over_right ? inc.out[0] : inc.in[1];
      c.under_in  = under_right ? inc.in[0] : inc.out[1];
      c.under_out = under_right ? inc.out[1] : inc.in[0];
      out.push_back(c);
    }
    return out;
  }

  std::vector<int> crossing_signs(FrontDiagram const& d) {
    std::vector<int> s;
    for (auto const& c : crossings(d)) {
      s.push_back(c.sign);
    }
    return s;
  }

  ClassicalInvariants classical_invariants(FrontDiagram const& d) {
    int writhe = 0;
    for (int s : crossing_signs(d)) {
      writhe += s;
    }
    int up = 0, down = 0;
    for (auto const& c : classify_cusps(d)) {
      (c.type == CuspType::up ? up : down) += 1;
    }
    return {writhe, writhe - (up + down) / 2, (down - up) / 2};
  }

  FrontDiagram standard_diagram(StandardKnot kind, int m) {
    if (m < 1) {
      throw DomainError("standard_diagram: m must be positive");
    }
    std::vector<Event> w{L(1)};
    switch (kind) {
      case StandardKnot::unknot_one_chain:
        for (int t = 1; t < m; ++t) {
          w.insert(w.end(), {L(2), R(1)});
        }
        break;
      case StandardKnot::unknot_balanced:
        if (m % 2 == 1) {
          for (int t = 0; t < (m - 1) / 2; ++t) {
            w.insert(w.end(), {L(2), R(1)});
          }
          for (int t = 0; t < (m - 1) / 2; ++t) {
            w.insert(w.end(), {L(3), R(2)});
          }
        } else {
          // tb + r is odd for every knot, so (-m, 0) is out of reach when m is
          // even. One crossing lets the cusps still read u^m d^m.
          w = {L(1), L(3), X(2), R(1)};
          for (int t = 1; t < m / 2; ++t) {
            w.insert(w.end(), {L(2), R(1)});
          }
          for (int t = 1; t < m / 2; ++t) {
            w.insert(w.end(), {L(3), R(2)});
          }
        }
        break;
      case StandardKnot::trefoil:
        return FrontDiagram({L(1), L(3), X(2), X(2), X(2), R(3), R(1)});
    }
    w.push_back(R(1));
    return FrontDiagram(std::move(w));
  }

  FrontDiagram standard_diagram(std::string_view name) {
    if (name == "trefoil") {
      return standard_diagram(StandardKnot::trefoil);
    }
    static std::regex const re(R"(U\((\d+),(\d+)\))");
    std::cmatch             mt;
    if (std::regex_match(name.begin(), name.end(), mt, re)) {
      int a = std::stoi(mt[1]), b = std::stoi(mt[2]);
      if (a == 1 && b % 2 == 1) {
        return standard_diagram(StandardKnot::unknot_one_chain, (b + 1) / 2);
      }
      if (a == b && a >= 1) {
        return standard_diagram(StandardKnot::unknot_balanced, a);
      }
    }
    throw FormatError("unknown standard diagram '" + std::string(name)
                      + "' (use trefoil, U(1,2m-1) or U(m,m))");
  }

}  // namespace glr
