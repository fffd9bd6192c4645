#include <algorithm>
#include <map>
#include <numeric>

#include "glr/presentation.hpp"
#include "scan.hpp"

namespace glr {

  GLPresentation gl_presentation(FrontDiagram const& d) {
    GLPresentation p;
    p.generators = d.strands().segments.size();
    auto g       = [](SegmentId s) { return GLWord::gen(s); };
    for (auto const& c : crossings(d)) {
      p.relations.push_back({RelationKind::crossing, g(c.under_out),
                             GLWord::op(g(c.under_in), g(c.over_in), c.sign), c.event});
      p.relations.push_back({RelationKind::over_strand, g(c.over_out), g(c.over_in), c.event});
    }
    for (auto const& c : classify_cusps(d)) {
      bool const up = c.type == CuspType::up;
      p.relations.push_back({up ? RelationKind::up_cusp : RelationKind::down_cusp,
                             g(c.outgoing),
                             up ? GLWord::up(g(c.incoming)) : GLWord::down(g(c.incoming)),
                             c.event});
    }
    std::stable_sort(p.relations.begin(), p.relations.end(),
                     [](GLRelation const& a, GLRelation const& b) { return a.event < b.event; });
    return p;
  }

  namespace {
    std::string generator_list(std::size_t n) {
      std::string s = "gens:";
      for (std::size_t i = 0; i < n; ++i) {
        s += " x" + std::to_string(i);
      }
      return s;
    }
  }  // namespace

  std::string GLPresentation::to_string() const {
    std::string s = generator_list(generators) + "\nrels:";
    for (std::size_t i = 0; i < relations.size(); ++i) {
      s += (i == 0 ? " " : ", ") + relations[i].lhs.to_string() + " = "
           + relations[i].rhs.to_string();
    }
    return s + "\n";
  }

  std::string QuandlePresentation::to_string() const {
    std::string s = generator_list(generators) + "\nrels:";
    for (std::size_t i = 0; i < relations.size(); ++i) {
      s += (i == 0 ? " " : ", ") + relations[i].first.to_string() + " = "
           + relations[i].second.to_string();
    }
    return s + "\n";
  }

  namespace {
    GLWord erase_ud(GLWord const& w, std::vector<std::size_t> const& rename) {
      switch (w.node()) {
        case GLWord::Node::gen: return GLWord::gen(rename[w.generator()]);
        case GLWord::Node::up:
        case GLWord::Node::down: return erase_ud(w.left(), rename);
        default:
          return GLWord::op(erase_ud(w.left(), rename), erase_ud(w.right(), rename),
                            w.node() == GLWord::Node::op ? 1 : -1);
      }
    }

    std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    }
  }  // namespace

  QuandlePresentation underlying_quandle_presentation(GLPresentation const& p) {
    std::vector<std::size_t> parent(p.generators);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::size_t> identity = parent;
    for (auto const& rel : p.relations) {
      auto lhs = erase_ud(rel.lhs, identity), rhs = erase_ud(rel.rhs, identity);
      if (lhs.node() == GLWord::Node::gen && rhs.node() == GLWord::Node::gen) {
        auto a = find(parent, lhs.generator()), b = find(parent, rhs.generator());
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
    QuandlePresentation q;
    std::map<std::size_t, std::size_t> compact;
    for (std::size_t s = 0; s < p.generators; ++s) {
      auto root = find(parent, s);
      auto it   = compact.try_emplace(root, compact.size()).first;
      q.generator_of_segment.push_back(it->second);
    }
    q.generators = compact.size();
    for (auto const& rel : p.relations) {
      auto lhs = erase_ud(rel.lhs, q.generator_of_segment);
      auto rhs = erase_ud(rel.rhs, q.generator_of_segment);
      if (!(lhs == rhs)) {
        q.relations.emplace_back(lhs, rhs);
      }
    }
    return q;
  }

  namespace detail {
    namespace {
      struct Step {
        EventKind   kind;
        std::size_t pos;
        int         in_slot  = 0;  // cusps: branch the flow arrives on
        bool        up       = false;
        bool        under_right = false;
        int         sign     = 1;
      };

      std::vector<Step> plan(FrontDiagram const& d) {
        auto const&       m = d.strands();
        std::vector<Step> steps;
        auto              cusps = classify_cusps(d);
        auto              xs    = crossings(d);
        std::size_t       ci = 0, xi = 0;
        for (std::size_t j = 0; j < d.events().size(); ++j) {
          auto const e = d.events()[j];
          Step       s{e.kind, static_cast<std::size_t>(e.level - 1)};
          if (e.kind == EventKind::crossing) {
            auto const& c = xs[xi++];
            s.sign        = c.sign;
            s.under_right = c.under_in == m.events[j].in[0];
          } else {
            auto const& c   = cusps[ci++];
            auto const& br  = e.kind == EventKind::left_cusp ? m.events[j].out : m.events[j].in;
            s.in_slot       = c.incoming == br[0] ? 0 : 1;
            s.up            = c.type == CuspType::up;
          }
          steps.push_back(s);
        }
        return steps;
      }

      std::int64_t reduce(std::int64_t e, std::int64_t modulus) {
        if (modulus == 0) {
          return e;
        }
        e %= modulus;
        return e < 0 ? e + modulus : e;
      }
    }  // namespace

    ExponentCounts scan_colorings(FrontDiagram const& d, FiniteGLRack const& r,
                                  CrossingWeight const& weight, std::int64_t modulus) {
      using State = std::vector<Element>;
      std::map<State, ExponentCounts> states{{State{}, ExponentCounts{{0, 1}}}};
      auto const                      n = r.size();
      for (auto const& s : plan(d)) {
        std::map<State, ExponentCounts> next;
        auto merge = [&next](State&& key, ExponentCounts const& v, std::int64_t shift,
                             std::int64_t modulus) {
          auto& slot = next[std::move(key)];
          for (auto [e, c] : v) {
            slot[reduce(e + shift, modulus)] += c;
          }
        };
        for (auto const& [state, value] : states) {
          switch (s.kind) {
            case EventKind::left_cusp:
              for (Element x = 0; x < n; ++x) {
                Element const y = s.up ? r.up(x) : r.down(x);
                State         t = state;
                Element const lo = s.in_slot == 0 ? x : y;
                Element const hi = s.in_slot == 0 ? y : x;
                t.insert(t.begin() + static_cast<long>(s.pos), {lo, hi});
                merge(std::move(t), value, 0, modulus);
              }
              break;
            case EventKind::right_cusp: {
              Element const x = state[s.pos + static_cast<std::size_t>(s.in_slot)];
              Element const y = state[s.pos + 1 - static_cast<std::size_t>(s.in_slot)];
              if ((s.up ? r.up(x) : r.down(x)) != y) {
                break;
              }
              State t = state;
              t.erase(t.begin() + static_cast<long>(s.pos),
                      t.begin() + static_cast<long>(s.pos) + 2);
              merge(std::move(t), value, 0, modulus);
              break;
            }
            case EventKind::crossing: {
              Element const lo = state[s.pos], over = state[s.pos + 1];
              Element const hi = r.op(lo, over, s.under_right ? s.sign : -s.sign);
              State         t  = state;
              t[s.pos]         = over;
              t[s.pos + 1]     = hi;
              std::int64_t const w =
                  weight ? weight(s.sign, s.under_right ? lo : hi, over) : 0;
              merge(std::move(t), value, w, modulus);
              break;
            }
          }
        }
        states = std::move(next);
      }
      auto it = states.find(State{});
      return it == states.end() ? ExponentCounts{} : it->second;
    }
  }  // namespace detail

  std::uint64_t count_colorings(FrontDiagram const& d, FiniteGLRack const& r) {
    std::uint64_t total = 0;
    for (auto [e, c] : detail::scan_colorings(d, r, nullptr, 0)) {
      total += c;
    }
    return total;
  }

  std::vector<std::uint64_t> coloring_profile(FrontDiagram const& d,
                                              std::vector<FiniteGLRack> const& racks) {
    std::vector<std::uint64_t> out;
    for (auto const& r : racks) {
      out.push_back(count_colorings(d, r));
    }
    return out;
  }

  std::vector<std::vector<Element>> list_colorings(FrontDiagram const& d,
                                                   FiniteGLRack const& r) {
    // Depth-first over the events, choosing a color at each left cusp.
    auto const&                       m     = d.strands();
    std::vector<std::vector<Element>> out;
    std::vector<Element>              color(m.segments.size(), 0);
    auto const                        cusps = classify_cusps(d);
    std::map<std::size_t, Cusp>       cusp_at;
    for (auto const& c : cusps) {
      cusp_at.emplace(c.event, c);
    }
    std::map<std::size_t, Crossing> crossing_at;
    for (auto const& c : crossings(d)) {
      crossing_at.emplace(c.event, c);
    }
    auto set = [&](SegmentId s, Element x) { color[s] = x; };
    auto rec = [&](auto&& self, std::size_t j) -> void {
      if (j == d.events().size()) {
        out.push_back(color);
        return;
      }
      auto const kind = d.events()[j].kind;
      if (kind == EventKind::left_cusp) {
        auto const& c = cusp_at.at(j);
        for (Element x = 0; x < r.size(); ++x) {
          set(c.incoming, x);
          set(c.outgoing, c.type == CuspType::up ? r.up(x) : r.down(x));
          self(self, j + 1);
        }
        return;
      }
      if (kind == EventKind::right_cusp) {
        auto const& c = cusp_at.at(j);
        Element     y = c.type == CuspType::up ? r.up(color[c.incoming])
                                               : r.down(color[c.incoming]);
        if (y == color[c.outgoing]) {
          self(self, j + 1);
        }
        return;
      }
      auto const& c    = crossing_at.at(j);
      auto const& inc  = m.events[j];
      Element     over = color[inc.in[1]];
      set(inc.out[0], over);
      int const   sign = c.under_in == inc.in[0] ? c.sign : -c.sign;
      set(inc.out[1], r.op(color[inc.in[0]], over, sign));
      self(self, j + 1);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace glr
