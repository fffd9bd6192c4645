#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <set>

#include "glr/diagram.hpp"

namespace glr {

  namespace {
    using Word = std::vector<Event>;

    [[noreturn]] void not_applicable(MoveInstance const& m, std::string const& why) {
      throw MoveNotApplicable(to_string(m) + ": " + why);
    }

    bool matches(Word const& w, std::size_t p, Word const& pattern) {
      return p + pattern.size() <= w.size()
             && std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<long>(p));
    }

    // Rebuilds orientations after events [p, p + old_len) became new_len
    // events. Each new component is matched to the old one through an event
    // outside the window that it touches.
    FrontDiagram rebuild(FrontDiagram const& old, Word events, std::size_t p,
                         std::size_t old_len, std::size_t new_len) {
      if (first_invalid_event(events) >= 0) {
        throw MoveNotApplicable("result breaks the scanning rule");
      }
      auto const  fresh = trace(events);
      auto const& om    = old.strands();
      auto        old_index = [&](std::size_t e) -> long {
        if (e < p) {
          return static_cast<long>(e);
        }
        if (e >= p + new_len) {
          return static_cast<long>(e - new_len + old_len);
        }
        return -1;
      };
      std::vector<int> orient(fresh.components, 0);
      for (SegmentId s = 0; s < fresh.segments.size(); ++s) {
        auto const& seg = fresh.segments[s];
        if (orient[seg.component] != 0) {
          continue;
        }
        SegmentId prior;
        if (long e = old_index(seg.left_event); e >= 0) {
          prior = om.events[static_cast<std::size_t>(e)].out[static_cast<std::size_t>(seg.left_slot)];
        } else if (long f = old_index(seg.right_event); f >= 0) {
          prior = om.events[static_cast<std::size_t>(f)].in[static_cast<std::size_t>(seg.right_slot)];
        } else {
          continue;
        }
        orient[seg.component] =
            om.segments[prior].rightward == seg.rightward ? 1 : -1;
      }
      for (int o : orient) {
        if (o == 0) {
          throw MoveNotApplicable("component lies entirely inside the move");
        }
      }
      return FrontDiagram(std::move(events), std::move(orient));
    }

    FrontDiagram replace(FrontDiagram const& d, std::size_t p, std::size_t old_len,
                         Word const& repl) {
      Word w = d.events();
      w.erase(w.begin() + static_cast<long>(p), w.begin() + static_cast<long>(p + old_len));
      w.insert(w.begin() + static_cast<long>(p), repl.begin(), repl.end());
      return rebuild(d, std::move(w), p, old_len, repl.size());
    }

    Word lr1_pattern(MoveKind k, int i) {
      return k == MoveKind::LR1a ? Word{L(i + 1), X(i), R(i + 1)}
                                 : Word{L(i), X(i + 1), R(i)};
    }

    // cusp event and its three-event expansion for LR2 variant v at level i
    std::pair<Event, Word> lr2_pattern(int v, int i) {
      switch (v) {
        case 0: return {L(i + 1), {L(i), X(i + 1), X(i)}};
        case 1: return {L(i), {L(i + 1), X(i), X(i + 1)}};
        case 2: return {R(i + 1), {X(i), X(i + 1), R(i)}};
        default: return {R(i), {X(i + 1), X(i), R(i + 1)}};
      }
    }

    // Level i of the LR2 pattern, read from the single cusp event.
    int lr2_level_from_cusp(int v, Event e) {
      return (v == 0 || v == 2) ? e.level - 1 : e.level;
    }

    // Applies one event to a row of strand tokens; `fresh` labels new strands.
    bool step(std::vector<long>& tokens, Event e, long fresh,
              std::array<long, 2>& touched) {
      auto const pos = static_cast<std::size_t>(e.level - 1);
      int const  k   = static_cast<int>(tokens.size());
      switch (e.kind) {
        case EventKind::left_cusp:
          if (e.level < 1 || e.level > k + 1) {
            return false;
          }
          tokens.insert(tokens.begin() + static_cast<long>(pos), {fresh, fresh + 1});
          touched = {fresh, fresh + 1};
          return true;
        case EventKind::right_cusp:
          if (e.level < 1 || e.level > k - 1) {
            return false;
          }
          touched = {tokens[pos], tokens[pos + 1]};
          tokens.erase(tokens.begin() + static_cast<long>(pos),
                       tokens.begin() + static_cast<long>(pos) + 2);
          return true;
        case EventKind::crossing:
          if (e.level < 1 || e.level > k - 1) {
            return false;
          }
          touched = {tokens[pos], tokens[pos + 1]};
          std::swap(tokens[pos], tokens[pos + 1]);
          return true;
      }
      return false;
    }

    // Levels (e2', e1') realising the same planar picture with the two
    // events exchanged, if the events act on disjoint strands.
    std::optional<std::pair<Event, Event>> commuted(int width, Event e1, Event e2) {
      std::vector<long> base(static_cast<std::size_t>(width));
      for (int t = 0; t < width; ++t) {
        base[static_cast<std::size_t>(t)] = t;
      }
      constexpr long f1 = 1000000, f2 = 2000000;
      auto            target = base;
      std::array<long, 2> t1{}, t2{};
      if (!step(target, e1, f1, t1) || !step(target, e2, f2, t2)) {
        return std::nullopt;
      }
      if (std::find(t1.begin(), t1.end(), t2[0]) != t1.end()
          || std::find(t1.begin(), t1.end(), t2[1]) != t1.end()) {
        return std::nullopt;
      }
      int const top = width + 4;
      for (int a = 1; a <= top; ++a) {
        for (int b = 1; b <= top; ++b) {
          Event const e2p{e2.kind, a}, e1p{e1.kind, b};
          auto        row = base;
          std::array<long, 2> s2{}, s1{};
          if (!step(row, e2p, f2, s2) || !step(row, e1p, f1, s1)) {
            continue;
          }
          auto same = [](std::array<long, 2> x, std::array<long, 2> y) {
            std::sort(x.begin(), x.end());
            std::sort(y.begin(), y.end());
            return x == y;
          };
          if (row == target && same(s1, t1) && same(s2, t2)) {
            return std::pair{e2p, e1p};
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  std::string to_string(MoveInstance const& m) {
    static char const* const names[] = {"LR1a", "LR1b", "LR2", "LR3", "commute"};
    std::string s = names[static_cast<int>(m.kind)];
    if (m.kind != MoveKind::FarCommute) {
      s += m.direction == MoveDirection::forward ? "+" : "-";
    }
    s += "@" + std::to_string(m.position);
    if (m.kind == MoveKind::LR1a || m.kind == MoveKind::LR1b) {
      s += " level " + std::to_string(m.level);
    }
    if (m.kind == MoveKind::LR2) {
      s += " variant " + std::to_string(m.variant);
    }
    return s;
  }

  FrontDiagram apply_move(FrontDiagram const& d, MoveInstance const& m) {
    auto const&       w = d.events();
    std::size_t const p = m.position;
    bool const        fwd = m.direction == MoveDirection::forward;
    if (p > w.size() || (p == w.size() && !(fwd && (m.kind == MoveKind::LR1a
                                                    || m.kind == MoveKind::LR1b)))) {
      not_applicable(m, "position out of range");
    }
    switch (m.kind) {
      case MoveKind::LR1a:
      case MoveKind::LR1b: {
        if (fwd) {
          if (m.level < 1 || m.level > d.strands().width[p]) {
            not_applicable(m, "no strand at that level");
          }
          return replace(d, p, 0, lr1_pattern(m.kind, m.level));
        }
        if (w[p].kind != EventKind::left_cusp) {
          not_applicable(m, "no kink here");
        }
        int const i = m.kind == MoveKind::LR1a ? w[p].level - 1 : w[p].level;
        if (i < 1 || !matches(w, p, lr1_pattern(m.kind, i))) {
          not_applicable(m, "no kink here");
        }
        return replace(d, p, 3, {});
      }
      case MoveKind::LR2: {
        if (m.variant < 0 || m.variant > 3) {
          not_applicable(m, "variant must be 0..3");
        }
        if (fwd) {
          int const i = lr2_level_from_cusp(m.variant, w[p]);
          auto [cusp, expansion] = lr2_pattern(m.variant, i);
          if (i < 1 || w[p] != cusp) {
            not_applicable(m, "cusp does not match");
          }
          return replace(d, p, 1, expansion);
        }
        for (int i = 1; i <= d.strands().width[p] + 2; ++i) {
          auto [cusp, expansion] = lr2_pattern(m.variant, i);
          if (matches(w, p, expansion)) {
            return replace(d, p, 3, {cusp});
          }
        }
        not_applicable(m, "pattern does not match");
      }
      case MoveKind::LR3: {
        if (w[p].kind != EventKind::crossing) {
          not_applicable(m, "no triple crossing here");
        }
        int const i  = fwd ? w[p].level : w[p].level - 1;
        Word      lo = {X(i), X(i + 1), X(i)}, hi = {X(i + 1), X(i), X(i + 1)};
        if (i < 1 || !matches(w, p, fwd ? lo : hi)) {
          not_applicable(m, "no triple crossing here");
        }
        return replace(d, p, 3, fwd ? hi : lo);
      }
      case MoveKind::FarCommute: {
        if (p + 1 >= w.size()) {
          not_applicable(m, "needs two events");
        }
        auto c = commuted(d.strands().width[p], w[p], w[p + 1]);
        if (!c) {
          not_applicable(m, "events share a strand");
        }
        return replace(d, p, 2, {c->first, c->second});
      }
    }
    not_applicable(m, "unknown move");
  }

  std::vector<MoveInstance> applicable_moves(FrontDiagram const& d,
                                             bool include_insertions) {
    std::vector<MoveInstance> out;
    auto const&               w = d.events();
    auto try_add = [&](MoveInstance const& m) {
      try {
        apply_move(d, m);
        out.push_back(m);
      } catch (MoveNotApplicable const&) {
      }
    };
    for (std::size_t p = 0; p <= w.size(); ++p) {
      if (include_insertions) {
        for (int lvl = 1; lvl <= d.strands().width[p]; ++lvl) {
          try_add({MoveKind::LR1a, p, MoveDirection::forward, lvl, 0});
          try_add({MoveKind::LR1b, p, MoveDirection::forward, lvl, 0});
        }
      }
      if (p == w.size()) {
        break;
      }
      for (auto k : {MoveKind::LR1a, MoveKind::LR1b}) {
        try_add({k, p, MoveDirection::backward, 0, 0});
      }
      for (int v = 0; v < 4; ++v) {
        if (include_insertions) {
          try_add({MoveKind::LR2, p, MoveDirection::forward, 0, v});
        }
        try_add({MoveKind::LR2, p, MoveDirection::backward, 0, v});
      }
      try_add({MoveKind::LR3, p, MoveDirection::forward, 0, 0});
      try_add({MoveKind::LR3, p, MoveDirection::backward, 0, 0});
      try_add({MoveKind::FarCommute, p, MoveDirection::forward, 0, 0});
    }
    return out;
  }

  FrontDiagram random_moves(FrontDiagram const& start, std::size_t count,
                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&rng](std::size_t n) {
      return static_cast<std::size_t>(rng() % n);
    };
    // Growing moves are suspended once the word is this much longer than the
    // input, which keeps later coloring counts cheap.
    std::size_t const cap = start.events().size() + 18;
    FrontDiagram      d   = start;
    for (std::size_t step = 0; step < count; ++step) {
      bool const grow = d.events().size() < cap;
      auto const all  = applicable_moves(d, grow);
      // categories: LR1 insert, LR1 delete, LR2 expand, LR2 contract, LR3, commute
      std::array<std::vector<MoveInstance>, 6> cat;
      for (auto const& m : all) {
        bool const fwd = m.direction == MoveDirection::forward;
        switch (m.kind) {
          case MoveKind::LR1a:
          case MoveKind::LR1b: cat[fwd ? 0 : 1].push_back(m); break;
          case MoveKind::LR2: cat[fwd ? 2 : 3].push_back(m); break;
          case MoveKind::LR3: cat[4].push_back(m); break;
          case MoveKind::FarCommute: cat[5].push_back(m); break;
        }
      }
      std::vector<std::size_t> live;
      for (std::size_t c = 0; c < cat.size(); ++c) {
        if (!cat[c].empty()) {
          live.push_back(c);
        }
      }
      if (live.empty()) {
        break;
      }
      auto const& chosen = cat[live[pick(live.size())]];
      d = apply_move(d, chosen[pick(chosen.size())]);
    }
    return d;
  }

  FrontDiagram stabilize(FrontDiagram const& d, std::size_t position, int level,
                         bool lower_cusp_first) {
    if (position > d.events().size() || level < 1
        || level > d.strands().width[position]) {
      throw DomainError("stabilize: no strand at level " + std::to_string(level)
                        + " before event " + std::to_string(position));
    }
    Word const zig = lower_cusp_first ? Word{L(level), R(level + 1)}
                                      : Word{L(level + 1), R(level)};
    return replace(d, position, 0, zig);
  }

}  // namespace glr
