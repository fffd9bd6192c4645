#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "glr/error.hpp"

namespace glr {

  // Front diagrams as Morse event words read left to right. Levels count
  // strands from the bottom starting at 1. L(i) opens a cusp whose branches
  // occupy levels i and i+1, R(i) closes the strands at levels i and i+1, and
  // X(i) crosses them. At a crossing the strand descending from level i+1 to
  // level i has the lower slope and is therefore the over-strand.
  enum class EventKind : char { left_cusp = 'L', right_cusp = 'R', crossing = 'X' };

  struct Event {
    EventKind kind;
    int       level;

    auto operator<=>(Event const&) const = default;
  };

  Event       L(int level);
  Event       R(int level);
  Event       X(int level);
  std::string to_string(Event e);
  std::string to_string(std::vector<Event> const& events);

  // Index of the first event that breaks the scanning rule, or events.size()
  // when the word is valid but does not end with zero strands, or -1 when
  // the word is valid.
  long first_invalid_event(std::vector<Event> const& events);

  using SegmentId = std::size_t;

  struct Segment {
    std::size_t left_event;
    std::size_t right_event;
    int         left_slot;   // 0 = lower output of left_event, 1 = upper
    int         right_slot;  // 0 = lower input of right_event, 1 = upper
    std::size_t component;
    bool        rightward;
  };

  struct EventIncidence {
    std::vector<SegmentId> in;   // entering from the left, lower first
    std::vector<SegmentId> out;  // leaving to the right, lower first
  };

  struct StrandMap {
    std::vector<Segment>        segments;
    std::vector<EventIncidence> events;
    std::size_t                 components = 0;
    // strand count just before each event, plus the final count
    std::vector<int> width;
  };

  class FrontDiagram {
   public:
    // Throws DomainError if the word breaks the scanning rule or the number
    // of signs differs from the number of components. An empty orientation
    // means every component is '+'.
    explicit FrontDiagram(std::vector<Event> events,
                          std::vector<int>   orientation = {});

    std::vector<Event> const& events() const noexcept {
      return events_;
    }
    // +1 or -1 per component, in discovery order.
    std::vector<int> const& orientation() const noexcept {
      return orientation_;
    }
    StrandMap const& strands() const noexcept {
      return map_;
    }
    std::size_t components() const noexcept {
      return map_.components;
    }

    bool operator==(FrontDiagram const& other) const {
      return events_ == other.events_ && orientation_ == other.orientation_;
    }

   private:
    std::vector<Event> events_;
    std::vector<int>   orientation_;
    StrandMap          map_;
  };

  // Segments, incidences and directions. '+' directs the component's first
  // discovered segment rightward.
  StrandMap trace(std::vector<Event> const& events,
                  std::vector<int> const&   orientation = {});

  FrontDiagram parse_diagram(std::string_view text);
  std::string  write_diagram(FrontDiagram const& d);

  enum class CuspType { up, down };

  struct Cusp {
    std::size_t event;
    CuspType    type;
    SegmentId   incoming;
    SegmentId   outgoing;
  };

  // Up when the outgoing branch lies above the incoming one.
  std::vector<Cusp> classify_cusps(FrontDiagram const& d);

  struct Crossing {
    std::size_t event;
    int         sign;
    SegmentId   over_in;
    SegmentId   over_out;
    SegmentId   under_in;
    SegmentId   under_out;
  };

  std::vector<Crossing> crossings(FrontDiagram const& d);
  std::vector<int>      crossing_signs(FrontDiagram const& d);

  struct ClassicalInvariants {
    int writhe;
    int tb;
    int rotation;

    bool operator==(ClassicalInvariants const&) const = default;
  };

  ClassicalInvariants classical_invariants(FrontDiagram const& d);

  enum class StandardKnot { unknot_one_chain, unknot_balanced, trefoil };

  // unknot_one_chain: U(1, 2m-1); unknot_balanced: U(m, m); trefoil ignores m.
  FrontDiagram standard_diagram(StandardKnot kind, int m = 1);
  // Accepts "U(1,3)", "U(3,3)", "trefoil".
  FrontDiagram standard_diagram(std::string_view name);

  enum class MoveKind { LR1a, LR1b, LR2, LR3, FarCommute };

  // forward: insert (LR1), expand a cusp (LR2), X(i)X(i+1)X(i) -> X(i+1)X(i)X(i+1)
  // (LR3). backward undoes. FarCommute ignores the direction.
  enum class MoveDirection { forward, backward };

  struct MoveInstance {
    MoveKind      kind;
    std::size_t   position;
    MoveDirection direction = MoveDirection::forward;
    int           level     = 0;  // strand level for LR1 insertion
    int           variant   = 0;  // 0..3 for LR2

    bool operator==(MoveInstance const&) const = default;
  };

  std::string to_string(MoveInstance const& m);

  // Throws MoveNotApplicable when the pattern does not match. Orientations of
  // the components are carried across the move.
  FrontDiagram apply_move(FrontDiagram const& d, MoveInstance const& move);

  // Every applicable non-insertion move, plus every insertion when asked.
  std::vector<MoveInstance> applicable_moves(FrontDiagram const& d,
                                             bool include_insertions);

  FrontDiagram random_moves(FrontDiagram const& d,
                            std::size_t         count,
                            std::uint64_t       seed);

  // Inserts a zig-zag (L(i), R(i+1)) or (L(i+1), R(i)) on the strand at
  // `level` before event `position`. Not a Legendrian isotopy.
  FrontDiagram stabilize(FrontDiagram const& d,
                         std::size_t         position,
                         int                 level,
                         bool                lower_cusp_first);

}  // namespace glr
