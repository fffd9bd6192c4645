#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "glr/algebra.hpp"
#include "glr/diagram.hpp"
#include "glr/smith.hpp"

namespace glr {

  // Word in the free GL-rack on generators 0, 1, ... Immutable; subtrees are
  // shared.
  class GLWord {
   public:
    enum class Node { gen, op, inv_op, up, down };

    static GLWord gen(std::size_t g);
    // a * b for sign +1, a *^-1 b for sign -1
    static GLWord op(GLWord const& a, GLWord const& b, int sign = 1);
    static GLWord up(GLWord const& a);
    static GLWord down(GLWord const& a);

    Node          node() const;
    std::size_t   generator() const;  // gen nodes only
    GLWord const& left() const;       // op nodes, and the argument of u/d
    GLWord const& right() const;      // op nodes only

    // x3, u(x0), (x1 * x2) / x0
    std::string to_string() const;

    bool operator==(GLWord const& other) const;

   private:
    struct Rep;
    explicit GLWord(std::shared_ptr<Rep const> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<Rep const> rep_;
  };

  // u^k d^l((..(x_1 *^e_1 x_2) ..) *^e_{r-1} x_r). spine[0].second is unused.
  struct NormalForm {
    int                                      k = 0;
    int                                      l = 0;
    std::vector<std::pair<std::size_t, int>> spine;

    bool operator==(NormalForm const&) const = default;
  };

  NormalForm normal_form_view(GLWord const& w);
  GLWord     to_word(NormalForm const& nf);
  // Left-associated form with every u and d outermost. Equal normal forms
  // imply equal words; the converse is not decided.
  GLWord normal_form(GLWord const& w);

  // Throws DomainError if a generator has no entry in `assignment`.
  Element evaluate_word(GLWord const& w, FiniteGLRack const& r,
                        std::vector<Element> const& assignment);

  enum class RelationKind { crossing, over_strand, up_cusp, down_cusp };

  struct GLRelation {
    RelationKind kind;
    GLWord       lhs;
    GLWord       rhs;
    std::size_t  event;
  };

  // One generator per segment. Each crossing gives the under-strand relation
  // and the identification of the two over-strand segments; each cusp gives
  // outgoing = u(incoming) or outgoing = d(incoming).
  struct GLPresentation {
    std::size_t             generators = 0;
    std::vector<GLRelation> relations;

    std::string to_string() const;
  };

  GLPresentation gl_presentation(FrontDiagram const& d);

  // The same relations with u and d erased, generator identifications
  // eliminated and syntactically trivial relations dropped.
  struct QuandlePresentation {
    std::size_t                           generators = 0;
    std::vector<std::pair<GLWord, GLWord>> relations;
    std::vector<std::size_t>              generator_of_segment;

    std::string to_string() const;
  };

  QuandlePresentation underlying_quandle_presentation(GLPresentation const& p);

  std::uint64_t count_colorings(FrontDiagram const& d, FiniteGLRack const& r);
  // Colorings as segment -> element maps, in lexicographic order.
  std::vector<std::vector<Element>> list_colorings(FrontDiagram const& d,
                                                   FiniteGLRack const& r);
  std::vector<std::uint64_t> coloring_profile(FrontDiagram const& d,
                                              std::vector<FiniteGLRack> const& racks);

  using GroupWord = std::vector<std::pair<std::size_t, int>>;  // (generator, +-1)

  struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<GroupWord>   relators;

    std::string to_string() const;
  };

  GroupWord free_reduce(GroupWord w);
  // Free reduction followed by cancellation of inverse pairs at the ends.
  GroupWord cyclic_reduce(GroupWord w);

  GroupPresentation env_of_gl_rack(FiniteGLRack const& r);
  GroupPresentation env_of_presentation(GLPresentation const& p);
  // Merges generators along relators of the form a b^-1 until none remain.
  GroupPresentation collapse_ud(GroupPresentation const& p);
  AbGroupInvariants abelianization(GroupPresentation const& p);

}  // namespace glr
