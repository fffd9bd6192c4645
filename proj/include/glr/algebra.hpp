#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "glr/error.hpp"

namespace glr {

  // Elements of finite structures are 0-based indices.
  using Element     = std::size_t;
  using Permutation = std::vector<Element>;
  // Raw n x n operation table, row x, column y holds x * y.
  using Table = std::vector<std::vector<Element>>;

  // Search caps. GLR_CAP in the environment overrides max_order.
  struct Limits {
    std::size_t max_order  = 8;
    std::size_t max_tuples = 1'000'000;

    static Limits from_env();
  };

  namespace perm {
    Permutation identity(std::size_t n);
    bool        is_permutation(std::vector<Element> const& p);
    // (a o b)(x) = a(b(x))
    Permutation compose(Permutation const& a, Permutation const& b);
    Permutation inverse(Permutation const& p);
    Permutation power(Permutation const& p, long k);
    std::string to_string(Permutation const& p);
  }  // namespace perm

  struct Violation {
    std::string          axiom;
    std::vector<Element> witness;
  };

  struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
    std::string to_string() const;
  };

  // Checks column bijectivity and right self-distributivity. Throws
  // FormatError when the table is not square or has out-of-range entries.
  ValidationReport validate_rack(Table const& table);

  class FiniteRack {
   public:
    // Throws FormatError for malformed tables and DomainError when an axiom
    // fails.
    explicit FiniteRack(Table const& table);

    std::size_t size() const noexcept {
      return n_;
    }
    Element op(Element x, Element y) const noexcept {
      return op_[x * n_ + y];
    }
    // The unique z with z * y = x.
    Element op_inverse(Element x, Element y) const noexcept {
      return inv_[x * n_ + y];
    }
    Element op(Element x, Element y, int sign) const noexcept {
      return sign >= 0 ? op(x, y) : op_inverse(x, y);
    }
    // S_y : x -> x * y
    Permutation column(Element y) const;
    Table       table() const;

    bool operator==(FiniteRack const&) const = default;

   private:
    std::size_t          n_;
    std::vector<Element> op_;
    std::vector<Element> inv_;
  };

  // Axioms (L1), (L1'), (L2), (L2'), (L3), (L3') checked for every witness.
  ValidationReport validate_gl_rack(FiniteRack const&    rack,
                                    std::vector<Element> const& u,
                                    std::vector<Element> const& d);

  class FiniteGLRack {
   public:
    // Throws DomainError carrying the validation report if any axiom fails.
    FiniteGLRack(FiniteRack rack, Permutation u, Permutation d);

    FiniteRack const& rack() const noexcept {
      return rack_;
    }
    Permutation const& u() const noexcept {
      return u_;
    }
    Permutation const& d() const noexcept {
      return d_;
    }
    std::size_t size() const noexcept {
      return rack_.size();
    }
    Element op(Element x, Element y) const noexcept {
      return rack_.op(x, y);
    }
    Element op_inverse(Element x, Element y) const noexcept {
      return rack_.op_inverse(x, y);
    }
    Element op(Element x, Element y, int sign) const noexcept {
      return rack_.op(x, y, sign);
    }
    Element up(Element x) const noexcept {
      return u_[x];
    }
    Element down(Element x) const noexcept {
      return d_[x];
    }

    bool operator==(FiniteGLRack const&) const = default;

   private:
    FiniteRack  rack_;
    Permutation u_;
    Permutation d_;
  };

  // A finite group given by its multiplication table; element 0 is the
  // identity.
  class FiniteGroup {
   public:
    // Throws FormatError if the table is malformed or not a group.
    explicit FiniteGroup(Table const& table);

    std::size_t size() const noexcept {
      return n_;
    }
    Element mul(Element a, Element b) const noexcept {
      return mul_[a * n_ + b];
    }
    Element inv(Element a) const noexcept {
      return inv_[a];
    }
    Table table() const;

    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup symmetric(std::size_t n);
    // Group of the given permutations under composition. The list must be
    // closed and sorted with the identity first.
    static FiniteGroup of_permutations(std::vector<Permutation> const& elements);

   private:
    std::size_t          n_;
    std::vector<Element> mul_;
    std::vector<Element> inv_;
  };

  bool is_quandle(FiniteGLRack const& r);

  Permutation inner_automorphism(FiniteGLRack const& r, Element y);

  // True iff p preserves the operation and commutes with u and d.
  bool is_automorphism(FiniteGLRack const& r, Permutation const& p);

  // All GL-rack automorphisms, sorted lexicographically (identity first).
  std::vector<Permutation> automorphism_group(FiniteGLRack const& r,
                                              Limits const& limits = {});

  // Orbits of the group generated by `group` on [0, n), each sorted, ordered
  // by least element.
  std::vector<std::vector<Element>>
  orbits(std::size_t n, std::vector<Permutation> const& group);

  struct GLStructure {
    Permutation u;
    Permutation d;

    auto operator<=>(GLStructure const&) const = default;
  };

  enum class StructureMode { all, u_equals_d };

  // Exactly the pairs (u, d) that make `rack` a GL-rack, in lexicographic
  // order.
  std::vector<GLStructure> enumerate_gl_structures(FiniteRack const& rack,
                                                   StructureMode mode
                                                   = StructureMode::all,
                                                   Limits const& limits = {});

  // Every rack structure on [0, n), lexicographic in the column permutations.
  std::vector<FiniteRack> enumerate_racks(std::size_t n);

  FiniteRack   permutation_rack(Permutation const& sigma);
  FiniteRack   trivial_rack(std::size_t n);
  FiniteRack   dihedral_quandle(std::size_t n);
  FiniteGLRack trivial_gl_rack(FiniteRack const& quandle);

  // Conj(G): x * y = y^-1 x y with u = d = id.
  FiniteGLRack conjugation_gl_rack(FiniteGroup const& g);

  // x * y = y a y^-1 x, u(x) = x b, d(x) = x c for pairwise commuting a, b, c
  // with abc = 1.
  FiniteGLRack group_family_gl_rack(FiniteGroup const& g,
                                    Element            a,
                                    Element            b,
                                    Element            c);

  // (X, *, u^-1, d^-1) on an involutory rack.
  FiniteGLRack inverse_gl_structure(FiniteGLRack const& r);

  // Some isomorphism R1 -> R2 carrying op, u and d, or nullopt.
  std::optional<Permutation> gl_rack_isomorphic(FiniteGLRack const& r1,
                                                FiniteGLRack const& r2,
                                                Limits const& limits = {});

  struct CosetGLData {
    Table                             group;
    std::vector<std::vector<Element>> subgroups;
    std::vector<Element>              z;
    std::vector<Element>              r;
    std::vector<Element>              s;
    std::vector<std::size_t>          tau;
  };

  // Concrete description of the coset elements of a CosetGLData.
  struct CosetLayout {
    // index -> (subgroup index i, least representative x of xH_i)
    std::vector<std::pair<std::size_t, Element>> cosets;
  };

  // One message per failed hypothesis, naming the condition and the index.
  std::vector<std::string> check_coset_conditions(CosetGLData const& data);

  // The GL-rack on the disjoint union of left cosets G/H_i. Throws
  // DomainError naming the first failed hypothesis.
  FiniteGLRack coset_gl_rack(CosetGLData const& data,
                             CosetLayout*       layout = nullptr);

  struct HomogeneousRepresentation {
    CosetGLData              data;
    std::vector<Permutation> group_elements;
    std::vector<Element>     base_points;
    // coset index -> element of the original rack
    std::vector<Element> iso;
  };

  HomogeneousRepresentation homogeneous_representation(FiniteGLRack const& r,
                                                       Limits const& limits
                                                       = {});

}  // namespace glr
