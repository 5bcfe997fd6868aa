/**
 * @file reduce.hpp
 * @brief Reduction of a base algebra to a commutative pair, central
 *        idempotents of group algebras, and the coset-space classification of
 *        base structures on k^{G/K}.
 *
 * The reduction replaces (H, L) by the commutative pair (H′, L′) with
 * H′ = H/Ĥ⊥ and L′ = L/L̂⊥, where Ĥ⊥ = ∩_{α∈Ĥ} ker α is the bi-ideal
 * annihilated by all characters of H and L̂⊥ = ∩_{χ∈L̂} ker χ is the ideal
 * annihilated by all invariant characters of L.  Both projections are
 * surjective algebra maps, the pair of them is a homomorphism of base
 * algebras, and the result is *reduced*: its invariant characters separate
 * points.  A reduced base is a function algebra on its character set, the
 * character group Ĥ acts on that set, and the base splits into one summand
 * per orbit.
 *
 * For the coset classification, H = k^G acts and coacts on L = k^{G/K}: the
 * coaction comes from the left translation action of G on the cosets, and
 * every action diagonal on the point idempotents has the form
 * h ▷ e_ψ = ⟨π(ψ), h⟩ e_ψ for a function π : G/K → kG which braided
 * commutativity and equivariance force to be the spreading
 * π(a·ψ₀) = a π a⁻¹ of a single central idempotent π ∈ kK.  The enumeration
 * builds every candidate row and measures each axiom; the strict pass set is
 * cross-checked against an independent exhaustive search through all
 * character-valued diagonal actions.
 */
#pragma once

#include <vector>

#include "dynbase/base.hpp"
#include "dynbase/chars.hpp"
#include "dynbase/group.hpp"
#include "dynbase/hopf.hpp"

namespace dynbase {

/** The commutative quotient pair (H′, L′) with its projections and sections. */
struct ReducedBase {
  HopfData hopf;        //!< H′ = H/Ĥ⊥
  BaseAlgebraData base; //!< L′ with its H′-action and H′-coaction
  Mat project_h;        //!< surjection H → H′ (a Hopf algebra map)
  Mat lift_h;           //!< chosen linear section H′ → H
  Mat project_l;        //!< surjection L → L′ (an algebra map)
  Mat lift_l;           //!< chosen linear section L′ → L
  CheckReport report;   //!< axioms, homomorphism identities, section independence
};

/**
 * Quotient (H, L) by the character annihilators.  Throws
 * NoInvariantCharacters when L has no invariant characters.
 */
ReducedBase reduce_base(const HopfData& h, const BaseAlgebraData& b);

/** Do the invariant characters of L separate points (∩ ker χ = 0)? */
bool is_reduced(const HopfData& h, const BaseAlgebraData& b);

/**
 * Every central idempotent of a finite-dimensional algebra over its ground
 * field, lexicographically sorted.  The center is split into rationally
 * indecomposable ideal blocks by exact eigenvalue splitting of
 * multiplication operators (basis elements and their pairwise sums as
 * splitters — enough to separate the cyclotomic blocks of group algebras of
 * order ≤ 8); the 2^blocks Boolean combinations of the block identities are
 * returned.
 */
std::vector<Vec> central_idempotents(const AlgebraData& a);

/** One candidate row of the coset-space classification on k^{G/K}. */
struct ClassifiedBase {
  GroupTable group;              //!< G
  std::vector<size_t> subgroup;  //!< K as a sorted element list inside G
  Vec pi;                        //!< central idempotent of kK (kK coordinates)
  BaseAlgebraData base;          //!< induced structure on k^{G/K}
  CheckReport report;            //!< full axiom measurement for this row
  bool passes = false;           //!< every base axiom plus unital module
  bool unital = false;           //!< 1_H acts as the identity on L
  bool reduced = false;          //!< invariant characters separate points
  size_t invariant_count = 0;    //!< number of invariant characters
  bool all_invariant = false;    //!< all |G/K| point characters invariant
};

/**
 * Build and measure one row per central idempotent π ∈ kK: the action by
 * equivariant spreading of π, the coaction from left translation on G/K,
 * then the full axiom report and the derived flags.  Rows are ordered by the
 * lexicographic order of the idempotents.
 */
std::vector<ClassifiedBase> enumerate_base_structures(const Field& f, const GroupTable& g,
                                                      const std::vector<size_t>& k);

/**
 * Independent oracle for the classification: exhaustively search all
 * |G|^{|G/K|} diagonal actions with character eigenvalue patterns
 * h ▷ e_ψ = h(g_ψ) e_ψ against the translation coaction, and return the base
 * structures passing every axiom.  Deterministic order (degree functions in
 * lexicographic order).
 */
std::vector<BaseAlgebraData> diagonal_base_search(const Field& f, const GroupTable& g,
                                                  const std::vector<size_t>& k);

/**
 * Split a reduced base into its Ĥ-orbit summands: one sub-base per orbit of
 * the character action on the invariant characters, each spanned by the
 * corresponding point idempotents.  Throws NotInvariant when the base is not
 * reduced.
 */
std::vector<BaseAlgebraData> orbit_split(const HopfData& h, const BaseAlgebraData& b);

/** The span of the generator idempotents e_χ as a sub-base of L. */
struct GeneratorSum {
  BaseAlgebraData base;        //!< structure induced on span{e_χ}
  std::vector<Vec> chars;      //!< the projective invariant characters, in order
  std::vector<Vec> idempotents; //!< e_χ for each of them (coordinates in L)
  Mat inclusion;               //!< columns = idempotents, as a map into L
  CheckReport report;          //!< closure, axioms, and the quotient property
};

/**
 * Assemble ⊕_χ L^χ over the projective invariant characters as a sub-base,
 * and verify it is also a quotient of L via λ ↦ Σ_χ e_χ λ.  Throws ZeroSum
 * when no invariant character is projective (in particular when L̂ = ∅).
 */
GeneratorSum generator_direct_sum(const HopfData& h, const BaseAlgebraData& b);

} // namespace dynbase
