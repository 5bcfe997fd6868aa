/**
 * @file base.hpp
 * @brief Base algebras over a Hopf algebra H.
 *
 * A base algebra (H, L) is a unital associative algebra L that is
 * simultaneously a left H-module algebra (action written h▷λ) and a left
 * H-comodule algebra (coaction δ(λ) = λ⁽¹⁾⊗λ^[∞] ∈ H⊗L), subject to two
 * compatibilities:
 *
 *   (YD)  δ(h▷λ) = h⁽¹⁾λ⁽¹⁾γ(h⁽³⁾) ⊗ h⁽²⁾▷λ^[∞]   (Yetter–Drinfeld), and
 *   (BC)  λμ = (λ⁽¹⁾▷μ)λ^[∞]                        (braided commutativity).
 *
 * Two canonical examples are provided: L = H with the adjoint action
 * h▷λ = h⁽¹⁾λγ(h⁽²⁾) and δ = Δ, and L = H* with the left co-regular action
 * and the coaction a ↦ Σ_{i,j} γ(h_i)h_j ⊗ η^i a η^j over dual bases.
 *
 * For finite-dimensional H, such an L is exactly a module algebra over the
 * Drinfeld double 𝔇(H), the coaction being recovered from the H*-leg of the
 * canonical element Θ as δ(λ) = Θ₂ ⊗ Θ₁▷λ.  coaction_via_theta solves for
 * that 𝔇(H)-module structure as a linear system and cross-checks the
 * contraction against the stored coaction tensor.
 */
#pragma once

#include "dynbase/drinfeld.hpp"

namespace dynbase {

/**
 * A base algebra (H, L) given by structure constants: the algebra L, the
 * action tensor (index order [h, λ_in, λ_out]) and the coaction tensor
 * (δ(e_λ) = Σ coaction[λ][h][λ′] · e_h ⊗ e_λ′).
 */
struct BaseAlgebraData {
  AlgebraData l;    // the underlying algebra L
  Tensor3 action;   // action[h][λ_in][λ_out]
  Tensor3 coaction; // coaction[λ][h][λ′]

  BaseAlgebraData() = default;
  BaseAlgebraData(Field f, size_t hdim, size_t ldim)
      : l(f, ldim), action(f, hdim, ldim, ldim), coaction(f, ldim, hdim, ldim) {}

  size_t dim() const { return l.dim; }
  size_t hdim() const { return action.dim0(); }
  Field field() const { return l.field; }

  /** h_i ▷ λ for a coordinate vector λ ∈ L. */
  Vec act(size_t i, const Vec& lam) const;
  /** h ▷ λ for coordinate vectors h ∈ H, λ ∈ L. */
  Vec act(const Vec& h, const Vec& lam) const;
  /** Matrix of λ ↦ h_i ▷ λ (columns are images of basis vectors). */
  Mat action_op(size_t i) const;
  /** δ(λ) ∈ H⊗L, the slot e_h ⊗ e_λ′ sitting at index h·dim(L)+λ′. */
  Vec coact(const Vec& lam) const;
};

/**
 * Verify the four base-algebra axioms exactly over all basis tuples:
 * (1) L is a left H-module algebra, (2) a left H-comodule algebra,
 * (3) the Yetter–Drinfeld compatibility, (4) braided commutativity.
 * Witnesses carry the first failing basis index tuple.
 */
CheckReport check_base(const HopfData& h, const BaseAlgebraData& b);

/** The base (H, H): adjoint action h▷λ = h⁽¹⁾λγ(h⁽²⁾), coaction Δ. */
BaseAlgebraData base_from_h(const HopfData& h);

/**
 * The base (H, H*): L = H* as an algebra (convolution), the left co-regular
 * action h⇀η = η⟨¹⟩⟨η⟨²⟩, h⟩, and the coaction a ↦ Σ_{i,j} γ(h_i)h_j ⊗ η^i a η^j.
 */
BaseAlgebraData base_from_dual(const HopfData& h);

/** The trivial base L = k: h▷1 = ε(h)1 and δ(1) = 1⊗1. */
BaseAlgebraData trivial_base(const HopfData& h);

/**
 * The nil base of dimension k+1: L = span{1, e_1..e_k} with e_ie_j = 0,
 * carrying the trivial action h▷λ = ε(h)λ and the trivial coaction
 * δ(λ) = 1⊗λ.  Its unique character 1↦1, e_i↦0 has a k-dimensional
 * generator space (= ker χ), the standard non-projective example.
 */
BaseAlgebraData nil_base(const HopfData& h, size_t k);

/**
 * Extend the H-action on L to a 𝔇(H)-action by solving a linear system for
 * the H*_op-action tensor (unit, straightening and multiplicativity
 * constraints), then check that the Θ-contraction λ ↦ Θ₂ ⊗ Θ₁▷λ reproduces
 * the stored coaction tensor exactly.  Throws NoExtension when the system is
 * inconsistent; a non-unique solution is reported, not fatal.
 */
CheckReport coaction_via_theta(const DoubleData& dd, const BaseAlgebraData& b);

/**
 * Verify that (φ, ϖ) is a morphism of base algebras (H₁,L₁) → (H₂,L₂):
 * φ a Hopf algebra map, ϖ a unital algebra map, and the two intertwining
 * identities ϖ(h▷λ) = φ(h)▷ϖ(λ) and (φ⊗ϖ)∘δ₁ = δ₂∘ϖ.
 */
CheckReport check_base_homomorphism(const Mat& phi, const Mat& varpi,
                                    const HopfData& h1, const BaseAlgebraData& l1,
                                    const HopfData& h2, const BaseAlgebraData& l2);

/**
 * The matrix of ϖ_α : h ↦ α⇀h = h⁽¹⁾⟨α, h⁽²⁾⟩ for a character α of H.
 * Together with the identity on H it is an automorphism of the base (H, H);
 * its inverse is ϖ_{ᾱ} for the convolution-inverse character ᾱ = α∘γ.
 * Throws NotCharacter when α is not an algebra character.
 */
Mat base_automorphism_alpha(const HopfData& h, const Vec& alpha);

} // namespace dynbase
