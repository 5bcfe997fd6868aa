/**
 * @file chars.hpp
 * @brief Invariant characters of a base algebra and the structure they
 *        generate.
 *
 * A character χ of L is invariant when χ(h▷λ) = ε(h)χ(λ).  Each such χ yields
 *   - an algebra map ι_χ : L → H, λ ↦ λ⁽¹⁾χ(λ^[∞]), which together with the
 *     identity on H is a homomorphism of bases (H,L) → (H,H);
 *   - the space L^χ of left χ-generators {e : λe = χ(λ)e}, an H-invariant
 *     two-sided ideal (it is the space of left integrals when L = H, χ = ε);
 *   - the adjoint character χ̃ = χ(ϑ̄▷·), computed through the action of the
 *     Drinfeld element of 𝔇(H) on L (left χ-generators are exactly right
 *     χ̃-generators);
 *   - weight submodules V[k,ψ,χ] = {v : γᵏ(ι_χ(λ))v = ψ(λ)v} of any H-module,
 *     which satisfy V[k,ψ,χ] = V[k±1,χ,ψ] = V[k,ψ̃,χ̃];
 *   - for projective χ (some generator has χ(e) ≠ 0) the normalized idempotent
 *     e_χ, the central idempotent t_χ = ι_χ(e_χ) with γ(t_χ) = t_χ, and the
 *     corner Hopf algebra H^χ = t_χH with coproduct (t_χ⊗t_χ)∘Δ, whose
 *     characters realize the isotropy subgroup Ĥ^χ ⊂ Ĥ.
 */
#pragma once

#include <optional>

#include "dynbase/base.hpp"

namespace dynbase {

/** A finite-dimensional left H-module: one operator per basis element of H. */
struct HModule {
  std::vector<Mat> rho; // rho[i] = action of the i-th basis element

  size_t dim() const { return rho.empty() ? 0 : rho[0].rows(); }
  /** Operator of a general element h = Σ h[i]·e_i. */
  Mat op(const Vec& h) const;
};

/** H acting on itself by left multiplication. */
HModule regular_module(const HopfData& h);
/** The trivial one-dimensional module h ↦ ε(h). */
HModule trivial_module(const HopfData& h);
/** Tensor product module: ρ(h) = Σ ρ_V(h⁽¹⁾)⊗ρ_W(h⁽²⁾). */
HModule tensor_module(const HopfData& h, const HModule& v, const HModule& w);
/** Representation axioms: ρ(1) = id and ρ(hk) = ρ(h)ρ(k) on the basis. */
CheckReport check_module(const HopfData& h, const HModule& v);

/** Is chi a character of L with χ(h▷λ) = ε(h)χ(λ) for all basis pairs? */
bool is_invariant_character(const HopfData& h, const BaseAlgebraData& b, const Vec& chi);

/** All invariant characters of the base, in the canonical character order. */
std::vector<Vec> invariant_characters(const HopfData& h, const BaseAlgebraData& b);

/** Matrix of ι_χ : L → H, λ ↦ λ⁽¹⁾χ(λ^[∞]).  Throws NotInvariant. */
Mat iota_chi(const HopfData& h, const BaseAlgebraData& b, const Vec& chi);

/** Canonical basis of L^χ = {e ∈ L : λe = χ(λ)e for all λ}. */
std::vector<Vec> chi_generators(const BaseAlgebraData& b, const Vec& chi);
/** Canonical basis of the right-generator space {e : eλ = χ(λ)e}. */
std::vector<Vec> chi_generators_right(const BaseAlgebraData& b, const Vec& chi);

/**
 * Matrix of λ ↦ ϑ̄▷λ, the action of the inverse Drinfeld element of 𝔇(H) on
 * L: ϑ̄ = Θ₁γ(Θ₂) acts as Σ_i ρ(η^i)∘ρ(γ(h_i)) with ρ(η^i) read off the
 * coaction.  (No double is materialized; the legs act directly.)
 */
Mat vartheta_bar_action(const HopfData& h, const BaseAlgebraData& b);
/** Matrix of λ ↦ ϑ▷λ for ϑ = Θ₁γ⁻²(Θ₂); inverse of vartheta_bar_action. */
Mat vartheta_action(const HopfData& h, const BaseAlgebraData& b);

/** The adjoint character χ̃ = χ(ϑ̄▷·).  Throws NotInvariant. */
Vec adjoint_character(const HopfData& h, const BaseAlgebraData& b, const Vec& chi);

/** Right action of Ĥ on L: λ·α = (α⊗id)δ(λ). */
Vec char_act_right(const BaseAlgebraData& b, const Vec& alpha, const Vec& lam);
/** Left action of Ĥ on characters of L: (α·χ)(λ) = (α⊗χ)δ(λ). */
Vec char_act_on_char(const BaseAlgebraData& b, const Vec& alpha, const Vec& chi);
/** The isotropy subgroup Ĥ^χ = {α ∈ Ĥ : α·χ = χ} (canonical order, ε first). */
std::vector<Vec> isotropy_characters(const HopfData& h, const BaseAlgebraData& b, const Vec& chi);

/** The left L-action on H*: λ⇀_χη = η↼(γ∘ι_χ)(λ), with (η↼h)(g) = η(hg). */
Vec chi_arrow(const HopfData& h, const BaseAlgebraData& b, const Vec& lam, const Vec& eta,
              const Vec& chi);

/**
 * The scalar identity λ^[0]⇀_χλ⟨¹⟩ = χ̃(λ)·1 in H*, where λ^[0]⊗λ⟨¹⟩ =
 * Σ_i (h_i▷λ)⊗η^i is the H*-coaction attached to the H-action; checked for
 * every basis λ.
 */
CheckReport check_scalar_identity(const HopfData& h, const BaseAlgebraData& b, const Vec& chi);

/**
 * Left χ-generators are right χ̃-generators and vice versa: e·λ = χ̃(λ)·e for
 * every generator and basis λ, and the two generator spaces coincide.
 */
CheckReport check_left_right_generators(const HopfData& h, const BaseAlgebraData& b,
                                        const Vec& chi);

/**
 * Projectivity of the one-dimensional module attached to χ: some generator
 * has χ(e) ≠ 0.  When projective, e_chi is normalized to χ(e_χ) = 1 and the
 * report verifies: e_χ idempotent, dim L^χ = 1, e_χ central, the H-action on
 * e_χ trivial, and χ self-adjoint.  When not projective the report is empty.
 */
struct ProjectivityResult {
  bool projective = false;
  std::optional<Vec> e_chi;
  CheckReport report;
};
ProjectivityResult is_projective(const HopfData& h, const BaseAlgebraData& b, const Vec& chi);

/** Full record of one invariant character. */
struct InvariantCharacter {
  Vec chi;
  Vec adjoint;               // χ̃
  bool projective = false;
  std::optional<Vec> e_chi;  // idempotent generator with χ(e_χ) = 1
  std::optional<Vec> t_chi;  // ι_χ(e_χ) ∈ H
};
InvariantCharacter describe_character(const HopfData& h, const BaseAlgebraData& b, const Vec& chi);

/**
 * Basis of the weight submodule V[k,ψ,χ] = {v : (γᵏ∘ι_χ)(λ)·v = ψ(λ)·v}.
 * The integer k may be negative (γ⁻¹ is used); only k mod 2 matters, which is
 * a theorem, not an assumption of the computation.
 */
std::vector<Vec> weight_submodule(const HopfData& h, const BaseAlgebraData& b, const HModule& v,
                                  long k, const Vec& psi, const Vec& chi);

/**
 * The corner Hopf algebra H^χ = t_χ·H for projective χ: unit t_χ, coproduct
 * (t_χ⊗t_χ)∘Δ, counit and antipode restricted.  `report` contains the t_χ
 * identities (idempotent, central, γ-fixed, Δ(t_χ)(t_χ⊗t_χ) = t_χ⊗t_χ) and
 * the full Hopf suite of the quotient.  Throws NotProjective.
 */
struct ProjectedHopf {
  HopfData hopf;             // H^χ on the canonical basis of t_χ·H
  Vec t_chi;                 // the central idempotent in H
  std::vector<Vec> basis;    // basis of t_χ·H inside H
  Mat project;               // r×n: h ↦ coordinates of t_χ·h in `basis`
  Mat include;               // n×r: basis inclusion H^χ → H
  std::vector<Vec> xi_basis; // basis of the kernel ideal (1−t_χ)·H
  CheckReport report;
};
ProjectedHopf h_chi(const HopfData& h, const BaseAlgebraData& b, const Vec& chi);

/** Matrix of the twist h ↦ ᾱ(h⁽¹⁾)h⁽²⁾α(h⁽³⁾) on H.  Throws NotCharacter. */
Mat twist_by_character(const HopfData& h, const Vec& alpha);

/**
 * The twist descends to a bialgebra isomorphism H^χ → H^{α·χ} making the
 * square with the two projections commute; checked for projective χ.
 */
CheckReport check_projected_twist(const HopfData& h, const BaseAlgebraData& b, const Vec& chi,
                                  const Vec& alpha);

} // namespace dynbase
