/**
 * @file dynalg.hpp
 * @brief Dynamical algebras over a base (H, L), their smash products, induced
 *        modules, and the corner algebras attached to invariant characters.
 *
 * A dynamical algebra A over (H, L) is an H-module with an equivariant
 * multiplication ⋇ : A⊗A → A⊗L satisfying shifted associativity: writing
 * m_L for the product of L and τ : L⊗A → A⊗L, λ⊗a ↦ (λ⁽¹⁾▷a)⊗λ^[∞], the two
 * ways around
 *
 *     m_L ∘ ⋇ ∘ τ ∘ (⋇⊗id)  =  m_L ∘ ⋇ ∘ (id⊗⋇)  :  A⊗A⊗A → A⊗L
 *
 * agree.  A is unital when 1_A ⋇ a = a ⋇ 1_A = a⊗1_L.
 *
 * The dynamical smash product B = A⋊L lives on A⊗L with multiplication
 * (a⊗λ)(b⊗μ) = (a ⋇ (λ⁽¹⁾▷b))(λ^[∞]μ), the last factor multiplying the L-leg
 * from the right.  B is an (H, L)-module algebra: associative, H-equivariant,
 * an L-bimodule, and freely generated by A over L in either order.
 *
 * Every invariant character χ of L induces: the left B-module A_χ = B⊗_L 𝕜
 * and the right B-module _χA = 𝕜⊗_L B, both carried by A; the equivariant
 * operations a∗_χb (contract χ on the ρ-leg of ⋇) and a⊳_χb (contract χ on
 * the ℓ-leg, computed through τ⁻¹); the corner algebra A^L_χ on the χ-weight
 * space, where ∗_χ and ⊳_χ̃ coincide and which is anti-isomorphic to
 * End_B(A_χ) and to End_B(_χ̃A); the invariant algebra I_χ on A^H; and the
 * projections ℘_χ, _χ℘ : B → A evaluating χ on the L-factor of the two
 * factorizations AL = B = LA.
 */
#pragma once

#include "dynbase/chars.hpp"
#include "dynbase/reduce.hpp"

namespace dynbase {

/**
 * A dynamical algebra by structure constants: the H-action on A and the dense
 * multiplication tensor dmult with e_a ⋇ e_b = Σ dmult[a][b][a′][λ] e_a′⊗e_λ.
 * `unit` may be the zero vector when the algebra has no unit (see
 * unitalize_dynamical).
 */
struct DynamicalAlgebraData {
  Tensor3 action; // action[h][a_in][a_out]
  Tensor4 dmult;  // dmult[a, b, a_out, λ_out]
  Vec unit;       // 1_A, or the zero vector when absent

  DynamicalAlgebraData()
      : action(Field::rationals(), 0, 0, 0),
        dmult(Field::rationals(), 0, 0, 0, 0),
        unit(Field::rationals(), 0) {}
  DynamicalAlgebraData(Field f, size_t hdim, size_t adim, size_t ldim)
      : action(f, hdim, adim, adim), dmult(f, adim, adim, adim, ldim), unit(f, adim) {}

  size_t dim() const { return action.dim1(); }
  size_t hdim() const { return action.dim0(); }
  size_t ldim() const { return dmult.dim3(); }
  Field field() const { return action.field(); }

  Vec act(size_t i, const Vec& a) const;
  Vec act(const Vec& h, const Vec& a) const;
  Mat action_op(size_t i) const;
  /** a ⋇ b ∈ A⊗L as a flat dim·ldim vector (left factor major). */
  Vec dmul(const Vec& a, const Vec& b) const;
};

/**
 * An (H, L)-module algebra: an associative H-module algebra carrying
 * commuting left and right L-actions compatible with the multiplication.
 * `alg.unit` may be zero (unitalize adjoins an identity).
 */
struct ModuleAlgebraData {
  AlgebraData alg;
  Tensor3 action;  // H-action [h][b][b′]
  Tensor3 left_l;  // left L-action [λ][b][b′]
  Tensor3 right_l; // right L-action [λ][b][b′]

  ModuleAlgebraData() : action(Field::rationals(), 0, 0, 0), left_l(action), right_l(action) {}
  ModuleAlgebraData(Field f, size_t hdim, size_t ldim, size_t bdim)
      : alg(f, bdim), action(f, hdim, bdim, bdim), left_l(f, ldim, bdim, bdim),
        right_l(f, ldim, bdim, bdim) {}

  size_t dim() const { return alg.dim; }
  Vec act(size_t i, const Vec& x) const;
  Mat action_op(size_t i) const;
  Vec l_left(const Vec& lam, const Vec& x) const;
  Vec l_right(const Vec& x, const Vec& lam) const;
};

/** The dynamical smash product B = A⋊L with its embeddings. */
struct SmashAlgebraData {
  ModuleAlgebraData m; // B on A⊗L with all three action tensors
  Mat embed_a;         // A → B, a ↦ a⊗1_L
  Mat embed_l;         // L → B, λ ↦ 1_A⊗λ
  CheckReport report;  // associativity, equivariance, action laws, freeness
};

/**
 * Is (alg, action) an H-module algebra?  Module axioms, h▷(xy) =
 * (h⁽¹⁾▷x)(h⁽²⁾▷y), and h▷1 = ε(h)1 (skipped when the unit is zero).
 */
CheckReport check_module_algebra(const HopfData& h, const AlgebraData& alg,
                                 const Tensor3& action);

/**
 * The full (H, L)-module-algebra axiom suite: associativity, module algebra
 * over H, L-bimodule laws including the middle associativity (xλ)y = x(λy),
 * H-equivariance of both L-actions, and unit laws when a unit is present.
 */
CheckReport check_module_algebra_hl(const HopfData& h, const BaseAlgebraData& b,
                                    const ModuleAlgebraData& m);

/**
 * The dynamical-algebra axioms: H-module structure, equivariance of ⋇,
 * shifted associativity on all basis triples, invariance of the unit and
 * two-sided unitality (the unit items are skipped when `unit` is zero).
 * Throws DimMismatch on inconsistent shapes.
 */
CheckReport check_dynamical(const HopfData& h, const BaseAlgebraData& b,
                            const DynamicalAlgebraData& a);

/**
 * An H-module algebra made into a dynamical algebra over any base:
 * a ⋇ b = ab ⊗ 1_L.
 */
DynamicalAlgebraData trivial_dynamical(const AlgebraData& alg, const Tensor3& action,
                                       const BaseAlgebraData& b);

/** Adjoin a unit: A ⊕ 𝕜u with u ⋇ a = a ⋇ u = a⊗1_L and h▷u = ε(h)u.  The old
 *  basis keeps its indices; the new unit is the last coordinate. */
DynamicalAlgebraData unitalize_dynamical(const HopfData& h, const DynamicalAlgebraData& a,
                                         const BaseAlgebraData& b);

/** Basis of the commutant {T : T∘rho[i] = rho[i]∘T for every operator}. */
std::vector<Mat> module_endomorphisms(const std::vector<Mat>& rho);

/**
 * Unitalization of an (H, L)-module algebra on B ⊕ L:
 * (x⊕λ)(y⊕μ) = (xy + λy + xμ) ⊕ λμ, with identity (0, 1_L).
 */
struct UnitalizedAlgebra {
  ModuleAlgebraData m; // B ⊕ L (old basis first, then the L coordinates)
  Mat embed_b;         // B → B⊕L
  Mat embed_l;         // L → B⊕L
  CheckReport report;
};
UnitalizedAlgebra unitalize(const HopfData& h, const BaseAlgebraData& b,
                            const ModuleAlgebraData& in);

/**
 * The dynamical smash product.  Requires check_dynamical to pass (throws
 * NotDynamical otherwise) and a unital A.  The report verifies associativity,
 * the (H, L)-module-algebra laws, that the left L-action realizes
 * λ(b⊗μ) = (λ⁽¹⁾▷b)⊗(λ^[∞]μ), and free generation by A over L on both sides.
 */
SmashAlgebraData smash_product(const HopfData& h, const BaseAlgebraData& b,
                               const DynamicalAlgebraData& a);

/** a ∗_χ b = (id_A⊗χ)(a ⋇ b): contract the character on the ρ-leg. */
Vec star_chi(const DynamicalAlgebraData& a, const Vec& x, const Vec& y, const Vec& chi);

/**
 * a ⊳_χ b = (χ⊗id_A)(τ⁻¹(a ⋇ b)): contract the character on the ℓ-leg of the
 * presentation a⋇b = τ(ℓ_i ⊗ (a ⊳_i b)).  Throws NotInvertible when τ is
 * singular (never for an invertible antipode).
 */
Vec rd_chi(const BaseAlgebraData& b, const DynamicalAlgebraData& a, const Vec& x, const Vec& y,
           const Vec& chi);

/**
 * A as a module over B = A⋊L, induced from χ: the left module A_χ = B⊗_L 𝕜
 * (side left) or the right module _χA = 𝕜⊗_L B (side right).  rho[i] is the
 * matrix of the i-th basis element of B on the carrier A (for the right side,
 * of the right action x ↦ x◁b_i).  The report verifies the module axioms, the
 * action of L ⊂ B through ι_χ (left) resp. γ̄∘ι_χ (right), and the cyclic
 * identity (x⊗λ)·1_A = χ(λ)x for the left side.  Throws NotInvariant.
 */
struct InducedModule {
  bool left = true;
  Vec chi;
  std::vector<Mat> rho;
  CheckReport report;
};
InducedModule induced_module(const HopfData& h, const BaseAlgebraData& b,
                             const DynamicalAlgebraData& a, const SmashAlgebraData& s,
                             const Vec& chi, bool left);

/**
 * The corner algebra A^L_χ on the χ-weight space {v : ι_χ(λ)▷v = χ(λ)v}, with
 * multiplication ∗_χ.  The report contains the three assertions of the
 * endomorphism theorem: ∗_χ = ⊳_χ̃ on the subspace; mixed associativity
 * (x∗_χy)∗_χv = x∗_χ(y∗_χv) for v in the subspace; and the anti-isomorphisms
 * onto End_B(A_χ) and End_B(_χ̃A), verified by solving the commutant systems
 * and matching dimensions, injectivity, and multiplication tables.
 * Throws NotInvariant / NotClosed.
 */
struct CornerModuleAlgebra {
  Vec chi;
  Vec chi_tilde;
  std::vector<Vec> basis; // basis of A^L_χ inside A
  AlgebraData alg;        // ∗_χ in that basis
  CheckReport report;
};
CornerModuleAlgebra a_l_chi(const HopfData& h, const BaseAlgebraData& b,
                            const DynamicalAlgebraData& a, const SmashAlgebraData& s,
                            const Vec& chi);

/**
 * The invariant algebra I_χ on A^H = {v : h▷v = ε(h)v} with product ∗_χ.
 * The report verifies closure, associativity on A^H, and that 1_A is its
 * identity (when A is unital).
 */
struct InvariantAlgebra {
  Vec chi;
  std::vector<Vec> basis; // basis of A^H inside A
  AlgebraData alg;        // ∗_χ in that basis
  CheckReport report;
};
InvariantAlgebra i_chi_algebra(const HopfData& h, const BaseAlgebraData& b,
                               const DynamicalAlgebraData& a, const Vec& chi);

/** ℘_χ : B → A, evaluate χ on the L-leg of the factorization B = AL. */
Mat wp_left(const BaseAlgebraData& b, const SmashAlgebraData& s, const Vec& chi);
/**
 * _χ℘ : B → A, evaluate χ on the L-leg of the factorization B = LA (computed
 * by inverting the free left generation map L⊗A → B).
 */
Mat wp_right(const BaseAlgebraData& b, const SmashAlgebraData& s, const Vec& chi);

/**
 * The projection propositions, verified exactly: ℘_χ is a map of left
 * B-modules B → A_χ and _χ̃℘ of right B-modules B → _χ̃A; ℘_χ restricted to
 * B^L_χ is a surjective algebra map onto A^L_χ and makes B a right
 * B^L_χ-module map; ℘_χ and _χ̃℘ coincide on B^H; and ℘_χ maps B^H onto I_χ
 * multiplicatively.  Throws NotInvariant.
 */
CheckReport check_wp_projections(const HopfData& h, const BaseAlgebraData& b,
                                 const DynamicalAlgebraData& a, const SmashAlgebraData& s,
                                 const Vec& chi);

/**
 * The weight subalgebra B^L_χ = {v ∈ B : ι_χ(λ)▷v = χ(λ)v}, closed under the
 * product of B.  The report verifies closure, that the same space is the
 * right χ̃-weight space under v◁λ = (γ̄∘ι_χ̃)(λ)▷v, that 1_B belongs to it,
 * and that A^L_χ embeds into it under a ↦ a⊗1_L.
 */
struct WeightSubalgebra {
  Vec chi;
  std::vector<Vec> basis; // basis of B^L_χ inside B
  AlgebraData alg;        // restricted product of B
  CheckReport report;
};
WeightSubalgebra b_l_chi(const HopfData& h, const BaseAlgebraData& b,
                         const DynamicalAlgebraData& a, const SmashAlgebraData& s, const Vec& chi);

/**
 * Morphism check for (φ, ϖ, θ) : (H, L, A) → (H′, L′, A′) with θ : A → A′⊗L′:
 * equivariance of θ, the defining square m∘⋇′∘m∘τ′∘(θ⊗θ) = m∘(θ⊗ϖ)∘⋇, and
 * the induced map (id⊗m)∘(θ⊗ϖ) : A⋊L → A′⋊L′ being a unital equivariant
 * algebra homomorphism intertwining the base embeddings.
 */
CheckReport check_dynamical_morphism(const HopfData& h, const BaseAlgebraData& b,
                                     const DynamicalAlgebraData& a, const HopfData& h2,
                                     const BaseAlgebraData& b2, const DynamicalAlgebraData& a2,
                                     const Mat& phi, const Mat& varpi, const Mat& theta);

/**
 * Reduction of a dynamical algebra to the reduced base: A′ ⊂ A is the
 * subspace annihilated by the character annihilator Ĥ⊥ ⊂ H, the multiplication
 * is ⋇ followed by the projection L → L′ (closure in A′⊗L′ is verified), and
 * the result is a dynamical algebra over (H′, L′) — re-verified in full.
 */
struct ReducedDynamical {
  ReducedBase base;         // (H′, L′) with the projections
  DynamicalAlgebraData dyn; // A′ over the reduced base
  Mat include_a;            // A′ ↪ A (columns form the basis of A′)
  CheckReport report;
};
ReducedDynamical reduce_dynamical(const HopfData& h, const BaseAlgebraData& b,
                                  const DynamicalAlgebraData& a);

} // namespace dynbase
