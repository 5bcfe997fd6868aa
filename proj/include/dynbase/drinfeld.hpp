/**
 * @file drinfeld.hpp
 * @brief The Drinfeld double 𝔇(H) = H ⋈ H*_op, its canonical element Θ and
 *        the Drinfeld elements ϑ, ϑ̄.
 *
 * The double is realized on H ⊗ H*_op with basis h_i⊗η^j at index i·n + j
 * (H-factor major).  Both factors embed as sub-bialgebras: the coalgebra is
 * the tensor-product coalgebra of (H, Δ) and (H*, Δ* = mᵀ), the H*-factor
 * multiplies opposite, and mixed products are straightened with the cross
 * relation
 *
 *     η · h  =  Σ ⟨η⁽¹⁾, h⁽¹⁾⟩ ⟨η⁽³⁾, γ(h⁽³⁾)⟩  h⁽²⁾ ⊗ η⁽²⁾ ,
 *
 * where the η-legs come from Δ*.  This is the unique leg pairing for which
 * Θ = Σ_i η^i ⊗ h_i intertwines Δ and Δᵒᵖ; the reversed pairing
 * ⟨η⁽¹⁾, h⁽³⁾⟩⟨η⁽³⁾, γ̄(h⁽¹⁾)⟩ h⁽²⁾⊗η⁽²⁾ is kept as a negative control —
 * it coincides for cocommutative H and fails the axiom suite otherwise.
 */
#pragma once

#include <map>
#include <optional>
#include <utility>

#include "dynbase/hopf.hpp"

namespace dynbase {

/** Sparse element of 𝔇 or of a tensor power of 𝔇 (flat key, left-major). */
using Sparse = std::map<size_t, Scalar>;

struct DoubleData {
  HopfData h;         // the Hopf algebra being doubled, dimension n
  HopfData d;         // the double, dimension n²
  size_t n = 0;       // dimension of H
  Mat embed_h;        // n² × n, h_i ↦ h_i⊗1
  Mat embed_hstar_op; // n² × n, η^j ↦ 1⊗η^j
  Sparse theta;       // Θ ∈ 𝔇⊗𝔇, first leg H*-embedded, second H-embedded
  Vec vartheta;       // ϑ  = Θ₁ γ⁻²(Θ₂)
  Vec vartheta_bar;   // ϑ̄  = Θ₁ γ(Θ₂)

  DoubleData() : vartheta(Field::rationals(), 0), vartheta_bar(Field::rationals(), 0) {}
};

enum class CrossRule { standard, reversed_legs };

/** η^q · h_c straightened into 𝔇-coordinates ((v,s) ↦ v·n+s). */
Vec straighten_cross(const HopfData& h, size_t q, size_t c,
                     CrossRule rule = CrossRule::standard);

/** The double as a Hopf algebra under the chosen cross rule. */
HopfData drinfeld_double_hopf(const HopfData& h, CrossRule rule);

/** Full double data under the standard rule (Θ, ϑ, ϑ̄, embeddings). */
DoubleData drinfeld_double(const HopfData& h);

/** Recompute (ϑ, ϑ̄) from Θ by contracting with the stated antipode powers. */
std::pair<Vec, Vec> drinfeld_elements(const DoubleData& dd);

/** (Δ⊗id)Θ = Θ₁₃Θ₂₃, (id⊗Δ)Θ = Θ₁₃Θ₁₂, ΘΔ(x) = Δᵒᵖ(x)Θ ∀x, and the
 *  Yang–Baxter equation Θ₁₂Θ₁₃Θ₂₃ = Θ₂₃Θ₁₃Θ₁₂. */
CheckReport check_quasitriangular(const DoubleData& dd);

/** ϑϑ̄ = ϑ̄ϑ = 1 and the conjugation identity ϑ·x = γ²(x)·ϑ on basis x. */
CheckReport check_drinfeld_elements(const DoubleData& dd);

/** Δ(ϑ) = Θ₂₁Θ₁₂ (ϑ⊗ϑ) in 𝔇⊗𝔇, plus commutation of the two right factors. */
CheckReport check_gauge(const DoubleData& dd);

/** Σ_i η'^i ⊗ h'_i is independent of the chosen basis of H: recompute the
 *  canonical element through two fixed deterministic changes of basis (one
 *  scaled permutation, one dense invertible matrix) and compare. */
CheckReport check_theta_basis_independence(const HopfData& h);

/** Embeddings are injective maps of bialgebras (multiplication tensors,
 *  coproducts, units and counits all preserved). */
CheckReport check_double_embeddings(const DoubleData& dd, const HopfData& h);

// ---- sparse helpers on tensor powers of an algebra ------------------------

/** x·y in A^{⊗power}; keys are flat left-major indices base dim(A). */
Sparse sparse_mul_power(const AlgebraData& a, size_t power, const Sparse& x, const Sparse& y);
Sparse sparse_from_vec(const Vec& v);
Vec sparse_to_vec(const Field& f, size_t dim, const Sparse& x);
Sparse sparse_add(const Field& f, const Sparse& x, const Sparse& y);
bool sparse_equal(const Sparse& x, const Sparse& y);
/** First key where x and y differ, if any. */
std::optional<size_t> sparse_first_difference(const Sparse& x, const Sparse& y);

} // namespace dynbase
