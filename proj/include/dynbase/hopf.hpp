/**
 * @file hopf.hpp
 * @brief Finite-dimensional Hopf algebras by structure constants.
 *
 * Conventions (used consistently across the whole library):
 *   mult[i][j][k]:   e_i e_j = Σ_k mult[i][j][k] e_k
 *   comult[i][j][k]: Δ(e_i)  = Σ_{j,k} comult[i][j][k] e_j ⊗ e_k
 *   counit:          covector, ε(e_i) = counit[i]
 *   antipode:        matrix, γ(e_j) = Σ_i antipode(i,j) e_i
 * Tensor legs are flattened left-factor major: e_i ⊗ e_j ↦ i·dim + j.
 */
#pragma once

#include <string>
#include <vector>

#include "dynbase/algebra.hpp"
#include "dynbase/group.hpp"
#include "dynbase/linalg.hpp"
#include "dynbase/report.hpp"

namespace dynbase {

struct HopfData {
  AlgebraData alg;
  Tensor3 comult;
  Vec counit;
  Mat antipode;
  Mat antipode_inv;

  HopfData()
      : comult(Field::rationals(), 0, 0, 0),
        counit(Field::rationals(), 0),
        antipode(Field::rationals(), 0, 0),
        antipode_inv(Field::rationals(), 0, 0) {}
  HopfData(Field f, size_t d)
      : alg(f, d), comult(f, d, d, d), counit(f, d), antipode(f, d, d), antipode_inv(f, d, d) {}

  size_t dim() const { return alg.dim; }
  Field field() const { return alg.field; }
  Vec basis(size_t i) const { return alg.basis(i); }
  Vec mul(const Vec& a, const Vec& b) const { return alg.mul(a, b); }
  const Vec& unit() const { return alg.unit; }

  /** Δ applied to a coordinate vector, as a dim²-vector. */
  Vec comult_of(const Vec& v) const;
  Scalar counit_of(const Vec& v) const { return counit.dot(v); }
  Vec antipode_of(const Vec& v) const { return antipode.apply(v); }
  Vec antipode_inv_of(const Vec& v) const { return antipode_inv.apply(v); }
};

/** Product in A⊗A of two dim²-vectors (left-major flattening). */
Vec mul_t2(const AlgebraData& a, const Vec& x, const Vec& y);

/** One term e_a⊗e_b⊗e_c of an iterated coproduct, with its coefficient. */
struct SweedlerTriple {
  size_t a, b, c;
  Scalar coef;
};

/** Δ²(e_i) = (id⊗Δ)Δ(e_i) as a sparse list of leg triples. */
std::vector<SweedlerTriple> comult_squared_terms(const HopfData& h, size_t i);

/** Full Hopf-axiom suite with first-failure witnesses. */
CheckReport check_hopf(const HopfData& h);

/**
 * Dual Hopf algebra on the dual basis, strictly by transposition:
 * mult* = comultᵀ, comult* = multᵀ, unit* = counit, counit* = unit,
 * antipode* = antipodeᵀ.
 */
HopfData dual_hopf(const HopfData& h);

HopfData group_algebra(const Field& f, const GroupTable& g);
HopfData function_algebra(const Field& f, const GroupTable& g);
/** Sweedler's four-dimensional Hopf algebra; needs characteristic ≠ 2. */
HopfData sweedler_h4(const Field& f);

/** Basis of the space of left integrals: {t : h t = ε(h) t for all h}. */
std::vector<Vec> left_integrals(const HopfData& h);

/** Convolution product of characters: (α·β)(h) = (α⊗β)(Δh). */
Vec convolve_chars(const HopfData& h, const Vec& alpha, const Vec& beta);
/** Convolution inverse of a character: ᾱ = α∘γ. */
Vec char_inverse(const HopfData& h, const Vec& alpha);

/** The character group of H with a deterministic element order (ε first). */
struct HatGroup {
  GroupTable table;
  std::vector<Vec> chars; // chars[0] = counit
  bool complete = true;
};
HatGroup hat_group_structure(const HopfData& h);

} // namespace dynbase
