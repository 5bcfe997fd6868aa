/**
 * @file algebra.hpp
 * @brief Finite-dimensional associative algebras by structure constants, and
 *        exact computation of their one-dimensional representations.
 *
 * An algebra of dimension d over a field is a tensor mult[i][j][k] with
 * e_i · e_j = Σ_k mult[i][j][k] e_k together with a unit vector.  Characters
 * (algebra maps to the ground field) are found exactly: the commutator ideal
 * is closed off and quotiented away, and the commuting family of transposed
 * multiplication operators on the quotient is split into simultaneous
 * eigenspaces using rational roots of exact minimal polynomials.
 */
#pragma once

#include <string>
#include <vector>

#include "dynbase/linalg.hpp"
#include "dynbase/report.hpp"

namespace dynbase {

struct AlgebraData {
  Field field = Field::rationals();
  size_t dim = 0;
  Tensor3 mult; // mult[i][j][k]: coefficient of e_k in e_i e_j
  Vec unit;     // coordinates of 1

  AlgebraData() : mult(Field::rationals(), 0, 0, 0), unit(Field::rationals(), 0) {}
  AlgebraData(Field f, size_t d) : field(f), dim(d), mult(f, d, d, d), unit(f, d) {}

  /** Product of two coordinate vectors. */
  Vec mul(const Vec& a, const Vec& b) const;
  /** Matrix of x ↦ v·x. */
  Mat left_mult_op(const Vec& v) const;
  /** Matrix of x ↦ x·v. */
  Mat right_mult_op(const Vec& v) const;
  Vec basis(size_t i) const { return Vec::basis(field, dim, i); }

  /** Associativity and two-sided unit, with first-failure witnesses. */
  CheckReport check(const std::string& subject = "algebra") const;
};

/** Characters (unital algebra maps A → k) as covectors of basis values. */
struct CharacterList {
  std::vector<Vec> chars; // each of length dim; chars[c][i] = χ_c(e_i)
  bool complete = true;   // false only when exhaustive root search was infeasible
  std::string note;
};

/**
 * All characters of A, exactly.  Over the rationals the list is always
 * complete; over a prime field it is complete whenever p ≤ 4096 (roots are
 * found by exhaustive trial), otherwise `complete` is cleared.
 */
CharacterList characters_of(const AlgebraData& a);

/** Evaluate a character covector on an element. */
Scalar char_apply(const Vec& chi, const Vec& v);

/** Is chi multiplicative and unital on A?  (Exact verification.) */
bool is_character(const AlgebraData& a, const Vec& chi);

} // namespace dynbase
