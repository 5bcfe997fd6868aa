/** @file algebra.cpp */
#include "dynbase/algebra.hpp"

#include <algorithm>

#include "dynbase/error.hpp"

namespace dynbase {

Vec AlgebraData::mul(const Vec& a, const Vec& b) const {
  require(a.dim() == dim && b.dim() == dim, "DimMismatch", "algebra mul");
  Vec out(field, dim);
  for (size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar c = a[i] * b[j];
      for (size_t k = 0; k < dim; ++k) {
        const Scalar& m = mult.at(i, j, k);
        if (!m.is_zero()) out[k] += c * m;
      }
    }
  }
  return out;
}

Mat AlgebraData::left_mult_op(const Vec& v) const {
  Mat out(field, dim, dim);
  for (size_t i = 0; i < dim; ++i) {
    if (v[i].is_zero()) continue;
    for (size_t j = 0; j < dim; ++j)
      for (size_t k = 0; k < dim; ++k) {
        const Scalar& m = mult.at(i, j, k);
        if (!m.is_zero()) out.at(k, j) += v[i] * m;
      }
  }
  return out;
}

Mat AlgebraData::right_mult_op(const Vec& v) const {
  Mat out(field, dim, dim);
  for (size_t j = 0; j < dim; ++j) {
    if (v[j].is_zero()) continue;
    for (size_t i = 0; i < dim; ++i)
      for (size_t k = 0; k < dim; ++k) {
        const Scalar& m = mult.at(i, j, k);
        if (!m.is_zero()) out.at(k, i) += v[j] * m;
      }
  }
  return out;
}

CheckReport AlgebraData::check(const std::string& subject) const {
  CheckReport rep(subject);
  bool assoc = true;
  for (size_t i = 0; i < dim && assoc; ++i) {
    const Vec ei = basis(i);
    for (size_t j = 0; j < dim && assoc; ++j) {
      const Vec eij = mul(ei, basis(j));
      for (size_t k = 0; k < dim && assoc; ++k) {
        const Vec lhs = mul(eij, basis(k));
        const Vec rhs = mul(ei, mul(basis(j), basis(k)));
        if (auto w = lhs.first_difference(rhs)) {
          rep.add_fail("associativity", {i, j, k, *w}, lhs[*w].to_string(), rhs[*w].to_string());
          assoc = false;
        }
      }
    }
  }
  if (assoc) rep.add_pass("associativity");

  bool unital = true;
  for (size_t i = 0; i < dim && unital; ++i) {
    const Vec ei = basis(i);
    if (mul(unit, ei) != ei || mul(ei, unit) != ei) {
      rep.add_fail("two-sided unit", {i}, mul(unit, ei).to_string(), ei.to_string());
      unital = false;
    }
  }
  if (unital) rep.add_pass("two-sided unit");
  return rep;
}

Scalar char_apply(const Vec& chi, const Vec& v) { return chi.dot(v); }

bool is_character(const AlgebraData& a, const Vec& chi) {
  if (!char_apply(chi, a.unit).is_one()) return false;
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j) {
      Scalar lhs = char_apply(chi, a.mul(a.basis(i), a.basis(j)));
      if (lhs != chi[i] * chi[j]) return false;
    }
  return true;
}

namespace {

struct SplitState {
  const AlgebraData* alg = nullptr;
  std::vector<Mat> transposed_ops; // transposed left-multiplication by e_i
  std::vector<Vec> tuples;         // collected eigenvalue tuples (as covectors)
  bool complete = true;
};

void split_recursive(SplitState& st, const Mat& basis, size_t opIndex, std::vector<Scalar>& tuple) {
  const Field f = st.alg->field;
  const size_t d = st.alg->dim;
  if (opIndex == d) {
    Vec chi(f, d);
    for (size_t i = 0; i < d; ++i) chi[i] = tuple[i];
    st.tuples.push_back(chi);
    return;
  }
  Mat x = restrict_operator(st.transposed_ops[opIndex], basis);
  std::vector<Scalar> mp = minimal_polynomial(x);
  std::vector<Scalar> roots = polynomial_roots(mp, f, st.complete);
  for (const Scalar& mu : roots) {
    Mat shifted = x - Mat::identity(f, x.rows()).scaled(mu);
    std::vector<Vec> ker = kernel_basis(shifted);
    if (ker.empty()) continue;
    std::vector<Vec> lifted;
    for (const Vec& y : ker) lifted.push_back(basis.apply(y));
    Mat sub = Mat::from_columns(f, d, lifted);
    tuple.push_back(mu);
    split_recursive(st, sub, opIndex + 1, tuple);
    tuple.pop_back();
  }
}

} // namespace

CharacterList characters_of(const AlgebraData& a) {
  CharacterList out;
  const Field f = a.field;
  const size_t d = a.dim;
  if (d == 0) return out;

  // 1. two-sided ideal generated by commutators
  std::vector<Vec> gens;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) {
      Vec c = a.mul(a.basis(i), a.basis(j)) - a.mul(a.basis(j), a.basis(i));
      if (!c.is_zero()) gens.push_back(c);
    }
  std::vector<Vec> ideal = span_basis(gens);
  for (;;) {
    std::vector<Vec> next = ideal;
    for (const Vec& v : ideal)
      for (size_t i = 0; i < d; ++i) {
        next.push_back(a.mul(a.basis(i), v));
        next.push_back(a.mul(v, a.basis(i)));
      }
    std::vector<Vec> closed = span_basis(next);
    if (closed.size() == ideal.size()) break;
    ideal = closed;
  }

  // 2. commutative quotient
  Quotient q(f, d, ideal);
  const size_t m = q.dim();
  if (m == 0) return out; // no characters (unit lies in the ideal)
  AlgebraData c(f, m);
  c.unit = q.project(a.unit);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      Vec prod = q.project(a.mul(q.lift(Vec::basis(f, m, i)), q.lift(Vec::basis(f, m, j))));
      for (size_t k = 0; k < m; ++k) c.mult.at(i, j, k) = prod[k];
    }

  // 3. simultaneous eigensplitting of transposed multiplication operators
  SplitState st;
  st.alg = &c;
  for (size_t i = 0; i < m; ++i) st.transposed_ops.push_back(c.left_mult_op(c.basis(i)).transpose());
  std::vector<Scalar> tuple;
  split_recursive(st, Mat::identity(f, m), 0, tuple);

  // 4. verify candidates on the quotient, lift along the projection, verify on A
  for (const Vec& chiC : st.tuples) {
    if (!is_character(c, chiC)) continue;
    Vec chiA(f, d);
    for (size_t i = 0; i < d; ++i) chiA[i] = char_apply(chiC, q.project(a.basis(i)));
    if (is_character(a, chiA)) out.chars.push_back(chiA);
  }
  std::sort(out.chars.begin(), out.chars.end(), [](const Vec& x, const Vec& y) {
    for (size_t i = 0; i < x.dim(); ++i) {
      if (x[i] < y[i]) return true;
      if (y[i] < x[i]) return false;
    }
    return false;
  });
  out.chars.erase(std::unique(out.chars.begin(), out.chars.end()), out.chars.end());
  out.complete = st.complete;
  if (!st.complete) out.note = "eigenvalue search was not exhaustive for this field";
  return out;
}

} // namespace dynbase
