/**
 * @file linalg.hpp
 * @brief Exact dense linear algebra over ℚ / 𝔽_p: vectors, matrices, tensors,
 *        reduced row echelon form, kernels, solving, inversion, Kronecker products.
 *
 * Everything is computed by fraction-free-safe exact Gaussian elimination on
 * GMP scalars; there is no pivoting heuristic beyond "first nonzero", which
 * keeps every result canonical and bit-reproducible.
 *
 * Conventions (global across the kernel):
 *   - Matrices act on column vectors: (A v)_i = Σ_j A(i,j) v_j.
 *   - Tensor products are lexicographic with the LEFT factor major:
 *     basis vector e_i ⊗ e_j of U ⊗ V has flat index i * dim(V) + j.
 *   - kernel_basis / quotient bases are the canonical RREF choices, so every
 *     derived object is deterministic.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dynbase/error.hpp"
#include "dynbase/scalar.hpp"

namespace dynbase {

/** Flat index of e_i ⊗ e_j in U ⊗ V with dim(V) = dv (left factor major). */
inline size_t pair_index(size_t i, size_t j, size_t dv) { return i * dv + j; }

/** Flat index of e_i ⊗ e_j ⊗ e_k with dim(V) = dv, dim(W) = dw. */
inline size_t triple_index(size_t i, size_t j, size_t k, size_t dv, size_t dw) {
  return (i * dv + j) * dw + k;
}

/** Dense exact vector over a fixed field. */
class Vec {
public:
  Vec() = default;
  Vec(const Field& f, size_t n) : f_(f), v_(n, Scalar::zero(f)) {}

  static Vec basis(const Field& f, size_t n, size_t i) {
    Vec e(f, n);
    e[i] = Scalar::one(f);
    return e;
  }

  size_t dim() const { return v_.size(); }
  const Field& field() const { return f_; }

  Scalar& operator[](size_t i) { return v_[i]; }
  const Scalar& operator[](size_t i) const { return v_[i]; }

  bool is_zero() const {
    for (const auto& x : v_)
      if (!x.is_zero()) return false;
    return true;
  }

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec scaled(const Scalar& c) const;
  Vec operator-() const { return scaled(-Scalar::one(f_)); }
  Vec& operator+=(const Vec& o) { *this = *this + o; return *this; }
  Vec& operator-=(const Vec& o) { *this = *this - o; return *this; }

  bool operator==(const Vec& o) const { return v_ == o.v_; }
  bool operator!=(const Vec& o) const { return !(*this == o); }

  /** First index where this and o differ, or nullopt if equal. */
  std::optional<size_t> first_difference(const Vec& o) const;

  /** Covector-style pairing Σ_i this_i o_i. */
  Scalar dot(const Vec& o) const;

  /** "[a, b, c]" with canonical scalar literals. */
  std::string to_string() const;

private:
  Field f_;
  std::vector<Scalar> v_;
};

/** Kronecker product of vectors, left factor major. */
Vec tensor(const Vec& a, const Vec& b);

/** Dense exact matrix (row-major), acting on column vectors. */
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(const Field& f, size_t rows, size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

  static Mat identity(const Field& f, size_t n);
  static Mat from_columns(const Field& f, size_t dim, const std::vector<Vec>& cols);
  static Mat from_rows(const Field& f, size_t dim, const std::vector<Vec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field& field() const { return f_; }

  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Vec row(size_t i) const;
  Vec col(size_t j) const;

  Mat operator*(const Mat& o) const;
  Vec apply(const Vec& v) const; // A v, column-vector convention
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& c) const;
  Mat transpose() const;

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  /** [A | B] side by side (same row count). */
  static Mat hstack(const Mat& a, const Mat& b);
  /** A on top of B (same column count). */
  static Mat vstack(const Mat& a, const Mat& b);
  /** Stack many operators vertically (e.g. simultaneous kernel computations). */
  static Mat vstack_all(const std::vector<Mat>& blocks);

  std::string to_string() const;

private:
  Field f_;
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

/** Kronecker product, left factor major: (A⊗B)(ik,jl) = A(i,j) B(k,l). */
Mat kron(const Mat& a, const Mat& b);

/** Result of reduced row echelon form. */
struct Rref {
  Mat r;                          // the RREF matrix
  std::vector<size_t> pivot_cols; // strictly increasing
  size_t rank = 0;
};

Rref rref(const Mat& m);
size_t rank(const Mat& m);

/** Canonical basis of the right kernel {x : A x = 0} (free coords set to 1). */
std::vector<Vec> kernel_basis(const Mat& a);

/** One exact solution of A x = b, or nullopt when inconsistent. */
std::optional<Vec> solve(const Mat& a, const Vec& b);

/** Matrix inverse; throws Singular when rank < n. */
Mat inverse(const Mat& m);

/** Canonical basis (RREF rows) of the span of the given vectors. */
std::vector<Vec> span_basis(const std::vector<Vec>& vectors);

/** Is v in the span of basis? (basis need not be independent) */
bool in_span(const std::vector<Vec>& basis, const Vec& v);

/** Do two spanning sets generate the same subspace? */
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b);

/** Monic minimal polynomial of a square matrix, constant term first. */
std::vector<Scalar> minimal_polynomial(const Mat& x);

/** Evaluate a polynomial (coefficients constant-term first) at t. */
Scalar evaluate_polynomial(const std::vector<Scalar>& poly, const Scalar& t);

/**
 * All roots of poly lying in the ground field (rational root theorem over ℚ,
 * exhaustive scan over small prime fields).  Clears `complete` when the
 * search could not be exhaustive for the field.
 */
std::vector<Scalar> polynomial_roots(std::vector<Scalar> poly, const Field& f, bool& complete);

/** Restrict op to the column span of basis: solve basis·X = op·basis. */
Mat restrict_operator(const Mat& op, const Mat& basis);

/**
 * Quotient of k^n by a subspace W, with the canonical section.
 *
 * Representatives are the standard basis vectors at the non-pivot columns of
 * the RREF basis of W; `project` sends v to its coordinate vector in the
 * quotient, `lift` sends a quotient coordinate vector to the canonical
 * representative in k^n.
 */
class Quotient {
public:
  /** W given by any spanning set inside k^n. */
  Quotient(const Field& f, size_t n, const std::vector<Vec>& spanning);

  size_t ambient_dim() const { return n_; }
  size_t dim() const { return free_cols_.size(); }
  const std::vector<size_t>& representative_coords() const { return free_cols_; }

  Vec project(const Vec& v) const;          // k^n -> k^dim
  Vec lift(const Vec& coords) const;        // k^dim -> k^n (canonical section)
  bool contains_in_subspace(const Vec& v) const { return project(v).is_zero(); }

private:
  Field f_;
  size_t n_;
  Mat basis_rref_;                 // RREF rows spanning W
  std::vector<size_t> pivot_cols_; // of basis_rref_
  std::vector<size_t> free_cols_;  // quotient coordinates
};

/** Dense 3-tensor T(i,j,k), e.g. structure constants of a multiplication. */
class Tensor3 {
public:
  Tensor3() : d0_(0), d1_(0), d2_(0) {}
  Tensor3(const Field& f, size_t d0, size_t d1, size_t d2)
      : f_(f), d0_(d0), d1_(d1), d2_(d2), a_(d0 * d1 * d2, Scalar::zero(f)) {}

  size_t dim0() const { return d0_; }
  size_t dim1() const { return d1_; }
  size_t dim2() const { return d2_; }
  const Field& field() const { return f_; }

  Scalar& at(size_t i, size_t j, size_t k) { return a_[(i * d1_ + j) * d2_ + k]; }
  const Scalar& at(size_t i, size_t j, size_t k) const { return a_[(i * d1_ + j) * d2_ + k]; }

  bool operator==(const Tensor3& o) const {
    return d0_ == o.d0_ && d1_ == o.d1_ && d2_ == o.d2_ && a_ == o.a_;
  }
  bool operator!=(const Tensor3& o) const { return !(*this == o); }

private:
  Field f_;
  size_t d0_, d1_, d2_;
  std::vector<Scalar> a_;
};

/** Dense 4-tensor T(i,j,k,l), e.g. dynamical multiplication constants. */
class Tensor4 {
public:
  Tensor4() : d0_(0), d1_(0), d2_(0), d3_(0) {}
  Tensor4(const Field& f, size_t d0, size_t d1, size_t d2, size_t d3)
      : f_(f), d0_(d0), d1_(d1), d2_(d2), d3_(d3), a_(d0 * d1 * d2 * d3, Scalar::zero(f)) {}

  size_t dim0() const { return d0_; }
  size_t dim1() const { return d1_; }
  size_t dim2() const { return d2_; }
  size_t dim3() const { return d3_; }
  const Field& field() const { return f_; }

  Scalar& at(size_t i, size_t j, size_t k, size_t l) {
    return a_[((i * d1_ + j) * d2_ + k) * d3_ + l];
  }
  const Scalar& at(size_t i, size_t j, size_t k, size_t l) const {
    return a_[((i * d1_ + j) * d2_ + k) * d3_ + l];
  }

  bool operator==(const Tensor4& o) const {
    return d0_ == o.d0_ && d1_ == o.d1_ && d2_ == o.d2_ && d3_ == o.d3_ && a_ == o.a_;
  }
  bool operator!=(const Tensor4& o) const { return !(*this == o); }

private:
  Field f_;
  size_t d0_, d1_, d2_, d3_;
  std::vector<Scalar> a_;
};

} // namespace dynbase
