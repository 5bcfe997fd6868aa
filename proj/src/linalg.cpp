/**
 * @file linalg.cpp
 * @brief Exact dense linear algebra implementation.
 */
#include "dynbase/linalg.hpp"

#include <algorithm>

namespace dynbase {

// ---------------------------------------------------------------------------
// Vec

Vec Vec::operator+(const Vec& o) const {
  require(dim() == o.dim(), "DimMismatch", "vector add: " + std::to_string(dim()) +
                                               " vs " + std::to_string(o.dim()));
  Vec r(f_, dim());
  for (size_t i = 0; i < dim(); ++i) r[i] = v_[i] + o[i];
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  require(dim() == o.dim(), "DimMismatch", "vector sub: " + std::to_string(dim()) +
                                               " vs " + std::to_string(o.dim()));
  Vec r(f_, dim());
  for (size_t i = 0; i < dim(); ++i) r[i] = v_[i] - o[i];
  return r;
}

Vec Vec::scaled(const Scalar& c) const {
  Vec r(f_, dim());
  if (c.is_zero()) return r;
  for (size_t i = 0; i < dim(); ++i)
    if (!v_[i].is_zero()) r[i] = v_[i] * c;
  return r;
}

std::optional<size_t> Vec::first_difference(const Vec& o) const {
  require(dim() == o.dim(), "DimMismatch", "vector compare");
  for (size_t i = 0; i < dim(); ++i)
    if (v_[i] != o[i]) return i;
  return std::nullopt;
}

Scalar Vec::dot(const Vec& o) const {
  require(dim() == o.dim(), "DimMismatch", "pairing of unequal dimensions");
  Scalar s = Scalar::zero(f_);
  for (size_t i = 0; i < dim(); ++i)
    if (!v_[i].is_zero() && !o[i].is_zero()) s += v_[i] * o[i];
  return s;
}

std::string Vec::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < dim(); ++i) {
    if (i) s += ", ";
    s += v_[i].to_string();
  }
  return s + "]";
}

Vec tensor(const Vec& a, const Vec& b) {
  Vec r(a.field(), a.dim() * b.dim());
  for (size_t i = 0; i < a.dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.dim(); ++j)
      if (!b[j].is_zero()) r[pair_index(i, j, b.dim())] = a[i] * b[j];
  }
  return r;
}

// ---------------------------------------------------------------------------
// Mat

Mat Mat::identity(const Field& f, size_t n) {
  Mat m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_columns(const Field& f, size_t dim, const std::vector<Vec>& cols) {
  Mat m(f, dim, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].dim() == dim, "DimMismatch", "column has wrong dimension");
    for (size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Mat Mat::from_rows(const Field& f, size_t dim, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), dim);
  for (size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].dim() == dim, "DimMismatch", "row has wrong dimension");
    for (size_t j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(size_t i) const {
  Vec r(f_, cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec Mat::col(size_t j) const {
  Vec c(f_, rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Mat Mat::operator*(const Mat& o) const {
  require(cols_ == o.rows_, "DimMismatch",
          "matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
              std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Mat r(f_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

Vec Mat::apply(const Vec& v) const {
  require(cols_ == v.dim(), "DimMismatch", "matrix apply: " + std::to_string(cols_) +
                                               " cols vs vector dim " + std::to_string(v.dim()));
  Vec r(f_, rows_);
  for (size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (size_t i = 0; i < rows_; ++i)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "DimMismatch", "matrix add");
  Mat r(f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "DimMismatch", "matrix sub");
  Mat r(f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r(f_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i)
    if (!a_[i].is_zero()) r.a_[i] = a_[i] * c;
  return r;
}

Mat Mat::transpose() const {
  Mat r(f_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  require(a.rows_ == b.rows_, "DimMismatch", "hstack row mismatch");
  Mat r(a.f_, a.rows_, a.cols_ + b.cols_);
  for (size_t i = 0; i < a.rows_; ++i) {
    for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  require(a.cols_ == b.cols_, "DimMismatch", "vstack column mismatch");
  Mat r(a.f_, a.rows_ + b.rows_, a.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows_; ++i)
    for (size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
  return r;
}

Mat Mat::vstack_all(const std::vector<Mat>& blocks) {
  require(!blocks.empty(), "DimMismatch", "vstack_all of nothing");
  Mat r = blocks[0];
  for (size_t b = 1; b < blocks.size(); ++b) r = vstack(r, blocks[b]);
  return r;
}

std::string Mat::to_string() const {
  std::string s;
  for (size_t i = 0; i < rows_; ++i) {
    s += row(i).to_string();
    s += "\n";
  }
  return s;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          if (!b.at(k, l).is_zero())
            r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

// ---------------------------------------------------------------------------
// Elimination

Rref rref(const Mat& m) {
  Rref out;
  out.r = m;
  Mat& r = out.r;
  size_t lead = 0;
  for (size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    size_t piv = lead;
    while (piv < m.rows() && r.at(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != lead)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
    const Scalar inv = r.at(lead, c).inverse();
    for (size_t j = c; j < m.cols(); ++j)
      if (!r.at(lead, j).is_zero()) r.at(lead, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || r.at(i, c).is_zero()) continue;
      const Scalar factor = r.at(i, c);
      for (size_t j = c; j < m.cols(); ++j)
        if (!r.at(lead, j).is_zero()) r.at(i, j) -= factor * r.at(lead, j);
    }
    out.pivot_cols.push_back(c);
    ++lead;
  }
  out.rank = out.pivot_cols.size();
  return out;
}

size_t rank(const Mat& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Mat& a) {
  const Rref rr = rref(a);
  const Field f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t fc = 0; fc < a.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    Vec x(f, a.cols());
    x[fc] = Scalar::one(f);
    for (size_t i = 0; i < rr.rank; ++i)
      x[rr.pivot_cols[i]] = -rr.r.at(i, fc);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  require(a.rows() == b.dim(), "DimMismatch", "solve: rhs dimension mismatch");
  Mat aug = Mat::hstack(a, Mat::from_columns(a.field(), b.dim(), {b}));
  const Rref rr = rref(aug);
  for (size_t c : rr.pivot_cols)
    if (c == a.cols()) return std::nullopt; // pivot in the rhs column: inconsistent
  Vec x(a.field(), a.cols());
  for (size_t i = 0; i < rr.pivot_cols.size(); ++i)
    x[rr.pivot_cols[i]] = rr.r.at(i, a.cols());
  return x;
}

Mat inverse(const Mat& m) {
  require(m.rows() == m.cols(), "DimMismatch", "inverse of non-square matrix");
  const size_t n = m.rows();
  const Rref rr = rref(Mat::hstack(m, Mat::identity(m.field(), n)));
  require(rr.rank >= n && (n == 0 || rr.pivot_cols[n - 1] == n - 1), "Singular",
          "matrix is singular (rank " + std::to_string(rank(m)) + " of " + std::to_string(n) + ")");
  Mat inv(m.field(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
  return inv;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return {};
  const Field f = vectors[0].field();
  const size_t n = vectors[0].dim();
  const Rref rr = rref(Mat::from_rows(f, n, vectors));
  std::vector<Vec> basis;
  for (size_t i = 0; i < rr.rank; ++i) basis.push_back(rr.r.row(i));
  return basis;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  if (v.is_zero()) return true;
  if (basis.empty()) return false;
  const Field f = v.field();
  Mat a = Mat::from_rows(f, v.dim(), basis);
  Mat b = Mat::vstack(a, Mat::from_rows(f, v.dim(), {v}));
  return rank(a) == rank(b);
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::vector<Vec> ba = span_basis(a), bb = span_basis(b);
  if (ba.size() != bb.size()) return false;
  for (size_t i = 0; i < ba.size(); ++i)
    if (ba[i] != bb[i]) return false; // RREF bases are canonical
  return true;
}

// ---------------------------------------------------------------------------
// Quotient

Quotient::Quotient(const Field& f, size_t n, const std::vector<Vec>& spanning)
    : f_(f), n_(n) {
  std::vector<Vec> rows = spanning;
  for (const Vec& v : rows)
    require(v.dim() == n, "DimMismatch", "quotient: subspace vector of wrong dimension");
  if (rows.empty()) rows.emplace_back(f, n); // zero subspace
  const Rref rr = rref(Mat::from_rows(f, n, rows));
  basis_rref_ = Mat(f, rr.rank, n);
  for (size_t i = 0; i < rr.rank; ++i)
    for (size_t j = 0; j < n; ++j) basis_rref_.at(i, j) = rr.r.at(i, j);
  pivot_cols_ = rr.pivot_cols;
  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivot_cols_) is_pivot[c] = true;
  for (size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols_.push_back(c);
}

Vec Quotient::project(const Vec& v) const {
  require(v.dim() == n_, "DimMismatch", "quotient projection");
  Vec w = v;
  for (size_t i = 0; i < pivot_cols_.size(); ++i) {
    const Scalar c = w[pivot_cols_[i]];
    if (c.is_zero()) continue;
    for (size_t j = 0; j < n_; ++j)
      if (!basis_rref_.at(i, j).is_zero()) w[j] -= c * basis_rref_.at(i, j);
  }
  Vec out(f_, free_cols_.size());
  for (size_t k = 0; k < free_cols_.size(); ++k) out[k] = w[free_cols_[k]];
  return out;
}

Vec Quotient::lift(const Vec& coords) const {
  require(coords.dim() == free_cols_.size(), "DimMismatch", "quotient lift");
  Vec v(f_, n_);
  for (size_t k = 0; k < free_cols_.size(); ++k) v[free_cols_[k]] = coords[k];
  return v;
}

std::vector<Scalar> minimal_polynomial(const Mat& x) {
  const Field f = x.field();
  const size_t n = x.rows();
  // Flatten successive powers and look for the first linear dependence.
  std::vector<Vec> pows; // I, X, X², ... flattened to n²-vectors
  Mat p = Mat::identity(f, n);
  for (size_t deg = 0;; ++deg) {
    Vec flat(f, n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) flat[i * n + j] = p.at(i, j);
    // Solve Σ c_k pows[k] = flat
    if (!pows.empty()) {
      Mat cols = Mat::from_columns(f, n * n, pows);
      if (auto c = solve(cols, flat)) {
        std::vector<Scalar> poly; // coefficients of t^0 .. t^deg, monic
        for (size_t k = 0; k < deg; ++k) poly.push_back(Scalar::zero(f) - (*c)[k]);
        poly.push_back(Scalar::one(f));
        return poly;
      }
    }
    pows.push_back(flat);
    require(deg <= n, "SolveFailure", "minimal polynomial did not terminate");
    p = p * x;
  }
}

Scalar evaluate_polynomial(const std::vector<Scalar>& poly, const Scalar& t) {
  Scalar acc = Scalar::zero(t.field());
  for (size_t k = poly.size(); k-- > 0;) acc = acc * t + poly[k];
  return acc;
}

namespace {

/** Positive divisors of |v| by trial division; clears ok when v is too large. */
std::vector<mpz_class> divisors_of(const mpz_class& v, bool& ok) {
  mpz_class a = abs(v);
  std::vector<mpz_class> out;
  if (a == 0) { ok = false; return out; }
  if (a > mpz_class("1000000000000")) { ok = false; return out; }
  for (mpz_class d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(a / d);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace

std::vector<Scalar> polynomial_roots(std::vector<Scalar> poly, const Field& f, bool& complete) {
  std::vector<Scalar> roots;
  // strip roots at zero
  while (poly.size() > 1 && poly.front().is_zero()) {
    roots.push_back(Scalar::zero(f));
    poly.erase(poly.begin());
  }
  if (poly.size() > 1) {
    if (!f.is_rational()) {
      if (f.p > 4096) {
        complete = false;
      } else {
        for (unsigned long r = 0; r < f.p; ++r) {
          Scalar t = Scalar::of_int(static_cast<long>(r), f);
          if (evaluate_polynomial(poly, t).is_zero()) roots.push_back(t);
        }
      }
    } else {
      // rational root theorem on the denominator-cleared polynomial
      mpz_class lcm_den = 1;
      for (const Scalar& c : poly) lcm_den = lcm(lcm_den, c.rep().get_den());
      std::vector<mpz_class> ic;
      for (const Scalar& c : poly) {
        mpq_class scaled = c.rep() * mpq_class(lcm_den);
        ic.push_back(scaled.get_num());
      }
      bool ok = true;
      std::vector<mpz_class> ps = divisors_of(ic.front(), ok);
      std::vector<mpz_class> qs = divisors_of(ic.back(), ok);
      if (!ok) {
        complete = false;
      } else {
        for (const mpz_class& p : ps)
          for (const mpz_class& q : qs)
            for (int sign = 0; sign < 2; ++sign) {
              mpq_class cand(sign ? mpz_class(-p) : p, q);
              cand.canonicalize();
              Scalar t = Scalar::parse(cand.get_str(), f);
              if (evaluate_polynomial(poly, t).is_zero()) roots.push_back(t);
            }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Mat restrict_operator(const Mat& op, const Mat& basis) {
  const size_t s = basis.cols();
  std::vector<Vec> xcols;
  for (size_t c = 0; c < s; ++c) {
    Vec rhs = op.apply(basis.col(c));
    auto x = solve(basis, rhs);
    require(x.has_value(), "SolveFailure", "subspace not invariant under the operator");
    xcols.push_back(*x);
  }
  return Mat::from_columns(op.field(), s, xcols);
}

} // namespace dynbase
