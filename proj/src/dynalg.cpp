/**
 * @file dynalg.cpp
 * @brief Dynamical algebras, their smash products, induced modules, and the
 *        corner algebras of invariant characters.
 *
 * Conventions.  A⊗L is flattened left-factor major: the slot e_a⊗e_λ sits at
 * a·dim(L)+λ.  The dressing permutation τ : L⊗A → A⊗L acts on basis tensors
 * by τ(e_λ⊗x) = (λ⁽¹⁾▷x)⊗λ^[∞], read off the coaction of L.  All identities
 * are verified on full basis tuples in exact arithmetic; reports carry the
 * first failing index tuple and both values.
 */
#include "dynbase/dynalg.hpp"

#include <functional>

#include "dynbase/error.hpp"

namespace dynbase {

namespace {

/** Apply the i-th operator slice of an action tensor to a vector. */
Vec t3_act(const Tensor3& t, size_t i, const Vec& v) {
  Vec out(v.field(), t.dim2());
  for (size_t x = 0; x < t.dim1(); ++x) {
    if (v[x].is_zero()) continue;
    for (size_t y = 0; y < t.dim2(); ++y) {
      const Scalar& c = t.at(i, x, y);
      if (!c.is_zero()) out[y] += c * v[x];
    }
  }
  return out;
}

Mat t3_op(const Tensor3& t, size_t i) {
  Mat m(t.field(), t.dim2(), t.dim1());
  for (size_t x = 0; x < t.dim1(); ++x)
    for (size_t y = 0; y < t.dim2(); ++y) m.at(y, x) = t.at(i, x, y);
  return m;
}

/** The slice e_x ⋇ e_y of a dynamical multiplication as a flat A⊗L vector. */
Vec dm_slice(const Tensor4& t, size_t x, size_t y) {
  Vec out(t.field(), t.dim2() * t.dim3());
  for (size_t k = 0; k < t.dim2(); ++k)
    for (size_t l = 0; l < t.dim3(); ++l) out[pair_index(k, l, t.dim3())] = t.at(x, y, k, l);
  return out;
}

/** Multiply the L-leg of w ∈ A⊗L from the right by μ ∈ L. */
Vec l_leg_right_mul(const AlgebraData& l, size_t adim, const Vec& w, const Vec& mu) {
  const size_t ld = l.dim;
  Vec out(w.field(), w.dim());
  for (size_t k = 0; k < adim; ++k)
    for (size_t nu = 0; nu < ld; ++nu) {
      const Scalar& c = w[pair_index(k, nu, ld)];
      if (c.is_zero()) continue;
      for (size_t m = 0; m < ld; ++m) {
        if (mu[m].is_zero()) continue;
        for (size_t np = 0; np < ld; ++np) {
          const Scalar& s = l.mult.at(nu, m, np);
          if (!s.is_zero()) out[pair_index(k, np, ld)] += c * mu[m] * s;
        }
      }
    }
  return out;
}

/** τ(e_λ ⊗ x) = (λ⁽¹⁾▷x) ⊗ λ^[∞] ∈ A⊗L. */
Vec tau_apply(const BaseAlgebraData& b, const DynamicalAlgebraData& a, size_t lam, const Vec& x) {
  const size_t ld = b.dim();
  Vec out(x.field(), a.dim() * ld);
  for (size_t q = 0; q < b.hdim(); ++q)
    for (size_t lp = 0; lp < ld; ++lp) {
      const Scalar& c = b.coaction.at(lam, q, lp);
      if (c.is_zero()) continue;
      const Vec moved = a.act(q, x);
      for (size_t k = 0; k < a.dim(); ++k)
        if (!moved[k].is_zero()) out[pair_index(k, lp, ld)] += c * moved[k];
    }
  return out;
}

/** Matrix of τ : L⊗A → A⊗L (columns indexed λ·dim(A)+x). */
Mat tau_matrix(const BaseAlgebraData& b, const DynamicalAlgebraData& a) {
  const size_t d = a.dim(), ld = b.dim();
  Mat t(b.field(), d * ld, d * ld);
  for (size_t lam = 0; lam < ld; ++lam)
    for (size_t x = 0; x < d; ++x) {
      const Vec img = tau_apply(b, a, lam, Vec::basis(b.field(), d, x));
      for (size_t r = 0; r < d * ld; ++r) t.at(r, pair_index(lam, x, d)) = img[r];
    }
  return t;
}

/** H acting diagonally on A⊗L through the coproduct. */
Tensor3 diagonal_action(const HopfData& h, const BaseAlgebraData& b,
                        const DynamicalAlgebraData& a) {
  const size_t d = a.dim(), ld = b.dim(), n = d * ld;
  Tensor3 act(h.field(), h.dim(), n, n);
  for (size_t i = 0; i < h.dim(); ++i) {
    Mat op(h.field(), n, n);
    for (size_t p = 0; p < h.dim(); ++p)
      for (size_t q = 0; q < h.dim(); ++q) {
        const Scalar& c = h.comult.at(i, p, q);
        if (c.is_zero()) continue;
        op = op + kron(a.action_op(p), b.action_op(q)).scaled(c);
      }
    for (size_t x = 0; x < n; ++x)
      for (size_t y = 0; y < n; ++y) act.at(i, x, y) = op.at(y, x);
  }
  return act;
}

/** Joint kernel of (ρ(h_i) − ε(h_i)·id) over the basis of H. */
std::vector<Vec> h_invariants(const HopfData& h, const std::vector<Mat>& ops) {
  if (ops.empty()) return {};
  const size_t d = ops[0].rows();
  std::vector<Mat> blocks;
  for (size_t i = 0; i < h.dim(); ++i)
    blocks.push_back(ops[i] - Mat::identity(h.field(), d).scaled(h.counit[i]));
  return kernel_basis(Mat::vstack_all(blocks));
}

/**
 * Restrict a bilinear product of the ambient space to the span of `basis`,
 * solving for coordinates; throws NotClosed with the given context when a
 * product (or the unit) escapes the span.
 */
AlgebraData subalgebra_on(const Field& f, const std::vector<Vec>& basis, const Vec& unit,
                          const std::function<Vec(const Vec&, const Vec&)>& mul,
                          const std::string& what) {
  const size_t r = basis.size();
  const size_t ambient = basis.empty() ? unit.dim() : basis[0].dim();
  const Mat inc = Mat::from_columns(f, ambient, basis);
  AlgebraData alg(f, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      const Vec prod = mul(basis[i], basis[j]);
      const auto coords = solve(inc, prod);
      require(coords.has_value(), "NotClosed", what + ": product of basis elements leaves the span");
      for (size_t k = 0; k < r; ++k) alg.mult.at(i, j, k) = (*coords)[k];
    }
  if (!unit.is_zero()) {
    const auto coords = solve(inc, unit);
    require(coords.has_value(), "NotClosed", what + ": the unit lies outside the span");
    alg.unit = *coords;
  }
  return alg;
}

/** First failing item name of a report, for error messages. */
std::string first_failure(const CheckReport& rep) {
  for (const auto& item : rep.items)
    if (!item.pass) return item.name;
  return "";
}

} // namespace

Vec DynamicalAlgebraData::act(size_t i, const Vec& a) const { return t3_act(action, i, a); }

Vec DynamicalAlgebraData::act(const Vec& h, const Vec& a) const {
  Vec out(field(), dim());
  for (size_t i = 0; i < hdim(); ++i)
    if (!h[i].is_zero()) out += t3_act(action, i, a).scaled(h[i]);
  return out;
}

Mat DynamicalAlgebraData::action_op(size_t i) const { return t3_op(action, i); }

Vec DynamicalAlgebraData::dmul(const Vec& a, const Vec& b) const {
  require(a.dim() == dim() && b.dim() == dim(), "DimMismatch", "dynamical product");
  Vec out(field(), dim() * ldim());
  for (size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      const Scalar c = a[i] * b[j];
      for (size_t k = 0; k < dim(); ++k)
        for (size_t l = 0; l < ldim(); ++l) {
          const Scalar& s = dmult.at(i, j, k, l);
          if (!s.is_zero()) out[pair_index(k, l, ldim())] += c * s;
        }
    }
  }
  return out;
}

Vec ModuleAlgebraData::act(size_t i, const Vec& x) const { return t3_act(action, i, x); }
Mat ModuleAlgebraData::action_op(size_t i) const { return t3_op(action, i); }

Vec ModuleAlgebraData::l_left(const Vec& lam, const Vec& x) const {
  Vec out(alg.field, dim());
  for (size_t i = 0; i < left_l.dim0(); ++i)
    if (!lam[i].is_zero()) out += t3_act(left_l, i, x).scaled(lam[i]);
  return out;
}

Vec ModuleAlgebraData::l_right(const Vec& x, const Vec& lam) const {
  Vec out(alg.field, dim());
  for (size_t i = 0; i < right_l.dim0(); ++i)
    if (!lam[i].is_zero()) out += t3_act(right_l, i, x).scaled(lam[i]);
  return out;
}

CheckReport check_module_algebra(const HopfData& h, const AlgebraData& alg,
                                 const Tensor3& action) {
  require(action.dim0() == h.dim() && action.dim1() == alg.dim && action.dim2() == alg.dim,
          "DimMismatch", "module algebra: action tensor shape");
  CheckReport rep("H-module algebra");
  HModule mod;
  for (size_t i = 0; i < h.dim(); ++i) mod.rho.push_back(t3_op(action, i));
  rep.merge("module_", check_module(h, mod));

  bool mult_ok = true;
  for (size_t i = 0; i < h.dim() && mult_ok; ++i)
    for (size_t x = 0; x < alg.dim && mult_ok; ++x)
      for (size_t y = 0; y < alg.dim && mult_ok; ++y) {
        const Vec lhs = t3_act(action, i, alg.mul(alg.basis(x), alg.basis(y)));
        Vec rhs(alg.field, alg.dim);
        for (size_t p = 0; p < h.dim(); ++p)
          for (size_t q = 0; q < h.dim(); ++q) {
            const Scalar& c = h.comult.at(i, p, q);
            if (c.is_zero()) continue;
            rhs += alg.mul(t3_act(action, p, alg.basis(x)), t3_act(action, q, alg.basis(y)))
                       .scaled(c);
          }
        if (auto w = lhs.first_difference(rhs)) {
          rep.add_fail("action_multiplicative", {i, x, y, *w}, lhs[*w].to_string(),
                       rhs[*w].to_string());
          mult_ok = false;
        }
      }
  if (mult_ok) rep.add_pass("action_multiplicative");

  if (!alg.unit.is_zero()) {
    bool unit_ok = true;
    for (size_t i = 0; i < h.dim() && unit_ok; ++i) {
      const Vec lhs = t3_act(action, i, alg.unit);
      const Vec rhs = alg.unit.scaled(h.counit[i]);
      if (auto w = lhs.first_difference(rhs)) {
        rep.add_fail("unit_invariant", {i, *w}, lhs[*w].to_string(), rhs[*w].to_string());
        unit_ok = false;
      }
    }
    if (unit_ok) rep.add_pass("unit_invariant");
  }
  return rep;
}

CheckReport check_module_algebra_hl(const HopfData& h, const BaseAlgebraData& b,
                                    const ModuleAlgebraData& m) {
  const size_t d = m.dim(), ld = b.dim();
  require(m.action.dim0() == h.dim() && m.left_l.dim0() == ld && m.right_l.dim0() == ld,
          "DimMismatch", "(H,L)-module algebra: tensor shapes");
  CheckReport rep("(H,L)-module algebra");

  bool assoc = true;
  for (size_t i = 0; i < d && assoc; ++i)
    for (size_t j = 0; j < d && assoc; ++j) {
      const Vec eij = m.alg.mul(m.alg.basis(i), m.alg.basis(j));
      for (size_t k = 0; k < d && assoc; ++k) {
        const Vec lhs = m.alg.mul(eij, m.alg.basis(k));
        const Vec rhs = m.alg.mul(m.alg.basis(i), m.alg.mul(m.alg.basis(j), m.alg.basis(k)));
        if (auto w = lhs.first_difference(rhs)) {
          rep.add_fail("associativity", {i, j, k, *w}, lhs[*w].to_string(), rhs[*w].to_string());
          assoc = false;
        }
      }
    }
  if (assoc) rep.add_pass("associativity");

  if (!m.alg.unit.is_zero()) {
    bool unital = true;
    for (size_t i = 0; i < d && unital; ++i) {
      const Vec ei = m.alg.basis(i);
      if (m.alg.mul(m.alg.unit, ei) != ei || m.alg.mul(ei, m.alg.unit) != ei) {
        rep.add_fail("two_sided_unit", {i}, m.alg.mul(m.alg.unit, ei).to_string(), ei.to_string());
        unital = false;
      }
    }
    if (unital) rep.add_pass("two_sided_unit");
  }

  rep.merge("", check_module_algebra(h, m.alg, m.action));

  // L-bimodule laws and their compatibility with the multiplication.
  auto pair_law = [&](const std::string& name,
                      const std::function<Vec(size_t, size_t, size_t)>& lhs,
                      const std::function<Vec(size_t, size_t, size_t)>& rhs, size_t n1, size_t n2,
                      size_t n3) {
    bool ok = true;
    for (size_t i = 0; i < n1 && ok; ++i)
      for (size_t j = 0; j < n2 && ok; ++j)
        for (size_t k = 0; k < n3 && ok; ++k) {
          const Vec l = lhs(i, j, k), r = rhs(i, j, k);
          if (auto w = l.first_difference(r)) {
            rep.add_fail(name, {i, j, k, *w}, l[*w].to_string(), r[*w].to_string());
            ok = false;
          }
        }
    if (ok) rep.add_pass(name);
  };
  auto eb = [&](size_t i) { return m.alg.basis(i); };
  auto el = [&](size_t i) { return b.l.basis(i); };

  pair_law(
      "l_left_action",
      [&](size_t s, size_t t, size_t x) { return m.l_left(b.l.mul(el(s), el(t)), eb(x)); },
      [&](size_t s, size_t t, size_t x) { return m.l_left(el(s), m.l_left(el(t), eb(x))); }, ld,
      ld, d);
  pair_law(
      "l_right_action",
      [&](size_t x, size_t s, size_t t) { return m.l_right(eb(x), b.l.mul(el(s), el(t))); },
      [&](size_t x, size_t s, size_t t) { return m.l_right(m.l_right(eb(x), el(s)), el(t)); }, d,
      ld, ld);
  pair_law(
      "l_bimodule",
      [&](size_t s, size_t x, size_t t) { return m.l_right(m.l_left(el(s), eb(x)), el(t)); },
      [&](size_t s, size_t x, size_t t) { return m.l_left(el(s), m.l_right(eb(x), el(t))); }, ld,
      d, ld);
  pair_law(
      "l_left_mult_compat",
      [&](size_t s, size_t x, size_t y) { return m.l_left(el(s), m.alg.mul(eb(x), eb(y))); },
      [&](size_t s, size_t x, size_t y) { return m.alg.mul(m.l_left(el(s), eb(x)), eb(y)); }, ld,
      d, d);
  pair_law(
      "l_right_mult_compat",
      [&](size_t x, size_t y, size_t s) { return m.l_right(m.alg.mul(eb(x), eb(y)), el(s)); },
      [&](size_t x, size_t y, size_t s) { return m.alg.mul(eb(x), m.l_right(eb(y), el(s))); }, d,
      d, ld);
  pair_law(
      "l_middle_associativity",
      [&](size_t x, size_t s, size_t y) { return m.alg.mul(m.l_right(eb(x), el(s)), eb(y)); },
      [&](size_t x, size_t s, size_t y) { return m.alg.mul(eb(x), m.l_left(el(s), eb(y))); }, d,
      ld, d);

  {
    bool ok = true;
    for (size_t x = 0; x < d && ok; ++x) {
      const Vec lu = m.l_left(b.l.unit, eb(x)), ru = m.l_right(eb(x), b.l.unit);
      if (lu != eb(x) || ru != eb(x)) {
        rep.add_fail("l_unit_acts_trivially", {x}, lu.to_string(), eb(x).to_string());
        ok = false;
      }
    }
    if (ok) rep.add_pass("l_unit_acts_trivially");
  }

  // H-equivariance of both L-actions: h▷(λx) = (h⁽¹⁾▷λ)(h⁽²⁾▷x), and mirrored.
  auto equivariant = [&](const std::string& name, bool left_side) {
    bool ok = true;
    for (size_t i = 0; i < h.dim() && ok; ++i)
      for (size_t s = 0; s < ld && ok; ++s)
        for (size_t x = 0; x < d && ok; ++x) {
          const Vec lhs = m.act(i, left_side ? m.l_left(el(s), eb(x)) : m.l_right(eb(x), el(s)));
          Vec rhs(m.alg.field, d);
          for (size_t p = 0; p < h.dim(); ++p)
            for (size_t q = 0; q < h.dim(); ++q) {
              const Scalar& c = h.comult.at(i, p, q);
              if (c.is_zero()) continue;
              rhs += (left_side ? m.l_left(b.act(p, el(s)), m.act(q, eb(x)))
                                : m.l_right(m.act(p, eb(x)), b.act(q, el(s))))
                         .scaled(c);
            }
          if (auto w = lhs.first_difference(rhs)) {
            rep.add_fail(name, {i, s, x, *w}, lhs[*w].to_string(), rhs[*w].to_string());
            ok = false;
          }
        }
    if (ok) rep.add_pass(name);
  };
  equivariant("l_left_equivariant", true);
  equivariant("l_right_equivariant", false);
  return rep;
}

CheckReport check_dynamical(const HopfData& h, const BaseAlgebraData& b,
                            const DynamicalAlgebraData& a) {
  const size_t d = a.dim(), ld = a.ldim(), hd = a.hdim();
  require(hd == h.dim() && hd == b.hdim() && ld == b.dim(), "DimMismatch",
          "dynamical algebra: H/L dimensions disagree with the base");
  require(a.dmult.dim0() == d && a.dmult.dim1() == d && a.dmult.dim2() == d && a.unit.dim() == d,
          "DimMismatch", "dynamical algebra: multiplication tensor shape");
  CheckReport rep("dynamical algebra");

  HModule amod;
  for (size_t i = 0; i < hd; ++i) amod.rho.push_back(a.action_op(i));
  rep.merge("module_", check_module(h, amod));

  // Precompute basis products and action columns.
  std::vector<std::vector<Vec>> D(d);
  for (size_t x = 0; x < d; ++x)
    for (size_t y = 0; y < d; ++y) D[x].push_back(dm_slice(a.dmult, x, y));
  std::vector<std::vector<Vec>> col(hd);
  for (size_t p = 0; p < hd; ++p)
    for (size_t x = 0; x < d; ++x) col[p].push_back(a.act(p, Vec::basis(a.field(), d, x)));

  // Equivariance: h▷(x ⋇ y) = (h⁽¹⁾▷x) ⋇ (h⁽²⁾▷y).
  {
    bool ok = true;
    for (size_t i = 0; i < hd && ok; ++i) {
      Mat big(a.field(), d * ld, d * ld);
      for (size_t p = 0; p < hd; ++p)
        for (size_t q = 0; q < hd; ++q) {
          const Scalar& c = h.comult.at(i, p, q);
          if (!c.is_zero()) big = big + kron(a.action_op(p), b.action_op(q)).scaled(c);
        }
      for (size_t x = 0; x < d && ok; ++x)
        for (size_t y = 0; y < d && ok; ++y) {
          const Vec lhs = big.apply(D[x][y]);
          Vec rhs(a.field(), d * ld);
          for (size_t p = 0; p < hd; ++p)
            for (size_t q = 0; q < hd; ++q) {
              const Scalar& c = h.comult.at(i, p, q);
              if (!c.is_zero()) rhs += a.dmul(col[p][x], col[q][y]).scaled(c);
            }
          if (auto w = lhs.first_difference(rhs)) {
            const auto kl = decode_index(*w, {d, ld});
            rep.add_fail("equivariance", {i, x, y, kl[0], kl[1]}, lhs[*w].to_string(),
                         rhs[*w].to_string());
            ok = false;
          }
        }
    }
    if (ok) rep.add_pass("equivariance");
  }

  // Shifted associativity on all basis triples.
  {
    std::vector<std::vector<Vec>> tau(ld);
    for (size_t lam = 0; lam < ld; ++lam)
      for (size_t z = 0; z < d; ++z)
        tau[lam].push_back(tau_apply(b, a, lam, Vec::basis(a.field(), d, z)));
    bool ok = true;
    for (size_t x = 0; x < d && ok; ++x)
      for (size_t y = 0; y < d && ok; ++y)
        for (size_t z = 0; z < d && ok; ++z) {
          Vec bottom(a.field(), d * ld);
          const Vec& w = D[y][z];
          for (size_t bp = 0; bp < d; ++bp)
            for (size_t mu = 0; mu < ld; ++mu) {
              const Scalar& c = w[pair_index(bp, mu, ld)];
              if (c.is_zero()) continue;
              bottom += l_leg_right_mul(b.l, d, D[x][bp], b.l.basis(mu)).scaled(c);
            }
          Vec top(a.field(), d * ld);
          const Vec& t = D[x][y];
          for (size_t a1 = 0; a1 < d; ++a1)
            for (size_t lam = 0; lam < ld; ++lam) {
              const Scalar& c1 = t[pair_index(a1, lam, ld)];
              if (c1.is_zero()) continue;
              const Vec& u = tau[lam][z];
              for (size_t cc = 0; cc < d; ++cc)
                for (size_t lp = 0; lp < ld; ++lp) {
                  const Scalar& c2 = u[pair_index(cc, lp, ld)];
                  if (c2.is_zero()) continue;
                  top += l_leg_right_mul(b.l, d, D[a1][cc], b.l.basis(lp)).scaled(c1 * c2);
                }
            }
          if (auto wdx = top.first_difference(bottom)) {
            const auto kl = decode_index(*wdx, {d, ld});
            rep.add_fail("shifted_associativity", {x, y, z, kl[0], kl[1]}, top[*wdx].to_string(),
                         bottom[*wdx].to_string());
            ok = false;
          }
        }
    if (ok) rep.add_pass("shifted_associativity");
  }

  if (!a.unit.is_zero()) {
    {
      bool ok = true;
      for (size_t i = 0; i < hd && ok; ++i) {
        const Vec lhs = a.act(i, a.unit);
        const Vec rhs = a.unit.scaled(h.counit[i]);
        if (auto w = lhs.first_difference(rhs)) {
          rep.add_fail("unit_invariant", {i, *w}, lhs[*w].to_string(), rhs[*w].to_string());
          ok = false;
        }
      }
      if (ok) rep.add_pass("unit_invariant");
    }
    {
      bool ok = true;
      for (size_t x = 0; x < d && ok; ++x) {
        Vec expected(a.field(), d * ld);
        for (size_t l = 0; l < ld; ++l)
          expected[pair_index(x, l, ld)] = b.l.unit[l];
        const Vec left = a.dmul(a.unit, Vec::basis(a.field(), d, x));
        const Vec right = a.dmul(Vec::basis(a.field(), d, x), a.unit);
        if (auto w = left.first_difference(expected)) {
          rep.add_fail("unitality", {x, *w}, left[*w].to_string(), expected[*w].to_string(),
                       "1_A ⋇ a");
          ok = false;
        } else if (auto w2 = right.first_difference(expected)) {
          rep.add_fail("unitality", {x, *w2}, right[*w2].to_string(), expected[*w2].to_string(),
                       "a ⋇ 1_A");
          ok = false;
        }
      }
      if (ok) rep.add_pass("unitality");
    }
  }
  return rep;
}

DynamicalAlgebraData trivial_dynamical(const AlgebraData& alg, const Tensor3& action,
                                       const BaseAlgebraData& b) {
  require(action.dim1() == alg.dim && action.dim2() == alg.dim && action.dim0() == b.hdim(),
          "DimMismatch", "trivial dynamical: action tensor shape");
  DynamicalAlgebraData out(alg.field, action.dim0(), alg.dim, b.dim());
  out.action = action;
  out.unit = alg.unit;
  for (size_t x = 0; x < alg.dim; ++x)
    for (size_t y = 0; y < alg.dim; ++y)
      for (size_t k = 0; k < alg.dim; ++k) {
        const Scalar& c = alg.mult.at(x, y, k);
        if (c.is_zero()) continue;
        for (size_t l = 0; l < b.dim(); ++l)
          if (!b.l.unit[l].is_zero()) out.dmult.at(x, y, k, l) = c * b.l.unit[l];
      }
  return out;
}

DynamicalAlgebraData unitalize_dynamical(const HopfData& h, const DynamicalAlgebraData& a,
                                         const BaseAlgebraData& b) {
  const size_t d = a.dim(), ld = a.ldim();
  DynamicalAlgebraData out(a.field(), a.hdim(), d + 1, ld);
  for (size_t i = 0; i < a.hdim(); ++i) {
    for (size_t x = 0; x < d; ++x)
      for (size_t y = 0; y < d; ++y) out.action.at(i, x, y) = a.action.at(i, x, y);
    out.action.at(i, d, d) = h.counit[i];
  }
  for (size_t x = 0; x < d; ++x)
    for (size_t y = 0; y < d; ++y)
      for (size_t k = 0; k < d; ++k)
        for (size_t l = 0; l < ld; ++l) out.dmult.at(x, y, k, l) = a.dmult.at(x, y, k, l);
  for (size_t l = 0; l < ld; ++l) {
    if (b.l.unit[l].is_zero()) continue;
    for (size_t x = 0; x < d; ++x) {
      out.dmult.at(d, x, x, l) = b.l.unit[l];
      out.dmult.at(x, d, x, l) = b.l.unit[l];
    }
    out.dmult.at(d, d, d, l) = b.l.unit[l];
  }
  out.unit = Vec::basis(a.field(), d + 1, d);
  return out;
}

UnitalizedAlgebra unitalize(const HopfData& h, const BaseAlgebraData& b,
                            const ModuleAlgebraData& in) {
  const size_t dB = in.dim(), ld = b.dim(), n = dB + ld;
  const Field f = b.field();
  UnitalizedAlgebra out;
  out.m = ModuleAlgebraData(f, h.dim(), ld, n);

  // (x⊕λ)(y⊕μ) = (xy + λy + xμ) ⊕ λμ
  for (size_t i = 0; i < dB; ++i)
    for (size_t j = 0; j < dB; ++j)
      for (size_t k = 0; k < dB; ++k) out.m.alg.mult.at(i, j, k) = in.alg.mult.at(i, j, k);
  for (size_t s = 0; s < ld; ++s)
    for (size_t j = 0; j < dB; ++j)
      for (size_t k = 0; k < dB; ++k) {
        out.m.alg.mult.at(dB + s, j, k) = in.left_l.at(s, j, k);
        out.m.alg.mult.at(j, dB + s, k) = in.right_l.at(s, j, k);
      }
  for (size_t s = 0; s < ld; ++s)
    for (size_t t = 0; t < ld; ++t)
      for (size_t u = 0; u < ld; ++u) out.m.alg.mult.at(dB + s, dB + t, dB + u) =
          b.l.mult.at(s, t, u);
  for (size_t t = 0; t < ld; ++t) out.m.alg.unit[dB + t] = b.l.unit[t];

  for (size_t i = 0; i < h.dim(); ++i) {
    for (size_t x = 0; x < dB; ++x)
      for (size_t y = 0; y < dB; ++y) out.m.action.at(i, x, y) = in.action.at(i, x, y);
    for (size_t s = 0; s < ld; ++s)
      for (size_t t = 0; t < ld; ++t) out.m.action.at(i, dB + s, dB + t) = b.action.at(i, s, t);
  }
  for (size_t s = 0; s < ld; ++s) {
    for (size_t x = 0; x < dB; ++x)
      for (size_t y = 0; y < dB; ++y) {
        out.m.left_l.at(s, x, y) = in.left_l.at(s, x, y);
        out.m.right_l.at(s, x, y) = in.right_l.at(s, x, y);
      }
    for (size_t t = 0; t < ld; ++t)
      for (size_t u = 0; u < ld; ++u) {
        out.m.left_l.at(s, dB + t, dB + u) = b.l.mult.at(s, t, u);
        out.m.right_l.at(s, dB + t, dB + u) = b.l.mult.at(t, s, u);
      }
  }

  out.embed_b = Mat(f, n, dB);
  for (size_t i = 0; i < dB; ++i) out.embed_b.at(i, i) = Scalar::one(f);
  out.embed_l = Mat(f, n, ld);
  for (size_t s = 0; s < ld; ++s) out.embed_l.at(dB + s, s) = Scalar::one(f);

  out.report = CheckReport("unitalization");
  out.report.merge("", check_module_algebra_hl(h, b, out.m));
  check_tensor_equal(out.report, "unit_is_unit_of_l", out.m.alg.unit,
                     out.embed_l.apply(b.l.unit), {n});
  if (!in.alg.unit.is_zero()) {
    const Vec e = out.embed_b.apply(in.alg.unit);
    check_tensor_equal(out.report, "old_unit_idempotent", out.m.alg.mul(e, e), e, {n});
  }
  {
    bool ok = true;
    for (size_t s = 0; s < ld && ok; ++s)
      for (size_t x = 0; x < n && ok; ++x) {
        const Vec lam = b.l.basis(s), v = out.m.alg.basis(x);
        const Vec lhs = out.m.l_left(lam, v);
        const Vec rhs = out.m.alg.mul(out.embed_l.apply(lam), v);
        const Vec lhs2 = out.m.l_right(v, lam);
        const Vec rhs2 = out.m.alg.mul(v, out.embed_l.apply(lam));
        if (lhs != rhs || lhs2 != rhs2) {
          out.report.add_fail("l_actions_realized_by_multiplication", {s, x}, lhs.to_string(),
                              rhs.to_string());
          ok = false;
        }
      }
    if (ok) out.report.add_pass("l_actions_realized_by_multiplication");
  }
  return out;
}

SmashAlgebraData smash_product(const HopfData& h, const BaseAlgebraData& b,
                               const DynamicalAlgebraData& a) {
  {
    const CheckReport pre = check_dynamical(h, b, a);
    require(pre.all_pass(), "NotDynamical",
            "smash product requires a dynamical algebra; failing axiom: " + first_failure(pre));
    require(!a.unit.is_zero(), "NotDynamical", "smash product requires a unital dynamical algebra");
  }
  const size_t d = a.dim(), ld = b.dim(), n = d * ld;
  const Field f = a.field();
  SmashAlgebraData s;
  s.m = ModuleAlgebraData(f, h.dim(), ld, n);

  std::vector<std::vector<Vec>> D(d), col(h.dim());
  for (size_t x = 0; x < d; ++x)
    for (size_t y = 0; y < d; ++y) D[x].push_back(dm_slice(a.dmult, x, y));
  for (size_t q = 0; q < h.dim(); ++q)
    for (size_t y = 0; y < d; ++y) col[q].push_back(a.act(q, Vec::basis(f, d, y)));

  // (a⊗λ)(b⊗μ) = (a ⋇ (λ⁽¹⁾▷b)) · (λ^[∞]μ)
  for (size_t x = 0; x < d; ++x)
    for (size_t lam = 0; lam < ld; ++lam) {
      const size_t row = pair_index(x, lam, ld);
      for (size_t q = 0; q < h.dim(); ++q)
        for (size_t lp = 0; lp < ld; ++lp) {
          const Scalar& c = b.coaction.at(lam, q, lp);
          if (c.is_zero()) continue;
          for (size_t y = 0; y < d; ++y) {
            Vec v(f, n);
            for (size_t u = 0; u < d; ++u)
              if (!col[q][y][u].is_zero()) v += D[x][u].scaled(col[q][y][u]);
            for (size_t mu = 0; mu < ld; ++mu) {
              const Vec prod = b.l.mul(b.l.basis(lp), b.l.basis(mu));
              const Vec term = l_leg_right_mul(b.l, d, v, prod).scaled(c);
              const size_t colidx = pair_index(y, mu, ld);
              for (size_t k = 0; k < n; ++k)
                if (!term[k].is_zero()) s.m.alg.mult.at(row, colidx, k) += term[k];
            }
          }
        }
    }
  for (size_t k = 0; k < d; ++k)
    for (size_t l = 0; l < ld; ++l)
      s.m.alg.unit[pair_index(k, l, ld)] = a.unit[k] * b.l.unit[l];

  s.m.action = diagonal_action(h, b, a);

  s.embed_a = Mat(f, n, d);
  for (size_t x = 0; x < d; ++x)
    for (size_t l = 0; l < ld; ++l) s.embed_a.at(pair_index(x, l, ld), x) = b.l.unit[l];
  s.embed_l = Mat(f, n, ld);
  for (size_t lam = 0; lam < ld; ++lam)
    for (size_t k = 0; k < d; ++k) s.embed_l.at(pair_index(k, lam, ld), lam) = a.unit[k];

  // Left action λ(b⊗μ) = (λ⁽¹⁾▷b)⊗(λ^[∞]μ); right action (b⊗μ)λ = b⊗(μλ).
  for (size_t lam = 0; lam < ld; ++lam)
    for (size_t y = 0; y < d; ++y)
      for (size_t mu = 0; mu < ld; ++mu) {
        const size_t in_idx = pair_index(y, mu, ld);
        for (size_t q = 0; q < h.dim(); ++q)
          for (size_t lp = 0; lp < ld; ++lp) {
            const Scalar& c = b.coaction.at(lam, q, lp);
            if (c.is_zero()) continue;
            const Vec prod = b.l.mul(b.l.basis(lp), b.l.basis(mu));
            for (size_t k = 0; k < d; ++k) {
              if (col[q][y][k].is_zero()) continue;
              for (size_t z = 0; z < ld; ++z)
                if (!prod[z].is_zero())
                  s.m.left_l.at(lam, in_idx, pair_index(k, z, ld)) += c * col[q][y][k] * prod[z];
            }
          }
        const Vec rprod = b.l.mul(b.l.basis(mu), b.l.basis(lam));
        for (size_t z = 0; z < ld; ++z)
          if (!rprod[z].is_zero())
            s.m.right_l.at(lam, in_idx, pair_index(y, z, ld)) += rprod[z];
      }

  s.report = CheckReport("dynamical smash product");
  s.report.merge("b_", check_module_algebra_hl(h, b, s.m));
  {
    bool ok = true;
    for (size_t lam = 0; lam < ld && ok; ++lam)
      for (size_t x = 0; x < n && ok; ++x) {
        const Vec v = s.m.alg.basis(x);
        const Vec lhs = s.m.l_left(b.l.basis(lam), v);
        const Vec rhs = s.m.alg.mul(s.embed_l.apply(b.l.basis(lam)), v);
        const Vec lhs2 = s.m.l_right(v, b.l.basis(lam));
        const Vec rhs2 = s.m.alg.mul(v, s.embed_l.apply(b.l.basis(lam)));
        if (lhs != rhs || lhs2 != rhs2) {
          s.report.add_fail("l_actions_realized_by_multiplication", {lam, x}, lhs.to_string(),
                            rhs.to_string());
          ok = false;
        }
      }
    if (ok) s.report.add_pass("l_actions_realized_by_multiplication");
  }
  {
    bool ok = true;
    for (size_t x = 0; x < d && ok; ++x)
      for (size_t y = 0; y < d && ok; ++y) {
        const Vec lhs = s.m.alg.mul(s.embed_a.col(x), s.embed_a.col(y));
        if (auto w = lhs.first_difference(D[x][y])) {
          s.report.add_fail("embed_a_reproduces_dynamical_product", {x, y, *w},
                            lhs[*w].to_string(), D[x][y][*w].to_string());
          ok = false;
        }
      }
    if (ok) s.report.add_pass("embed_a_reproduces_dynamical_product");
  }
  {
    bool ok = true;
    for (size_t st = 0; st < ld && ok; ++st)
      for (size_t tt = 0; tt < ld && ok; ++tt) {
        const Vec lhs = s.m.alg.mul(s.embed_l.col(st), s.embed_l.col(tt));
        const Vec rhs = s.embed_l.apply(b.l.mul(b.l.basis(st), b.l.basis(tt)));
        if (auto w = lhs.first_difference(rhs)) {
          s.report.add_fail("embed_l_multiplicative", {st, tt, *w}, lhs[*w].to_string(),
                            rhs[*w].to_string());
          ok = false;
        }
      }
    if (ok) s.report.add_pass("embed_l_multiplicative");
  }
  {
    std::vector<Vec> right_cols, left_cols;
    for (size_t x = 0; x < d; ++x)
      for (size_t lam = 0; lam < ld; ++lam) {
        right_cols.push_back(s.m.alg.mul(s.embed_a.col(x), s.embed_l.col(lam)));
        left_cols.push_back(s.m.alg.mul(s.embed_l.col(lam), s.embed_a.col(x)));
      }
    s.report.add("freely_generated_right", rank(Mat::from_columns(f, n, right_cols)) == n,
                 "columns (a⊗1)(1⊗λ) span B");
    s.report.add("freely_generated_left", rank(Mat::from_columns(f, n, left_cols)) == n,
                 "columns (1⊗λ)(a⊗1) span B");
  }
  return s;
}

Vec star_chi(const DynamicalAlgebraData& a, const Vec& x, const Vec& y, const Vec& chi) {
  require(chi.dim() == a.ldim() && x.dim() == a.dim() && y.dim() == a.dim(), "DimMismatch",
          "star product: argument dimensions");
  Vec out(a.field(), a.dim());
  for (size_t i = 0; i < a.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < a.dim(); ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      for (size_t k = 0; k < a.dim(); ++k)
        for (size_t l = 0; l < a.ldim(); ++l) {
          const Scalar& s = a.dmult.at(i, j, k, l);
          if (!s.is_zero() && !chi[l].is_zero()) out[k] += c * s * chi[l];
        }
    }
  }
  return out;
}

Vec rd_chi(const BaseAlgebraData& b, const DynamicalAlgebraData& a, const Vec& x, const Vec& y,
           const Vec& chi) {
  require(chi.dim() == a.ldim() && x.dim() == a.dim() && y.dim() == a.dim(), "DimMismatch",
          "triangle product: argument dimensions");
  const size_t d = a.dim(), ld = a.ldim();
  const auto sol = solve(tau_matrix(b, a), a.dmul(x, y));
  require(sol.has_value(), "NotInvertible", "the dressing permutation τ is singular");
  Vec out(a.field(), d);
  for (size_t lam = 0; lam < ld; ++lam) {
    if (chi[lam].is_zero()) continue;
    for (size_t k = 0; k < d; ++k) out[k] += chi[lam] * (*sol)[pair_index(lam, k, d)];
  }
  return out;
}

InducedModule induced_module(const HopfData& h, const BaseAlgebraData& b,
                             const DynamicalAlgebraData& a, const SmashAlgebraData& s,
                             const Vec& chi, bool left) {
  require(is_invariant_character(h, b, chi), "NotInvariant",
          "induction requires an invariant character of L");
  const size_t d = a.dim(), ld = b.dim(), n = s.m.dim();
  const Field f = a.field();
  InducedModule im;
  im.left = left;
  im.chi = chi;

  if (left) {
    for (size_t i = 0; i < n; ++i) {
      Mat r(f, d, d);
      for (size_t x = 0; x < d; ++x) {
        const Vec w = s.m.alg.mul(s.m.alg.basis(i), s.embed_a.col(x));
        for (size_t k = 0; k < d; ++k) {
          Scalar acc = Scalar::zero(f);
          for (size_t lam = 0; lam < ld; ++lam) acc += w[pair_index(k, lam, ld)] * chi[lam];
          r.at(k, x) = acc;
        }
      }
      im.rho.push_back(r);
    }
  } else {
    const Mat p = wp_right(b, s, chi);
    for (size_t i = 0; i < n; ++i) {
      Mat r(f, d, d);
      for (size_t x = 0; x < d; ++x) {
        const Vec img = p.apply(s.m.alg.mul(s.embed_a.col(x), s.m.alg.basis(i)));
        for (size_t k = 0; k < d; ++k) r.at(k, x) = img[k];
      }
      im.rho.push_back(r);
    }
  }

  im.report = CheckReport(left ? "left induced module" : "right induced module");
  {
    Mat u(f, d, d);
    for (size_t i = 0; i < n; ++i)
      if (!s.m.alg.unit[i].is_zero()) u = u + im.rho[i].scaled(s.m.alg.unit[i]);
    im.report.add("module_unit", u == Mat::identity(f, d), "1_B acts as the identity");
  }
  {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      for (size_t j = 0; j < n && ok; ++j) {
        const Vec prod = s.m.alg.mul(s.m.alg.basis(i), s.m.alg.basis(j));
        Mat lhs(f, d, d);
        for (size_t k = 0; k < n; ++k)
          if (!prod[k].is_zero()) lhs = lhs + im.rho[k].scaled(prod[k]);
        const Mat rhs = left ? im.rho[i] * im.rho[j] : im.rho[j] * im.rho[i];
        if (lhs != rhs) {
          im.report.add_fail("module_composition", {i, j}, lhs.to_string(), rhs.to_string());
          ok = false;
        }
      }
    if (ok) im.report.add_pass("module_composition");
  }
  {
    const Mat ic = iota_chi(h, b, chi);
    bool ok = true;
    for (size_t lam = 0; lam < ld && ok; ++lam) {
      Mat rhs(f, d, d);
      Vec hvec = ic.apply(b.l.basis(lam));
      if (!left) hvec = h.antipode_inv.apply(hvec);
      for (size_t p = 0; p < h.dim(); ++p)
        if (!hvec[p].is_zero()) rhs = rhs + a.action_op(p).scaled(hvec[p]);
      Mat lhs(f, d, d);
      const Vec el = s.embed_l.col(lam);
      for (size_t i = 0; i < n; ++i)
        if (!el[i].is_zero()) lhs = lhs + im.rho[i].scaled(el[i]);
      if (lhs != rhs) {
        im.report.add_fail(left ? "l_acts_through_iota" : "l_acts_through_antipode_iota", {lam},
                           lhs.to_string(), rhs.to_string());
        ok = false;
      }
    }
    if (ok)
      im.report.add_pass(left ? "l_acts_through_iota" : "l_acts_through_antipode_iota",
                         left ? "ρ(1⊗λ) = ι_χ(λ)▷·" : "ρ(1⊗λ) = (γ̄∘ι_χ)(λ)▷·");
  }
  if (left) {
    bool ok = true;
    for (size_t x = 0; x < d && ok; ++x)
      for (size_t lam = 0; lam < ld && ok; ++lam) {
        const Vec lhs = im.rho[pair_index(x, lam, ld)].apply(a.unit);
        const Vec rhs = Vec::basis(f, d, x).scaled(chi[lam]);
        if (auto w = lhs.first_difference(rhs)) {
          im.report.add_fail("cyclic_vector", {x, lam, *w}, lhs[*w].to_string(),
                             rhs[*w].to_string());
          ok = false;
        }
      }
    if (ok) im.report.add_pass("cyclic_vector", "(x⊗λ)·1_A = χ(λ)x");
  }
  return im;
}

std::vector<Mat> module_endomorphisms(const std::vector<Mat>& rho) {
  if (rho.empty()) return {};
  const Field f = rho[0].field();
  const size_t d = rho[0].rows();
  std::vector<Mat> blocks;
  for (const Mat& m : rho) {
    // Rows of M·T − T·M as linear functionals in the d² entries of T.
    Mat block(f, d * d, d * d);
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c < d; ++c)
        for (size_t u = 0; u < d; ++u)
          for (size_t v = 0; v < d; ++v) {
            Scalar coeff = Scalar::zero(f);
            if (v == c) coeff += m.at(r, u);
            if (r == u) coeff -= m.at(v, c);
            if (!coeff.is_zero()) block.at(pair_index(r, c, d), pair_index(u, v, d)) = coeff;
          }
    blocks.push_back(block);
  }
  std::vector<Mat> out;
  for (const Vec& t : kernel_basis(Mat::vstack_all(blocks))) {
    Mat m(f, d, d);
    for (size_t u = 0; u < d; ++u)
      for (size_t v = 0; v < d; ++v) m.at(u, v) = t[pair_index(u, v, d)];
    out.push_back(m);
  }
  return out;
}

CornerModuleAlgebra a_l_chi(const HopfData& h, const BaseAlgebraData& b,
                            const DynamicalAlgebraData& a, const SmashAlgebraData& s,
                            const Vec& chi) {
  require(is_invariant_character(h, b, chi), "NotInvariant",
          "the corner algebra requires an invariant character");
  const Field f = a.field();
  const size_t d = a.dim();
  CornerModuleAlgebra out;
  out.chi = chi;
  out.chi_tilde = adjoint_character(h, b, chi);

  HModule amod;
  for (size_t i = 0; i < h.dim(); ++i) amod.rho.push_back(a.action_op(i));
  out.basis = weight_submodule(h, b, amod, 0, chi, chi);
  const size_t r = out.basis.size();

  out.alg = subalgebra_on(
      f, out.basis, a.unit, [&](const Vec& u, const Vec& v) { return star_chi(a, u, v, chi); },
      "corner algebra A^L_chi");
  out.report = CheckReport("corner algebra of an invariant character");
  out.report.add("closed_under_star", true, "dim A^L_chi = " + std::to_string(r));
  out.report.merge("corner_", out.alg.check("corner"));

  {
    bool ok = true;
    for (size_t i = 0; i < r && ok; ++i)
      for (size_t j = 0; j < r && ok; ++j) {
        const Vec lhs = star_chi(a, out.basis[i], out.basis[j], chi);
        const Vec rhs = rd_chi(b, a, out.basis[i], out.basis[j], out.chi_tilde);
        if (auto w = lhs.first_difference(rhs)) {
          out.report.add_fail("star_equals_triangle_tilde", {i, j, *w}, lhs[*w].to_string(),
                              rhs[*w].to_string());
          ok = false;
        }
      }
    if (ok) out.report.add_pass("star_equals_triangle_tilde", "∗_χ = ⊳_χ̃ on A^L_χ");
  }
  {
    bool ok = true;
    for (size_t x = 0; x < d && ok; ++x)
      for (size_t y = 0; y < d && ok; ++y)
        for (size_t j = 0; j < r && ok; ++j) {
          const Vec ex = Vec::basis(f, d, x), ey = Vec::basis(f, d, y);
          const Vec lhs = star_chi(a, star_chi(a, ex, ey, chi), out.basis[j], chi);
          const Vec rhs = star_chi(a, ex, star_chi(a, ey, out.basis[j], chi), chi);
          if (auto w = lhs.first_difference(rhs)) {
            out.report.add_fail("mixed_associativity", {x, y, j, *w}, lhs[*w].to_string(),
                                rhs[*w].to_string());
            ok = false;
          }
        }
    if (ok)
      out.report.add_pass("mixed_associativity", "(x∗_χy)∗_χv = x∗_χ(y∗_χv) for v ∈ A^L_χ");
  }

  // End_B(A_χ) by solving the commutant; anti-isomorphic to A^L_χ via v ↦ (·∗_χv).
  {
    const InducedModule lm = induced_module(h, b, a, s, chi, true);
    out.report.add("left_module_valid", lm.report.all_pass(), "axioms of A_χ");
    const auto ends = module_endomorphisms(lm.rho);
    out.report.add("end_left_dimension", ends.size() == r,
                   "dim End_B(A_χ) = " + std::to_string(ends.size()) + ", dim A^L_χ = " +
                       std::to_string(r));
    auto star_op = [&](const Vec& v) {
      Mat e(f, d, d);
      for (size_t x = 0; x < d; ++x) {
        const Vec img = star_chi(a, Vec::basis(f, d, x), v, chi);
        for (size_t k = 0; k < d; ++k) e.at(k, x) = img[k];
      }
      return e;
    };
    bool commutes = true, inj = true;
    std::vector<Vec> flats;
    for (size_t j = 0; j < r; ++j) {
      const Mat e = star_op(out.basis[j]);
      for (size_t i = 0; i < lm.rho.size() && commutes; ++i)
        if (!(e * lm.rho[i] == lm.rho[i] * e)) commutes = false;
      Vec flat(f, d * d);
      for (size_t u = 0; u < d; ++u)
        for (size_t v = 0; v < d; ++v) flat[pair_index(u, v, d)] = e.at(u, v);
      flats.push_back(flat);
    }
    inj = span_basis(flats).size() == r;
    out.report.add("end_left_embedding", commutes && inj,
                   "v ↦ (·∗_χv) intertwines B and is injective");
    bool anti = true;
    for (size_t i = 0; i < r && anti; ++i)
      for (size_t j = 0; j < r && anti; ++j) {
        const Vec prod = star_chi(a, out.basis[i], out.basis[j], chi);
        if (!(star_op(prod) == star_op(out.basis[j]) * star_op(out.basis[i]))) anti = false;
      }
    out.report.add("end_left_anti_multiplicative", anti, "E_{u∗v} = E_v∘E_u");
  }
  // End_B(_χ̃A) via v ↦ (v⊳_χ̃·), an isomorphism from A^L_χ (anti from the opposite).
  {
    const InducedModule rm = induced_module(h, b, a, s, out.chi_tilde, false);
    out.report.add("right_module_valid", rm.report.all_pass(), "axioms of _χ̃A");
    const auto ends = module_endomorphisms(rm.rho);
    out.report.add("end_right_dimension", ends.size() == r,
                   "dim End_B(_χ̃A) = " + std::to_string(ends.size()) + ", dim A^L_χ = " +
                       std::to_string(r));
    auto tri_op = [&](const Vec& v) {
      Mat e(f, d, d);
      for (size_t x = 0; x < d; ++x) {
        const Vec img = rd_chi(b, a, v, Vec::basis(f, d, x), out.chi_tilde);
        for (size_t k = 0; k < d; ++k) e.at(k, x) = img[k];
      }
      return e;
    };
    bool commutes = true, inj = true;
    std::vector<Vec> flats;
    for (size_t j = 0; j < r; ++j) {
      const Mat e = tri_op(out.basis[j]);
      for (size_t i = 0; i < rm.rho.size() && commutes; ++i)
        if (!(e * rm.rho[i] == rm.rho[i] * e)) commutes = false;
      Vec flat(f, d * d);
      for (size_t u = 0; u < d; ++u)
        for (size_t v = 0; v < d; ++v) flat[pair_index(u, v, d)] = e.at(u, v);
      flats.push_back(flat);
    }
    inj = span_basis(flats).size() == r;
    out.report.add("end_right_embedding", commutes && inj,
                   "v ↦ (v⊳_χ̃·) intertwines B and is injective");
    bool mult = true;
    for (size_t i = 0; i < r && mult; ++i)
      for (size_t j = 0; j < r && mult; ++j) {
        const Vec prod = star_chi(a, out.basis[i], out.basis[j], chi);
        if (!(tri_op(prod) == tri_op(out.basis[i]) * tri_op(out.basis[j]))) mult = false;
      }
    out.report.add("end_right_multiplicative", mult, "L_{u∗v} = L_u∘L_v");
  }
  return out;
}

InvariantAlgebra i_chi_algebra(const HopfData& h, const BaseAlgebraData& b,
                               const DynamicalAlgebraData& a, const Vec& chi) {
  require(is_invariant_character(h, b, chi), "NotInvariant",
          "the invariant algebra requires an invariant character");
  const Field f = a.field();
  InvariantAlgebra out;
  out.chi = chi;
  std::vector<Mat> ops;
  for (size_t i = 0; i < h.dim(); ++i) ops.push_back(a.action_op(i));
  out.basis = h_invariants(h, ops);
  out.alg = subalgebra_on(
      f, out.basis, a.unit, [&](const Vec& u, const Vec& v) { return star_chi(a, u, v, chi); },
      "invariant algebra I_chi");
  out.report = CheckReport("invariant algebra I_chi");
  out.report.add("closed_under_star", true, "dim A^H = " + std::to_string(out.basis.size()));
  out.report.merge("invariant_", out.alg.check("invariants"));
  return out;
}

Mat wp_left(const BaseAlgebraData& b, const SmashAlgebraData& s, const Vec& chi) {
  const size_t ld = b.dim(), n = s.m.dim(), d = n / (ld == 0 ? 1 : ld);
  require(chi.dim() == ld && n == d * ld, "DimMismatch", "projection: character dimension");
  Mat p(b.field(), d, n);
  for (size_t x = 0; x < d; ++x)
    for (size_t lam = 0; lam < ld; ++lam) p.at(x, pair_index(x, lam, ld)) = chi[lam];
  return p;
}

Mat wp_right(const BaseAlgebraData& b, const SmashAlgebraData& s, const Vec& chi) {
  const size_t ld = b.dim(), n = s.m.dim(), d = n / (ld == 0 ? 1 : ld);
  require(chi.dim() == ld && n == d * ld, "DimMismatch", "projection: character dimension");
  const Field f = b.field();
  // Columns of the free left generation map L⊗A → B, (λ,x) ↦ (1⊗λ)(x⊗1).
  std::vector<Vec> cols;
  for (size_t lam = 0; lam < ld; ++lam)
    for (size_t x = 0; x < d; ++x)
      cols.push_back(s.m.alg.mul(s.embed_l.col(lam), s.embed_a.col(x)));
  const Mat inv = inverse(Mat::from_columns(f, n, cols));
  Mat p(f, d, n);
  for (size_t k = 0; k < d; ++k)
    for (size_t j = 0; j < n; ++j) {
      Scalar acc = Scalar::zero(f);
      for (size_t lam = 0; lam < ld; ++lam) acc += chi[lam] * inv.at(pair_index(lam, k, d), j);
      p.at(k, j) = acc;
    }
  return p;
}

CheckReport check_wp_projections(const HopfData& h, const BaseAlgebraData& b,
                                 const DynamicalAlgebraData& a, const SmashAlgebraData& s,
                                 const Vec& chi) {
  require(is_invariant_character(h, b, chi), "NotInvariant",
          "projection propositions require an invariant character");
  const size_t n = s.m.dim();
  const Vec chit = adjoint_character(h, b, chi);
  const Mat pl = wp_left(b, s, chi);
  const Mat pr = wp_right(b, s, chit);
  CheckReport rep("factorization projections");

  const InducedModule lm = induced_module(h, b, a, s, chi, true);
  const InducedModule rm = induced_module(h, b, a, s, chit, false);
  rep.add("left_module_valid", lm.report.all_pass(), "axioms of A_χ");
  rep.add("right_module_valid", rm.report.all_pass(), "axioms of _χ̃A");

  {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      for (size_t j = 0; j < n && ok; ++j) {
        const Vec prod = s.m.alg.mul(s.m.alg.basis(i), s.m.alg.basis(j));
        const Vec lhs = pl.apply(prod);
        const Vec rhs = lm.rho[i].apply(pl.apply(s.m.alg.basis(j)));
        if (auto w = lhs.first_difference(rhs)) {
          rep.add_fail("left_b_linear", {i, j, *w}, lhs[*w].to_string(), rhs[*w].to_string());
          ok = false;
        }
      }
    if (ok) rep.add_pass("left_b_linear", "℘_χ(b′b) = b′·℘_χ(b) in A_χ");
  }
  {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      for (size_t j = 0; j < n && ok; ++j) {
        const Vec prod = s.m.alg.mul(s.m.alg.basis(j), s.m.alg.basis(i));
        const Vec lhs = pr.apply(prod);
        const Vec rhs = rm.rho[i].apply(pr.apply(s.m.alg.basis(j)));
        if (auto w = lhs.first_difference(rhs)) {
          rep.add_fail("right_b_linear", {i, j, *w}, lhs[*w].to_string(), rhs[*w].to_string());
          ok = false;
        }
      }
    if (ok) rep.add_pass("right_b_linear", "_χ̃℘(bb′) = _χ̃℘(b)◁b′ in _χ̃A");
  }

  HModule bmod, amod;
  for (size_t i = 0; i < h.dim(); ++i) {
    bmod.rho.push_back(s.m.action_op(i));
    amod.rho.push_back(a.action_op(i));
  }
  const std::vector<Vec> bl = weight_submodule(h, b, bmod, 0, chi, chi);
  const std::vector<Vec> al = weight_submodule(h, b, amod, 0, chi, chi);
  {
    std::vector<Vec> images;
    for (const Vec& v : bl) images.push_back(pl.apply(v));
    rep.add("weight_restriction_surjective", same_span(images, al),
            "℘_χ(B^L_χ) = A^L_χ, dim " + std::to_string(al.size()));
  }
  {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      for (size_t j = 0; j < bl.size() && ok; ++j) {
        const Vec lhs = pl.apply(s.m.alg.mul(s.m.alg.basis(i), bl[j]));
        const Vec rhs = star_chi(a, pl.apply(s.m.alg.basis(i)), pl.apply(bl[j]), chi);
        if (auto w = lhs.first_difference(rhs)) {
          rep.add_fail("weight_multiplicative", {i, j, *w}, lhs[*w].to_string(),
                       rhs[*w].to_string());
          ok = false;
        }
      }
    if (ok)
      rep.add_pass("weight_multiplicative", "℘_χ(b·u) = ℘_χ(b)∗_χ℘_χ(u) for u ∈ B^L_χ");
  }

  const std::vector<Vec> binv = h_invariants(h, bmod.rho);
  {
    bool ok = true;
    for (size_t j = 0; j < binv.size() && ok; ++j) {
      const Vec lhs = pl.apply(binv[j]);
      const Vec rhs = pr.apply(binv[j]);
      if (auto w = lhs.first_difference(rhs)) {
        rep.add_fail("projections_agree_on_invariants", {j, *w}, lhs[*w].to_string(),
                     rhs[*w].to_string());
        ok = false;
      }
    }
    if (ok)
      rep.add_pass("projections_agree_on_invariants",
                   "℘_χ = _χ̃℘ on B^H, dim " + std::to_string(binv.size()));
  }
  {
    const InvariantAlgebra ich = i_chi_algebra(h, b, a, chi);
    std::vector<Vec> images;
    for (const Vec& v : binv) images.push_back(pl.apply(v));
    rep.add("invariants_onto_i_chi", same_span(images, ich.basis),
            "℘_χ(B^H) = A^H, dim " + std::to_string(ich.basis.size()));
    bool ok = true;
    for (size_t i = 0; i < binv.size() && ok; ++i)
      for (size_t j = 0; j < binv.size() && ok; ++j) {
        const Vec lhs = pl.apply(s.m.alg.mul(binv[i], binv[j]));
        const Vec rhs = star_chi(a, pl.apply(binv[i]), pl.apply(binv[j]), chi);
        if (auto w = lhs.first_difference(rhs)) {
          rep.add_fail("invariants_multiplicative", {i, j, *w}, lhs[*w].to_string(),
                       rhs[*w].to_string());
          ok = false;
        }
      }
    if (ok) rep.add_pass("invariants_multiplicative", "B^H → I_χ is an algebra map");
  }
  return rep;
}

WeightSubalgebra b_l_chi(const HopfData& h, const BaseAlgebraData& b,
                         const DynamicalAlgebraData& a, const SmashAlgebraData& s,
                         const Vec& chi) {
  require(is_invariant_character(h, b, chi), "NotInvariant",
          "the weight subalgebra requires an invariant character");
  const Field f = a.field();
  WeightSubalgebra out;
  out.chi = chi;
  HModule bmod;
  for (size_t i = 0; i < h.dim(); ++i) bmod.rho.push_back(s.m.action_op(i));
  out.basis = weight_submodule(h, b, bmod, 0, chi, chi);
  out.alg = subalgebra_on(
      f, out.basis, s.m.alg.unit,
      [&](const Vec& u, const Vec& v) { return s.m.alg.mul(u, v); }, "weight subalgebra B^L_chi");
  out.report = CheckReport("weight subalgebra B^L_chi");
  out.report.add("closed_under_product", true, "dim B^L_chi = " + std::to_string(out.basis.size()));
  out.report.merge("weight_", out.alg.check("weight subalgebra"));

  const Vec chit = adjoint_character(h, b, chi);
  out.report.add("right_weight_description",
                 same_span(out.basis, weight_submodule(h, b, bmod, -1, chit, chit)),
                 "B[χ] is the right χ̃-weight space under γ̄∘ι_χ̃");
  out.report.add("contains_unit", in_span(out.basis, s.m.alg.unit), "1_B ∈ B^L_χ");
  {
    HModule amod;
    for (size_t i = 0; i < h.dim(); ++i) amod.rho.push_back(a.action_op(i));
    bool ok = true;
    for (const Vec& v : weight_submodule(h, b, amod, 0, chi, chi))
      if (!in_span(out.basis, s.embed_a.apply(v))) ok = false;
    out.report.add("contains_a_corner", ok, "A^L_χ ⊆ B^L_χ under a ↦ a⊗1_L");
  }
  return out;
}

CheckReport check_dynamical_morphism(const HopfData& h, const BaseAlgebraData& b,
                                     const DynamicalAlgebraData& a, const HopfData& h2,
                                     const BaseAlgebraData& b2, const DynamicalAlgebraData& a2,
                                     const Mat& phi, const Mat& varpi, const Mat& theta) {
  const size_t d = a.dim(), ld = b.dim(), d2 = a2.dim(), ld2 = b2.dim();
  require(theta.rows() == d2 * ld2 && theta.cols() == d && phi.cols() == h.dim() &&
              phi.rows() == h2.dim() && varpi.rows() == ld2 && varpi.cols() == ld,
          "DimMismatch", "morphism data shapes");
  const Field f = a.field();
  CheckReport rep("morphism of dynamical algebras");

  // θ is H-equivariant for the diagonal action on A′⊗L′ through φ.
  {
    bool ok = true;
    for (size_t i = 0; i < h.dim() && ok; ++i) {
      Mat big(f, d2 * ld2, d2 * ld2);
      const Vec w = phi.apply(h.basis(i));
      for (size_t j = 0; j < h2.dim(); ++j) {
        if (w[j].is_zero()) continue;
        for (size_t p = 0; p < h2.dim(); ++p)
          for (size_t q = 0; q < h2.dim(); ++q) {
            const Scalar& c = h2.comult.at(j, p, q);
            if (!c.is_zero())
              big = big + kron(a2.action_op(p), b2.action_op(q)).scaled(w[j] * c);
          }
      }
      for (size_t x = 0; x < d && ok; ++x) {
        const Vec lhs = theta.apply(a.act(i, Vec::basis(f, d, x)));
        const Vec rhs = big.apply(theta.col(x));
        if (auto wd = lhs.first_difference(rhs)) {
          rep.add_fail("theta_equivariant", {i, x, *wd}, lhs[*wd].to_string(),
                       rhs[*wd].to_string());
          ok = false;
        }
      }
    }
    if (ok) rep.add_pass("theta_equivariant");
  }

  // The defining square on all basis pairs.
  {
    bool ok = true;
    for (size_t x = 0; x < d && ok; ++x)
      for (size_t y = 0; y < d && ok; ++y) {
        // Bottom: (id⊗m)∘(θ⊗ϖ)∘⋇.
        Vec bottom(f, d2 * ld2);
        const Vec w = a.dmul(Vec::basis(f, d, x), Vec::basis(f, d, y));
        for (size_t k = 0; k < d; ++k)
          for (size_t lam = 0; lam < ld; ++lam) {
            const Scalar& c = w[pair_index(k, lam, ld)];
            if (c.is_zero()) continue;
            bottom +=
                l_leg_right_mul(b2.l, d2, theta.col(k), varpi.apply(b.l.basis(lam))).scaled(c);
          }
        // Top: m ∘ ⋇′ ∘ m ∘ τ′ ∘ (θ⊗θ).
        Vec top(f, d2 * ld2);
        const Vec tx = theta.col(x), ty = theta.col(y);
        for (size_t u = 0; u < d2; ++u)
          for (size_t lam = 0; lam < ld2; ++lam) {
            const Scalar& c1 = tx[pair_index(u, lam, ld2)];
            if (c1.is_zero()) continue;
            for (size_t v = 0; v < d2; ++v)
              for (size_t mu = 0; mu < ld2; ++mu) {
                const Scalar& c2 = ty[pair_index(v, mu, ld2)];
                if (c2.is_zero()) continue;
                const Vec moved = tau_apply(b2, a2, lam, Vec::basis(f, d2, v));
                for (size_t vp = 0; vp < d2; ++vp)
                  for (size_t lp = 0; lp < ld2; ++lp) {
                    const Scalar& c3 = moved[pair_index(vp, lp, ld2)];
                    if (c3.is_zero()) continue;
                    const Vec z = b2.l.mul(b2.l.basis(lp), b2.l.basis(mu));
                    top += l_leg_right_mul(b2.l, d2, a2.dmul(Vec::basis(f, d2, u),
                                                             Vec::basis(f, d2, vp)),
                                           z)
                               .scaled(c1 * c2 * c3);
                  }
              }
          }
        if (auto wd = top.first_difference(bottom)) {
          rep.add_fail("multiplicative_square", {x, y, *wd}, top[*wd].to_string(),
                       bottom[*wd].to_string());
          ok = false;
        }
      }
    if (ok) rep.add_pass("multiplicative_square");
  }

  // The induced map of smash products is a unital equivariant homomorphism.
  {
    const SmashAlgebraData s1 = smash_product(h, b, a);
    const SmashAlgebraData s2 = smash_product(h2, b2, a2);
    Mat big(f, d2 * ld2, d * ld);
    for (size_t x = 0; x < d; ++x)
      for (size_t lam = 0; lam < ld; ++lam) {
        const Vec img = l_leg_right_mul(b2.l, d2, theta.col(x), varpi.apply(b.l.basis(lam)));
        for (size_t rr = 0; rr < d2 * ld2; ++rr) big.at(rr, pair_index(x, lam, ld)) = img[rr];
      }
    bool ok = true;
    for (size_t i = 0; i < d * ld && ok; ++i)
      for (size_t j = 0; j < d * ld && ok; ++j) {
        const Vec lhs = big.apply(s1.m.alg.mul(s1.m.alg.basis(i), s1.m.alg.basis(j)));
        const Vec rhs = s2.m.alg.mul(big.col(i), big.col(j));
        if (auto wd = lhs.first_difference(rhs)) {
          rep.add_fail("smash_homomorphism", {i, j, *wd}, lhs[*wd].to_string(),
                       rhs[*wd].to_string());
          ok = false;
        }
      }
    if (ok) rep.add_pass("smash_homomorphism");
    check_tensor_equal(rep, "smash_homomorphism_unital", big.apply(s1.m.alg.unit), s2.m.alg.unit,
                       {d2, ld2});
    {
      bool eq = true;
      for (size_t i = 0; i < h.dim() && eq; ++i)
        for (size_t x = 0; x < d * ld && eq; ++x) {
          const Vec lhs = big.apply(s1.m.act(i, s1.m.alg.basis(x)));
          const Vec w = phi.apply(h.basis(i));
          Vec rhs(f, d2 * ld2);
          for (size_t j = 0; j < h2.dim(); ++j)
            if (!w[j].is_zero()) rhs += s2.m.act(j, big.col(x)).scaled(w[j]);
          if (auto wd = lhs.first_difference(rhs)) {
            rep.add_fail("smash_equivariant", {i, x, *wd}, lhs[*wd].to_string(),
                         rhs[*wd].to_string());
            eq = false;
          }
        }
      if (eq) rep.add_pass("smash_equivariant");
    }
    {
      bool eq = true;
      for (size_t lam = 0; lam < ld && eq; ++lam) {
        const Vec lhs = big.apply(s1.embed_l.col(lam));
        const Vec rhs = s2.embed_l.apply(varpi.apply(b.l.basis(lam)));
        if (auto wd = lhs.first_difference(rhs)) {
          rep.add_fail("smash_preserves_base", {lam, *wd}, lhs[*wd].to_string(),
                       rhs[*wd].to_string());
          eq = false;
        }
      }
      if (eq) rep.add_pass("smash_preserves_base");
    }
  }
  return rep;
}

ReducedDynamical reduce_dynamical(const HopfData& h, const BaseAlgebraData& b,
                                  const DynamicalAlgebraData& a) {
  const Field f = a.field();
  ReducedDynamical out;
  out.base = reduce_base(h, b);
  const size_t d = a.dim();

  // A′ = joint kernel of the action of Ĥ⊥ (the annihilator of all invariant
  // characters of H).
  const HatGroup hat = hat_group_structure(h);
  const std::vector<Vec> hperp = kernel_basis(Mat::from_rows(f, h.dim(), hat.chars));
  std::vector<Mat> blocks;
  for (const Vec& nu : hperp) {
    Mat op(f, d, d);
    for (size_t p = 0; p < h.dim(); ++p)
      if (!nu[p].is_zero()) op = op + a.action_op(p).scaled(nu[p]);
    blocks.push_back(op);
  }
  std::vector<Vec> abasis =
      blocks.empty() ? [&] {
        std::vector<Vec> full;
        for (size_t i = 0; i < d; ++i) full.push_back(Vec::basis(f, d, i));
        return full;
      }()
                     : kernel_basis(Mat::vstack_all(blocks));
  const size_t r = abasis.size();
  out.include_a = Mat::from_columns(f, d, abasis);

  const size_t hd2 = out.base.hopf.dim(), ld2 = out.base.base.dim();
  out.dyn = DynamicalAlgebraData(f, hd2, r, ld2);
  out.report = CheckReport("reduction of a dynamical algebra");

  // H′-action through any section of H → H′; sections differ by Ĥ⊥, which
  // kills A′ by construction.
  bool submodule = true;
  for (size_t i = 0; i < hd2 && submodule; ++i) {
    Mat op(f, d, d);
    const Vec w = out.base.lift_h.col(i);
    for (size_t p = 0; p < h.dim(); ++p)
      if (!w[p].is_zero()) op = op + a.action_op(p).scaled(w[p]);
    for (size_t j = 0; j < r; ++j) {
      const auto coords = solve(out.include_a, op.apply(abasis[j]));
      require(coords.has_value(), "NotClosed", "the annihilator subspace is not H-stable");
      for (size_t k = 0; k < r; ++k) out.dyn.action.at(i, j, k) = (*coords)[k];
    }
  }
  out.report.add("annihilator_submodule", submodule,
                 "dim A′ = " + std::to_string(r) + " of " + std::to_string(d));

  // ⋇′ = (id⊗ϖ_L)∘⋇ restricted to A′, landing in A′⊗L′.
  for (size_t x = 0; x < r; ++x)
    for (size_t y = 0; y < r; ++y) {
      const Vec w = a.dmul(abasis[x], abasis[y]);
      for (size_t lp = 0; lp < ld2; ++lp) {
        Vec slice(f, d);
        for (size_t k = 0; k < d; ++k) {
          Scalar acc = Scalar::zero(f);
          for (size_t lam = 0; lam < b.dim(); ++lam)
            acc += out.base.project_l.at(lp, lam) * w[pair_index(k, lam, b.dim())];
          slice[k] = acc;
        }
        const auto coords = solve(out.include_a, slice);
        require(coords.has_value(), "NotClosed", "the projected product leaves A′");
        for (size_t k = 0; k < r; ++k) out.dyn.dmult.at(x, y, k, lp) = (*coords)[k];
      }
    }
  out.report.add("product_closes", true, "(id⊗ϖ)∘⋇ lands in A′⊗L′");

  if (!a.unit.is_zero()) {
    const auto coords = solve(out.include_a, a.unit);
    require(coords.has_value(), "NotClosed", "the unit lies outside A′");
    out.dyn.unit = *coords;
  }

  out.report.merge("reduced_", check_dynamical(out.base.hopf, out.base.base, out.dyn));
  return out;
}

} // namespace dynbase
