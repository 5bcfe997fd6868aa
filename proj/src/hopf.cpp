/** @file hopf.cpp */
#include "dynbase/hopf.hpp"

#include <algorithm>

#include "dynbase/error.hpp"

namespace dynbase {

Vec HopfData::comult_of(const Vec& v) const {
  const size_t d = dim();
  Vec out(field(), d * d);
  for (size_t i = 0; i < d; ++i) {
    if (v[i].is_zero()) continue;
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) {
        const Scalar& c = comult.at(i, j, k);
        if (!c.is_zero()) out[pair_index(j, k, d)] += v[i] * c;
      }
  }
  return out;
}

Vec mul_t2(const AlgebraData& a, const Vec& x, const Vec& y) {
  const size_t d = a.dim;
  require(x.dim() == d * d && y.dim() == d * d, "DimMismatch", "mul_t2");
  std::vector<size_t> xs, ys;
  for (size_t i = 0; i < d * d; ++i) {
    if (!x[i].is_zero()) xs.push_back(i);
    if (!y[i].is_zero()) ys.push_back(i);
  }
  Vec out(a.field, d * d);
  for (size_t p : xs) {
    const size_t p1 = p / d, p2 = p % d;
    for (size_t q : ys) {
      const size_t q1 = q / d, q2 = q % d;
      const Scalar c = x[p] * y[q];
      // (e_{p1}⊗e_{p2})(e_{q1}⊗e_{q2}) = (e_{p1}e_{q1})⊗(e_{p2}e_{q2})
      for (size_t k = 0; k < d; ++k) {
        const Scalar& m1 = a.mult.at(p1, q1, k);
        if (m1.is_zero()) continue;
        const Scalar cm = c * m1;
        for (size_t l = 0; l < d; ++l) {
          const Scalar& m2 = a.mult.at(p2, q2, l);
          if (!m2.is_zero()) out[pair_index(k, l, d)] += cm * m2;
        }
      }
    }
  }
  return out;
}

std::vector<SweedlerTriple> comult_squared_terms(const HopfData& h, size_t i) {
  const size_t n = h.dim();
  std::vector<SweedlerTriple> out;
  for (size_t a = 0; a < n; ++a)
    for (size_t m = 0; m < n; ++m) {
      const Scalar& c1 = h.comult.at(i, a, m);
      if (c1.is_zero()) continue;
      for (size_t b = 0; b < n; ++b)
        for (size_t c = 0; c < n; ++c) {
          const Scalar& c2 = h.comult.at(m, b, c);
          if (c2.is_zero()) continue;
          out.push_back(SweedlerTriple{a, b, c, c1 * c2});
        }
    }
  return out;
}

namespace {

/** Compare two vectors; on first difference add a failure with (prefix, decoded tail). */
bool compare_with_witness(CheckReport& rep, const std::string& name, const Vec& lhs, const Vec& rhs,
                          std::vector<size_t> prefix, const std::vector<size_t>& shape) {
  auto w = lhs.first_difference(rhs);
  if (!w) return true;
  std::vector<size_t> where = std::move(prefix);
  std::vector<size_t> tail = decode_index(*w, shape);
  where.insert(where.end(), tail.begin(), tail.end());
  rep.add_fail(name, where, lhs[*w].to_string(), rhs[*w].to_string());
  return false;
}

} // namespace

CheckReport check_hopf(const HopfData& h) {
  const size_t d = h.dim();
  const Field f = h.field();
  CheckReport rep("hopf algebra");
  rep.merge("", h.alg.check("algebra"));

  // coassociativity
  bool ok = true;
  for (size_t i = 0; i < d && ok; ++i) {
    Vec di = h.comult_of(h.basis(i));
    Vec left(f, d * d * d), right(f, d * d * d);
    for (size_t p = 0; p < d * d; ++p) {
      if (di[p].is_zero()) continue;
      const size_t a = p / d, b = p % d;
      // (Δ⊗id)Δ: expand the left leg a
      for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < d; ++k) {
          const Scalar& c = h.comult.at(a, j, k);
          if (!c.is_zero()) left[triple_index(j, k, b, d, d)] += di[p] * c;
        }
      // (id⊗Δ)Δ: expand the right leg b
      for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < d; ++k) {
          const Scalar& c = h.comult.at(b, j, k);
          if (!c.is_zero()) right[triple_index(a, j, k, d, d)] += di[p] * c;
        }
    }
    ok = compare_with_witness(rep, "coassociativity", left, right, {i}, {d, d, d});
  }
  if (ok) rep.add_pass("coassociativity");

  // counit laws
  ok = true;
  for (size_t i = 0; i < d && ok; ++i) {
    Vec di = h.comult_of(h.basis(i));
    Vec lhs(f, d), rhs(f, d);
    for (size_t p = 0; p < d * d; ++p) {
      if (di[p].is_zero()) continue;
      lhs[p % d] += di[p] * h.counit[p / d];
      rhs[p / d] += di[p] * h.counit[p % d];
    }
    if (!compare_with_witness(rep, "counit law (ε⊗id)Δ = id", lhs, h.basis(i), {i}, {d})) ok = false;
    if (ok && !compare_with_witness(rep, "counit law (id⊗ε)Δ = id", rhs, h.basis(i), {i}, {d}))
      ok = false;
  }
  if (ok) rep.add_pass("counit laws");

  // Δ and ε are algebra maps
  ok = true;
  for (size_t i = 0; i < d && ok; ++i)
    for (size_t j = 0; j < d && ok; ++j) {
      Vec lhs = h.comult_of(h.mul(h.basis(i), h.basis(j)));
      Vec rhs = mul_t2(h.alg, h.comult_of(h.basis(i)), h.comult_of(h.basis(j)));
      ok = compare_with_witness(rep, "comultiplication is multiplicative", lhs, rhs, {i, j}, {d, d});
    }
  if (ok && h.comult_of(h.unit()) != tensor(h.unit(), h.unit())) {
    rep.add_fail("comultiplication is multiplicative", {}, h.comult_of(h.unit()).to_string(),
                 "1⊗1");
    ok = false;
  }
  if (ok) rep.add_pass("comultiplication is multiplicative");

  ok = true;
  for (size_t i = 0; i < d && ok; ++i)
    for (size_t j = 0; j < d && ok; ++j) {
      Scalar lhs = h.counit_of(h.mul(h.basis(i), h.basis(j)));
      Scalar rhs = h.counit[i] * h.counit[j];
      if (lhs != rhs) {
        rep.add_fail("counit is multiplicative", {i, j}, lhs.to_string(), rhs.to_string());
        ok = false;
      }
    }
  if (ok && !h.counit_of(h.unit()).is_one()) {
    rep.add_fail("counit is multiplicative", {}, h.counit_of(h.unit()).to_string(), "1");
    ok = false;
  }
  if (ok) rep.add_pass("counit is multiplicative");

  // antipode axioms
  ok = true;
  for (size_t i = 0; i < d && ok; ++i) {
    Vec di = h.comult_of(h.basis(i));
    Vec lhs(f, d), rhs(f, d);
    for (size_t p = 0; p < d * d; ++p) {
      if (di[p].is_zero()) continue;
      const size_t a = p / d, b = p % d;
      lhs += h.mul(h.antipode_of(h.basis(a)), h.basis(b)).scaled(di[p]);
      rhs += h.mul(h.basis(a), h.antipode_of(h.basis(b))).scaled(di[p]);
    }
    Vec want = h.unit().scaled(h.counit[i]);
    if (!compare_with_witness(rep, "antipode axiom m(γ⊗id)Δ = ηε", lhs, want, {i}, {d})) ok = false;
    if (ok && !compare_with_witness(rep, "antipode axiom m(id⊗γ)Δ = ηε", rhs, want, {i}, {d}))
      ok = false;
  }
  if (ok) rep.add_pass("antipode axioms");

  const Mat id = Mat::identity(f, d);
  rep.add("antipode inverse is two-sided",
          h.antipode * h.antipode_inv == id && h.antipode_inv * h.antipode == id);
  return rep;
}

HopfData dual_hopf(const HopfData& h) {
  const size_t d = h.dim();
  HopfData out(h.field(), d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) {
        out.alg.mult.at(i, j, k) = h.comult.at(k, i, j);
        out.comult.at(i, j, k) = h.alg.mult.at(j, k, i);
      }
  for (size_t i = 0; i < d; ++i) {
    out.alg.unit[i] = h.counit[i];
    out.counit[i] = h.unit()[i];
  }
  out.antipode = h.antipode.transpose();
  out.antipode_inv = h.antipode_inv.transpose();
  return out;
}

HopfData group_algebra(const Field& f, const GroupTable& g) {
  g.require_valid();
  const size_t n = g.n;
  HopfData h(f, n);
  const Scalar one = Scalar::one(f);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) h.alg.mult.at(i, j, g.mul(i, j)) = one;
    h.comult.at(i, i, i) = one;
    h.counit[i] = one;
    h.antipode.at(g.inverse(i), i) = one;
    h.antipode_inv.at(g.inverse(i), i) = one;
  }
  h.alg.unit[0] = one;
  return h;
}

HopfData function_algebra(const Field& f, const GroupTable& g) {
  g.require_valid();
  const size_t n = g.n;
  HopfData h(f, n);
  const Scalar one = Scalar::one(f);
  for (size_t i = 0; i < n; ++i) {
    h.alg.mult.at(i, i, i) = one;
    h.alg.unit[i] = one;
    for (size_t j = 0; j < n; ++j) h.comult.at(g.mul(i, j), i, j) = one;
    h.antipode.at(g.inverse(i), i) = one;
    h.antipode_inv.at(g.inverse(i), i) = one;
  }
  h.counit[0] = one;
  return h;
}

HopfData sweedler_h4(const Field& f) {
  require(f.is_rational() || f.p != 2, "BadCharacteristic",
          "the four-dimensional Sweedler algebra needs characteristic != 2");
  HopfData h(f, 4);
  const Scalar one = Scalar::one(f);
  const Scalar neg = -one;
  // basis: e0 = 1, e1 = g, e2 = x, e3 = gx with g² = 1, x² = 0, xg = -gx
  auto set_row = [&](size_t i, std::initializer_list<std::pair<size_t, std::pair<size_t, Scalar>>> entries) {
    for (const auto& e : entries) h.alg.mult.at(i, e.first, e.second.first) = e.second.second;
  };
  set_row(0, {{0, {0, one}}, {1, {1, one}}, {2, {2, one}}, {3, {3, one}}});
  set_row(1, {{0, {1, one}}, {1, {0, one}}, {2, {3, one}}, {3, {2, one}}});
  set_row(2, {{0, {2, one}}, {1, {3, neg}}});
  set_row(3, {{0, {3, one}}, {1, {2, neg}}});
  h.alg.unit[0] = one;
  // Δ(1) = 1⊗1, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, Δ(gx) = gx⊗g + 1⊗gx
  h.comult.at(0, 0, 0) = one;
  h.comult.at(1, 1, 1) = one;
  h.comult.at(2, 2, 0) = one;
  h.comult.at(2, 1, 2) = one;
  h.comult.at(3, 3, 1) = one;
  h.comult.at(3, 0, 3) = one;
  h.counit[0] = one;
  h.counit[1] = one;
  // γ: 1↦1, g↦g, x↦-gx, gx↦x
  h.antipode.at(0, 0) = one;
  h.antipode.at(1, 1) = one;
  h.antipode.at(3, 2) = neg;
  h.antipode.at(2, 3) = one;
  h.antipode_inv = inverse(h.antipode);
  return h;
}

std::vector<Vec> left_integrals(const HopfData& h) {
  const size_t d = h.dim();
  std::vector<Mat> blocks;
  for (size_t i = 0; i < d; ++i) {
    Mat li = h.alg.left_mult_op(h.basis(i));
    blocks.push_back(li - Mat::identity(h.field(), d).scaled(h.counit[i]));
  }
  return kernel_basis(Mat::vstack_all(blocks));
}

Vec convolve_chars(const HopfData& h, const Vec& alpha, const Vec& beta) {
  const size_t d = h.dim();
  Vec out(h.field(), d);
  for (size_t k = 0; k < d; ++k)
    for (size_t i = 0; i < d; ++i) {
      if (alpha[i].is_zero()) continue;
      for (size_t j = 0; j < d; ++j) {
        const Scalar& c = h.comult.at(k, i, j);
        if (!c.is_zero()) out[k] += c * alpha[i] * beta[j];
      }
    }
  return out;
}

Vec char_inverse(const HopfData& h, const Vec& alpha) {
  return h.antipode.transpose().apply(alpha);
}

HatGroup hat_group_structure(const HopfData& h) {
  CharacterList cl = characters_of(h.alg);
  HatGroup out;
  out.complete = cl.complete;
  // order: counit first, then the numeric lexicographic order from characters_of
  std::vector<Vec> chars;
  bool found = false;
  for (const Vec& c : cl.chars)
    if (c == h.counit) { found = true; break; }
  require(found, "InvalidHopf", "counit is not among the characters");
  chars.push_back(h.counit);
  for (const Vec& c : cl.chars)
    if (c != h.counit) chars.push_back(c);
  const size_t n = chars.size();
  GroupTable t;
  t.n = n;
  t.table.assign(n * n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec p = convolve_chars(h, chars[i], chars[j]);
      bool hit = false;
      for (size_t k = 0; k < n; ++k)
        if (p == chars[k]) {
          t.table[i * n + j] = k;
          hit = true;
          break;
        }
      require(hit, "NotClosed", "character convolution left the character set at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  CheckReport rep = t.check();
  require(rep.all_pass(), "NotClosed",
          "character convolution does not form a group: " + rep.to_text());
  out.table = t;
  out.chars = chars;
  return out;
}

} // namespace dynbase
