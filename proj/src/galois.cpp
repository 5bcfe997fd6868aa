/**
 * @file galois.cpp
 * @brief Galois maps and Morita context for dynamical smash products.
 *
 * Conventions.  H* is always taken in the basis dual to the basis of H, so
 * the product of H* has structure constants (η^iη^j → η^k) = comult(k,i,j)
 * and the unit of H* is the counit vector.  Tensor legs are flattened with
 * the left factor major: B⊗H* uses pair_index(b, η, dim H).  The right
 * H*-coaction on any H-module is dual to the action, δ(v) = Σ_i (h_i▷v)⊗η^i.
 */
#include "dynbase/galois.hpp"

#include "dynbase/error.hpp"

#include <functional>
#include <string>

namespace dynbase {
namespace {

/** Operator of left multiplication x ↦ v·x on an algebra. */
Mat left_mult(const AlgebraData& alg, const Vec& v) {
  const Field f = alg.field;
  Mat op(f, alg.dim, alg.dim);
  for (size_t x = 0; x < alg.dim; ++x) {
    const Vec w = alg.mul(v, alg.basis(x));
    for (size_t k = 0; k < alg.dim; ++k) op.at(k, x) = w[k];
  }
  return op;
}

/** Operator of right multiplication x ↦ x·v on an algebra. */
Mat right_mult(const AlgebraData& alg, const Vec& v) {
  const Field f = alg.field;
  Mat op(f, alg.dim, alg.dim);
  for (size_t x = 0; x < alg.dim; ++x) {
    const Vec w = alg.mul(alg.basis(x), v);
    for (size_t k = 0; k < alg.dim; ++k) op.at(k, x) = w[k];
  }
  return op;
}

/** Operator of right convolution η ↦ η·η^i on H*: entry (k,j) = Δ(h_k)_{j,i}. */
Mat conv_right(const HopfData& h, size_t i) {
  const Field f = h.field();
  const size_t n = h.dim();
  Mat op(f, n, n);
  for (size_t k = 0; k < n; ++k)
    for (size_t j = 0; j < n; ++j) op.at(k, j) = h.comult.at(k, j, i);
  return op;
}

/** The right co-regular action η^j ↼ v for v ∈ H: (η^j↼v)(h_k) = η^j(v·h_k). */
Vec coreg_right(const HopfData& h, size_t j, const Vec& v) {
  const Field f = h.field();
  Vec out(f, h.dim());
  for (size_t s = 0; s < h.dim(); ++s) {
    if (v[s].is_zero()) continue;
    for (size_t k = 0; k < h.dim(); ++k) out[k] += v[s] * h.alg.mult.at(s, k, j);
  }
  return out;
}

/** The right H*-action on L dual to the coaction: e ↼ η^j = ⟨η^j,e⁽¹⁾⟩e^[∞]. */
Vec l_coact_right(const BaseAlgebraData& b, const Vec& e, size_t j) {
  const Field f = b.field();
  Vec out(f, b.dim());
  for (size_t lam = 0; lam < b.dim(); ++lam) {
    if (e[lam].is_zero()) continue;
    for (size_t mu = 0; mu < b.dim(); ++mu) out[mu] += e[lam] * b.coaction.at(lam, j, mu);
  }
  return out;
}

/** λ ⇀_χ η^j = η^j ↼ (γ∘ι_χ)(λ) as a vector in the dual basis. */
Vec harpoon_chi(const HopfData& h, const Mat& iota, size_t lam, size_t j) {
  return coreg_right(h, j, h.antipode.apply(iota.col(lam)));
}

/** Indices of the canonical complement of an RREF basis (non-pivot slots). */
std::vector<size_t> complement_slots(const std::vector<Vec>& rref, size_t n) {
  std::vector<bool> pivot(n, false);
  for (const Vec& v : rref)
    for (size_t k = 0; k < n; ++k)
      if (!v[k].is_zero()) {
        pivot[k] = true;
        break;
      }
  std::vector<size_t> out;
  for (size_t k = 0; k < n; ++k)
    if (!pivot[k]) out.push_back(k);
  return out;
}

/** Joint kernel of {ops[i] − w[i]·id}. */
std::vector<Vec> joint_eigenspace(const Field& f, const std::vector<Mat>& ops, const Vec& w) {
  std::vector<Mat> blocks;
  const size_t n = ops.empty() ? 0 : ops[0].rows();
  for (size_t i = 0; i < ops.size(); ++i)
    blocks.push_back(ops[i] - Mat::identity(f, n).scaled(w[i]));
  return kernel_basis(Mat::vstack_all(blocks));
}

void check_bimodule_axioms(BimoduleData& bm, const std::string& what) {
  const AlgebraData& alg = bm.acting;
  const Field f = alg.field;
  const size_t n = alg.dim, d = bm.dim;

  Mat lu(f, d, d), ru(f, d, d);
  for (size_t i = 0; i < n; ++i) {
    if (!alg.unit[i].is_zero()) {
      lu = lu + bm.left[i].scaled(alg.unit[i]);
      ru = ru + bm.right[i].scaled(alg.unit[i]);
    }
  }
  bm.report.add(what + "_left_unit", lu == Mat::identity(f, d), "");
  bm.report.add(what + "_right_unit", ru == Mat::identity(f, d), "");

  bool ok = true;
  for (size_t i = 0; i < n && ok; ++i)
    for (size_t j = 0; j < n && ok; ++j) {
      Mat prod(f, d, d);
      for (size_t k = 0; k < n; ++k)
        if (!alg.mult.at(i, j, k).is_zero())
          prod = prod + bm.left[k].scaled(alg.mult.at(i, j, k));
      if (!(prod == bm.left[i] * bm.left[j])) {
        bm.report.add_fail(what + "_left_composition", {i, j}, "", "",
                           "left action is not multiplicative");
        ok = false;
      }
    }
  if (ok) bm.report.add_pass(what + "_left_composition");

  ok = true;
  for (size_t i = 0; i < n && ok; ++i)
    for (size_t j = 0; j < n && ok; ++j) {
      Mat prod(f, d, d);
      for (size_t k = 0; k < n; ++k)
        if (!alg.mult.at(i, j, k).is_zero())
          prod = prod + bm.right[k].scaled(alg.mult.at(i, j, k));
      if (!(prod == bm.right[j] * bm.right[i])) {
        bm.report.add_fail(what + "_right_composition", {i, j}, "", "",
                           "right action is not anti-multiplicative");
        ok = false;
      }
    }
  if (ok) bm.report.add_pass(what + "_right_composition");

  ok = true;
  for (size_t i = 0; i < n && ok; ++i)
    for (size_t j = 0; j < n && ok; ++j)
      if (!(bm.left[i] * bm.right[j] == bm.right[j] * bm.left[i])) {
        bm.report.add_fail(what + "_actions_commute", {i, j}, "", "",
                           "left and right actions do not commute");
        ok = false;
      }
  if (ok) bm.report.add_pass(what + "_actions_commute");
}

/** Spanning vectors bλ⊗η^j − b⊗(λ⇀_χη^j) of J_χ. */
std::vector<Vec> j_chi_spanning(const HopfData& h, const BaseAlgebraData& b,
                                const SmashAlgebraData& s, const Vec& chi) {
  const Field f = h.field();
  const size_t n = s.m.dim(), hd = h.dim();
  const Mat iota = iota_chi(h, b, chi);
  std::vector<Vec> spanning;
  spanning.reserve(n * b.dim() * hd);
  for (size_t i = 0; i < n; ++i) {
    const Vec bi = Vec::basis(f, n, i);
    for (size_t lam = 0; lam < b.dim(); ++lam) {
      const Vec blam = s.m.alg.mul(bi, s.embed_l.col(lam));
      for (size_t j = 0; j < hd; ++j) {
        Vec v = tensor(blam, Vec::basis(f, hd, j)) - tensor(bi, harpoon_chi(h, iota, lam, j));
        if (!v.is_zero()) spanning.push_back(v);
      }
    }
  }
  return spanning;
}

} // namespace

BimoduleData bimodule_b_hstar(const HopfData& h, const SmashAlgebraData& s) {
  const Field f = h.field();
  const size_t n = s.m.dim(), hd = h.dim();
  if (s.m.action.dim0() != hd)
    throw error("DimMismatch", "smash product and Hopf algebra dimensions disagree");

  BimoduleData bm;
  bm.acting = s.m.alg;
  bm.dim = n * hd;
  for (size_t c = 0; c < n; ++c) {
    bm.left.push_back(kron(left_mult(s.m.alg, Vec::basis(f, n, c)), Mat::identity(f, hd)));
    Mat r(f, bm.dim, bm.dim);
    for (size_t i = 0; i < hd; ++i) {
      const Vec moved = s.m.act(i, Vec::basis(f, n, c));
      if (moved.is_zero()) continue;
      r = r + kron(right_mult(s.m.alg, moved), conv_right(h, i));
    }
    bm.right.push_back(r);
  }
  check_bimodule_axioms(bm, "b_hstar");
  return bm;
}

SubBimodule j_chi(const HopfData& h, const BaseAlgebraData& b, const SmashAlgebraData& s,
                  const Vec& chi) {
  if (!is_invariant_character(h, b, chi))
    throw error("NotInvariant", "j_chi requires an invariant character of L");
  SubBimodule out;
  out.basis = span_basis(j_chi_spanning(h, b, s, chi));

  const BimoduleData bm = bimodule_b_hstar(h, s);
  bool ok = true;
  for (size_t i = 0; i < s.m.dim() && ok; ++i)
    for (const Vec& v : out.basis)
      if (!in_span(out.basis, bm.left[i].apply(v))) {
        out.report.add_fail("left_closed", {i}, "", "", "left action leaves J_chi");
        ok = false;
        break;
      }
  if (ok) out.report.add_pass("left_closed");
  ok = true;
  for (size_t i = 0; i < s.m.dim() && ok; ++i)
    for (const Vec& v : out.basis)
      if (!in_span(out.basis, bm.right[i].apply(v))) {
        out.report.add_fail("right_closed", {i}, "", "", "right action leaves J_chi");
        ok = false;
        break;
      }
  if (ok) out.report.add_pass("right_closed");
  return out;
}

QuotientBimodule quotient_bimodule(const HopfData& h, const BaseAlgebraData& b,
                                   const SmashAlgebraData& s, const Vec& chi) {
  if (!is_invariant_character(h, b, chi))
    throw error("NotInvariant", "quotient_bimodule requires an invariant character");
  const Field f = h.field();
  const size_t n = s.m.dim(), hd = h.dim(), na = s.embed_a.cols();
  const size_t big = n * hd, small = na * hd;

  QuotientBimodule q;
  q.full = bimodule_b_hstar(h, s);
  q.report.merge("full", q.full.report);

  SubBimodule j = j_chi(h, b, s, chi);
  q.report.merge("j", j.report);
  q.j_basis = j.basis;

  q.report.add("quotient_dimension", q.j_basis.size() == big - small,
               "dim J = " + std::to_string(q.j_basis.size()) + ", expected " +
                   std::to_string(big - small));

  // Canonical section: the coordinate subspace (embed_a A)⊗H*.
  std::vector<Vec> scols;
  for (size_t x = 0; x < na; ++x)
    for (size_t jdx = 0; jdx < hd; ++jdx)
      scols.push_back(tensor(s.embed_a.col(x), Vec::basis(f, hd, jdx)));

  q.coordinate_section = false;
  if (q.j_basis.size() + small == big) {
    std::vector<Vec> cols = q.j_basis;
    cols.insert(cols.end(), scols.begin(), scols.end());
    const Mat m = Mat::from_columns(f, big, cols);
    if (rank(m) == big) {
      const Mat minv = inverse(m);
      q.section = Mat::from_columns(f, big, scols);
      q.projection = Mat(f, small, big);
      for (size_t r = 0; r < small; ++r)
        for (size_t c = 0; c < big; ++c) q.projection.at(r, c) = minv.at(q.j_basis.size() + r, c);
      q.coordinate_section = true;
    }
  }
  if (!q.coordinate_section) {
    // Fall back to the canonical RREF complement of J_χ and flag the input.
    std::vector<Vec> cols = q.j_basis;
    std::vector<Vec> comp;
    for (size_t k : complement_slots(q.j_basis, big)) comp.push_back(Vec::basis(f, big, k));
    cols.insert(cols.end(), comp.begin(), comp.end());
    const Mat m = Mat::from_columns(f, big, cols);
    const Mat minv = inverse(m);
    q.section = Mat::from_columns(f, big, comp);
    q.projection = Mat(f, comp.size(), big);
    for (size_t r = 0; r < comp.size(); ++r)
      for (size_t c = 0; c < big; ++c) q.projection.at(r, c) = minv.at(q.j_basis.size() + r, c);
  }
  q.report.add("coordinate_section", q.coordinate_section,
               q.coordinate_section ? "" : "A⊗H* does not complement J_chi; arbitrary complement used");
  q.report.add("section_property",
               q.projection * q.section == Mat::identity(f, q.section.cols()), "");

  // Induced actions, and well-definedness: the composite kills J_χ.
  q.quotient.acting = s.m.alg;
  q.quotient.dim = q.section.cols();
  bool okl = true, okr = true;
  for (size_t i = 0; i < n; ++i) {
    q.quotient.left.push_back(q.projection * q.full.left[i] * q.section);
    q.quotient.right.push_back(q.projection * q.full.right[i] * q.section);
    for (const Vec& v : q.j_basis) {
      if (okl && !q.projection.apply(q.full.left[i].apply(v)).is_zero()) okl = false;
      if (okr && !q.projection.apply(q.full.right[i].apply(v)).is_zero()) okr = false;
    }
  }
  q.report.add("left_action_well_defined", okl, "");
  q.report.add("right_action_well_defined", okr, "");
  check_bimodule_axioms(q.quotient, "quotient");
  q.report.merge("", q.quotient.report);
  return q;
}

GaloisResult gamma_chi(const HopfData& h, const BaseAlgebraData& b,
                       const DynamicalAlgebraData& a, const SmashAlgebraData& s,
                       const Vec& chi) {
  if (!is_invariant_character(h, b, chi))
    throw error("NotInvariant", "gamma_chi requires an invariant character");
  const Field f = h.field();
  const size_t n = s.m.dim(), hd = h.dim(), da = a.dim();

  GaloisResult g;
  g.chi = chi;
  g.chi_tilde = adjoint_character(h, b, chi);
  g.quotient = quotient_bimodule(h, b, s, chi);
  g.report.merge("quotient", g.quotient.report);

  // Γ̌ : B⊗B → B⊗H*, u⊗v ↦ u·v^[0] ⊗ v⟨¹⟩ with the dual coaction.
  g.gamma_full = Mat(f, n * hd, n * n);
  for (size_t u = 0; u < n; ++u) {
    const Mat lm_u = left_mult(s.m.alg, Vec::basis(f, n, u));
    for (size_t v = 0; v < n; ++v) {
      Vec col(f, n * hd);
      for (size_t i = 0; i < hd; ++i) {
        const Vec moved = lm_u.apply(s.m.act(i, Vec::basis(f, n, v)));
        for (size_t k = 0; k < n; ++k)
          if (!moved[k].is_zero()) col[pair_index(k, i, hd)] += moved[k];
      }
      for (size_t r = 0; r < n * hd; ++r) g.gamma_full.at(r, pair_index(u, v, n)) = col[r];
    }
  }

  g.gamma_check = g.quotient.projection * g.gamma_full * kron(s.embed_a, s.embed_a);

  // (P_χ∘Γ̌)(λ⊗μ) = χ(λ)χ̃(μ)(1⊗1).
  {
    const Vec one = g.quotient.projection.apply(tensor(s.m.alg.unit, h.counit));
    bool ok = true;
    for (size_t lam = 0; lam < b.dim() && ok; ++lam)
      for (size_t mu = 0; mu < b.dim() && ok; ++mu) {
        const Vec lhs = g.quotient.projection.apply(
            g.gamma_full.apply(tensor(s.embed_l.col(lam), s.embed_l.col(mu))));
        if (!(lhs == one.scaled(chi[lam] * g.chi_tilde[mu]))) {
          g.report.add_fail("scalar_on_l_pairs", {lam, mu}, "", "",
                            "P∘Γ̌ on L⊗L is not χ(λ)χ̃(μ)(1⊗1)");
          ok = false;
        }
      }
    if (ok) g.report.add_pass("scalar_on_l_pairs");
  }

  // Balance subspace of A_χ ⊗_{I_χ} χ̃A inside A⊗A.
  const InvariantAlgebra inv = i_chi_algebra(h, b, a, chi);
  g.report.merge("invariant", inv.report);
  {
    std::vector<Vec> spanning;
    for (const Vec& c : inv.basis)
      for (size_t x = 0; x < da; ++x) {
        const Vec xc = star_chi(a, Vec::basis(f, da, x), c, chi);
        for (size_t y = 0; y < da; ++y) {
          Vec v = tensor(xc, Vec::basis(f, da, y)) -
                  tensor(Vec::basis(f, da, x), rd_chi(b, a, c, Vec::basis(f, da, y), g.chi_tilde));
          if (!v.is_zero()) spanning.push_back(v);
        }
      }
    g.balance = span_basis(spanning);
  }
  {
    bool ok = true;
    for (const Vec& v : g.balance)
      if (!g.gamma_check.apply(v).is_zero()) {
        ok = false;
        break;
      }
    g.report.add("kills_balance", ok, "Γ̌_χ annihilates the I_χ-balance subspace");
  }

  // Γ_χ on the canonical complement of the balance subspace.
  {
    std::vector<Vec> cols;
    for (size_t k : complement_slots(g.balance, da * da)) cols.push_back(Vec::basis(f, da * da, k));
    g.domain = Mat::from_columns(f, da * da, cols);
  }
  g.gamma = g.gamma_check * g.domain;
  g.dim_domain = g.domain.cols();
  g.dim_codomain = g.quotient.section.cols();
  g.rank = rank(g.gamma);
  g.surjective = g.rank == g.dim_codomain;
  g.injective = g.rank == g.dim_domain;
  g.bijective = g.surjective && g.injective;

  // Γ̌_χ is a B-bimodule map for the induced actions on the two legs.
  const InducedModule lm = induced_module(h, b, a, s, chi, true);
  const InducedModule rm = induced_module(h, b, a, s, g.chi_tilde, false);
  g.report.merge("left_module", lm.report);
  g.report.merge("right_module", rm.report);
  {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      if (!(g.quotient.quotient.left[i] * g.gamma_check ==
            g.gamma_check * kron(lm.rho[i], Mat::identity(f, da)))) {
        g.report.add_fail("left_bimodule_map", {i}, "", "", "");
        ok = false;
      }
    if (ok) g.report.add_pass("left_bimodule_map");
    ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      if (!(g.quotient.quotient.right[i] * g.gamma_check ==
            g.gamma_check * kron(Mat::identity(f, da), rm.rho[i]))) {
        g.report.add_fail("right_bimodule_map", {i}, "", "", "");
        ok = false;
      }
    if (ok) g.report.add_pass("right_bimodule_map");
  }

  // The factorization diagram P_χ∘Γ̌ = Γ̌_χ∘(℘_χ⊗χ̃℘) on B⊗B.
  g.report.add("projection_diagram",
               g.quotient.projection * g.gamma_full ==
                   g.gamma_check * kron(wp_left(b, s, chi), wp_right(b, s, g.chi_tilde)),
               "");
  return g;
}

CheckReport restrict_galois(const HopfData& h, const BaseAlgebraData& b,
                            const DynamicalAlgebraData& a, const SmashAlgebraData& s,
                            const Vec& chi) {
  const ProjectivityResult pr = is_projective(h, b, chi);
  if (!pr.projective)
    throw error("NotProjective", "restrict_galois requires a projective character");
  const Field f = h.field();
  const size_t hd = h.dim();

  CheckReport rep;
  rep.subject = "restricted Galois map";
  const GaloisResult g = gamma_chi(h, b, a, s, chi);
  const CornerModuleAlgebra corner = a_l_chi(h, b, a, s, chi);
  const size_t m = corner.basis.size();

  // A^L_χ is H-stable, so it is an ordinary H-module algebra.
  {
    bool ok = true;
    for (size_t i = 0; i < hd && ok; ++i)
      for (const Vec& u : corner.basis)
        if (!in_span(corner.basis, a.act(i, u))) {
          rep.add_fail("corner_h_stable", {i}, "", "", "H-action leaves A^L_chi");
          ok = false;
          break;
        }
    if (ok) rep.add_pass("corner_h_stable");
  }

  // Entrywise match with the classical Galois map u⊗v ↦ Σ_i u∗(h_i▷v)⊗η^i.
  {
    bool ok = true;
    for (size_t j = 0; j < m && ok; ++j)
      for (size_t k = 0; k < m && ok; ++k) {
        const Vec restricted = g.gamma_check.apply(tensor(corner.basis[j], corner.basis[k]));
        Vec classical(f, g.dim_codomain);
        for (size_t i = 0; i < hd; ++i) {
          const Vec w = star_chi(a, corner.basis[j], a.act(i, corner.basis[k]), chi);
          for (size_t x = 0; x < a.dim(); ++x)
            if (!w[x].is_zero()) classical[pair_index(x, i, hd)] += w[x];
        }
        if (!(restricted == classical)) {
          rep.add_fail("matches_classical", {j, k}, "", "",
                       "restriction differs from the classical Galois map");
          ok = false;
        }
      }
    rep.add("coordinate_section_available", g.quotient.coordinate_section,
            "entrywise comparison requires the coordinate section");
    if (ok) rep.add_pass("matches_classical");
  }

  // Values lie in A^L_χ ⊗ (H^χ)*, the functionals vanishing on (1−t_χ)H.
  {
    const ProjectedHopf ph = h_chi(h, b, chi);
    const std::vector<Vec> dual_sub = kernel_basis(Mat::from_rows(f, hd, ph.xi_basis));
    std::vector<Vec> allowed;
    for (const Vec& u : corner.basis)
      for (const Vec& d : dual_sub) allowed.push_back(tensor(u, d));
    bool ok = true;
    for (size_t j = 0; j < m && ok; ++j)
      for (size_t k = 0; k < m && ok; ++k)
        if (!in_span(allowed, g.gamma_check.apply(tensor(corner.basis[j], corner.basis[k])))) {
          rep.add_fail("codomain_contained", {j, k}, "", "",
                       "value escapes A^L_chi ⊗ (H^chi)*");
          ok = false;
        }
    if (ok) rep.add_pass("codomain_contained");
  }
  return rep;
}

PiMap pi_e(const HopfData& h, const BaseAlgebraData& b, const SmashAlgebraData& s,
           const Vec& chi, const Vec& e) {
  if (e.is_zero() || !in_span(chi_generators(b, chi), e))
    throw error("NotGenerator", "pi_e requires a nonzero chi-generator e in L^chi");
  const Field f = h.field();
  const size_t n = s.m.dim(), hd = h.dim();

  PiMap p;
  p.e = e;
  const QuotientBimodule q = quotient_bimodule(h, b, s, chi);

  // Π̌_e(x⊗η^j) = x·⟨η^j, e⁽¹⁾⟩e^[∞] with the coaction legs of e.
  p.full = Mat(f, n, n * hd);
  for (size_t jdx = 0; jdx < hd; ++jdx) {
    Vec le(f, b.dim());
    for (size_t lam = 0; lam < b.dim(); ++lam) {
      if (e[lam].is_zero()) continue;
      for (size_t mu = 0; mu < b.dim(); ++mu) le[mu] += e[lam] * b.coaction.at(lam, jdx, mu);
    }
    const Vec embedded = s.embed_l.apply(le);
    for (size_t u = 0; u < n; ++u) {
      const Vec col = s.m.alg.mul(Vec::basis(f, n, u), embedded);
      for (size_t r = 0; r < n; ++r) p.full.at(r, pair_index(u, jdx, hd)) = col[r];
    }
  }

  bool ok = true;
  for (size_t i = 0; i < n && ok; ++i)
    if (!(p.full * q.full.left[i] == left_mult(s.m.alg, Vec::basis(f, n, i)) * p.full)) {
      p.report.add_fail("left_bimodule_map", {i}, "", "", "");
      ok = false;
    }
  if (ok) p.report.add_pass("left_bimodule_map");
  ok = true;
  for (size_t i = 0; i < n && ok; ++i)
    if (!(p.full * q.full.right[i] == right_mult(s.m.alg, Vec::basis(f, n, i)) * p.full)) {
      p.report.add_fail("right_bimodule_map", {i}, "", "", "");
      ok = false;
    }
  if (ok) p.report.add_pass("right_bimodule_map");

  ok = true;
  for (const Vec& v : q.j_basis)
    if (!p.full.apply(v).is_zero()) {
      ok = false;
      break;
    }
  p.report.add("annihilates_j", ok, "Π̌_e vanishes on J_chi");

  p.factored = p.full * q.section;
  p.report.add("factors_through_quotient", p.factored * q.projection == p.full, "");
  return p;
}

bool is_cyclic_generator(const HopfData& h, const BaseAlgebraData& b, const Vec& chi,
                         const Vec& e) {
  if (e.is_zero() || !in_span(chi_generators(b, chi), e))
    throw error("NotGenerator", "cyclicity is defined for nonzero chi-generators");
  std::vector<Vec> orbit;
  for (size_t j = 0; j < h.dim(); ++j) orbit.push_back(l_coact_right(b, e, j));
  return span_basis(orbit).size() == b.dim();
}

MoritaContext morita_context(const HopfData& h, const BaseAlgebraData& b,
                             const DynamicalAlgebraData& a, const SmashAlgebraData& s,
                             const Vec& chi, const Vec& e) {
  if (e.is_zero() || !in_span(chi_generators(b, chi), e))
    throw error("NotGenerator", "morita_context requires a nonzero chi-generator");
  const Field f = h.field();
  const size_t n = s.m.dim(), da = a.dim();

  MoritaContext mc;
  mc.chi = chi;
  mc.chi_tilde = adjoint_character(h, b, chi);
  mc.e = e;
  mc.corner = a_l_chi(h, b, a, s, chi);
  mc.report.merge("corner", mc.corner.report);
  mc.left_mod = induced_module(h, b, a, s, chi, true);
  mc.right_mod = induced_module(h, b, a, s, mc.chi_tilde, false);
  mc.report.merge("left_module", mc.left_mod.report);
  mc.report.merge("right_module", mc.right_mod.report);

  const size_t m = mc.corner.basis.size();
  const Mat U = Mat::from_columns(f, da, mc.corner.basis);

  // Right corner action on P = A_χ and left corner action on Q = χ̃A.
  std::vector<Mat> rp, lq;
  for (size_t u = 0; u < m; ++u) {
    Mat r(f, da, da), l(f, da, da);
    for (size_t x = 0; x < da; ++x) {
      const Vec rx = star_chi(a, Vec::basis(f, da, x), mc.corner.basis[u], chi);
      const Vec lx = rd_chi(b, a, mc.corner.basis[u], Vec::basis(f, da, x), mc.chi_tilde);
      for (size_t k = 0; k < da; ++k) {
        r.at(k, x) = rx[k];
        l.at(k, x) = lx[k];
      }
    }
    rp.push_back(r);
    lq.push_back(l);
  }

  // Balance subspaces of P⊗_{A^L_χ}Q and Q⊗_B P.
  {
    std::vector<Vec> sp;
    for (size_t u = 0; u < m; ++u)
      for (size_t x = 0; x < da; ++x)
        for (size_t y = 0; y < da; ++y) {
          Vec v = tensor(rp[u].col(x), Vec::basis(f, da, y)) -
                  tensor(Vec::basis(f, da, x), lq[u].col(y));
          if (!v.is_zero()) sp.push_back(v);
        }
    mc.balance_pq = span_basis(sp);
  }
  {
    std::vector<Vec> sp;
    for (size_t i = 0; i < n; ++i)
      for (size_t x = 0; x < da; ++x)
        for (size_t y = 0; y < da; ++y) {
          Vec v = tensor(mc.right_mod.rho[i].col(x), Vec::basis(f, da, y)) -
                  tensor(Vec::basis(f, da, x), mc.left_mod.rho[i].col(y));
          if (!v.is_zero()) sp.push_back(v);
        }
    mc.balance_qp = span_basis(sp);
  }

  // [p,q] = p·e·q in B, and (q,p) = ι_χ(e)▷(q∗_χp) in corner coordinates.
  const Vec embedded_e = s.embed_l.apply(e);
  mc.bracket_full = Mat(f, n, da * da);
  for (size_t p = 0; p < da; ++p) {
    const Vec pe = s.m.alg.mul(s.embed_a.col(p), embedded_e);
    for (size_t qx = 0; qx < da; ++qx) {
      const Vec col = s.m.alg.mul(pe, s.embed_a.col(qx));
      for (size_t r = 0; r < n; ++r) mc.bracket_full.at(r, pair_index(p, qx, da)) = col[r];
    }
  }
  const Vec iota_e = iota_chi(h, b, chi).apply(e);
  Mat iota_e_op(f, da, da);
  for (size_t sdx = 0; sdx < h.dim(); ++sdx)
    if (!iota_e[sdx].is_zero()) iota_e_op = iota_e_op + a.action_op(sdx).scaled(iota_e[sdx]);
  mc.paren_full = Mat(f, m, da * da);
  {
    bool lands = true;
    for (size_t qx = 0; qx < da; ++qx)
      for (size_t p = 0; p < da; ++p) {
        const Vec v =
            iota_e_op.apply(star_chi(a, Vec::basis(f, da, qx), Vec::basis(f, da, p), chi));
        const auto coords = solve(U, v);
        if (!coords) {
          lands = false;
          continue;
        }
        for (size_t r = 0; r < m; ++r) mc.paren_full.at(r, pair_index(qx, p, da)) = (*coords)[r];
      }
    mc.report.add("paren_lands_in_corner", lands, "ι_χ(e)▷(q∗p) lies in A^L_chi");
  }

  // Both maps kill their balance subspaces.
  {
    bool ok = true;
    for (const Vec& v : mc.balance_pq)
      if (!mc.bracket_full.apply(v).is_zero()) {
        ok = false;
        break;
      }
    mc.report.add("bracket_balanced", ok, "");
    ok = true;
    for (const Vec& v : mc.balance_qp)
      if (!mc.paren_full.apply(v).is_zero()) {
        ok = false;
        break;
      }
    mc.report.add("paren_balanced", ok, "");
  }

  // Bimodule-map identities.
  {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      if (!(mc.bracket_full * kron(mc.left_mod.rho[i], Mat::identity(f, da)) ==
            left_mult(s.m.alg, Vec::basis(f, n, i)) * mc.bracket_full)) {
        mc.report.add_fail("bracket_left_bimodule", {i}, "", "", "");
        ok = false;
      }
    }
    if (ok) mc.report.add_pass("bracket_left_bimodule");
    ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      if (!(mc.bracket_full * kron(Mat::identity(f, da), mc.right_mod.rho[i]) ==
            right_mult(s.m.alg, Vec::basis(f, n, i)) * mc.bracket_full)) {
        mc.report.add_fail("bracket_right_bimodule", {i}, "", "", "");
        ok = false;
      }
    if (ok) mc.report.add_pass("bracket_right_bimodule");

    ok = true;
    for (size_t u = 0; u < m && ok; ++u)
      if (!(mc.paren_full * kron(lq[u], Mat::identity(f, da)) ==
            left_mult(mc.corner.alg, Vec::basis(f, m, u)) * mc.paren_full)) {
        mc.report.add_fail("paren_left_bimodule", {u}, "", "", "");
        ok = false;
      }
    if (ok) mc.report.add_pass("paren_left_bimodule");
    ok = true;
    for (size_t u = 0; u < m && ok; ++u)
      if (!(mc.paren_full * kron(Mat::identity(f, da), rp[u]) ==
            right_mult(mc.corner.alg, Vec::basis(f, m, u)) * mc.paren_full)) {
        mc.report.add_fail("paren_right_bimodule", {u}, "", "", "");
        ok = false;
      }
    if (ok) mc.report.add_pass("paren_right_bimodule");
  }

  // Associativity: p′⊣(q,p) = [p′,q]⊢p and q′⊣[p,q] = (q′,p)⊢q.
  {
    bool ok = true;
    for (size_t pp = 0; pp < da && ok; ++pp)
      for (size_t qx = 0; qx < da && ok; ++qx)
        for (size_t p = 0; p < da && ok; ++p) {
          const Vec c = U.apply(mc.paren_full.col(pair_index(qx, p, da)));
          const Vec lhs = star_chi(a, Vec::basis(f, da, pp), c, chi);
          const Vec w = mc.bracket_full.col(pair_index(pp, qx, da));
          Vec rhs(f, da);
          for (size_t i = 0; i < n; ++i)
            if (!w[i].is_zero()) rhs += mc.left_mod.rho[i].col(p).scaled(w[i]);
          if (!(lhs == rhs)) {
            mc.report.add_fail("associativity_first", {pp, qx, p}, "", "", "");
            ok = false;
          }
        }
    if (ok) mc.report.add_pass("associativity_first");

    ok = true;
    for (size_t qq = 0; qq < da && ok; ++qq)
      for (size_t p = 0; p < da && ok; ++p)
        for (size_t qx = 0; qx < da && ok; ++qx) {
          const Vec w = mc.bracket_full.col(pair_index(p, qx, da));
          Vec lhs(f, da);
          for (size_t i = 0; i < n; ++i)
            if (!w[i].is_zero()) lhs += mc.right_mod.rho[i].col(qq).scaled(w[i]);
          const Vec c = U.apply(mc.paren_full.col(pair_index(qq, p, da)));
          const Vec rhs = rd_chi(b, a, c, Vec::basis(f, da, qx), mc.chi_tilde);
          if (!(lhs == rhs)) {
            mc.report.add_fail("associativity_second", {qq, p, qx}, "", "", "");
            ok = false;
          }
        }
    if (ok) mc.report.add_pass("associativity_second");
  }

  mc.bracket_surjective = rank(mc.bracket_full) == n;
  mc.paren_surjective = rank(mc.paren_full) == m;
  mc.equivalence = mc.bracket_surjective && mc.paren_surjective;

  // The image of (.,.) is ι_χ(e)(A) inside the corner.
  {
    std::vector<Vec> image, iota_image;
    for (size_t c = 0; c < da * da; ++c) image.push_back(U.apply(mc.paren_full.col(c)));
    for (size_t x = 0; x < da; ++x) iota_image.push_back(iota_e_op.col(x));
    mc.report.add("paren_image_is_iota_image", same_span(image, iota_image), "");
  }
  return mc;
}

RingConditions ring_conditions(const HopfData& h, const BaseAlgebraData& b,
                               const DynamicalAlgebraData& a, const Vec& chi) {
  if (!is_invariant_character(h, b, chi))
    throw error("NotInvariant", "ring_conditions requires an invariant character");
  const Field f = h.field();
  const size_t hd = h.dim(), da = a.dim();

  RingConditions rc;
  rc.chi = chi;

  // Transport A to the base L = H through ι_χ: B′ = A⋊_χH.
  const Mat iota = iota_chi(h, b, chi);
  const BaseAlgebraData bh = base_from_h(h);
  DynamicalAlgebraData a2(f, hd, da, hd);
  a2.action = a.action;
  a2.unit = a.unit;
  for (size_t x = 0; x < da; ++x)
    for (size_t y = 0; y < da; ++y)
      for (size_t k = 0; k < da; ++k)
        for (size_t l = 0; l < b.dim(); ++l) {
          const Scalar& c = a.dmult.at(x, y, k, l);
          if (c.is_zero()) continue;
          for (size_t mdx = 0; mdx < hd; ++mdx)
            if (!iota.at(mdx, l).is_zero()) a2.dmult.at(x, y, k, mdx) += c * iota.at(mdx, l);
        }
  rc.report.merge("transported", check_dynamical(h, bh, a2));

  const SmashAlgebraData s2 = smash_product(h, bh, a2);
  const size_t nb = s2.m.dim();
  const Vec eps = h.counit;
  const Vec eps_tilde = adjoint_character(h, bh, eps);

  const std::vector<Vec> integrals = left_integrals(h);
  rc.report.add("integral_dimension", integrals.size() == 1,
                "dim of left integrals = " + std::to_string(integrals.size()));
  if (integrals.empty()) throw error("NoIntegral", "no left integral found");
  const Vec t = integrals[0];

  const InducedModule lm = induced_module(h, bh, a2, s2, eps, true);
  const InducedModule rm = induced_module(h, bh, a2, s2, eps_tilde, false);
  rc.report.merge("left_module", lm.report);
  rc.report.merge("right_module", rm.report);
  const InvariantAlgebra inv = i_chi_algebra(h, bh, a2, eps);
  rc.report.merge("invariant", inv.report);
  const size_t m = inv.basis.size();
  const Mat U = Mat::from_columns(f, da, inv.basis);

  // (1) Γ surjective.
  const GaloisResult g = gamma_chi(h, bh, a2, s2, eps);
  rc.report.merge("galois", g.report);
  rc.galois_surjective = g.surjective;

  // Right I_χ-action on A_χ by ∗, and its commutant End_{I_χ}(A_χ).
  std::vector<Mat> ri;
  for (size_t u = 0; u < m; ++u) {
    Mat r(f, da, da);
    for (size_t x = 0; x < da; ++x) {
      const Vec rx = star_chi(a2, Vec::basis(f, da, x), inv.basis[u], eps);
      for (size_t k = 0; k < da; ++k) r.at(k, x) = rx[k];
    }
    ri.push_back(r);
  }
  const std::vector<Mat> commutant = module_endomorphisms(ri);

  // (2a) B′ → End_{I_χ}(A_χ) bijective.
  {
    std::vector<Vec> flats, cflats;
    auto flatten = [&](const Mat& mm) {
      Vec v(f, da * da);
      for (size_t r = 0; r < da; ++r)
        for (size_t c = 0; c < da; ++c) v[pair_index(r, c, da)] = mm.at(r, c);
      return v;
    };
    for (size_t i = 0; i < nb; ++i) flats.push_back(flatten(lm.rho[i]));
    for (const Mat& cm : commutant) cflats.push_back(flatten(cm));
    bool contained = true;
    for (const Vec& v : flats)
      if (!in_span(cflats, v)) {
        contained = false;
        break;
      }
    rc.report.add("endomorphism_image_in_commutant", contained, "");
    const size_t image_rank = span_basis(flats).size();
    rc.endomorphism_isomorphism =
        contained && image_rank == nb && commutant.size() == nb;
  }

  // (2b) A_χ finitely generated projective over I_χ: solve the dual-basis
  // splitting Σ_i e_i∗f_i(·) = id with I_χ-linear unknowns f_i : A → I_χ.
  {
    std::vector<Mat> right_i_coords; // right multiplication in I_χ coordinates
    for (size_t u = 0; u < m; ++u) {
      Mat r(f, m, m);
      for (size_t x = 0; x < m; ++x) {
        const Vec rx = inv.alg.mul(Vec::basis(f, m, x), Vec::basis(f, m, u));
        for (size_t k = 0; k < m; ++k) r.at(k, x) = rx[k];
      }
      right_i_coords.push_back(r);
    }
    std::vector<Mat> xstar; // I_χ coords → A, u ↦ e_i ∗ u
    for (size_t i = 0; i < da; ++i) {
      Mat xs(f, da, m);
      for (size_t u = 0; u < m; ++u) {
        const Vec v = star_chi(a2, Vec::basis(f, da, i), inv.basis[u], eps);
        for (size_t k = 0; k < da; ++k) xs.at(k, u) = v[k];
      }
      xstar.push_back(xs);
    }
    const size_t unknowns = da * m * da; // f_i is m×da
    auto var = [&](size_t i, size_t r, size_t c) { return i * (m * da) + r * da + c; };
    std::vector<Vec> rows;
    std::vector<Scalar> rhs;
    for (size_t i = 0; i < da; ++i)
      for (size_t u = 0; u < m; ++u)
        for (size_t r = 0; r < m; ++r)
          for (size_t c = 0; c < da; ++c) {
            Vec row(f, unknowns);
            for (size_t sdx = 0; sdx < da; ++sdx) row[var(i, r, sdx)] += ri[u].at(sdx, c);
            for (size_t sdx = 0; sdx < m; ++sdx)
              row[var(i, sdx, c)] += -right_i_coords[u].at(r, sdx);
            rows.push_back(row);
            rhs.push_back(Scalar::zero(f));
          }
    for (size_t r = 0; r < da; ++r)
      for (size_t c = 0; c < da; ++c) {
        Vec row(f, unknowns);
        for (size_t i = 0; i < da; ++i)
          for (size_t sdx = 0; sdx < m; ++sdx) row[var(i, sdx, c)] += xstar[i].at(r, sdx);
        rows.push_back(row);
        rhs.push_back(r == c ? Scalar::one(f) : Scalar::zero(f));
      }
    Mat sys = Mat::from_rows(f, unknowns, rows);
    Vec rhsv(f, rows.size());
    for (size_t r = 0; r < rows.size(); ++r) rhsv[r] = rhs[r];
    rc.finitely_generated_projective = solve(sys, rhsv).has_value();
  }

  // (3) full trace ideal: Hom_{B′}(A_χ, B′) evaluated at A spans B′.
  {
    std::vector<Mat> lmult;
    for (size_t i = 0; i < nb; ++i) lmult.push_back(left_mult(s2.m.alg, Vec::basis(f, nb, i)));
    const size_t unknowns = nb * da;
    std::vector<Mat> blocks;
    for (size_t i = 0; i < nb; ++i) {
      Mat block(f, nb * da, unknowns);
      for (size_t r = 0; r < nb; ++r)
        for (size_t c = 0; c < da; ++c) {
          const size_t row = r * da + c;
          for (size_t sdx = 0; sdx < da; ++sdx)
            block.at(row, r * da + sdx) += lm.rho[i].at(sdx, c);
          for (size_t sdx = 0; sdx < nb; ++sdx)
            block.at(row, sdx * da + c) += -lmult[i].at(r, sdx);
        }
      blocks.push_back(block);
    }
    const std::vector<Vec> homs = kernel_basis(Mat::vstack_all(blocks));
    std::vector<Vec> values;
    for (const Vec& fv : homs)
      for (size_t c = 0; c < da; ++c) {
        Vec v(f, nb);
        for (size_t r = 0; r < nb; ++r) v[r] = fv[r * da + c];
        values.push_back(v);
      }
    rc.generator = span_basis(values).size() == nb;
  }

  // (4) surjectivity of [a,b] = atb with the left integral t.
  const Vec emb_t = s2.embed_l.apply(t);
  {
    Mat bracket(f, nb, da * da);
    for (size_t p = 0; p < da; ++p) {
      const Vec pt = s2.m.alg.mul(s2.embed_a.col(p), emb_t);
      for (size_t qx = 0; qx < da; ++qx) {
        const Vec col = s2.m.alg.mul(pt, s2.embed_a.col(qx));
        for (size_t r = 0; r < nb; ++r) bracket.at(r, pair_index(p, qx, da)) = col[r];
      }
    }
    rc.integral_bracket_surjective = rank(bracket) == nb;
  }

  // (A⋊_χH)^H = tA for the left regular H-module structure on B′.
  std::vector<Mat> hops;
  for (size_t i = 0; i < hd; ++i) hops.push_back(left_mult(s2.m.alg, s2.embed_l.col(i)));
  const std::vector<Vec> binv = joint_eigenspace(f, hops, h.counit);
  {
    std::vector<Vec> ta;
    for (size_t x = 0; x < da; ++x) ta.push_back(s2.m.alg.mul(emb_t, s2.embed_a.col(x)));
    rc.report.add("invariants_equal_ta", same_span(binv, ta), "");
  }

  rc.all_equal = rc.galois_surjective ==
                     (rc.endomorphism_isomorphism && rc.finitely_generated_projective) &&
                 rc.galois_surjective == rc.generator &&
                 rc.galois_surjective == rc.integral_bracket_surjective;

  // Condition (5) spot checks: A_χ⊗_{I_χ}M^H → M for the regular module and
  // for M = A_χ itself.  Condition (5) quantifies over every module, so a
  // single module only certifies the forward direction: if (1) holds then the
  // evaluation must be an isomorphism.  The regular module is special — a
  // regular-module isomorphism already forces (A⋊_χH)^H = tA onto A⋊_χH,
  // hence condition (4) — so for it the equivalence with (1) is exact.
  auto condition5 = [&](const std::vector<Mat>& act_b, size_t dim_m) {
    std::vector<Mat> hops_m;
    for (size_t i = 0; i < hd; ++i) {
      Mat op(f, dim_m, dim_m);
      const Vec el = s2.embed_l.col(i);
      for (size_t j = 0; j < nb; ++j)
        if (!el[j].is_zero()) op = op + act_b[j].scaled(el[j]);
      hops_m.push_back(op);
    }
    const std::vector<Vec> minv = joint_eigenspace(f, hops_m, h.counit);
    std::vector<Mat> ea; // action of embed_a(e_x) on M
    for (size_t x = 0; x < da; ++x) {
      Mat op(f, dim_m, dim_m);
      const Vec ev = s2.embed_a.col(x);
      for (size_t j = 0; j < nb; ++j)
        if (!ev[j].is_zero()) op = op + act_b[j].scaled(ev[j]);
      ea.push_back(op);
    }
    Mat ev_map(f, dim_m, da * minv.size());
    for (size_t x = 0; x < da; ++x)
      for (size_t r = 0; r < minv.size(); ++r) {
        const Vec col = ea[x].apply(minv[r]);
        for (size_t k = 0; k < dim_m; ++k)
          ev_map.at(k, pair_index(x, r, minv.size())) = col[k];
      }
    std::vector<Vec> balance;
    for (size_t u = 0; u < m; ++u) {
      Mat eu(f, dim_m, dim_m);
      const Vec uv = s2.embed_a.apply(U.col(u));
      for (size_t j = 0; j < nb; ++j)
        if (!uv[j].is_zero()) eu = eu + act_b[j].scaled(uv[j]);
      for (size_t x = 0; x < da; ++x) {
        const Vec xu = ri[u].col(x);
        for (size_t r = 0; r < minv.size(); ++r) {
          Vec v(f, da * minv.size());
          for (size_t k = 0; k < da; ++k)
            if (!xu[k].is_zero()) v[pair_index(k, r, minv.size())] += xu[k];
          const auto coords = solve(Mat::from_columns(f, dim_m, minv), eu.apply(minv[r]));
          if (!coords) return false; // u·m escapes M^H: not even well-posed
          for (size_t rr = 0; rr < minv.size(); ++rr)
            v[pair_index(x, rr, minv.size())] += -(*coords)[rr];
          if (!v.is_zero()) balance.push_back(v);
        }
      }
    }
    const std::vector<Vec> bal = span_basis(balance);
    for (const Vec& v : bal)
      if (!ev_map.apply(v).is_zero()) return false; // evaluation not balanced
    const size_t dom = da * minv.size() - bal.size();
    return rank(ev_map) == dim_m && dom == dim_m;
  };
  {
    std::vector<Mat> regular;
    for (size_t i = 0; i < nb; ++i) regular.push_back(left_mult(s2.m.alg, Vec::basis(f, nb, i)));
    rc.report.add("condition5_regular_consistent",
                  condition5(regular, nb) == rc.galois_surjective, "");
    rc.report.add("condition5_induced_consistent",
                  !rc.galois_surjective || condition5(lm.rho, da), "");
  }
  return rc;
}

} // namespace dynbase
