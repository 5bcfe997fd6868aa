/**
 * @file chars.cpp
 * @brief Invariant characters, generators, adjoint characters, weight
 *        submodules and the corner Hopf algebra H^χ.
 */
#include "dynbase/chars.hpp"

#include <string>
#include <vector>

namespace dynbase {

namespace {

/** ι_χ without the invariance guard (columns are images of the L-basis). */
Mat iota_matrix(const HopfData& h, const BaseAlgebraData& b, const Vec& chi) {
  const size_t n = h.dim(), m = b.dim();
  Mat io(h.field(), n, m);
  for (size_t j = 0; j < m; ++j)
    for (size_t hh = 0; hh < n; ++hh) {
      Scalar acc = Scalar::zero(h.field());
      for (size_t lp = 0; lp < m; ++lp) {
        const Scalar& c = b.coaction.at(j, hh, lp);
        if (!c.is_zero()) acc += c * chi[lp];
      }
      io.at(hh, j) = acc;
    }
  return io;
}

/** The operators ρ(η^q) of the H*_op-leg of the double, from the coaction. */
std::vector<Mat> dual_leg_ops(const HopfData& h, const BaseAlgebraData& b) {
  const size_t n = h.dim(), m = b.dim();
  std::vector<Mat> s(n, Mat(b.field(), m, m));
  for (size_t q = 0; q < n; ++q)
    for (size_t in = 0; in < m; ++in)
      for (size_t out = 0; out < m; ++out) s[q].at(out, in) = b.coaction.at(in, q, out);
  return s;
}

/** Σ_{i,p} coeff.at(p,i) · S_i·A_p, the action of Θ₁·g(Θ₂) for g = coeff. */
Mat theta_leg_action(const HopfData& h, const BaseAlgebraData& b, const Mat& coeff) {
  const size_t n = h.dim(), m = b.dim();
  const std::vector<Mat> s = dual_leg_ops(h, b);
  Mat out(b.field(), m, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t p = 0; p < n; ++p) {
      const Scalar& c = coeff.at(p, i);
      if (!c.is_zero()) out = out + (s[i] * b.action_op(p)).scaled(c);
    }
  return out;
}

} // namespace

Mat HModule::op(const Vec& h) const {
  require(!rho.empty(), "DimMismatch", "module over a zero-dimensional algebra");
  Mat out(rho[0].field(), rho[0].rows(), rho[0].cols());
  for (size_t i = 0; i < h.dim(); ++i)
    if (!h[i].is_zero()) out = out + rho[i].scaled(h[i]);
  return out;
}

HModule regular_module(const HopfData& h) {
  HModule v;
  for (size_t i = 0; i < h.dim(); ++i) v.rho.push_back(h.alg.left_mult_op(h.alg.basis(i)));
  return v;
}

HModule trivial_module(const HopfData& h) {
  HModule v;
  for (size_t i = 0; i < h.dim(); ++i) {
    Mat m(h.field(), 1, 1);
    m.at(0, 0) = h.counit[i];
    v.rho.push_back(m);
  }
  return v;
}

HModule tensor_module(const HopfData& h, const HModule& v, const HModule& w) {
  const size_t n = h.dim();
  HModule t;
  for (size_t i = 0; i < n; ++i) {
    Mat m(h.field(), v.dim() * w.dim(), v.dim() * w.dim());
    for (size_t p = 0; p < n; ++p)
      for (size_t q = 0; q < n; ++q) {
        const Scalar& c = h.comult.at(i, p, q);
        if (!c.is_zero()) m = m + kron(v.rho[p], w.rho[q]).scaled(c);
      }
    t.rho.push_back(m);
  }
  return t;
}

CheckReport check_module(const HopfData& h, const HModule& v) {
  CheckReport rep("H-module");
  const size_t n = h.dim();
  require(v.rho.size() == n, "DimMismatch", "one operator per basis element required");
  const Mat id = Mat::identity(h.field(), v.dim());
  {
    const Mat u = v.op(h.alg.unit);
    if (u == id)
      rep.add_pass("unit_acts_as_identity");
    else
      rep.add_fail("unit_acts_as_identity", {}, u.to_string(), id.to_string());
  }
  {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      for (size_t j = 0; j < n && ok; ++j) {
        const Mat lhs = v.op(h.mul(h.alg.basis(i), h.alg.basis(j)));
        const Mat rhs = v.rho[i] * v.rho[j];
        if (lhs != rhs) {
          ok = false;
          rep.add_fail("multiplicative", {i, j}, lhs.to_string(), rhs.to_string());
        }
      }
    if (ok) rep.add_pass("multiplicative");
  }
  return rep;
}

bool is_invariant_character(const HopfData& h, const BaseAlgebraData& b, const Vec& chi) {
  if (chi.dim() != b.dim() || !is_character(b.l, chi)) return false;
  for (size_t i = 0; i < h.dim(); ++i)
    for (size_t k = 0; k < b.dim(); ++k)
      if (char_apply(chi, b.act(i, b.l.basis(k))) != h.counit[i] * chi[k]) return false;
  return true;
}

std::vector<Vec> invariant_characters(const HopfData& h, const BaseAlgebraData& b) {
  std::vector<Vec> out;
  for (const Vec& chi : characters_of(b.l).chars)
    if (is_invariant_character(h, b, chi)) out.push_back(chi);
  return out;
}

Mat iota_chi(const HopfData& h, const BaseAlgebraData& b, const Vec& chi) {
  require(is_invariant_character(h, b, chi), "NotInvariant",
          "iota_chi requires an invariant character");
  return iota_matrix(h, b, chi);
}

std::vector<Vec> chi_generators(const BaseAlgebraData& b, const Vec& chi) {
  const size_t m = b.dim();
  std::vector<Mat> blocks;
  const Mat id = Mat::identity(b.field(), m);
  for (size_t j = 0; j < m; ++j)
    blocks.push_back(b.l.left_mult_op(b.l.basis(j)) - id.scaled(chi[j]));
  return kernel_basis(Mat::vstack_all(blocks));
}

std::vector<Vec> chi_generators_right(const BaseAlgebraData& b, const Vec& chi) {
  const size_t m = b.dim();
  std::vector<Mat> blocks;
  const Mat id = Mat::identity(b.field(), m);
  for (size_t j = 0; j < m; ++j)
    blocks.push_back(b.l.right_mult_op(b.l.basis(j)) - id.scaled(chi[j]));
  return kernel_basis(Mat::vstack_all(blocks));
}

Mat vartheta_bar_action(const HopfData& h, const BaseAlgebraData& b) {
  return theta_leg_action(h, b, h.antipode);
}

Mat vartheta_action(const HopfData& h, const BaseAlgebraData& b) {
  return theta_leg_action(h, b, h.antipode_inv * h.antipode_inv);
}

Vec adjoint_character(const HopfData& h, const BaseAlgebraData& b, const Vec& chi) {
  require(is_invariant_character(h, b, chi), "NotInvariant",
          "the adjoint is defined for invariant characters");
  return vartheta_bar_action(h, b).transpose().apply(chi);
}

Vec char_act_right(const BaseAlgebraData& b, const Vec& alpha, const Vec& lam) {
  const size_t n = b.hdim(), m = b.dim();
  Vec out(b.field(), m);
  for (size_t la = 0; la < m; ++la) {
    if (lam[la].is_zero()) continue;
    for (size_t g = 0; g < n; ++g) {
      if (alpha[g].is_zero()) continue;
      for (size_t lp = 0; lp < m; ++lp) {
        const Scalar& c = b.coaction.at(la, g, lp);
        if (!c.is_zero()) out[lp] += lam[la] * alpha[g] * c;
      }
    }
  }
  return out;
}

Vec char_act_on_char(const BaseAlgebraData& b, const Vec& alpha, const Vec& chi) {
  const size_t n = b.hdim(), m = b.dim();
  Vec out(b.field(), m);
  for (size_t la = 0; la < m; ++la)
    for (size_t g = 0; g < n; ++g) {
      if (alpha[g].is_zero()) continue;
      for (size_t lp = 0; lp < m; ++lp) {
        const Scalar& c = b.coaction.at(la, g, lp);
        if (!c.is_zero()) out[la] += alpha[g] * c * chi[lp];
      }
    }
  return out;
}

std::vector<Vec> isotropy_characters(const HopfData& h, const BaseAlgebraData& b, const Vec& chi) {
  std::vector<Vec> out;
  for (const Vec& alpha : hat_group_structure(h).chars)
    if (char_act_on_char(b, alpha, chi) == chi) out.push_back(alpha);
  return out;
}

Vec chi_arrow(const HopfData& h, const BaseAlgebraData& b, const Vec& lam, const Vec& eta,
              const Vec& chi) {
  const Vec w = h.antipode_of(iota_chi(h, b, chi).apply(lam));
  return h.alg.left_mult_op(w).transpose().apply(eta);
}

CheckReport check_scalar_identity(const HopfData& h, const BaseAlgebraData& b, const Vec& chi) {
  CheckReport rep("scalar identity");
  const size_t n = h.dim(), m = b.dim();
  const Vec adj = adjoint_character(h, b, chi);
  const Mat io = iota_matrix(h, b, chi);
  bool ok = true;
  for (size_t la = 0; la < m && ok; ++la) {
    Vec acc(h.field(), n);
    for (size_t i = 0; i < n; ++i) {
      // (h_i▷λ) ⇀_χ η^i  =  η^i ↼ γ(ι_χ(h_i▷λ))
      const Vec w = h.antipode_of(io.apply(b.act(i, b.l.basis(la))));
      acc += h.alg.left_mult_op(w).transpose().apply(Vec::basis(h.field(), n, i));
    }
    const Vec expect = h.counit.scaled(adj[la]);
    if (acc != expect) {
      ok = false;
      rep.add_fail("arrow_contraction_is_adjoint_scalar", {la}, acc.to_string(),
                   expect.to_string());
    }
  }
  if (ok) rep.add_pass("arrow_contraction_is_adjoint_scalar");
  return rep;
}

CheckReport check_left_right_generators(const HopfData& h, const BaseAlgebraData& b,
                                        const Vec& chi) {
  CheckReport rep("left-right generators");
  const Vec adj = adjoint_character(h, b, chi);
  const auto gens = chi_generators(b, chi);
  {
    bool ok = true;
    for (size_t gi = 0; gi < gens.size() && ok; ++gi)
      for (size_t la = 0; la < b.dim() && ok; ++la) {
        const Vec lhs = b.l.mul(gens[gi], b.l.basis(la));
        const Vec rhs = gens[gi].scaled(adj[la]);
        if (lhs != rhs) {
          ok = false;
          rep.add_fail("left_generators_are_right_adjoint_generators", {gi, la}, lhs.to_string(),
                       rhs.to_string());
        }
      }
    if (ok) rep.add_pass("left_generators_are_right_adjoint_generators");
  }
  rep.add("generator_spaces_coincide", same_span(gens, chi_generators_right(b, adj)));
  return rep;
}

ProjectivityResult is_projective(const HopfData& h, const BaseAlgebraData& b, const Vec& chi) {
  ProjectivityResult res;
  res.report.subject = "projective character";
  const auto gens = chi_generators(b, chi);
  for (const Vec& g : gens) {
    const Scalar val = char_apply(chi, g);
    if (!val.is_zero()) {
      res.projective = true;
      res.e_chi = g.scaled(Scalar::one(b.field()) / val);
      break;
    }
  }
  if (!res.projective) return res;

  const Vec& e = *res.e_chi;
  res.report.add("generator_idempotent", b.l.mul(e, e) == e);
  res.report.add("generator_space_one_dimensional", gens.size() == 1,
                 "dim = " + std::to_string(gens.size()));
  {
    bool ok = true;
    for (size_t la = 0; la < b.dim() && ok; ++la)
      ok = b.l.mul(e, b.l.basis(la)) == b.l.mul(b.l.basis(la), e);
    res.report.add("generator_central", ok);
  }
  {
    bool ok = true;
    for (size_t i = 0; i < h.dim() && ok; ++i) ok = b.act(i, e) == e.scaled(h.counit[i]);
    res.report.add("module_action_trivial_on_generator", ok);
  }
  res.report.add("self_adjoint", adjoint_character(h, b, chi) == chi);
  return res;
}

InvariantCharacter describe_character(const HopfData& h, const BaseAlgebraData& b, const Vec& chi) {
  InvariantCharacter rec;
  rec.chi = chi;
  rec.adjoint = adjoint_character(h, b, chi);
  ProjectivityResult pr = is_projective(h, b, chi);
  rec.projective = pr.projective;
  if (pr.projective) {
    rec.e_chi = pr.e_chi;
    rec.t_chi = iota_matrix(h, b, chi).apply(*pr.e_chi);
  }
  return rec;
}

std::vector<Vec> weight_submodule(const HopfData& h, const BaseAlgebraData& b, const HModule& v,
                                  long k, const Vec& psi, const Vec& chi) {
  const size_t m = b.dim(), d = v.dim();
  Mat gk = Mat::identity(h.field(), h.dim());
  for (long s = 0; s < (k >= 0 ? k : -k); ++s) gk = (k >= 0 ? h.antipode : h.antipode_inv) * gk;
  const Mat io = iota_matrix(h, b, chi);
  const Mat id = Mat::identity(h.field(), d);
  std::vector<Mat> blocks;
  for (size_t j = 0; j < m; ++j)
    blocks.push_back(v.op(gk.apply(io.col(j))) - id.scaled(psi[j]));
  return kernel_basis(Mat::vstack_all(blocks));
}

ProjectedHopf h_chi(const HopfData& h, const BaseAlgebraData& b, const Vec& chi) {
  const size_t n = h.dim();
  const Field f = h.field();
  ProjectivityResult pr = is_projective(h, b, chi);
  require(pr.projective, "NotProjective",
          "the corner Hopf algebra needs a projective character (chi nonzero on L^chi)");

  ProjectedHopf out;
  out.t_chi = iota_matrix(h, b, chi).apply(*pr.e_chi);
  const Vec& t = out.t_chi;

  std::vector<Vec> images, complements;
  for (size_t i = 0; i < n; ++i) {
    const Vec ti = h.mul(t, h.alg.basis(i));
    images.push_back(ti);
    complements.push_back(h.alg.basis(i) - ti);
  }
  out.basis = span_basis(images);
  out.xi_basis = span_basis(complements);
  const size_t r = out.basis.size();

  out.include = Mat::from_columns(f, n, out.basis);
  out.project = Mat(f, r, n);
  for (size_t j = 0; j < n; ++j) {
    const auto coords = solve(out.include, images[j]);
    require(coords.has_value(), "SolveFailure", "projection onto t_chi H failed");
    for (size_t i = 0; i < r; ++i) out.project.at(i, j) = (*coords)[i];
  }

  HopfData q(f, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      const Vec coords = out.project.apply(h.mul(out.basis[i], out.basis[j]));
      for (size_t k = 0; k < r; ++k) q.alg.mult.at(i, j, k) = coords[k];
    }
  q.alg.unit = out.project.apply(t);
  const Mat pp = kron(out.project, out.project);
  for (size_t i = 0; i < r; ++i) {
    const Vec coords = pp.apply(h.comult_of(out.basis[i]));
    for (size_t j = 0; j < r; ++j)
      for (size_t k = 0; k < r; ++k) q.comult.at(i, j, k) = coords[pair_index(j, k, r)];
  }
  for (size_t i = 0; i < r; ++i) {
    q.counit[i] = h.counit_of(out.basis[i]);
    const Vec ga = out.project.apply(h.antipode_of(out.basis[i]));
    const Vec gi = out.project.apply(h.antipode_inv_of(out.basis[i]));
    for (size_t k = 0; k < r; ++k) {
      q.antipode.at(k, i) = ga[k];
      q.antipode_inv.at(k, i) = gi[k];
    }
  }
  out.hopf = q;

  CheckReport& rep = out.report;
  rep.subject = "corner Hopf algebra";
  rep.add("t_chi_idempotent", h.mul(t, t) == t);
  {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      ok = h.mul(t, h.alg.basis(i)) == h.mul(h.alg.basis(i), t);
    rep.add("t_chi_central", ok);
  }
  rep.add("t_chi_antipode_fixed", h.antipode_of(t) == t);
  rep.add("t_chi_counit_one", h.counit_of(t) == Scalar::one(f));
  {
    const Vec tt = tensor(t, t);
    rep.add("comult_projection_identity", mul_t2(h.alg, h.comult_of(t), tt) == tt);
  }
  rep.add("corner_plus_kernel_split", r + out.xi_basis.size() == n,
          "dim t_chi H = " + std::to_string(r));
  rep.merge("hopf_", check_hopf(q));
  return out;
}

Mat twist_by_character(const HopfData& h, const Vec& alpha) {
  require(is_character(h.alg, alpha), "NotCharacter",
          "the twist is defined for characters of H");
  const size_t n = h.dim();
  const Vec abar = char_inverse(h, alpha);
  Mat out(h.field(), n, n);
  for (size_t j = 0; j < n; ++j)
    for (const auto& t : comult_squared_terms(h, j)) out.at(t.b, j) += t.coef * abar[t.a] * alpha[t.c];
  return out;
}

CheckReport check_projected_twist(const HopfData& h, const BaseAlgebraData& b, const Vec& chi,
                                  const Vec& alpha) {
  CheckReport rep("projected twist");
  const Vec chi2 = char_act_on_char(b, alpha, chi);
  rep.add("twisted_character_invariant", is_invariant_character(h, b, chi2));

  const ProjectedHopf p1 = h_chi(h, b, chi);
  const ProjectedHopf p2 = h_chi(h, b, chi2);
  const Mat f = twist_by_character(h, alpha);
  const Mat bottom = p2.project * f * p1.include;

  rep.add("diagram_commutes", p2.project * f == bottom * p1.project);
  rep.add("descends_bijectively",
          p1.basis.size() == p2.basis.size() && rank(bottom) == p1.basis.size());
  {
    bool ok = true;
    const size_t r = p1.basis.size();
    for (size_t i = 0; i < r && ok; ++i)
      for (size_t j = 0; j < r && ok; ++j)
        ok = bottom.apply(p1.hopf.mul(p1.hopf.alg.basis(i), p1.hopf.alg.basis(j))) ==
             p2.hopf.mul(bottom.col(i), bottom.col(j));
    rep.add("descended_map_multiplicative", ok);
  }
  rep.add("descended_map_unital", bottom.apply(p1.hopf.alg.unit) == p2.hopf.alg.unit);
  {
    bool ok = true;
    const Mat bb = kron(bottom, bottom);
    for (size_t i = 0; i < p1.basis.size() && ok; ++i)
      ok = bb.apply(p1.hopf.comult_of(p1.hopf.alg.basis(i))) ==
           p2.hopf.comult_of(bottom.col(i));
    rep.add("descended_map_comultiplicative", ok);
  }
  {
    bool ok = true;
    for (size_t i = 0; i < p1.basis.size() && ok; ++i)
      ok = p2.hopf.counit_of(bottom.col(i)) == p1.hopf.counit[i];
    rep.add("descended_map_counit", ok);
  }
  return rep;
}

} // namespace dynbase
