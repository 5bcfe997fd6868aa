/**
 * @file test_chars.cpp
 * @brief Tests for invariant characters, adjoints, weight submodules and the
 *        corner Hopf algebra H^χ.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dynbase/base.hpp"
#include "dynbase/chars.hpp"
#include "dynbase/drinfeld.hpp"

using namespace dynbase;

namespace {

const Field QQ = Field::rationals();

/** ρ(x) for x a dense element of the double, expanded as Σ x[(a,b)]·A_a·S_b. */
Mat double_element_action(const HopfData& h, const BaseAlgebraData& b, const Vec& x) {
  const size_t n = h.dim(), m = b.dim();
  Mat out(b.field(), m, m);
  for (size_t idx = 0; idx < x.dim(); ++idx) {
    if (x[idx].is_zero()) continue;
    const size_t a = idx / n, q = idx % n;
    Mat s(b.field(), m, m);
    for (size_t in = 0; in < m; ++in)
      for (size_t o = 0; o < m; ++o) s.at(o, in) = b.coaction.at(in, q, o);
    out = out + (b.action_op(a) * s).scaled(x[idx]);
  }
  return out;
}

Vec character_restriction(const Vec& alpha, const Mat& include) {
  Vec out(alpha.field(), include.cols());
  for (size_t i = 0; i < include.cols(); ++i) out[i] = alpha.dot(include.col(i));
  return out;
}

} // namespace

TEST_CASE("modules over a Hopf algebra: regular, trivial, tensor") {
  const HopfData h = group_algebra(QQ, GroupTable::symmetric(3));
  const HModule reg = regular_module(h);
  const HModule triv = trivial_module(h);
  CHECK(check_module(h, reg).all_pass());
  CHECK(check_module(h, triv).all_pass());
  CHECK(check_module(h, tensor_module(h, reg, triv)).all_pass());
  CHECK(check_module(h, tensor_module(h, reg, reg)).all_pass());

  HModule broken = reg;
  broken.rho[1].at(0, 0) += Scalar::one(QQ);
  CHECK_FALSE(check_module(h, broken).all_pass());
}

TEST_CASE("invariant characters: adjoint bases have all, dual base over kC2 has none") {
  for (const HopfData& h : {group_algebra(QQ, GroupTable::cyclic(2)),
                            group_algebra(QQ, GroupTable::symmetric(3)), sweedler_h4(QQ)}) {
    const BaseAlgebraData b = base_from_h(h);
    const auto all = characters_of(b.l);
    REQUIRE(all.complete);
    const auto inv = invariant_characters(h, b);
    CHECK(inv.size() == all.chars.size());
    for (const Vec& chi : all.chars) CHECK(is_invariant_character(h, b, chi));
  }
  {
    const HopfData h = group_algebra(QQ, GroupTable::cyclic(2));
    const BaseAlgebraData b = base_from_dual(h);
    CHECK(characters_of(b.l).chars.size() == 2);
    CHECK(invariant_characters(h, b).empty());
  }
  {
    const HopfData h = sweedler_h4(QQ);
    const BaseAlgebraData b = trivial_base(h);
    const auto inv = invariant_characters(h, b);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0][0] == Scalar::one(QQ));
  }
}

TEST_CASE("iota embeds the base into the adjoint base as a homomorphism") {
  const HopfData h = group_algebra(QQ, GroupTable::cyclic(2));
  const BaseAlgebraData b = base_from_h(h);
  const auto chars = characters_of(b.l).chars;
  REQUIRE(chars.size() == 2);

  for (const Vec& chi : chars) {
    const Mat io = iota_chi(h, b, chi);
    // For group algebras ι_χ(e_g) = χ(e_g)·e_g.
    for (size_t g = 0; g < h.dim(); ++g) CHECK(io.col(g) == h.alg.basis(g).scaled(chi[g]));
    const Mat id = Mat::identity(QQ, h.dim());
    CHECK(check_base_homomorphism(id, io, h, b, h, b).all_pass());
  }

  for (const HopfData& h2 :
       {group_algebra(QQ, GroupTable::symmetric(3)), sweedler_h4(QQ)}) {
    const BaseAlgebraData b2 = base_from_h(h2);
    const Mat id = Mat::identity(QQ, h2.dim());
    for (const Vec& chi : invariant_characters(h2, b2))
      CHECK(check_base_homomorphism(id, iota_chi(h2, b2, chi), h2, b2, h2, b2).all_pass());
  }

  // The trivial base maps to the adjoint base through the unit column.
  {
    const HopfData h2 = group_algebra(QQ, GroupTable::symmetric(3));
    const BaseAlgebraData tb = trivial_base(h2);
    const Vec one = invariant_characters(h2, tb).at(0);
    const Mat io = iota_chi(h2, tb, one);
    CHECK(io.col(0) == h2.alg.unit);
    CHECK(check_base_homomorphism(Mat::identity(QQ, h2.dim()), io, h2, tb, h2, base_from_h(h2))
              .all_pass());
  }

  // A non-invariant character is rejected.
  {
    const BaseAlgebraData bd = base_from_dual(h);
    const Vec chi = characters_of(bd.l).chars.at(0);
    CHECK_THROWS_AS(iota_chi(h, bd, chi), error);
    try {
      iota_chi(h, bd, chi);
    } catch (const error& e) {
      CHECK(e.kind() == "NotInvariant");
    }
  }
}

TEST_CASE("chi-generators: integrals, sign line, nil radical") {
  const HopfData h = group_algebra(QQ, GroupTable::cyclic(2));
  const BaseAlgebraData b = base_from_h(h);
  const auto chars = characters_of(b.l).chars;
  REQUIRE(chars.size() == 2);
  for (const Vec& chi : chars) {
    const auto gens = chi_generators(b, chi);
    REQUIRE(gens.size() == 1);
    if (chi == h.counit) {
      CHECK(same_span(gens, left_integrals(h)));
    } else {
      CHECK(same_span(gens, {h.alg.basis(0) - h.alg.basis(1)}));
    }
    // H-invariance of L^χ.
    for (const Vec& g : gens)
      for (size_t i = 0; i < h.dim(); ++i) CHECK(in_span(gens, b.act(i, g)));
  }

  // Nil base: dim L^χ = dim ker χ = k, and χ vanishes on it (not projective).
  const size_t k = 3;
  const BaseAlgebraData nb = nil_base(h, k);
  const Vec chi = invariant_characters(h, nb).at(0);
  const auto gens = chi_generators(nb, chi);
  CHECK(gens.size() == k);
  for (const Vec& g : gens) CHECK(char_apply(chi, g).is_zero());
}

TEST_CASE("ribbon-type elements act through the coaction alone") {
  // On adjoint bases of group algebras both elements act as the identity.
  for (const HopfData& h : {group_algebra(QQ, GroupTable::cyclic(2)),
                            group_algebra(QQ, GroupTable::symmetric(3))}) {
    const BaseAlgebraData b = base_from_h(h);
    CHECK(vartheta_bar_action(h, b) == Mat::identity(QQ, h.dim()));
    CHECK(vartheta_action(h, b) == Mat::identity(QQ, h.dim()));
  }

  // Cross-validate against the expansion of ϑ, ϑ̄ in the materialized double.
  for (const HopfData& h : {group_algebra(QQ, GroupTable::cyclic(2)), sweedler_h4(QQ)}) {
    const BaseAlgebraData b = base_from_h(h);
    const DoubleData dd = drinfeld_double(h);
    CHECK(vartheta_action(h, b) == double_element_action(h, b, dd.vartheta));
    CHECK(vartheta_bar_action(h, b) == double_element_action(h, b, dd.vartheta_bar));
    // ϑ ϑ̄ = 1 as operators on the base.
    CHECK(vartheta_action(h, b) * vartheta_bar_action(h, b) == Mat::identity(QQ, h.dim()));
  }
}

TEST_CASE("adjoint characters are invariant and compatible with the hat action") {
  for (const HopfData& h : {group_algebra(QQ, GroupTable::cyclic(2)),
                            group_algebra(QQ, GroupTable::symmetric(3)), sweedler_h4(QQ)}) {
    const BaseAlgebraData b = base_from_h(h);
    const HatGroup hat = hat_group_structure(h);
    REQUIRE(hat.complete);
    for (const Vec& chi : invariant_characters(h, b)) {
      const Vec adj = adjoint_character(h, b, chi);
      CHECK(is_invariant_character(h, b, adj));
      for (const Vec& alpha : hat.chars) {
        const Vec moved = char_act_on_char(b, alpha, chi);
        REQUIRE(is_invariant_character(h, b, moved));
        CHECK(char_act_on_char(b, alpha, adj) == adjoint_character(h, b, moved));
      }
    }
    // Group algebras act on themselves with trivial ribbon twist: χ̃ = χ.
    if (h.dim() != 4) { // kC2 (dim 2) and kS3 (dim 6); Sweedler is the dim-4 entry
      for (const Vec& chi : invariant_characters(h, b))
        CHECK(adjoint_character(h, b, chi) == chi);
    }
  }
}

TEST_CASE("scalar identity and left-right generator exchange") {
  std::vector<std::pair<HopfData, BaseAlgebraData>> fixtures;
  for (const HopfData& h : {group_algebra(QQ, GroupTable::cyclic(2)),
                            group_algebra(QQ, GroupTable::symmetric(3)), sweedler_h4(QQ)}) {
    fixtures.emplace_back(h, base_from_h(h));
    fixtures.emplace_back(h, trivial_base(h));
  }
  fixtures.emplace_back(group_algebra(QQ, GroupTable::cyclic(2)),
                        nil_base(group_algebra(QQ, GroupTable::cyclic(2)), 3));
  const HopfData fs3 = function_algebra(QQ, GroupTable::symmetric(3));
  fixtures.emplace_back(fs3, base_from_h(fs3));

  size_t pairs = 0;
  for (const auto& [h, b] : fixtures)
    for (const Vec& chi : invariant_characters(h, b)) {
      ++pairs;
      CHECK(check_scalar_identity(h, b, chi).all_pass());
      CHECK(check_left_right_generators(h, b, chi).all_pass());
    }
  CHECK(pairs >= 12); // 2+2+2 adjoint, 3 trivial, 1 nil, 6 functions on S3
}

TEST_CASE("projectivity: group algebras yes, Sweedler and nil no") {
  for (const HopfData& h : {group_algebra(QQ, GroupTable::cyclic(2)),
                            group_algebra(QQ, GroupTable::symmetric(3))}) {
    const BaseAlgebraData b = base_from_h(h);
    for (const Vec& chi : invariant_characters(h, b)) {
      const ProjectivityResult pr = is_projective(h, b, chi);
      REQUIRE(pr.projective);
      REQUIRE(pr.e_chi.has_value());
      CHECK(pr.report.all_pass());
      CHECK(b.l.mul(*pr.e_chi, *pr.e_chi) == *pr.e_chi);
      CHECK(char_apply(chi, *pr.e_chi) == Scalar::one(QQ));
    }
  }
  {
    const HopfData h4 = sweedler_h4(QQ);
    const BaseAlgebraData b = base_from_h(h4);
    const auto inv = invariant_characters(h4, b);
    REQUIRE(inv.size() == 2);
    for (const Vec& chi : inv) {
      const ProjectivityResult pr = is_projective(h4, b, chi);
      CHECK_FALSE(pr.projective);
      CHECK_FALSE(pr.e_chi.has_value());
    }
  }
  {
    const HopfData h = group_algebra(QQ, GroupTable::cyclic(2));
    const BaseAlgebraData nb = nil_base(h, 2);
    const Vec chi = invariant_characters(h, nb).at(0);
    CHECK_FALSE(is_projective(h, nb, chi).projective);
  }
  {
    const HopfData h = sweedler_h4(QQ);
    const BaseAlgebraData tb = trivial_base(h);
    const Vec one = invariant_characters(h, tb).at(0);
    const ProjectivityResult pr = is_projective(h, tb, one);
    REQUIRE(pr.projective);
    CHECK(*pr.e_chi == tb.l.unit);
    CHECK(pr.report.all_pass());
  }
}

TEST_CASE("character records carry the canonical idempotents") {
  const HopfData h = group_algebra(QQ, GroupTable::cyclic(2));
  const BaseAlgebraData b = base_from_h(h);
  for (const Vec& chi : invariant_characters(h, b)) {
    const InvariantCharacter rec = describe_character(h, b, chi);
    CHECK(rec.adjoint == chi);
    REQUIRE(rec.projective);
    REQUIRE(rec.t_chi.has_value());
    // Both characters of kC2 give t_χ = (1+g)/2.
    const Vec half = (h.alg.basis(0) + h.alg.basis(1)).scaled(Scalar::of_fraction(1, 2, QQ));
    CHECK(*rec.t_chi == half);
  }
}

TEST_CASE("weight submodules: eigenspaces, parity exchange, tensor monotonicity") {
  const HopfData h = group_algebra(QQ, GroupTable::cyclic(2));
  const BaseAlgebraData b = base_from_h(h);
  const auto chars = characters_of(b.l).chars;
  REQUIRE(chars.size() == 2);
  const HModule reg = regular_module(h);
  const HModule triv = trivial_module(h);

  // Trivial module: V[ψ,χ] is everything when ψ = χ∘ε-side, zero otherwise.
  for (const Vec& psi : chars)
    for (const Vec& chi : chars)
      CHECK(weight_submodule(h, b, triv, 0, psi, chi).size() == (psi == chi ? 1 : 0));

  // Regular module: V[χ] = t_χ·H.
  for (const Vec& chi : chars) {
    const InvariantCharacter rec = describe_character(h, b, chi);
    std::vector<Vec> image;
    for (size_t i = 0; i < h.dim(); ++i) image.push_back(h.mul(*rec.t_chi, h.alg.basis(i)));
    CHECK(same_span(weight_submodule(h, b, reg, 0, chi, chi), span_basis(image)));
  }

  // Parity: V[k,ψ,χ] = V[k±1,χ,ψ] and V[k,ψ,χ] = V[k+2,ψ,χ].
  for (const Vec& psi : chars)
    for (const Vec& chi : chars) {
      const auto v0 = weight_submodule(h, b, reg, 0, psi, chi);
      CHECK(same_span(v0, weight_submodule(h, b, reg, 1, chi, psi)));
      CHECK(same_span(v0, weight_submodule(h, b, reg, -1, chi, psi)));
      CHECK(same_span(v0, weight_submodule(h, b, reg, 2, psi, chi)));
      // Adjoint pair gives the same space.
      const Vec pt = adjoint_character(h, b, psi), ct = adjoint_character(h, b, chi);
      CHECK(same_span(v0, weight_submodule(h, b, reg, 0, pt, ct)));
      // H-invariance of V[χ] (diagonal case).
      if (psi == chi)
        for (const Vec& v : v0)
          for (size_t i = 0; i < h.dim(); ++i) CHECK(in_span(v0, reg.rho[i].apply(v)));
    }

  // Tensor monotonicity: V[φ,ψ]⊗W[ψ,χ] ⊂ (V⊗W)[φ,χ].
  const HModule rr = tensor_module(h, reg, reg);
  for (const Vec& phi : chars)
    for (const Vec& psi : chars)
      for (const Vec& chi : chars) {
        const auto vf = weight_submodule(h, b, reg, 0, phi, psi);
        const auto wf = weight_submodule(h, b, reg, 0, psi, chi);
        const auto big = weight_submodule(h, b, rr, 0, phi, chi);
        for (const Vec& v : vf)
          for (const Vec& w : wf) CHECK(in_span(big, tensor(v, w)));
      }
}

TEST_CASE("corner Hopf algebra on group algebras collapses to the ground field") {
  for (const HopfData& h : {group_algebra(QQ, GroupTable::cyclic(2)),
                            group_algebra(QQ, GroupTable::symmetric(3))}) {
    const BaseAlgebraData b = base_from_h(h);
    for (const Vec& chi : invariant_characters(h, b)) {
      const ProjectedHopf p = h_chi(h, b, chi);
      CHECK(p.report.all_pass());
      CHECK(p.basis.size() == 1);
      CHECK(p.xi_basis.size() == h.dim() - 1);
      CHECK(check_hopf(p.hopf).all_pass());
      // characters(H^χ) ↔ isotropy subgroup of χ, via restriction along the inclusion.
      const auto iso = isotropy_characters(h, b, chi);
      const auto corner_chars = characters_of(p.hopf.alg).chars;
      CHECK(iso.size() == corner_chars.size());
      for (const Vec& alpha : iso) {
        const Vec r = character_restriction(alpha, p.include);
        CHECK(is_character(p.hopf.alg, r));
        bool found = false;
        for (const Vec& c : corner_chars) found = found || c == r;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("corner Hopf algebra of the function algebra on S3") {
  const HopfData h = function_algebra(QQ, GroupTable::symmetric(3));
  const BaseAlgebraData b = base_from_h(h);
  const auto inv = invariant_characters(h, b);
  REQUIRE(inv.size() == 6);
  for (const Vec& chi : inv) {
    const ProjectedHopf p = h_chi(h, b, chi);
    CHECK(p.report.all_pass());
    CHECK(p.basis.size() == 1);
    // t_χ is the delta function at the group identity, independent of χ.
    CHECK(p.t_chi == h.alg.basis(0));
    const auto iso = isotropy_characters(h, b, chi);
    CHECK(iso.size() == 1);
    CHECK(characters_of(p.hopf.alg).chars.size() == 1);
  }
}

TEST_CASE("corner Hopf algebra over the trivial base keeps everything") {
  const HopfData h = function_algebra(QQ, GroupTable::symmetric(3));
  const BaseAlgebraData tb = trivial_base(h);
  const Vec one = invariant_characters(h, tb).at(0);
  const ProjectedHopf p = h_chi(h, tb, one);
  CHECK(p.report.all_pass());
  CHECK(p.basis.size() == h.dim());
  CHECK(p.xi_basis.empty());
  CHECK(p.t_chi == h.alg.unit);

  // Isotropy is the whole character group; restriction is a bijection onto
  // the characters of H^χ = H.
  const auto iso = isotropy_characters(h, tb, one);
  const auto corner_chars = characters_of(p.hopf.alg).chars;
  REQUIRE(iso.size() == 6);
  REQUIRE(corner_chars.size() == 6);
  std::vector<Vec> restricted;
  for (const Vec& alpha : iso) {
    const Vec r = character_restriction(alpha, p.include);
    CHECK(is_character(p.hopf.alg, r));
    for (const Vec& seen : restricted) CHECK_FALSE(seen == r);
    restricted.push_back(r);
    bool found = false;
    for (const Vec& c : corner_chars) found = found || c == r;
    CHECK(found);
  }
}

TEST_CASE("projected twist intertwines corner Hopf algebras") {
  {
    const HopfData h = group_algebra(QQ, GroupTable::symmetric(3));
    const BaseAlgebraData b = base_from_h(h);
    const HatGroup hat = hat_group_structure(h);
    const auto inv = invariant_characters(h, b);
    for (const Vec& alpha : hat.chars)
      for (const Vec& chi : inv) CHECK(check_projected_twist(h, b, chi, alpha).all_pass());
  }
  {
    // Conjugation twist on functions over S3 relates distinct corners.
    const HopfData h = function_algebra(QQ, GroupTable::symmetric(3));
    const BaseAlgebraData b = base_from_h(h);
    const HatGroup hat = hat_group_structure(h);
    REQUIRE(hat.chars.size() == 6);
    const auto inv = invariant_characters(h, b);
    const Vec alpha = hat.chars.at(1);
    for (const Vec& chi : inv) CHECK(check_projected_twist(h, b, chi, alpha).all_pass());
    // The twist moves χ within its orbit; at least one χ moves for a
    // non-central α.
    bool moved = false;
    for (const Vec& chi : inv) moved = moved || !(char_act_on_char(b, alpha, chi) == chi);
    CHECK(moved);
  }
}

TEST_CASE("guards: NotProjective and NotCharacter") {
  const HopfData h4 = sweedler_h4(QQ);
  const BaseAlgebraData b = base_from_h(h4);
  const Vec eps = h4.counit;
  REQUIRE(is_invariant_character(h4, b, eps));
  CHECK_THROWS_AS(h_chi(h4, b, eps), error);
  try {
    h_chi(h4, b, eps);
  } catch (const error& e) {
    CHECK(e.kind() == "NotProjective");
  }
  try {
    twist_by_character(h4, Vec(QQ, 4));
  } catch (const error& e) {
    CHECK(e.kind() == "NotCharacter");
  }
}
