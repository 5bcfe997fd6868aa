/**
 * @file test_base.cpp
 * @brief Base-algebra axioms, the canonical bases L = H and L = H*, the
 *        Θ-form coaction cross-check, and base homomorphisms.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dynbase/base.hpp"
#include "dynbase/group.hpp"

using namespace dynbase;

namespace {

const CheckItem* find_item(const CheckReport& rep, const std::string& name) {
  for (const auto& item : rep.items)
    if (item.name == name) return &item;
  return nullptr;
}

} // namespace

TEST_CASE("the adjoint base (H, H) satisfies all axioms on the standard fixtures") {
  const HopfData c2 = group_algebra(Field::rationals(), GroupTable::cyclic(2));
  const HopfData s3 = group_algebra(Field::rationals(), GroupTable::symmetric(3));
  const HopfData h4 = sweedler_h4(Field::rationals());

  for (const HopfData* h : {&c2, &s3, &h4}) {
    const BaseAlgebraData b = base_from_h(*h);
    const CheckReport rep = check_base(*h, b);
    INFO(rep.to_text());
    CHECK(rep.all_pass());
  }

  // On a commutative Hopf algebra the adjoint action collapses to ε: h▷λ = ε(h)λ.
  const BaseAlgebraData b2 = base_from_h(c2);
  for (size_t i = 0; i < 2; ++i)
    for (size_t la = 0; la < 2; ++la) {
      const Vec got = b2.act(i, b2.l.basis(la));
      CHECK(got == b2.l.basis(la).scaled(c2.counit[i]));
    }
}

TEST_CASE("the dual base (H, H*) satisfies all axioms on the standard fixtures") {
  const HopfData c2 = group_algebra(Field::rationals(), GroupTable::cyclic(2));
  const HopfData s3 = group_algebra(Field::rationals(), GroupTable::symmetric(3));
  const HopfData h4 = sweedler_h4(Field::rationals());

  for (const HopfData* h : {&c2, &s3, &h4}) {
    const BaseAlgebraData b = base_from_dual(*h);
    REQUIRE(b.dim() == h->dim());
    const CheckReport rep = check_base(*h, b);
    INFO(rep.to_text());
    CHECK(rep.all_pass());

    // The coaction evaluated on 1_{H*} = ε contracts Σ_{i,j} γ(h_i)h_j ⊗ η^iη^j
    // down to 1 ⊗ ε.
    CHECK(b.coact(b.l.unit) == tensor(h->alg.unit, b.l.unit));
  }
}

TEST_CASE("replacing the coaction by the trivial one breaks braided commutativity on kS3") {
  const HopfData s3 = group_algebra(Field::rationals(), GroupTable::symmetric(3));
  BaseAlgebraData b = base_from_h(s3);
  const size_t n = s3.dim();
  b.coaction = Tensor3(s3.field(), n, n, n);
  for (size_t la = 0; la < n; ++la)
    for (size_t hh = 0; hh < n; ++hh) b.coaction.at(la, hh, la) = s3.alg.unit[hh];

  const CheckReport rep = check_base(s3, b);
  CHECK_FALSE(rep.all_pass());
  const CheckItem* bc = find_item(rep, "braided_commutativity");
  REQUIRE(bc != nullptr);
  CHECK_FALSE(bc->pass);
  CHECK(bc->where.size() == 2); // the first non-commuting basis pair of kS3
  for (const auto& item : rep.items)
    if (item.name != "braided_commutativity") CHECK(item.pass);
}

TEST_CASE("the theta contraction reproduces the coaction of (H, H)") {
  for (const HopfData& h :
       {group_algebra(Field::rationals(), GroupTable::cyclic(2)), sweedler_h4(Field::rationals()),
        group_algebra(Field::rationals(), GroupTable::symmetric(3))}) {
    const DoubleData dd = drinfeld_double(h);
    const BaseAlgebraData b = base_from_h(h);
    const CheckReport rep = coaction_via_theta(dd, b);
    INFO(rep.to_text());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("the theta contraction reproduces the coaction of (H, H*)") {
  for (const HopfData& h :
       {group_algebra(Field::rationals(), GroupTable::cyclic(2)), sweedler_h4(Field::rationals())}) {
    const DoubleData dd = drinfeld_double(h);
    const BaseAlgebraData b = base_from_dual(h);
    const CheckReport rep = coaction_via_theta(dd, b);
    INFO(rep.to_text());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("a transposed coaction tensor is rejected by the theta cross-check") {
  const HopfData h4 = sweedler_h4(Field::rationals());
  const DoubleData dd = drinfeld_double(h4);
  BaseAlgebraData b = base_from_h(h4);
  const Tensor3 orig = b.coaction;
  const size_t n = h4.dim();
  for (size_t la = 0; la < n; ++la)
    for (size_t hh = 0; hh < n; ++hh)
      for (size_t lp = 0; lp < n; ++lp) b.coaction.at(la, hh, lp) = orig.at(lp, hh, la);
  REQUIRE(b.coaction != orig);

  const CheckReport rep = coaction_via_theta(dd, b);
  INFO(rep.to_text());
  CHECK_FALSE(rep.all_pass());
  bool witnessed = false;
  for (const auto& item : rep.items)
    if (!item.pass && (!item.where.empty() || !item.lhs.empty())) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("the identity pair is a base homomorphism") {
  const HopfData c2 = group_algebra(Field::rationals(), GroupTable::cyclic(2));
  const BaseAlgebraData b = base_from_h(c2);
  const Mat id = Mat::identity(c2.field(), 2);
  const CheckReport rep = check_base_homomorphism(id, id, c2, b, c2, b);
  INFO(rep.to_text());
  CHECK(rep.all_pass());
}

TEST_CASE("characters induce base automorphisms (id, varpi_alpha) of (H, H)") {
  const HopfData h4 = sweedler_h4(Field::rationals());
  const BaseAlgebraData b = base_from_h(h4);
  const CharacterList cl = characters_of(h4.alg);
  REQUIRE(cl.complete);
  REQUIRE(cl.chars.size() == 2);

  const Mat id = Mat::identity(h4.field(), h4.dim());
  for (const Vec& alpha : cl.chars) {
    const Mat w = base_automorphism_alpha(h4, alpha);
    const CheckReport rep = check_base_homomorphism(id, w, h4, b, h4, b);
    INFO(rep.to_text());
    CHECK(rep.all_pass());

    // ϖ_α ∘ ϖ_{ᾱ} = id for the convolution inverse ᾱ = α∘γ.
    const Mat wbar = base_automorphism_alpha(h4, char_inverse(h4, alpha));
    CHECK(w * wbar == id);
    CHECK(wbar * w == id);
  }

  // α = ε gives the identity automorphism.
  CHECK(base_automorphism_alpha(h4, h4.counit) == id);
}

TEST_CASE("varpi_alpha on kC2 with the sign character is diag(1, -1)") {
  const HopfData c2 = group_algebra(Field::rationals(), GroupTable::cyclic(2));
  Vec sgn(c2.field(), 2);
  sgn[0] = Scalar::one(c2.field());
  sgn[1] = -Scalar::one(c2.field());
  const Mat w = base_automorphism_alpha(c2, sgn);
  Mat expect = Mat::identity(c2.field(), 2);
  expect.at(1, 1) = -Scalar::one(c2.field());
  CHECK(w == expect);
}

TEST_CASE("non-characters are rejected by base_automorphism_alpha") {
  const HopfData c2 = group_algebra(Field::rationals(), GroupTable::cyclic(2));
  const Vec zero(c2.field(), 2);
  try {
    base_automorphism_alpha(c2, zero);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.kind() == "NotCharacter");
  }
}

TEST_CASE("the zero map fails unitality as a base morphism") {
  const HopfData c2 = group_algebra(Field::rationals(), GroupTable::cyclic(2));
  const BaseAlgebraData b = base_from_h(c2);
  const Mat id = Mat::identity(c2.field(), 2);
  const Mat zero(c2.field(), 2, 2);
  const CheckReport rep = check_base_homomorphism(id, zero, c2, b, c2, b);
  CHECK_FALSE(rep.all_pass());
  const CheckItem* unit = find_item(rep, "varpi_unit");
  REQUIRE(unit != nullptr);
  CHECK_FALSE(unit->pass);
}

TEST_CASE("the sign quotient kS3 -> kC2 is a surjective base homomorphism") {
  const HopfData s3 = group_algebra(Field::rationals(), GroupTable::symmetric(3));
  const HopfData c2 = group_algebra(Field::rationals(), GroupTable::cyclic(2));
  const BaseAlgebraData bs3 = base_from_h(s3);
  const BaseAlgebraData bc2 = base_from_h(c2);

  // Permutation words in lexicographic order: indices {0,3,4} are even.
  Mat phi(s3.field(), 2, 6);
  for (size_t g = 0; g < 6; ++g) {
    const bool even = g == 0 || g == 3 || g == 4;
    phi.at(even ? 0 : 1, g) = Scalar::one(s3.field());
  }
  const CheckReport rep = check_base_homomorphism(phi, phi, s3, bs3, c2, bc2);
  INFO(rep.to_text());
  CHECK(rep.all_pass());
  CHECK(rank(phi) == 2); // onto, so the image base is braided commutative
}
