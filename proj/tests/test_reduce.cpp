/**
 * @file test_reduce.cpp
 * @brief Reduction of bases, central idempotents, the coset classification
 *        with its exhaustive cross-check, orbit splitting, and generator sums.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "dynbase/chars.hpp"
#include "dynbase/group.hpp"
#include "dynbase/reduce.hpp"

using namespace dynbase;

namespace {

const Field QQ = Field::rationals();

const CheckItem* find_item(const CheckReport& rep, const std::string& name) {
  for (const auto& item : rep.items)
    if (item.name == name) return &item;
  return nullptr;
}

bool same_base(const BaseAlgebraData& a, const BaseAlgebraData& b) {
  return a.l.mult == b.l.mult && a.l.unit == b.l.unit && a.action == b.action &&
         a.coaction == b.coaction;
}

bool same_hopf(const HopfData& a, const HopfData& b) {
  return a.alg.mult == b.alg.mult && a.alg.unit == b.alg.unit && a.comult == b.comult &&
         a.counit == b.counit && a.antipode == b.antipode && a.antipode_inv == b.antipode_inv;
}

std::string error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.kind();
  }
  return "";
}

/** A two-point base k ⊕ k with the trivial action and trivial coaction. */
BaseAlgebraData two_point_trivial_base(const HopfData& h) {
  BaseAlgebraData b(h.field(), h.dim(), 2);
  for (size_t p = 0; p < 2; ++p) {
    b.l.mult.at(p, p, p) = Scalar::one(h.field());
    b.l.unit[p] = Scalar::one(h.field());
  }
  for (size_t i = 0; i < h.dim(); ++i)
    for (size_t p = 0; p < 2; ++p) b.action.at(i, p, p) = h.counit[i];
  for (size_t p = 0; p < 2; ++p)
    for (size_t i = 0; i < h.dim(); ++i) b.coaction.at(p, i, p) = h.alg.unit[i];
  return b;
}

} // namespace

TEST_CASE("reducing an already reduced base changes nothing") {
  const HopfData hs3 = function_algebra(QQ, GroupTable::symmetric(3));
  const HopfData c2 = group_algebra(QQ, GroupTable::cyclic(2));

  for (const HopfData* h : {&hs3, &c2}) {
    const BaseAlgebraData b = base_from_h(*h);
    REQUIRE(is_reduced(*h, b));
    const ReducedBase r = reduce_base(*h, b);
    INFO(r.report.to_text());
    CHECK(r.report.all_pass());
    CHECK(r.hopf.dim() == h->dim());
    CHECK(r.base.dim() == b.dim());
    // With zero annihilators both projections are literally the identity.
    CHECK(r.project_h == Mat::identity(QQ, h->dim()));
    CHECK(r.project_l == Mat::identity(QQ, b.dim()));
    CHECK(same_hopf(r.hopf, *h));
    CHECK(same_base(r.base, b));
  }
}

TEST_CASE("the four-dimensional Hopf algebra reduces to a two-dimensional pair") {
  const HopfData h4 = sweedler_h4(QQ);
  const BaseAlgebraData b = base_from_h(h4);
  REQUIRE_FALSE(is_reduced(h4, b));

  const ReducedBase r = reduce_base(h4, b);
  INFO(r.report.to_text());
  CHECK(r.report.all_pass());
  CHECK(r.hopf.dim() == 2);
  CHECK(r.base.dim() == 2);
  CHECK(rank(r.project_h) == 2);
  CHECK(rank(r.project_l) == 2);

  // The annihilators are nonzero here, so section independence is a real
  // statement: the perturbed section reproduced identical structure constants.
  const CheckItem* hs = find_item(r.report, "hopf_section_independent");
  const CheckItem* bs = find_item(r.report, "base_section_independent");
  REQUIRE(hs != nullptr);
  REQUIRE(bs != nullptr);
  CHECK(hs->pass);
  CHECK(bs->pass);

  // H' is spanned by group-likes: its character group has full order 2.
  CHECK(hat_group_structure(r.hopf).chars.size() == 2);
  CHECK(is_reduced(r.hopf, r.base));

  // Reduction is idempotent: reducing the result is the identity again.
  const ReducedBase r2 = reduce_base(r.hopf, r.base);
  CHECK(r2.project_h == Mat::identity(QQ, 2));
  CHECK(same_hopf(r2.hopf, r.hopf));
  CHECK(same_base(r2.base, r.base));
}

TEST_CASE("group algebras and the nil base reduce to the expected dimensions") {
  const HopfData s3 = group_algebra(QQ, GroupTable::symmetric(3));
  const ReducedBase r = reduce_base(s3, base_from_h(s3));
  INFO(r.report.to_text());
  CHECK(r.report.all_pass());
  CHECK(r.hopf.dim() == 2); // kS3 has two characters: trivial and sign
  CHECK(r.base.dim() == 2);

  const HopfData c2 = group_algebra(QQ, GroupTable::cyclic(2));
  const ReducedBase rn = reduce_base(c2, nil_base(c2, 3));
  INFO(rn.report.to_text());
  CHECK(rn.report.all_pass());
  CHECK(rn.hopf.dim() == 2);
  CHECK(rn.base.dim() == 1); // the unique character kills the nil part
  CHECK(is_reduced(rn.hopf, rn.base));
}

TEST_CASE("reduction requires an invariant character") {
  const HopfData c2 = group_algebra(QQ, GroupTable::cyclic(2));
  const BaseAlgebraData bd = base_from_dual(c2); // no invariant characters over kC2
  REQUIRE(invariant_characters(c2, bd).empty());
  CHECK_FALSE(is_reduced(c2, bd));
  CHECK(error_kind([&] { reduce_base(c2, bd); }) == "NoInvariantCharacters");
}

TEST_CASE("central idempotents of small group algebras have the classical counts") {
  const auto idempotents_of = [](const GroupTable& g, const Field& f) {
    return central_idempotents(group_algebra(f, g).alg);
  };

  CHECK(idempotents_of(GroupTable::trivial(), QQ).size() == 2);
  CHECK(idempotents_of(GroupTable::cyclic(3), QQ).size() == 4);  // Q x Q(w)
  CHECK(idempotents_of(GroupTable::cyclic(4), QQ).size() == 8);  // Q x Q x Q(i)
  CHECK(idempotents_of(GroupTable::symmetric(3), QQ).size() == 8);

  // kC2: the four idempotents 0, (1-g)/2, (1+g)/2, 1 in lexicographic order.
  const auto c2 = idempotents_of(GroupTable::cyclic(2), QQ);
  REQUIRE(c2.size() == 4);
  const Scalar half = Scalar::of_fraction(1, 2, QQ);
  CHECK(c2[0] == Vec(QQ, 2));
  CHECK((c2[1][0] == half && c2[1][1] == -half));
  CHECK((c2[2][0] == half && c2[2][1] == half));
  CHECK(c2[3] == group_algebra(QQ, GroupTable::cyclic(2)).alg.unit);

  // Splitting depends on the field: x^2+1 factors mod 5, so F5C4 = F5^4.
  const Field F5 = Field::prime(5);
  CHECK(idempotents_of(GroupTable::cyclic(4), F5).size() == 16);

  // Every returned element is an exact central idempotent.
  for (const Field* f : {&QQ, &F5}) {
    const AlgebraData a = group_algebra(*f, GroupTable::cyclic(4)).alg;
    for (const Vec& pi : central_idempotents(a)) {
      CHECK(a.mul(pi, pi) == pi);
      for (size_t i = 0; i < a.dim; ++i) {
        CHECK(a.mul(pi, a.basis(i)) == a.mul(a.basis(i), pi));
      }
    }
  }

  // Deterministic output: two runs agree element for element.
  const AlgebraData s3 = group_algebra(QQ, GroupTable::symmetric(3)).alg;
  CHECK(central_idempotents(s3) == central_idempotents(s3));
}

TEST_CASE("central idempotents see through noncommutativity") {
  // The 2x2 matrix algebra E_ab E_cd = [b=c] E_ad has center k, so only 0, 1.
  AlgebraData m2(QQ, 4);
  const auto idx = [](size_t a, size_t b) { return a * 2 + b; };
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 2; ++b)
      for (size_t c = 0; c < 2; ++c)
        for (size_t d = 0; d < 2; ++d)
          if (b == c) m2.mult.at(idx(a, b), idx(c, d), idx(a, d)) = Scalar::one(QQ);
  m2.unit[idx(0, 0)] = Scalar::one(QQ);
  m2.unit[idx(1, 1)] = Scalar::one(QQ);
  REQUIRE(m2.check().all_pass());

  const auto pis = central_idempotents(m2);
  REQUIRE(pis.size() == 2);
  CHECK(pis[0] == Vec(QQ, 4));
  CHECK(pis[1] == m2.unit);
}

TEST_CASE("the coset classification measures every candidate row") {
  struct PairCase {
    GroupTable g;
    std::vector<size_t> k;
    size_t candidates;
    size_t unital;
  };
  const std::vector<PairCase> cases = {
      {GroupTable::cyclic(2), {0}, 2, 1},
      {GroupTable::cyclic(4), {0, 2}, 4, 2},
      {GroupTable::symmetric(3), {0}, 2, 1},
      {GroupTable::symmetric(3), {0, 1}, 4, 2},    // K generated by a transposition
      {GroupTable::symmetric(3), {0, 3, 4}, 4, 2}, // K = the 3-cycles
      {GroupTable::symmetric(3), {0, 1, 2, 3, 4, 5}, 8, 4},
  };

  for (const auto& pc : cases) {
    CAPTURE(pc.g.n);
    CAPTURE(pc.k.size());
    const auto rows = enumerate_base_structures(QQ, pc.g, pc.k);
    const size_t x = pc.g.n / pc.k.size();
    CHECK(rows.size() == pc.candidates);

    size_t unital = 0, passing = 0;
    for (const auto& row : rows) {
      if (row.unital) ++unital;
      if (row.passes) ++passing;
      CHECK(row.passes == (row.report.all_pass() && row.unital));
      if (row.passes) {
        // The unique passing action is the trivial spreading pi = e, i.e. the
        // unit of kK; the resulting base is reduced with every point character
        // invariant.
        CHECK(row.pi == Vec::basis(QQ, pc.k.size(), 0));
        CHECK(row.reduced);
        CHECK(row.all_invariant);
        CHECK(row.invariant_count == x);
      } else {
        // Any other central idempotent destroys invariance entirely.
        CHECK(row.invariant_count == 0);
        CHECK_FALSE(row.reduced);
        CHECK_FALSE(row.all_invariant);
      }
    }
    CHECK(unital == pc.unital);
    CHECK(passing == 1);
  }
}

TEST_CASE("the exhaustive diagonal search confirms the classification pass set") {
  const std::vector<std::pair<GroupTable, std::vector<size_t>>> cases = {
      {GroupTable::cyclic(2), {0}},
      {GroupTable::cyclic(4), {0, 2}},
      {GroupTable::symmetric(3), {0}}, // 6^6 diagonal candidates
      {GroupTable::symmetric(3), {0, 1}},
      {GroupTable::symmetric(3), {0, 3, 4}},
      {GroupTable::symmetric(3), {0, 1, 2, 3, 4, 5}},
  };

  for (const auto& [g, k] : cases) {
    CAPTURE(g.n);
    CAPTURE(k.size());
    const auto oracle = diagonal_base_search(QQ, g, k);
    REQUIRE(oracle.size() == 1);

    const auto rows = enumerate_base_structures(QQ, g, k);
    size_t passing = 0;
    for (const auto& row : rows)
      if (row.passes) {
        ++passing;
        CHECK(same_base(row.base, oracle[0]));
      }
    CHECK(passing == oracle.size());
  }
}

TEST_CASE("a transitive character action gives a single orbit summand") {
  // The passing coset base for (S3, C3) has two points swapped by translation.
  const GroupTable s3 = GroupTable::symmetric(3);
  const HopfData h = function_algebra(QQ, s3);
  const auto rows = enumerate_base_structures(QQ, s3, {0, 3, 4});
  const ClassifiedBase* pass = nullptr;
  for (const auto& row : rows)
    if (row.passes) pass = &row;
  REQUIRE(pass != nullptr);

  const auto summands = orbit_split(h, pass->base);
  REQUIRE(summands.size() == 1);
  CHECK(summands[0].dim() == 2);
  CHECK(check_base(h, summands[0]).all_pass());

  // Same on the six-point adjoint base of a function algebra: the character
  // group acts by right translation, transitively.
  const BaseAlgebraData adj = base_from_h(h);
  const auto big = orbit_split(h, adj);
  REQUIRE(big.size() == 1);
  CHECK(big[0].dim() == 6);
  CHECK(check_base(h, big[0]).all_pass());
}

TEST_CASE("a trivial coaction splits into one summand per point") {
  const HopfData c2 = group_algebra(QQ, GroupTable::cyclic(2));
  const BaseAlgebraData b = two_point_trivial_base(c2);
  REQUIRE(check_base(c2, b).all_pass());
  REQUIRE(is_reduced(c2, b));

  const auto summands = orbit_split(c2, b);
  REQUIRE(summands.size() == 2);
  for (const auto& s : summands) {
    CHECK(s.dim() == 1);
    CHECK(check_base(c2, s).all_pass());
  }
}

TEST_CASE("orbit splitting rejects non-reduced bases") {
  const HopfData h4 = sweedler_h4(QQ);
  CHECK(error_kind([&] { orbit_split(h4, base_from_h(h4)); }) == "NotInvariant");
}

TEST_CASE("generator sums of group algebra bases recover both idempotents") {
  const HopfData c2 = group_algebra(QQ, GroupTable::cyclic(2));
  const GeneratorSum gs = generator_direct_sum(c2, base_from_h(c2));
  INFO(gs.report.to_text());
  CHECK(gs.report.all_pass());
  REQUIRE(gs.chars.size() == 2);
  CHECK(gs.base.dim() == 2);

  // The idempotents are (1+g)/2 for the trivial and (1-g)/2 for the sign
  // character, in the canonical character order (sign sorts first).
  const Scalar half = Scalar::of_fraction(1, 2, QQ);
  for (size_t t = 0; t < 2; ++t) {
    const Vec& chi = gs.chars[t];
    const Vec& e = gs.idempotents[t];
    CHECK(e[0] == half);
    CHECK(e[1] == (chi[1] == Scalar::one(QQ) ? half : -half));
  }

  // The adjoint base of kS3 is not reduced (its generator span is not a
  // subcomodule), so the sum is taken after reduction, where it recovers the
  // whole two-point base.
  const HopfData s3 = group_algebra(QQ, GroupTable::symmetric(3));
  const BaseAlgebraData adj = base_from_h(s3);
  CHECK(error_kind([&] { generator_direct_sum(s3, adj); }) == "NotClosed");
  const ReducedBase r = reduce_base(s3, adj);
  const GeneratorSum gs3 = generator_direct_sum(r.hopf, r.base);
  INFO(gs3.report.to_text());
  CHECK(gs3.report.all_pass());
  CHECK(gs3.chars.size() == 2);
  CHECK(gs3.base.dim() == 2);
}

TEST_CASE("generator sums on a function algebra translate along the character group") {
  const HopfData h = function_algebra(QQ, GroupTable::symmetric(3));
  const BaseAlgebraData b = base_from_h(h);
  const GeneratorSum gs = generator_direct_sum(h, b);
  INFO(gs.report.to_text());
  CHECK(gs.report.all_pass());
  REQUIRE(gs.chars.size() == 6); // every point character is projective here
  CHECK(gs.base.dim() == 6);

  // e_{a.chi} = alpha(e_chi^(1)) e_chi^[oo] for the inverse translate:
  // acting on the idempotent matches moving the character.
  const HatGroup hat = hat_group_structure(h);
  for (const Vec& alpha : hat.chars)
    for (size_t t = 0; t < gs.chars.size(); ++t) {
      const Vec moved_char = char_act_on_char(b, char_inverse(h, alpha), gs.chars[t]);
      const Vec moved_idem = char_act_right(b, alpha, gs.idempotents[t]);
      bool found = false;
      for (size_t u = 0; u < gs.chars.size(); ++u)
        if (gs.chars[u] == moved_char) {
          CHECK(moved_idem == gs.idempotents[u]);
          found = true;
        }
      CHECK(found);
    }
}

TEST_CASE("generator sums reject bases without projective characters") {
  const HopfData c2 = group_algebra(QQ, GroupTable::cyclic(2));
  CHECK(error_kind([&] { generator_direct_sum(c2, nil_base(c2, 3)); }) == "ZeroSum");
  CHECK(error_kind([&] { generator_direct_sum(c2, base_from_dual(c2)); }) == "ZeroSum");

  const HopfData h4 = sweedler_h4(QQ);
  // Both invariant characters of the adjoint base exist but are not projective.
  REQUIRE(invariant_characters(h4, base_from_h(h4)).size() == 2);
  CHECK(error_kind([&] { generator_direct_sum(h4, base_from_h(h4)); }) == "ZeroSum");
}

TEST_CASE("a passing coset row reduces to itself") {
  const GroupTable s3 = GroupTable::symmetric(3);
  const HopfData h = function_algebra(QQ, s3);
  const auto rows = enumerate_base_structures(QQ, s3, {0, 1});
  for (const auto& row : rows)
    if (row.passes) {
      const ReducedBase r = reduce_base(h, row.base);
      INFO(r.report.to_text());
      CHECK(r.report.all_pass());
      CHECK(same_hopf(r.hopf, h));
      CHECK(same_base(r.base, row.base));
    }
}
