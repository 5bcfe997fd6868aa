#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dynbase/error.hpp"
#include "dynbase/group.hpp"

using namespace dynbase;

TEST_CASE("cyclic groups") {
  GroupTable c4 = GroupTable::cyclic(4);
  CHECK(c4.check().all_pass());
  CHECK(c4.mul(1, 3) == 0);
  CHECK(c4.inverse(1) == 3);
  CHECK(c4.inverse(2) == 2);
}

TEST_CASE("symmetric group S3") {
  GroupTable s3 = GroupTable::symmetric(3);
  CHECK(s3.n == 6);
  CHECK(s3.check().all_pass());
  // identity is element 0 by lexicographic word order
  for (size_t i = 0; i < 6; ++i) CHECK(s3.mul(0, i) == i);
  // non-abelian
  bool abelian = true;
  for (size_t i = 0; i < 6 && abelian; ++i)
    for (size_t j = 0; j < 6 && abelian; ++j)
      if (s3.mul(i, j) != s3.mul(j, i)) abelian = false;
  CHECK(!abelian);
  // center is trivial
  CHECK(s3.center_of({0, 1, 2, 3, 4, 5}) == std::vector<size_t>{0});
  // conjugacy classes have sizes 1, 2, 3
  auto classes = s3.conjugacy_classes({0, 1, 2, 3, 4, 5});
  std::vector<size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 2, 3});
}

TEST_CASE("bad tables are rejected") {
  GroupTable bad{2, {0, 1, 1, 1}}; // 1 has no inverse / not a latin square group
  CHECK(!bad.check().all_pass());
  CHECK_THROWS_AS(bad.require_valid(), error);
  GroupTable shift{2, {1, 0, 0, 1}}; // identity not at index 0
  CHECK(!shift.check().all_pass());
}

TEST_CASE("subgroups, cosets, closure") {
  GroupTable s3 = GroupTable::symmetric(3);
  // find an order-2 and an order-3 subgroup
  std::vector<size_t> c2, c3;
  for (size_t g = 1; g < 6; ++g) {
    auto h = s3.subgroup_closure({g});
    if (h.size() == 2 && c2.empty()) c2 = h;
    if (h.size() == 3 && c3.empty()) c3 = h;
  }
  REQUIRE(c2.size() == 2);
  REQUIRE(c3.size() == 3);
  CHECK(s3.is_subgroup(c2));
  CHECK(s3.is_subgroup(c3));
  CHECK(!s3.is_subgroup({0, 1, 2, 3, 4})); // wrong size for a subgroup of S3... and not closed

  auto cosets2 = s3.left_cosets(c2);
  CHECK(cosets2.size() == 3);
  CHECK(cosets2[0][0] == 0); // identity coset first
  auto cosets3 = s3.left_cosets(c3);
  CHECK(cosets3.size() == 2);

  // subgroup tables are valid groups with identity at 0
  CHECK(s3.subgroup_table(c2).check().all_pass());
  CHECK(s3.subgroup_table(c3).check().all_pass());
}

TEST_CASE("group isomorphism search") {
  GroupTable s3 = GroupTable::symmetric(3);
  GroupTable c6 = GroupTable::cyclic(6);
  CHECK(!group_isomorphism(s3, c6).has_value());
  CHECK(group_isomorphism(s3, s3).has_value());

  // C3 inside S3 is isomorphic to the abstract C3
  std::vector<size_t> c3;
  for (size_t g = 1; g < 6; ++g)
    if (s3.subgroup_closure({g}).size() == 3) { c3 = s3.subgroup_closure({g}); break; }
  auto iso = group_isomorphism(s3.subgroup_table(c3), GroupTable::cyclic(3));
  REQUIRE(iso.has_value());
  // verify it is a homomorphism
  GroupTable a = s3.subgroup_table(c3), b = GroupTable::cyclic(3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK((*iso)[a.mul(i, j)] == b.mul((*iso)[i], (*iso)[j]));
}
