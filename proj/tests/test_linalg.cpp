#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dynbase/error.hpp"
#include "dynbase/linalg.hpp"

using namespace dynbase;

namespace {
const Field Q = Field::rationals();

Mat mat(const std::vector<std::vector<long>>& rows) {
  Mat m(Q, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Scalar::of_int(rows[i][j], Q);
  return m;
}

Vec vec(const std::vector<long>& v) {
  Vec out(Q, v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Scalar::of_int(v[i], Q);
  return out;
}
} // namespace

TEST_CASE("rank examples") {
  CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(mat({{1, 0}, {0, 1}})) == 2);
  CHECK(rank(Mat(Q, 3, 3)) == 0);
  CHECK(rank(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("kernel basis") {
  auto k = kernel_basis(mat({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(same_span(k, {vec({1, -1})}));
  CHECK(mat({{1, 1}}).apply(k[0]).is_zero());

  // rank-nullity on a rectangular example
  Mat m = mat({{1, 2, 3}, {2, 4, 6}});
  CHECK(rank(m) + kernel_basis(m).size() == m.cols());
  for (const Vec& v : kernel_basis(m)) CHECK(m.apply(v).is_zero());
}

TEST_CASE("solve") {
  Mat m = mat({{2, 0}, {0, 4}});
  auto x = solve(m, vec({1, 2}));
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == vec({1, 2}));
  CHECK((*x)[0].to_string() == "1/2");

  // inconsistent system
  CHECK(!solve(mat({{1}, {1}}), vec({1, 2})).has_value());

  // underdetermined: a particular solution is still exact
  Mat u = mat({{1, 1}});
  auto y = solve(u, vec({5}));
  REQUIRE(y.has_value());
  CHECK(u.apply(*y) == vec({5}));
}

TEST_CASE("inverse") {
  Mat m = mat({{1, 2}, {3, 4}});
  Mat mi = inverse(m);
  CHECK(m * mi == Mat::identity(Q, 2));
  CHECK(mi * m == Mat::identity(Q, 2));
  CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), error);
}

TEST_CASE("kron respects the left-major flattening") {
  Mat a = mat({{1, 2}, {3, 4}});
  Mat b = mat({{0, 1}, {1, 0}});
  Mat k = kron(a, b);
  CHECK(k.rows() == 4);
  // (A⊗B)(u⊗v) = Au ⊗ Bv
  Vec u = vec({1, 5}), v = vec({2, 7});
  CHECK(k.apply(tensor(u, v)) == tensor(a.apply(u), b.apply(v)));
  // associativity
  Mat c = mat({{2, 0}, {0, 3}});
  CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  // rank multiplicativity
  Mat r1 = mat({{1, 2}, {2, 4}});
  CHECK(rank(kron(r1, a)) == rank(r1) * rank(a));
}

TEST_CASE("span utilities") {
  std::vector<Vec> s1 = {vec({1, 0, 1}), vec({0, 1, 1})};
  std::vector<Vec> s2 = {vec({1, 1, 2}), vec({1, -1, 0})};
  CHECK(same_span(s1, s2));
  CHECK(in_span(s1, vec({2, 3, 5})));
  CHECK(!in_span(s1, vec({0, 0, 1})));
  CHECK(span_basis({vec({1, 1, 1}), vec({2, 2, 2})}).size() == 1);
}

TEST_CASE("quotient spaces") {
  // quotient of k³ by span{(1,1,0)}
  Quotient q(Q, 3, {vec({1, 1, 0})});
  CHECK(q.dim() == 2);
  // project∘lift = identity on coordinates
  for (size_t i = 0; i < 2; ++i) {
    Vec e = Vec::basis(Q, 2, i);
    CHECK(q.project(q.lift(e)) == e);
  }
  // v − lift(project(v)) lies in the subspace
  Vec v = vec({3, 5, 7});
  Vec delta = v - q.lift(q.project(v));
  CHECK(in_span({vec({1, 1, 0})}, delta));
  CHECK(q.contains_in_subspace(vec({2, 2, 0})));
  CHECK(!q.contains_in_subspace(vec({2, 3, 0})));
}

TEST_CASE("prime field elimination") {
  const Field f3 = Field::prime(3);
  Mat m(f3, 2, 2);
  m.at(0, 0) = Scalar::of_int(1, f3);
  m.at(0, 1) = Scalar::of_int(2, f3);
  m.at(1, 0) = Scalar::of_int(2, f3);
  m.at(1, 1) = Scalar::of_int(1, f3); // second row = 2·first row mod 3
  CHECK(rank(m) == 1);
  CHECK(kernel_basis(m).size() == 1);
}

TEST_CASE("tensor flattening convention") {
  // e_i ⊗ e_j ↦ i·dim + j (left factor major)
  Vec a = vec({1, 2});
  Vec b = vec({3, 4, 5});
  Vec t = tensor(a, b);
  REQUIRE(t.dim() == 6);
  CHECK(t[pair_index(1, 2, 3)] == Scalar::of_int(10, Q));
  CHECK(t[0] == Scalar::of_int(3, Q));
}
