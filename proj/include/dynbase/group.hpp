/**
 * @file group.hpp
 * @brief Finite groups as Cayley tables: validation, canonical constructions,
 *        subgroups, cosets, conjugacy classes, centers, isomorphism testing.
 *
 * Convention: a group of order n is a table mul[i][j] of element indices with
 * element 0 = identity.  Symmetric groups are built on permutation words in
 * lexicographic order, so the identity permutation is element 0 automatically
 * and every construction is deterministic.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dynbase/error.hpp"
#include "dynbase/report.hpp"

namespace dynbase {

struct GroupTable {
  size_t n = 0;
  std::vector<size_t> table; // row-major: table[i*n + j] = index of g_i * g_j

  size_t mul(size_t i, size_t j) const { return table[i * n + j]; }
  size_t inverse(size_t i) const;

  /** Validate: entries in range, identity at 0, associativity, inverses. */
  CheckReport check() const;

  /** Throwing validation (BadGroupTable). */
  void require_valid() const;

  size_t conjugate(size_t g, size_t x) const { return mul(mul(g, x), inverse(g)); }

  static GroupTable trivial();
  static GroupTable cyclic(size_t n);
  /** S_m on permutation words of {0..m-1} in lexicographic order. */
  static GroupTable symmetric(size_t m);

  /** Closure of a subset (with identity adjoined) as a sorted element list. */
  std::vector<size_t> subgroup_closure(std::vector<size_t> gens) const;

  /** Is the sorted element list a subgroup? */
  bool is_subgroup(const std::vector<size_t>& elems) const;

  /** Left cosets gK of a subgroup, each sorted; cosets ordered by least element. */
  std::vector<std::vector<size_t>> left_cosets(const std::vector<size_t>& subgroup) const;

  /** Elements of the subgroup commuting with every subgroup element. */
  std::vector<size_t> center_of(const std::vector<size_t>& subgroup) const;

  /** Conjugacy classes of the subgroup (conjugation within the subgroup). */
  std::vector<std::vector<size_t>> conjugacy_classes(const std::vector<size_t>& subgroup) const;

  /** Subgroup Cayley table in the local indexing of the sorted element list. */
  GroupTable subgroup_table(const std::vector<size_t>& elems) const;
};

/** Brute-force isomorphism search for small groups (n ≤ 8 in practice). */
std::optional<std::vector<size_t>> group_isomorphism(const GroupTable& a, const GroupTable& b);

} // namespace dynbase
