/** @file group.cpp */
#include "dynbase/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace dynbase {

size_t GroupTable::inverse(size_t i) const {
  for (size_t j = 0; j < n; ++j)
    if (mul(i, j) == 0 && mul(j, i) == 0) return j;
  fail("BadGroupTable", "element " + std::to_string(i) + " has no inverse");
}

CheckReport GroupTable::check() const {
  CheckReport rep("group table");
  if (table.size() != n * n) {
    rep.add("table size is n*n", false,
            "got " + std::to_string(table.size()) + " entries for n=" + std::to_string(n));
    return rep;
  }
  bool in_range = true;
  for (size_t i = 0; i < n * n && in_range; ++i)
    if (table[i] >= n) {
      rep.add_fail("entries in range", {i / n, i % n}, std::to_string(table[i]),
                   "< " + std::to_string(n));
      in_range = false;
    }
  if (in_range) rep.add_pass("entries in range");
  if (!in_range) return rep;

  bool ident = true;
  for (size_t i = 0; i < n && ident; ++i)
    if (mul(0, i) != i || mul(i, 0) != i) {
      rep.add_fail("element 0 is identity", {i}, std::to_string(mul(0, i)), std::to_string(i));
      ident = false;
    }
  if (ident) rep.add_pass("element 0 is identity");

  bool assoc = true;
  for (size_t i = 0; i < n && assoc; ++i)
    for (size_t j = 0; j < n && assoc; ++j)
      for (size_t k = 0; k < n && assoc; ++k)
        if (mul(mul(i, j), k) != mul(i, mul(j, k))) {
          rep.add_fail("associativity", {i, j, k}, std::to_string(mul(mul(i, j), k)),
                       std::to_string(mul(i, mul(j, k))));
          assoc = false;
        }
  if (assoc) rep.add_pass("associativity");

  bool inv = true;
  for (size_t i = 0; i < n && inv; ++i) {
    bool found = false;
    for (size_t j = 0; j < n; ++j)
      if (mul(i, j) == 0 && mul(j, i) == 0) { found = true; break; }
    if (!found) {
      rep.add_fail("inverses exist", {i}, "none", "two-sided inverse");
      inv = false;
    }
  }
  if (inv) rep.add_pass("inverses exist");
  return rep;
}

void GroupTable::require_valid() const {
  CheckReport rep = check();
  require(rep.all_pass(), "BadGroupTable", rep.to_text());
}

GroupTable GroupTable::trivial() { return GroupTable{1, {0}}; }

GroupTable GroupTable::cyclic(size_t n) {
  require(n >= 1, "BadGroupTable", "cyclic group needs n >= 1");
  GroupTable g;
  g.n = n;
  g.table.resize(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g.table[i * n + j] = (i + j) % n;
  return g;
}

GroupTable GroupTable::symmetric(size_t m) {
  require(m >= 1, "BadGroupTable", "symmetric group needs m >= 1");
  std::vector<std::vector<size_t>> perms;
  std::vector<size_t> word(m);
  std::iota(word.begin(), word.end(), 0);
  do {
    perms.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  const size_t n = perms.size();
  std::map<std::vector<size_t>, size_t> index;
  for (size_t i = 0; i < n; ++i) index[perms[i]] = i;
  GroupTable g;
  g.n = n;
  g.table.resize(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      // composition: (sigma∘tau)(x) = sigma(tau(x))
      std::vector<size_t> comp(m);
      for (size_t x = 0; x < m; ++x) comp[x] = perms[i][perms[j][x]];
      g.table[i * n + j] = index.at(comp);
    }
  return g;
}

std::vector<size_t> GroupTable::subgroup_closure(std::vector<size_t> gens) const {
  std::set<size_t> elems(gens.begin(), gens.end());
  elems.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<size_t> cur(elems.begin(), elems.end());
    for (size_t a : cur)
      for (size_t b : cur)
        if (elems.insert(mul(a, b)).second) grew = true;
  }
  return {elems.begin(), elems.end()};
}

bool GroupTable::is_subgroup(const std::vector<size_t>& elems) const {
  std::set<size_t> s(elems.begin(), elems.end());
  if (s.size() != elems.size() || !s.count(0)) return false;
  for (size_t a : elems) {
    if (a >= n) return false;
    for (size_t b : elems)
      if (!s.count(mul(a, b))) return false;
    if (!s.count(inverse(a))) return false;
  }
  return true;
}

std::vector<std::vector<size_t>> GroupTable::left_cosets(const std::vector<size_t>& subgroup) const {
  require(is_subgroup(subgroup), "BadGroupTable", "left_cosets: not a subgroup");
  std::set<std::vector<size_t>> seen;
  for (size_t g = 0; g < n; ++g) {
    std::vector<size_t> coset;
    for (size_t k : subgroup) coset.push_back(mul(g, k));
    std::sort(coset.begin(), coset.end());
    seen.insert(coset);
  }
  std::vector<std::vector<size_t>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [](const std::vector<size_t>& a, const std::vector<size_t>& b) { return a[0] < b[0]; });
  return out;
}

std::vector<size_t> GroupTable::center_of(const std::vector<size_t>& subgroup) const {
  std::vector<size_t> out;
  for (size_t a : subgroup) {
    bool central = true;
    for (size_t b : subgroup)
      if (mul(a, b) != mul(b, a)) { central = false; break; }
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<size_t>> GroupTable::conjugacy_classes(const std::vector<size_t>& subgroup) const {
  require(is_subgroup(subgroup), "BadGroupTable", "conjugacy_classes: not a subgroup");
  std::set<size_t> remaining(subgroup.begin(), subgroup.end());
  std::vector<std::vector<size_t>> classes;
  while (!remaining.empty()) {
    size_t x = *remaining.begin();
    std::set<size_t> cls;
    for (size_t g : subgroup) cls.insert(conjugate(g, x));
    classes.emplace_back(cls.begin(), cls.end());
    for (size_t y : cls) remaining.erase(y);
  }
  return classes;
}

GroupTable GroupTable::subgroup_table(const std::vector<size_t>& elems) const {
  require(is_subgroup(elems), "BadGroupTable", "subgroup_table: not a subgroup");
  std::map<size_t, size_t> local;
  for (size_t i = 0; i < elems.size(); ++i) local[elems[i]] = i;
  GroupTable g;
  g.n = elems.size();
  g.table.resize(g.n * g.n);
  for (size_t i = 0; i < g.n; ++i)
    for (size_t j = 0; j < g.n; ++j) g.table[i * g.n + j] = local.at(mul(elems[i], elems[j]));
  // relabel so the identity sits at index 0, preserving the order of the rest
  size_t e = local.at(0);
  if (e != 0) {
    std::vector<size_t> relabel(g.n);
    for (size_t i = 0; i < g.n; ++i) relabel[i] = (i == e) ? 0 : (i < e ? i + 1 : i);
    GroupTable h;
    h.n = g.n;
    h.table.resize(g.n * g.n);
    for (size_t i = 0; i < g.n; ++i)
      for (size_t j = 0; j < g.n; ++j)
        h.table[relabel[i] * g.n + relabel[j]] = relabel[g.table[i * g.n + j]];
    return h;
  }
  return g;
}

namespace {
bool extend_isomorphism(const GroupTable& a, const GroupTable& b, std::vector<size_t>& phi,
                        std::vector<bool>& used, size_t next) {
  const size_t n = a.n;
  if (next == n) return true;
  for (size_t img = 0; img < n; ++img) {
    if (used[img]) continue;
    phi[next] = img;
    bool ok = true;
    // incremental consistency on all products among the assigned prefix
    for (size_t i = 0; i <= next && ok; ++i)
      for (size_t j = 0; j <= next && ok; ++j) {
        size_t p = a.mul(i, j);
        size_t q = b.mul(phi[i], phi[j]);
        if (p <= next) {
          if (phi[p] != q) ok = false;
        } else {
          // product not yet assigned: its image is forced; check no clash
          for (size_t k = 0; k <= next; ++k)
            if (phi[k] == q && k != p) { ok = false; break; }
        }
      }
    if (ok) {
      used[img] = true;
      if (extend_isomorphism(a, b, phi, used, next + 1)) return true;
      used[img] = false;
    }
  }
  return false;
}
} // namespace

std::optional<std::vector<size_t>> group_isomorphism(const GroupTable& a, const GroupTable& b) {
  if (a.n != b.n) return std::nullopt;
  std::vector<size_t> phi(a.n, 0);
  std::vector<bool> used(a.n, false);
  used[0] = true; // identity maps to identity
  if (extend_isomorphism(a, b, phi, used, 1)) return phi;
  return std::nullopt;
}

} // namespace dynbase
