/**
 * @file report.hpp
 * @brief Structured pass/fail reports for axiom and property checks.
 *
 * Every verification routine in the kernel returns a CheckReport: one item per
 * axiom, and on failure the first offending basis index tuple together with
 * both exact scalar (or vector) values, so a failing structure is debuggable
 * from the report alone.
 */
#pragma once

#include <string>
#include <vector>

#include "dynbase/linalg.hpp"

namespace dynbase {

struct CheckItem {
  std::string name;          // short identifier of the property checked
  bool pass = false;
  std::vector<size_t> where; // first failing basis index tuple (empty if pass)
  std::string lhs, rhs;      // exact values at the failure
  std::string note;          // optional free-form context
};

struct CheckReport {
  std::string subject;
  std::vector<CheckItem> items;

  explicit CheckReport(std::string subject_ = "") : subject(std::move(subject_)) {}

  void add_pass(const std::string& name, const std::string& note = "") {
    items.push_back(CheckItem{name, true, {}, "", "", note});
  }

  void add_fail(const std::string& name, std::vector<size_t> where, std::string lhs,
                std::string rhs, const std::string& note = "") {
    items.push_back(CheckItem{name, false, std::move(where), std::move(lhs), std::move(rhs), note});
  }

  void add(const std::string& name, bool pass, const std::string& note = "") {
    items.push_back(CheckItem{name, pass, {}, "", "", note});
  }

  /** Append all items of another report, prefixing their names. */
  void merge(const std::string& prefix, const CheckReport& other) {
    for (CheckItem item : other.items) {
      item.name = prefix + item.name;
      items.push_back(std::move(item));
    }
  }

  bool all_pass() const {
    for (const auto& item : items)
      if (!item.pass) return false;
    return true;
  }

  size_t failures() const {
    size_t n = 0;
    for (const auto& item : items)
      if (!item.pass) ++n;
    return n;
  }

  /** One line per item; deterministic, suitable for byte-exact comparison. */
  std::string to_text() const {
    std::string s;
    if (!subject.empty()) s += "== " + subject + " ==\n";
    for (const auto& item : items) {
      s += item.pass ? "ok   " : "FAIL ";
      s += item.name;
      if (!item.pass && !item.where.empty()) {
        s += " at (";
        for (size_t i = 0; i < item.where.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(item.where[i]);
        }
        s += "): lhs=" + item.lhs + " rhs=" + item.rhs;
      } else if (!item.pass && !(item.lhs.empty() && item.rhs.empty())) {
        s += ": lhs=" + item.lhs + " rhs=" + item.rhs;
      }
      if (!item.note.empty()) s += " [" + item.note + "]";
      s += "\n";
    }
    return s;
  }
};

/** Decode a flat left-major tensor index into a tuple under the given shape. */
inline std::vector<size_t> decode_index(size_t flat, const std::vector<size_t>& shape) {
  std::vector<size_t> tuple(shape.size(), 0);
  for (size_t i = shape.size(); i-- > 0;) {
    tuple[i] = flat % shape[i];
    flat /= shape[i];
  }
  return tuple;
}

/**
 * Compare two flat tensors (as Vec) of the given shape; record a single item
 * with the first failing index tuple and both exact values.
 */
inline void check_tensor_equal(CheckReport& rep, const std::string& name, const Vec& lhs,
                               const Vec& rhs, const std::vector<size_t>& shape,
                               const std::string& note = "") {
  if (lhs.dim() != rhs.dim()) {
    rep.add_fail(name, {}, "dim " + std::to_string(lhs.dim()), "dim " + std::to_string(rhs.dim()),
                 note);
    return;
  }
  const auto diff = lhs.first_difference(rhs);
  if (!diff) {
    rep.add_pass(name, note);
  } else {
    rep.add_fail(name, decode_index(*diff, shape), lhs[*diff].to_string(), rhs[*diff].to_string(),
                 note);
  }
}

/** Compare two scalars as a named check item. */
inline void check_scalar_equal(CheckReport& rep, const std::string& name, const Scalar& lhs,
                               const Scalar& rhs, std::vector<size_t> where = {},
                               const std::string& note = "") {
  if (lhs == rhs)
    rep.add_pass(name, note);
  else
    rep.add_fail(name, std::move(where), lhs.to_string(), rhs.to_string(), note);
}

} // namespace dynbase
