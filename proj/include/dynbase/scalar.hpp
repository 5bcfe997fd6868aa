/**
 * @file scalar.hpp
 * @brief Exact field scalars: arbitrary-precision rationals ℚ and prime fields 𝔽_p.
 *
 * A `Scalar` is a value in a fixed coefficient field.  Rationals are kept in
 * canonical reduced form with positive denominator (GMP mpq canonical form);
 * prime-field elements are residues in [0, p) with denominator 1.  All
 * arithmetic is exact — the kernel contains no floating point anywhere.
 *
 * Binary operations insist that both operands live over the same field and
 * throw FieldMismatch otherwise; this strictness is deliberate and catches
 * accidental mixing of coefficient domains at the earliest possible moment.
 */
#pragma once

#include <gmpxx.h>

#include <string>

#include "dynbase/error.hpp"

namespace dynbase {

enum class FieldKind { rational, prime };

/** Coefficient field descriptor: ℚ or 𝔽_p for a prime p. */
struct Field {
  FieldKind kind = FieldKind::rational;
  unsigned long p = 0; // modulus, 0 for ℚ

  static Field rationals() { return Field{FieldKind::rational, 0}; }

  /** 𝔽_p.  Throws BadCharacteristic unless p is prime. */
  static Field prime(unsigned long p);

  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  bool is_rational() const { return kind == FieldKind::rational; }

  /** "rational" or "prime:p" — the same syntax the CLI accepts. */
  std::string to_string() const;

  /** Parse "rational" or "prime:p".  Throws ParseError / BadCharacteristic. */
  static Field parse(const std::string& text);
};

/** An exact element of ℚ or 𝔽_p. */
class Scalar {
public:
  /** Default: rational zero.  Containers always overwrite via explicit fills. */
  Scalar() : q_(0), p_(0) {}

  static Scalar zero(const Field& f) { return Scalar(mpq_class(0), f.p); }
  static Scalar one(const Field& f) { return Scalar(mpq_class(1), f.p).reduced(); }
  static Scalar of_int(long n, const Field& f) { return Scalar(mpq_class(n), f.p).reduced(); }

  /** Rational a/b mapped into the field (mod-p image for prime fields). */
  static Scalar of_fraction(long a, long b, const Field& f);

  /** Parse "n" or "n/d" (arbitrary precision).  Throws ParseError. */
  static Scalar parse(const std::string& text, const Field& f);

  Field field() const {
    return p_ == 0 ? Field::rationals() : Field{FieldKind::prime, p_};
  }

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }

  Scalar operator+(const Scalar& o) const { match(o); return Scalar(q_ + o.q_, p_).reduced(); }
  Scalar operator-(const Scalar& o) const { match(o); return Scalar(q_ - o.q_, p_).reduced(); }
  Scalar operator*(const Scalar& o) const { match(o); return Scalar(q_ * o.q_, p_).reduced(); }
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const { return Scalar(-q_, p_).reduced(); }

  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
  Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

  Scalar inverse() const { return Scalar::one(field()) / *this; }

  bool operator==(const Scalar& o) const { match(o); return q_ == o.q_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /** Total order used only for deterministic sorting (numeric order). */
  bool operator<(const Scalar& o) const { match(o); return q_ < o.q_; }

  /** Canonical text: "n" or "n/d" with d > 1; prime field residues in [0,p). */
  std::string to_string() const { return q_.get_str(); }

  /** The canonical rational representative (residue in [0,p) for 𝔽_p). */
  const mpq_class& rep() const { return q_; }

private:
  Scalar(mpq_class q, unsigned long p) : q_(std::move(q)), p_(p) {}

  /** Re-canonicalize: mod-p reduction for prime fields (mpq is already reduced). */
  Scalar& reduced();

  void match(const Scalar& o) const {
    require(p_ == o.p_, "FieldMismatch",
            "scalar fields differ: " + field().to_string() + " vs " + o.field().to_string());
  }

  mpq_class q_;      // canonical representative
  unsigned long p_;  // 0 = rational, otherwise the prime modulus
};

} // namespace dynbase
