/**
 * @file scalar.cpp
 * @brief Exact scalar arithmetic implementation (GMP-backed).
 */
#include "dynbase/scalar.hpp"

namespace dynbase {

Field Field::prime(unsigned long p) {
  mpz_class m(static_cast<unsigned long>(p));
  // 2 = definitely prime, 1 = probably (impossible below 2^64 with these reps), 0 = composite.
  require(p >= 2 && mpz_probab_prime_p(m.get_mpz_t(), 40) != 0, "BadCharacteristic",
          "modulus " + std::to_string(p) + " is not prime");
  return Field{FieldKind::prime, p};
}

std::string Field::to_string() const {
  return is_rational() ? "rational" : "prime:" + std::to_string(p);
}

Field Field::parse(const std::string& text) {
  if (text == "rational") return rationals();
  const std::string tag = "prime:";
  if (text.rfind(tag, 0) == 0) {
    const std::string num = text.substr(tag.size());
    require(!num.empty() && num.find_first_not_of("0123456789") == std::string::npos,
            "ParseError", "bad field spec '" + text + "'");
    return prime(std::stoul(num));
  }
  fail("ParseError", "bad field spec '" + text + "' (want 'rational' or 'prime:p')");
}

Scalar Scalar::of_fraction(long a, long b, const Field& f) {
  require(b != 0, "DivideByZero", "fraction with zero denominator");
  mpq_class q{mpz_class(a), mpz_class(b)};
  q.canonicalize();
  return Scalar(std::move(q), f.p).reduced();
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
  mpq_class q;
  // mpq set_str accepts "n" and "n/d" in base 10; reject empty/garbage explicitly.
  if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    fail("ParseError", "bad scalar literal '" + text + "'");
  require(mpz_sgn(mpq_denref(q.get_mpq_t())) != 0, "DivideByZero",
          "scalar literal '" + text + "' has zero denominator");
  q.canonicalize();
  return Scalar(std::move(q), f.p).reduced();
}

Scalar Scalar::operator/(const Scalar& o) const {
  match(o);
  require(!o.is_zero(), "DivideByZero", "exact division by zero");
  if (p_ == 0) {
    mpq_class q = q_ / o.q_;
    q.canonicalize();
    return Scalar(std::move(q), 0);
  }
  // 𝔽_p: multiply by the modular inverse of the (integral) representative.
  mpz_class inv, mod(p_);
  int ok = mpz_invert(inv.get_mpz_t(), o.q_.get_num().get_mpz_t(), mod.get_mpz_t());
  require(ok != 0, "DivideByZero", "non-invertible residue mod " + std::to_string(p_));
  return Scalar(mpq_class(q_.get_num() * inv), p_).reduced();
}

Scalar& Scalar::reduced() {
  if (p_ != 0) {
    // Residue of a rational a/b: a * b^{-1} reduced into [0, p).
    mpz_class mod(p_), num = q_.get_num(), den = q_.get_den();
    if (den != 1) {
      mpz_class inv;
      int ok = mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
      require(ok != 0, "DivideByZero",
              "denominator not invertible mod " + std::to_string(p_));
      num *= inv;
    }
    mpz_class r;
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t()); // GMP mod is nonnegative
    q_ = mpq_class(std::move(r));
  }
  return *this;
}

} // namespace dynbase
