// Arbitrary-precision exact rational scalar wrapping GMP's mpq_class.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace matchings {

// All counts, weights, and formula values flow through this type so that every
// comparison in the library is bit-exact.  Values are kept canonicalized
// (lowest terms, positive denominator).
class ExactScalar {
 public:
  ExactScalar() : v_(0) {}
  ExactScalar(int n) : v_(n) {}                 // NOLINT: implicit by design
  ExactScalar(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  explicit ExactScalar(const mpz_class& z) : v_(z) {}
  explicit ExactScalar(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Parses "-123" or "p/q" (decimal integer or integer ratio).
  static ExactScalar parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty numeric string");
    mpq_class q;
    try {
      q = mpq_class(text, 10);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed numeric string: " + text);
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    ExactScalar out;
    out.v_ = std::move(q);
    return out;
  }

  static ExactScalar from_ratio(long num, long den) {
    if (den == 0) throw std::domain_error("division by zero");
    mpq_class q(num, den);
    q.canonicalize();
    return ExactScalar(std::move(q));
  }

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Decimal string: "123" for integers, "p/q" otherwise.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  ExactScalar operator-() const { return ExactScalar(mpq_class(-v_)); }

  ExactScalar& operator+=(const ExactScalar& o) { v_ += o.v_; return *this; }
  ExactScalar& operator-=(const ExactScalar& o) { v_ -= o.v_; return *this; }
  ExactScalar& operator*=(const ExactScalar& o) { v_ *= o.v_; return *this; }
  ExactScalar& operator/=(const ExactScalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { a += b; return a; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { a -= b; return a; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { a *= b; return a; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { a /= b; return a; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const ExactScalar& a, const ExactScalar& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExactScalar& a, const ExactScalar& b) { return a.v_ <= b.v_; }
  friend bool operator>(const ExactScalar& a, const ExactScalar& b) { return a.v_ > b.v_; }
  friend bool operator>=(const ExactScalar& a, const ExactScalar& b) { return a.v_ >= b.v_; }

  ExactScalar pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return ExactScalar(std::move(r));
  }

 private:
  mpq_class v_;
};

inline ExactScalar factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return ExactScalar(f);
}

inline ExactScalar binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return ExactScalar(b);
}

}  // namespace matchings
