#pragma once

#include <gmpxx.h>

#include <string>

#include "starcat/error.hpp"

namespace starcat {

// Exact rational number. Wraps mpq_class so that every entry point
// canonicalizes; raw mpq_class(p, q) does not, and GMP comparisons
// require canonical operands.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}
  Rat(long num, long den) {
    require(den != 0, Errc::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rat(const mpz_class& num, const mpz_class& den) {
    require(den != 0, Errc::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_one() const { return q_ == 1; }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    require(!o.is_zero(), Errc::DivisionByZero, "rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  Rat inv() const {
    require(!is_zero(), Errc::DivisionByZero, "inverse of zero");
    return Rat(mpq_class(1) / q_);
  }

  // "p/q" with q > 1, otherwise just "p".
  std::string str() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

// Parses "p", "-p", "p/q". Throws Errc::Parse on malformed input.
Rat parse_rat(const std::string& text);

}  // namespace starcat
