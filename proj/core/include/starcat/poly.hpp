#pragma once

#include <vector>

#include "starcat/rational.hpp"

namespace starcat {

// Univariate polynomial over the rationals, dense coefficient vector
// in ascending degree with no trailing zeros (zero polynomial = empty vector).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& r) { return Poly(std::vector<Rat>{r}); }
  static Poly x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  // degree of zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<size_t>(k)];
  }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }
  // index of the lowest nonzero coefficient; -1 for the zero polynomial
  int ord() const;
  bool is_monic() const { return !is_zero() && leading().is_one(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return a.c_ != b.c_; }

  Poly scaled(const Rat& r) const;
  // substitute X -> -X
  Poly at_neg_x() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Euclidean division: a = q*b + r with deg r < deg b. Requires b != 0.
struct PolyDivMod {
  Poly quot;
  Poly rem;
};
PolyDivMod divmod(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

}  // namespace starcat
