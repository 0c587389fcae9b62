#include "starcat/poly.hpp"

namespace starcat {

int Poly::ord() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Poly Poly::operator-() const {
  std::vector<Rat> out;
  out.reserve(c_.size());
  for (const Rat& r : c_) out.push_back(-r);
  return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::scaled(const Rat& r) const {
  if (r.is_zero()) return Poly();
  std::vector<Rat> out;
  out.reserve(c_.size());
  for (const Rat& x : c_) out.push_back(x * r);
  return Poly(std::move(out));
}

Poly Poly::at_neg_x() const {
  std::vector<Rat> out = c_;
  for (size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return Poly(std::move(out));
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
  require(!b.is_zero(), Errc::DivisionByZero, "polynomial division by zero");
  Poly rem = a;
  std::vector<Rat> quot;
  if (a.degree() >= b.degree()) quot.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
  const Rat lead_inv = b.leading().inv();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rat factor = rem.leading() * lead_inv;
    quot[static_cast<size_t>(shift)] = factor;
    std::vector<Rat> sub(static_cast<size_t>(shift), Rat(0));
    sub.push_back(factor);
    rem = rem - Poly(std::move(sub)) * b;
  }
  return {Poly(std::move(quot)), rem};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.leading().inv());
}

}  // namespace starcat
