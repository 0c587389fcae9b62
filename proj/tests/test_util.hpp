#pragma once

#include <vector>

#include "starcat/dilation.hpp"
#include "starcat/harness.hpp"

namespace starcat::testutil {

inline Scalar rq(long n, long d = 1) { return Scalar::rational(Rat(n, d)); }

inline WObject robj(std::vector<Rat> weights) {
  std::vector<Scalar> ws;
  ws.reserve(weights.size());
  for (const Rat& w : weights) ws.push_back(Scalar::rational(w));
  return WObject(RingId::Rational, std::move(ws));
}

inline WMorphism rmor(const WObject& dom, const WObject& cod, std::vector<std::vector<Rat>> rows) {
  Mat m(RingId::Rational, cod.dim(), dom.dim());
  for (int r = 0; r < cod.dim(); ++r)
    for (int c = 0; c < dom.dim(); ++c) m.set(r, c, Scalar::rational(rows[static_cast<size_t>(r)][static_cast<size_t>(c)]));
  return WMorphism(dom, cod, std::move(m));
}

// 1x1 endomorphism over the unit object
inline WMorphism scalar_endo(const Scalar& s) {
  WObject unit = WObject::unit(s.ring(), 1);
  Mat m(s.ring(), 1, 1);
  m.set(0, 0, s);
  return WMorphism(unit, unit, std::move(m));
}

inline Scalar x_poly() { return Scalar::ratfun(Poly::x(), Poly::constant(Rat(1))); }
inline Scalar gauss_i() { return Scalar::gaussian(Rat(0), Rat(1)); }
inline Scalar quat_i() { return Scalar::quaternion(Rat(0), Rat(1), Rat(0), Rat(0)); }
inline Scalar quat_j() { return Scalar::quaternion(Rat(0), Rat(0), Rat(1), Rat(0)); }
inline Scalar quat_k() { return Scalar::quaternion(Rat(0), Rat(0), Rat(0), Rat(1)); }

inline std::vector<RingId> all_rings() {
  return {RingId::Rational, RingId::Gaussian, RingId::Quaternion, RingId::RatFun};
}

}  // namespace starcat::testutil
