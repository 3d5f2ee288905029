#include "stabplane/numk.hpp"

#include "stabplane/errors.hpp"

namespace stabplane {

ReducedPoint reduce(const CharVector& v) {
  if (sgn(v.ch0) == 0) throw Ch0Zero();
  return {Rat(v.ch1 / v.ch0), Rat(v.ch2 / v.ch0)};
}

Rat euler_pairing(const CharVector& a, const CharVector& b) {
  static const Rat three_half = rat(3, 2);
  return a.ch0 * b.ch2 + a.ch2 * b.ch0 - a.ch1 * b.ch1 +
         three_half * (a.ch0 * b.ch1 - a.ch1 * b.ch0) + a.ch0 * b.ch0;
}

CharVector twist(const CharVector& v, long n) {
  Rat nn = rat(n);
  return {v.ch0, v.ch1 + nn * v.ch0, v.ch2 + nn * v.ch1 + nn * nn / 2 * v.ch0};
}

CharVector serre_twist(const CharVector& v) { return twist(v, -3); }

CharVector shift(const CharVector& v, long k) {
  if (k % 2 == 0) return v;
  return {Rat(-v.ch0), Rat(-v.ch1), Rat(-v.ch2)};
}

CharVector dual(const CharVector& v) { return {v.ch0, Rat(-v.ch1), v.ch2}; }

Rat delta_of(const ReducedPoint& p) { return p.s * p.s / 2 - p.q; }

bool is_sheaf_lattice(const CharVector& v) {
  return is_integer(v.ch0) && is_integer(v.ch1) && is_integer(Rat(2 * v.ch2));
}

std::string to_string(const CharVector& v) {
  return "(" + to_string(v.ch0) + "," + to_string(v.ch1) + "," + to_string(v.ch2) + ")";
}

}  // namespace stabplane
