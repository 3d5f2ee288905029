#pragma once

#include <string>

#include "stabplane/rat.hpp"

namespace stabplane {

// Chern character (ch0, ch1.H, ch2) of a class in the numerical Grothendieck
// group of the plane. The universal currency of the library: every region
// test, pairing and mutation is arithmetic on these triples.
struct CharVector {
  Rat ch0, ch1, ch2;

  friend bool operator==(const CharVector& a, const CharVector& b) {
    return a.ch0 == b.ch0 && a.ch1 == b.ch1 && a.ch2 == b.ch2;
  }
};

// The point (1, ch1/ch0, ch2/ch0) of the affine plane.
struct ReducedPoint {
  Rat s, q;

  friend bool operator==(const ReducedPoint& a, const ReducedPoint& b) {
    return a.s == b.s && a.q == b.q;
  }
};

// Throws Ch0Zero for rank-zero classes (points on the line at infinity).
ReducedPoint reduce(const CharVector& v);

// Euler pairing chi(a, b) from Riemann-Roch on the plane:
//   chi(a,b) = a0*b0 + 3/2*(a0*b1 - a1*b0) + (a0*b2 - a1*b1 + a2*b0).
// Bilinear; chi(v,v) = ch0^2*(1 - s^2 + 2q) whenever ch0 != 0.
Rat euler_pairing(const CharVector& a, const CharVector& b);

// Multiplication by e^{nH}: (ch0, ch1 + n*ch0, ch2 + n*ch1 + n^2/2*ch0).
CharVector twist(const CharVector& v, long n);

// K-class of the Serre functor: twist by the canonical class, i.e. twist(v,-3).
CharVector serre_twist(const CharVector& v);

// Homological shift by k: multiplies the class by (-1)^k.
CharVector shift(const CharVector& v, long k);

// Derived dual at class level: (ch0, -ch1, ch2).
CharVector dual(const CharVector& v);

// 1/2*s^2 - q of the reduced point; requires ch0 != 0.
Rat delta_of(const ReducedPoint& p);

// True when the triple lies in the lattice of genuine sheaf classes:
// ch0 and ch1 integers, 2*ch2 an integer. Mutation intermediates always do;
// user input may not, hence a validator instead of a type invariant.
bool is_sheaf_lattice(const CharVector& v);

std::string to_string(const CharVector& v);

}  // namespace stabplane
