#pragma once

#include <string>

#include "stabplane/rat.hpp"

namespace stabplane {

// Exact quadratic irrational a + b*sqrt(d) with rational a, b and a
// non-negative integer radicand d. Rational values are the d = 0 case.
//
// Normal form: b == 0 forces d == 0; perfect-square radicands are folded into
// the rational part; square factors of d below a fixed prime bound are pulled
// into b. Radicands from deep tree levels can keep large square factors, so d
// is not guaranteed square-free; every comparison below stays exact anyway by
// sign analysis (repeated squaring), including across different radicands.
//
// Sums and products are closed only over a single radicand. Mixing two
// genuinely different radicands in arithmetic throws FieldMismatch; it never
// happens in the geometry this library performs.
class Surd {
 public:
  Surd() : a_(0), b_(0), d_(0) {}
  Surd(const Rat& a) : a_(a), b_(0), d_(0) {}  // NOLINT: implicit by design
  Surd(long n) : a_(rat(n)), b_(0), d_(0) {}   // NOLINT
  Surd(const Rat& a, const Rat& b, const BigInt& d);

  // sqrt(x) for x >= 0, exact.
  static Surd sqrt_rat(const Rat& x);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const BigInt& d() const { return d_; }

  bool is_rational() const { return sgn(b_) == 0; }
  const Rat& rational() const;  // requires is_rational()

  int sign() const;
  double to_double() const;
  std::string decimal(int digits) const;
  std::string to_string() const;  // exact "(a,b,d)" triple

  bool compatible(const Surd& other) const {
    return d_ == 0 || other.d_ == 0 || d_ == other.d_;
  }

  Surd operator-() const { return Surd(Rat(-a_), Rat(-b_), d_); }
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Surd& y);
  friend Surd operator/(const Surd& x, const Surd& y);

  // Three-way exact comparison; works for any pair of radicands.
  friend int cmp(const Surd& x, const Surd& y);

  friend bool operator==(const Surd& x, const Surd& y) { return cmp(x, y) == 0; }
  friend bool operator!=(const Surd& x, const Surd& y) { return cmp(x, y) != 0; }
  friend bool operator<(const Surd& x, const Surd& y) { return cmp(x, y) < 0; }
  friend bool operator<=(const Surd& x, const Surd& y) { return cmp(x, y) <= 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return cmp(x, y) > 0; }
  friend bool operator>=(const Surd& x, const Surd& y) { return cmp(x, y) >= 0; }

 private:
  void normalize();

  Rat a_, b_;
  BigInt d_;
};

}  // namespace stabplane
