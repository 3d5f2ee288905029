#include "stabplane/surd.hpp"

#include <cmath>

#include "stabplane/errors.hpp"

namespace stabplane {

namespace {

// sign of A + B*sqrt(D) for rational A, B and integer D >= 0.
int sign_single_radical(const Rat& A, const Rat& B, const BigInt& D) {
  if (sgn(B) == 0 || D == 0) return sgn(A);
  if (sgn(A) == 0) return sgn(B);
  if (sgn(A) == sgn(B)) return sgn(A);
  Rat lhs = A * A;
  Rat rhs = B * B * Rat(D);
  return sgn(A) * cmp(lhs, rhs);
}

}  // namespace

Surd::Surd(const Rat& a, const Rat& b, const BigInt& d) : a_(a), b_(b), d_(d) {
  if (d_ < 0) throw InvalidParams("negative radicand");
  normalize();
}

void Surd::normalize() {
  if (sgn(b_) == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  BigInt square = extract_square_part(d_);
  if (square != 1) b_ *= Rat(square);
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

Surd Surd::sqrt_rat(const Rat& x) {
  if (sgn(x) < 0) throw InvalidParams("sqrt of negative rational");
  if (sgn(x) == 0) return Surd();
  // sqrt(p/q) = sqrt(p*q)/q
  BigInt pq = x.get_num() * x.get_den();
  return Surd(Rat(0), rat(BigInt(1), x.get_den()), pq);
}

const Rat& Surd::rational() const {
  if (!is_rational()) throw InvalidParams("surd is irrational");
  return a_;
}

int Surd::sign() const { return sign_single_radical(a_, b_, d_); }

double Surd::to_double() const {
  double value = a_.get_d();
  if (sgn(b_) != 0) value += b_.get_d() * std::sqrt(mpf_class(d_).get_d());
  return value;
}

std::string Surd::decimal(int digits) const {
  if (is_rational()) return decimal_string(a_, digits);
  unsigned prec = static_cast<unsigned>(digits) * 4 + 128;
  mpf_class root(0, prec);
  mpf_sqrt(root.get_mpf_t(), mpf_class(d_, prec).get_mpf_t());
  mpf_class value = mpf_class(a_.get_num(), prec) / mpf_class(a_.get_den(), prec) +
                    mpf_class(b_.get_num(), prec) / mpf_class(b_.get_den(), prec) * root;
  mp_exp_t exp10 = 0;
  std::string mantissa = value.get_str(exp10, 10, static_cast<size_t>(digits));
  if (mantissa.empty() || mantissa == "-") return "0";
  bool neg = mantissa[0] == '-';
  if (neg) mantissa = mantissa.substr(1);
  std::string out;
  if (exp10 <= 0) {
    out = "0." + std::string(static_cast<size_t>(-exp10), '0') + mantissa;
  } else if (static_cast<size_t>(exp10) >= mantissa.size()) {
    out = mantissa + std::string(static_cast<size_t>(exp10) - mantissa.size(), '0');
  } else {
    out = mantissa.substr(0, static_cast<size_t>(exp10)) + "." +
          mantissa.substr(static_cast<size_t>(exp10));
  }
  return neg ? "-" + out : out;
}

std::string Surd::to_string() const {
  return "(" + stabplane::to_string(a_) + "," + stabplane::to_string(b_) + "," +
         d_.get_str() + ")";
}

Surd operator+(const Surd& x, const Surd& y) {
  if (!x.compatible(y)) throw FieldMismatch();
  BigInt d = x.d_ != 0 ? x.d_ : y.d_;
  return Surd(x.a_ + y.a_, x.b_ + y.b_, d);
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
  if (!x.compatible(y)) throw FieldMismatch();
  BigInt d = x.d_ != 0 ? x.d_ : y.d_;
  Rat a = x.a_ * y.a_ + x.b_ * y.b_ * Rat(d);
  Rat b = x.a_ * y.b_ + x.b_ * y.a_;
  return Surd(a, b, d);
}

Surd operator/(const Surd& x, const Surd& y) {
  if (!x.compatible(y)) throw FieldMismatch();
  if (y.sign() == 0) throw InvalidParams("division by zero surd");
  if (y.is_rational()) return Surd(x.a_ / y.a_, x.b_ / y.a_, x.d_);
  // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d); the norm cannot
  // vanish because d is not a perfect square after normalization.
  Rat norm = y.a_ * y.a_ - y.b_ * y.b_ * Rat(y.d_);
  Surd conj(Rat(y.a_ / norm), Rat(-y.b_ / norm), y.d_);
  return x * conj;
}

int cmp(const Surd& x, const Surd& y) {
  if (x.compatible(y)) {
    BigInt d = x.d_ != 0 ? x.d_ : y.d_;
    return sign_single_radical(x.a_ - y.a_, x.b_ - y.b_, d);
  }
  // x - y = A + b1*sqrt(d1) - b2*sqrt(d2) with d1 != d2, b1, b2 != 0.
  const Rat A = x.a_ - y.a_;
  const Rat& b1 = x.b_;
  const Rat& b2 = y.b_;
  const BigInt& d1 = x.d_;
  const BigInt& d2 = y.d_;

  // sign of the radical part S = b1*sqrt(d1) - b2*sqrt(d2)
  int radical_sign;
  if (sgn(b1) != sgn(b2)) {
    radical_sign = sgn(b1) > sgn(b2) ? 1 : -1;
  } else {
    radical_sign = sgn(b1) * cmp(b1 * b1 * Rat(d1), b2 * b2 * Rat(d2));
  }

  int a_sign = sgn(A);
  if (a_sign == 0) return radical_sign;
  if (radical_sign == 0) return a_sign;
  if (a_sign == radical_sign) return a_sign;

  // Opposite signs: decide |A| vs |S| via A^2 - S^2, a single-radical value
  // over sqrt(d1*d2).
  Rat T = A * A - b1 * b1 * Rat(d1) - b2 * b2 * Rat(d2);
  Rat U = 2 * b1 * b2;
  return a_sign * sign_single_radical(T, U, d1 * d2);
}

}  // namespace stabplane
