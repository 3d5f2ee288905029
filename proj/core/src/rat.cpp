#include "stabplane/rat.hpp"

#include <cctype>
#include <vector>

#include "stabplane/errors.hpp"

namespace stabplane {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long bound = 10000;
    std::vector<bool> sieve(bound + 1, true);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= bound; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw InvalidParams("empty rational literal: '" + text + "'");

  auto slash = s.find('/');
  auto dot = s.find('.');
  Rat value;
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den) || den == "0")
      throw InvalidParams("bad rational literal: '" + text + "'");
    value = Rat(BigInt(num), BigInt(den));
    value.canonicalize();
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!all_digits(whole) || !all_digits(frac))
      throw InvalidParams("bad decimal literal: '" + text + "'");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rat(BigInt(whole) * scale + BigInt(frac), scale);
    value.canonicalize();
  } else {
    if (!all_digits(s)) throw InvalidParams("bad integer literal: '" + text + "'");
    value = Rat(BigInt(s));
  }
  return negative ? Rat(-value) : value;
}

std::string to_string(const Rat& r) { return r.get_str(); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

BigInt floor_rat(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

double to_double(const Rat& r) { return r.get_d(); }

std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

BigInt extract_square_part(BigInt& n) {
  BigInt factor = 1;
  if (n <= 1) return factor;
  if (auto root = exact_sqrt(n)) {
    factor = *root;
    n = 1;
    return factor;
  }
  for (unsigned long p : small_primes()) {
    BigInt p2 = BigInt(p) * p;
    if (p2 > n) break;
    while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) {
      n /= p2;
      factor *= p;
    }
  }
  // The residue may itself have become square (e.g. 2^2*49 after pulling 2s).
  if (auto root = exact_sqrt(n)) {
    factor *= *root;
    n = 1;
  }
  return factor;
}

std::string decimal_string(const Rat& r, int digits) {
  if (sgn(r) == 0) return "0";
  mpf_class value(0, static_cast<unsigned>(digits) * 4 + 64);
  value = mpf_class(r.get_num(), value.get_prec()) / mpf_class(r.get_den(), value.get_prec());
  mp_exp_t exp10 = 0;
  std::string mantissa = value.get_str(exp10, 10, static_cast<size_t>(digits));
  bool neg = !mantissa.empty() && mantissa[0] == '-';
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

}  // namespace stabplane
