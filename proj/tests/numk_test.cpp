#include "stabplane/numk.hpp"

#include <random>

#include <doctest.h>

#include "stabplane/errors.hpp"

using namespace stabplane;

namespace {

// Independent oracle for chi(O, O(d)) on the plane: for d >= 0 the dimension
// of degree-d forms in three variables (higher cohomology vanishes); zero in
// the gap -1, -2; dual count for d <= -3. Counted by brute enumeration, not
// by a formula, so it cannot share a bug with the pairing.
long chi_line_bundle_oracle(long d) {
  auto monomials = [](long degree) {
    long count = 0;
    for (long i = 0; i <= degree; ++i)
      for (long j = 0; i + j <= degree; ++j) ++count;  // k is forced
    return count;
  };
  if (d >= 0) return monomials(d);
  if (d >= -2) return 0;
  return monomials(-d - 3);  // h^2 by duality, sign (+) from even degree
}

CharVector line(long n) {
  Rat nn = rat(n);
  return {rat(1), nn, Rat(nn * nn / 2)};
}

CharVector rand_char(std::mt19937_64& rng, bool nonzero_rank = false) {
  auto pick = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  long r = pick(-7, 7);
  if (nonzero_rank && r == 0) r = 2;
  return {rat(r), rat(pick(-9, 9)), rat(pick(-9, 9), 2)};
}

}  // namespace

TEST_CASE("euler pairing matches the cohomology oracle on line bundles") {
  for (long d = -8; d <= 8; ++d) {
    CAPTURE(d);
    CHECK(euler_pairing(line(0), line(d)) == rat(chi_line_bundle_oracle(d)));
  }
  // the four pinned values
  CHECK(euler_pairing(line(0), line(0)) == 1);
  CHECK(euler_pairing(line(0), line(1)) == 3);
  CHECK(chi_line_bundle_oracle(1) == 3);
  CHECK(euler_pairing(line(1), line(0)) == 0);
  CHECK(chi_line_bundle_oracle(-1) == 0);
  CHECK(euler_pairing(line(0), line(3)) == 10);
  CHECK(euler_pairing(line(0), line(3)) == 1 + 9 * euler_pairing(line(0), line(0)));
}

TEST_CASE("reduce") {
  ReducedPoint p = reduce({rat(2), rat(1), rat(-1, 2)});
  CHECK(p.s == rat(1, 2));
  CHECK(p.q == rat(-1, 4));
  CHECK(reduce({rat(1), rat(0), rat(0)}) == ReducedPoint{rat(0), rat(0)});
  CHECK_THROWS_AS(reduce({rat(0), rat(0), rat(1)}), Ch0Zero);
}

TEST_CASE("twist") {
  CHECK(twist(line(0), 1) == line(1));
  ReducedPoint p = reduce(twist(line(0), -3));
  CHECK(p.s == rat(-3));
  CHECK(p.q == rat(9, 2));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    CharVector v = rand_char(rng);
    long n = static_cast<long>(rng() % 9) - 4;
    long m = static_cast<long>(rng() % 9) - 4;
    CHECK(twist(twist(v, n), -n) == v);
    CHECK(twist(v, n + m) == twist(twist(v, n), m));
  }
}

TEST_CASE("serre twist") {
  CHECK(serre_twist({rat(0), rat(0), rat(1)}) == CharVector{rat(0), rat(0), rat(1)});
  CHECK(serre_twist(line(0)) == line(-3));

  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    CharVector a = rand_char(rng), b = rand_char(rng);
    CHECK(euler_pairing(a, b) == euler_pairing(b, serre_twist(a)));
  }
}

TEST_CASE("shift and dual") {
  CHECK(shift({rat(1), rat(2), rat(1)}, 1) == CharVector{rat(-1), rat(-2), rat(-1)});
  CHECK(shift({rat(1), rat(2), rat(1)}, 2) == CharVector{rat(1), rat(2), rat(1)});
  CHECK(reduce(shift({rat(2), rat(1), rat(-1, 2)}, 1)) == ReducedPoint{rat(1, 2), rat(-1, 4)});

  CHECK(dual({rat(2), rat(1), rat(-1, 2)}) == CharVector{rat(2), rat(-1), rat(-1, 2)});
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    CharVector a = rand_char(rng), b = rand_char(rng);
    CHECK(dual(dual(a)) == a);
    CHECK(euler_pairing(dual(b), dual(a)) == euler_pairing(a, b));
  }
}

TEST_CASE("pairing is bilinear and restricts to the point formula") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 60; ++i) {
    CharVector a = rand_char(rng), b = rand_char(rng), c = rand_char(rng);
    Rat al = rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
    CharVector combo{Rat(al * a.ch0 + b.ch0), Rat(al * a.ch1 + b.ch1), Rat(al * a.ch2 + b.ch2)};
    CHECK(euler_pairing(combo, c) == al * euler_pairing(a, c) + euler_pairing(b, c));
    CHECK(euler_pairing(c, combo) == al * euler_pairing(c, a) + euler_pairing(c, b));

    CharVector v = rand_char(rng, true);
    ReducedPoint p = reduce(v);
    CHECK(euler_pairing(v, v) == v.ch0 * v.ch0 * (1 - p.s * p.s + 2 * p.q));
  }
}

TEST_CASE("lattice validator") {
  CHECK(is_sheaf_lattice({rat(2), rat(-1), rat(-1, 2)}));
  CHECK(is_sheaf_lattice({rat(0), rat(0), rat(1)}));
  CHECK_FALSE(is_sheaf_lattice({rat(1, 2), rat(0), rat(0)}));
  CHECK_FALSE(is_sheaf_lattice({rat(1), rat(0), rat(1, 3)}));
}
