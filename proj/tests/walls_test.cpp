#include "stabplane/walls.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

#include "stabplane/errors.hpp"

using namespace stabplane;

namespace {
Rat rr(long n, long d = 1) { return rat(n, d); }
}

TEST_CASE("wall clipped at the half parabola") {
  // The line q = -s/2 through a base inside the O notch: it runs along two
  // notch walls on the outside, so the clip lands exactly on the parabola at
  // s = (-1 +- sqrt 5)/2.
  BundleForest forest;
  LPApprox approx = build_lp(forest, rr(-2), rr(2), 1);
  Wall w = wall(GeometricSC{rr(1, 4), rr(-1, 8)}, {rr(1), rr(0), rr(0)}, approx);
  CHECK_FALSE(w.lo_unbounded);
  CHECK_FALSE(w.hi_unbounded);
  CHECK(w.lo.s == Surd(rr(-1, 2), rr(-1, 2), 5));
  CHECK(w.hi.s == Surd(rr(-1, 2), rr(1, 2), 5));
  // endpoints satisfy the curve equation exactly
  CHECK(cmp(delta_value(w.lo), Surd(rr(1, 2))) == 0);
  CHECK(cmp(delta_value(w.hi), Surd(rr(1, 2))) == 0);
  // and the line equation
  CHECK(w.line.eval(w.lo).sign() == 0);
  CHECK(w.line.eval(w.hi).sign() == 0);
}

TEST_CASE("vertical wall stops at the top of the slit") {
  BundleForest forest;
  LPApprox approx = build_lp(forest, rr(-2), rr(2), 1);
  Wall w = wall(GeometricSC{rr(0), rr(1)}, {rr(1), rr(0), rr(-5)}, approx);
  CHECK(w.line.is_vertical());
  CHECK(w.lo == PlanePoint(rr(0), rr(0)));  // the slit [O, O^+] blocks below
  CHECK(w.hi_unbounded);
}

TEST_CASE("wall twist") {
  BundleForest forest;
  LPApprox approx = build_lp(forest, rr(-2), rr(2), 1);
  GeometricSC sigma{rr(1, 4), rr(-1, 8)};
  CharVector v{rr(1), rr(0), rr(0)};
  Wall w = wall(sigma, v, approx);
  Wall wt = wall_twist(w);

  Line expected = line_through_char(twist_point(sigma.point()), twist(v, -3));
  CHECK(cmp(wt.line.alpha(), expected.alpha()) == 0);
  CHECK(cmp(wt.line.beta(), expected.beta()) == 0);
  CHECK(cmp(wt.line.gamma(), expected.gamma()) == 0);

  CHECK(wt.width() == w.width());
  CHECK(delta_value(wt.lo) == delta_value(w.lo));
  CHECK(delta_value(wt.hi) == delta_value(w.hi));
  CHECK(wt.owner == twist(v, -3));
}

TEST_CASE("chord widths agree through the twist, wall route") {
  BundleForest forest;
  std::mt19937_64 rng(51);
  auto pick = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  int done = 0;
  for (int i = 0; done < 30 && i < 300; ++i) {
    PlanePoint sigma(rat(pick(-8, 8), 5), rat(pick(-8, 8), 5));
    CharVector v{rat(pick(-4, 4)), rat(pick(-6, 6)), rat(pick(-6, 6), 2)};
    if (sgn(v.ch0) == 0 && sgn(v.ch1) == 0) continue;
    if (sgn(v.ch0) != 0 && PlanePoint(reduce(v)) == sigma) continue;
    try {
      auto [w, wt] = horizontal_distance_pair(sigma, v);
      CHECK(w == wt);
      ++done;
    } catch (const NoIntersection&) {
    }
  }
  CHECK(done == 30);
}

TEST_CASE("bracket at the worked example") {
  GeometricSC P{rr(0), rr(1)}, Q{rr(0), rr(2)};
  BayerBracket bracket = bayer_bracket(P, Q, {rr(1), rr(1), rr(1, 2)});
  CHECK_FALSE(bracket.degenerate);
  CHECK(bracket.lo == doctest::Approx(0.18717).epsilon(1e-4));
  CHECK(bracket.hi == doctest::Approx(0.5).epsilon(1e-9));
  // the chord passes right below Q, so the realized arc runs through 1
  CHECK(bracket.wraps);
  CHECK(bracket.contains_unit(1.0));
  CHECK(bracket.contains_unit(0.7));
  CHECK_FALSE(bracket.contains_unit(0.3));
}

TEST_CASE("degenerate bracket on a vertical chord") {
  GeometricSC P{rr(0), rr(1)}, Q{rr(0), rr(2)};
  BayerBracket bracket = bayer_bracket(P, Q, {rr(1), rr(0), rr(0)});
  CHECK(bracket.degenerate);
  CHECK(bracket.lo == bracket.hi);
}

TEST_CASE("bracket preconditions") {
  CHECK_THROWS_AS(bayer_bracket(GeometricSC{rr(0), rr(-1)}, GeometricSC{rr(0), rr(2)},
                                CharVector{rr(1), rr(0), rr(0)}),
                  InvalidParams);
  CHECK_THROWS_AS(bayer_bracket(GeometricSC{rr(0), rr(1)}, GeometricSC{rr(0), rr(2)},
                                CharVector{rr(0), rr(0), rr(1)}),
                  SkyscraperDirection);
}

TEST_CASE("phases of chord classes stay inside the bracket") {
  std::mt19937_64 rng(52);
  auto pick = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  int done = 0;
  for (int i = 0; done < 60 && i < 600; ++i) {
    Rat sp = rat(pick(-15, 15), 10), sq = rat(pick(-15, 15), 10);
    GeometricSC P{sp, Rat(sp * sp / 2 + rat(pick(1, 25), 10))};
    GeometricSC Q{sq, Rat(sq * sq / 2 + rat(pick(1, 25), 10))};
    CharVector v{rat(pick(-4, 4)), rat(pick(-6, 6)), rat(pick(-6, 6), 2)};
    if (sgn(v.ch0) == 0 && sgn(v.ch1) == 0) continue;
    if (sgn(v.ch0) != 0 && reduce(v).s == P.s && reduce(v).q == P.q) continue;
    Line line = line_through_char(P.point(), v);
    if (orientation(Q.point(), line) == Orientation::On) continue;  // phase of Q itself undefined
    BayerBracket bracket = bayer_bracket(P, Q, v);
    if (bracket.degenerate) continue;
    auto roots = intersect_line_parabola(line, Parabola{rr(0)});
    REQUIRE(roots.size() == 2);
    for (int k = 0; k <= 8; ++k) {
      Surd t(rat(k, 8));
      PlanePoint x(roots[0].s + (roots[1].s - roots[0].s) * t,
                   roots[0].q + (roots[1].q - roots[0].q) * t);
      CHECK(bracket.contains_unit(phase_in_unit(Q, x)));
    }
    ++done;
  }
  CHECK(done == 60);
}
