#include "stabplane/lepotier.hpp"

#include <random>

#include <doctest.h>

#include "stabplane/errors.hpp"

using namespace stabplane;

namespace {
Rat rr(long n, long d = 1) { return rat(n, d); }
}

TEST_CASE("curve build") {
  BundleForest forest;
  LPApprox depth0 = build_lp(forest, rr(-1), rr(1), 0);
  CHECK(depth0.pieces().size() == 9);  // integer slopes -4..4

  const CurvePiece* o_piece = depth0.covering(Surd(rr(0)));
  REQUIRE(o_piece != nullptr);
  CHECK(o_piece->owner.label == DyadicLabel::of(0, 0));
  CHECK(o_piece->s_begin() == Surd(rr(-3, 2), rr(1, 2), 5));
  CHECK(o_piece->s_end() == Surd(rr(3, 2), rr(-1, 2), 5));

  LPApprox depth1 = build_lp(forest, rr(-1), rr(1), 1);
  const CurvePiece* half_piece = depth1.covering(Surd(rr(1, 2)));
  REQUIRE(half_piece != nullptr);
  CHECK(half_piece->owner.label == DyadicLabel::of(1, 1));
  CHECK(half_piece->points.e_plus == ReducedPoint{rr(1, 2), rr(-1, 2)});
}

TEST_CASE("gap bound from the smallest omitted rank") {
  BundleForest forest;
  LPApprox depth1 = build_lp(forest, rr(0), rr(1), 1);
  CHECK(depth1.gap_bound() == rr(1, 50));  // rank five at the next level
  LPApprox depth2 = build_lp(forest, rr(0), rr(1), 2);
  CHECK(depth2.gap_bound() < depth1.gap_bound());
}

TEST_CASE("classification") {
  BundleForest forest;
  LPApprox approx = build_lp(forest, rr(-1), rr(1), 1);

  CHECK(classify(PlanePoint(rr(0), rr(1)), approx).above());

  GeoClassification slit = classify(PlanePoint(rr(0), rr(-1, 2)), approx);
  CHECK(slit.kind == GeoClassification::Kind::OnSegmentEEplus);
  REQUIRE(slit.owner);
  CHECK(slit.owner->label == DyadicLabel::of(0, 0));
  // the slit is closed at both ends
  CHECK(classify(PlanePoint(rr(0), rr(0)), approx).kind ==
        GeoClassification::Kind::OnSegmentEEplus);
  CHECK(classify(PlanePoint(rr(0), rr(-1)), approx).kind ==
        GeoClassification::Kind::OnSegmentEEplus);
  CHECK(classify(PlanePoint(rr(0), rr(-101, 100)), approx).kind ==
        GeoClassification::Kind::BelowCurve);
  CHECK(classify(PlanePoint(rr(0), rr(1, 100)), approx).above());

  // inside the notch, above both walls
  CHECK(classify(PlanePoint(rr(1, 100), rr(-9, 10)), approx).above());
  // on a wall is not above
  CHECK(classify(PlanePoint(rr(1, 10), rr(-17, 20)), approx).kind ==
        GeoClassification::Kind::BelowCurve);  // right wall of O: q = 3/2 s - 1

  // uncovered gap at depth 0: points hugging the parabola are uncertain
  LPApprox depth0 = build_lp(forest, rr(0), rr(1), 0);
  GeoClassification near = classify(PlanePoint(rr(9, 20), rr(-2, 5)), depth0);
  CHECK(near.kind == GeoClassification::Kind::UncertainNearCurve);
  CHECK(near.bound == depth0.gap_bound());
  // the same point is decided at depth 1 (covered by the rank-two notch)
  CHECK(classify(PlanePoint(rr(9, 20), rr(-2, 5)), approx).above());
}

TEST_CASE("above-curve is monotone in depth") {
  BundleForest forest;
  LPApprox shallow = build_lp(forest, rr(-1), rr(1), 2);
  LPApprox deep = build_lp(forest, rr(-1), rr(1), 5);
  std::mt19937_64 rng(21);
  auto pick = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  size_t uncertain_shallow = 0, uncertain_deep = 0;
  for (int i = 0; i < 500; ++i) {
    PlanePoint p(rat(pick(-100, 100), 100), rat(pick(-150, 100), 100));
    GeoClassification a = classify(p, shallow);
    GeoClassification b = classify(p, deep);
    if (a.above()) CHECK(b.above());
    if (b.kind == GeoClassification::Kind::BelowCurve)
      CHECK(a.kind != GeoClassification::Kind::AboveCurve);
    uncertain_shallow += a.kind == GeoClassification::Kind::UncertainNearCurve;
    uncertain_deep += b.kind == GeoClassification::Kind::UncertainNearCurve;
  }
  CHECK(uncertain_deep <= uncertain_shallow);
}

TEST_CASE("csv export shape") {
  BundleForest forest;
  LPApprox approx = build_lp(forest, rr(0), rr(1), 0);
  std::string csv = lp_csv(approx);
  CHECK(csv.rfind("owner,", 0) == 0);
  CHECK(csv.find("(-3/2,1/2,5)") != std::string::npos);  // exact left end of the O notch
  CHECK(csv.find("0.3819660112") != std::string::npos);  // decimal right end of the O notch
}
