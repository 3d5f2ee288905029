#pragma once

#include <optional>
#include <vector>

#include "stabplane/exceptional.hpp"

namespace stabplane {

// One notch of the curve: the two segments (el_curve -> e_plus) and
// (e_plus -> er_curve) of the bundle's notch, with their rational support
// lines (slopes s_E -/+ 3/2). Segments lie weakly below the level-1/2
// parabola and meet it exactly at the surd endpoints.
struct CurvePiece {
  ExceptionalBundle owner;
  FivePoints points;
  Line left_wall, right_wall;

  CurvePiece(ExceptionalBundle owner_, FivePoints points_);

  const Surd& s_begin() const { return points.el_curve.s; }
  const Surd& s_end() const { return points.er_curve.s; }
};

// Depth-m approximation of the curve over a slope window. In gaps between
// pieces the curve is taken to be the level-1/2 parabola; gap_bound is the
// largest amount (in q) by which an omitted deeper notch can hang below it,
// 1/(2 rk^2) for the smallest omitted rank.
class LPApprox {
 public:
  LPApprox(unsigned depth, Rat s_min, Rat s_max, std::vector<CurvePiece> pieces, Rat gap_bound);

  unsigned depth() const { return depth_; }
  const Rat& s_min() const { return s_min_; }
  const Rat& s_max() const { return s_max_; }
  const std::vector<CurvePiece>& pieces() const { return pieces_; }
  const Rat& gap_bound() const { return gap_bound_; }

  // The unique piece with s in [s_begin, s_end], if any.
  const CurvePiece* covering(const Surd& s) const;

 private:
  unsigned depth_;
  Rat s_min_, s_max_;
  std::vector<CurvePiece> pieces_;  // s-sorted, pairwise disjoint interiors
  Rat gap_bound_;
};

LPApprox build_lp(BundleForest& forest, const Rat& s_min, const Rat& s_max, unsigned depth);

struct GeoClassification {
  enum class Kind { AboveCurve, BelowCurve, OnSegmentEEplus, UncertainNearCurve };

  Kind kind;
  std::optional<ExceptionalBundle> owner;  // set for OnSegmentEEplus
  Rat bound;                               // set for UncertainNearCurve

  bool above() const { return kind == Kind::AboveCurve; }
};

// Conservative placement of a point against the depth-m curve:
//  - AboveCurve: strictly above every covering piece and strictly above the
//    level-1/2 parabola in gaps, and not on the covering bundle's vertical
//    segment [E, E^+]. Monotone in depth: deeper pieces only hang lower.
//  - OnSegmentEEplus: s equals a generated bundle's slope exactly and q lies
//    in [q(E^+), q(E)]. Only decidable for generated bundles.
//  - UncertainNearCurve: within gap_bound of the parabola in a gap, where an
//    omitted notch might (or might not) reach.
//  - BelowCurve: decidedly not above (includes points exactly on a piece).
GeoClassification classify(const PlanePoint& p, const LPApprox& approx);

// CSV rows: owner, el_curve and er_curve as 30-digit decimals plus exact
// (a,b,d) triples, e_plus exact.
std::string lp_csv(const LPApprox& approx);

}  // namespace stabplane
