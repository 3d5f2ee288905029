#pragma once

#include <vector>

#include "stabplane/gldim.hpp"

namespace stabplane {

// The segment of the line through a base point and a class that stays above
// the curve approximation. Endpoints are exact (possibly quadratic
// irrational); an endpoint that ran into the window edge instead of the
// curve is flagged unbounded. A vertical wall additionally stops below at
// the top of the owner slit it contains. Isolated non-geometric points the
// line merely passes through (a bundle point, a slit interior) do not end
// the segment.
struct Wall {
  Line line;
  PlanePoint lo, hi;  // ordered by s (by q for vertical walls)
  bool lo_unbounded = false, hi_unbounded = false;
  CharVector owner;
  GeometricSC base;
  unsigned depth = 0;

  Wall(Line l, PlanePoint lo_, PlanePoint hi_, CharVector owner_, GeometricSC base_)
      : line(std::move(l)), lo(std::move(lo_)), hi(std::move(hi_)),
        owner(std::move(owner_)), base(base_) {}

  // s-extent for non-vertical walls.
  Surd width() const { return hi.s - lo.s; }
};

// Clips the line through (sigma, v) against the curve approximation around
// sigma. sigma must be strictly above the curve. SkyscraperDirection
// propagates from the line construction.
Wall wall(const GeometricSC& sigma, const CharVector& v, const LPApprox& approx);

// Image of a wall under the canonical twist: endpoints slide along their
// parabolas three to the left, the owner class twists by -3.
Wall wall_twist(const Wall& w);

// Phase bracket of the chord cut by the line through (P, v) on the base
// parabola, read at Q. lo/hi are the sorted unit phases of the chord ends;
// the realized arc between them has length < 1 and may pass through the
// wrap at 1 (wraps). Phases of classes on the chord land inside the arc.
struct BayerBracket {
  double lo = 0, hi = 0;
  double arc_lo = 0, arc_hi = 0;  // continuous arc, arc_hi - arc_lo < 1
  bool degenerate = false;
  bool wraps = false;

  bool contains_unit(double phi, double tol = 1e-9) const;
};

// Requires P and Q strictly above the base parabola and v not of skyscraper
// direction. Tangency (vertical chord) yields a degenerate bracket.
BayerBracket bayer_bracket(const GeometricSC& P, const GeometricSC& Q, const CharVector& v);

}  // namespace stabplane
