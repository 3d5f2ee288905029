#pragma once

#include <utility>
#include <vector>

#include "stabplane/numk.hpp"
#include "stabplane/surd.hpp"

namespace stabplane {

// A point of the affine (s, q)-plane. Both coordinates live in one quadratic
// extension: either coordinate may be rational, but two genuinely different
// radicands in one point are rejected.
struct PlanePoint {
  Surd s, q;

  PlanePoint() = default;
  PlanePoint(Surd s_, Surd q_);
  PlanePoint(const Rat& s_, const Rat& q_) : s(s_), q(q_) {}
  explicit PlanePoint(const ReducedPoint& p) : s(p.s), q(p.q) {}

  bool is_rational() const { return s.is_rational() && q.is_rational(); }

  friend bool operator==(const PlanePoint& x, const PlanePoint& y) {
    return x.s == y.s && x.q == y.q;
  }
};

struct Segment {
  PlanePoint a, b;
};

// Oriented line alpha*s + beta*q + gamma = 0, normalized so that the positive
// side is "Above": beta = 1 for non-vertical lines (larger q above), and for
// vertical lines alpha = 1 (larger s counts as above; used only by clipping).
// Coefficients are rational whenever the line comes from rational data.
class Line {
 public:
  static Line through(const PlanePoint& p, const PlanePoint& r);
  static Line point_slope(const PlanePoint& p, const Rat& slope);
  static Line vertical(const Surd& s);

  const Surd& alpha() const { return alpha_; }
  const Surd& beta() const { return beta_; }
  const Surd& gamma() const { return gamma_; }

  bool is_vertical() const { return beta_.sign() == 0; }
  bool has_rational_coeffs() const {
    return alpha_.is_rational() && beta_.is_rational() && gamma_.is_rational();
  }

  // alpha*s + beta*q + gamma, the signed position of p.
  Surd eval(const PlanePoint& p) const;

  // Slope -alpha/beta; requires a non-vertical line.
  Surd slope() const;

 private:
  Line(Surd alpha, Surd beta, Surd gamma);

  Surd alpha_, beta_, gamma_;
};

// Parabola (1/2)s^2 - q = a.
struct Parabola {
  Rat a;
};

// (1/2)s^2 - q, the parabola level of a point.
Surd delta_value(const PlanePoint& p);

// Line attached to a class at a point: through sigma and the reduced
// character when ch0 != 0, through sigma with slope ch2/ch1 when ch0 = 0.
// Throws SkyscraperDirection for (0,0,*) and InvalidParams when the reduced
// character coincides with sigma.
Line line_through_char(const PlanePoint& sigma, const CharVector& v);

// Exact roots, sorted by s. Empty when the line misses the parabola; one
// point for verticals and tangents. Requires rational line coefficients
// except in the vertical case.
std::vector<PlanePoint> intersect_line_parabola(const Line& line, const Parabola& par);

// (s, q) -> (s - 3, q - 3s + 9/2); slides a point along its parabola.
PlanePoint twist_point(const PlanePoint& p);
Segment twist_segment(const Segment& seg);

enum class Orientation { Above, On, Below };
Orientation orientation(const PlanePoint& p, const Line& line);

enum class PolygonLocation { Inside, Boundary, Outside };

bool on_segment(const PlanePoint& p, const PlanePoint& a, const PlanePoint& b);

// Exact location of p relative to a simple polygon (vertices in order, no
// repetition of the first vertex). Handles non-convex polygons; the region
// pentagons have a reflex vertex, so convexity cannot be assumed.
PolygonLocation point_in_polygon(const PlanePoint& p, const std::vector<PlanePoint>& vertices);

// Chord widths on the base parabola of the line through (sigma, v) and of its
// twist by the canonical class: (s(B)-s(A), s(B~)-s(A~)). The two components
// agree; callers may assert it. Tangent and vertical cases yield width zero.
// Throws NoIntersection when either line misses the parabola. sigma must be
// rational so that the chords stay inside one quadratic extension.
std::pair<Surd, Surd> horizontal_distance_pair(const PlanePoint& sigma, const CharVector& v);

}  // namespace stabplane
