#include "stabplane/walls.hpp"

#include <algorithm>
#include <cmath>

#include "stabplane/errors.hpp"

namespace stabplane {

namespace {

constexpr double kPi = 3.14159265358979323846;

// q of a non-vertical normalized line at s (beta = 1).
Surd line_q_at(const Line& line, const Surd& s) {
  return -(line.alpha() * s) - line.gamma();
}

struct Clipper {
  const Line& line;
  const LPApprox& approx;
  std::vector<Surd> hits;

  void touch(const Surd& s) { hits.push_back(s); }

  // Intersection of the wall line with a curve segment, transversal or
  // coincident. Segment bounds are given in s.
  void against_segment(const Line& support, const Surd& s_lo, const Surd& s_hi) {
    if (line.is_vertical()) {
      Surd s = -line.gamma();
      if (cmp(s, s_lo) >= 0 && cmp(s, s_hi) <= 0) touch(s);
      return;
    }
    // both lines normalized with beta = 1
    Surd da = line.alpha() - support.alpha();
    if (da.sign() == 0) {
      if ((line.gamma() - support.gamma()).sign() == 0) {
        touch(s_lo);
        touch(s_hi);
      }
      return;
    }
    Surd s = (support.gamma() - line.gamma()) / da;
    if (cmp(s, s_lo) >= 0 && cmp(s, s_hi) <= 0) touch(s);
  }

  void collect() {
    const auto& pieces = approx.pieces();
    for (const CurvePiece& piece : pieces) {
      Surd s_mid(piece.owner.slope());
      against_segment(piece.left_wall, piece.s_begin(), s_mid);
      against_segment(piece.right_wall, s_mid, piece.s_end());
    }
    // parabola crossings inside gaps
    if (!line.is_vertical() && line.has_rational_coeffs()) {
      for (const PlanePoint& root : intersect_line_parabola(line, Parabola{rat(1, 2)})) {
        if (approx.covering(root.s) == nullptr) touch(root.s);
      }
    }
  }
};

}  // namespace

Wall wall(const GeometricSC& sigma, const CharVector& v, const LPApprox& approx) {
  GeoClassification cls = classify(sigma.point(), approx);
  if (!cls.above()) throw NotGeometric("wall base must lie above the curve");

  Line line = line_through_char(sigma.point(), v);
  Clipper clip{line, approx, {}};
  clip.collect();

  if (line.is_vertical()) {
    // Clipped below by the curve or by the top of the slit the line contains;
    // unbounded above (capped for output at a fixed rise above the base).
    Surd s0 = -line.gamma();
    Surd floor_q;
    if (const CurvePiece* piece = approx.covering(s0)) {
      ReducedPoint e = piece->owner.reduced();
      if (s0.is_rational() && s0.rational() == e.s) {
        floor_q = Surd(e.q);  // slit top
      } else {
        const Line& support = cmp(s0, Surd(e.s)) < 0 ? piece->left_wall : piece->right_wall;
        floor_q = line_q_at(support, s0);
      }
    } else {
      floor_q = s0 * s0 / Surd(rat(2)) - Surd(rat(1, 2));
    }
    PlanePoint lo(s0, floor_q);
    PlanePoint hi(s0, Surd(Rat(sigma.q + 5)));
    Wall w(line, lo, hi, v, sigma);
    w.hi_unbounded = true;
    w.depth = approx.depth();
    return w;
  }

  Surd s_sigma(sigma.s);
  Surd best_lo, best_hi;
  bool have_lo = false, have_hi = false;
  for (const Surd& s : clip.hits) {
    int c = cmp(s, s_sigma);
    if (c < 0 && (!have_lo || cmp(s, best_lo) > 0)) {
      best_lo = s;
      have_lo = true;
    } else if (c > 0 && (!have_hi || cmp(s, best_hi) < 0)) {
      best_hi = s;
      have_hi = true;
    }
  }
  Surd edge_lo(Rat(approx.s_min() - 3)), edge_hi(Rat(approx.s_max() + 3));
  bool lo_unbounded = !have_lo || cmp(best_lo, edge_lo) < 0;
  bool hi_unbounded = !have_hi || cmp(best_hi, edge_hi) > 0;
  if (lo_unbounded) best_lo = edge_lo;
  if (hi_unbounded) best_hi = edge_hi;

  PlanePoint lo(best_lo, line_q_at(line, best_lo));
  PlanePoint hi(best_hi, line_q_at(line, best_hi));
  Wall w(line, std::move(lo), std::move(hi), v, sigma);
  w.lo_unbounded = lo_unbounded;
  w.hi_unbounded = hi_unbounded;
  w.depth = approx.depth();
  return w;
}

Wall wall_twist(const Wall& w) {
  PlanePoint lo = twist_point(w.lo);
  PlanePoint hi = twist_point(w.hi);
  GeometricSC base{Rat(w.base.s - 3), Rat(w.base.q - 3 * w.base.s + rat(9, 2))};
  Line line = Line::through(lo, hi);
  Wall out(std::move(line), std::move(lo), std::move(hi), twist(w.owner, -3), base);
  out.lo_unbounded = w.lo_unbounded;
  out.hi_unbounded = w.hi_unbounded;
  out.depth = w.depth;
  return out;
}

bool BayerBracket::contains_unit(double phi, double tol) const {
  for (int k = -1; k <= 1; ++k) {
    double x = phi + k;
    if (x >= arc_lo - tol && x <= arc_hi + tol) return true;
  }
  return false;
}

BayerBracket bayer_bracket(const GeometricSC& P, const GeometricSC& Q, const CharVector& v) {
  if (sgn(P.delta()) >= 0 || sgn(Q.delta()) >= 0)
    throw InvalidParams("bracket base points must lie above the base parabola");
  Line line = line_through_char(P.point(), v);
  auto roots = intersect_line_parabola(line, Parabola{rat(0)});
  if (roots.empty())
    throw NoIntersection("chord missing: base point not above the parabola?");

  BayerBracket out;
  if (roots.size() == 1) {
    double phi = phase_in_unit(Q, roots[0]);
    out.lo = out.hi = out.arc_lo = out.arc_hi = phi;
    out.degenerate = true;
    return out;
  }
  const PlanePoint& C = roots[0];
  const PlanePoint& D = roots[1];
  double phi_c = phase_in_unit(Q, C);
  double phi_d = phase_in_unit(Q, D);
  out.lo = std::min(phi_c, phi_d);
  out.hi = std::max(phi_c, phi_d);

  // Continuous arc from C to D: rotate Z_Q(C) onto Z_Q(D); |rel| < pi because
  // the chord does not contain Q.
  double c_re = to_double(Q.q) - C.q.to_double();
  double c_im = C.s.to_double() - to_double(Q.s);
  double d_re = to_double(Q.q) - D.q.to_double();
  double d_im = D.s.to_double() - to_double(Q.s);
  double rel = std::atan2(c_re * d_im - c_im * d_re, c_re * d_re + c_im * d_im) / kPi;
  double end = phi_c + rel;
  out.arc_lo = std::min(phi_c, end);
  out.arc_hi = std::max(phi_c, end);
  out.wraps = out.arc_lo <= 0.0 || out.arc_hi > 1.0;
  return out;
}

}  // namespace stabplane
