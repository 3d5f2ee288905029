#include "stabplane/plane.hpp"

#include "stabplane/errors.hpp"

namespace stabplane {

PlanePoint::PlanePoint(Surd s_, Surd q_) : s(std::move(s_)), q(std::move(q_)) {
  if (!s.compatible(q)) throw FieldMismatch();
}

Line::Line(Surd alpha, Surd beta, Surd gamma)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
  if (beta_.sign() != 0) {
    alpha_ = alpha_ / beta_;
    gamma_ = gamma_ / beta_;
    beta_ = Surd(rat(1));
  } else if (alpha_.sign() != 0) {
    gamma_ = gamma_ / alpha_;
    alpha_ = Surd(rat(1));
  } else {
    throw InvalidParams("degenerate line (alpha = beta = 0)");
  }
}

Line Line::through(const PlanePoint& p, const PlanePoint& r) {
  if (p == r) throw InvalidParams("two coincident points do not define a line");
  Surd alpha = r.q - p.q;
  Surd beta = p.s - r.s;
  Surd gamma = (r.s - p.s) * p.q - (r.q - p.q) * p.s;
  return Line(std::move(alpha), std::move(beta), std::move(gamma));
}

Line Line::point_slope(const PlanePoint& p, const Rat& slope) {
  // q - q0 = m (s - s0), rearranged with beta normalized positive.
  Surd alpha = Surd(Rat(-slope));
  Surd beta = Surd(rat(1));
  Surd gamma = Surd(Rat(slope)) * p.s - p.q;
  return Line(std::move(alpha), std::move(beta), std::move(gamma));
}

Line Line::vertical(const Surd& s) { return Line(Surd(rat(1)), Surd(), -s); }

Surd Line::eval(const PlanePoint& p) const {
  return alpha_ * p.s + beta_ * p.q + gamma_;
}

Surd Line::slope() const {
  if (is_vertical()) throw InvalidParams("vertical line has no slope");
  return -alpha_ / beta_;
}

Surd delta_value(const PlanePoint& p) { return p.s * p.s / Surd(rat(2)) - p.q; }

Line line_through_char(const PlanePoint& sigma, const CharVector& v) {
  if (sgn(v.ch0) != 0) return Line::through(sigma, PlanePoint(reduce(v)));
  if (sgn(v.ch1) == 0) throw SkyscraperDirection();
  return Line::point_slope(sigma, Rat(v.ch2 / v.ch1));
}

std::vector<PlanePoint> intersect_line_parabola(const Line& line, const Parabola& par) {
  std::vector<PlanePoint> out;
  if (line.is_vertical()) {
    // alpha = 1 after normalization, so s = -gamma.
    Surd s = -line.gamma();
    Surd q = s * s / Surd(rat(2)) - Surd(par.a);
    out.emplace_back(s, q);
    return out;
  }
  if (!line.has_rational_coeffs())
    throw InvalidParams("parabola intersection needs a rational line");
  // s^2 + 2*alpha*s + 2*(gamma - a) = 0 with beta = 1.
  Rat A = line.alpha().rational();
  Rat C = line.gamma().rational();
  Rat disc = A * A - 2 * C + 2 * par.a;
  int ds = sgn(disc);
  if (ds < 0) return out;
  if (ds == 0) {
    Rat s = -A;
    out.emplace_back(PlanePoint(s, Rat(s * s / 2 - par.a)));
    return out;
  }
  Surd root = Surd::sqrt_rat(disc);
  Surd minus_a = Surd(Rat(-A));
  for (const Surd& s : {minus_a - root, minus_a + root}) {
    Surd q = s * s / Surd(rat(2)) - Surd(par.a);
    out.emplace_back(s, q);
  }
  return out;
}

PlanePoint twist_point(const PlanePoint& p) {
  Surd s = p.s - Surd(rat(3));
  Surd q = p.q - Surd(rat(3)) * p.s + Surd(rat(9, 2));
  return PlanePoint(std::move(s), std::move(q));
}

Segment twist_segment(const Segment& seg) {
  return {twist_point(seg.a), twist_point(seg.b)};
}

Orientation orientation(const PlanePoint& p, const Line& line) {
  int sign = line.eval(p).sign();
  if (sign > 0) return Orientation::Above;
  if (sign < 0) return Orientation::Below;
  return Orientation::On;
}

bool on_segment(const PlanePoint& p, const PlanePoint& a, const PlanePoint& b) {
  if (a == b) return p == a;
  if (orientation(p, Line::through(a, b)) != Orientation::On) return false;
  int cs_a = cmp(p.s, a.s), cs_b = cmp(p.s, b.s);
  int cq_a = cmp(p.q, a.q), cq_b = cmp(p.q, b.q);
  bool s_between = cs_a == 0 || cs_b == 0 || cs_a != cs_b;
  bool q_between = cq_a == 0 || cq_b == 0 || cq_a != cq_b;
  return s_between && q_between;
}

PolygonLocation point_in_polygon(const PlanePoint& p, const std::vector<PlanePoint>& vertices) {
  const size_t n = vertices.size();
  if (n < 3) throw InvalidParams("polygon needs at least three vertices");
  for (size_t i = 0; i < n; ++i) {
    if (on_segment(p, vertices[i], vertices[(i + 1) % n])) return PolygonLocation::Boundary;
  }
  // Ray cast straight up from p; parity of crossings, half-open in s so a
  // crossing at a shared vertex is counted once.
  bool inside = false;
  for (size_t i = 0; i < n; ++i) {
    const PlanePoint& u = vertices[i];
    const PlanePoint& v = vertices[(i + 1) % n];
    bool u_le = cmp(u.s, p.s) <= 0;
    bool v_le = cmp(v.s, p.s) <= 0;
    if (u_le == v_le) continue;
    // Edge straddles the vertical through p; is the crossing above p?
    Surd ds = v.s - u.s;
    Surd cross = (u.q - p.q) * ds + (v.q - u.q) * (p.s - u.s);
    if (cross.sign() * ds.sign() > 0) inside = !inside;
  }
  return inside ? PolygonLocation::Inside : PolygonLocation::Outside;
}

namespace {

Surd chord_width(const Line& line) {
  auto roots = intersect_line_parabola(line, Parabola{rat(0)});
  if (roots.empty()) throw NoIntersection();
  if (roots.size() == 1) return Surd();
  return roots[1].s - roots[0].s;
}

}  // namespace

std::pair<Surd, Surd> horizontal_distance_pair(const PlanePoint& sigma, const CharVector& v) {
  if (!sigma.is_rational())
    throw InvalidParams("horizontal distance needs a rational base point");
  Surd width = chord_width(line_through_char(sigma, v));
  Surd width_twisted = chord_width(line_through_char(twist_point(sigma), twist(v, -3)));
  return {width, width_twisted};
}

}  // namespace stabplane
