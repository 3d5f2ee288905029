#include "stabplane/stability.hpp"

#include <cmath>

#include "stabplane/errors.hpp"

namespace stabplane {

namespace {

constexpr double kPi = 3.14159265358979323846;

ReducedPoint e_plus_of(const ExceptionalBundle& b) {
  ReducedPoint p = b.reduced();
  return {p.s, Rat(p.q - 1 / (b.ch.ch0 * b.ch.ch0))};
}

ReducedPoint left_mutation_point(const ExceptionalBundle& b) {
  return reduce(left_mutation_class(b.ch, twist(b.ch, 3)));
}

ReducedPoint right_mutation_point(const ExceptionalBundle& b) {
  return reduce(right_mutation_class(twist(b.ch, -3), b.ch));
}

}  // namespace

GeometricSC make_geometric(const Rat& s, const Rat& q, const LPApprox& approx) {
  GeometricSC sc{s, q};
  GeoClassification cls = classify(sc.point(), approx);
  if (!cls.above()) throw NotGeometric("(" + to_string(s) + "," + to_string(q) +
                                       ") is not above the curve at this depth");
  return sc;
}

CentralCharge central_charge(const GeometricSC& sc, const CharVector& v) {
  return {Rat(-v.ch2 + sc.q * v.ch0), Rat(v.ch1 - sc.s * v.ch0)};
}

double phase_in_unit(const CentralCharge& z) {
  if (sgn(z.re) == 0 && sgn(z.im) == 0) throw ZeroCharge();
  double phi = std::atan2(to_double(z.im), to_double(z.re)) / kPi;
  if (phi <= 0.0) phi += 1.0;
  return phi;
}

double phase_in_unit(const GeometricSC& sc, const CharVector& v) {
  return phase_in_unit(central_charge(sc, v));
}

double phase_in_unit(const GeometricSC& sc, const PlanePoint& p) {
  double re = to_double(sc.q) - p.q.to_double();
  double im = p.s.to_double() - to_double(sc.s);
  if (re == 0.0 && im == 0.0) throw ZeroCharge();
  double phi = std::atan2(im, re) / kPi;
  if (phi <= 0.0) phi += 1.0;
  return phi;
}

void validate_params(const AlgebraicSC& sc) {
  if (!(sc.m1 > 0 && sc.m2 > 0 && sc.m3 > 0))
    throw InvalidParams("masses must be positive");
  if (!(sc.phi1 < sc.phi2 && sc.phi2 < sc.phi3 && sc.phi1 + 1 < sc.phi3))
    throw InvalidParams("phases must satisfy phi1 < phi2 < phi3 and phi1 + 1 < phi3");
}

std::string to_string(RegionKind k) {
  switch (k) {
    case RegionKind::Core: return "Core";
    case RegionKind::LeftLeg: return "LeftLeg";
    case RegionKind::RightLeg: return "RightLeg";
    case RegionKind::Outside: return "Outside";
    case RegionKind::Uncertain: return "Uncertain";
  }
  return "?";
}

MZTag classify_mz(const PlanePoint& p, const ExceptionalTriple& t) {
  ReducedPoint p1 = t.e1.reduced(), p2 = t.e2.reduced(), p3 = t.e3.reduced();
  std::vector<PlanePoint> mz = {PlanePoint(p1), PlanePoint(e_plus_of(t.e1)), PlanePoint(p2),
                                PlanePoint(e_plus_of(t.e3)), PlanePoint(p3)};
  if (point_in_polygon(p, mz) != PolygonLocation::Inside) return {RegionKind::Outside, {}};

  // Inside the open region: the cut segments themselves belong to the legs.
  Line left_cut = Line::through(PlanePoint(p3), PlanePoint(left_mutation_point(t.e3)));
  if (cmp(p.s, Surd(p3.s)) < 0 && orientation(p, left_cut) != Orientation::Above)
    return {RegionKind::LeftLeg, t.e3};
  Line right_cut = Line::through(PlanePoint(p1), PlanePoint(right_mutation_point(t.e1)));
  if (cmp(p.s, Surd(p1.s)) > 0 && orientation(p, right_cut) != Orientation::Above)
    return {RegionKind::RightLeg, t.e1};
  return {RegionKind::Core, {}};
}

RegionFinder::RegionFinder(BundleForest& forest, const Rat& s_min, const Rat& s_max,
                           unsigned depth) {
  long long lo = floor_rat(Rat(s_min - 4)).get_si();
  long long hi = floor_rat(Rat(s_max + 4)).get_si() + 1;
  auto add = [&](TripleShape shape) {
    for (unsigned level = 0; level <= depth; ++level) {
      long long span = 1LL << level;
      for (long long p = lo * span; p <= hi * span; ++p) {
        if (level > 0 && p % 2 == 0) continue;
        ExceptionalTriple t = make_triple(DyadicLabel::of(p, level), shape, forest);
        Entry e{t,
                t.e1.slope(),
                t.e3.slope(),
                {PlanePoint(t.e1.reduced()), PlanePoint(e_plus_of(t.e1)),
                 PlanePoint(t.e2.reduced()), PlanePoint(e_plus_of(t.e3)),
                 PlanePoint(t.e3.reduced())},
                Line::through(PlanePoint(t.e3.reduced()),
                              PlanePoint(left_mutation_point(t.e3))),
                Line::through(PlanePoint(t.e1.reduced()),
                              PlanePoint(right_mutation_point(t.e1)))};
        entries_.push_back(std::move(e));
      }
    }
  };
  add(TripleShape::Consecutive);
  add(TripleShape::RightTwisted);
  add(TripleShape::LeftTwisted);
}

RegionResult RegionFinder::find(const PlanePoint& p, const LPApprox& approx) const {
  GeoClassification cls = classify(p, approx);
  if (cls.kind == GeoClassification::Kind::UncertainNearCurve)
    return {{RegionKind::Uncertain, {}}, {}};
  if (!cls.above()) throw NotGeometric();

  for (const Entry& e : entries_) {
    if (!(cmp(p.s, Surd(e.s1)) > 0 && cmp(p.s, Surd(e.s3)) < 0)) continue;
    if (point_in_polygon(p, e.mz) != PolygonLocation::Inside) continue;
    ReducedPoint p1 = e.triple.e1.reduced(), p3 = e.triple.e3.reduced();
    if (cmp(p.s, Surd(p3.s)) < 0 && orientation(p, e.left_cut) != Orientation::Above)
      return {{RegionKind::LeftLeg, e.triple.e3}, e.triple};
    if (cmp(p.s, Surd(p1.s)) > 0 && orientation(p, e.right_cut) != Orientation::Above)
      return {{RegionKind::RightLeg, e.triple.e1}, e.triple};
    return {{RegionKind::Core, {}}, e.triple};
  }
  return {{RegionKind::Uncertain, {}}, {}};
}

RegionResult find_region(const PlanePoint& p, unsigned depth, BundleForest& forest,
                         const LPApprox& approx) {
  if (!p.s.is_rational())
    throw InvalidParams("region search expects a rational point");
  Rat s = p.s.rational();
  RegionFinder finder(forest, s, s, depth);
  return finder.find(p, approx);
}

std::string to_string(ThetaTag t) {
  switch (t) {
    case ThetaTag::Pure: return "Pure";
    case ThetaTag::LeftLeg: return "LeftLeg";
    case ThetaTag::RightLeg: return "RightLeg";
    case ThetaTag::GeometricCore: return "GeometricCore";
    case ThetaTag::BoundaryLeft: return "BoundaryLeft";
    case ThetaTag::BoundaryRight: return "BoundaryRight";
  }
  return "?";
}

double theta_left(const TripleHomData& hom, double m1, double m2, double phi1, double phi2) {
  double beta = (phi1 + 1 - phi2) * kPi;
  double den = std::cos(beta) + (m2 / m1) * to_double(hom.h);
  return std::atan2(std::sin(beta), den) / kPi;
}

double theta_right(const TripleHomData& hom, double m2, double m3, double phi2, double phi3) {
  double beta = (phi2 + 1 - phi3) * kPi;
  double h_dual = to_double(Rat(rat(hom.hom23) - rat(hom.hom12, hom.hom13)));
  double den = std::cos(beta) + (m2 / m3) * h_dual;
  return std::atan2(std::sin(beta), den) / kPi;
}

ThetaTag classify_theta(const AlgebraicSC& sc, double tol) {
  validate_params(sc);
  if (sc.phi2 - sc.phi1 >= 1 && sc.phi3 - sc.phi2 >= 1) return ThetaTag::Pure;

  TripleHomData hom = hom_data(sc.triple);
  bool left = false, right = false, boundary_left = false, boundary_right = false;
  if (sc.phi2 - sc.phi1 < 1) {
    double wall = sc.phi2 + 1 + theta_left(hom, sc.m1, sc.m2, sc.phi1, sc.phi2);
    if (std::abs(sc.phi3 - wall) <= tol)
      boundary_left = true;
    else if (sc.phi3 > wall)
      left = true;
  }
  if (sc.phi3 - sc.phi2 < 1) {
    double wall = sc.phi2 - 1 - theta_right(hom, sc.m2, sc.m3, sc.phi2, sc.phi3);
    if (std::abs(sc.phi1 - wall) <= tol)
      boundary_right = true;
    else if (sc.phi1 < wall)
      right = true;
  }
  if (left && right) throw InconsistentLegs();
  if (left) return ThetaTag::LeftLeg;
  if (right) return ThetaTag::RightLeg;
  if (boundary_left) return ThetaTag::BoundaryLeft;
  if (boundary_right) return ThetaTag::BoundaryRight;
  return ThetaTag::GeometricCore;
}

}  // namespace stabplane
