#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabplane/lepotier.hpp"

namespace stabplane {

// Geometric stability condition, identified with its point (s, q) above the
// curve. Use make_geometric to validate against a curve approximation.
struct GeometricSC {
  Rat s, q;

  PlanePoint point() const { return PlanePoint(s, q); }
  Rat delta() const { return s * s / 2 - q; }
};

GeometricSC make_geometric(const Rat& s, const Rat& q, const LPApprox& approx);

// Exact components of Z = (-ch2 + q ch0) + i (ch1 - s ch0).
struct CentralCharge {
  Rat re, im;
};

CentralCharge central_charge(const GeometricSC& sc, const CharVector& v);

// (1/pi) arg Z normalized into (0,1]: non-positive principal arguments are
// lifted by one, so classes of the heart land in (0,1] and a class with
// negative imaginary part is read as a shifted representative.
double phase_in_unit(const CentralCharge& z);
double phase_in_unit(const GeometricSC& sc, const CharVector& v);
// Phase of the lift (1, s, q) of a plane point (used for parabola chords).
double phase_in_unit(const GeometricSC& sc, const PlanePoint& p);

// Algebraic stability condition: a triple with masses and phases, subject to
// phi1 < phi2 < phi3, phi1 + 1 < phi3 and positive masses.
struct AlgebraicSC {
  ExceptionalTriple triple;
  double m1 = 1, m2 = 1, m3 = 1;
  double phi1 = 0, phi2 = 0, phi3 = 0;
};

void validate_params(const AlgebraicSC& sc);

enum class RegionKind { Core, LeftLeg, RightLeg, Outside, Uncertain };

std::string to_string(RegionKind k);

struct MZTag {
  RegionKind kind = RegionKind::Outside;
  std::optional<ExceptionalBundle> owner;  // E3 for LeftLeg, E1 for RightLeg
};

// Exact decomposition of the region of a triple: the open pentagon
// (E1, E1^r, E2, E3^l, E3) is the core; the two corner triangles cut off by
// the lines through (E3, E3^l) and (E1, E1^r) are the legs, each including
// its cut segment. Points outside the open pentagon (E1, E1^+, E2, E3^+, E3)
// are Outside.
MZTag classify_mz(const PlanePoint& p, const ExceptionalTriple& t);

struct RegionResult {
  MZTag tag;
  std::optional<ExceptionalTriple> triple;
};

// Precomputed candidate triples over a window, searched consecutive shapes
// first, then twisted ones, by level and label. Queries are exact; a point
// covered by no candidate at this depth reports Uncertain.
class RegionFinder {
 public:
  RegionFinder(BundleForest& forest, const Rat& s_min, const Rat& s_max, unsigned depth);

  // Requires p above the curve (throws NotGeometric otherwise); propagates
  // Uncertain from the curve classification.
  RegionResult find(const PlanePoint& p, const LPApprox& approx) const;

  size_t candidate_count() const { return entries_.size(); }

 private:
  struct Entry {
    ExceptionalTriple triple;
    Rat s1, s3;
    std::vector<PlanePoint> mz;  // E1, E1^+, E2, E3^+, E3
    Line left_cut, right_cut;    // through (E3, E3^l) and (E1, E1^r)
  };

  std::vector<Entry> entries_;
};

// One-shot convenience wrapper around RegionFinder.
RegionResult find_region(const PlanePoint& p, unsigned depth, BundleForest& forest,
                         const LPApprox& approx);

enum class ThetaTag { Pure, LeftLeg, RightLeg, GeometricCore, BoundaryLeft, BoundaryRight };

std::string to_string(ThetaTag t);

// Phase offset of the left-mutation wall beyond phi2 + 1:
//   theta_L = (1/pi) arctan(sin(beta) / (cos(beta) + (m2/m1) h)),
// beta = (phi1 + 1 - phi2) pi, taken on the (0, pi) branch.
double theta_left(const TripleHomData& hom, double m1, double m2, double phi1, double phi2);

// Mirror through the derived dual triple: h -> hom23 - hom12/hom13, masses
// m2/m3, angle (phi2 + 1 - phi3) pi.
double theta_right(const TripleHomData& hom, double m2, double m3, double phi2, double phi3);

// Taxonomy of the parameter space of a triple. Pure when both phase gaps are
// at least one; LeftLeg when phi3 exceeds the left mutation wall
// phi2 + 1 + theta_L (RightLeg mirrored); wall equality within tol maps to
// the Boundary tags; everything else is the geometric core.
ThetaTag classify_theta(const AlgebraicSC& sc, double tol = 1e-9);

}  // namespace stabplane
