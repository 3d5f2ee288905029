#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabplane/stability.hpp"

namespace stabplane {

enum class GldimCase {
  ParabolaInterior,
  GeometricCore,
  GeometricLeftLeg,
  GeometricRightLeg,
  AlgebraicPure,
  AlgebraicLeftLeg,
  AlgebraicRightLeg,
  Boundary,
  Uncertain,
};

std::string to_string(GldimCase c);

struct GldimResult {
  double value = 0;  // NaN when uncertain
  GldimCase kind = GldimCase::Uncertain;
  std::string witness;  // extremal Hom pair realizing the value

  bool uncertain() const { return kind == GldimCase::Uncertain; }
};

// Everything a gldim evaluation needs over one slope window: the bundle
// tree, the curve approximation and the candidate regions.
class EvalContext {
 public:
  EvalContext(const Rat& s_min, const Rat& s_max, unsigned depth, double tolerance = 1e-9);

  BundleForest& forest() { return forest_; }
  const LPApprox& lp() const { return lp_; }
  const RegionFinder& regions() const { return regions_; }
  unsigned depth() const { return depth_; }
  double tolerance() const { return tolerance_; }

  EvalContext(const EvalContext&) = delete;
  EvalContext& operator=(const EvalContext&) = delete;

 private:
  BundleForest forest_;
  unsigned depth_;
  double tolerance_;
  LPApprox lp_;
  RegionFinder regions_;
};

// Value of the global dimension function at a geometric point:
//   2 on the open region above the base parabola (skyscraper witness);
//   2 on region cores; on a leg, 2 plus the phase gap between the owner
//   bundle and its mutation class, branch pinned so the gap lies in [0, 1).
// Throws NotGeometric below/on the curve; near-curve uncertainty propagates.
GldimResult gldim_geometric(const GeometricSC& sc, EvalContext& ctx);

// The four-case value on algebraic parameters: phi3 - phi1 when both gaps
// are >= 1; 2 on the core and on the wall; the mutation-wall offsets on the
// legs via the closed arctan form.
GldimResult gldim_algebraic(const AlgebraicSC& sc, double tol = 1e-9);

// Phase of the left mutation class L_{E3} E3(3), two independent routes:
// the closed form phi2 + 1 + theta_L, and the principal argument of
//   hom13*m1*e^{i pi phi1} + r*m2*e^{i pi (phi2+1)}
// on the branch (phi2, phi2+2). They agree to floating accuracy.
double phase_left_mutation_closed(const TripleHomData& hom, double m1, double m2,
                                  double phi1, double phi2);
double phase_left_mutation_character(const TripleHomData& hom, double m1, double m2,
                                     double phi1, double phi2);

// Mirror through the derived dual: phase of R_{E1} E1(-3) as phi2 - 1 - theta_R
// and as the argument of hom13*m3*e^{i pi phi3} + r_dual*m2*e^{i pi (phi2-1)}
// on the branch (phi2-2, phi2), r_dual = hom13*hom23 - hom12.
double phase_right_mutation_closed(const TripleHomData& hom, double m2, double m3,
                                   double phi2, double phi3);
double phase_right_mutation_character(const TripleHomData& hom, double m2, double m3,
                                      double phi2, double phi3);

struct ScanCell {
  Rat s, q;
  std::optional<GldimResult> result;  // nullopt: not geometric at this depth
};

// Row-major sweep (q from top down, s left to right), exact sample coordinates.
// jobs > 1 fans rows out to threads; the output is identical to a serial run.
std::vector<ScanCell> scan_grid(EvalContext& ctx, const Rat& s_lo, const Rat& s_hi,
                                const Rat& q_lo, const Rat& q_hi, unsigned ns, unsigned nq,
                                unsigned jobs = 1);

std::string scan_csv(const std::vector<ScanCell>& cells);

// 17-significant-digit rendering used by every CSV emitter.
std::string format_double(double x);

}  // namespace stabplane
