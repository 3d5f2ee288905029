#include "stabplane/gldim.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

#include "stabplane/errors.hpp"

namespace stabplane {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kWallSnap = 1e-9;

// Fractional part in [0, 1) with values within the wall tolerance of the
// upper end snapped to zero, so points on a leg wall evaluate to exactly 2.
double wrap_unit(double x) {
  double w = x - std::floor(x);
  if (w >= 1.0 - kWallSnap) w = 0.0;
  return w;
}

std::string skyscraper_witness() { return "O_x -> O_x[2]"; }

std::string left_witness(const ExceptionalBundle& e) {
  return "L_E E(3) -> E[2] for E=" + e.name();
}

std::string right_witness(const ExceptionalBundle& e) {
  return "E -> R_E E(-3)[2] for E=" + e.name();
}

}  // namespace

std::string to_string(GldimCase c) {
  switch (c) {
    case GldimCase::ParabolaInterior: return "ParabolaInterior";
    case GldimCase::GeometricCore: return "GeometricCore";
    case GldimCase::GeometricLeftLeg: return "GeometricLeftLeg";
    case GldimCase::GeometricRightLeg: return "GeometricRightLeg";
    case GldimCase::AlgebraicPure: return "AlgebraicPure";
    case GldimCase::AlgebraicLeftLeg: return "AlgebraicLeftLeg";
    case GldimCase::AlgebraicRightLeg: return "AlgebraicRightLeg";
    case GldimCase::Boundary: return "Boundary";
    case GldimCase::Uncertain: return "Uncertain";
  }
  return "?";
}

EvalContext::EvalContext(const Rat& s_min, const Rat& s_max, unsigned depth, double tolerance)
    : depth_(depth),
      tolerance_(tolerance),
      lp_(build_lp(forest_, s_min, s_max, depth)),
      regions_(forest_, s_min, s_max, depth) {}

GldimResult gldim_geometric(const GeometricSC& sc, EvalContext& ctx) {
  GeoClassification cls = classify(sc.point(), ctx.lp());
  if (cls.kind == GeoClassification::Kind::UncertainNearCurve)
    return {std::numeric_limits<double>::quiet_NaN(), GldimCase::Uncertain, "-"};
  if (!cls.above()) throw NotGeometric();

  if (sgn(sc.delta()) < 0) return {2.0, GldimCase::ParabolaInterior, skyscraper_witness()};

  RegionResult region = ctx.regions().find(sc.point(), ctx.lp());
  switch (region.tag.kind) {
    case RegionKind::Core:
      return {2.0, GldimCase::GeometricCore, skyscraper_witness()};
    case RegionKind::LeftLeg: {
      const ExceptionalBundle& e = *region.tag.owner;
      double phi_e = phase_in_unit(sc, e.ch);
      double phi_l = phase_in_unit(sc, left_mutation_class(e.ch, twist(e.ch, 3)));
      return {2.0 + wrap_unit(phi_e - phi_l), GldimCase::GeometricLeftLeg, left_witness(e)};
    }
    case RegionKind::RightLeg: {
      const ExceptionalBundle& e = *region.tag.owner;
      double phi_e = phase_in_unit(sc, e.ch);
      double phi_r = phase_in_unit(sc, right_mutation_class(twist(e.ch, -3), e.ch));
      return {2.0 + wrap_unit(phi_r - phi_e), GldimCase::GeometricRightLeg, right_witness(e)};
    }
    case RegionKind::Uncertain:
    case RegionKind::Outside:
      break;
  }
  return {std::numeric_limits<double>::quiet_NaN(), GldimCase::Uncertain, "-"};
}

GldimResult gldim_algebraic(const AlgebraicSC& sc, double tol) {
  ThetaTag tag = classify_theta(sc, tol);
  switch (tag) {
    case ThetaTag::Pure:
      return {sc.phi3 - sc.phi1, GldimCase::AlgebraicPure, "E1 -> E3"};
    case ThetaTag::LeftLeg: {
      TripleHomData hom = hom_data(sc.triple);
      double wall = phase_left_mutation_closed(hom, sc.m1, sc.m2, sc.phi1, sc.phi2);
      return {sc.phi3 - wall + 2, GldimCase::AlgebraicLeftLeg, left_witness(sc.triple.e3)};
    }
    case ThetaTag::RightLeg: {
      TripleHomData hom = hom_data(sc.triple);
      double wall = phase_right_mutation_closed(hom, sc.m2, sc.m3, sc.phi2, sc.phi3);
      return {wall + 2 - sc.phi1, GldimCase::AlgebraicRightLeg, right_witness(sc.triple.e1)};
    }
    case ThetaTag::BoundaryLeft:
    case ThetaTag::BoundaryRight:
      return {2.0, GldimCase::Boundary, skyscraper_witness()};
    case ThetaTag::GeometricCore:
      return {2.0, GldimCase::GeometricCore, skyscraper_witness()};
  }
  return {std::numeric_limits<double>::quiet_NaN(), GldimCase::Uncertain, "-"};
}

double phase_left_mutation_closed(const TripleHomData& hom, double m1, double m2,
                                  double phi1, double phi2) {
  return phi2 + 1 + theta_left(hom, m1, m2, phi1, phi2);
}

double phase_left_mutation_character(const TripleHomData& hom, double m1, double m2,
                                     double phi1, double phi2) {
  double c13 = mpz_get_d(hom.hom13.get_mpz_t());
  double r = mpz_get_d(hom.r.get_mpz_t());
  double re = c13 * m1 * std::cos(kPi * phi1) + r * m2 * std::cos(kPi * (phi2 + 1));
  double im = c13 * m1 * std::sin(kPi * phi1) + r * m2 * std::sin(kPi * (phi2 + 1));
  double a = std::atan2(im, re) / kPi;
  // shift by an even integer into (phi2, phi2 + 2)
  double shifted = a + 2 * std::ceil((phi2 - a) / 2);
  if (shifted <= phi2) shifted += 2;
  return shifted;
}

double phase_right_mutation_closed(const TripleHomData& hom, double m2, double m3,
                                   double phi2, double phi3) {
  return phi2 - 1 - theta_right(hom, m2, m3, phi2, phi3);
}

double phase_right_mutation_character(const TripleHomData& hom, double m2, double m3,
                                      double phi2, double phi3) {
  double c13 = mpz_get_d(hom.hom13.get_mpz_t());
  BigInt r_dual_big = hom.hom13 * hom.hom23 - hom.hom12;
  double r_dual = mpz_get_d(r_dual_big.get_mpz_t());
  double re = c13 * m3 * std::cos(kPi * phi3) + r_dual * m2 * std::cos(kPi * (phi2 - 1));
  double im = c13 * m3 * std::sin(kPi * phi3) + r_dual * m2 * std::sin(kPi * (phi2 - 1));
  double a = std::atan2(im, re) / kPi;
  double shifted = a + 2 * std::ceil((phi2 - 2 - a) / 2);
  if (shifted <= phi2 - 2) shifted += 2;
  return shifted;
}

std::vector<ScanCell> scan_grid(EvalContext& ctx, const Rat& s_lo, const Rat& s_hi,
                                const Rat& q_lo, const Rat& q_hi, unsigned ns, unsigned nq,
                                unsigned jobs) {
  if (ns == 0 || nq == 0) throw InvalidParams("grid resolution must be positive");
  auto sample = [](const Rat& lo, const Rat& hi, unsigned n, unsigned i) {
    if (n == 1) return lo;
    return Rat(lo + (hi - lo) * rat(i, n - 1));
  };
  std::vector<ScanCell> cells(static_cast<size_t>(ns) * nq);
  auto run_row = [&](unsigned row) {
    // rows sweep q from the top down
    Rat q = sample(q_lo, q_hi, nq, nq - 1 - row);
    for (unsigned col = 0; col < ns; ++col) {
      Rat s = sample(s_lo, s_hi, ns, col);
      ScanCell& cell = cells[static_cast<size_t>(row) * ns + col];
      cell.s = s;
      cell.q = q;
      try {
        cell.result = gldim_geometric(GeometricSC{s, q}, ctx);
      } catch (const NotGeometric&) {
        cell.result = std::nullopt;
      }
    }
  };
  if (jobs <= 1) {
    for (unsigned row = 0; row < nq; ++row) run_row(row);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        for (unsigned row = t; row < nq; row += jobs) run_row(row);
      });
    }
    for (std::thread& th : pool) th.join();
  }
  return cells;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string scan_csv(const std::vector<ScanCell>& cells) {
  std::ostringstream out;
  out << "s,q,gldim,case,witness\n";
  for (const ScanCell& cell : cells) {
    out << to_string(cell.s) << "," << to_string(cell.q) << ",";
    if (!cell.result) {
      out << "nan,NotGeometric,-\n";
    } else {
      out << format_double(cell.result->value) << "," << to_string(cell.result->kind) << ","
          << cell.result->witness << "\n";
    }
  }
  return out.str();
}

}  // namespace stabplane
