#include "stabplane/lepotier.hpp"

#include <algorithm>
#include <sstream>

#include "stabplane/errors.hpp"

namespace stabplane {

CurvePiece::CurvePiece(ExceptionalBundle owner_, FivePoints points_)
    : owner(std::move(owner_)),
      points(std::move(points_)),
      left_wall(Line::point_slope(PlanePoint(points.e_plus), Rat(owner.slope() - rat(3, 2)))),
      right_wall(Line::point_slope(PlanePoint(points.e_plus), Rat(owner.slope() + rat(3, 2)))) {}

LPApprox::LPApprox(unsigned depth, Rat s_min, Rat s_max, std::vector<CurvePiece> pieces,
                   Rat gap_bound)
    : depth_(depth),
      s_min_(std::move(s_min)),
      s_max_(std::move(s_max)),
      pieces_(std::move(pieces)),
      gap_bound_(std::move(gap_bound)) {
  for (size_t i = 0; i + 1 < pieces_.size(); ++i) {
    if (!(pieces_[i].s_end() < pieces_[i + 1].s_begin()))
      throw DegenerateSystem("curve pieces overlap near " + pieces_[i].owner.name());
  }
}

const CurvePiece* LPApprox::covering(const Surd& s) const {
  // Last piece starting at or before s, checked against its right end.
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), s,
                             [](const Surd& value, const CurvePiece& piece) {
                               return cmp(value, piece.s_begin()) < 0;
                             });
  if (it == pieces_.begin()) return nullptr;
  --it;
  if (cmp(s, it->s_end()) <= 0) return &*it;
  return nullptr;
}

LPApprox build_lp(BundleForest& forest, const Rat& s_min, const Rat& s_max, unsigned depth) {
  std::vector<CurvePiece> pieces;
  for (const ExceptionalBundle& b : forest.window(s_min, s_max, depth))
    pieces.emplace_back(b, five_points(b));
  std::sort(pieces.begin(), pieces.end(), [](const CurvePiece& x, const CurvePiece& y) {
    return x.owner.label < y.owner.label;
  });
  BigInt min_rank = forest.min_rank_at_level(s_min, s_max, depth + 1);
  Rat gap = min_rank > 0 ? rat(BigInt(1), 2 * min_rank * min_rank) : rat(0);
  return LPApprox(depth, s_min, s_max, std::move(pieces), gap);
}

GeoClassification classify(const PlanePoint& p, const LPApprox& approx) {
  const CurvePiece* piece = approx.covering(p.s);
  if (piece != nullptr) {
    const ExceptionalBundle& owner = piece->owner;
    ReducedPoint e = owner.reduced();
    if (p.s.is_rational() && p.s.rational() == e.s) {
      // On the vertical through the owner: compare against the slit [E, E^+].
      int vs_top = cmp(p.q, Surd(e.q));
      int vs_bottom = cmp(p.q, Surd(piece->points.e_plus.q));
      if (vs_top > 0) return {GeoClassification::Kind::AboveCurve, std::nullopt, rat(0)};
      if (vs_bottom >= 0)
        return {GeoClassification::Kind::OnSegmentEEplus, owner, rat(0)};
      return {GeoClassification::Kind::BelowCurve, std::nullopt, rat(0)};
    }
    const Line& wall =
        cmp(p.s, Surd(e.s)) < 0 ? piece->left_wall : piece->right_wall;
    if (orientation(p, wall) == Orientation::Above)
      return {GeoClassification::Kind::AboveCurve, std::nullopt, rat(0)};
    return {GeoClassification::Kind::BelowCurve, std::nullopt, rat(0)};
  }
  // Gap: the curve is the parabola here up to omitted structures of bounded
  // size. An omitted notch of rank r hangs 1/(2r^2) below the parabola and
  // its slit pokes 1/(2r^2) above it, so the uncertain band is two-sided.
  Surd delta = delta_value(p);
  if (cmp(delta, Surd(Rat(rat(1, 2) - approx.gap_bound()))) < 0)
    return {GeoClassification::Kind::AboveCurve, std::nullopt, rat(0)};
  if (cmp(delta, Surd(Rat(rat(1, 2) + approx.gap_bound()))) <= 0)
    return {GeoClassification::Kind::UncertainNearCurve, std::nullopt, approx.gap_bound()};
  return {GeoClassification::Kind::BelowCurve, std::nullopt, rat(0)};
}

std::string lp_csv(const LPApprox& approx) {
  std::ostringstream out;
  out << "owner,s_el,s_el_exact,s_eplus,q_eplus,s_er,s_er_exact\n";
  for (const CurvePiece& piece : approx.pieces()) {
    out << piece.owner.label.str() << "," << piece.points.el_curve.s.decimal(30) << ","
        << "\"" << piece.points.el_curve.s.to_string() << "\"" << ","
        << to_string(piece.points.e_plus.s) << "," << to_string(piece.points.e_plus.q) << ","
        << piece.points.er_curve.s.decimal(30) << ","
        << "\"" << piece.points.er_curve.s.to_string() << "\"" << "\n";
  }
  return out.str();
}

}  // namespace stabplane
