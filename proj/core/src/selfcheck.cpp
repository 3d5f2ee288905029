#include "stabplane/selfcheck.hpp"

#include <cmath>
#include <random>

#include "stabplane/errors.hpp"
#include "stabplane/json_io.hpp"
#include "stabplane/walls.hpp"

namespace stabplane {

namespace {

using Rng = std::mt19937_64;

long rand_int(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Rat rand_rat(Rng& rng, long num_range, long den_range) {
  return rat(rand_int(rng, -num_range, num_range), rand_int(rng, 1, den_range));
}

double rand_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

CharVector rand_char(Rng& rng, bool nonzero_rank = false) {
  long r = rand_int(rng, -6, 6);
  if (nonzero_rank && r == 0) r = 1;
  return {rat(r), rat(rand_int(rng, -9, 9)), rat(rand_int(rng, -9, 9), 2)};
}

CharVector scale_char(const CharVector& v, const Rat& k) {
  return {Rat(k * v.ch0), Rat(k * v.ch1), Rat(k * v.ch2)};
}

CharVector add_char(const CharVector& a, const CharVector& b) {
  return {Rat(a.ch0 + b.ch0), Rat(a.ch1 + b.ch1), Rat(a.ch2 + b.ch2)};
}

CharVector o_line(long n) {
  Rat nn = rat(n);
  return {rat(1), nn, Rat(nn * nn / 2)};
}

CheckReport check_numk() {
  CheckReport rep;
  rep.suite = "numk";
  Rng rng(20240901);

  rep.expect(euler_pairing(o_line(0), o_line(0)) == 1, "chi(O,O) != 1");
  rep.expect(euler_pairing(o_line(0), o_line(1)) == 3, "chi(O,O(1)) != 3");
  rep.expect(euler_pairing(o_line(1), o_line(0)) == 0, "chi(O(1),O) != 0");
  rep.expect(euler_pairing(o_line(0), o_line(3)) == 10, "chi(O,O(3)) != 10");

  for (int i = 0; i < 50; ++i) {
    CharVector a = rand_char(rng), b = rand_char(rng), c = rand_char(rng);
    Rat al = rand_rat(rng, 5, 3), be = rand_rat(rng, 5, 3);
    CharVector combo = add_char(scale_char(a, al), scale_char(b, be));
    rep.expect(euler_pairing(combo, c) ==
                   al * euler_pairing(a, c) + be * euler_pairing(b, c),
               "pairing not bilinear");
    CharVector v = rand_char(rng, true);
    ReducedPoint p = reduce(v);
    rep.expect(euler_pairing(v, v) == v.ch0 * v.ch0 * (1 - p.s * p.s + 2 * p.q),
               "self-pairing formula fails");
    long m = rand_int(rng, -4, 4), n = rand_int(rng, -4, 4);
    rep.expect(twist(v, m + n) == twist(twist(v, m), n), "twist not an action");
    rep.expect(euler_pairing(a, b) == euler_pairing(b, serre_twist(a)),
               "Serre adjunction fails");
    rep.expect(euler_pairing(dual(b), dual(a)) == euler_pairing(a, b),
               "dual contravariance fails");
    rep.expect(reduce(shift(v, 1)) == reduce(v), "shift moved the point");
  }
  for (int i = 0; i < 50; ++i) {
    CharVector a = rand_char(rng), b = rand_char(rng);
    rep.expect(euler_pairing(a, b) == euler_pairing(b, serre_twist(a)),
               "Serre adjunction fails (second sweep)");
  }
  return rep;
}

CheckReport check_plane() {
  CheckReport rep;
  rep.suite = "plane";
  Rng rng(20240902);

  for (int i = 0; i < 50; ++i) {
    PlanePoint p(rand_rat(rng, 8, 4), rand_rat(rng, 8, 4));
    rep.expect(delta_value(twist_point(p)) == delta_value(p),
               "twist does not preserve the parabola level");
  }
  // surd points slide along parabolas too
  for (int i = 0; i < 10; ++i) {
    Surd s = Surd(rand_rat(rng, 3, 2)) + Surd::sqrt_rat(rat(rand_int(rng, 2, 40)));
    PlanePoint p(s, s * s / Surd(rat(2)) - Surd(rand_rat(rng, 3, 2)));
    rep.expect(delta_value(twist_point(p)) == delta_value(p),
               "twist does not preserve the parabola level (surd)");
  }

  for (int i = 0; i < 50; ++i) {
    PlanePoint a(rand_rat(rng, 6, 3), rand_rat(rng, 6, 3));
    PlanePoint b(rand_rat(rng, 6, 3), rand_rat(rng, 6, 3));
    if (a == b) continue;
    Line line = Line::through(a, b);
    Parabola par{rand_rat(rng, 2, 2)};
    for (const PlanePoint& root : intersect_line_parabola(line, par)) {
      rep.expect(line.eval(root).sign() == 0, "root not on line");
      rep.expect(cmp(delta_value(root), Surd(par.a)) == 0, "root not on parabola");
    }
  }

  size_t pairs = 0;
  for (int i = 0; pairs < 50 && i < 400; ++i) {
    PlanePoint sigma(rand_rat(rng, 5, 4), rand_rat(rng, 5, 4));
    CharVector v = rand_char(rng);
    if (sgn(v.ch0) == 0 && sgn(v.ch1) == 0) continue;
    if (sgn(v.ch0) != 0 && PlanePoint(reduce(v)) == sigma) continue;
    try {
      auto [w, wt] = horizontal_distance_pair(sigma, v);
      rep.expect(w == wt, "horizontal chord widths differ");
      ++pairs;
    } catch (const NoIntersection&) {
    }
  }
  rep.expect(pairs == 50, "not enough horizontal-distance samples");

  std::vector<PlanePoint> tri = {PlanePoint(rat(0), rat(0)), PlanePoint(rat(2), rat(0)),
                                 PlanePoint(rat(0), rat(2))};
  rep.expect(point_in_polygon(PlanePoint(rat(1, 2), rat(1, 2)), tri) ==
                 PolygonLocation::Inside,
             "centroid not inside");
  rep.expect(point_in_polygon(tri[0], tri) == PolygonLocation::Boundary,
             "vertex not boundary");
  rep.expect(point_in_polygon(PlanePoint(rat(5), rat(5)), tri) == PolygonLocation::Outside,
             "far point not outside");
  return rep;
}

CheckReport check_exceptional() {
  CheckReport rep;
  rep.suite = "exceptional";
  BundleForest forest;

  auto bundles = forest.window(rat(0), rat(1), 4);
  rep.expect(!bundles.empty(), "empty window");
  for (size_t i = 0; i + 1 < bundles.size(); ++i) {
    rep.expect(bundles[i].label < bundles[i + 1].label, "window not label-sorted");
    rep.expect(bundles[i].slope() < bundles[i + 1].slope(),
               "slope not increasing with label");
  }
  for (const ExceptionalBundle& b : bundles) {
    rep.expect(euler_pairing(b.ch, b.ch) == 1, "chi(E,E) != 1 in window");
    Rat r2 = b.ch.ch0 * b.ch.ch0;
    rep.expect(delta_of(b.reduced()) == rat(1, 2) - 1 / (2 * r2),
               "bundle off its parabola");
  }

  for (unsigned level = 0; level <= 3; ++level) {
    long long span = 1LL << level;
    for (long long p = 0; p <= span; ++p) {
      if (level > 0 && p % 2 == 0) continue;
      for (TripleShape shape :
           {TripleShape::Consecutive, TripleShape::RightTwisted, TripleShape::LeftTwisted}) {
        ExceptionalTriple t = make_triple(DyadicLabel::of(p, level), shape, forest);
        TripleHomData hd = hom_data(t);
        rep.expect(euler_pairing(t.e2.ch, t.e1.ch) == 0, "chi(E2,E1) != 0");
        rep.expect(euler_pairing(t.e3.ch, t.e2.ch) == 0, "chi(E3,E2) != 0");
        rep.expect(euler_pairing(t.e3.ch, t.e1.ch) == 0, "chi(E3,E1) != 0");
        rep.expect(euler_pairing(t.e1.ch, t.e2.ch) == rat(hd.hom12), "hom12 mismatch");
        rep.expect(euler_pairing(t.e2.ch, t.e3.ch) == rat(hd.hom23), "hom23 mismatch");
        rep.expect(euler_pairing(t.e1.ch, t.e3.ch) == rat(hd.hom13), "hom13 mismatch");
        // resolution of the left mutation class: r*[E2] - hom13*[E1] is the
        // class of L_{E3} E3(3) up to one shift
        CharVector lm = left_mutation_class(t.e3.ch, twist(t.e3.ch, 3));
        CharVector res = add_char(scale_char(t.e2.ch, rat(hd.r)),
                                  scale_char(t.e1.ch, Rat(-rat(hd.hom13))));
        rep.expect(res == lm || res == shift(lm, 1), "resolution class mismatch");
      }
    }
  }

  // median is twist-equivariant
  for (long n = -2; n <= 2; ++n) {
    ExceptionalBundle a = forest.at(DyadicLabel::of(0, 0));
    ExceptionalBundle b = forest.at(DyadicLabel::of(1, 1));
    ExceptionalBundle at{a.label.plus_int(n), twist(a.ch, n)};
    ExceptionalBundle bt{b.label.plus_int(n), twist(b.ch, n)};
    ExceptionalBundle m = forest.median(a, b);
    ExceptionalBundle mt = forest.median(at, bt);
    rep.expect(mt.ch == twist(m.ch, n), "median not twist-equivariant");
  }

  for (const ExceptionalBundle& b : forest.window(rat(0), rat(1), 2)) {
    FivePoints fp = five_points(b);
    Rat r2 = b.ch.ch0 * b.ch.ch0;
    ReducedPoint el = fp.e_l;
    rep.expect(delta_of(el) == rat(1, 2) + 1 / (18 * r2 * r2),
               "E^l not on its parabola");
    ReducedPoint er = fp.e_r;
    rep.expect(delta_of(er) == rat(1, 2) + 1 / (18 * r2 * r2),
               "E^r not on its parabola");
    rep.expect(cmp(delta_value(fp.el_curve), Surd(rat(1, 2))) == 0,
               "el_curve not on the half parabola");
    rep.expect(cmp(delta_value(fp.er_curve), Surd(rat(1, 2))) == 0,
               "er_curve not on the half parabola");
    rep.expect(on_segment(PlanePoint(el), PlanePoint(fp.e_plus), fp.el_curve),
               "E^l not between E^+ and el_curve");
    rep.expect(on_segment(PlanePoint(er), PlanePoint(fp.e_plus), fp.er_curve),
               "E^r not between E^+ and er_curve");
  }
  return rep;
}

CheckReport check_lepotier() {
  CheckReport rep;
  rep.suite = "lepotier";
  Rng rng(20240903);
  BundleForest forest;
  LPApprox shallow = build_lp(forest, rat(-1), rat(1), 2);
  LPApprox deep = build_lp(forest, rat(-1), rat(1), 4);

  rep.expect(shallow.gap_bound() > deep.gap_bound(), "gap bound did not shrink");

  size_t uncertain_shallow = 0, uncertain_deep = 0;
  for (int i = 0; i < 200; ++i) {
    PlanePoint p(rand_rat(rng, 100, 100), rand_rat(rng, 100, 100));
    GeoClassification a = classify(p, shallow);
    GeoClassification b = classify(p, deep);
    if (a.kind == GeoClassification::Kind::AboveCurve)
      rep.expect(b.kind == GeoClassification::Kind::AboveCurve,
                 "AboveCurve not monotone in depth");
    if (a.kind == GeoClassification::Kind::UncertainNearCurve) ++uncertain_shallow;
    if (b.kind == GeoClassification::Kind::UncertainNearCurve) ++uncertain_deep;
    if (b.kind == GeoClassification::Kind::BelowCurve)
      rep.expect(a.kind != GeoClassification::Kind::AboveCurve,
                 "point flipped Above -> Below");
  }
  rep.expect(uncertain_deep <= uncertain_shallow, "uncertainty grew with depth");

  rep.expect(classify(PlanePoint(rat(0), rat(1)), shallow).above(), "(0,1) not above");
  GeoClassification slit = classify(PlanePoint(rat(0), rat(-1, 2)), shallow);
  rep.expect(slit.kind == GeoClassification::Kind::OnSegmentEEplus,
             "(0,-1/2) not on the O slit");
  rep.expect(classify(PlanePoint(rat(1, 100), rat(-9, 10)), shallow).above(),
             "(0.01,-0.9) not above");
  return rep;
}

CheckReport check_stability() {
  CheckReport rep;
  rep.suite = "stability";
  Rng rng(20240904);
  BundleForest forest;

  std::vector<ExceptionalTriple> triples = {
      make_triple(DyadicLabel::of(0, 0), TripleShape::Consecutive, forest),
      make_triple(DyadicLabel::of(1, 1), TripleShape::Consecutive, forest),
      make_triple(DyadicLabel::of(3, 2), TripleShape::Consecutive, forest),
      make_triple(DyadicLabel::of(0, 0), TripleShape::RightTwisted, forest),
      make_triple(DyadicLabel::of(1, 1), TripleShape::LeftTwisted, forest)};

  for (const ExceptionalTriple& t : triples) {
    TripleHomData hom = hom_data(t);
    for (int i = 0; i < 200; ++i) {
      double m1 = 0.1 + 3 * rand_unit(rng), m2 = 0.1 + 3 * rand_unit(rng),
             m3 = 0.1 + 3 * rand_unit(rng);
      double phi1 = -1 + 2 * rand_unit(rng);
      double phi2 = phi1 + 0.05 + 0.9 * rand_unit(rng);
      double phi3 = phi2 + 0.05 + 0.9 * rand_unit(rng);
      double left_gap = std::abs(phase_left_mutation_closed(hom, m1, m2, phi1, phi2) -
                                 phase_left_mutation_character(hom, m1, m2, phi1, phi2));
      rep.expect(left_gap < 1e-12, "left mutation phase routes disagree");
      double right_gap = std::abs(phase_right_mutation_closed(hom, m2, m3, phi2, phi3) -
                                  phase_right_mutation_character(hom, m2, m3, phi2, phi3));
      rep.expect(right_gap < 1e-12, "right mutation phase routes disagree");
    }
  }

  const ExceptionalTriple& std_triple = triples[0];
  for (int i = 0; i < 100; ++i) {
    AlgebraicSC sc;
    sc.triple = std_triple;
    sc.m1 = 0.2 + 2 * rand_unit(rng);
    sc.m2 = 0.2 + 2 * rand_unit(rng);
    sc.m3 = 0.2 + 2 * rand_unit(rng);
    sc.phi1 = -1 + 2 * rand_unit(rng);
    sc.phi2 = sc.phi1 + 0.1 + 1.3 * rand_unit(rng);
    sc.phi3 = std::max(sc.phi2 + 0.1 + 1.3 * rand_unit(rng), sc.phi1 + 1.01 + rand_unit(rng));
    ThetaTag tag = classify_theta(sc);
    GldimResult base = gldim_algebraic(sc);

    AlgebraicSC moved = sc;
    double c = -2 + 4 * rand_unit(rng);
    double lambda = 0.5 + 2 * rand_unit(rng);
    moved.phi1 += c;
    moved.phi2 += c;
    moved.phi3 += c;
    moved.m1 *= lambda;
    moved.m2 *= lambda;
    moved.m3 *= lambda;
    rep.expect(classify_theta(moved) == tag, "taxonomy not C-action invariant");
    GldimResult shifted = gldim_algebraic(moved);
    rep.expect(std::abs(shifted.value - base.value) < 1e-12,
               "gldim not C-action invariant");
  }

  // pentagon sanity for the standard triple
  PlanePoint centroid(rat(0), rat(1, 10));
  rep.expect(classify_mz(centroid, std_triple).kind == RegionKind::Core,
             "centroid not in the core");
  rep.expect(classify_mz(PlanePoint(rat(-5), rat(20)), std_triple).kind ==
                 RegionKind::Outside,
             "far point not outside");
  return rep;
}

CheckReport check_gldim() {
  CheckReport rep;
  rep.suite = "gldim";
  Rng rng(20240905);
  EvalContext ctx(rat(-2), rat(2), 3);

  for (int i = 0; i < 300; ++i) {
    Rat s = rand_rat(rng, 200, 100);
    Rat q = s * s / 2 + rat(rand_int(rng, 1, 400), 100);
    GldimResult res = gldim_geometric(GeometricSC{s, q}, ctx);
    rep.expect(res.value == 2.0 && res.kind == GldimCase::ParabolaInterior,
               "open parabola region value not 2");
  }

  // interior of the right leg of O: triangle (0,0), (1/3,-1/2), (0,-1)
  for (int i = 0; i < 100; ++i) {
    Rat w1 = rat(rand_int(rng, 1, 30)), w2 = rat(rand_int(rng, 1, 30)),
        w3 = rat(rand_int(rng, 1, 30));
    Rat total = w1 + w2 + w3;
    Rat s = (w2 * rat(1, 3)) / total;
    Rat q = (w2 * rat(-1, 2) + w3 * rat(-1)) / total;
    GldimResult right = gldim_geometric(GeometricSC{s, q}, ctx);
    rep.expect(right.kind == GldimCase::GeometricRightLeg, "sample not in right leg");
    rep.expect(right.value > 2.0 && right.value < 3.0, "leg value not in (2,3)");
    GldimResult left = gldim_geometric(GeometricSC{Rat(-s), q}, ctx);
    rep.expect(left.kind == GldimCase::GeometricLeftLeg, "mirror not in left leg");
    rep.expect(std::abs(left.value - right.value) < 1e-12, "mirror symmetry broken");
  }

  // approach the core wall from inside the leg
  for (int i = 0; i < 20; ++i) {
    Rat t = rat(rand_int(rng, 2, 8), 10);
    Rat s = t * rat(1, 3);
    Rat q = t * rat(-1, 2) - rat(1, 10000000);
    GldimResult res = gldim_geometric(GeometricSC{s, q}, ctx);
    rep.expect(res.kind == GldimCase::GeometricRightLeg, "wall sample not in leg");
    rep.expect(res.value - 2.0 < 1e-5, "value does not approach 2 at the wall");
  }

  ExceptionalTriple std_triple =
      make_triple(DyadicLabel::of(0, 0), TripleShape::Consecutive, ctx.forest());
  for (int i = 0; i < 100; ++i) {
    AlgebraicSC sc;
    sc.triple = std_triple;
    sc.m1 = sc.m2 = sc.m3 = 0.5 + rand_unit(rng);
    sc.phi1 = -3 + 6 * rand_unit(rng);
    sc.phi2 = sc.phi1 + 1 + 8 * rand_unit(rng);
    sc.phi3 = sc.phi2 + 1 + 8 * rand_unit(rng);
    GldimResult res = gldim_algebraic(sc);
    rep.expect(res.kind == GldimCase::AlgebraicPure, "pure sample misclassified");
    rep.expect(res.value == sc.phi3 - sc.phi1, "pure value not phi3 - phi1");
  }

  // continuity onto the wall from the left leg
  {
    AlgebraicSC sc;
    sc.triple = std_triple;
    sc.m1 = sc.m2 = sc.m3 = 1;
    sc.phi1 = 0;
    sc.phi2 = 0.5;
    TripleHomData hom = hom_data(std_triple);
    double wall = phase_left_mutation_closed(hom, 1, 1, 0, 0.5);
    sc.phi3 = wall + 1e-6;
    GldimResult res = gldim_algebraic(sc);
    rep.expect(res.kind == GldimCase::AlgebraicLeftLeg, "near-wall sample not a leg");
    rep.expect(res.value - 2.0 < 1e-5, "leg value does not tend to 2 at the wall");
  }
  return rep;
}

CheckReport check_walls() {
  CheckReport rep;
  rep.suite = "walls";
  Rng rng(20240906);
  BundleForest forest;
  LPApprox approx = build_lp(forest, rat(-2), rat(2), 2);

  size_t brackets = 0;
  for (int i = 0; brackets < 50 && i < 500; ++i) {
    Rat sp = rand_rat(rng, 20, 10), sq = rand_rat(rng, 20, 10);
    GeometricSC P{sp, Rat(sp * sp / 2 + rat(rand_int(rng, 1, 30), 10))};
    GeometricSC Q{sq, Rat(sq * sq / 2 + rat(rand_int(rng, 1, 30), 10))};
    CharVector v = rand_char(rng);
    if (sgn(v.ch0) == 0 && sgn(v.ch1) == 0) continue;
    if (sgn(v.ch0) != 0 && reduce(v).s == P.s && reduce(v).q == P.q) continue;
    BayerBracket bracket;
    try {
      bracket = bayer_bracket(P, Q, v);
    } catch (const NoIntersection&) {
      continue;
    }
    ++brackets;
    if (bracket.degenerate) continue;
    Line line = line_through_char(P.point(), v);
    auto roots = intersect_line_parabola(line, Parabola{rat(0)});
    for (int k = 0; k <= 8; ++k) {
      Rat t = rat(k, 8);
      Surd s = roots[0].s + (roots[1].s - roots[0].s) * Surd(t);
      Surd q = roots[0].q + (roots[1].q - roots[0].q) * Surd(t);
      double phi = phase_in_unit(Q, PlanePoint(s, q));
      rep.expect(bracket.contains_unit(phi), "chord phase escapes the bracket");
    }
  }
  rep.expect(brackets == 50, "not enough bracket samples");

  // wall / twist compatibility on a few safe bases
  for (int i = 0; i < 10; ++i) {
    Rat s = rat(rand_int(rng, -10, 10), 7);
    GeometricSC sigma{s, Rat(s * s / 2 + rat(rand_int(rng, 2, 20), 10))};
    CharVector v = o_line(rand_int(rng, -2, 2));
    if (reduce(v).s == sigma.s && reduce(v).q == sigma.q) continue;
    Wall w = wall(sigma, v, approx);
    Wall wt = wall_twist(w);
    Line expected = line_through_char(twist_point(sigma.point()), twist(v, -3));
    rep.expect(cmp(wt.line.alpha(), expected.alpha()) == 0 &&
                   cmp(wt.line.gamma(), expected.gamma()) == 0,
               "twisted wall line mismatch");
    rep.expect(wt.width() == w.width(), "twist changed the wall width");
    rep.expect(delta_value(wt.lo) == delta_value(w.lo) &&
                   delta_value(wt.hi) == delta_value(w.hi),
               "twist changed endpoint parabola levels");
  }
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"numk", "plane", "exceptional", "lepotier", "stability", "gldim", "walls"};
}

CheckReport run_suite(const std::string& name) {
  if (name == "numk") return check_numk();
  if (name == "plane") return check_plane();
  if (name == "exceptional") return check_exceptional();
  if (name == "lepotier") return check_lepotier();
  if (name == "stability") return check_stability();
  if (name == "gldim") return check_gldim();
  if (name == "walls") return check_walls();
  if (name == "all") {
    CheckReport all;
    all.suite = "all";
    for (const std::string& suite : suite_names()) all.merge(run_suite(suite));
    return all;
  }
  throw InvalidParams("unknown suite: " + name);
}

}  // namespace stabplane
