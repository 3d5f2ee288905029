#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "stabplane/numk.hpp"
#include "stabplane/plane.hpp"

namespace stabplane {

// Dyadic index p/2^m of an exceptional bundle, normalized (p odd or m = 0).
// The order on labels matches the order of the slopes of the bundles.
struct DyadicLabel {
  long long p = 0;
  unsigned m = 0;

  static DyadicLabel of(long long p, unsigned m);
  static DyadicLabel parse(const std::string& text);

  Rat value() const;
  DyadicLabel plus_int(long long n) const { return {p + n * (1LL << m), m}; }
  // label +/- 1/2^m, normalized
  DyadicLabel step(int dir) const { return of(p + dir, m); }

  std::string str() const;

  friend bool operator==(const DyadicLabel& x, const DyadicLabel& y) {
    return x.p == y.p && x.m == y.m;
  }
  friend bool operator<(const DyadicLabel& x, const DyadicLabel& y);
};

struct ExceptionalBundle {
  DyadicLabel label;
  CharVector ch;

  BigInt rank() const { return ch.ch0.get_num(); }
  Rat slope() const { return Rat(ch.ch1 / ch.ch0); }
  ReducedPoint reduced() const { return reduce(ch); }
  std::string name() const { return "E(" + label.str() + ")"; }
};

enum class TripleShape { Consecutive, RightTwisted, LeftTwisted };

std::string to_string(TripleShape s);
TripleShape parse_shape(const std::string& text);

// Ordered full strong exceptional collection of bundles. The rank vector of
// every triple satisfies the Markov equation r1^2+r2^2+r3^2 = 3 r1 r2 r3.
struct ExceptionalTriple {
  ExceptionalBundle e1, e2, e3;
  TripleShape shape = TripleShape::Consecutive;

  std::string name() const {
    return "{" + e1.name() + "," + e2.name() + "," + e3.name() + "}";
  }
};

// Hom dimensions and derived quantities of a triple:
//   hom12 = 3 rk(E3), hom23 = 3 rk(E1), hom13 = 9 rk(E1) rk(E3) - 3 rk(E2),
//   h = hom12 - hom23/hom13, r = hom13*hom12 - hom23.
struct TripleHomData {
  BigInt hom12, hom23, hom13;
  Rat h;
  BigInt r;
};

TripleHomData hom_data(const ExceptionalTriple& t);

// Class-level mutations: [L_E F] = [F] - chi(E,F)[E], [R_E F] = [F] - chi(F,E)[E].
CharVector left_mutation_class(const CharVector& e, const CharVector& f);
CharVector right_mutation_class(const CharVector& f, const CharVector& e);

// The five points attached to a bundle E:
//   e_plus: E moved down by 1/rk^2 (meeting point of the two notch walls),
//   e_l / e_r: reduced characters of L_E E(3) and R_E E(-3), both rational,
//   el_curve / er_curve: first meetings of the notch walls with the parabola
//   of level 1/2, quadratic irrationals over 9 rk^2 - 4.
struct FivePoints {
  ReducedPoint e_plus;
  ReducedPoint e_l, e_r;
  PlanePoint el_curve, er_curve;
};

FivePoints five_points(const ExceptionalBundle& e);

// Memoized generator for the binary tree of exceptional bundles. Thread-safe;
// results are deterministic functions of the label.
class BundleForest {
 public:
  ExceptionalBundle line_bundle(long long n) const;

  // Bundle at a normalized label, built recursively from medians.
  ExceptionalBundle at(const DyadicLabel& label);

  // The unique bundle strictly between two tree-adjacent bundles: the class v
  // with chi(v, a) = 0, chi(b, v) = 0, chi(v, v) = 1 and positive rank,
  // labeled by the midpoint. Throws NotAdjacent when the labels do not differ
  // by a power of two at a representable level; DegenerateSystem signals an
  // internal failure of the construction.
  ExceptionalBundle median(const ExceptionalBundle& a, const ExceptionalBundle& b);

  // All bundles of level <= depth whose slope lies in [s_min - 3, s_max + 3],
  // sorted by label.
  std::vector<ExceptionalBundle> window(const Rat& s_min, const Rat& s_max, unsigned depth);

  // Smallest rank among level == depth bundles with slope inside the padded
  // window; used for the curve gap bound. Returns 0 if none exist.
  BigInt min_rank_at_level(const Rat& s_min, const Rat& s_max, unsigned depth);

  // Preload externally computed bundles (cache loading); every entry is
  // revalidated against the invariants before being trusted.
  void adopt(const std::vector<ExceptionalBundle>& bundles);

  std::vector<ExceptionalBundle> snapshot() const;

 private:
  ExceptionalBundle at_locked(const DyadicLabel& label);

  mutable std::mutex mu_;
  std::map<std::pair<long long, unsigned>, ExceptionalBundle> cache_;
};

// Triple with the given center label:
//   Consecutive   {(p-1)/2^m, p/2^m, (p+1)/2^m}
//   RightTwisted  {p/2^m, (p+1)/2^m, (p-1)/2^m + 3}
//   LeftTwisted   {(p+1)/2^m - 3, (p-1)/2^m, p/2^m}
// Validates the Markov identity on ranks.
ExceptionalTriple make_triple(const DyadicLabel& center, TripleShape shape, BundleForest& forest);

// Invariant checks shared by generation and cache loading; throws on failure.
void validate_bundle(const ExceptionalBundle& b);

}  // namespace stabplane
