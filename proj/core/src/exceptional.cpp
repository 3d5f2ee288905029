#include "stabplane/exceptional.hpp"

#include <algorithm>

#include "stabplane/errors.hpp"

namespace stabplane {

DyadicLabel DyadicLabel::of(long long p, unsigned m) {
  while (m > 0 && p % 2 == 0) {
    p /= 2;
    --m;
  }
  return {p, m};
}

DyadicLabel DyadicLabel::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return of(std::stoll(text), 0);
    long long num = std::stoll(text.substr(0, slash));
    unsigned long long den = std::stoull(text.substr(slash + 1));
    if (den == 0 || (den & (den - 1)) != 0)
      throw InvalidParams("dyadic label needs a power-of-two denominator: " + text);
    unsigned m = 0;
    while ((1ULL << m) < den) ++m;
    return of(num, m);
  } catch (const std::invalid_argument&) {
    throw InvalidParams("bad dyadic label: " + text);
  } catch (const std::out_of_range&) {
    throw InvalidParams("dyadic label out of range: " + text);
  }
}

Rat DyadicLabel::value() const { return rat(p, 1LL << m); }

std::string DyadicLabel::str() const {
  if (m == 0) return std::to_string(p);
  return std::to_string(p) + "/" + std::to_string(1LL << m);
}

bool operator<(const DyadicLabel& x, const DyadicLabel& y) {
  return x.value() < y.value();
}

std::string to_string(TripleShape s) {
  switch (s) {
    case TripleShape::Consecutive: return "consecutive";
    case TripleShape::RightTwisted: return "right-twisted";
    case TripleShape::LeftTwisted: return "left-twisted";
  }
  return "?";
}

TripleShape parse_shape(const std::string& text) {
  if (text == "consecutive") return TripleShape::Consecutive;
  if (text == "right-twisted" || text == "right") return TripleShape::RightTwisted;
  if (text == "left-twisted" || text == "left") return TripleShape::LeftTwisted;
  throw InvalidParams("unknown triple shape: " + text);
}

CharVector left_mutation_class(const CharVector& e, const CharVector& f) {
  Rat k = euler_pairing(e, f);
  return {f.ch0 - k * e.ch0, f.ch1 - k * e.ch1, f.ch2 - k * e.ch2};
}

CharVector right_mutation_class(const CharVector& f, const CharVector& e) {
  Rat k = euler_pairing(f, e);
  return {f.ch0 - k * e.ch0, f.ch1 - k * e.ch1, f.ch2 - k * e.ch2};
}

void validate_bundle(const ExceptionalBundle& b) {
  if (!is_integer(b.ch.ch0) || sgn(b.ch.ch0) <= 0)
    throw DegenerateSystem("bundle rank must be a positive integer: " + b.name());
  if (euler_pairing(b.ch, b.ch) != 1)
    throw DegenerateSystem("chi(E,E) != 1 for " + b.name());
  ReducedPoint p = b.reduced();
  Rat r2 = b.ch.ch0 * b.ch.ch0;
  if (delta_of(p) != rat(1, 2) - 1 / (2 * r2))
    throw DegenerateSystem("parabola level mismatch for " + b.name());
}

ExceptionalBundle BundleForest::line_bundle(long long n) const {
  Rat nn = rat(n);
  return {DyadicLabel::of(n, 0), {rat(1), nn, Rat(nn * nn / 2)}};
}

ExceptionalBundle BundleForest::median(const ExceptionalBundle& a, const ExceptionalBundle& b) {
  Rat diff = b.label.value() - a.label.value();
  if (sgn(diff) <= 0 || diff.get_num() != 1 ||
      mpz_popcount(diff.get_den().get_mpz_t()) != 1)
    throw NotAdjacent("labels " + a.label.str() + ", " + b.label.str() +
                      " do not bound a tree edge");
  unsigned k = static_cast<unsigned>(mpz_sizeinbase(diff.get_den().get_mpz_t(), 2)) - 1;
  if (a.label.m > k + 1 || b.label.m > k + 1)
    throw NotAdjacent("labels " + a.label.str() + ", " + b.label.str() +
                      " are not adjacent at one level");

  // chi(v, a) = 0 and chi(b, v) = 0 as rows in (v0, v1, v2); the kernel
  // direction is their cross product.
  const CharVector& ca = a.ch;
  const CharVector& cb = b.ch;
  Rat r1[3] = {ca.ch2 + rat(3, 2) * ca.ch1 + ca.ch0, -ca.ch1 - rat(3, 2) * ca.ch0, ca.ch0};
  Rat r2[3] = {cb.ch2 - rat(3, 2) * cb.ch1 + cb.ch0, rat(3, 2) * cb.ch0 - cb.ch1, cb.ch0};
  CharVector v{Rat(r1[1] * r2[2] - r1[2] * r2[1]),
               Rat(r1[2] * r2[0] - r1[0] * r2[2]),
               Rat(r1[0] * r2[1] - r1[1] * r2[0])};
  if (sgn(v.ch0) == 0 && sgn(v.ch1) == 0 && sgn(v.ch2) == 0)
    throw DegenerateSystem("orthogonality system is singular between " + a.name() +
                           " and " + b.name());

  Rat self = euler_pairing(v, v);
  if (sgn(self) <= 0)
    throw DegenerateSystem("no positive self-pairing scaling between " + a.name() +
                           " and " + b.name());
  auto num_root = exact_sqrt(self.get_num());
  auto den_root = exact_sqrt(self.get_den());
  if (!num_root || !den_root)
    throw DegenerateSystem("self-pairing is not a perfect square between " + a.name() +
                           " and " + b.name());
  Rat scale = rat(*den_root, *num_root);
  if (sgn(v.ch0) < 0) scale = -scale;
  ExceptionalBundle out;
  out.ch = {Rat(v.ch0 * scale), Rat(v.ch1 * scale), Rat(v.ch2 * scale)};
  long long mid_num = a.label.p * (1LL << (k + 1 - a.label.m)) + 1;
  out.label = DyadicLabel::of(mid_num, k + 1);
  validate_bundle(out);
  return out;
}

ExceptionalBundle BundleForest::at(const DyadicLabel& label) {
  std::lock_guard<std::mutex> lock(mu_);
  return at_locked(label);
}

ExceptionalBundle BundleForest::at_locked(const DyadicLabel& label) {
  auto key = std::make_pair(label.p, label.m);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  ExceptionalBundle out;
  if (label.m == 0) {
    out = line_bundle(label.p);
  } else {
    // Reduce to the fundamental window [0,1) so twists share cache entries.
    long long span = 1LL << label.m;
    long long n = label.p >= 0 ? label.p / span : -((-label.p + span - 1) / span);
    if (n != 0) {
      ExceptionalBundle base = at_locked(DyadicLabel::of(label.p - n * span, label.m));
      out = {label, twist(base.ch, n)};
    } else {
      ExceptionalBundle left = at_locked(label.step(-1));
      ExceptionalBundle right = at_locked(label.step(+1));
      out = median(left, right);
    }
  }
  validate_bundle(out);
  cache_.emplace(key, out);
  return out;
}

std::vector<ExceptionalBundle> BundleForest::window(const Rat& s_min, const Rat& s_max,
                                                    unsigned depth) {
  Rat lo = s_min - 3, hi = s_max + 3;
  long long n_lo = floor_rat(lo).get_si();
  long long n_hi = floor_rat(hi).get_si() + 1;
  std::vector<ExceptionalBundle> out;
  for (unsigned level = 0; level <= depth; ++level) {
    long long span = 1LL << level;
    for (long long p = n_lo * span; p <= n_hi * span; ++p) {
      if (level > 0 && p % 2 == 0) continue;
      ExceptionalBundle b = at(DyadicLabel::of(p, level));
      Rat slope = b.slope();
      if (slope >= lo && slope <= hi) out.push_back(std::move(b));
    }
  }
  std::sort(out.begin(), out.end(), [](const ExceptionalBundle& x, const ExceptionalBundle& y) {
    return x.label < y.label;
  });
  return out;
}

BigInt BundleForest::min_rank_at_level(const Rat& s_min, const Rat& s_max, unsigned depth) {
  if (depth == 0) return 1;
  Rat lo = s_min - 3, hi = s_max + 3;
  long long n_lo = floor_rat(lo).get_si();
  long long n_hi = floor_rat(hi).get_si() + 1;
  long long span = 1LL << depth;
  BigInt best = 0;
  for (long long p = n_lo * span; p <= n_hi * span; ++p) {
    if (p % 2 == 0) continue;
    ExceptionalBundle b = at(DyadicLabel::of(p, depth));
    Rat slope = b.slope();
    if (slope < lo || slope > hi) continue;
    if (best == 0 || b.rank() < best) best = b.rank();
  }
  return best;
}

void BundleForest::adopt(const std::vector<ExceptionalBundle>& bundles) {
  std::lock_guard<std::mutex> lock(mu_);
  for (const ExceptionalBundle& b : bundles) {
    validate_bundle(b);
    DyadicLabel norm = DyadicLabel::of(b.label.p, b.label.m);
    if (!(norm == b.label)) throw CacheError("unnormalized label " + b.label.str());
    cache_.emplace(std::make_pair(b.label.p, b.label.m), b);
  }
}

std::vector<ExceptionalBundle> BundleForest::snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<ExceptionalBundle> out;
  out.reserve(cache_.size());
  for (const auto& [key, b] : cache_) out.push_back(b);
  std::sort(out.begin(), out.end(), [](const ExceptionalBundle& x, const ExceptionalBundle& y) {
    return x.label < y.label;
  });
  return out;
}

ExceptionalTriple make_triple(const DyadicLabel& center, TripleShape shape,
                              BundleForest& forest) {
  ExceptionalTriple t;
  t.shape = shape;
  switch (shape) {
    case TripleShape::Consecutive:
      t.e1 = forest.at(center.step(-1));
      t.e2 = forest.at(center);
      t.e3 = forest.at(center.step(+1));
      break;
    case TripleShape::RightTwisted:
      t.e1 = forest.at(center);
      t.e2 = forest.at(center.step(+1));
      t.e3 = forest.at(center.step(-1).plus_int(3));
      break;
    case TripleShape::LeftTwisted:
      t.e1 = forest.at(center.step(+1).plus_int(-3));
      t.e2 = forest.at(center.step(-1));
      t.e3 = forest.at(center);
      break;
  }
  BigInt r1 = t.e1.rank(), r2 = t.e2.rank(), r3 = t.e3.rank();
  if (r1 * r1 + r2 * r2 + r3 * r3 != 3 * r1 * r2 * r3)
    throw DegenerateSystem("Markov identity fails for " + t.name());
  return t;
}

TripleHomData hom_data(const ExceptionalTriple& t) {
  TripleHomData h;
  BigInt r1 = t.e1.rank(), r2 = t.e2.rank(), r3 = t.e3.rank();
  h.hom12 = 3 * r3;
  h.hom23 = 3 * r1;
  h.hom13 = 9 * r1 * r3 - 3 * r2;
  if (h.hom12 <= 0 || h.hom23 <= 0 || h.hom13 <= 0)
    throw DegenerateSystem("non-positive hom dimension for " + t.name());
  h.h = rat(h.hom12) - rat(h.hom23, h.hom13);
  h.r = h.hom13 * h.hom12 - h.hom23;
  return h;
}

FivePoints five_points(const ExceptionalBundle& e) {
  FivePoints fp;
  ReducedPoint p = e.reduced();
  Rat r2 = e.ch.ch0 * e.ch.ch0;
  fp.e_plus = {p.s, Rat(p.q - 1 / r2)};
  fp.e_l = reduce(left_mutation_class(e.ch, twist(e.ch, 3)));
  fp.e_r = reduce(right_mutation_class(twist(e.ch, -3), e.ch));

  // Both notch walls meet the level-1/2 parabola where
  //   s^2 - (2 s_E -+ 3) s + (2 q_E -+ 3 s_E + 1) = 0,
  // whose discriminant is (9 rk^2 - 4)/rk^2 on either side. el_curve is the
  // nearer root on the left (larger), er_curve the nearer on the right.
  BigInt rad = 9 * e.rank() * e.rank() - 4;
  Surd half_root(Rat(0), Rat(1 / (2 * e.ch.ch0)), rad);
  Surd sl = Surd(Rat(p.s - rat(3, 2))) + half_root;
  Surd sr = Surd(Rat(p.s + rat(3, 2))) - half_root;
  Surd half(rat(1, 2));
  fp.el_curve = PlanePoint(sl, sl * sl / Surd(rat(2)) - half);
  fp.er_curve = PlanePoint(sr, sr * sr / Surd(rat(2)) - half);
  return fp;
}

}  // namespace stabplane
