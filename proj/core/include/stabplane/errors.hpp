#pragma once

#include <stdexcept>
#include <string>

namespace stabplane {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Reduction of a rank-zero class: the point lies on the line at infinity.
struct Ch0Zero : Error {
  Ch0Zero() : Error("ch0 = 0: no reduced character") {}
};

// Direction (0,0,1): no line in the affine plane corresponds to it.
struct SkyscraperDirection : Error {
  SkyscraperDirection() : Error("skyscraper direction (0,0,*) has no associated line") {}
};

struct NoIntersection : Error {
  explicit NoIntersection(const std::string& what = "line does not meet the parabola")
      : Error(what) {}
};

struct NotAdjacent : Error {
  explicit NotAdjacent(const std::string& what) : Error(what) {}
};

struct DegenerateSystem : Error {
  explicit DegenerateSystem(const std::string& what) : Error(what) {}
};

struct ZeroCharge : Error {
  ZeroCharge() : Error("central charge vanishes; phase undefined") {}
};

struct InvalidParams : Error {
  explicit InvalidParams(const std::string& what) : Error(what) {}
};

struct InconsistentLegs : Error {
  InconsistentLegs() : Error("both leg criteria hold strictly; tolerance breach") {}
};

struct NotGeometric : Error {
  explicit NotGeometric(const std::string& what = "point is not above the curve")
      : Error(what) {}
};

struct CacheError : Error {
  explicit CacheError(const std::string& what) : Error(what) {}
};

// Arithmetic between quadratic irrationals over different radicals. Values can
// always be compared, but sums and products are only closed over one radical.
struct FieldMismatch : Error {
  FieldMismatch() : Error("surd arithmetic across different radicals") {}
};

}  // namespace stabplane
