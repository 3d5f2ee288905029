#include "stabplane/json_io.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "stabplane/errors.hpp"

namespace stabplane {

using nlohmann::json;

namespace {

json char_to_json_value(const CharVector& v) {
  return json::array({to_string(v.ch0), to_string(v.ch1), to_string(v.ch2)});
}

CharVector char_from_json_value(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw CacheError("character must be an array of three strings");
  return {parse_rat(j[0].get<std::string>()), parse_rat(j[1].get<std::string>()),
          parse_rat(j[2].get<std::string>())};
}

}  // namespace

std::string char_to_json(const CharVector& v) { return char_to_json_value(v).dump(); }

CharVector char_from_json(const std::string& json_text) {
  return char_from_json_value(json::parse(json_text));
}

std::string cache_to_json(const std::vector<ExceptionalBundle>& bundles, unsigned depth) {
  std::vector<ExceptionalBundle> sorted = bundles;
  std::sort(sorted.begin(), sorted.end(),
            [](const ExceptionalBundle& x, const ExceptionalBundle& y) {
              return x.label < y.label;
            });
  json out;
  out["depth"] = depth;
  out["bundles"] = json::array();
  for (const ExceptionalBundle& b : sorted) {
    out["bundles"].push_back(json{{"p", b.label.p}, {"m", b.label.m},
                                  {"ch", char_to_json_value(b.ch)}});
  }
  return out.dump(2) + "\n";
}

void save_cache(const std::string& path, const std::vector<ExceptionalBundle>& bundles,
                unsigned depth) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CacheError("cannot write cache file: " + path);
  out << cache_to_json(bundles, depth);
}

std::vector<ExceptionalBundle> load_cache(const std::string& path, unsigned* depth_out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot read cache file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw CacheError(std::string("malformed cache: ") + e.what());
  }
  if (!doc.contains("bundles") || !doc["bundles"].is_array())
    throw CacheError("cache missing bundle list");
  if (depth_out != nullptr) *depth_out = doc.value("depth", 0u);
  std::vector<ExceptionalBundle> out;
  for (const json& j : doc["bundles"]) {
    ExceptionalBundle b;
    if (!j.contains("p") || !j.contains("m") || !j.contains("ch"))
      throw CacheError("cache entry missing fields");
    b.label = DyadicLabel{j["p"].get<long long>(), j["m"].get<unsigned>()};
    b.ch = char_from_json_value(j["ch"]);
    try {
      validate_bundle(b);
      DyadicLabel norm = DyadicLabel::of(b.label.p, b.label.m);
      if (!(norm == b.label)) throw CacheError("unnormalized label in cache");
      if (b.slope() != reduce(b.ch).s) throw CacheError("slope mismatch");
    } catch (const Error& e) {
      throw CacheError("cache validation failed for " + b.name() + ": " + e.what());
    }
    out.push_back(std::move(b));
  }
  return out;
}

AlgebraicSC algebraic_from_json(const std::string& json_text, BundleForest& forest) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InvalidParams(std::string("bad algebraic JSON: ") + e.what());
  }
  if (!doc.contains("triple") || !doc.contains("m") || !doc.contains("phi"))
    throw InvalidParams("algebraic JSON needs triple, m, phi");
  const json& jt = doc["triple"];
  DyadicLabel center = DyadicLabel::parse(jt.at("center").get<std::string>());
  TripleShape shape = parse_shape(jt.value("shape", std::string("consecutive")));
  const json& jm = doc["m"];
  const json& jp = doc["phi"];
  if (jm.size() != 3 || jp.size() != 3)
    throw InvalidParams("m and phi must have three entries");
  AlgebraicSC sc;
  sc.triple = make_triple(center, shape, forest);
  sc.m1 = jm[0].get<double>();
  sc.m2 = jm[1].get<double>();
  sc.m3 = jm[2].get<double>();
  sc.phi1 = jp[0].get<double>();
  sc.phi2 = jp[1].get<double>();
  sc.phi3 = jp[2].get<double>();
  validate_params(sc);
  return sc;
}

}  // namespace stabplane
