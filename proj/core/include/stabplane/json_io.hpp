#pragma once

#include <string>
#include <vector>

#include "stabplane/stability.hpp"

namespace stabplane {

// CharVector as an array of three exact strings, e.g. ["2","1","-1/2"].
std::string char_to_json(const CharVector& v);
CharVector char_from_json(const std::string& json_text);

// Bundle cache file: {"depth": m, "bundles": [{"p":..,"m":..,"ch":[..]}]}.
// Deterministic bytes for a given bundle set (sorted by label), so a
// save/load/save round trip is byte-stable. Loading revalidates every bundle
// and fails closed on any violation.
std::string cache_to_json(const std::vector<ExceptionalBundle>& bundles, unsigned depth);
void save_cache(const std::string& path, const std::vector<ExceptionalBundle>& bundles,
                unsigned depth);
std::vector<ExceptionalBundle> load_cache(const std::string& path, unsigned* depth_out = nullptr);

// Algebraic stability condition from flags or JSON:
//   {"triple": {"center": "1/2", "shape": "consecutive"}, "m": [..], "phi": [..]}
AlgebraicSC algebraic_from_json(const std::string& json_text, BundleForest& forest);

}  // namespace stabplane
