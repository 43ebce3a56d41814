#pragma once

// Seeded survey over random Gorenstein algebras S/Ann(F), F a random cubic.
// Sample i draws everything from derive_stream(seed, i), so records do not
// depend on the number of worker threads.

#include "shortres/laws.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace shortres {

struct SurveyConfig {
  std::size_t e = 3;
  std::uint32_t p = 101;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::size_t budget = 64;
  /// Random cyclic modules R/(f), f a random quadric, per sample.
  std::size_t modules = 10;
  Caps caps;
  unsigned jobs = 1;
  /// Wall-clock timings make records irreproducible, so they are opt-in.
  bool timings = false;
  /// Only build the algebra and record its Hilbert function.
  bool hilbert_only = false;
};

/// One record per sample, ordered by sample index.
std::vector<nlohmann::json> run_survey(const SurveyConfig& cfg);

/// Human-readable rates.
std::string summarize(const SurveyConfig& cfg, const std::vector<nlohmann::json>& records);

}  // namespace shortres
