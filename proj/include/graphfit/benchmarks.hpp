#pragma once

#include <cstdint>
#include <string>

#include "graphfit/dataset.hpp"

namespace graphfit {

enum class Pattern { sinus, spiral, tree };
enum class Variant { thin, scattered, scattered_noised };

std::string to_string(Pattern p);
std::string to_string(Variant v);
Pattern parse_pattern(const std::string& name);
Variant parse_variant(const std::string& name);

// FVU stopping thresholds per variant: 0.1% thin, 0.2% scattered,
// 1% scattered and noised.
double threshold_for(Variant v);

struct BenchmarkSpec {
  Pattern pattern = Pattern::sinus;
  Variant variant = Variant::thin;
  int n_points = 1000;
  std::uint64_t seed = 0;

  double fvu_threshold() const { return threshold_for(variant); }
};

// Deterministic synthetic dataset for the spec. Backbones: sinus
// (t, 2 sin t) on [0, 3*pi]; Archimedean spiral (0.3 t cos t, 0.3 t sin t)
// on [pi/2, 4.5*pi]; a 7-segment binary stick tree (branch angle 40 deg,
// child length 0.6x parent) sampled uniformly by arc length. Variants add
// Gaussian jitter (sigma = 2% of the backbone bounding-box diagonal) and
// replace 10% of the points with uniform background noise.
Dataset generate(const BenchmarkSpec& spec);

// Sidecar metadata: full spec, generator identity, backbone parameters.
std::string spec_json(const BenchmarkSpec& spec);
void save_spec_json(const std::string& path, const BenchmarkSpec& spec);

}  // namespace graphfit
