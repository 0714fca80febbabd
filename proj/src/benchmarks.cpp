#include "graphfit/benchmarks.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include <json.hpp>

#include "graphfit/error.hpp"

namespace graphfit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSinusAmplitude = 2.0;
constexpr double kSinusTMax = 3.0 * kPi;
constexpr double kSpiralPitch = 0.3;
constexpr double kSpiralT0 = 0.5 * kPi;
constexpr double kSpiralT1 = 4.5 * kPi;
constexpr double kTreeTrunkLength = 2.0;
constexpr double kTreeBranchAngleDeg = 40.0;
constexpr double kTreeChildScale = 0.6;
constexpr double kJitterFraction = 0.02;
constexpr double kNoiseFraction = 0.10;
constexpr double kNoiseBoxInflation = 1.10;
constexpr const char* kGeneratorId = "mt19937_64+boxmuller-v1";

// Seedable portable source: mt19937_64 is fully specified by the standard;
// the uniform and Gaussian transforms are written out here because the
// standard library distributions are implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct Box {
  double xlo = 0, xhi = 0, ylo = 0, yhi = 0;

  void expand(double x, double y) {
    xlo = std::min(xlo, x);
    xhi = std::max(xhi, x);
    ylo = std::min(ylo, y);
    yhi = std::max(yhi, y);
  }
  double diagonal() const { return std::hypot(xhi - xlo, yhi - ylo); }
};

struct Segment {
  double ax, ay, bx, by;

  double length() const { return std::hypot(bx - ax, by - ay); }
};

void sinus_at(double t, double* out) {
  out[0] = t;
  out[1] = kSinusAmplitude * std::sin(t);
}

void spiral_at(double t, double* out) {
  out[0] = kSpiralPitch * t * std::cos(t);
  out[1] = kSpiralPitch * t * std::sin(t);
}

// Trunk plus two levels of symmetric branches: 7 segments.
std::vector<Segment> tree_segments() {
  const double angle = kTreeBranchAngleDeg * kPi / 180.0;
  std::vector<Segment> segs;
  struct Tip {
    double x, y, dx, dy, len;
  };
  std::vector<Tip> level{{0.0, 0.0, 0.0, 1.0, kTreeTrunkLength}};
  for (int depth = 0; depth < 3; ++depth) {
    std::vector<Tip> next;
    for (const Tip& t : level) {
      double bx = t.x + t.len * t.dx;
      double by = t.y + t.len * t.dy;
      segs.push_back({t.x, t.y, bx, by});
      if (depth == 2) continue;
      for (double sgn : {+1.0, -1.0}) {
        double ca = std::cos(sgn * angle), sa = std::sin(sgn * angle);
        double dx = ca * t.dx - sa * t.dy;
        double dy = sa * t.dx + ca * t.dy;
        next.push_back({bx, by, dx, dy, t.len * kTreeChildScale});
      }
    }
    level = std::move(next);
  }
  return segs;
}

Box backbone_box(Pattern pattern) {
  Box box;
  switch (pattern) {
    case Pattern::sinus: {
      double p[2];
      sinus_at(0.0, p);
      box = {p[0], p[0], p[1], p[1]};
      for (int i = 1; i <= 8192; ++i) {
        sinus_at(kSinusTMax * i / 8192.0, p);
        box.expand(p[0], p[1]);
      }
      break;
    }
    case Pattern::spiral: {
      double p[2];
      spiral_at(kSpiralT0, p);
      box = {p[0], p[0], p[1], p[1]};
      for (int i = 1; i <= 8192; ++i) {
        spiral_at(kSpiralT0 + (kSpiralT1 - kSpiralT0) * i / 8192.0, p);
        box.expand(p[0], p[1]);
      }
      break;
    }
    case Pattern::tree: {
      auto segs = tree_segments();
      box = {segs[0].ax, segs[0].ax, segs[0].ay, segs[0].ay};
      for (const Segment& s : segs) {
        box.expand(s.ax, s.ay);
        box.expand(s.bx, s.by);
      }
      break;
    }
  }
  return box;
}

void backbone_sample(Pattern pattern, const std::vector<Segment>& segs,
                     const std::vector<double>& cum, Rng& rng, double* out) {
  switch (pattern) {
    case Pattern::sinus:
      sinus_at(rng.uniform(0.0, kSinusTMax), out);
      break;
    case Pattern::spiral:
      spiral_at(rng.uniform(kSpiralT0, kSpiralT1), out);
      break;
    case Pattern::tree: {
      double u = rng.uniform(0.0, cum.back());
      std::size_t i = 0;
      while (i + 1 < cum.size() && u > cum[i]) ++i;
      const Segment& s = segs[i];
      double before = i == 0 ? 0.0 : cum[i - 1];
      double f = (u - before) / s.length();
      out[0] = s.ax + f * (s.bx - s.ax);
      out[1] = s.ay + f * (s.by - s.ay);
      break;
    }
  }
}

}  // namespace

std::string to_string(Pattern p) {
  switch (p) {
    case Pattern::sinus: return "sinus";
    case Pattern::spiral: return "spiral";
    case Pattern::tree: return "tree";
  }
  return "?";
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::thin: return "thin";
    case Variant::scattered: return "scattered";
    case Variant::scattered_noised: return "scattered_noised";
  }
  return "?";
}

Pattern parse_pattern(const std::string& name) {
  if (name == "sinus") return Pattern::sinus;
  if (name == "spiral") return Pattern::spiral;
  if (name == "tree") return Pattern::tree;
  throw Error("unknown pattern '" + name + "' (valid: sinus, spiral, tree)");
}

Variant parse_variant(const std::string& name) {
  if (name == "thin") return Variant::thin;
  if (name == "scattered") return Variant::scattered;
  if (name == "scattered_noised") return Variant::scattered_noised;
  throw Error("unknown variant '" + name +
              "' (valid: thin, scattered, scattered_noised)");
}

double threshold_for(Variant v) {
  switch (v) {
    case Variant::thin: return 0.001;
    case Variant::scattered: return 0.002;
    case Variant::scattered_noised: return 0.01;
  }
  return 0.001;
}

Dataset generate(const BenchmarkSpec& spec) {
  if (spec.n_points < 10) throw Error("n_points must be at least 10");
  Rng rng(spec.seed);

  std::vector<Segment> segs;
  std::vector<double> cum;
  if (spec.pattern == Pattern::tree) {
    segs = tree_segments();
    double total = 0.0;
    for (const Segment& s : segs) {
      total += s.length();
      cum.push_back(total);
    }
  }

  const Box box = backbone_box(spec.pattern);
  const double sigma = kJitterFraction * box.diagonal();
  const int n = spec.n_points;
  const int n_noise =
      spec.variant == Variant::scattered_noised
          ? static_cast<int>(n * kNoiseFraction)
          : 0;

  std::vector<double> coords(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n - n_noise; ++i) {
    double* p = coords.data() + 2 * static_cast<std::size_t>(i);
    backbone_sample(spec.pattern, segs, cum, rng, p);
    if (spec.variant != Variant::thin) {
      p[0] += sigma * rng.gaussian();
      p[1] += sigma * rng.gaussian();
    }
  }
  if (n_noise > 0) {
    double cx = 0.5 * (box.xlo + box.xhi), cy = 0.5 * (box.ylo + box.yhi);
    double hx = 0.5 * (box.xhi - box.xlo) * kNoiseBoxInflation;
    double hy = 0.5 * (box.yhi - box.ylo) * kNoiseBoxInflation;
    for (int i = n - n_noise; i < n; ++i) {
      double* p = coords.data() + 2 * static_cast<std::size_t>(i);
      p[0] = rng.uniform(cx - hx, cx + hx);
      p[1] = rng.uniform(cy - hy, cy + hy);
    }
  }
  return Dataset::from_flat(std::move(coords), 2);
}

std::string spec_json(const BenchmarkSpec& spec) {
  nlohmann::json j;
  j["pattern"] = to_string(spec.pattern);
  j["variant"] = to_string(spec.variant);
  j["n_points"] = spec.n_points;
  j["seed"] = spec.seed;
  j["fvu_threshold"] = spec.fvu_threshold();
  j["generator"] = kGeneratorId;
  nlohmann::json bb;
  switch (spec.pattern) {
    case Pattern::sinus:
      bb = {{"curve", "sinus"},
            {"amplitude", kSinusAmplitude},
            {"t_range", {0.0, kSinusTMax}}};
      break;
    case Pattern::spiral:
      bb = {{"curve", "archimedean_spiral"},
            {"pitch", kSpiralPitch},
            {"t_range", {kSpiralT0, kSpiralT1}}};
      break;
    case Pattern::tree:
      bb = {{"curve", "binary_stick_tree"},
            {"trunk_length", kTreeTrunkLength},
            {"branch_angle_deg", kTreeBranchAngleDeg},
            {"child_scale", kTreeChildScale},
            {"segments", 7}};
      break;
  }
  j["backbone"] = std::move(bb);
  j["jitter_sigma"] =
      spec.variant == Variant::thin
          ? 0.0
          : kJitterFraction * backbone_box(spec.pattern).diagonal();
  j["noise_fraction"] =
      spec.variant == Variant::scattered_noised ? kNoiseFraction : 0.0;
  return j.dump(2) + "\n";
}

void save_spec_json(const std::string& path, const BenchmarkSpec& spec) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write spec file: " + path);
  out << spec_json(spec);
  if (!out) throw IoError("cannot write spec file: " + path);
}

}  // namespace graphfit
