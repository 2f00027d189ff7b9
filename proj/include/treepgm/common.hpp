#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

namespace treepgm {

// ---- error taxonomy -------------------------------------------------------

struct structural_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct usage_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct capacity_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct inference_error : std::runtime_error { using std::runtime_error::runtime_error; };
struct training_error : std::runtime_error { using std::runtime_error::runtime_error; };

// ---- numeric helpers -------------------------------------------------------

inline double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + e^z), stable for large |z|
inline double softplus(double z) {
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

inline double logit(double p) { return std::log(p) - std::log1p(-p); }

// Probabilities are clamped before logs so saturated nets keep finite losses.
constexpr double kProbClamp = 1e-12;

inline double clamp_prob(double p) {
  if (p < kProbClamp) return kProbClamp;
  if (p > 1.0 - kProbClamp) return 1.0 - kProbClamp;
  return p;
}

// log Bernoulli(v | sigmoid(z)) = v*z - log(1 + e^z)
inline double log_bernoulli_logit(double v, double z) { return v * z - softplus(z); }

// ---- seeded rng streams ----------------------------------------------------

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent substream for (seed, index). Chains and workers each get their
// own stream so serial and parallel execution draw identical numbers.
inline Rng substream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ (0x9e3779b97f4a7c15ULL + index)));
}

// 17 significant digits: round-trips any double exactly.
inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf);
}

}  // namespace treepgm
