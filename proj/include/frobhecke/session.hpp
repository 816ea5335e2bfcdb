#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "frobhecke/poly.hpp"

namespace fh {

// Deterministic RNG: all draws go through explicit modulo on the raw 64-bit
// stream so results are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}
  long randint(long lo, long hi) {  // inclusive bounds
    return lo + (long)(g_() % (uint64_t)(hi - lo + 1));
  }

 private:
  std::mt19937_64 g_;
};

struct SessionConfig {
  std::string algebraSpec = "builtin:ground";
  bool quantum = false;
  std::string z = "0";
  std::vector<std::string> pinExprs;
  int n = 2;
  int d = 1;
  uint64_t seed = 0;
  std::string format = "text";
};

// Immutable per-invocation context: validated algebra, variant, z, certified
// pins. Quantum sessions require a symmetric algebra with even trace.
class Session {
 public:
  explicit Session(const SessionConfig& cfg);

  const SessionConfig& config() const { return cfg_; }
  const FrobeniusAlgebra& algebra() const { return *alg_; }
  const FrobeniusAlgebra* algebraPtr() const { return alg_.get(); }
  Variant variant() const { return var_; }
  const Rat& z() const { return z_; }
  const std::vector<PolyElement>& pins() const { return pins_; }
  uint64_t seed() const { return cfg_.seed; }
  bool jsonFormat() const { return cfg_.format == "json"; }
  // Stable hash of the full configuration, embedded in reports.
  uint64_t configHash() const;

 private:
  SessionConfig cfg_;
  std::shared_ptr<FrobeniusAlgebra> alg_;
  Variant var_;
  Rat z_;
  std::vector<PolyElement> pins_;
};

}  // namespace fh
