#pragma once

// Reproducibility battery run by `grig verify`: every constructive claim checked
// at desk scale, deterministic for a given seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "grig/omega.hpp"

namespace grig {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string id;     // C1 .. C12
  std::string omega;  // empty for checks that do not depend on omega
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyOptions {
  std::vector<OmegaSequence> omegas;  // empty: default_omega_suite()
  std::uint64_t seed = 20140614;
  bool quick = false;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  bool quick = false;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// 012, 01, 02, 2:01, 10:012 and the eventually constant 0:1.
std::vector<OmegaSequence> default_omega_suite();

/// Uniform length in [0, max_length], uniform letters.
GeneratorWord random_word(std::mt19937_64& rng, std::size_t max_length);

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace grig
