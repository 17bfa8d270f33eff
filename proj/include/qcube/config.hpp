#pragma once
// Runtime configuration.  The asymptotic statements carry unspecified
// constants; they are surfaced here so reports can vary them, and never
// baked into an assertion.

#include <cmath>
#include <optional>
#include <string>

namespace qcube {

struct Config {
  // main-phase admission threshold is threshold_base^d
  long double threshold_base = 1.9L;
  // small/large component cutoff; defaults to 2^((log2 d)^3) when unset
  std::optional<long double> cutoff_override;
  // implied constant of the Omega(.) terms
  long double zeta = 1.0L;
  // exponent constant c in the d^(c*x) rooted-census bound
  long double linkage_exponent = 2.0L;
  // implied constant of O(.) cost terms
  long double big_o_const = 1.0L;
  // tolerance for entropy inequalities
  long double entropy_tol = 1e-9L;
  // shard count for the internally parallel counters
  int threads = 1;

  long double threshold(int d) const {
    return std::pow(threshold_base, static_cast<long double>(d));
  }

  long double cutoff(int d) const {
    if (cutoff_override) return *cutoff_override;
    long double ld = std::log2(static_cast<long double>(d));
    return std::exp2(ld * ld * ld);
  }
};

// Parses a "key = value" text file (one pair per line, '#' comments).
// Unknown keys are an error.  Returns defaults when path is empty.
Config load_config(const std::string& path);

// Applies a single key=value assignment; throws on unknown key or bad value.
void apply_config_entry(Config& cfg, const std::string& key,
                        const std::string& value);

}  // namespace qcube
