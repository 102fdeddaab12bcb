#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multlab/hilbert.hpp"
#include "multlab/workspace.hpp"

namespace multlab {

/// Contents of a problem file. Elements stay as text until a field is chosen.
struct ProblemFile {
  std::string ring_kind = "poly-local";  // "poly-local" | "monomial-curve"
  std::vector<std::string> vars;
  std::vector<std::uint32_t> exponents;
  std::vector<std::string> annihilator;
  std::string field = "fp:32003";
  /// Empty means the maximal ideal.
  std::vector<std::string> q;
  std::vector<std::string> a;
  /// Optional factorization a_1 = factor[0] * factor[1] (verify-identities).
  std::vector<std::string> factor;
  /// Optional exponents n_i (verify-identities).
  std::vector<std::uint32_t> powers;
  std::map<std::string, std::int64_t> options;

  RingSpec ring() const;
  /// Option value, or `fallback` when absent. Raises InputError outside [lo, hi].
  std::int64_t option(const std::string& key, std::int64_t fallback, std::int64_t lo = 0,
                      std::int64_t hi = 1'000'000) const;
};

/// Keys accepted under [options].
const std::vector<std::string>& known_options();

/// Parses the TOML subset documented in docs/problem-format.md.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);
/// Canonical text; parse_problem(to_text(p)) reproduces p.
std::string to_text(const ProblemFile& p);

Limits limits_of(const ProblemFile& p);
HilbertOptions hilbert_options_of(const ProblemFile& p);

}  // namespace multlab
