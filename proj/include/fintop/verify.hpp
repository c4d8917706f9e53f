#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fintop/order.hpp"
#include "fintop/space.hpp"

namespace fintop::verify {

struct Counterexample {
  /// Serialized space document (empty for properties that are not per-space).
  std::string space_document;
  std::string witness;
};

struct VerifyReport {
  std::string property;
  std::size_t spaces_checked = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  double wall_time_ms = 0.0;
};

/// Failure description, or nullopt when the space satisfies the property.
using SpaceCheck = std::function<std::optional<std::string>(const FinSpace&)>;
using GlobalCheck = std::function<std::optional<Counterexample>(std::size_t max_n)>;

/// Which spaces a per-space property runs over.
struct Corpus {
  /// Enumerated sizes are min_n..min(max_n, cap_n), where max_n comes from
  /// the run options.
  std::size_t min_n = 1;
  std::size_t cap_n = 5;
  /// Also run over the seeded random samples.
  bool sampled = false;
  /// Enumerate exactly these sizes regardless of max_n (used by the n = 5
  /// triple sweep).
  std::vector<std::size_t> fixed_sizes;
};

struct Property {
  std::string name;
  std::string description;
  Corpus corpus;
  SpaceCheck check;
  GlobalCheck global;
};

struct VerifyOptions {
  std::size_t max_n = 4;
  std::size_t samples = 0;
  std::size_t sample_n = 6;
  std::uint64_t seed = 1;
  unsigned workers = 0;  ///< 0 picks the hardware concurrency
};

/// The full property catalogue, in a fixed order.
const std::vector<Property>& properties();
const Property* find_property(const std::string& name);

/// Runs one property. Failures report the first counterexample in corpus
/// order, independent of the worker count.
VerifyReport run_property(const Property& property, const VerifyOptions& options);
std::vector<VerifyReport> run_all(const VerifyOptions& options);

/// Re-checks a per-space property on one space.
std::optional<std::string> replay(const Property& property, const FinSpace& space);

/// One JSON object per report, no trailing newline.
std::string to_json_line(const VerifyReport& report);

// Independent oracles -------------------------------------------------------

/// Every family of subsets of n points that contains the empty and full set
/// and is closed under union and intersection (n <= 4), by direct search
/// over families.
std::vector<OpenFamily> enumerate_open_families(std::size_t n);

/// Continuity by the preimage-of-opens definition.
bool is_continuous_by_preimage(const SpaceMap& f);

}  // namespace fintop::verify
