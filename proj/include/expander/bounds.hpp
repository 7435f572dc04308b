#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace expander::bounds {

/// Natural logarithm throughout.

/// Smallest k covered by Trudgian's prime-interval estimate.
inline constexpr std::uint64_t kTrudgianThreshold = 2'898'239;

/// Baker-Harman-Pintz exponent: a prime lies in (n, n + n^0.525].
inline constexpr double kBhpExponent = 0.525;

enum class BoundKind { DeltaExact, ChainIntermediate, Trudgian, BHP, CramerRH };

std::string_view to_string(BoundKind kind);

/// Tunables for the models whose constants are not pinned down.
struct BoundModel {
  /// "For all sufficiently large k": no threshold is known, so BHP values
  /// are advisory unless one is configured.
  std::optional<std::uint64_t> bhp_threshold;
  /// Constant C in p' - p <= C sqrt(p) log p. A convention, not a theorem.
  double rh_constant = 1.0;
};

enum class Quantity {
  Lambda2Upper,
  GapLower,
  Lambda2Predicted,  // an exact prediction, compared with a tolerance
};

std::string_view to_string(Quantity quantity);

/// A spectral-gap lower bound or lambda_2 upper bound with its flags.
struct BoundValue {
  std::string model;
  Quantity quantity = Quantity::GapLower;
  double value = 0.0;
  bool valid = false;
  bool conditional = false;  // holds only under RH
  bool advisory = false;     // validity range unknown
};

struct ChainBound {
  double intermediate = 0.0;  // 2 sqrt(p) + (k - p - 1)
  double normalized = 0.0;    // 2 (1 + delta_k) sqrt(k - 1)
};

/// Requires p == prev_prime(k).
ChainBound lambda2_bound_chain(std::uint64_t k, std::uint64_t p);

/// k (1 - 2 / (111 log^2 (k-1))) - 2 sqrt(k-1); valid for k >= 2898239.
BoundValue gap_bound_trudgian(std::uint64_t k);

/// k - 2 (1 + k^0.025) sqrt(k-1); advisory unless k reaches the configured
/// threshold.
BoundValue gap_bound_bhp(std::uint64_t k, const BoundModel& model = {});

struct RhBound {
  double gap = 0.0;            // k - 2 (k-1)^(1/2 + r)
  double gap_expanded = 0.0;   // k - 2 (1 + C log(k-1)) sqrt(k-1)
  double r = 0.0;
};

/// Requires k >= 3 and C > 0.
RhBound gap_bound_rh(std::uint64_t k, double c);

/// r(x) = log(1 + C log x) / log x with x = k - 1 (real for testing).
double rh_exponent(double x, double c);

struct DeltaTableRow {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  double max_delta = 0.0;
  std::uint64_t witness_k = 0;
  std::uint64_t p = 0;
  std::uint64_t gap = 0;
  std::uint64_t ceil_hundredths = 0;

  /// The ceiling rounded to two decimals, e.g. "1.52".
  std::string upper_bound_text() const;
};

struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

/// The six decade ranges 10..100, 10^2..10^3, ..., 10^6..10^7.
std::vector<Range> default_delta_ranges();

std::vector<DeltaTableRow> delta_table(const std::vector<Range>& ranges);

/// Every model evaluated at k, one entry per model line.
std::vector<BoundValue> evaluate_all(std::uint64_t k, const BoundModel& model = {});

}  // namespace expander::bounds
