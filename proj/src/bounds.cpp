#include "expander/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "expander/error.hpp"
#include "expander/numtheory.hpp"

namespace expander::bounds {

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::DeltaExact: return "delta_exact";
    case BoundKind::ChainIntermediate: return "chain_intermediate";
    case BoundKind::Trudgian: return "trudgian";
    case BoundKind::BHP: return "bhp";
    case BoundKind::CramerRH: return "rh";
  }
  return "unknown";
}

std::string_view to_string(Quantity quantity) {
  switch (quantity) {
    case Quantity::Lambda2Upper: return "lambda2_upper";
    case Quantity::GapLower: return "gap_lower";
    case Quantity::Lambda2Predicted: return "lambda2_predicted";
  }
  return "unknown";
}

ChainBound lambda2_bound_chain(std::uint64_t k, std::uint64_t p) {
  const nt::PrimePlan plan = nt::prime_plan(k);
  if (plan.p != p)
    throw ValidationError("lambda2_bound_chain: p = " + std::to_string(p) +
                          " is not the greatest prime below k = " + std::to_string(k));
  const double kd = static_cast<double>(k);
  ChainBound c;
  c.intermediate = 2.0 * std::sqrt(static_cast<double>(p)) + static_cast<double>(plan.increments);
  c.normalized = 2.0 * (1.0 + plan.delta_k) * std::sqrt(kd - 1.0);
  return c;
}

BoundValue gap_bound_trudgian(std::uint64_t k) {
  if (k < 3) throw ValidationError("gap_bound_trudgian: needs k >= 3");
  const double kd = static_cast<double>(k);
  const double lg = std::log(kd - 1.0);
  BoundValue b;
  b.model = std::string(to_string(BoundKind::Trudgian));
  b.quantity = Quantity::GapLower;
  b.value = kd * (1.0 - 2.0 / (111.0 * lg * lg)) - 2.0 * std::sqrt(kd - 1.0);
  b.valid = k >= kTrudgianThreshold;
  return b;
}

BoundValue gap_bound_bhp(std::uint64_t k, const BoundModel& model) {
  if (k < 3) throw ValidationError("gap_bound_bhp: needs k >= 3");
  const double kd = static_cast<double>(k);
  BoundValue b;
  b.model = std::string(to_string(BoundKind::BHP));
  b.quantity = Quantity::GapLower;
  b.value = kd - 2.0 * (1.0 + std::pow(kd, kBhpExponent - 0.5)) * std::sqrt(kd - 1.0);
  b.valid = model.bhp_threshold.has_value() && k >= *model.bhp_threshold;
  b.advisory = !b.valid;
  return b;
}

double rh_exponent(double x, double c) {
  if (!(c > 0.0)) throw ValidationError("rh: constant C must be positive");
  if (!(x > 1.0)) throw ValidationError("rh: needs k - 1 > 1");
  const double lx = std::log(x);
  return std::log1p(c * lx) / lx;
}

RhBound gap_bound_rh(std::uint64_t k, double c) {
  if (k < 3) throw ValidationError("gap_bound_rh: needs k >= 3");
  const double kd = static_cast<double>(k);
  const double x = kd - 1.0;
  RhBound b;
  b.r = rh_exponent(x, c);
  b.gap = kd - 2.0 * std::pow(x, 0.5 + b.r);
  b.gap_expanded = kd - 2.0 * (1.0 + c * std::log(x)) * std::sqrt(x);
  return b;
}

std::string DeltaTableRow::upper_bound_text() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%llu.%02llu",
                static_cast<unsigned long long>(ceil_hundredths / 100),
                static_cast<unsigned long long>(ceil_hundredths % 100));
  return buf;
}

std::vector<Range> default_delta_ranges() {
  return {{10, 100},           {100, 1'000},         {1'000, 10'000},
          {10'000, 100'000}, {100'000, 1'000'000}, {1'000'000, 10'000'000}};
}

std::vector<DeltaTableRow> delta_table(const std::vector<Range>& ranges) {
  std::vector<DeltaTableRow> rows;
  rows.reserve(ranges.size());
  for (const Range& r : ranges) {
    const nt::DeltaMax m = nt::max_delta_in_range(r.lo, r.hi);
    DeltaTableRow row;
    row.lo = r.lo;
    row.hi = r.hi;
    row.max_delta = m.max_delta;
    row.witness_k = m.witness_k;
    row.p = m.p;
    row.gap = m.gap;
    row.ceil_hundredths = nt::ceil_hundredths(m.gap, m.p);
    rows.push_back(row);
  }
  return rows;
}

std::vector<BoundValue> evaluate_all(std::uint64_t k, const BoundModel& model) {
  const nt::PrimePlan plan = nt::prime_plan(k);
  const ChainBound chain = lambda2_bound_chain(k, plan.p);
  std::vector<BoundValue> out;

  BoundValue inter;
  inter.model = std::string(to_string(BoundKind::ChainIntermediate));
  inter.quantity = Quantity::Lambda2Upper;
  inter.value = chain.intermediate;
  inter.valid = true;
  out.push_back(inter);

  BoundValue normalized;
  normalized.model = std::string(to_string(BoundKind::DeltaExact));
  normalized.quantity = Quantity::Lambda2Upper;
  normalized.value = chain.normalized;
  normalized.valid = true;
  out.push_back(normalized);

  out.push_back(gap_bound_trudgian(k));
  out.push_back(gap_bound_bhp(k, model));

  BoundValue rh;
  rh.model = std::string(to_string(BoundKind::CramerRH));
  rh.quantity = Quantity::GapLower;
  rh.value = gap_bound_rh(k, model.rh_constant).gap;
  rh.valid = true;
  rh.conditional = true;
  out.push_back(rh);
  return out;
}

}  // namespace expander::bounds
