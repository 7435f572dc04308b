#pragma once

#include <cstdint>
#include <vector>

namespace expander::nt {

/// Exact primality for every n < 2^64 (deterministic Miller-Rabin).
bool is_prime(std::uint64_t n);

/// Largest prime strictly below k. Requires k >= 3.
std::uint64_t prev_prime(std::uint64_t k);

/// Smallest prime strictly above p.
std::uint64_t next_prime(std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t prime);

/// Reduces a signed value into [0, m).
std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m);

/// Regularity target k together with the prime gap that controls it:
/// p is the greatest prime below k, p_next the prime after p.
struct PrimePlan {
  std::uint64_t k = 0;
  std::uint64_t p = 0;
  std::uint64_t p_next = 0;
  std::uint64_t increments = 0;  // k - p - 1
  double delta_k = 0.0;          // (p_next - p) / sqrt(p)
};

PrimePlan prime_plan(std::uint64_t k);

double delta_k(std::uint64_t k);

struct DeltaMax {
  double max_delta = 0.0;
  std::uint64_t witness_k = 0;  // smallest k in range attaining the maximum
  std::uint64_t p = 0;
  std::uint64_t gap = 0;
};

/// Maximum of delta_k over lo <= k <= hi (both ends inclusive).
/// Walks the primes prev_prime(lo) .. prev_prime(hi), since delta_k only
/// changes when k passes a prime.
DeltaMax max_delta_in_range(std::uint64_t lo, std::uint64_t hi);

/// ceil(100 * gap / sqrt(p)) computed exactly in integers.
std::uint64_t ceil_hundredths(std::uint64_t gap, std::uint64_t p);

/// Legendre symbol (a|q) for an odd prime q, via Euler's criterion.
int legendre(std::int64_t a, std::uint64_t q);

/// Square root of a modulo the odd prime q (Tonelli-Shanks). Returns the
/// smaller of the two roots. Throws ValidationError for non-residues.
std::uint64_t sqrt_mod(std::int64_t a, std::uint64_t q);

struct FourSquareTuple {
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::int64_t a3 = 0;

  auto operator<=>(const FourSquareTuple&) const = default;
};

/// All solutions of a0^2 + a1^2 + a2^2 + a3^2 = p with a0 > 0 odd and
/// a1, a2, a3 even, in lexicographic order. For a prime p = 1 (mod 4)
/// there are exactly p + 1 of them.
std::vector<FourSquareTuple> four_square_generators(std::uint64_t p);

}  // namespace expander::nt
