#include "expander/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "expander/error.hpp"

namespace expander::nt {

namespace {

constexpr std::array<std::uint64_t, 15> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19,
                                                        23, 29, 31, 37, 41, 43, 47};

// Bases {2, 7, 61} are a deterministic witness set for n < 4,759,123,141.
constexpr std::array<std::uint64_t, 3> kBases32 = {2, 7, 61};

// Sinclair's seven bases: deterministic for every n < 2^64.
constexpr std::array<std::uint64_t, 7> kBases64 = {2,      325,     9375,      28178,
                                                   450775, 9780504, 1795265022};

bool miller_rabin_round(std::uint64_t n, std::uint64_t base, std::uint64_t d, unsigned s) {
  base %= n;
  if (base == 0) return true;
  std::uint64_t x = pow_mod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool is_square_u64(std::uint64_t x, std::uint64_t& root) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  root = r;
  return r * r == x;
}

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t prime) {
  a %= prime;
  if (a == 0) throw ValidationError("inverse_mod: zero has no inverse");
  return pow_mod(a, prime - 2, prime);
}

std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  std::int64_t r = a % sm;
  if (r < 0) r += sm;
  return static_cast<std::uint64_t>(r);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : kSmallPrimes) {
    if (n == sp) return true;
    if (n % sp == 0) return false;
  }
  if (n < 53 * 53) return true;

  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  if (n < 4'759'123'141ULL) {
    for (std::uint64_t b : kBases32)
      if (!miller_rabin_round(n, b, d, s)) return false;
    return true;
  }
  for (std::uint64_t b : kBases64)
    if (!miller_rabin_round(n, b, d, s)) return false;
  return true;
}

std::uint64_t prev_prime(std::uint64_t k) {
  if (k < 3) throw ValidationError("prev_prime: no prime below " + std::to_string(k));
  if (k == 3) return 2;
  std::uint64_t c = k - 1;
  if ((c & 1U) == 0) --c;
  while (!is_prime(c)) c -= 2;
  return c;
}

std::uint64_t next_prime(std::uint64_t p) {
  if (p < 2) return 2;
  if (p >= (std::numeric_limits<std::uint64_t>::max() >> 1))
    throw ValidationError("next_prime: argument exceeds 2^63");
  std::uint64_t c = p + 1;
  if (c == 3) return 3;
  if ((c & 1U) == 0) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

PrimePlan prime_plan(std::uint64_t k) {
  PrimePlan plan;
  plan.k = k;
  plan.p = prev_prime(k);
  plan.p_next = next_prime(plan.p);
  plan.increments = k - plan.p - 1;
  plan.delta_k = static_cast<double>(plan.p_next - plan.p) / std::sqrt(static_cast<double>(plan.p));
  return plan;
}

double delta_k(std::uint64_t k) { return prime_plan(k).delta_k; }

DeltaMax max_delta_in_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 3 || lo > hi)
    throw ValidationError("max_delta_in_range: need 3 <= lo <= hi, got [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
  DeltaMax best;
  std::uint64_t p = prev_prime(lo);
  // Compare gap^2 / p exactly; the double quotient is only for reporting.
  unsigned __int128 best_num = 0;
  std::uint64_t best_den = 1;
  while (p < hi) {
    const std::uint64_t next = next_prime(p);
    const std::uint64_t gap = next - p;
    const unsigned __int128 num = static_cast<unsigned __int128>(gap) * gap;
    if (best.p == 0 || num * best_den > best_num * p) {
      best_num = num;
      best_den = p;
      best.p = p;
      best.gap = gap;
      best.witness_k = std::max(lo, p + 1);
    }
    p = next;
  }
  best.max_delta = static_cast<double>(best.gap) / std::sqrt(static_cast<double>(best.p));
  return best;
}

std::uint64_t ceil_hundredths(std::uint64_t gap, std::uint64_t p) {
  if (p == 0) throw ValidationError("ceil_hundredths: p must be positive");
  // Smallest m with m^2 * p >= 10^4 * gap^2.
  const unsigned __int128 target = static_cast<unsigned __int128>(10000) * gap * gap;
  auto m = static_cast<std::uint64_t>(100.0 * static_cast<double>(gap) /
                                      std::sqrt(static_cast<double>(p)));
  auto fits = [&](std::uint64_t c) {
    return static_cast<unsigned __int128>(c) * c * p >= target;
  };
  while (m > 0 && fits(m - 1)) --m;
  while (!fits(m)) ++m;
  return m;
}

int legendre(std::int64_t a, std::uint64_t q) {
  if (q < 3 || (q & 1U) == 0 || !is_prime(q))
    throw ValidationError("legendre: modulus " + std::to_string(q) + " is not an odd prime");
  const std::uint64_t r = reduce_mod(a, q);
  if (r == 0) return 0;
  return pow_mod(r, (q - 1) / 2, q) == 1 ? 1 : -1;
}

std::uint64_t sqrt_mod(std::int64_t a, std::uint64_t q) {
  const int symbol = legendre(a, q);
  const std::uint64_t n = reduce_mod(a, q);
  if (symbol == 0) return 0;
  if (symbol != 1)
    throw ValidationError("sqrt_mod: " + std::to_string(a) + " is not a square modulo " +
                          std::to_string(q));

  std::uint64_t root = 0;
  if (q % 4 == 3) {
    root = pow_mod(n, (q + 1) / 4, q);
  } else {
    std::uint64_t odd = q - 1;
    unsigned s = 0;
    while ((odd & 1U) == 0) {
      odd >>= 1U;
      ++s;
    }
    std::uint64_t z = 2;
    while (legendre(static_cast<std::int64_t>(z), q) != -1) ++z;

    unsigned m = s;
    std::uint64_t c = pow_mod(z, odd, q);
    std::uint64_t t = pow_mod(n, odd, q);
    root = pow_mod(n, (odd + 1) / 2, q);
    while (t != 1) {
      unsigned i = 0;
      std::uint64_t t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, q);
        ++i;
      }
      std::uint64_t b = c;
      for (unsigned j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, q);
      m = i;
      c = mul_mod(b, b, q);
      t = mul_mod(t, c, q);
      root = mul_mod(root, b, q);
    }
  }
  return std::min(root, q - root);
}

std::vector<FourSquareTuple> four_square_generators(std::uint64_t p) {
  if (!is_prime(p) || p % 4 != 1)
    throw ValidationError("four_square_generators: " + std::to_string(p) +
                          " is not a prime congruent to 1 mod 4");
  std::uint64_t root = 0;
  is_square_u64(p, root);
  const auto bound = static_cast<std::int64_t>(root);
  const auto target = static_cast<std::int64_t>(p);

  std::vector<FourSquareTuple> out;
  for (std::int64_t a0 = 1; a0 <= bound; a0 += 2) {
    const std::int64_t r0 = target - a0 * a0;
    const std::int64_t lim = bound - (bound & 1);
    for (std::int64_t a1 = -lim; a1 <= lim; a1 += 2) {
      const std::int64_t r1 = r0 - a1 * a1;
      if (r1 < 0) continue;
      for (std::int64_t a2 = -lim; a2 <= lim; a2 += 2) {
        const std::int64_t r2 = r1 - a2 * a2;
        if (r2 < 0) continue;
        std::uint64_t a3 = 0;
        if (!is_square_u64(static_cast<std::uint64_t>(r2), a3) || (a3 & 1U) != 0) continue;
        const auto s3 = static_cast<std::int64_t>(a3);
        if (s3 == 0) {
          out.push_back({a0, a1, a2, 0});
        } else {
          out.push_back({a0, a1, a2, -s3});
          out.push_back({a0, a1, a2, s3});
        }
      }
    }
  }
  if (out.size() != p + 1)
    throw std::logic_error("four_square_generators: found " + std::to_string(out.size()) +
                           " tuples, expected p + 1");
  return out;
}

}  // namespace expander::nt
