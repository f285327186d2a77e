#include "twinv/number_theory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "twinv/errors.hpp"

namespace twinv {

std::int64_t mod(std::int64_t x, std::int64_t n) {
  if (n < 1) throw UsageError("modulus must be >= 1, got " + std::to_string(n));
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  const __int128 p = static_cast<__int128>(mod(a, n)) * mod(b, n);
  return static_cast<std::int64_t>(p % n);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::int64_t g = gcd(a, b);
  return (a < 0 ? -a : a) / g * (b < 0 ? -b : b);
}

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw UsageError("euler_phi needs n >= 1");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

CongruenceSolution solve_linear_congruence(std::int64_t a, std::int64_t c, std::int64_t n,
                                           std::size_t cap) {
  if (n < 1) throw UsageError("congruence modulus must be >= 1, got " + std::to_string(n));
  a = mod(a, n);
  c = mod(c, n);
  const std::int64_t d = gcd(a, n);  // gcd(0, n) = n
  CongruenceSolution out;
  if (c % d != 0) return out;

  out.solvable = true;
  out.count = d;
  const std::int64_t step = n / d;
  // a/d is a unit modulo n/d; its inverse times c/d is the least solution.
  const ExtendedGcd eg = extended_gcd(a / d, step);
  const std::int64_t base = step == 1 ? 0 : mul_mod(eg.x, c / d, step);

  const auto listed = static_cast<std::int64_t>(std::min<std::size_t>(cap, static_cast<std::size_t>(d)));
  out.truncated = listed < d;
  out.solutions.reserve(static_cast<std::size_t>(listed));
  for (std::int64_t t = 0; t < listed; ++t) {
    const std::int64_t k = base + t * step;
    if (mul_mod(a, k, n) != c) {
      throw std::logic_error("congruence solution failed substitution");
    }
    out.solutions.push_back(k);
  }
  return out;
}

namespace {

void require_positive(std::int64_t x, const char* name) {
  if (x < 1) throw UsageError(std::string(name) + " must be a positive integer, got " + std::to_string(x));
}

}  // namespace

bool check_gcd_lcm_inequality(std::int64_t x1, std::int64_t x2) {
  require_positive(x1, "x1");
  require_positive(x2, "x2");
  return x1 + x2 <= lcm(x1, x2) + gcd(x1, x2);
}

bool check_gcd_triple_inequality(std::int64_t x1, std::int64_t x2, std::int64_t x3) {
  require_positive(x1, "x1");
  require_positive(x2, "x2");
  require_positive(x3, "x3");
  return gcd(x1, x2) + gcd(x3, x2) <= x2 + gcd(x1, x3);
}

std::int64_t gcd_of_neighbors(std::int64_t x1) {
  require_positive(x1, "x1");
  return gcd(x1 - 1, x1 + 1);
}

}  // namespace twinv
