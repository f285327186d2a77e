#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace twinv {

// Residue of x in [0, n). Requires n >= 1.
std::int64_t mod(std::int64_t x, std::int64_t n);

// (a * b) mod n without intermediate overflow.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n);

// Non-negative gcd with gcd(0, n) = |n|.
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

struct ExtendedGcd {
  std::int64_t g;  // gcd(a, b) >= 0
  std::int64_t x;  // a*x + b*y == g
  std::int64_t y;
};

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

// Euler totient by trial division.
std::int64_t euler_phi(std::int64_t n);

// Trial division; adequate for the campaign prime lists.
bool is_prime(std::int64_t n);

inline constexpr std::size_t kDefaultSolutionCap = 1'000'000;

// Solutions of a*k = c (mod n). `count` is always exact; `solutions` holds
// the smallest min(count, cap) representatives in ascending order.
struct CongruenceSolution {
  bool solvable = false;
  std::int64_t count = 0;
  std::vector<std::int64_t> solutions;
  bool truncated = false;
};

// Solves a*k = c (mod n) for n >= 1. Negative a or c are reduced first.
// Solvable iff gcd(a, n) | c, in which case there are exactly gcd(a, n)
// incongruent solutions, all spaced n / gcd(a, n) apart.
CongruenceSolution solve_linear_congruence(std::int64_t a, std::int64_t c, std::int64_t n,
                                           std::size_t cap = kDefaultSolutionCap);

// x1 + x2 <= lcm(x1, x2) + gcd(x1, x2) for x1, x2 >= 1.
bool check_gcd_lcm_inequality(std::int64_t x1, std::int64_t x2);

// gcd(x1, x2) + gcd(x3, x2) <= x2 + gcd(x1, x3) for x1, x2, x3 >= 1.
bool check_gcd_triple_inequality(std::int64_t x1, std::int64_t x2, std::int64_t x3);

// gcd(x1 - 1, x1 + 1), computed directly. 2 for odd x1, 1 for even x1.
std::int64_t gcd_of_neighbors(std::int64_t x1);

}  // namespace twinv
