#pragma once

// Brute-force reference computations on machine integers. Nothing here
// calls into the library, so tests can compare the two routes.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using i128 = __int128;

/// Reduced fraction on 128-bit integers with positive denominator.
struct Frac {
  i128 num = 0;
  i128 den = 1;

  static i128 g(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static Frac make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 k = g(n, d);
    if (k == 0) return {0, 1};
    return {n / k, d / k};
  }
  friend Frac operator+(Frac a, Frac b) { return make(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Frac operator*(Frac a, Frac b) { return make(a.num * b.num, a.den * b.den); }
  friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }

  /// Representative in [0, 1).
  Frac frac_part() const {
    i128 r = num % den;
    if (r < 0) r += den;
    return make(r, den);
  }
};

/// Inverse by exhaustive search.
inline std::int64_t brute_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r = ((a % p) + p) % p;
  for (std::int64_t b = 1; b < p; ++b)
    if ((r * b) % p == 1) return b;
  return -1;
}

struct Orbit {
  std::int64_t p;
  std::vector<std::int64_t> q;
};

/// Orbit-sum formula with brute-force inverses.
inline Frac brute_euler(const std::vector<Orbit>& orbits) {
  Frac sum;
  for (const auto& o : orbits) {
    std::int64_t prod = 1;
    for (auto w : o.q) prod = (prod * brute_inverse(w, o.p)) % o.p;
    sum = sum + Frac::make(prod, o.p);
  }
  return sum.frac_part();
}

/// sum_sigma prod_k c_{sigma(k)} over permutations of the block indices.
inline Frac permutation_sum(const std::vector<Frac>& c) {
  std::vector<std::size_t> perm(c.size());
  std::iota(perm.begin(), perm.end(), 0);
  Frac total;
  do {
    Frac term{1, 1};
    for (auto i : perm) term = term * c[i];
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// sum over points of 1/prod(weights), on a common denominator.
inline Frac localization_sum(const std::vector<std::vector<std::int64_t>>& pts) {
  Frac total;
  for (const auto& pt : pts) {
    i128 prod = 1;
    for (auto w : pt) prod *= w;
    total = total + Frac::make(1, prod);
  }
  return total;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

/// Random unit residue in [1, p-1].
inline std::int64_t random_unit(std::mt19937_64& rng, std::int64_t p) {
  std::uniform_int_distribution<std::int64_t> d(1, p - 1);
  for (;;) {
    auto v = d(rng);
    if (std::gcd(v, p) == 1) return v;
  }
}

}  // namespace oracle
