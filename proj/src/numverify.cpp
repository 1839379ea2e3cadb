#include "pfree/numverify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace pfree {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Sign of the permutation sorting `seq`, or 0 if it has a repeated entry.
int sort_sign(std::vector<int> seq) {
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
      if (seq[j - 1] == seq[j]) return 0;
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  }
  return sign;
}

std::uint64_t count_hits(int dim, std::uint64_t seed, std::uint64_t chunk, std::uint64_t count) {
  std::uint64_t hits = 0;
  std::uint64_t counter = 0;
  for (std::uint64_t s = 0; s < count; ++s) {
    double r2 = 0.0;
    for (int d = 0; d < dim; ++d) {
      // 53 random bits mapped to [-1, 1).
      double u = static_cast<double>(counter_random(seed, chunk, counter++) >> 11) * 0x1.0p-52 - 1.0;
      r2 += u * u;
    }
    hits += r2 <= 1.0;
  }
  return hits;
}

}  // namespace

std::uint64_t counter_random(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  return splitmix(splitmix(seed ^ splitmix(stream)) + counter);
}

Rational wedge_power_top(const ConstantTwoForm& f) {
  const std::size_t n = f.coefficients.size();
  if (n == 0) return Rational(1);
  // Block j contributes the 1-forms dx_j = 2j and dy_j = 2j+1; the target
  // volume form is the increasing sequence 0, 1, ..., 2n-1.
  std::vector<std::size_t> tuple(n, 0);
  std::vector<int> oneforms(2 * n);
  Rational total;
  for (;;) {
    for (std::size_t k = 0; k < n; ++k) {
      oneforms[2 * k] = static_cast<int>(2 * tuple[k]);
      oneforms[2 * k + 1] = static_cast<int>(2 * tuple[k] + 1);
    }
    if (int s = sort_sign(oneforms); s != 0) {
      Rational term(s);
      for (auto j : tuple) term *= f.coefficients[j];
      total += term;
    }
    std::size_t pos = 0;
    while (pos < n && ++tuple[pos] == n) tuple[pos++] = 0;
    if (pos == n) break;
  }
  return total;
}

McEstimate mc_ball_volume(int dim, const McConfig& cfg) {
  if (dim < 2 || dim % 2 != 0) throw Error(Errc::BadDimension, "dimension must be even and >= 2");
  if (cfg.samples < 1 || cfg.chunks < 1)
    throw Error(Errc::InvalidArgument, "samples and chunks must be >= 1");

  const std::uint64_t chunks = std::min(cfg.chunks, cfg.samples);
  std::vector<std::uint64_t> hits(chunks, 0);
  auto chunk_size = [&](std::uint64_t c) {
    return cfg.samples / chunks + (c < cfg.samples % chunks ? 1 : 0);
  };

  const std::uint64_t workers =
      std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, chunks);
  if (workers == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) hits[c] = count_hits(dim, cfg.seed, c, chunk_size(c));
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t c = w; c < chunks; c += workers)
          hits[c] = count_hits(dim, cfg.seed, c, chunk_size(c));
      });
    }
  }

  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  const double n = static_cast<double>(cfg.samples);
  const double frac = static_cast<double>(total) / n;
  const double cube = std::ldexp(1.0, dim);
  return {frac * cube, cube * std::sqrt(frac * (1.0 - frac) / n)};
}

McEstimate sphere_chern_numeric(const SphereAction& a, const McConfig& cfg) {
  a.require_nonzero();
  ConstantTwoForm form;
  for (const auto& w : a.weights) form.coefficients.emplace_back(Rational(1, w));
  const double top = wedge_power_top(form).to_double();
  const int n = static_cast<int>(a.weights.size());
  const auto vol = mc_ball_volume(2 * n, cfg);
  const double scale = top * std::pow(std::numbers::pi, -n);
  return {scale * vol.estimate, std::abs(scale) * vol.std_error};
}

}  // namespace pfree
