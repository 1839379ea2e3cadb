#pragma once

#include <cstdint>
#include <vector>

#include "pfree/exact_arith.hpp"
#include "pfree/model_zoo.hpp"

namespace pfree {

/// sum_j c_j dx_j ^ dy_j on R^{2n}.
struct ConstantTwoForm {
  std::vector<Rational> coefficients;
};

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  std::uint64_t chunks = 16;
};

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Coefficient of dx_1^dy_1^...^dx_n^dy_n in the n-th wedge power of f,
/// by expanding the product term by term over all index tuples.
Rational wedge_power_top(const ConstantTwoForm& f);

/// Hit-or-miss estimate of the volume of the unit ball in R^dim, sampled
/// from the cube [-1,1]^dim. Chunk c draws from its own counter-based
/// stream, so the result depends only on (seed, samples, chunks).
McEstimate mc_ball_volume(int dim, const McConfig& cfg);

/// pi^-n * (top coefficient of (sum_j (1/w_j) dx_j^dy_j)^n) * Vol(D^{2n}),
/// an estimate of the exact sphere Chern number 1/prod(w_j).
McEstimate sphere_chern_numeric(const SphereAction& a, const McConfig& cfg);

/// Counter-based 64-bit generator: the value at (seed, stream, counter).
std::uint64_t counter_random(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

}  // namespace pfree
