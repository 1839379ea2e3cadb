#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pfree/exact_arith.hpp"
#include "pfree/local_data.hpp"

namespace pfree {

/// Linear circle action t.(z_1..z_n) = (t^{w_1} z_1, ..., t^{w_n} z_n) on S^{2n-1}.
struct SphereAction {
  std::vector<Integer> weights;

  /// Throws ZeroWeight / EmptyInput.
  void require_nonzero() const;
  bool effective() const;
};

/// Weights of the isotropy representations at the isolated fixed points of
/// an almost-complex circle action. All vectors share one length n >= 1.
struct FixedPointData {
  std::vector<std::vector<Integer>> points;

  /// Throws LengthMismatch / ZeroWeight / EmptyInput on malformed data.
  /// An empty point list is accepted.
  void require_well_formed() const;
};

struct PredictedData {
  LocalData data;
  QmodZ e;
};

/// Exact Chern number 1 / prod(w_i) of the linear action on S^{2n-1}.
Rational sphere_chern(const SphereAction& a);

/// Local data of a pseudo-free linear sphere action, one orbit
/// (|w_i|; other weights mod |w_i|) for each |w_i| >= 2. Returns nullopt
/// when some pair of weights is not coprime (non-isolated singular set).
std::optional<LocalData> sphere_local_data(const SphereAction& a);

/// 3-dimensional model with a single (p;q) orbit, with e = q^-1/p.
PredictedData lens_local_data(const Integer& p, const Integer& q);

/// Single-orbit model of type (p; q) built the way the existence proof does:
/// start from the lens model (p; r_1), then alternately stabilize and take
/// the quotient by r_k^-1, tracking e through each quotient's r^n scaling.
/// The tracked value is checked against euler_mod_z before returning.
PredictedData single_orbit_local_data(const Integer& p, const std::vector<Integer>& q);

/// Kawasaki's coefficient ell_k for weights p_0..p_n (1 <= k <= n).
Integer kawasaki_ell(std::size_t k, const std::vector<Integer>& weights);

/// Chern number of S^{2n+1}/S^1 through the integral cohomology ring:
/// c_1 = gamma_1 / ell_1 and gamma_1^n = (ell_1^n / ell_n) gamma_n.
Rational kawasaki_chern(const std::vector<Integer>& weights);

/// M x S^1 with t.(x,w) = (t.x, t^p w): one (p; q(z) mod p) orbit per fixed point.
LocalData suspend_fixed_points(const FixedPointData& f, const Integer& p);

/// Fixed points of the toric action on CP^n with parameters a_0..a_n:
/// point i has weights (a_j - a_i), j != i.
FixedPointData projective_space_fixed_data(const std::vector<Integer>& params);

/// Dimension of the singular set of S^{2n-1}/S^1 for a linear action:
/// max over primes d of 2 * #{i : d | w_i} - 2, or -1 when the action is free.
long sphere_singular_dim(const std::vector<Integer>& weights);

/// The two admissible values +-1/prod(q_i) mod Z for a pseudo-free
/// homotopy sphere with pairwise coprime isotropy orders q_i.
std::pair<QmodZ, QmodZ> liang_prediction(const std::vector<Integer>& orders);

}  // namespace pfree
