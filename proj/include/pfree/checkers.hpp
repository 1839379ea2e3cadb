#pragma once

#include <string>
#include <vector>

#include "pfree/local_data.hpp"
#include "pfree/model_zoo.hpp"

namespace pfree {

/// Outcome of one arithmetic constraint check. `lhs` and `rhs` are exact
/// values rendered as "num/den"; `passed` iff lhs equals rhs.
struct CheckReport {
  std::string check_name;
  bool passed = false;
  std::string lhs;
  std::string rhs;
  std::vector<std::string> witnesses;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct SymplecticStratum {
  Integer area;
  Integer p;
  std::vector<Integer> q;
};

// Constraints that only hold when e = 0. They throw Error(NotApplicable)
// for data with e != 0.

/// A non-free action with e = 0 has at least two exceptional orbits, and
/// exactly two must share their isotropy order.
CheckReport check_min_orbits(const LocalData& L);

/// With e = 0 every exceptional order p shares a factor with another orbit's.
CheckReport check_gcd_partner(const LocalData& L);

/// sum over fixed points of 1 / prod(weights) is exactly zero.
CheckReport check_localization_sum(const FixedPointData& f);

/// lcm(p(C)) * e vanishes mod Z.
CheckReport check_weinstein(const LocalData& L);

/// ell^(k+1) * |chern| is an integer for a linear sphere action, with
/// ell = lcm|w_i| and k the singular dimension.
CheckReport check_sphere_conjecture(const std::vector<Integer>& weights);

/// Area-weighted orbit sum over isotropy strata of a symplectic manifold vanishes mod Z.
CheckReport check_symplectic_sum(const std::vector<SymplecticStratum>& strata);

/// e equals one of +-1/prod(p(C)) mod Z (pairwise coprime orders).
CheckReport check_liang(const LocalData& L);

}  // namespace pfree
