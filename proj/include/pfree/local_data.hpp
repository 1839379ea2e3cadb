#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pfree/exact_arith.hpp"

namespace pfree {

/// Local invariant (p; q_1, ..., q_n) of one exceptional orbit: the order of
/// the isotropy group Z_p and the slice weights, each a unit mod p.
///
/// Canonical form keeps every weight in [1, p-1] and the vector sorted.
/// Aggregates built by hand may be non-canonical or invalid; `validate`
/// reports that, and `make` rejects it.
struct ExceptionalOrbit {
  Integer p;
  std::vector<Integer> q;
  std::optional<std::string> label;

  /// Validating constructor: reduces weights mod p, sorts, and throws
  /// InvalidLocalData / NotCoprime / InvalidModulus on bad input.
  static ExceptionalOrbit make(const Integer& p, std::vector<Integer> q,
                               std::optional<std::string> label = std::nullopt);

  std::size_t n() const { return q.size(); }
  bool is_canonical() const;
  /// "(p;q1,q2,...)", or the label when present.
  std::string display() const;

  /// Ordering and equality ignore the label.
  friend bool operator==(const ExceptionalOrbit& a, const ExceptionalOrbit& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator<(const ExceptionalOrbit& a, const ExceptionalOrbit& b);
};

/// Local data of a pseudo-free circle action on a (2n+1)-manifold.
/// An empty orbit list is a free action.
struct LocalData {
  std::size_t n = 1;
  std::vector<ExceptionalOrbit> orbits;

  bool is_canonical() const;
  friend bool operator==(const LocalData&, const LocalData&) = default;
};

enum class ViolationKind { BadDimension, OrderTooSmall, ZeroWeight, NotCoprime, LengthMismatch };

struct Violation {
  std::optional<std::size_t> orbit;  // nullopt for whole-data problems
  ViolationKind kind;
  std::string message;
};

/// All invariant violations of L, empty when L is valid.
std::vector<Violation> validate(const LocalData& L);

/// Throws Error(InvalidLocalData) carrying the first violation message.
void require_valid(const LocalData& L);

/// Reduces weights into [1, p-1], sorts each weight vector, sorts orbits.
/// Precondition: validate(L) is empty.
LocalData canonicalize(LocalData L);

/// Chern number e(M) mod Z from the local data: the sum over exceptional
/// orbits of (q_1^-1 ... q_n^-1 mod p) / p.
QmodZ euler_mod_z(const LocalData& L);

/// Crossing with a disc: every weight vector gains a trailing unit weight.
LocalData stabilize(const LocalData& L);

/// Quotient by the cyclic subgroup Z_r of the circle. Weights become
/// r^-1 q mod p. Throws NotCoprime if r shares a factor with any order.
LocalData quotient_by_cyclic(const LocalData& L, const Integer& r);

/// Weights of the induced action on S^1 x_{Z_m} C^n given circle weights x
/// and Z_m rotation numbers mv (both length n+1). The a_i are taken in
/// [0, m). Raw integers; no orbit validation.
std::vector<Integer> quotient_weights(const Integer& m, const std::vector<Integer>& x,
                                     const std::vector<Integer>& mv);

/// Residual S^1/Z_m action when Z_m sits inside the circle (mv = x).
/// Trailing entries are reduced to [0, |x_0|).
std::vector<Integer> subgroup_quotient_weights(const Integer& m, const std::vector<Integer>& x);

/// Slice normal form of an orbit with isotropy Z_p acting on the slice by
/// rotation numbers rot (xi acts by xi^{-rot_i}).
ExceptionalOrbit normal_form(const Integer& p, const std::vector<Integer>& rot);

}  // namespace pfree
