#include "pfree/model_zoo.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pfree {

void SphereAction::require_nonzero() const {
  if (weights.empty()) throw Error(Errc::EmptyInput, "sphere action needs at least one weight");
  for (const auto& w : weights)
    if (w == 0) throw Error(Errc::ZeroWeight, "sphere weights must be nonzero");
}

bool SphereAction::effective() const {
  return !weights.empty() && gcd_all(weights) == 1;
}

void FixedPointData::require_well_formed() const {
  if (points.empty()) return;
  const auto n = points.front().size();
  if (n == 0) throw Error(Errc::EmptyInput, "fixed point weight vectors must be nonempty");
  for (const auto& pt : points) {
    if (pt.size() != n) throw Error(Errc::LengthMismatch, "fixed points have unequal weight counts");
    for (const auto& w : pt)
      if (w == 0) throw Error(Errc::ZeroWeight, "isolated fixed point weights are nonzero");
  }
}

Rational sphere_chern(const SphereAction& a) {
  a.require_nonzero();
  Integer prod = 1;
  for (const auto& w : a.weights) prod *= w;
  return Rational(1, prod);
}

std::optional<LocalData> sphere_local_data(const SphereAction& a) {
  a.require_nonzero();
  if (a.weights.size() < 2)
    throw Error(Errc::InvalidArgument, "need at least two weights (S^3 or larger)");
  const auto& w = a.weights;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (gcd(w[i], w[j]) != 1) return std::nullopt;

  LocalData L{w.size() - 1, {}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    Integer p = ::abs(w[i]);
    if (p < 2) continue;
    std::vector<Integer> q;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (j != i) q.push_back(w[j]);
    // A negative fiber weight runs the orbit backwards, so the tube's
    // orientation disagrees with the sphere's; conjugating one slice
    // coordinate restores it.
    if (w[i] < 0) q.front() = -q.front();
    L.orbits.push_back(ExceptionalOrbit::make(p, std::move(q)));
  }
  return canonicalize(std::move(L));
}

PredictedData lens_local_data(const Integer& p, const Integer& q) {
  if (p < 2) throw Error(Errc::InvalidModulus, "p must be >= 2");
  if (gcd(q, p) != 1) throw Error(Errc::NotCoprime, "gcd(p, q) != 1");
  LocalData L{1, {ExceptionalOrbit::make(p, {q})}};
  QmodZ e = qmod_z(Rational(mod_inverse(q, p).value(), p));
  return {std::move(L), e};
}

PredictedData single_orbit_local_data(const Integer& p, const std::vector<Integer>& q) {
  if (p < 2) throw Error(Errc::InvalidModulus, "p must be >= 2");
  if (q.empty()) throw Error(Errc::EmptyInput, "weight vector must be nonempty");
  for (const auto& w : q)
    if (gcd(w, p) != 1) throw Error(Errc::NotCoprime, "weight " + w.get_str() + " not a unit mod " + p.get_str());

  const std::size_t n = q.size();
  // r_i = q_i q_{i+1}^-1 (i < n), r_n = q_n, so that q_i = r_i r_{i+1} ... r_n.
  std::vector<Integer> r(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    r[i] = emod(q[i] * mod_inverse(q[i + 1], p).value(), p);
  r[n - 1] = emod(q[n - 1], p);

  auto [data, e] = lens_local_data(p, r[0]);
  for (std::size_t k = 2; k <= n; ++k) {
    data = stabilize(data);
    Integer s = mod_inverse(r[k - 1], p).value();
    data = quotient_by_cyclic(data, s);
    e = ipow(s, k) * e;
  }

  if (data.orbits.size() != 1 || !(data.orbits.front() == ExceptionalOrbit::make(p, q)))
    throw std::logic_error("iterated construction produced the wrong orbit type");
  if (euler_mod_z(data) != e)
    throw std::logic_error("iterated construction disagrees with the orbit-sum formula");
  return {std::move(data), e};
}

namespace {

void require_kawasaki_weights(const std::vector<Integer>& weights) {
  if (weights.empty()) throw Error(Errc::EmptyInput, "need at least one weight");
  for (const auto& w : weights)
    if (w < 1) throw Error(Errc::InvalidArgument, "weighted sphere weights must be positive");
  if (gcd_all(weights) != 1) throw Error(Errc::NotEffective, "gcd of weights != 1");
}

}  // namespace

Integer kawasaki_ell(std::size_t k, const std::vector<Integer>& weights) {
  require_kawasaki_weights(weights);
  const std::size_t n = weights.size() - 1;
  if (k < 1 || k > n)
    throw Error(Errc::BadIndex, "k=" + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");

  // Walk all (k+1)-subsets in lexicographic order.
  std::vector<std::size_t> idx(k + 1);
  for (std::size_t i = 0; i <= k; ++i) idx[i] = i;
  Integer ell = 1;
  for (;;) {
    Integer prod = 1, g = 0;
    for (auto i : idx) {
      prod *= weights[i];
      g = gcd(g, weights[i]);
    }
    ell = lcm(ell, Integer(prod / g));

    std::size_t pos = k + 1;
    while (pos > 0 && idx[pos - 1] == n - (k - (pos - 1))) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j <= k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return ell;
}

Rational kawasaki_chern(const std::vector<Integer>& weights) {
  require_kawasaki_weights(weights);
  const std::size_t n = weights.size() - 1;
  if (n == 0) return Rational(1);

  std::vector<Integer> ell(n + 1);
  for (std::size_t k = 1; k <= n; ++k) ell[k] = kawasaki_ell(k, weights);

  // gamma_1^n = coef * gamma_n, via gamma_1 gamma_k = (ell_1 ell_k / ell_{k+1}) gamma_{k+1}.
  Rational coef(1);
  for (std::size_t k = 1; k < n; ++k) coef *= Rational(ell[1] * ell[k], ell[k + 1]);
  // c_1^n = (gamma_1 / ell_1)^n, evaluated on the fundamental class where <gamma_n, [B]> = 1.
  return coef / Rational(ipow(ell[1], n));
}

LocalData suspend_fixed_points(const FixedPointData& f, const Integer& p) {
  f.require_well_formed();
  if (f.points.empty()) throw Error(Errc::EmptyInput, "no fixed points to suspend");
  if (p < 2) throw Error(Errc::NotPrime, p.get_str() + " is not prime");
  if (!p.fits_ulong_p() || sizeof(unsigned long) < 8)
    throw Error(Errc::PrimeTooLarge, "primality is only certified below 2^64");
  if (!is_prime_u64(p.get_ui())) throw Error(Errc::NotPrime, p.get_str() + " is not prime");

  LocalData L{f.points.front().size(), {}};
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    for (const auto& w : f.points[i])
      if (::abs(w) >= p)
        throw Error(Errc::PrimeTooSmall,
                    "p=" + p.get_str() + " must exceed |weight| " + Integer(::abs(w)).get_str());
    L.orbits.push_back(ExceptionalOrbit::make(p, f.points[i], "z" + std::to_string(i)));
  }
  return canonicalize(std::move(L));
}

FixedPointData projective_space_fixed_data(const std::vector<Integer>& params) {
  if (params.size() < 2) throw Error(Errc::InvalidArgument, "need at least two parameters");
  std::set<Integer> seen;
  for (const auto& a : params)
    if (!seen.insert(a).second) throw Error(Errc::DuplicateParameter, "parameter " + a.get_str() + " repeated");

  FixedPointData f;
  for (std::size_t i = 0; i < params.size(); ++i) {
    std::vector<Integer> w;
    for (std::size_t j = 0; j < params.size(); ++j)
      if (j != i) w.push_back(params[j] - params[i]);
    f.points.push_back(std::move(w));
  }
  return f;
}

long sphere_singular_dim(const std::vector<Integer>& weights) {
  SphereAction{weights}.require_nonzero();
  if (gcd_all(weights) != 1) throw Error(Errc::NotEffective, "gcd of weights != 1");

  std::set<Integer> primes;
  for (const auto& w : weights)
    for (auto& d : prime_divisors(w)) primes.insert(d);

  long best = -1;
  for (const auto& d : primes) {
    long m = 0;
    for (const auto& w : weights)
      if (mpz_divisible_p(w.get_mpz_t(), d.get_mpz_t())) ++m;
    best = std::max(best, 2 * m - 2);
  }
  return best;
}

std::pair<QmodZ, QmodZ> liang_prediction(const std::vector<Integer>& orders) {
  Integer prod = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 2) throw Error(Errc::InvalidArgument, "isotropy orders must be >= 2");
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      if (gcd(orders[i], orders[j]) != 1)
        throw Error(Errc::NotPairwiseCoprime,
                    "gcd(" + orders[i].get_str() + "," + orders[j].get_str() + ") != 1");
    prod *= orders[i];
  }
  Rational v(1, prod);
  return {qmod_z(v), qmod_z(-v)};
}

}  // namespace pfree
