#include "pfree/checkers.hpp"

#include <algorithm>

namespace pfree {

namespace {

const std::string kZero = Rational(0).to_string();

QmodZ require_zero_euler(const LocalData& L) {
  QmodZ e = euler_mod_z(L);
  if (!e.is_zero())
    throw Error(Errc::NotApplicable, "constraint requires e = 0, got e = " + e.to_string());
  return e;
}

}  // namespace

CheckReport check_min_orbits(const LocalData& L) {
  require_zero_euler(L);
  const auto& orbits = L.orbits;
  const std::string count = std::to_string(orbits.size());
  CheckReport rep{"min-orbits", true, count, count, {}};
  if (orbits.size() == 1) {
    // lhs is the orbit count, rhs the smallest count allowed.
    rep.passed = false;
    rep.rhs = "2";
    rep.witnesses.push_back(orbits[0].display());
  } else if (orbits.size() == 2) {
    // lhs and rhs are the two isotropy orders, which must agree.
    rep.lhs = orbits[0].p.get_str();
    rep.rhs = orbits[1].p.get_str();
    rep.passed = orbits[0].p == orbits[1].p;
    if (!rep.passed) rep.witnesses = {orbits[0].display(), orbits[1].display()};
  }
  return rep;
}

CheckReport check_gcd_partner(const LocalData& L) {
  require_zero_euler(L);
  CheckReport rep{"gcd-partner", true, "", "", {}};
  std::size_t unpaired = 0;
  for (std::size_t i = 0; i < L.orbits.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < L.orbits.size() && !found; ++j)
      found = j != i && gcd(L.orbits[i].p, L.orbits[j].p) > 1;
    if (!found) {
      ++unpaired;
      rep.witnesses.push_back(L.orbits[i].display());
    }
  }
  rep.passed = unpaired == 0;
  rep.lhs = std::to_string(unpaired);
  rep.rhs = "0";
  return rep;
}

CheckReport check_localization_sum(const FixedPointData& f) {
  f.require_well_formed();
  Rational sum;
  for (const auto& pt : f.points) {
    Integer prod = 1;
    for (const auto& w : pt) prod *= w;
    sum += Rational(1, prod);
  }
  return {"localization", sum.is_zero(), sum.to_string(), kZero, {}};
}

CheckReport check_weinstein(const LocalData& L) {
  QmodZ e = euler_mod_z(L);
  Integer ell = 1;
  for (const auto& o : L.orbits) ell = lcm(ell, o.p);
  QmodZ scaled = ell * e;
  CheckReport rep{"weinstein", scaled.is_zero(), scaled.to_string(), kZero, {}};
  if (!rep.passed)
    for (const auto& o : L.orbits) rep.witnesses.push_back(o.display());
  return rep;
}

CheckReport check_sphere_conjecture(const std::vector<Integer>& weights) {
  const long k = sphere_singular_dim(weights);  // validates nonzero + effective
  Integer ell = 1;
  for (const auto& w : weights) ell = lcm(ell, w);
  Rational value = Rational(ipow(ell, static_cast<unsigned long>(k + 1))) *
                   sphere_chern(SphereAction{weights}).abs();
  QmodZ frac = qmod_z(value);
  return {"sphere-conjecture", frac.is_zero(), frac.to_string(), kZero, {}};
}

CheckReport check_symplectic_sum(const std::vector<SymplecticStratum>& strata) {
  std::size_t n = strata.empty() ? 0 : strata.front().q.size();
  QmodZ total;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const auto& s = strata[i];
    const std::string tag = "stratum " + std::to_string(i);
    if (s.area < 1) throw Error(Errc::InvalidStratum, tag + ": area must be positive");
    if (s.p < 2) throw Error(Errc::InvalidStratum, tag + ": isotropy order must be >= 2");
    if (s.q.size() != n || n == 0) throw Error(Errc::InvalidStratum, tag + ": weight length mismatch");
    Residue prod(1, s.p);
    for (const auto& w : s.q) {
      if (gcd(w, s.p) != 1) throw Error(Errc::InvalidStratum, tag + ": weight not a unit mod p");
      prod = prod * mod_inverse(w, s.p);
    }
    total = total + s.area * qmod_z(Rational(prod.value(), s.p));
  }
  return {"symplectic", total.is_zero(), total.to_string(), kZero, {}};
}

CheckReport check_liang(const LocalData& L) {
  QmodZ e = euler_mod_z(L);
  std::vector<Integer> orders;
  for (const auto& o : L.orbits) orders.push_back(o.p);
  auto [plus, minus] = liang_prediction(orders);
  CheckReport rep{"liang", false, e.to_string(), plus.to_string(), {}};
  if (e == plus) {
    rep.passed = true;
  } else if (e == minus) {
    rep.passed = true;
    rep.rhs = minus.to_string();
  } else {
    for (const auto& o : L.orbits) rep.witnesses.push_back(o.display());
  }
  return rep;
}

}  // namespace pfree
