#include "pfree/local_data.hpp"

#include <algorithm>

namespace pfree {

namespace {

std::string orbit_tag(std::size_t i) { return "orbit " + std::to_string(i); }

}  // namespace

ExceptionalOrbit ExceptionalOrbit::make(const Integer& p, std::vector<Integer> q,
                                        std::optional<std::string> label) {
  if (p < 2) throw Error(Errc::InvalidModulus, "isotropy order " + p.get_str() + " < 2");
  for (auto& w : q) {
    w = emod(w, p);
    if (w == 0) throw Error(Errc::InvalidLocalData, "weight divisible by p=" + p.get_str());
    if (gcd(w, p) != 1)
      throw Error(Errc::NotCoprime,
                  "gcd(" + w.get_str() + "," + p.get_str() + ") != 1");
  }
  std::sort(q.begin(), q.end());
  return ExceptionalOrbit{p, std::move(q), std::move(label)};
}

bool ExceptionalOrbit::is_canonical() const {
  for (const auto& w : q)
    if (w < 1 || w >= p) return false;
  return std::is_sorted(q.begin(), q.end());
}

std::string ExceptionalOrbit::display() const {
  if (label) return *label;
  std::string s = "(" + p.get_str() + ";";
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + q[i].get_str();
  return s + ")";
}

bool operator<(const ExceptionalOrbit& a, const ExceptionalOrbit& b) {
  if (a.p != b.p) return a.p < b.p;
  return std::lexicographical_compare(a.q.begin(), a.q.end(), b.q.begin(), b.q.end());
}

bool LocalData::is_canonical() const {
  for (const auto& o : orbits)
    if (!o.is_canonical()) return false;
  return std::is_sorted(orbits.begin(), orbits.end());
}

std::vector<Violation> validate(const LocalData& L) {
  std::vector<Violation> out;
  if (L.n < 1) out.push_back({std::nullopt, ViolationKind::BadDimension, "n must be >= 1"});
  for (std::size_t i = 0; i < L.orbits.size(); ++i) {
    const auto& o = L.orbits[i];
    if (o.q.size() != L.n) {
      out.push_back({i, ViolationKind::LengthMismatch,
                     orbit_tag(i) + ": weight vector length " + std::to_string(o.q.size()) +
                         " != n=" + std::to_string(L.n)});
    }
    if (o.p < 2) {
      out.push_back({i, ViolationKind::OrderTooSmall,
                     orbit_tag(i) + ": isotropy order " + o.p.get_str() + " < 2"});
      continue;
    }
    for (const auto& w : o.q) {
      Integer r = emod(w, o.p);
      if (r == 0) {
        out.push_back({i, ViolationKind::ZeroWeight,
                       orbit_tag(i) + ": weight " + w.get_str() + " = 0 mod " + o.p.get_str()});
      } else if (gcd(r, o.p) != 1) {
        out.push_back({i, ViolationKind::NotCoprime,
                       orbit_tag(i) + ": gcd(" + w.get_str() + "," + o.p.get_str() + ") != 1"});
      }
    }
  }
  return out;
}

void require_valid(const LocalData& L) {
  auto v = validate(L);
  if (!v.empty()) throw Error(Errc::InvalidLocalData, v.front().message);
}

LocalData canonicalize(LocalData L) {
  for (auto& o : L.orbits) {
    for (auto& w : o.q) w = emod(w, o.p);
    std::sort(o.q.begin(), o.q.end());
  }
  std::stable_sort(L.orbits.begin(), L.orbits.end());
  return L;
}

QmodZ euler_mod_z(const LocalData& L) {
  require_valid(L);
  Rational sum;
  for (const auto& o : L.orbits) {
    Residue prod(1, o.p);
    for (const auto& w : o.q) prod = prod * mod_inverse(w, o.p);
    sum += Rational(prod.value(), o.p);
  }
  return qmod_z(sum);
}

LocalData stabilize(const LocalData& L) {
  require_valid(L);
  LocalData out{L.n + 1, {}};
  out.orbits.reserve(L.orbits.size());
  for (const auto& o : L.orbits) {
    auto q = o.q;
    q.emplace_back(1);
    out.orbits.push_back(ExceptionalOrbit::make(o.p, std::move(q), o.label));
  }
  return canonicalize(std::move(out));
}

LocalData quotient_by_cyclic(const LocalData& L, const Integer& r) {
  require_valid(L);
  if (r < 1) throw Error(Errc::InvalidArgument, "quotient order r must be >= 1");
  LocalData out{L.n, {}};
  out.orbits.reserve(L.orbits.size());
  for (const auto& o : L.orbits) {
    if (gcd(r, o.p) != 1)
      throw Error(Errc::NotCoprime,
                  "gcd(r=" + r.get_str() + ", p=" + o.p.get_str() + ") != 1");
    Integer rinv = mod_inverse(r, o.p).value();
    std::vector<Integer> q;
    q.reserve(o.q.size());
    for (const auto& w : o.q) q.push_back(rinv * w);
    out.orbits.push_back(ExceptionalOrbit::make(o.p, std::move(q), o.label));
  }
  return canonicalize(std::move(out));
}

std::vector<Integer> quotient_weights(const Integer& m, const std::vector<Integer>& x,
                                     const std::vector<Integer>& mv) {
  if (m < 2) throw Error(Errc::InvalidModulus, "m must be >= 2");
  if (x.empty() || x.size() != mv.size())
    throw Error(Errc::LengthMismatch, "x and mv must be nonempty and of equal length");
  if (gcd(x[0], m) != 1) throw Error(Errc::NotCoprime, "gcd(x_0, m) != 1");
  if (gcd(mv[0], m) != 1) throw Error(Errc::NotCoprime, "gcd(m_0, m) != 1");

  Integer m0_inv = mod_inverse(mv[0], m).value();
  std::vector<Integer> out;
  out.reserve(x.size());
  out.push_back(x[0] * m);
  for (std::size_t i = 1; i < x.size(); ++i) {
    Integer a = emod(m0_inv * mv[i], m);
    out.push_back(-x[0] * a + x[i]);
  }
  return out;
}

std::vector<Integer> subgroup_quotient_weights(const Integer& m, const std::vector<Integer>& x) {
  if (m < 2) throw Error(Errc::InvalidModulus, "m must be >= 2");
  if (x.empty()) throw Error(Errc::LengthMismatch, "x must be nonempty");
  if (x[0] == 0) throw Error(Errc::ZeroLeadWeight, "x_0 must be nonzero");
  if (gcd(x[0], m) != 1) throw Error(Errc::NotCoprime, "gcd(x_0, m) != 1");

  Integer x0_inv = mod_inverse(x[0], m).value();
  std::vector<Integer> out;
  out.reserve(x.size());
  out.push_back(x[0]);
  for (std::size_t i = 1; i < x.size(); ++i) {
    Integer a = emod(x0_inv * x[i], m);
    Integer shifted = -x[0] * a + x[i];
    // Divisible by m because a = x_0^-1 x_i mod m.
    Integer s = shifted / m;
    out.push_back(emod(s, x[0]));
  }
  return out;
}

ExceptionalOrbit normal_form(const Integer& p, const std::vector<Integer>& rot) {
  if (p < 2) throw Error(Errc::InvalidModulus, "p must be >= 2");
  for (const auto& r : rot)
    if (gcd(r, p) != 1)
      throw Error(Errc::NotCoprime, "rotation number " + r.get_str() + " not a unit mod " +
                                        p.get_str());
  std::vector<Integer> x(rot.size() + 1, Integer(0));
  std::vector<Integer> mv(rot.size() + 1);
  x[0] = 1;
  mv[0] = 1;
  for (std::size_t i = 0; i < rot.size(); ++i) mv[i + 1] = -rot[i];
  auto weights = quotient_weights(p, x, mv);
  // weights[0] = p is the fiber weight; the rest are the slice weights.
  return ExceptionalOrbit::make(p, std::vector<Integer>(weights.begin() + 1, weights.end()));
}

}  // namespace pfree
