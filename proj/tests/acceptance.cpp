// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pfree/checkers.hpp"
#include "pfree/local_data.hpp"
#include "pfree/model_zoo.hpp"
#include "pfree/numverify.hpp"

using namespace pfree;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

Integer I(std::int64_t v) { return Integer(static_cast<long>(v)); }

Rational to_rational(const oracle::Frac& f) {
  return Rational(I(static_cast<std::int64_t>(f.num)), I(static_cast<std::int64_t>(f.den)));
}

std::vector<Integer> ints(const std::vector<long>& v) { return {v.begin(), v.end()}; }

Outcome fail(std::string why) { return {false, std::move(why)}; }

// 1. Orbit-sum formula on single-orbit 3-dimensional data.
Outcome ac1() {
  LocalData L{1, {ExceptionalOrbit::make(5, {Integer(2)})}};
  if (euler_mod_z(L).representative() != Rational(3, 5)) return fail("(5;[2]) did not give 3/5");
  long cases = 0;
  for (long p = 2; p <= 200; ++p) {
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      LocalData M{1, {ExceptionalOrbit::make(p, {Integer(q)})}};
      Rational want(oracle::brute_inverse(q, p), p);
      Rational lib(mod_inverse(q, p).value(), Integer(p));
      if (euler_mod_z(M).representative() != want || lib != want)
        return fail("mismatch at (" + std::to_string(p) + ";" + std::to_string(q) + ")");
      ++cases;
    }
  }
  return {true, std::to_string(cases + 1) + " cases exact"};
}

// 2. Exact sphere Chern number vs Kawasaki's cohomological formula.
Outcome ac2() {
  long cases = 0;
  std::vector<long> w;
  std::function<Outcome(std::size_t, long)> rec = [&](std::size_t len, long lo) -> Outcome {
    if (w.size() == len) {
      auto W = ints(w);
      if (gcd_all(W) != 1) return {};
      ++cases;
      if (sphere_chern({W}) != kawasaki_chern(W)) {
        std::string s;
        for (long x : w) s += std::to_string(x) + " ";
        return fail("disagreement at weights " + s);
      }
      return {};
    }
    for (long v = lo; v <= 10; ++v) {
      w.push_back(v);
      auto o = rec(len, v);
      w.pop_back();
      if (!o.passed) return o;
    }
    return {};
  };
  for (std::size_t len = 2; len <= 6; ++len)
    if (auto o = rec(len, 1); !o.passed) return o;
  return {true, std::to_string(cases) + " effective tuples (entries 1..10, lengths 2-6, up to order)"};
}

// 3. Stabilization preserves e; quotient by Z_r scales e by r^n.
Outcome ac3() {
  std::mt19937_64 rng(2024);
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    std::size_t n = 1 + rng() % 4;
    LocalData L{n, {}};
    std::vector<oracle::Orbit> raw;
    for (int k = 0, m = static_cast<int>(rng() % 6); k < m; ++k) {
      std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 97);
      std::vector<std::int64_t> q;
      for (std::size_t i = 0; i < n; ++i) {
        // Arbitrary representatives, not just canonical residues.
        std::int64_t u = oracle::random_unit(rng, p);
        q.push_back(u + p * (static_cast<std::int64_t>(rng() % 7) - 3));
      }
      raw.push_back({p, q});
      std::vector<Integer> qi;
      for (auto x : q) qi.push_back(I(x));
      L.orbits.push_back(ExceptionalOrbit{I(p), qi, std::nullopt});
    }
    std::int64_t r = 1 + static_cast<std::int64_t>(rng() % 200);
    bool coprime = true;
    for (const auto& o : raw) coprime = coprime && std::gcd(r, o.p) == 1;
    if (!coprime) r = 1;

    const QmodZ e = euler_mod_z(L);
    const Rational brute = to_rational(oracle::brute_euler(raw));
    if (e.representative() != brute) return fail("euler_mod_z disagrees with brute oracle");
    if (euler_mod_z(stabilize(L)) != e) return fail("stabilize changed e at trial " + std::to_string(t));
    Rational scaled = Rational(ipow(I(r), n)) * brute;
    if (euler_mod_z(quotient_by_cyclic(L, I(r))) != qmod_z(scaled))
      return fail("quotient scaling failed at trial " + std::to_string(t));
  }
  return {true, std::to_string(trials) + " random (L, r)"};
}

std::vector<Integer> first_primes_above(long bound, int count) {
  std::vector<Integer> out;
  for (long p = bound + 1; static_cast<int>(out.size()) < count; ++p)
    if (is_prime_u64(static_cast<std::uint64_t>(p))) out.emplace_back(p);
  return out;
}

template <class F>
void for_each_distinct_tuple(long lo, long hi, std::size_t len, F&& f) {
  std::vector<long> cur;
  std::vector<bool> used(static_cast<std::size_t>(hi - lo + 1), false);
  std::function<void()> rec = [&] {
    if (cur.size() == len) {
      f(cur);
      return;
    }
    for (long v = lo; v <= hi; ++v) {
      if (used[static_cast<std::size_t>(v - lo)]) continue;
      used[static_cast<std::size_t>(v - lo)] = true;
      cur.push_back(v);
      rec();
      cur.pop_back();
      used[static_cast<std::size_t>(v - lo)] = false;
    }
  };
  rec();
}

// 4. Localization identity for toric CP^n and vanishing e of its suspensions.
Outcome ac4() {
  long tuples = 0, suspensions = 0;
  Outcome out;
  for (std::size_t len = 2; len <= 5 && out.passed; ++len) {
    for_each_distinct_tuple(-6, 6, len, [&](const std::vector<long>& a) {
      if (!out.passed) return;
      ++tuples;
      auto f = projective_space_fixed_data(ints(a));
      if (!check_localization_sum(f).passed) {
        out = fail("localization sum nonzero");
        return;
      }
      long maxw = 0;
      for (const auto& pt : f.points)
        for (const auto& x : pt) maxw = std::max(maxw, std::abs(x.get_si()));
      for (const auto& p : first_primes_above(maxw, 5)) {
        ++suspensions;
        if (!euler_mod_z(suspend_fixed_points(f, p)).is_zero()) {
          out = fail("suspension by " + p.get_str() + " has e != 0");
          return;
        }
      }
    });
  }
  if (!out.passed) return out;
  return {true, std::to_string(tuples) + " ordered tuples, " + std::to_string(suspensions) + " suspensions"};
}

// 5. lcm of the isotropy orders kills e.
Outcome ac5() {
  std::mt19937_64 rng(55);
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    std::size_t n = 1 + rng() % 5;
    LocalData L{n, {}};
    for (int k = 0, m = 1 + static_cast<int>(rng() % 6); k < m; ++k) {
      std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 499);
      std::vector<Integer> q;
      for (std::size_t i = 0; i < n; ++i) q.push_back(I(oracle::random_unit(rng, p)));
      L.orbits.push_back(ExceptionalOrbit{I(p), q, std::nullopt});
    }
    if (!check_weinstein(L).passed) return fail("weinstein failed at trial " + std::to_string(t));
  }
  return {true, std::to_string(trials) + " random local data"};
}

// 6. ell^(k+1) * |chern| is an integer for every effective signed tuple.
Outcome ac6() {
  std::vector<long> vals;
  for (long v = -12; v <= 12; ++v)
    if (v) vals.push_back(v);
  long checked = 0;
  for (std::size_t len = 2; len <= 5; ++len) {
    std::vector<std::size_t> idx(len, 0);
    std::vector<Integer> w(len);
    for (;;) {
      long g = 0;
      for (std::size_t i = 0; i < len; ++i) g = std::gcd(g, vals[idx[i]]);
      if (g == 1) {
        for (std::size_t i = 0; i < len; ++i) w[i] = vals[idx[i]];
        ++checked;
        if (!check_sphere_conjecture(w).passed) {
          std::string s;
          for (const auto& x : w) s += x.get_str() + " ";
          return fail("failed at weights " + s);
        }
      }
      std::size_t pos = 0;
      while (pos < len && ++idx[pos] == vals.size()) idx[pos++] = 0;
      if (pos == len) break;
    }
  }
  return {true, std::to_string(checked) + " effective ordered tuples"};
}

// 7. Monte Carlo volume integral reproduces 1/6 and 1/30.
Outcome ac7() {
  auto start = std::chrono::steady_clock::now();
  std::ostringstream msg;
  bool ok = true;
  for (auto [w, exact] : {std::pair{std::vector<long>{2, 3}, 1.0 / 6}, std::pair{std::vector<long>{2, 3, 5}, 1.0 / 30}}) {
    auto est = sphere_chern_numeric({ints(w)}, McConfig{10'000'000, 1, 16});
    double sig = std::abs(est.estimate - exact) / est.std_error;
    ok = ok && sig <= 3.0 && est.std_error < 2e-3;
    msg << "w=(" << w[0];
    for (std::size_t i = 1; i < w.size(); ++i) msg << "," << w[i];
    msg << ") est=" << est.estimate << " stderr=" << est.std_error << " (" << sig << " sigma); ";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && secs < 60.0;
  msg << secs << " s";
  return {ok, msg.str()};
}

// 8. min-orbits and gcd-partner on e = 0 data; NotApplicable otherwise.
Outcome ac8() {
  std::vector<LocalData> corpus;
  std::mt19937_64 rng(8);
  for (int t = 0; t < 2000; ++t) {
    std::size_t n = 1 + rng() % 4;
    std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 60);
    std::vector<Integer> q, qbar;
    for (std::size_t i = 0; i < n; ++i) q.push_back(I(oracle::random_unit(rng, p)));
    qbar = q;
    qbar[0] = -qbar[0];
    corpus.push_back(LocalData{n, {ExceptionalOrbit::make(I(p), q), ExceptionalOrbit::make(I(p), qbar)}});
  }
  for (std::size_t len = 2; len <= 4; ++len)
    for_each_distinct_tuple(-5, 5, len, [&](const std::vector<long>& a) {
      auto f = projective_space_fixed_data(ints(a));
      for (long p : {11L, 13L, 101L}) corpus.push_back(suspend_fixed_points(f, p));
    });
  corpus.push_back(LocalData{1, {ExceptionalOrbit::make(2, {Integer(1)}), ExceptionalOrbit::make(3, {Integer(1)}),
                                 ExceptionalOrbit::make(6, {Integer(1)})}});
  for (const auto& L : corpus) {
    if (!euler_mod_z(L).is_zero()) return fail("corpus entry with e != 0");
    if (!check_min_orbits(L).passed) return fail("min-orbits failed on e = 0 data");
    if (!check_gcd_partner(L).passed) return fail("gcd-partner failed on e = 0 data");
  }
  const LocalData counters[] = {
      LocalData{1, {ExceptionalOrbit::make(5, {Integer(2)})}},
      LocalData{1, {ExceptionalOrbit::make(2, {Integer(1)}), ExceptionalOrbit::make(3, {Integer(1)})}},
  };
  for (const auto& L : counters) {
    for (auto check : {&check_min_orbits, &check_gcd_partner}) {
      try {
        check(L);
        return fail("counter input did not raise NotApplicable");
      } catch (const Error& e) {
        if (e.code() != Errc::NotApplicable) return fail("counter input raised the wrong error");
      }
    }
  }
  return {true, std::to_string(corpus.size()) + " e = 0 datasets, 2 counter inputs NotApplicable"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"AC1", "orbit-sum formula on (p;q), 2 <= p <= 200", ac1},
      {"AC2", "sphere Chern number equals Kawasaki formula", ac2},
      {"AC3", "stabilization and quotient laws", ac3},
      {"AC4", "localization identity and suspensions on CP^n", ac4},
      {"AC5", "Weinstein integrality", ac5},
      {"AC6", "sphere conjecture for |w| <= 12, length 2-5", ac6},
      {"AC7", "Monte Carlo Chern number within 3 sigma", ac7},
      {"AC8", "e = 0 constraints on generated corpus", ac8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s %s: %s (%.1f s)\n", o.passed ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
