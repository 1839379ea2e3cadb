#include "pfree/exact_arith.hpp"

#include <array>
#include <cctype>

namespace pfree {

std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::ZeroEntry: return "ZeroEntry";
    case Errc::InvalidLocalData: return "InvalidLocalData";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::ZeroLeadWeight: return "ZeroLeadWeight";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ZeroWeight: return "ZeroWeight";
    case Errc::NotEffective: return "NotEffective";
    case Errc::BadIndex: return "BadIndex";
    case Errc::NotPrime: return "NotPrime";
    case Errc::PrimeTooSmall: return "PrimeTooSmall";
    case Errc::PrimeTooLarge: return "PrimeTooLarge";
    case Errc::DuplicateParameter: return "DuplicateParameter";
    case Errc::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::InvalidStratum: return "InvalidStratum";
    case Errc::BadDimension: return "BadDimension";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

// --- Rational ---------------------------------------------------------------

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  q_.canonicalize();
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

std::string Rational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw Error(Errc::Parse, "malformed rational '" + text + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j])))
        throw Error(Errc::Parse, "malformed rational '" + text + "'");
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer den = parse_int(std::string_view(text).substr(slash + 1));
  if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + text + "'");
  return Rational(parse_int(std::string_view(text).substr(0, slash)), den);
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }
Rational& Rational::operator+=(const Rational& o) { q_ += o.q_; return *this; }
Rational& Rational::operator-=(const Rational& o) { q_ -= o.q_; return *this; }
Rational& Rational::operator*=(const Rational& o) { q_ *= o.q_; return *this; }
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::InvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

// --- QmodZ / Residue --------------------------------------------------------

QmodZ::QmodZ(const Rational& r) : rep_(r - Rational(r.floor())) {}

Residue::Residue(const Integer& value, const Integer& modulus)
    : modulus_(modulus) {
  if (modulus < 1) throw Error(Errc::InvalidModulus, "modulus must be >= 1");
  value_ = emod(value, modulus);
}

Residue Residue::operator*(const Residue& o) const {
  if (modulus_ != o.modulus_) throw Error(Errc::InvalidModulus, "modulus mismatch");
  return Residue(value_ * o.value_, modulus_);
}

Residue Residue::operator+(const Residue& o) const {
  if (modulus_ != o.modulus_) throw Error(Errc::InvalidModulus, "modulus mismatch");
  return Residue(value_ + o.value_, modulus_);
}

// --- free functions ---------------------------------------------------------

Integer emod(const Integer& a, const Integer& m) {
  Integer r;
  Integer am = ::abs(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Residue mod_inverse(const Integer& a, const Integer& p) {
  if (p < 2) throw Error(Errc::InvalidModulus, "modulus " + p.get_str() + " < 2");
  // Invariant: old_r = old_s * a (mod p), r = s * a (mod p).
  Integer old_r = emod(a, p), r = p;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer quot = old_r / r;
    Integer t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_s - quot * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1)
    throw Error(Errc::NotInvertible,
                a.get_str() + " is not invertible mod " + p.get_str());
  return Residue(old_s, p);
}

QmodZ qmod_z(const Rational& r) { return QmodZ(r); }

Integer lcm_all(std::span<const Integer> xs) {
  if (xs.empty()) throw Error(Errc::EmptyInput, "lcm of empty list");
  Integer acc = 1;
  for (const auto& x : xs) {
    if (x == 0) throw Error(Errc::ZeroEntry, "lcm with zero entry");
    acc = lcm(acc, x);
  }
  return acc;
}

Integer gcd_all(std::span<const Integer> xs) {
  if (xs.empty()) throw Error(Errc::EmptyInput, "gcd of empty list");
  Integer acc = 0;
  for (const auto& x : xs) acc = gcd(acc, x);
  return acc;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  Integer m = ::abs(n);
  for (Integer d = 2; d * d <= m; ++d) {
    if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      out.push_back(d);
      while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  // First 12 primes are a deterministic witness set below 3.3e24.
  static constexpr std::array<std::uint64_t, 12> kBases = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace pfree
