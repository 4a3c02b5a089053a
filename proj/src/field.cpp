#include "ttow/field.hpp"

#include <stdexcept>

namespace ttow {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0)
      return n == q;
  }
  // Miller-Rabin with these bases is deterministic below 2^64.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp)
      return false;
  }
  return true;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0)
    throw DivisionByZero("inverse of zero in F_" + std::to_string(p));
  return powmod(a, p - 2, p);
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ull << 62) || !is_prime_u64(p))
    throw std::invalid_argument("not a supported prime: " + std::to_string(p));
  FieldSpec f;
  f.kind_ = Kind::prime;
  f.p_ = p;
  return f;
}

FieldSpec FieldSpec::parse(const std::string &s) {
  if (s == "rational" || s == "Q")
    return rational();
  const std::string pre = "prime:";
  if (s.rfind(pre, 0) == 0) {
    std::size_t used = 0;
    unsigned long long p = 0;
    try {
      p = std::stoull(s.substr(pre.size()), &used);
    } catch (const std::exception &) {
      throw ParseError("bad field spec: " + s);
    }
    if (used != s.size() - pre.size())
      throw ParseError("bad field spec: " + s);
    try {
      return prime(p);
    } catch (const std::invalid_argument &e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("bad field spec: " + s);
}

std::string FieldSpec::str() const {
  return is_rational() ? "rational" : "prime:" + std::to_string(p_);
}

Scalar Scalar::from_int(const FieldSpec &f, long long v) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = static_cast<long>(v);
  } else {
    long long m = v % static_cast<long long>(f.p());
    if (m < 0)
      m += static_cast<long long>(f.p());
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::from_mpq(const FieldSpec &f, const mpq_class &q) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = q;
    s.q_.canonicalize();
    return s;
  }
  mpz_class p(std::to_string(f.p()));
  mpz_class num = q.get_num() % p, den = q.get_den() % p;
  if (num < 0)
    num += p;
  if (den < 0)
    den += p;
  if (den == 0)
    throw DivisionByZero("denominator divisible by p");
  std::uint64_t n = std::stoull(num.get_str()), d = std::stoull(den.get_str());
  s.r_ = mulmod(n, invmod(d, f.p()), f.p());
  return s;
}

Scalar Scalar::from_residue(const FieldSpec &f, std::uint64_t r) {
  Scalar s(f);
  if (f.is_rational())
    s.q_ = static_cast<unsigned long>(r);
  else
    s.r_ = r % f.p();
  return s;
}

Scalar Scalar::parse(const FieldSpec &f, const std::string &text) {
  std::string t;
  for (char c : text)
    if (c != ' ')
      t.push_back(c);
  if (t.empty())
    throw ParseError("empty scalar");
  auto slash = t.find('/');
  auto valid_int = [](const std::string &x) {
    std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
    if (i >= x.size())
      return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9')
        return false;
    return true;
  };
  auto strip_plus = [](std::string x) {
    if (!x.empty() && x[0] == '+')
      x.erase(0, 1);
    return x;
  };
  std::string ns = t.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(ns) || !valid_int(ds))
    throw ParseError("bad scalar: " + text);
  mpz_class n(strip_plus(ns)), d(strip_plus(ds));
  if (d == 0)
    throw DivisionByZero("zero denominator: " + text);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  mpq_class q(n, d);
  q.canonicalize();
  return from_mpq(f, q);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::check(const Scalar &b) const {
  if (field_ != b.field_)
    throw FieldMismatch("scalars over " + field_.str() + " and " +
                        b.field_.str());
}

Scalar Scalar::operator+(const Scalar &b) const {
  check(b);
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = q_ + b.q_;
  } else {
    s.r_ = r_ + b.r_;
    if (s.r_ >= field_.p())
      s.r_ -= field_.p();
  }
  return s;
}

Scalar Scalar::operator-(const Scalar &b) const {
  check(b);
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = q_ - b.q_;
  else
    s.r_ = r_ >= b.r_ ? r_ - b.r_ : r_ + field_.p() - b.r_;
  return s;
}

Scalar Scalar::operator*(const Scalar &b) const {
  check(b);
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = q_ * b.q_;
  else
    s.r_ = mulmod(r_, b.r_, field_.p());
  return s;
}

Scalar Scalar::operator/(const Scalar &b) const {
  check(b);
  return *this * b.inv();
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.p() - r_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero())
    throw DivisionByZero("inverse of zero");
  Scalar s(field_);
  if (field_.is_rational())
    mpq_inv(s.q_.get_mpq_t(), q_.get_mpq_t());
  else
    s.r_ = invmod(r_, field_.p());
  return s;
}

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inv() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  Scalar r = one(field_);
  while (k) {
    if (k & 1)
      r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar &b) const {
  check(b);
  return field_.is_rational() ? q_ == b.q_ : r_ == b.r_;
}

std::string Scalar::str() const {
  if (field_.is_rational())
    return q_.get_str();
  return std::to_string(r_);
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) {
  return os << s.str();
}

} // namespace ttow
