// Exact scalars: arbitrary precision rationals and prime fields F_p.
#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ttow {

// Base for every library error; `kind()` is the stable machine name.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string &msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string &kind() const { return kind_; }

private:
  std::string kind_;
};

#define TTOW_ERROR(Name)                                                       \
  struct Name : Error {                                                        \
    explicit Name(const std::string &m) : Error(#Name, m) {}                   \
  }

TTOW_ERROR(DivisionByZero);
TTOW_ERROR(FieldMismatch);
TTOW_ERROR(DimensionMismatch);
TTOW_ERROR(ParseError);

class FieldSpec {
public:
  enum class Kind { rational, prime };

  FieldSpec() = default;
  static FieldSpec rational() { return FieldSpec(); }
  // Throws std::invalid_argument unless p is a prime below 2^62.
  static FieldSpec prime(std::uint64_t p);
  // "rational" or "prime:P"
  static FieldSpec parse(const std::string &s);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  std::uint64_t p() const { return p_; }
  std::uint64_t characteristic() const { return is_rational() ? 0 : p_; }
  std::string str() const;

  bool operator==(const FieldSpec &o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const FieldSpec &o) const { return !(*this == o); }

private:
  Kind kind_ = Kind::rational;
  std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n);

// A field element. Rationals are kept as reduced mpq; residues as 0 <= r < p.
class Scalar {
public:
  Scalar() = default; // rational zero
  static Scalar zero(const FieldSpec &f) { return Scalar(f); }
  static Scalar one(const FieldSpec &f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec &f, long long v);
  static Scalar from_mpq(const FieldSpec &f, const mpq_class &q);
  static Scalar from_residue(const FieldSpec &f, std::uint64_t r); // r < p
  // Accepts "n", "-n", "n/d".
  static Scalar parse(const FieldSpec &f, const std::string &s);

  const FieldSpec &field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::uint64_t residue() const { return r_; }
  const mpq_class &rational() const { return q_; }

  Scalar operator+(const Scalar &b) const;
  Scalar operator-(const Scalar &b) const;
  Scalar operator*(const Scalar &b) const;
  Scalar operator/(const Scalar &b) const;
  Scalar operator-() const;
  Scalar &operator+=(const Scalar &b) { return *this = *this + b; }
  Scalar &operator-=(const Scalar &b) { return *this = *this - b; }
  Scalar &operator*=(const Scalar &b) { return *this = *this * b; }
  Scalar inv() const;
  Scalar pow(long long e) const; // negative e inverts

  bool operator==(const Scalar &b) const;
  bool operator!=(const Scalar &b) const { return !(*this == b); }

  std::string str() const;

private:
  explicit Scalar(const FieldSpec &f) : field_(f) {}
  void check(const Scalar &b) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

// Modular helpers shared by the fast kernels.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                            std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) %
                                    p);
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

} // namespace ttow
