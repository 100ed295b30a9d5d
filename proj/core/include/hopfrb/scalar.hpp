#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfrb {

/// Raised when an input file violates the on-disk schema.
class SchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a mathematical precondition of an operation fails
/// (unverified algebra, wrong (co)commutativity, failed compatibility suite).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& msg, std::string report_json = "")
      : std::runtime_error(msg), report_json_(std::move(report_json)) {}
  /// JSON of the failing verification report, empty if none was attached.
  const std::string& report_json() const { return report_json_; }

private:
  std::string report_json_;
};

/// Coefficient field: the rationals (p == 0) or GF(p) for an odd-or-2 prime p.
struct Field {
  std::uint64_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;

  static Field rationals() { return Field{0}; }
  static Field gf(std::uint64_t prime);  // validates primality
  std::string str() const;
};

/// An exact field element: arbitrary-precision rational (reduced, positive
/// denominator) or a residue in [0, p).  All arithmetic is exact and equality
/// is decidable; there is no tolerance anywhere in this library.
class Scalar {
public:
  Scalar() : Scalar(Field::rationals()) {}  // zero of Q
  explicit Scalar(const Field& f) : p_(f.p), q_(0), r_(0) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f);
  static Scalar of_int(long long n, const Field& f = Field::rationals());
  static Scalar rational(const mpz_class& num, const mpz_class& den);
  static Scalar gf(std::uint64_t value, std::uint64_t prime);
  /// Parses "num", "-num" or "num/den" exactly; rejects zero denominators.
  static Scalar parse(std::string_view text, const Field& f);

  Field field() const { return Field{p_}; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form: "n" when the denominator is 1, else "n/d".
  /// GF(p) values print as the residue.  parse(str()) round-trips.
  std::string str() const;

  /// Rational value; only valid when the field is Q.
  const mpq_class& rational_value() const;
  /// Residue in [0, p); only valid for GF(p).
  std::uint64_t gf_value() const;

private:
  void check_same_field(const Scalar& o) const;

  std::uint64_t p_;  // 0 = rational
  mpq_class q_;      // value when p_ == 0
  std::uint64_t r_;  // value when p_ != 0
};

}  // namespace hopfrb
