#include "hopfrb/scalar.hpp"

namespace hopfrb {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("inverse of zero");
  // extended Euclid on (a, p), p prime
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t residue_of(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

}  // namespace

Field Field::gf(std::uint64_t prime) {
  if (prime < 2 || prime > (std::uint64_t{1} << 32))
    throw std::invalid_argument("GF modulus out of range");
  mpz_class z(static_cast<unsigned long>(prime));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("GF modulus is not prime: " + z.get_str());
  return Field{prime};
}

std::string Field::str() const {
  return is_rational() ? "rational" : ("gf(" + std::to_string(p) + ")");
}

Scalar Scalar::one(const Field& f) {
  Scalar s(f);
  if (f.is_rational())
    s.q_ = 1;
  else
    s.r_ = 1 % f.p;
  return s;
}

Scalar Scalar::of_int(long long n, const Field& f) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = mpq_class(static_cast<long>(n));
  } else {
    mpz_class z(static_cast<long>(n));
    s.r_ = residue_of(z, f.p);
  }
  return s;
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar s(Field::rationals());
  s.q_ = mpq_class(num, den);
  s.q_.canonicalize();  // reduced, denominator > 0
  return s;
}

Scalar Scalar::gf(std::uint64_t value, std::uint64_t prime) {
  Field f = Field::gf(prime);
  Scalar s(f);
  s.r_ = value % prime;
  return s;
}

Scalar Scalar::parse(std::string_view text, const Field& f) {
  std::string t(text);
  if (t.empty()) throw SchemaError("empty coefficient");
  auto slash = t.find('/');
  mpz_class num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = mpz_class(t);
    } else {
      num = mpz_class(t.substr(0, slash));
      den = mpz_class(t.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw SchemaError("malformed coefficient: \"" + t + "\"");
  }
  if (den == 0) throw SchemaError("zero denominator in coefficient: \"" + t + "\"");
  if (f.is_rational()) return rational(num, den);
  std::uint64_t n = residue_of(num, f.p);
  std::uint64_t d = residue_of(den, f.p);
  if (d == 0) throw SchemaError("denominator vanishes mod " + std::to_string(f.p));
  Scalar s(f);
  s.r_ = mulmod(n, invmod(d, f.p), f.p);
  return s;
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_)
    throw std::invalid_argument("scalar field mismatch: " + field().str() + " vs " +
                                o.field().str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field());
  if (p_ == 0)
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % p_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field());
  if (p_ == 0)
    s.q_ = q_ - o.q_;
  else
    s.r_ = (r_ + p_ - o.r_) % p_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field());
  if (p_ == 0)
    s.q_ = q_ * o.q_;
  else
    s.r_ = mulmod(r_, o.r_, p_);
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(field());
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s(field());
  if (p_ == 0)
    s.q_ = 1 / q_;
  else
    s.r_ = invmod(r_, p_);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(r_);
  return q_.get_str();  // "n" or "n/d", reduced, denominator positive
}

const mpq_class& Scalar::rational_value() const {
  if (p_ != 0) throw std::logic_error("not a rational scalar");
  return q_;
}

std::uint64_t Scalar::gf_value() const {
  if (p_ == 0) throw std::logic_error("not a GF(p) scalar");
  return r_;
}

}  // namespace hopfrb
