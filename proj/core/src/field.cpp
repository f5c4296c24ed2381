#include "qhom/field.hpp"

#include <cctype>

namespace qhom {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

// Inverse of a mod p via extended Euclid; a must be nonzero mod p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = mod_pos(a, p), r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw PreconditionError("element is not invertible mod p");
  return mod_pos(old_s, p);
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (!is_prime(p))
    throw PreconditionError("prime field characteristic must be prime, got " +
                            std::to_string(p));
  return {FieldKind::PrimeField, p};
}

std::string FieldSpec::to_string() const {
  if (kind == FieldKind::Rationals) return "q";
  return "fp:" + std::to_string(characteristic);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    try {
      std::size_t pos = 0;
      std::int64_t p = std::stoll(text.substr(3), &pos);
      if (pos != text.size() - 3) throw std::invalid_argument("");
      return prime(p);
    } catch (const PreconditionError&) {
      throw;
    } catch (...) {
      throw ParseError("bad field spec '" + text + "'");
    }
  }
  throw ParseError("bad field spec '" + text + "' (expected q or fp:<p>)");
}

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, std::int64_t n) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::Rationals)
    s.rat_ = mpq_class(static_cast<long>(n));
  else
    s.res_ = mod_pos(n, f.characteristic);
  return s;
}

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& q) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::Rationals) {
    s.rat_ = q;
    s.rat_.canonicalize();
    return s;
  }
  const std::int64_t p = f.characteristic;
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  std::int64_t n = mod_pos(num.get_si(), p);
  std::int64_t d = mod_pos(den.get_si(), p);
  if (d == 0)
    throw PreconditionError("rational coefficient has denominator divisible by " +
                            std::to_string(p));
  s.res_ = n == 0 ? 0 : (n * mod_inverse(d, p)) % p;
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  if (text.empty()) throw ParseError("empty scalar text");
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '/')
      throw ParseError("bad scalar text '" + text + "'");
  try {
    mpq_class q(text);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return from_rational(f, q);
  } catch (const ParseError&) {
    throw;
  } catch (const PreconditionError&) {
    throw;
  } catch (...) {
    throw ParseError("bad scalar text '" + text + "'");
  }
}

bool Scalar::is_zero() const {
  return field_.kind == FieldKind::Rationals ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldKind::Rationals ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw PreconditionError("scalars from different fields: " +
                            field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.field_ = field_;
  if (field_.kind == FieldKind::Rationals)
    r.rat_ = rat_ + o.rat_;
  else
    r.res_ = (res_ + o.res_) % field_.characteristic;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.field_ = field_;
  if (field_.kind == FieldKind::Rationals)
    r.rat_ = rat_ - o.rat_;
  else
    r.res_ = mod_pos(res_ - o.res_, field_.characteristic);
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.field_ = field_;
  if (field_.kind == FieldKind::Rationals)
    r.rat_ = rat_ * o.rat_;
  else
    r.res_ = (res_ * o.res_) % field_.characteristic;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r;
  r.field_ = field_;
  if (field_.kind == FieldKind::Rationals)
    r.rat_ = -rat_;
  else
    r.res_ = res_ == 0 ? 0 : field_.characteristic - res_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  Scalar r;
  r.field_ = field_;
  if (field_.kind == FieldKind::Rationals)
    r.rat_ = 1 / rat_;
  else
    r.res_ = mod_inverse(res_, field_.characteristic);
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.kind == FieldKind::Rationals ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::to_string() const {
  if (field_.kind == FieldKind::PrimeField) return std::to_string(res_);
  if (rat_.get_den() == 1) return rat_.get_num().get_str();
  return rat_.get_str();
}

}  // namespace qhom
