#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "qhom/errors.hpp"

namespace qhom {

enum class FieldKind { Rationals, PrimeField };

/// Exact coefficient field: the rationals, or Z/p for a prime p.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::int64_t characteristic = 0;  // the prime p; 0 for the rationals

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec prime(std::int64_t p);

  bool operator==(const FieldSpec&) const = default;

  /// "q" or "fp:<p>", matching the CLI flag syntax.
  std::string to_string() const;
  static FieldSpec parse(const std::string& text);
};

/// One exact field element.  A scalar knows which field it lives in; mixing
/// scalars from different fields throws.  Prime-field values are canonical
/// residues in [0, p); rational values are canonical GMP rationals.
class Scalar {
 public:
  Scalar() = default;  // zero over the rationals

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, std::int64_t n);
  static Scalar from_rational(const FieldSpec& f, const mpq_class& q);
  /// Parses decimal text, "-12" or "3/4".  Over F_p a fraction a/b is a*b^-1.
  static Scalar parse(const FieldSpec& f, const std::string& text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Decimal text; fractions as "a/b".  Survives round trips exactly.
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;

  FieldSpec field_ = FieldSpec::rationals();
  mpq_class rat_ = 0;        // active for rationals
  std::int64_t res_ = 0;     // active for prime fields, in [0, p)
};

}  // namespace qhom
