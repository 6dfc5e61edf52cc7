#ifndef TPA_FIELD_HPP
#define TPA_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "tpa/errors.hpp"

namespace tpa {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField };

// The coefficient field: the rationals, or GF(p) for an odd prime p.
// Characteristic 2 is rejected outright; the compatibility law carries a
// coefficient 2 and degenerates there.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
  static FieldSpec prime_field(std::uint32_t p);

  FieldKind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == FieldKind::Rationals; }
  bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }
  std::uint32_t modulus() const { return modulus_; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) = default;

  std::string to_string() const;  // "Q" or "GF(p)"

 private:
  FieldSpec(FieldKind kind, std::uint32_t modulus)
      : kind_(kind), modulus_(modulus) {}
  FieldKind kind_;
  std::uint32_t modulus_;
};

// Moduli are deliberately small; trial division is plenty.
bool is_small_prime(std::uint32_t n);

// An exact field element. A scalar is normally "attached" to a FieldSpec and
// holds either a reduced fraction (rationals) or a canonical residue in
// [0, p). Integer literals (including the Scalar(0)/Scalar(1) that Eigen
// manufactures internally) start out unattached and adopt the spec of the
// first attached operand they meet; combining two attached scalars of
// different specs is a FieldMismatch error.
class Scalar {
 public:
  Scalar() : attached_(false), spec_(FieldSpec::rationals()), rat_(0) {}
  Scalar(int n) : attached_(false), spec_(FieldSpec::rationals()), rat_(n) {}
  Scalar(long long n)
      : attached_(false), spec_(FieldSpec::rationals()), rat_(n) {}

  // Attached constructors.
  static Scalar of(const FieldSpec& spec, const BigInt& n);
  static Scalar of(const FieldSpec& spec, long long n) {
    return of(spec, BigInt(n));
  }
  static Scalar from_rational(BigRational q);
  static Scalar zero(const FieldSpec& spec) { return of(spec, 0); }
  static Scalar one(const FieldSpec& spec) { return of(spec, 1); }

  bool attached() const { return attached_; }
  const FieldSpec& spec() const { return spec_; }

  bool is_zero() const;
  bool is_one() const;

  // Value accessors; rational() is also valid for unattached scalars.
  const BigRational& rational() const;
  std::int64_t residue() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return !(a == b);
  }

  // Total order among scalars of one spec (residue order over GF(p),
  // numeric order over Q). Used only to make reports and enumeration
  // deterministic.
  static int compare(const Scalar& a, const Scalar& b);

  // Canonical text: "n" or "n/d" with d > 1 over Q, the residue over GF(p).
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  static const FieldSpec* joint_spec(const Scalar& a, const Scalar& b,
                                     const char* op);
  std::int64_t as_residue(const FieldSpec& spec) const;

  bool attached_;
  FieldSpec spec_;       // meaningful only when attached
  BigRational rat_;      // value when unattached or over Q
  std::int64_t res_ = 0; // canonical residue when over GF(p)
};

// scalar_arith/scalar_inv exist as named entry points for the operation
// table; they are thin wrappers over the operators.
enum class ArithOp { Add, Sub, Mul };
Scalar scalar_arith(ArithOp op, const Scalar& a, const Scalar& b);
Scalar scalar_inv(const Scalar& a);

// Grammar: optional sign, decimal integer, optional "/" positive decimal
// integer. Over GF(p) the pieces are reduced mod p and "a/b" means
// a * inv(b).
Scalar parse_scalar(const std::string& text, const FieldSpec& spec);

// Modular inverse in [0, p) by extended Euclid; DivisionByZero when a = 0.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

}  // namespace tpa

#endif  // TPA_FIELD_HPP
