#include "tpa/field.hpp"

#include <cctype>
#include <ostream>

namespace tpa {

bool is_small_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (p == 2)
    throw UnsupportedFieldError(
        "characteristic 2 is not supported (the compatibility law needs 2 "
        "invertible)");
  if (p >= (1u << 16))
    throw CapExceededError("modulus " + std::to_string(p) + " exceeds 2^16");
  if (!is_small_prime(p))
    throw UnsupportedFieldError("modulus " + std::to_string(p) +
                                " is not prime");
  return FieldSpec(FieldKind::PrimeField, p);
}

std::string FieldSpec::to_string() const {
  if (is_rationals()) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw DivisionByZeroError("no inverse of 0 in GF(" +
                                        std::to_string(p) + ")");
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return t;
}

namespace {

std::int64_t big_mod(const BigInt& n, std::int64_t p) {
  BigInt r = n % p;
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

}  // namespace

Scalar Scalar::of(const FieldSpec& spec, const BigInt& n) {
  Scalar s;
  s.attached_ = true;
  s.spec_ = spec;
  if (spec.is_rationals()) {
    s.rat_ = BigRational(n);
  } else {
    s.rat_ = 0;
    s.res_ = big_mod(n, spec.modulus());
  }
  return s;
}

Scalar Scalar::from_rational(BigRational q) {
  Scalar s;
  s.attached_ = true;
  s.spec_ = FieldSpec::rationals();
  s.rat_ = std::move(q);
  return s;
}

bool Scalar::is_zero() const {
  if (attached_ && spec_.is_prime_field()) return res_ == 0;
  return rat_ == 0;
}

bool Scalar::is_one() const {
  if (attached_ && spec_.is_prime_field()) return res_ == 1;
  return rat_ == 1;
}

const BigRational& Scalar::rational() const {
  if (attached_ && spec_.is_prime_field())
    throw FieldMismatchError("rational() called on a GF(p) scalar");
  return rat_;
}

std::int64_t Scalar::residue() const {
  if (!attached_ || !spec_.is_prime_field())
    throw FieldMismatchError("residue() called on a non-GF(p) scalar");
  return res_;
}

std::int64_t Scalar::as_residue(const FieldSpec& spec) const {
  const std::int64_t p = spec.modulus();
  if (attached_) {
    if (spec_.is_prime_field()) return res_;
    // attached rational coerced into GF(p): cannot happen through public
    // arithmetic (joint_spec rejects it first)
  }
  const BigInt& num = boost::multiprecision::numerator(rat_);
  const BigInt& den = boost::multiprecision::denominator(rat_);
  std::int64_t n = big_mod(num, p);
  std::int64_t d = big_mod(den, p);
  if (d == 0)
    throw DivisionByZeroError("integer literal with denominator divisible by " +
                              std::to_string(p));
  return n * mod_inverse(d, p) % p;
}

const FieldSpec* Scalar::joint_spec(const Scalar& a, const Scalar& b,
                                    const char* op) {
  if (a.attached_ && b.attached_) {
    if (a.spec_ != b.spec_)
      throw FieldMismatchError(std::string(op) + " over " +
                               a.spec_.to_string() + " and " +
                               b.spec_.to_string());
    return &a.spec_;
  }
  if (a.attached_) return &a.spec_;
  if (b.attached_) return &b.spec_;
  return nullptr;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  const FieldSpec* spec = Scalar::joint_spec(a, b, "add");
  if (spec == nullptr) {
    Scalar s;
    s.rat_ = a.rat_ + b.rat_;
    return s;
  }
  if (spec->is_rationals()) return Scalar::from_rational(a.rat_ + b.rat_);
  Scalar s = Scalar::zero(*spec);
  s.res_ = (a.as_residue(*spec) + b.as_residue(*spec)) % spec->modulus();
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  const FieldSpec* spec = Scalar::joint_spec(a, b, "sub");
  if (spec == nullptr) {
    Scalar s;
    s.rat_ = a.rat_ - b.rat_;
    return s;
  }
  if (spec->is_rationals()) return Scalar::from_rational(a.rat_ - b.rat_);
  Scalar s = Scalar::zero(*spec);
  const std::int64_t p = spec->modulus();
  s.res_ = (a.as_residue(*spec) - b.as_residue(*spec) + p) % p;
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  const FieldSpec* spec = Scalar::joint_spec(a, b, "mul");
  if (spec == nullptr) {
    Scalar s;
    s.rat_ = a.rat_ * b.rat_;
    return s;
  }
  if (spec->is_rationals()) return Scalar::from_rational(a.rat_ * b.rat_);
  Scalar s = Scalar::zero(*spec);
  s.res_ = a.as_residue(*spec) * b.as_residue(*spec) % spec->modulus();
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  return a * b.inverse();
}

Scalar Scalar::operator-() const {
  if (attached_ && spec_.is_prime_field()) {
    Scalar s = *this;
    s.res_ = res_ == 0 ? 0 : spec_.modulus() - res_;
    return s;
  }
  Scalar s = *this;
  s.rat_ = -s.rat_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  if (attached_ && spec_.is_prime_field()) {
    Scalar s = *this;
    s.res_ = mod_inverse(res_, spec_.modulus());
    return s;
  }
  Scalar s = *this;
  s.rat_ = 1 / s.rat_;
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  const FieldSpec* spec = Scalar::joint_spec(a, b, "compare");
  if (spec == nullptr || spec->is_rationals()) return a.rat_ == b.rat_;
  return a.as_residue(*spec) == b.as_residue(*spec);
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  const FieldSpec* spec = joint_spec(a, b, "order");
  if (spec == nullptr || spec->is_rationals()) {
    if (a.rat_ < b.rat_) return -1;
    if (b.rat_ < a.rat_) return 1;
    return 0;
  }
  const std::int64_t ra = a.as_residue(*spec), rb = b.as_residue(*spec);
  return ra < rb ? -1 : ra > rb ? 1 : 0;
}

std::string Scalar::to_string() const {
  if (attached_ && spec_.is_prime_field()) return std::to_string(res_);
  const BigInt& num = boost::multiprecision::numerator(rat_);
  const BigInt& den = boost::multiprecision::denominator(rat_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

Scalar scalar_arith(ArithOp op, const Scalar& a, const Scalar& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  throw Error("Internal", "bad ArithOp");
}

Scalar scalar_inv(const Scalar& a) { return a.inverse(); }

Scalar parse_scalar(const std::string& text, const FieldSpec& spec) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  auto read_digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      out.push_back(text[i++]);
    return i > start;
  };
  std::string num_digits, den_digits;
  if (!read_digits(num_digits))
    throw ParseError("expected an integer in '" + text + "'");
  bool has_den = false;
  if (i < text.size() && text[i] == '/') {
    ++i;
    has_den = true;
    if (!read_digits(den_digits))
      throw ParseError("expected a denominator in '" + text + "'");
  }
  if (i != text.size())
    throw ParseError("trailing characters in '" + text + "'");

  BigInt num(num_digits);
  if (negative) num = -num;
  if (!has_den) return Scalar::of(spec, num);

  BigInt den(den_digits);
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  if (spec.is_rationals())
    return Scalar::from_rational(BigRational(num, den));
  return Scalar::of(spec, num) * Scalar::of(spec, den).inverse();
}

}  // namespace tpa
