#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tpa/field.hpp"
#include "tpa/rng.hpp"

using namespace tpa;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF3 = FieldSpec::prime_field(3);
const FieldSpec GF5 = FieldSpec::prime_field(5);

// Independent oracle for modular inverses: scan all residues.
std::int64_t brute_force_inverse(std::int64_t a, std::int64_t p) {
  for (std::int64_t k = 1; k < p; ++k)
    if (a * k % p == 1) return k;
  FAIL("no inverse found");
  return -1;
}

Scalar q(long long num, long long den = 1) {
  return Scalar::from_rational(BigRational(num, den));
}

}  // namespace

TEST_CASE("field spec construction and validation") {
  CHECK(Q.is_rationals());
  CHECK(GF5.modulus() == 5);
  CHECK(Q == FieldSpec::rationals());
  CHECK(GF3 == FieldSpec::prime_field(3));
  CHECK(GF3 != GF5);
  CHECK(GF3 != Q);
  CHECK_THROWS_AS(FieldSpec::prime_field(2), UnsupportedFieldError);
  CHECK_THROWS_AS(FieldSpec::prime_field(9), UnsupportedFieldError);
  CHECK_THROWS_AS(FieldSpec::prime_field(1), UnsupportedFieldError);
  CHECK_THROWS_AS(FieldSpec::prime_field(1u << 16), CapExceededError);
  CHECK_NOTHROW(FieldSpec::prime_field(65521));
}

TEST_CASE("scalar arithmetic examples") {
  CHECK(scalar_arith(ArithOp::Add, q(1, 2), q(1, 3)) == q(5, 6));
  CHECK(scalar_arith(ArithOp::Mul, Scalar::of(GF5, 2), Scalar::of(GF5, 3)) ==
        Scalar::of(GF5, 1));
  CHECK(scalar_arith(ArithOp::Sub, q(1, 2), q(1, 3)) == q(1, 6));

  Rng rng(2024);
  for (const FieldSpec& spec : {Q, GF3, GF5}) {
    for (int i = 0; i < 100; ++i) {
      const Scalar x = random_scalar(rng, spec);
      CHECK(x + Scalar::zero(spec) == x);
      CHECK(x * Scalar::one(spec) == x);
    }
  }
}

TEST_CASE("scalar inverse") {
  CHECK(scalar_inv(q(2, 3)) == q(3, 2));
  CHECK(scalar_inv(q(-2, 3)) == q(-3, 2));
  CHECK_THROWS_AS(scalar_inv(q(0)), DivisionByZeroError);
  CHECK_THROWS_AS(scalar_inv(Scalar::of(GF5, 0)), DivisionByZeroError);

  // GF(p) inverses against the brute-force oracle.
  for (const FieldSpec& spec : {GF3, GF5, FieldSpec::prime_field(13)}) {
    const std::int64_t p = spec.modulus();
    for (std::int64_t a = 1; a < p; ++a) {
      const std::int64_t expect = brute_force_inverse(a, p);
      CHECK(scalar_inv(Scalar::of(spec, a)) == Scalar::of(spec, expect));
      CHECK(mod_inverse(a, p) == expect);
    }
  }
  CHECK(scalar_inv(Scalar::of(GF5, 2)) == Scalar::of(GF5, 3));
  CHECK(scalar_inv(Scalar::of(GF3, 4)) == Scalar::of(GF3, 1));
}

TEST_CASE("scalar parsing") {
  CHECK(parse_scalar("-4/6", Q) == q(-2, 3));
  CHECK(parse_scalar("-4/6", Q).to_string() == "-2/3");
  CHECK(parse_scalar("7", GF5) == Scalar::of(GF5, 2));
  CHECK(parse_scalar("1/2", GF3) ==
        Scalar::of(GF3, brute_force_inverse(2, 3)));
  CHECK(parse_scalar("+3/4", Q) == q(3, 4));
  CHECK(parse_scalar("0", Q).is_zero());
  CHECK(parse_scalar("-0", GF3).is_zero());

  CHECK_THROWS_AS(parse_scalar("", Q), ParseError);
  CHECK_THROWS_AS(parse_scalar("x", Q), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/", Q), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/2/3", Q), ParseError);
  CHECK_THROWS_AS(parse_scalar("1.5", Q), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0", Q), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/3", GF3), DivisionByZeroError);
  CHECK_THROWS_AS(parse_scalar("2/10", GF5), DivisionByZeroError);
}

TEST_CASE("print/parse round trips") {
  for (const FieldSpec& spec : {GF3, GF5}) {
    for (std::int64_t a = 0; a < spec.modulus(); ++a) {
      const Scalar s = Scalar::of(spec, a);
      CHECK(parse_scalar(s.to_string(), spec) == s);
    }
  }
  Rng rng(99);
  for (int i = 0; i < 500; ++i) {
    const Scalar s = random_scalar(rng, Q);
    CHECK(parse_scalar(s.to_string(), Q) == s);
  }
  // canonical form: reduced, denominator positive, "n/d" only when d > 1
  CHECK(q(4, 2).to_string() == "2");
  CHECK(q(-1, 2).to_string() == "-1/2");
  CHECK((q(1) / q(-2)).to_string() == "-1/2");
}

TEST_CASE("field axioms") {
  auto check_axioms = [](const FieldSpec& spec,
                         const std::vector<Scalar>& elems) {
    const Scalar zero = Scalar::zero(spec), one = Scalar::one(spec);
    for (const Scalar& a : elems) {
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK(a + (-a) == zero);
      CHECK(a - a == zero);
      if (!a.is_zero()) CHECK(a * a.inverse() == one);
      for (const Scalar& b : elems) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const Scalar& c : elems) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  };

  for (const FieldSpec& spec : {GF3, GF5}) {
    std::vector<Scalar> elems;
    for (std::int64_t a = 0; a < spec.modulus(); ++a)
      elems.push_back(Scalar::of(spec, a));
    check_axioms(spec, elems);  // exhaustive
  }

  Rng rng(7);
  std::vector<Scalar> sample;
  for (int i = 0; i < 1000; ++i) sample.push_back(random_scalar(rng, Q));
  const Scalar zero = Scalar::zero(Q), one = Scalar::one(Q);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const Scalar &a = sample[i], &b = sample[(i + 7) % sample.size()],
                 &c = sample[(i + 311) % sample.size()];
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK(a + (-a) == zero);
    if (!a.is_zero()) CHECK(a * a.inverse() == one);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("field mismatch is an error") {
  CHECK_THROWS_AS(Scalar::of(GF3, 1) + Scalar::of(GF5, 1),
                  FieldMismatchError);
  CHECK_THROWS_AS(q(1) * Scalar::of(GF3, 1), FieldMismatchError);
  CHECK_THROWS_AS((void)(Scalar::of(GF3, 1) == Scalar::of(GF5, 1)),
                  FieldMismatchError);
  // unattached integer literals adopt the partner's field
  CHECK(Scalar(1) + Scalar::of(GF3, 2) == Scalar::of(GF3, 0));
  CHECK(Scalar(7) * Scalar::of(GF5, 1) == Scalar::of(GF5, 2));
  CHECK(Scalar(2) == q(2));
}

TEST_CASE("unattached literal coercion respects the modulus") {
  const Scalar half = Scalar(1) / Scalar(2);  // unattached 1/2
  CHECK(half + Scalar::of(GF5, 0) == Scalar::of(GF5, 3));
  CHECK(half + Scalar::of(GF3, 0) == Scalar::of(GF3, 2));
  const Scalar third = Scalar(1) / Scalar(3);
  CHECK_THROWS_AS(third + Scalar::of(GF3, 0), DivisionByZeroError);
}
