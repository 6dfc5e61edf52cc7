#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "tpa/theorems.hpp"

using namespace tpa;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF3 = FieldSpec::prime_field(3);

std::map<std::string, TheoremVerdict> by_id(
    const std::vector<TheoremVerdict>& verdicts) {
  std::map<std::string, TheoremVerdict> out;
  for (const TheoremVerdict& v : verdicts) out[v.theorem_id] = v;
  return out;
}

bool tables_equal(const AlgebraDef& a, const AlgebraDef& b) {
  if (a.dim() != b.dim() || a.spec() != b.spec()) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      if (!equal(a.product_basis(i, j), b.product_basis(i, j))) return false;
      if (!equal(a.bracket_basis(i, j), b.bracket_basis(i, j))) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("suite identifiers") {
  const auto ids = suite_theorem_ids();
  CHECK(ids.size() == 27);  // T01..T26 plus the supersolvability diagnostic
  CHECK(ids.front() == "T01");
  CHECK(ids[25] == "T26");
  CHECK(ids.back() == "D01");
  CHECK_THROWS_AS(theorem_title("T99"), UnknownNameError);
}

TEST_CASE("suite on EX_B over GF(3)") {
  const auto verdicts = by_id(run_suite(catalog("EX_B", GF3)));
  for (const auto& [id, v] : verdicts)
    CHECK(v.status != VerdictStatus::Violated);
  CHECK(verdicts.at("T08").status == VerdictStatus::Holds);
  CHECK(verdicts.at("T21").status == VerdictStatus::Holds);
  CHECK(verdicts.at("T21").detail.find("P^1") != std::string::npos);
  CHECK(verdicts.at("T19").status == VerdictStatus::Holds);
  CHECK(verdicts.at("D01").status == VerdictStatus::Holds);
}

TEST_CASE("suite on EX_A: the boundary example") {
  const auto verdicts = by_id(run_suite(catalog("EX_A", GF3)));
  const TheoremVerdict& t24 = verdicts.at("T24");
  CHECK(t24.status == VerdictStatus::HypothesisUnmet);
  // F = P^1 and non-nilpotency are exhibited simultaneously
  CHECK(t24.detail.find("not Lie-nilpotent") != std::string::npos);
  CHECK(t24.detail.find("F(P) = P^1") != std::string::npos);
  CHECK(t24.detail.find("nilpotent=no") != std::string::npos);
  CHECK(verdicts.at("T21").status == VerdictStatus::HypothesisUnmet);
  for (const auto& [id, v] : verdicts)
    CHECK(v.status != VerdictStatus::Violated);

  // over Q the Frattini side has no computation path
  const auto rational = by_id(run_suite(catalog("EX_A", Q)));
  CHECK(rational.at("T24").status == VerdictStatus::HypothesisUnmet);
  CHECK(rational.at("T15").status == VerdictStatus::UnsupportedField);
}

TEST_CASE("suite on EX_C: socle equalities and the idempotent split") {
  const auto verdicts = by_id(run_suite(catalog("EX_C", GF3)));
  const TheoremVerdict& t25 = verdicts.at("T25");
  CHECK(t25.status == VerdictStatus::Holds);
  CHECK(t25.detail.find("Zsoc = Nil = Ann(Soc)") != std::string::npos);
  const TheoremVerdict& t20 = verdicts.at("T20");
  CHECK(t20.status == VerdictStatus::Holds);
  CHECK(t20.detail.find("decomposition with e = (1, 0)") !=
        std::string::npos);
  CHECK(t20.detail.find("principal idempotent") != std::string::npos);
  for (const auto& [id, v] : verdicts)
    CHECK(v.status != VerdictStatus::Violated);
}

TEST_CASE("suite refuses invalid algebras") {
  AlgebraDef::Builder b(Q, 2);
  b.product(0, 0, 1, 1);
  b.bracket(0, 1, 0, 1);  // breaks the compatibility law
  CHECK_THROWS_AS(run_suite(b.build()), InvalidAlgebraError);
}

TEST_CASE("construction examples carry their nilpotency") {
  // a nilpotent factor forces a nilpotent tensor product
  const AlgebraDef t = tensor_product(catalog("EX_B", Q), catalog("EX_A", Q));
  CHECK(t.dim() == 6);
  CHECK(validate_axioms(t).ok());
  CHECK(nilpotency_report(t).nilpotent);

  // the weighted truncated polynomial algebra is nilpotent alongside its
  // product side
  const AlgebraDef trunc = truncated_polynomial_algebra(Q, 3);
  Mat d = zero_matrix(Q, 3, 3);
  for (int i = 0; i < 3; ++i) d(i, i) = Scalar::of(Q, i + 1);
  const AlgebraDef euler = from_derivation(trunc, d);
  CHECK(equal(euler.bracket_basis(0, 1), vec_of(Q, {0, 0, 1})));
  CHECK(nilpotency_report(euler).nilpotent);
}

TEST_CASE("truncated polynomial algebra") {
  const AlgebraDef t4 = truncated_polynomial_algebra(Q, 4);
  CHECK(t4.dim() == 4);
  CHECK(validate_axioms(t4).ok());
  CHECK(equal(t4.product_basis(0, 1), vec_of(Q, {0, 0, 1, 0})));  // t.t^2
  CHECK(is_zero(t4.product_basis(2, 3)));                         // t^5 = 0
  CHECK(t4.bracket_table_is_zero());
}

TEST_CASE("change of basis") {
  const AlgebraDef exb = catalog("EX_B", Q);
  // identity change leaves the tables alone
  CHECK(tables_equal(change_of_basis(exb, identity_matrix(Q, 3)), exb));

  CHECK_THROWS_AS(change_of_basis(exb, zero_matrix(Q, 3, 3)),
                  DivisionByZeroError);

  // invariance of the structural booleans and dimension invariants
  Rng rng(2718);
  for (const FieldSpec& spec : {Q, FieldSpec::prime_field(5)}) {
    for (const std::string& name : catalog_names()) {
      const AlgebraDef a = catalog(name, spec);
      const NilpotencyReport before = nilpotency_report(a);
      const Subspace p1_before =
          space_product_both(a, a.full_space(), a.full_space());
      const int trials = spec.is_rationals() ? 20 : 8;
      for (int trial = 0; trial < trials; ++trial) {
        Mat basis = zero_matrix(spec, a.dim(), a.dim());
        do {
          for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j)
              basis(i, j) = random_scalar(rng, spec);
        } while (rref(basis).rank != a.dim());
        const AlgebraDef moved = change_of_basis(a, basis);
        CHECK(validate_axioms(moved).ok());
        const NilpotencyReport after = nilpotency_report(moved);
        CHECK(after.nilpotent == before.nilpotent);
        CHECK(after.solvable == before.solvable);
        CHECK(after.assoc_nilpotent == before.assoc_nilpotent);
        CHECK(after.lie_nilpotent == before.lie_nilpotent);
        const Subspace p1_after = space_product_both(
            moved, moved.full_space(), moved.full_space());
        CHECK(p1_after.dim() == p1_before.dim());
        if (before.lie_nilpotent)
          CHECK(nil_radical(moved).dim() == nil_radical(a).dim());
        if (before.nilpotent)
          CHECK(frattini(moved).subalgebra.dim() ==
                frattini(a).subalgebra.dim());
      }
    }
  }
}

TEST_CASE("generators are deterministic and valid") {
  for (GeneratorKind kind :
       {GeneratorKind::DerivationFamily, GeneratorKind::TensorOfCatalog,
        GeneratorKind::DirectSumOfCatalog, GeneratorKind::BaseChange}) {
    for (const FieldSpec& spec : {Q, GF3}) {
      const GeneratorSpec g{kind, spec, 4};
      for (const std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
        const AlgebraDef a = random_algebra(g, seed);
        const AlgebraDef b = random_algebra(g, seed);
        CHECK(tables_equal(a, b));
        CHECK(validate_axioms(a).ok());
      }
    }
  }
}

TEST_CASE("generator kinds parse") {
  CHECK(parse_generator_kind("derivation_family") ==
        GeneratorKind::DerivationFamily);
  CHECK(generator_kind_name(GeneratorKind::BaseChange) == "base_change");
  CHECK_THROWS_AS(parse_generator_kind("nope"), UnknownNameError);
}

TEST_CASE("fuzz summaries") {
  const GeneratorSpec g{GeneratorKind::DerivationFamily, GF3, 4};
  const FuzzSummary s1 = fuzz(g, 10, 42);
  CHECK(s1.total == 10);
  CHECK(s1.violations.empty());
  const FuzzSummary s2 = fuzz(g, 10, 42);
  CHECK(s1.holds == s2.holds);
  CHECK(s1.hypothesis_unmet == s2.hypothesis_unmet);
  CHECK(s1.unsupported_field == s2.unsupported_field);

  const GeneratorSpec bc{GeneratorKind::BaseChange, Q, 4};
  const FuzzSummary s3 = fuzz(bc, 5, 7);
  CHECK(s3.violations.empty());
  CHECK(s3.total == 5);

  CHECK_THROWS_AS(fuzz(g, 0, 1), CapExceededError);
}
