#ifndef TPA_THEOREMS_HPP
#define TPA_THEOREMS_HPP

#include <cstdint>
#include <functional>

#include "tpa/lattice.hpp"
#include "tpa/rng.hpp"

namespace tpa {

enum class VerdictStatus { Holds, HypothesisUnmet, Violated, UnsupportedField };
std::string status_name(VerdictStatus status);

struct TheoremVerdict {
  std::string theorem_id;
  VerdictStatus status;
  std::string detail;  // hypothesis note, witness summary or support note
  // For violations: re-evaluates the violating identity from the captured
  // witness; absent otherwise.
  std::function<bool()> replay_violation;
  double elapsed_seconds = 0.0;
};

// The full check battery, one verdict per theorem (T01..T26) plus the
// supersolvability diagnostic D01 (which by design never reports violated).
// Checks that need enumeration degrade to unsupported_field with a note
// when the field is Q or a cap is exceeded; hypotheses are evaluated first.
std::vector<TheoremVerdict> run_suite(const AlgebraDef& a,
                                      const EnumCaps& caps = EnumCaps{});

// IDs in suite order.
std::vector<std::string> suite_theorem_ids();
// One-line statement of a theorem check, for report headers.
std::string theorem_title(const std::string& id);

// span(t, t^2, ..., t^m) with t^i . t^j = t^{i+j}, zero beyond degree m;
// zero bracket. Substrate of the derivation-family generator.
AlgebraDef truncated_polynomial_algebra(const FieldSpec& spec, int degree);

// Structure constants transported to the basis whose vectors are the rows
// of new_basis; DivisionByZero when the rows are dependent.
AlgebraDef change_of_basis(const AlgebraDef& a, const Mat& new_basis);

enum class GeneratorKind {
  DerivationFamily,
  TensorOfCatalog,
  DirectSumOfCatalog,
  BaseChange
};
std::string generator_kind_name(GeneratorKind kind);
GeneratorKind parse_generator_kind(const std::string& name);

struct GeneratorSpec {
  GeneratorKind kind;
  FieldSpec field = FieldSpec::rationals();
  int max_degree = 4;  // derivation family: truncation degree drawn in [2, max]
};

// Deterministic for fixed (spec, seed); the output always passes
// validate_axioms (a generator emitting an invalid algebra is itself a bug
// and throws VerificationFailed).
AlgebraDef random_algebra(const GeneratorSpec& spec, std::uint64_t seed);

struct FuzzViolation {
  std::uint64_t seed;
  std::string theorem_id;
  std::string detail;
};

struct FuzzSummary {
  int total = 0;
  long long holds = 0;
  long long hypothesis_unmet = 0;
  long long unsupported_field = 0;
  std::vector<FuzzViolation> violations;
};

// Runs run_suite on `count` generated algebras with per-index seeds
// base_seed, base_seed + 1, ... Violations are re-verified through their
// replay closure before being recorded.
FuzzSummary fuzz(const GeneratorSpec& spec, int count, std::uint64_t base_seed,
                 const EnumCaps& caps = EnumCaps{});

}  // namespace tpa

#endif  // TPA_THEOREMS_HPP
