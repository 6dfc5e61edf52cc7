// Acceptance suite: every criterion below runs end to end against the
// library (and the CLI where it matters) and prints one pass/fail line.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <sstream>

#include "tpa/cli.hpp"
#include "tpa/io.hpp"
#include "tpa/lattice.hpp"
#include "tpa/structure.hpp"
#include "tpa/theorems.hpp"

using namespace tpa;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF3 = FieldSpec::prime_field(3);
const FieldSpec GF5 = FieldSpec::prime_field(5);

class Criterion {
 public:
  Criterion(int number, std::string label, double budget_seconds)
      : number_(number),
        label_(std::move(label)),
        budget_(budget_seconds),
        start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }

  void finish() {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
            .count();
    if (budget_ > 0 && elapsed >= budget_)
      failures_.push_back("runtime " + std::to_string(elapsed) +
                          "s exceeds budget " + std::to_string(budget_) +
                          "s");
    for (const std::string& f : failures_) FAIL_CHECK(f);
    std::printf("criterion %d: %s (%.2fs) - %s\n", number_,
                failures_.empty() ? "PASS" : "FAIL", elapsed,
                label_.c_str());
    std::fflush(stdout);
    CHECK(failures_.empty());
  }

 private:
  int number_;
  std::string label_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> failures_;
};

Subspace line(const FieldSpec& spec, int ambient, int index) {
  return Subspace::span(spec, ambient, {unit_vector(spec, ambient, index)});
}

Subspace plane(const FieldSpec& spec, int ambient, int i, int j) {
  return Subspace::span(
      spec, ambient,
      {unit_vector(spec, ambient, i), unit_vector(spec, ambient, j)});
}

}  // namespace

TEST_CASE("criterion 1: fixture regression") {
  Criterion crit(1, "fixture regression (exact, tolerance zero)", 1.0);

  {  // EX_A over Q
    const AlgebraDef a = catalog("EX_A", Q);
    crit.expect(space_product_both(a, a.full_space(), a.full_space()) ==
                    line(Q, 2, 1),
                "EX_A: P^1 != span(e2)");
    const SeriesRecord ds = derived_series(a, a.full_space());
    crit.expect(ds.terminated && ds.index == 2,
                "EX_A: solvable index != 2");
    crit.expect(!lower_central_series(a, a.full_space()).terminated,
                "EX_A: unexpectedly nilpotent");
    crit.expect(annihilator(a, a.full_space()).is_zero_space(),
                "EX_A: Ann_P(P) != 0");
    const Subspace engel =
        engel_subspace(a, unit_vector(Q, 2, 0), EngelVariant::Lie);
    crit.expect(engel == line(Q, 2, 0), "EX_A: E_P^L(e1) != span(e1)");
    bool restricted_errors = false;
    try {
      restrict_to(a, engel);
    } catch (const NotASubalgebraError&) {
      restricted_errors = true;
    }
    crit.expect(restricted_errors, "EX_A: restrict(E_P^L(e1)) should error");
  }
  {  // EX_B over Q
    const AlgebraDef b = catalog("EX_B", Q);
    const SeriesRecord lcs = lower_central_series(b, b.full_space());
    crit.expect(lcs.terminated && lcs.index == 2,
                "EX_B: nilpotency class != 2");
    const FrattiniPair fp = frattini(b);
    const Subspace p1 = space_product_both(b, b.full_space(), b.full_space());
    const Subspace bound =
        subspace_intersect(annihilator(b, b.full_space()), p1);
    const Subspace e3 = line(Q, 3, 2);
    crit.expect(fp.subalgebra == e3 && fp.ideal == e3 && p1 == e3 &&
                    bound == e3,
                "EX_B: F = phi = P^1 = Ann(P) meet P^1 = span(e3) fails");
  }
  {  // EX_C: enumeration-bound parts over GF(3), the rest over Q
    const AlgebraDef c3 = catalog("EX_C", GF3);
    const FrattiniPair fp = frattini(c3);
    crit.expect(fp.subalgebra.is_zero_space() && fp.ideal.is_zero_space(),
                "EX_C: F = phi = 0 fails over GF(3)");
    const SocleReport soc = socles(c3);
    const Subspace nil3 = nil_radical(c3);
    const Subspace ann_soc = annihilator(c3, soc.socle);
    crit.expect(soc.zero_socle == line(GF3, 2, 1) &&
                    nil3 == line(GF3, 2, 1) && ann_soc == line(GF3, 2, 1),
                "EX_C: Zsoc = Nil = Ann(Soc) = span(e2) fails over GF(3)");

    const AlgebraDef c = catalog("EX_C", Q);
    crit.expect(nil_radical(c) == line(Q, 2, 1), "EX_C: Nil != span(e2) over Q");
    const IdempotentSplit split = idempotent_split(c, unit_vector(Q, 2, 0));
    crit.expect(split.part_e == line(Q, 2, 0) &&
                    split.part_rest == line(Q, 2, 1) && split.direct &&
                    split.spans_whole,
                "EX_C: decomposition span(e1) (+) span(e2) fails");
    const auto idems = idempotent_scan(c3);
    crit.expect(idems.size() == 1 && idems[0].principal &&
                    equal(idems[0].element, unit_vector(GF3, 2, 0)),
                "EX_C: e1 not the unique principal idempotent");
  }
  {  // EX_D over Q
    const AlgebraDef d = catalog("EX_D", Q);
    const NilpotencyReport rep = nilpotency_report(d);
    crit.expect(rep.lie_nilpotent, "EX_D: not Lie-nilpotent");
    const Subspace expected =
        Subspace::span(Q, 3, {unit_vector(Q, 3, 0), unit_vector(Q, 3, 2)});
    crit.expect(nil_radical_assoc(d) == expected,
                "EX_D: Nil_A != span(e1, e3)");
    crit.expect(nil_radical(d) == expected, "EX_D: Nil != span(e1, e3)");
  }
  {  // EX_E over Q
    const AlgebraDef e = catalog("EX_E", Q);
    const Subspace pp =
        space_product(e, e.full_space(), e.full_space(), ProductKind::Dot);
    crit.expect(pp == line(Q, 3, 0), "EX_E: P.P != span(e1)");
    crit.expect(!is_ideal(e, pp), "EX_E: P.P should fail the ideal predicate");
    crit.expect(ideal_closure(e, line(Q, 3, 0)) == plane(Q, 3, 0, 1),
                "EX_E: ideal closure of span(e1) != span(e1, e2)");
  }
  crit.finish();
}

TEST_CASE("criterion 2: Frattini enumeration oracle over GF(3)") {
  Criterion crit(2, "Frattini enumeration oracle (GF(3), dims <= 3)", 10.0);

  const auto max_a = maximal_subalgebras(catalog("EX_A", GF3));
  crit.expect(max_a.size() == 1 && max_a[0] == line(GF3, 2, 1),
              "EX_A: maximal subalgebras != {span(e2)}");

  const auto max_c = maximal_subalgebras(catalog("EX_C", GF3));
  bool c_ok = max_c.size() == 2;
  if (c_ok) {
    bool has_e1 = false, has_e2 = false;
    for (const Subspace& m : max_c) {
      if (m == line(GF3, 2, 0)) has_e1 = true;
      if (m == line(GF3, 2, 1)) has_e2 = true;
    }
    c_ok = has_e1 && has_e2;
  }
  crit.expect(c_ok, "EX_C: maximal subalgebras != {span(e1), span(e2)}");

  const AlgebraDef b = catalog("EX_B", GF3);
  Subspace enumerated = b.full_space();
  for (const Subspace& m : maximal_subalgebras(b))
    enumerated = subspace_intersect(enumerated, m);
  const Subspace p1 = space_product_both(b, b.full_space(), b.full_space());
  crit.expect(enumerated == p1 && enumerated == line(GF3, 3, 2),
              "EX_B: enumerated F != fast-path P^1 = span(e3)");
  crit.expect(frattini(b).subalgebra == enumerated,
              "EX_B: frattini() disagrees with the enumeration");
  crit.finish();
}

TEST_CASE("criterion 3: theorem suite on the catalog grid") {
  Criterion crit(3, "theorem suite, catalog x {Q, GF(3), GF(5)}", 30.0);
  for (const std::string& name : catalog_names()) {
    for (const FieldSpec& spec : {Q, GF3, GF5}) {
      const auto verdicts = run_suite(catalog(name, spec));
      for (const TheoremVerdict& v : verdicts)
        crit.expect(v.status != VerdictStatus::Violated,
                    name + " over " + spec.to_string() + ": " +
                        v.theorem_id + " violated: " + v.detail);
    }
  }
  // EX_A exhibits T24 hypothesis_unmet with F = P^1 and non-nilpotency
  const AlgebraDef a = catalog("EX_A", GF3);
  bool t24_seen = false;
  for (const TheoremVerdict& v : run_suite(a)) {
    if (v.theorem_id != "T24") continue;
    t24_seen = v.status == VerdictStatus::HypothesisUnmet &&
               v.detail.find("F(P) = P^1") != std::string::npos &&
               v.detail.find("nilpotent=no") != std::string::npos;
  }
  crit.expect(t24_seen,
              "EX_A/GF(3): T24 should be hypothesis_unmet with F = P^1 and "
              "non-nilpotency recorded");
  const FrattiniPair fp = frattini(a);
  crit.expect(fp.subalgebra ==
                  space_product_both(a, a.full_space(), a.full_space()),
              "EX_A/GF(3): F != P^1");
  crit.expect(!nilpotency_report(a).nilpotent,
              "EX_A/GF(3): unexpectedly nilpotent");
  crit.finish();
}

TEST_CASE("criterion 4: fuzz suites, seeds 1..200") {
  Criterion crit(4, "fuzz suites (5 generators, 200 seeds each)", 120.0);
  const struct {
    GeneratorKind kind;
    FieldSpec field;
  } suites[] = {
      {GeneratorKind::DerivationFamily, GF3},
      {GeneratorKind::DerivationFamily, Q},
      {GeneratorKind::TensorOfCatalog, GF3},
      {GeneratorKind::DirectSumOfCatalog, GF3},
      {GeneratorKind::BaseChange, Q},
  };
  for (const auto& suite : suites) {
    const GeneratorSpec g{suite.kind, suite.field, 4};
    const FuzzSummary summary = fuzz(g, 200, 1);
    crit.expect(summary.total == 200,
                generator_kind_name(suite.kind) + ": total != 200");
    for (const FuzzViolation& v : summary.violations)
      crit.expect(false, generator_kind_name(suite.kind) + " over " +
                             suite.field.to_string() + ", seed " +
                             std::to_string(v.seed) + ": " + v.theorem_id +
                             " " + v.detail);
  }
  crit.finish();
}

TEST_CASE("criterion 5: oracle equivalences over GF(3)") {
  Criterion crit(5, "oracle equivalences (GF(3), exhaustive, dims <= 3)",
                 60.0);
  for (const std::string& name : catalog_names()) {
    const AlgebraDef a = catalog(name, GF3);
    const auto ideals = all_ideals(a);
    const auto subspaces = enumerate_subspaces(a.dim(), GF3);

    // largest_ideal_in == brute-force maximum over enumerated ideals
    for (const Subspace& v : subspaces) {
      Subspace brute = a.zero_space();
      for (const Subspace& i : ideals)
        if (v.contains(i)) brute = subspace_sum(brute, i);
      crit.expect(largest_ideal_in(a, v) == brute,
                  name + ": largest_ideal_in mismatch at " + v.to_string());
    }

    // full-sum and simplified lower central series agree on every
    // enumerated subalgebra
    for (const Subspace& s : subspaces) {
      if (!is_subalgebra(a, s)) continue;
      const SeriesRecord fast =
          lower_central_series(a, s, SeriesMode::Simplified);
      const SeriesRecord full = lower_central_series(a, s, SeriesMode::FullSum);
      bool agree = fast.terms.size() == full.terms.size();
      for (std::size_t i = 0; agree && i < fast.terms.size(); ++i)
        agree = fast.terms[i] == full.terms[i];
      crit.expect(agree, name + ": series modes disagree on " + s.to_string());
    }

    // Engel operator check, exhaustive over all 3^n vectors
    bool all_ops_nilpotent = true;
    for_each_vector(a.dim(), GF3, EnumCaps{}, [&](const Vec& v) {
      const auto [p_ok, q_ok] = operator_nilpotent(a, v);
      if (!p_ok || !q_ok) {
        all_ops_nilpotent = false;
        return false;
      }
      return true;
    });
    crit.expect(all_ops_nilpotent == nilpotency_report(a).nilpotent,
                name + ": Engel operator scan disagrees with the series "
                       "verdict");
  }

  // nilpotent radical: strategy ladder vs forced enumeration on the
  // Lie-nilpotent fixtures
  for (const std::string& name : {"EX_B", "EX_C", "EX_D"}) {
    const AlgebraDef a = catalog(name, GF3);
    crit.expect(nil_radical(a) == nil_radical_by_enumeration(a),
                std::string(name) + ": nil radical strategies disagree");
  }
  crit.finish();
}

TEST_CASE("criterion 6: linear-algebra kernel properties") {
  Criterion crit(6, "kernel properties (dimension formula, counts, axioms)",
                 60.0);

  for (const FieldSpec& spec : {Q, GF3, GF5}) {
    Rng rng(spec.is_rationals() ? 1001 : 1001 + spec.modulus());
    for (int trial = 0; trial < 500; ++trial) {
      const int ambient = 1 + static_cast<int>(rng.below(4));
      auto draw = [&]() {
        const int count = static_cast<int>(rng.below(ambient + 1));
        std::vector<Vec> vecs;
        for (int i = 0; i < count; ++i) {
          Vec v(ambient);
          for (int j = 0; j < ambient; ++j) v(j) = random_scalar(rng, spec);
          vecs.push_back(std::move(v));
        }
        return Subspace::span(spec, ambient, vecs);
      };
      const Subspace u = draw(), v = draw();
      const int lhs = subspace_sum(u, v).dim() + subspace_intersect(u, v).dim();
      if (lhs != u.dim() + v.dim()) {
        crit.expect(false, "dimension formula fails over " + spec.to_string());
        break;
      }
    }
  }

  for (const FieldSpec& spec : {GF3, GF5})
    for (int n = 0; n <= 4; ++n) {
      EnumCaps caps;
      caps.max_vectors = 1000000;
      const auto all = enumerate_subspaces(n, spec, std::nullopt, caps);
      BigInt expect = 0;
      for (int k = 0; k <= n; ++k)
        expect += gaussian_binomial(n, k, spec.modulus());
      crit.expect(BigInt(all.size()) == expect,
                  "subspace count mismatch at n=" + std::to_string(n) +
                      " over " + spec.to_string());
      for (std::size_t i = 1; i < all.size(); ++i)
        if (!(Subspace::canonical_less(all[i - 1], all[i]))) {
          crit.expect(false, "enumeration order/duplicate defect");
          break;
        }
    }

  for (const FieldSpec& spec : {GF3, GF5}) {
    const Scalar zero = Scalar::zero(spec), one = Scalar::one(spec);
    bool ok = true;
    const std::int64_t p = spec.modulus();
    for (std::int64_t x = 0; x < p && ok; ++x) {
      const Scalar a = Scalar::of(spec, x);
      ok = a + zero == a && a * one == a && a + (-a) == zero;
      if (x != 0) ok = ok && a * a.inverse() == one;
      for (std::int64_t y = 0; y < p && ok; ++y) {
        const Scalar b = Scalar::of(spec, y);
        ok = a + b == b + a && a * b == b * a;
        for (std::int64_t z = 0; z < p && ok; ++z) {
          const Scalar c = Scalar::of(spec, z);
          ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
               a * (b + c) == a * b + a * c;
        }
      }
    }
    crit.expect(ok, "field axioms fail over " + spec.to_string());
  }
  crit.finish();
}

TEST_CASE("criterion 7: determinism") {
  Criterion crit(7, "byte-identical reports and reproducible fuzz", 60.0);

  const std::string path = std::string(TPA_WORK_DIR) + "/acceptance_exc.json";
  {
    std::ostringstream out, err;
    REQUIRE(run_cli({"catalog", "EX_C", "--field", "GF3", "--out", path}, out,
                    err) == kExitOk);
  }
  for (const std::string format : {"text", "structured"}) {
    std::ostringstream out1, out2, err;
    const int c1 = run_cli({"analyze", path, "--format", format}, out1, err);
    const int c2 = run_cli({"analyze", path, "--format", format}, out2, err);
    crit.expect(c1 == kExitOk && c2 == kExitOk,
                "analyze exit codes not stable");
    crit.expect(out1.str() == out2.str() && !out1.str().empty(),
                "analyze bytes differ between runs (" + format + ")");
  }
  {
    std::ostringstream out1, out2, err;
    const std::vector<std::string> cmd = {
        "theorems", "--generator", "tensor_of_catalog", "--field", "GF3",
        "--count",  "3",           "--seed",      "11"};
    const int c1 = run_cli(cmd, out1, err);
    const int c2 = run_cli(cmd, out2, err);
    crit.expect(c1 == kExitOk && c2 == kExitOk,
                "generator run exit codes not stable");
    crit.expect(out1.str() == out2.str(),
                "fuzz report bytes differ between runs");
  }
  {
    const GeneratorSpec g{GeneratorKind::DirectSumOfCatalog, GF3, 4};
    const FuzzSummary s1 = fuzz(g, 5, 31), s2 = fuzz(g, 5, 31);
    crit.expect(s1.holds == s2.holds &&
                    s1.hypothesis_unmet == s2.hypothesis_unmet &&
                    s1.unsupported_field == s2.unsupported_field &&
                    s1.violations.size() == s2.violations.size(),
                "fuzz summaries are not reproducible");
  }
  crit.finish();
}
