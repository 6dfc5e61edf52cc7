#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tpa/lattice.hpp"
#include "tpa/rng.hpp"

using namespace tpa;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF3 = FieldSpec::prime_field(3);

Subspace line(const FieldSpec& spec, int ambient, int index) {
  return Subspace::span(spec, ambient, {unit_vector(spec, ambient, index)});
}

bool family_contains(const std::vector<Subspace>& family, const Subspace& s) {
  for (const Subspace& t : family)
    if (t == s) return true;
  return false;
}

}  // namespace

TEST_CASE("subalgebra closure") {
  const AlgebraDef exa = catalog("EX_A", Q);
  CHECK(subalgebra_closure(exa, line(Q, 2, 0)).is_full_space());
  const AlgebraDef exb = catalog("EX_B", Q);
  CHECK(subalgebra_closure(exb, line(Q, 3, 2)) == line(Q, 3, 2));
  const AlgebraDef exe = catalog("EX_E", Q);
  CHECK(subalgebra_closure(exe, line(Q, 3, 2)).is_full_space());
}

TEST_CASE("ideal closure") {
  const AlgebraDef exe = catalog("EX_E", Q);
  CHECK(ideal_closure(exe, line(Q, 3, 0)) ==
        Subspace::span(Q, 3, {unit_vector(Q, 3, 0), unit_vector(Q, 3, 1)}));
  const AlgebraDef exa = catalog("EX_A", Q);
  CHECK(ideal_closure(exa, line(Q, 2, 1)) == line(Q, 2, 1));
  const AlgebraDef exb = catalog("EX_B", Q);
  CHECK(ideal_closure(exb, line(Q, 3, 2)) == line(Q, 3, 2));
}

TEST_CASE("closure operator laws") {
  Rng rng(555);
  const AlgebraDef a = catalog("EX_E", GF3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vec> gens;
    for (std::uint64_t t = rng.below(3); t-- > 0;) {
      Vec v(3);
      for (int i = 0; i < 3; ++i) v(i) = random_scalar(rng, GF3);
      gens.push_back(std::move(v));
    }
    const Subspace v = Subspace::span(GF3, 3, gens);
    for (auto close : {subalgebra_closure, ideal_closure}) {
      const Subspace cv = close(a, v);
      CHECK(cv.contains(v));             // extensive
      CHECK(close(a, cv) == cv);         // idempotent
      const Subspace w = subspace_sum(v, line(GF3, 3, 1));
      CHECK(close(a, w).contains(cv));   // monotone
    }
  }
}

TEST_CASE("largest ideal inside a subspace") {
  const AlgebraDef exa = catalog("EX_A", Q);
  CHECK(largest_ideal_in(exa, line(Q, 2, 1)) == line(Q, 2, 1));
  CHECK(largest_ideal_in(exa, line(Q, 2, 0)).is_zero_space());
  CHECK(largest_ideal_in(exa, exa.full_space()).is_full_space());

  // brute-force oracle: the largest ideal inside v is the sum of all
  // enumerated ideals contained in v
  for (const std::string& name : {"EX_A", "EX_C", "EX_B", "EX_E"}) {
    const AlgebraDef a = catalog(name, GF3);
    const auto ideals = all_ideals(a);
    for (const Subspace& v : enumerate_subspaces(a.dim(), GF3)) {
      Subspace expected = a.zero_space();
      for (const Subspace& i : ideals)
        if (v.contains(i)) expected = subspace_sum(expected, i);
      CHECK(largest_ideal_in(a, v) == expected);
    }
  }
}

TEST_CASE("lattice enumeration") {
  const AlgebraDef exa = catalog("EX_A", GF3);
  const auto ideals_a = all_ideals(exa);
  CHECK(family_contains(ideals_a, line(GF3, 2, 1)));
  CHECK_FALSE(family_contains(ideals_a, line(GF3, 2, 0)));

  const auto subs_a = all_subalgebras(exa);
  CHECK(family_contains(subs_a, exa.zero_space()));
  CHECK(family_contains(subs_a, exa.full_space()));

  const AlgebraDef exe = catalog("EX_E", GF3);
  CHECK_FALSE(family_contains(all_ideals(exe), line(GF3, 3, 0)));
}

TEST_CASE("maximal subalgebras") {
  const auto max_a = maximal_subalgebras(catalog("EX_A", GF3));
  REQUIRE(max_a.size() == 1);
  CHECK(max_a[0] == line(GF3, 2, 1));

  const auto max_c = maximal_subalgebras(catalog("EX_C", GF3));
  REQUIRE(max_c.size() == 2);
  CHECK(family_contains(max_c, line(GF3, 2, 0)));
  CHECK(family_contains(max_c, line(GF3, 2, 1)));

  const auto max_zero = maximal_subalgebras(AlgebraDef::Builder(GF3, 1).build());
  REQUIRE(max_zero.size() == 1);
  CHECK(max_zero[0].is_zero_space());
}

TEST_CASE("frattini subalgebra and ideal") {
  for (const FieldSpec& spec : {Q, GF3}) {
    const FrattiniPair fb = frattini(catalog("EX_B", spec));
    CHECK(fb.subalgebra == line(spec, 3, 2));
    CHECK(fb.ideal == line(spec, 3, 2));
  }

  const AlgebraDef exa = catalog("EX_A", GF3);
  const FrattiniPair fa = frattini(exa);
  CHECK(fa.subalgebra == line(GF3, 2, 1));
  const Subspace p1 = space_product_both(exa, exa.full_space(),
                                         exa.full_space());
  CHECK(fa.subalgebra == p1);

  const FrattiniPair fc = frattini(catalog("EX_C", GF3));
  CHECK(fc.subalgebra.is_zero_space());
  CHECK(fc.ideal.is_zero_space());

  CHECK_THROWS_AS(frattini(catalog("EX_A", Q)), UnsupportedError);
  CHECK_THROWS_AS(frattini(catalog("EX_C", Q)), UnsupportedError);
}

TEST_CASE("jacobson radical") {
  const FrattiniPair fb = frattini(catalog("EX_B", GF3));
  const Subspace jb = jacobson(catalog("EX_B", GF3));
  CHECK(jb == line(GF3, 3, 2));
  CHECK(jb == fb.subalgebra);
  CHECK(jb == fb.ideal);

  CHECK(jacobson(catalog("EX_C", GF3)).is_zero_space());
  CHECK(jacobson(AlgebraDef::Builder(GF3, 1).build()).is_zero_space());
  CHECK_THROWS_AS(jacobson(catalog("EX_B", Q)), UnsupportedFieldError);
}

TEST_CASE("socles") {
  const SocleReport sc = socles(catalog("EX_C", GF3));
  CHECK(sc.zero_socle == line(GF3, 2, 1));
  CHECK(sc.socle.is_full_space());  // span(e1) + span(e2)
  CHECK(sc.minimal.size() == 2);
  CHECK(sc.minimal_abelian.size() == 1);

  const SocleReport sb = socles(catalog("EX_B", GF3));
  CHECK(sb.socle == line(GF3, 3, 2));
  CHECK(sb.zero_socle == line(GF3, 3, 2));

  const SocleReport s0 = socles(AlgebraDef::Builder(GF3, 0).build());
  CHECK(s0.socle.is_zero_space());
  CHECK(s0.zero_socle.is_zero_space());
}

TEST_CASE("frattini series") {
  for (const FieldSpec& spec : {Q, GF3}) {
    const SeriesRecord fs = frattini_series(catalog("EX_B", spec));
    REQUIRE(fs.terms.size() == 3);
    CHECK(fs.terms[0].is_full_space());
    CHECK(fs.terms[1] == line(spec, 3, 2));
    CHECK(fs.terms[2].is_zero_space());
    CHECK(fs.terminated);
    CHECK(fs.index == 2);
  }

  const SeriesRecord fz = frattini_series(AlgebraDef::Builder(Q, 0).build());
  CHECK(fz.terms.size() == 1);
  CHECK(fz.index == 0);

  // Frattini terms sit inside the derived series terms for nilpotent inputs
  for (const std::string& name : {"EX_B"}) {
    const AlgebraDef a = catalog(name, GF3);
    const SeriesRecord fs = frattini_series(a);
    const SeriesRecord ds = derived_series(a, a.full_space());
    for (std::size_t i = 0; i < fs.terms.size(); ++i) {
      const Subspace& derived_i =
          i < ds.terms.size() ? ds.terms[i] : ds.terms.back();
      CHECK(derived_i.contains(fs.terms[i]));
    }
  }
}

TEST_CASE("quotients by enumerated ideals stay valid") {
  for (const std::string& name : catalog_names()) {
    const AlgebraDef a = catalog(name, GF3);
    for (const Subspace& ideal : all_ideals(a)) {
      const QuotientResult q = quotient_by_ideal(a, ideal);
      CHECK(validate_axioms(q.algebra).ok());
      CHECK(q.algebra.dim() == a.dim() - ideal.dim());
    }
  }
}

TEST_CASE("lattice report invariants") {
  for (const std::string& name : catalog_names()) {
    const AlgebraDef a = catalog(name, GF3);
    const LatticeReport report = lattice_report(a);
    const Subspace p1 =
        space_product_both(a, a.full_space(), a.full_space());
    CHECK(report.frattini_subalgebra.contains(report.frattini_ideal));
    CHECK(p1.contains(report.frattini_subalgebra));
    CHECK(p1.contains(report.jacobson));
    CHECK(report.socle.contains(report.zero_socle));
    for (const Subspace& s : report.minimal_ideals) CHECK(s.dim() > 0);
    for (const Subspace& s : report.maximal_subalgebras)
      CHECK(s.dim() < a.dim());
    for (const Subspace& s : report.maximal_ideals) CHECK(s.dim() < a.dim());
  }
}
