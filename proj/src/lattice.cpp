#include "tpa/lattice.hpp"

namespace tpa {

namespace {

Subspace fixed_point_up(Subspace w,
                        const std::function<Subspace(const Subspace&)>& step) {
  while (true) {
    Subspace next = subspace_sum(w, step(w));
    if (next == w) return w;
    w = std::move(next);
  }
}

}  // namespace

Subspace subalgebra_closure(const AlgebraDef& a, const Subspace& v) {
  return fixed_point_up(v, [&](const Subspace& w) {
    return space_product_both(a, w, w);
  });
}

Subspace ideal_closure(const AlgebraDef& a, const Subspace& v) {
  const Subspace full = a.full_space();
  return fixed_point_up(v, [&](const Subspace& w) {
    return space_product_both(a, w, full);
  });
}

Subspace largest_ideal_in(const AlgebraDef& a, const Subspace& v) {
  const int n = a.dim();
  Subspace w = v;
  while (true) {
    // x survives when x.e_j and [x, e_j] stay inside w for every basis e_j.
    const Mat reduce = reduction_matrix(w);
    Mat stacked = zero_matrix(a.spec(), 2 * n * n, n);
    Eigen::Index row = 0;
    for (int j = 0; j < n; ++j) {
      const Vec ej = unit_vector(a.spec(), n, j);
      stacked.block(row, 0, n, n) = Mat(reduce * a.left_mul_operator(ej));
      row += n;
      stacked.block(row, 0, n, n) = Mat(reduce * a.ad_operator(ej));
      row += n;
    }
    Subspace next = subspace_intersect(w, kernel(stacked, a.spec()));
    if (next == w) return w;
    w = std::move(next);
  }
}

std::vector<Subspace> all_subalgebras(const AlgebraDef& a,
                                      const EnumCaps& caps) {
  std::vector<Subspace> out;
  for (Subspace& s : enumerate_subspaces(a.dim(), a.spec(), std::nullopt,
                                         caps))
    if (is_subalgebra(a, s)) out.push_back(std::move(s));
  return out;
}

std::vector<Subspace> all_ideals(const AlgebraDef& a, const EnumCaps& caps) {
  std::vector<Subspace> out;
  for (Subspace& s : enumerate_subspaces(a.dim(), a.spec(), std::nullopt,
                                         caps))
    if (is_ideal(a, s)) out.push_back(std::move(s));
  return out;
}

namespace {

// Maximal elements of the proper part of an inclusion-ordered family.
std::vector<Subspace> maximal_proper(const std::vector<Subspace>& family,
                                     int full_dim) {
  std::vector<Subspace> out;
  for (const Subspace& s : family) {
    if (s.dim() == full_dim) continue;
    bool dominated = false;
    for (const Subspace& t : family) {
      if (t.dim() == full_dim || t.dim() <= s.dim()) continue;
      if (t.contains(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<Subspace> minimal_nonzero(const std::vector<Subspace>& family) {
  std::vector<Subspace> out;
  for (const Subspace& s : family) {
    if (s.dim() == 0) continue;
    bool dominates = false;
    for (const Subspace& t : family) {
      if (t.dim() == 0 || t.dim() >= s.dim()) continue;
      if (s.contains(t)) {
        dominates = true;
        break;
      }
    }
    if (!dominates) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<Subspace> maximal_subalgebras(const AlgebraDef& a,
                                          const EnumCaps& caps) {
  return maximal_proper(all_subalgebras(a, caps), a.dim());
}

std::vector<Subspace> maximal_ideals(const AlgebraDef& a,
                                     const EnumCaps& caps) {
  return maximal_proper(all_ideals(a, caps), a.dim());
}

std::vector<Subspace> minimal_ideals(const AlgebraDef& a,
                                     const EnumCaps& caps) {
  return minimal_nonzero(all_ideals(a, caps));
}

namespace {

Subspace intersect_family(const AlgebraDef& a,
                          const std::vector<Subspace>& family) {
  Subspace result = a.full_space();
  for (const Subspace& s : family) result = subspace_intersect(result, s);
  return result;
}

Subspace derived_term(const AlgebraDef& a) {
  const Subspace full = a.full_space();
  return space_product_both(a, full, full);
}

}  // namespace

FrattiniPair frattini(const AlgebraDef& a, const EnumCaps& caps) {
  const Subspace p1 = derived_term(a);
  Subspace f = a.zero_space();
  if (nilpotency_report(a).nilpotent) {
    f = p1;  // F(P) = P^1 for nilpotent algebras
  } else if (a.spec().is_prime_field()) {
    f = intersect_family(a, maximal_subalgebras(a, caps));
  } else {
    throw UnsupportedError(
        "Frattini subalgebra over Q requires a nilpotent algebra; no finite "
        "procedure covers the rest");
  }
  Subspace phi = largest_ideal_in(a, f);
  if (!p1.contains(f) || !f.contains(phi))
    throw VerificationFailedError(
        "Frattini data violates phi <= F <= P^1");
  if (!lower_central_series(a, phi, SeriesMode::Simplified, OpMask::DotOnly)
           .terminated)
    throw VerificationFailedError(
        "Frattini ideal failed the associative nilpotency post-check");
  return FrattiniPair{std::move(f), std::move(phi)};
}

Subspace jacobson(const AlgebraDef& a, const EnumCaps& caps) {
  if (!a.spec().is_prime_field())
    throw UnsupportedFieldError("maximal-ideal enumeration needs GF(p)");
  return intersect_family(a, maximal_ideals(a, caps));
}

SocleReport socles(const AlgebraDef& a, const EnumCaps& caps) {
  SocleReport report{{}, {}, a.zero_space(), a.zero_space()};
  report.minimal = minimal_ideals(a, caps);
  for (const Subspace& s : report.minimal) {
    report.socle = subspace_sum(report.socle, s);
    if (is_abelian_subspace(a, s)) {
      report.minimal_abelian.push_back(s);
      report.zero_socle = subspace_sum(report.zero_socle, s);
    }
  }
  return report;
}

SeriesRecord frattini_series(const AlgebraDef& a, const EnumCaps& caps) {
  SeriesRecord record;
  record.kind = SeriesKind::Frattini;
  record.terms.push_back(a.full_space());

  AlgebraDef stage = a;
  Mat embed = identity_matrix(a.spec(), a.dim());  // stage coords -> original
  while (true) {
    if (record.terms.back().is_zero_space()) {
      record.terminated = true;
      record.index = static_cast<int>(record.terms.size()) - 1;
      return record;
    }
    const FrattiniPair fp = frattini(stage, caps);
    const Mat rows = fp.subalgebra.dim() == 0
                         ? Mat(0, a.dim())
                         : Mat(fp.subalgebra.basis() * embed);
    record.terms.push_back(Subspace::row_span(a.spec(), a.dim(), rows));
    if (fp.subalgebra.dim() > 0) {
      embed = Mat(fp.subalgebra.basis() * embed);
      stage = restrict_to(stage, fp.subalgebra);
    }
  }
}

LatticeReport lattice_report(const AlgebraDef& a, const EnumCaps& caps) {
  std::vector<Subspace> subs = all_subalgebras(a, caps);
  std::vector<Subspace> ideals = all_ideals(a, caps);
  std::vector<Subspace> max_subs = maximal_proper(subs, a.dim());
  std::vector<Subspace> max_ideals = maximal_proper(ideals, a.dim());
  std::vector<Subspace> min_ideals = minimal_nonzero(ideals);
  const FrattiniPair fp = frattini(a, caps);
  const SocleReport soc = socles(a, caps);
  Subspace j = intersect_family(a, max_ideals);
  return LatticeReport{std::move(subs),
                       std::move(max_subs),
                       std::move(ideals),
                       std::move(max_ideals),
                       std::move(min_ideals),
                       soc.minimal_abelian,
                       fp.subalgebra,
                       fp.ideal,
                       std::move(j),
                       soc.socle,
                       soc.zero_socle};
}

}  // namespace tpa
