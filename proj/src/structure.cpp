#include "tpa/structure.hpp"

#include <algorithm>

#include "fp_kernel.hpp"

namespace tpa {

namespace {

Subspace masked_product(const AlgebraDef& a, const Subspace& u,
                        const Subspace& v, OpMask ops) {
  switch (ops) {
    case OpMask::Both: return space_product_both(a, u, v);
    case OpMask::DotOnly: return space_product(a, u, v, ProductKind::Dot);
    case OpMask::BracketOnly:
      return space_product(a, u, v, ProductKind::Bracket);
  }
  throw Error("Internal", "bad OpMask");
}

void require_closed(const AlgebraDef& a, const Subspace& s, OpMask ops) {
  const Subspace prod = masked_product(a, s, s, ops);
  if (!s.contains(prod))
    throw NotASubalgebraError("series base " + s.to_string() +
                              " is not closed under the algebra operations");
}

// Appends terms until the chain hits zero (terminated) or repeats
// (stabilized); the repeated term is kept so stabilization is visible.
SeriesRecord run_series(SeriesKind kind, Subspace first,
                        const std::function<Subspace(
                            const std::vector<Subspace>&)>& next_term) {
  SeriesRecord record;
  record.kind = kind;
  record.terms.push_back(std::move(first));
  while (true) {
    const Subspace& prev = record.terms.back();
    if (prev.is_zero_space()) {
      record.terminated = true;
      record.index = static_cast<int>(record.terms.size()) - 1;
      return record;
    }
    Subspace next = next_term(record.terms);
    const bool repeat = next == prev;
    record.terms.push_back(std::move(next));
    if (repeat) return record;  // stabilized above zero
  }
}

}  // namespace

SeriesRecord lower_central_series(const AlgebraDef& a, const Subspace& s,
                                  SeriesMode mode, OpMask ops) {
  require_closed(a, s, ops);
  return run_series(
      SeriesKind::LowerCentral, s,
      [&](const std::vector<Subspace>& terms) {
        if (mode == SeriesMode::Simplified)
          return masked_product(a, terms.front(), terms.back(), ops);
        const int n = static_cast<int>(terms.size()) - 1;
        Subspace sum = Subspace::zero(a.spec(), a.dim());
        for (int i = 0; i <= n; ++i)
          sum = subspace_sum(sum,
                             masked_product(a, terms[i], terms[n - i], ops));
        return sum;
      });
}

SeriesRecord derived_series(const AlgebraDef& a, const Subspace& s,
                            OpMask ops) {
  require_closed(a, s, ops);
  return run_series(SeriesKind::Derived, s,
                    [&](const std::vector<Subspace>& terms) {
                      return masked_product(a, terms.back(), terms.back(),
                                            ops);
                    });
}

NilpotencyReport nilpotency_report(const AlgebraDef& a) {
  require_valid(a);
  NilpotencyReport report;
  const Subspace full = a.full_space();

  const SeriesRecord lcs = lower_central_series(a, full);
  report.nilpotent = lcs.terminated;
  report.nilpotency_class = lcs.index;

  const SeriesRecord ds = derived_series(a, full);
  report.solvable = ds.terminated;
  report.solvable_index = ds.index;

  const SeriesRecord assoc =
      lower_central_series(a, full, SeriesMode::Simplified, OpMask::DotOnly);
  report.assoc_nilpotent = assoc.terminated;
  report.assoc_class = assoc.index;

  const SeriesRecord lie = lower_central_series(a, full,
                                                SeriesMode::Simplified,
                                                OpMask::BracketOnly);
  report.lie_nilpotent = lie.terminated;
  report.lie_class = lie.index;

  report.engel_consistent =
      report.nilpotent == (report.assoc_nilpotent && report.lie_nilpotent);
  return report;
}

std::pair<bool, bool> operator_nilpotent(const AlgebraDef& a, const Vec& x) {
  const OperatorPair ops = operator_of(a, x);
  return {matrix_nilpotent(ops.left_mul), matrix_nilpotent(ops.ad)};
}

namespace {

bool lift_through(const AlgebraDef& a, const Vec& v, const QuotientResult& q,
                  const EnumCaps& caps, std::vector<Subspace>& chain_out);

bool find_flag(const AlgebraDef& a, const EnumCaps& caps,
               std::vector<Subspace>& chain_out) {
  const int n = a.dim();
  if (n == 0) return true;
  // In a nilpotent algebra every operator is nilpotent, so a 1-dimensional
  // ideal cannot carry an eigenvalue: the 1-dimensional ideals are exactly
  // the lines inside Ann(P), and any of them works (quotients stay
  // nilpotent). That shortcut avoids the projective scan entirely.
  if (lower_central_series(a, a.full_space()).terminated) {
    const Subspace ann = annihilator(a, a.full_space());
    if (ann.dim() == 0) return false;  // cannot happen when nilpotent
    const Vec v = ann.basis_vector(0);
    return lift_through(a, v, quotient_by_ideal(a, Subspace::span(a.spec(), n, {v})),
                        caps, chain_out);
  }
  bool found = false;
  for_each_projective_point(n, a.spec(), caps, [&](const Vec& v) {
    const Subspace line = Subspace::span(a.spec(), n, {v});
    if (!is_ideal(a, line)) return true;  // keep scanning
    if (!lift_through(a, v, quotient_by_ideal(a, line), caps, chain_out))
      return true;
    found = true;
    return false;
  });
  return found;
}

bool lift_through(const AlgebraDef& a, const Vec& v, const QuotientResult& q,
                  const EnumCaps& caps, std::vector<Subspace>& chain_out) {
  std::vector<Subspace> sub_chain;
  if (!find_flag(q.algebra, caps, sub_chain)) return false;
  chain_out.clear();
  chain_out.push_back(Subspace::span(a.spec(), a.dim(), {v}));
  for (const Subspace& u : sub_chain) {
    std::vector<Vec> gens = {v};
    for (int i = 0; i < u.dim(); ++i)
      gens.push_back(Vec(q.section * u.basis_vector(i)));
    chain_out.push_back(Subspace::span(a.spec(), a.dim(), gens));
  }
  return true;
}

}  // namespace

std::optional<std::vector<Subspace>> supersolvable_flag(const AlgebraDef& a,
                                                        const EnumCaps& caps) {
  if (!a.spec().is_prime_field())
    throw UnsupportedFieldError(
        "supersolvable flag search needs a finite field; over Q the "
        "underlying statement is out of reach");
  std::vector<Subspace> chain;
  if (!find_flag(a, caps, chain)) return std::nullopt;
  std::vector<Subspace> flag;
  flag.push_back(a.zero_space());
  // chain holds dims 1..n-1 lifts plus the full space for dim n
  for (const Subspace& s : chain) flag.push_back(s);
  return flag;
}

Subspace annihilator(const AlgebraDef& a, const Subspace& b,
                     AnnihilatorVariant variant) {
  if (b.ambient() != a.dim())
    throw DimensionMismatchError("subspace ambient does not match algebra");
  const int n = a.dim();
  const bool with_dot = variant != AnnihilatorVariant::Lie;
  const bool with_bracket = variant != AnnihilatorVariant::Assoc;
  const int blocks = (with_dot ? 1 : 0) + (with_bracket ? 1 : 0);
  Mat stacked = zero_matrix(a.spec(), b.dim() * blocks * n == 0 ? 0
                                        : b.dim() * blocks * n,
                            n);
  Eigen::Index row = 0;
  for (int j = 0; j < b.dim(); ++j) {
    const Vec bj = b.basis_vector(j);
    if (with_dot) {
      const Mat p = a.left_mul_operator(bj);  // x.b_j = P_{b_j} x
      stacked.block(row, 0, n, n) = p;
      row += n;
    }
    if (with_bracket) {
      const Mat q = a.ad_operator(bj);  // [x, b_j] = -Q_{b_j} x
      stacked.block(row, 0, n, n) = q;
      row += n;
    }
  }
  return kernel(stacked, a.spec());
}

Subspace normalizer(const AlgebraDef& a, const Subspace& b) {
  if (auto defect = subalgebra_defect(a, b))
    throw NotASubalgebraError("normalizer base is not a subalgebra");
  const int n = a.dim();
  const Mat reduce = reduction_matrix(b);
  Mat stacked = zero_matrix(a.spec(), 2 * b.dim() * n, n);
  Eigen::Index row = 0;
  for (int j = 0; j < b.dim(); ++j) {
    const Vec bj = b.basis_vector(j);
    stacked.block(row, 0, n, n) = Mat(reduce * a.left_mul_operator(bj));
    row += n;
    stacked.block(row, 0, n, n) = Mat(reduce * a.ad_operator(bj));
    row += n;
  }
  Subspace result = kernel(stacked, a.spec());
  if (!is_subalgebra(a, result))
    throw VerificationFailedError(
        "normalizer failed its subalgebra post-check");
  return result;
}

namespace {

Mat power_at_least(const Mat& m, int n) {
  Mat power = m;
  int covered = 1;
  while (covered < n) {
    power = Mat(power * power);
    covered *= 2;
  }
  return power;
}

}  // namespace

Subspace engel_subspace(const AlgebraDef& a, const Vec& x,
                        EngelVariant variant) {
  if (x.size() != a.dim())
    throw DimensionMismatchError("vector length does not match algebra");
  const int n = a.dim();
  if (n == 0) return a.zero_space();
  const Mat op = variant == EngelVariant::Assoc ? a.left_mul_operator(x)
                                                : a.ad_operator(x);
  const Subspace result = kernel(power_at_least(op, n), a.spec());
  if (variant == EngelVariant::Assoc && !is_ideal(a, result))
    throw VerificationFailedError(
        "associative Engel subspace failed its ideal post-check");
  return result;
}

namespace {

// Counting-order walk over all residue vectors; fn gets the digit array.
void for_each_residue_vector(
    int n, std::int64_t p, const std::function<void(
        const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> digits(n, 0);
  while (true) {
    fn(digits);
    int pos = n;
    while (pos > 0 && digits[pos - 1] == p - 1) digits[--pos] = 0;
    if (pos == 0) return;
    ++digits[pos - 1];
  }
}

Vec residues_to_vec(const FieldSpec& spec,
                    const std::vector<std::int64_t>& digits) {
  Vec v(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i)
    v(static_cast<Eigen::Index>(i)) =
        Scalar::of(spec, static_cast<long long>(digits[i]));
  return v;
}

void check_scan_cap(int n, std::int64_t p, const EnumCaps& caps,
                    const char* what) {
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= p;
    if (total > caps.max_vectors)
      throw CapExceededError(std::string(what) + ": p^n exceeds cap " +
                             std::to_string(caps.max_vectors));
  }
}

void verify_assoc_radical(const AlgebraDef& a, const Subspace& radical) {
  for (int i = 0; i < radical.dim(); ++i) {
    if (!matrix_nilpotent(a.left_mul_operator(radical.basis_vector(i))))
      throw VerificationFailedError(
          "associative radical basis vector is not nilpotent");
  }
  const Subspace shifted =
      space_product(a, radical, a.full_space(), ProductKind::Dot);
  if (!radical.contains(shifted))
    throw VerificationFailedError(
        "associative radical is not an associative ideal");
}

}  // namespace

Subspace nil_radical_assoc(const AlgebraDef& a, const EnumCaps& caps) {
  const int n = a.dim();
  Subspace result = a.zero_space();
  if (a.spec().is_rationals()) {
    // Dickson criterion (characteristic 0): the radical is the kernel of
    // the trace form tr(P_{x.y}). Traces are linear, so the Gram matrix
    // comes from the traces of the basis operators.
    std::vector<Scalar> basis_traces;
    basis_traces.reserve(n);
    for (int i = 0; i < n; ++i) {
      Scalar t = Scalar::zero(a.spec());
      for (int k = 0; k < n; ++k) t += a.product_entry(i, k, k);
      basis_traces.push_back(t);
    }
    Mat gram = zero_matrix(a.spec(), n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar g = Scalar::zero(a.spec());
        for (int k = 0; k < n; ++k)
          g += a.product_entry(i, j, k) * basis_traces[k];
        gram(i, j) = g;
      }
    result = kernel(gram, a.spec());
  } else {
    // Exhaustive element scan; scale invariance of nilpotency lets the scan
    // run over projective representatives, and anything already inside the
    // partial span is a sum of nilpotents, hence nilpotent (commutativity).
    // The partial span is kept as an incrementally reduced residue basis.
    check_scan_cap(n, a.spec().modulus(), caps, "associative radical scan");
    const detail::FpTable table(a, ProductKind::Dot);
    const std::int64_t p = table.p;
    std::vector<std::vector<std::int64_t>> reduced;
    std::vector<int> lead;
    std::vector<std::int64_t> scratch_a(n * n), scratch_b(n * n), r(n);
    // projective representatives: leading coordinate 1 at position `head`
    for (int head = 0; head < n; ++head) {
      const int tail = n - head - 1;
      std::vector<std::int64_t> digits(tail, 0);
      while (true) {
        r.assign(n, 0);
        r[head] = 1;
        for (int t = 0; t < tail; ++t) r[head + 1 + t] = digits[t];
        for (std::size_t t = 0; t < reduced.size(); ++t) {
          const std::int64_t c = r[lead[t]];
          if (c == 0) continue;
          for (int j = 0; j < n; ++j)
            r[j] = ((r[j] - c * reduced[t][j]) % p + p) % p;
        }
        bool zero = true;
        for (int j = 0; j < n && zero; ++j) zero = r[j] == 0;
        if (!zero) {
          std::vector<std::int64_t> point(n, 0);
          point[head] = 1;
          for (int t = 0; t < tail; ++t) point[head + 1 + t] = digits[t];
          if (table.left_operator_nilpotent(point, scratch_a, scratch_b)) {
            int pivot = 0;
            while (r[pivot] == 0) ++pivot;
            const std::int64_t inv = mod_inverse(r[pivot], p);
            for (int j = 0; j < n; ++j) r[j] = r[j] * inv % p;
            reduced.push_back(r);
            lead.push_back(pivot);
          }
        }
        int pos = tail;
        while (pos > 0 && digits[pos - 1] == p - 1) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
      }
    }
    std::vector<Vec> rows;
    rows.reserve(reduced.size());
    for (const auto& row : reduced) rows.push_back(residues_to_vec(a.spec(), row));
    result = Subspace::span(a.spec(), n, rows);
  }
  verify_assoc_radical(a, result);
  return result;
}

namespace {

bool subspace_is_nilpotent_subalgebra(const AlgebraDef& a, const Subspace& s) {
  return lower_central_series(a, s).terminated;
}

}  // namespace

Subspace nil_radical_by_enumeration(const AlgebraDef& a,
                                    const EnumCaps& caps) {
  if (!a.spec().is_prime_field())
    throw UnsupportedFieldError("ideal-lattice enumeration needs GF(p)");
  Subspace sum = a.zero_space();
  for (const Subspace& s : enumerate_subspaces(a.dim(), a.spec(),
                                               std::nullopt, caps)) {
    if (!is_ideal(a, s)) continue;
    if (subspace_is_nilpotent_subalgebra(a, s)) sum = subspace_sum(sum, s);
  }
  return sum;
}

Subspace nil_radical(const AlgebraDef& a, const EnumCaps& caps) {
  const SeriesRecord lie = lower_central_series(
      a, a.full_space(), SeriesMode::Simplified, OpMask::BracketOnly);
  if (lie.terminated) {
    // Lie-nilpotent case: the associative radical is the nilpotent radical.
    const Subspace radical = nil_radical_assoc(a, caps);
    if (!is_ideal(a, radical))
      throw VerificationFailedError(
          "nilpotent radical candidate is not an ideal of the full "
          "structure");
    if (!subspace_is_nilpotent_subalgebra(a, radical))
      throw VerificationFailedError(
          "nilpotent radical candidate is not nilpotent");
    return radical;
  }
  if (a.spec().is_prime_field()) return nil_radical_by_enumeration(a, caps);
  throw UnsupportedError(
      "nilpotent radical over Q needs a Lie-nilpotent algebra");
}

bool is_idempotent(const AlgebraDef& a, const Vec& e) {
  if (e.size() != a.dim())
    throw DimensionMismatchError("vector length does not match algebra");
  return equal(a.product(e, e), e);
}

std::vector<IdempotentInfo> idempotent_scan(const AlgebraDef& a,
                                            const EnumCaps& caps) {
  if (!a.spec().is_prime_field())
    throw UnsupportedFieldError(
        "idempotent scan needs GF(p); over Q supply a candidate to "
        "is_idempotent instead");
  const int n = a.dim();
  check_scan_cap(n, a.spec().modulus(), caps, "idempotent scan");
  const detail::FpTable table(a, ProductKind::Dot);
  std::vector<std::vector<std::int64_t>> hits;
  std::vector<std::int64_t> square;
  for_each_residue_vector(n, table.p, [&](const std::vector<std::int64_t>& v) {
    bool zero = true;
    for (int i = 0; i < n && zero; ++i) zero = v[i] == 0;
    if (zero) return;
    table.multiply(v, v, square);
    if (square == v) hits.push_back(v);
  });
  std::vector<IdempotentInfo> out;
  out.reserve(hits.size());
  std::vector<std::int64_t> product;
  for (const auto& e : hits) {
    bool principal = true;
    for (const auto& u : hits) {
      table.multiply(u, e, product);
      bool orthogonal = true;
      for (int i = 0; i < n && orthogonal; ++i) orthogonal = product[i] == 0;
      if (orthogonal) {
        principal = false;
        break;
      }
    }
    out.push_back({residues_to_vec(a.spec(), e), principal});
  }
  return out;
}

IdempotentIdentities idempotent_identities(const AlgebraDef& a, const Vec& e) {
  if (!is_idempotent(a, e))
    throw NotIdempotentError("e.e != e for " + to_string(e));
  const int n = a.dim();
  IdempotentIdentities out{true, true, true};

  for (int i = 0; i < n && out.peirce_lie; ++i) {
    const Vec ei = unit_vector(a.spec(), n, i);
    const Vec e_ei = a.product(e, ei);
    for (int j = i + 1; j < n; ++j) {
      const Vec ej = unit_vector(a.spec(), n, j);
      const Vec lhs = a.product(e, a.bracket_basis(i, j));
      const Vec rhs = a.bracket(e_ei, a.product(e, ej));
      if (!equal(lhs, rhs)) {
        out.peirce_lie = false;
        break;
      }
    }
  }

  const Mat pe = a.left_mul_operator(e);
  const Mat qe = a.ad_operator(e);
  out.operator_identity =
      equal(Mat(pe * qe), qe) && equal(Mat(qe * pe), qe);

  for (int i = 0; i < n && out.hom_lie; ++i)
    for (int j = i + 1; j < n && out.hom_lie; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Vec pi = a.product(e, unit_vector(a.spec(), n, i));
        const Vec pj = a.product(e, unit_vector(a.spec(), n, j));
        const Vec pk = a.product(e, unit_vector(a.spec(), n, k));
        Vec sum = a.bracket(pi, a.bracket_basis(j, k));
        sum = sum + a.bracket(pj, a.bracket_basis(k, i));
        sum = sum + a.bracket(pk, a.bracket_basis(i, j));
        if (!is_zero(sum)) {
          out.hom_lie = false;
          break;
        }
      }
  return out;
}

IdempotentSplit idempotent_split(const AlgebraDef& a, const Vec& e) {
  if (is_zero(e) || !is_idempotent(a, e))
    throw NotIdempotentError("expected a nonzero idempotent, got " +
                             to_string(e));
  const int n = a.dim();
  const Subspace part_e = Subspace::span(a.spec(), n, {e});
  const Mat complement_op =
      Mat(identity_matrix(a.spec(), n) - a.left_mul_operator(e));
  const Subspace part_rest = image(complement_op, a.spec());

  if (!is_subalgebra(a, part_e) || !is_subalgebra(a, part_rest))
    throw VerificationFailedError(
        "idempotent split parts failed the subalgebra check");
  if (!space_product_both(a, part_e, part_rest).is_zero_space())
    throw VerificationFailedError(
        "idempotent split has nonzero cross products");

  IdempotentSplit out{part_e, part_rest, subspace_sum(part_e, part_rest),
                      subspace_intersect(part_e, part_rest).is_zero_space(),
                      false};
  out.spans_whole = out.sum.is_full_space();
  return out;
}

}  // namespace tpa
