#include "tpa/algebra.hpp"

#include <sstream>

#include "fp_kernel.hpp"

namespace tpa {

int AlgebraDef::Builder::index(int i, int j, int k) const {
  return (i * dim_ + j) * dim_ + k;
}

AlgebraDef::Builder::Builder(const FieldSpec& spec, int dim)
    : spec_(spec), dim_(dim) {
  if (dim < 0) throw DimensionMismatchError("negative dimension");
  const std::size_t cells = static_cast<std::size_t>(dim) * dim * dim;
  product_.assign(cells, Scalar::zero(spec));
  bracket_.assign(cells, Scalar::zero(spec));
  names_.reserve(dim);
  for (int i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
}

AlgebraDef::Builder& AlgebraDef::Builder::set_names(
    std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != dim_)
    throw DimensionMismatchError("expected " + std::to_string(dim_) +
                                 " basis names");
  names_ = std::move(names);
  return *this;
}

AlgebraDef::Builder& AlgebraDef::Builder::product(int i, int j, int k,
                                                  const Scalar& c) {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw DimensionMismatchError("structure constant index out of range");
  const Scalar v = c + Scalar::zero(spec_);  // attach to the field
  product_[index(i, j, k)] = v;
  product_[index(j, i, k)] = v;
  return *this;
}

AlgebraDef::Builder& AlgebraDef::Builder::product(int i, int j, int k,
                                                  long long c) {
  return product(i, j, k, Scalar::of(spec_, c));
}

AlgebraDef::Builder& AlgebraDef::Builder::bracket(int i, int j, int k,
                                                  const Scalar& c) {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw DimensionMismatchError("structure constant index out of range");
  const Scalar v = c + Scalar::zero(spec_);
  if (i == j) {
    if (!v.is_zero())
      throw InvalidAlgebraError("bracket [e, e] must be zero");
    return *this;
  }
  bracket_[index(i, j, k)] = v;
  bracket_[index(j, i, k)] = -v;
  return *this;
}

AlgebraDef::Builder& AlgebraDef::Builder::bracket(int i, int j, int k,
                                                  long long c) {
  return bracket(i, j, k, Scalar::of(spec_, c));
}

AlgebraDef AlgebraDef::Builder::build() {
  return AlgebraDef(spec_, dim_, names_, product_, bracket_);
}

AlgebraDef::AlgebraDef(FieldSpec spec, int dim, std::vector<std::string> names,
                       std::vector<Scalar> product, std::vector<Scalar> bracket)
    : spec_(spec),
      dim_(dim),
      names_(std::move(names)),
      product_(std::move(product)),
      bracket_(std::move(bracket)) {
  rebuild_sparse();
}

void AlgebraDef::rebuild_sparse() {
  auto collect = [&](const std::vector<Scalar>& table,
                     std::vector<PairTerms>& pairs) {
    pairs.clear();
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        std::vector<Term> terms;
        for (int k = 0; k < dim_; ++k) {
          const Scalar& c = table[index(i, j, k)];
          if (!c.is_zero()) terms.push_back({k, c});
        }
        if (!terms.empty()) pairs.push_back({i, j, std::move(terms)});
      }
  };
  collect(product_, product_pairs_);
  collect(bracket_, bracket_pairs_);
}

Vec AlgebraDef::zero_vector() const {
  Vec v(dim_);
  for (int i = 0; i < dim_; ++i) v(i) = Scalar::zero(spec_);
  return v;
}

Vec AlgebraDef::product_basis(int i, int j) const {
  Vec v = zero_vector();
  for (int k = 0; k < dim_; ++k) v(k) = product_entry(i, j, k);
  return v;
}

Vec AlgebraDef::bracket_basis(int i, int j) const {
  Vec v = zero_vector();
  for (int k = 0; k < dim_; ++k) v(k) = bracket_entry(i, j, k);
  return v;
}

Vec AlgebraDef::apply(ProductKind kind, const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionMismatchError(
        "vector length does not match algebra dimension " +
        std::to_string(dim_));
  const auto& pairs =
      kind == ProductKind::Dot ? product_pairs_ : bracket_pairs_;
  Vec out = zero_vector();
  for (const PairTerms& p : pairs) {
    if (x(p.i).is_zero() || y(p.j).is_zero()) continue;
    const Scalar c = x(p.i) * y(p.j);
    for (const Term& t : p.terms) out(t.k) = out(t.k) + c * t.coeff;
  }
  return out;
}

Mat AlgebraDef::left_mul_operator(const Vec& x) const {
  if (x.size() != dim_)
    throw DimensionMismatchError(
        "vector length does not match algebra dimension");
  Mat m = zero_matrix(spec_, dim_, dim_);
  for (const PairTerms& p : product_pairs_) {
    if (x(p.i).is_zero()) continue;
    for (const Term& t : p.terms) m(t.k, p.j) = m(t.k, p.j) + x(p.i) * t.coeff;
  }
  return m;
}

Mat AlgebraDef::ad_operator(const Vec& x) const {
  if (x.size() != dim_)
    throw DimensionMismatchError(
        "vector length does not match algebra dimension");
  Mat m = zero_matrix(spec_, dim_, dim_);
  for (const PairTerms& p : bracket_pairs_) {
    if (x(p.i).is_zero()) continue;
    for (const Term& t : p.terms) m(t.k, p.j) = m(t.k, p.j) + x(p.i) * t.coeff;
  }
  return m;
}

bool AlgebraDef::product_table_is_zero() const {
  return product_pairs_.empty();
}
bool AlgebraDef::bracket_table_is_zero() const {
  return bracket_pairs_.empty();
}

OperatorPair operator_of(const AlgebraDef& a, const Vec& x) {
  return OperatorPair{a.left_mul_operator(x), a.ad_operator(x)};
}

std::string axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Commutativity: return "commutativity";
    case Axiom::Associativity: return "associativity";
    case Axiom::Antisymmetry: return "antisymmetry";
    case Axiom::Jacobi: return "jacobi";
    case Axiom::TransposedLeibniz: return "transposed_leibniz";
  }
  return "?";
}

std::string AxiomViolation::describe(const AlgebraDef& a) const {
  std::ostringstream os;
  os << axiom_name(axiom) << " fails at (" << a.names()[i] << ", "
     << a.names()[j];
  if (k >= 0) os << ", " << a.names()[k];
  os << "): lhs = " << to_string(lhs) << ", rhs = " << to_string(rhs);
  return os.str();
}

ValidationReport validate_axioms(const AlgebraDef& a) {
  ValidationReport report;
  const int n = a.dim();
  if (a.spec().is_prime_field() && detail::axioms_hold_mod_p(a))
    return report;
  auto record = [&](Axiom axiom, int i, int j, int k, Vec lhs, Vec rhs) {
    report.violations.push_back(
        {axiom, i, j, k, std::move(lhs), std::move(rhs)});
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec pij = a.product_basis(i, j), pji = a.product_basis(j, i);
      if (!equal(pij, pji)) record(Axiom::Commutativity, i, j, -1, pij, pji);
      const Vec bij = a.bracket_basis(i, j);
      const Vec bji_neg = Vec(-a.bracket_basis(j, i));
      if (!equal(bij, bji_neg))
        record(Axiom::Antisymmetry, i, j, -1, bij, bji_neg);
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec ei = unit_vector(a.spec(), n, i);
      for (int k = 0; k < n; ++k) {
        const Vec ek = unit_vector(a.spec(), n, k);
        const Vec lhs = a.product(a.product_basis(i, j), ek);
        const Vec rhs = a.product(ei, a.product_basis(j, k));
        if (!equal(lhs, rhs)) record(Axiom::Associativity, i, j, k, lhs, rhs);
      }
    }

  // With antisymmetry in place, Jacobi and the compatibility law only need
  // the tuples left after factoring out their symmetries.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vec ei = unit_vector(a.spec(), n, i);
      const Vec ej = unit_vector(a.spec(), n, j);
      for (int k = j + 1; k < n; ++k) {
        const Vec ek = unit_vector(a.spec(), n, k);
        Vec sum = a.bracket(a.bracket_basis(i, j), ek);
        sum = sum + a.bracket(a.bracket_basis(j, k), ei);
        sum = sum + a.bracket(a.bracket_basis(k, i), ej);
        if (!is_zero(sum))
          record(Axiom::Jacobi, i, j, k, sum, a.zero_vector());
      }
    }

  const Scalar two = Scalar::of(a.spec(), 2);
  for (int z = 0; z < n; ++z) {
    const Vec ez = unit_vector(a.spec(), n, z);
    for (int x = 0; x < n; ++x) {
      const Vec ex = unit_vector(a.spec(), n, x);
      for (int y = x + 1; y < n; ++y) {
        const Vec ey = unit_vector(a.spec(), n, y);
        Vec lhs = a.product(ez, a.bracket_basis(x, y));
        for (int t = 0; t < n; ++t) lhs(t) = two * lhs(t);
        Vec rhs = a.bracket(a.product_basis(z, x), ey);
        rhs = rhs + a.bracket(ex, a.product_basis(z, y));
        if (!equal(lhs, rhs))
          record(Axiom::TransposedLeibniz, z, x, y, lhs, rhs);
      }
    }
  }
  return report;
}

void require_valid(const AlgebraDef& a) {
  const ValidationReport report = validate_axioms(a);
  if (!report.ok())
    throw InvalidAlgebraError(report.violations.front().describe(a));
}

Subspace space_product(const AlgebraDef& a, const Subspace& u,
                       const Subspace& v, ProductKind kind) {
  if (u.ambient() != a.dim() || v.ambient() != a.dim())
    throw DimensionMismatchError("subspace ambient does not match algebra");
  std::vector<Vec> gens;
  gens.reserve(u.dim() * v.dim());
  for (int i = 0; i < u.dim(); ++i) {
    const Vec x = u.basis_vector(i);
    for (int j = 0; j < v.dim(); ++j)
      gens.push_back(a.apply(kind, x, v.basis_vector(j)));
  }
  return Subspace::span(a.spec(), a.dim(), gens);
}

Subspace space_product_both(const AlgebraDef& a, const Subspace& u,
                            const Subspace& v) {
  return subspace_sum(space_product(a, u, v, ProductKind::Dot),
                      space_product(a, u, v, ProductKind::Bracket));
}

namespace {

std::optional<ClosureDefect> closure_defect(const AlgebraDef& a,
                                            const Subspace& s,
                                            const Subspace& rhs_space,
                                            const Subspace& target) {
  for (int i = 0; i < s.dim(); ++i) {
    const Vec x = s.basis_vector(i);
    for (int j = 0; j < rhs_space.dim(); ++j) {
      const Vec y = rhs_space.basis_vector(j);
      for (ProductKind kind : {ProductKind::Dot, ProductKind::Bracket}) {
        Vec value = a.apply(kind, x, y);
        if (!target.contains(value))
          return ClosureDefect{kind, x, y, std::move(value)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ClosureDefect> subalgebra_defect(const AlgebraDef& a,
                                               const Subspace& s) {
  return closure_defect(a, s, s, s);
}

std::optional<ClosureDefect> ideal_defect(const AlgebraDef& a,
                                          const Subspace& s) {
  return closure_defect(a, s, a.full_space(), s);
}

namespace {

// Residue path for the closure predicates; the enumeration sweeps call
// these on thousands of subspaces.
bool closed_mod_p(const AlgebraDef& a, const Subspace& s, bool against_all) {
  const int n = a.dim();
  const std::int64_t p = a.spec().modulus();
  const detail::FpTable dot(a, ProductKind::Dot);
  const detail::FpTable br(a, ProductKind::Bracket);
  std::vector<std::vector<std::int64_t>> rows(s.dim(),
                                              std::vector<std::int64_t>(n));
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = s.basis()(i, j).residue();
  auto reduces_to_zero = [&](std::vector<std::int64_t>& v) {
    for (int t = 0; t < s.dim(); ++t) {
      const std::int64_t c = v[s.pivots()[t]];
      if (c == 0) continue;
      for (int j = 0; j < n; ++j)
        v[j] = ((v[j] - c * rows[t][j]) % p + p) % p;
    }
    for (int j = 0; j < n; ++j)
      if (v[j] != 0) return false;
    return true;
  };
  std::vector<std::int64_t> value(n);
  for (int i = 0; i < s.dim(); ++i) {
    if (against_all) {
      for (int j = 0; j < n; ++j) {
        for (const detail::FpTable* table : {&dot, &br}) {
          value.assign(n, 0);
          for (int t = 0; t < n; ++t)
            if (rows[i][t] != 0)
              table->accumulate_basis(t, j, rows[i][t], value);
          if (!reduces_to_zero(value)) return false;
        }
      }
    } else {
      for (int j = 0; j < s.dim(); ++j) {
        for (const detail::FpTable* table : {&dot, &br}) {
          table->multiply(rows[i], rows[j], value);
          if (!reduces_to_zero(value)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_subalgebra(const AlgebraDef& a, const Subspace& s) {
  if (a.spec().is_prime_field() && s.ambient() == a.dim())
    return closed_mod_p(a, s, false);
  return !subalgebra_defect(a, s).has_value();
}

bool is_ideal(const AlgebraDef& a, const Subspace& s) {
  if (a.spec().is_prime_field() && s.ambient() == a.dim())
    return closed_mod_p(a, s, true);
  return !ideal_defect(a, s).has_value();
}

bool is_abelian_subspace(const AlgebraDef& a, const Subspace& s) {
  return space_product_both(a, s, s).is_zero_space();
}

AlgebraDef tensor_product(const AlgebraDef& a, const AlgebraDef& b) {
  if (a.spec() != b.spec())
    throw FieldMismatchError("tensor product over different fields");
  const int na = a.dim(), nb = b.dim(), n = na * nb;
  AlgebraDef::Builder builder(a.spec(), n);
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < na; ++i)
    for (int p = 0; p < nb; ++p)
      names.push_back(a.names()[i] + "(x)" + b.names()[p]);
  builder.set_names(std::move(names));
  auto idx = [nb](int i, int p) { return i * nb + p; };
  // row determines (i, p) uniquely, so each unordered pair is written once.
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int p = 0; p < nb; ++p)
        for (int q = 0; q < nb; ++q) {
          const int row = idx(i, p), col = idx(j, q);
          if (row > col) continue;
          for (int k = 0; k < na; ++k)
            for (int r = 0; r < nb; ++r) {
              const Scalar dot =
                  a.product_entry(i, j, k) * b.product_entry(p, q, r);
              if (!dot.is_zero()) builder.product(row, col, idx(k, r), dot);
              if (row < col) {
                const Scalar br =
                    a.bracket_entry(i, j, k) * b.product_entry(p, q, r) +
                    a.product_entry(i, j, k) * b.bracket_entry(p, q, r);
                if (!br.is_zero()) builder.bracket(row, col, idx(k, r), br);
              }
            }
        }
  return builder.build();
}

AlgebraDef from_derivation(const AlgebraDef& comm, const Mat& d) {
  if (!comm.bracket_table_is_zero())
    throw InvalidAlgebraError(
        "derivation construction expects a zero bracket table");
  if (d.rows() != comm.dim() || d.cols() != comm.dim())
    throw DimensionMismatchError("derivation matrix must be dim x dim");
  const int n = comm.dim();

  for (int i = 0; i < n; ++i) {
    const Vec ei = unit_vector(comm.spec(), n, i);
    const Vec dei = Vec(d * ei);
    for (int j = i; j < n; ++j) {
      const Vec ej = unit_vector(comm.spec(), n, j);
      const Vec lhs = Vec(d * comm.product_basis(i, j));
      const Vec rhs = comm.product(dei, ej) + comm.product(ei, Vec(d * ej));
      if (!equal(lhs, rhs))
        throw NotADerivationError(
            "Leibniz rule fails on (" + comm.names()[i] + ", " +
            comm.names()[j] + "): d(x.y) = " + to_string(lhs) +
            " but d(x).y + x.d(y) = " + to_string(rhs));
    }
  }

  AlgebraDef::Builder builder(comm.spec(), n);
  builder.set_names(comm.names());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        builder.product(i, j, k, comm.product_entry(i, j, k));
  for (int i = 0; i < n; ++i) {
    const Vec ei = unit_vector(comm.spec(), n, i);
    for (int j = i + 1; j < n; ++j) {
      const Vec ej = unit_vector(comm.spec(), n, j);
      const Vec br =
          comm.product(ei, Vec(d * ej)) - comm.product(Vec(d * ei), ej);
      for (int k = 0; k < n; ++k)
        if (!br(k).is_zero()) builder.bracket(i, j, k, br(k));
    }
  }
  return builder.build();
}

QuotientResult quotient_by_ideal(const AlgebraDef& a, const Subspace& ideal) {
  if (ideal.ambient() != a.dim())
    throw DimensionMismatchError("ideal ambient does not match algebra");
  if (auto defect = ideal_defect(a, ideal))
    throw NotAnIdealError(
        "subspace is not an ideal: " + to_string(defect->left) +
        (defect->kind == ProductKind::Dot ? " . " : " bracket ") +
        to_string(defect->right) + " = " + to_string(defect->value) +
        " escapes");

  const int n = a.dim();
  const Subspace comp = coordinate_complement(ideal);
  const int m = comp.dim();
  const Mat reduce = reduction_matrix(ideal);

  // Project: reduce mod the ideal, then read off the non-pivot coordinates.
  Mat projection = zero_matrix(a.spec(), m, n);
  for (int r = 0; r < m; ++r) {
    const int col = comp.pivots()[r];
    for (int j = 0; j < n; ++j) projection(r, j) = reduce(col, j);
  }
  Mat section = zero_matrix(a.spec(), n, m);
  for (int r = 0; r < m; ++r)
    section(comp.pivots()[r], r) = Scalar::one(a.spec());

  AlgebraDef::Builder builder(a.spec(), m);
  std::vector<std::string> names;
  for (int r = 0; r < m; ++r) names.push_back(a.names()[comp.pivots()[r]]);
  builder.set_names(std::move(names));
  for (int r = 0; r < m; ++r) {
    const Vec x = comp.basis_vector(r);
    for (int s = r; s < m; ++s) {
      const Vec y = comp.basis_vector(s);
      const Vec dot = Vec(projection * a.product(x, y));
      for (int k = 0; k < m; ++k)
        if (!dot(k).is_zero()) builder.product(r, s, k, dot(k));
      if (s > r) {
        const Vec br = Vec(projection * a.bracket(x, y));
        for (int k = 0; k < m; ++k)
          if (!br(k).is_zero()) builder.bracket(r, s, k, br(k));
      }
    }
  }
  return QuotientResult{builder.build(), std::move(projection),
                        std::move(section)};
}

AlgebraDef direct_sum(const AlgebraDef& a, const AlgebraDef& b) {
  if (a.spec() != b.spec())
    throw FieldMismatchError("direct sum over different fields");
  const int na = a.dim(), n = na + b.dim();
  AlgebraDef::Builder builder(a.spec(), n);
  std::vector<std::string> names = a.names();
  for (const std::string& s : b.names()) names.push_back(s);
  builder.set_names(std::move(names));
  for (int i = 0; i < na; ++i)
    for (int j = i; j < na; ++j)
      for (int k = 0; k < na; ++k) {
        builder.product(i, j, k, a.product_entry(i, j, k));
        if (j > i) builder.bracket(i, j, k, a.bracket_entry(i, j, k));
      }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i; j < b.dim(); ++j)
      for (int k = 0; k < b.dim(); ++k) {
        builder.product(na + i, na + j, na + k, b.product_entry(i, j, k));
        if (j > i)
          builder.bracket(na + i, na + j, na + k, b.bracket_entry(i, j, k));
      }
  return builder.build();
}

AlgebraDef restrict_to(const AlgebraDef& a, const Subspace& s) {
  if (s.ambient() != a.dim())
    throw DimensionMismatchError("subspace ambient does not match algebra");
  if (auto defect = subalgebra_defect(a, s))
    throw NotASubalgebraError(
        "subspace is not closed: " + to_string(defect->left) +
        (defect->kind == ProductKind::Dot ? " . " : " bracket ") +
        to_string(defect->right) + " = " + to_string(defect->value) +
        " escapes");
  const int m = s.dim();
  AlgebraDef::Builder builder(a.spec(), m);
  // s carries an RREF basis, so coordinates inside s sit at the pivots.
  for (int i = 0; i < m; ++i) {
    const Vec x = s.basis_vector(i);
    for (int j = i; j < m; ++j) {
      const Vec y = s.basis_vector(j);
      const Vec dot = a.product(x, y);
      for (int k = 0; k < m; ++k) {
        const Scalar& c = dot(s.pivots()[k]);
        if (!c.is_zero()) builder.product(i, j, k, c);
      }
      if (j > i) {
        const Vec br = a.bracket(x, y);
        for (int k = 0; k < m; ++k) {
          const Scalar& c = br(s.pivots()[k]);
          if (!c.is_zero()) builder.bracket(i, j, k, c);
        }
      }
    }
  }
  return builder.build();
}

AlgebraDef catalog(const std::string& name, const FieldSpec& spec) {
  if (name == "EX_A") {
    AlgebraDef::Builder b(spec, 2);
    b.product(0, 0, 1, 1);
    b.bracket(0, 1, 1, 1);
    return b.build();
  }
  if (name == "EX_B") {
    AlgebraDef::Builder b(spec, 3);
    b.product(1, 1, 2, 1);
    b.bracket(0, 1, 2, 1);
    return b.build();
  }
  if (name == "EX_C") {
    AlgebraDef::Builder b(spec, 2);
    b.product(0, 0, 0, 1);
    return b.build();
  }
  if (name == "EX_D") {
    AlgebraDef::Builder b(spec, 3);
    b.product(0, 1, 0, 1);
    b.product(1, 1, 1, 1);
    b.product(1, 2, 2, 1);
    b.bracket(0, 1, 2, 1);
    return b.build();
  }
  if (name == "EX_E") {
    AlgebraDef::Builder b(spec, 3);
    b.product(2, 2, 0, 1);
    b.bracket(0, 2, 0, 1);
    b.bracket(0, 2, 1, 1);
    b.bracket(1, 2, 1, 1);
    return b.build();
  }
  throw UnknownNameError("no catalog algebra named '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"EX_A", "EX_B", "EX_C", "EX_D", "EX_E"};
}

namespace detail {

bool axioms_hold_mod_p(const AlgebraDef& a) {
  const int n = a.dim();
  const std::int64_t p = a.spec().modulus();
  const FpTable dot(a, ProductKind::Dot);
  const FpTable br(a, ProductKind::Bracket);

  // commutativity / antisymmetry (structurally enforced, re-checked cheap)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (dot.at(i, j, k) != dot.at(j, i, k)) return false;
        if ((br.at(i, j, k) + br.at(j, i, k)) % p != 0) return false;
      }

  std::vector<std::int64_t> left(n), right(n), acc(n);
  auto multiply_basis_into =
      [&](const FpTable& table, const std::vector<std::int64_t>& x, int basis,
          std::vector<std::int64_t>& out) {
        out.assign(n, 0);
        for (int i = 0; i < n; ++i) {
          if (x[i] == 0) continue;
          table.accumulate_basis(i, basis, x[i], out);
        }
      };

  std::vector<std::int64_t> tmp(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int t = 0; t < n; ++t) tmp[t] = dot.at(i, j, t);
      for (int k = 0; k < n; ++k) {
        // (e_i e_j) e_k vs e_i (e_j e_k)
        multiply_basis_into(dot, tmp, k, left);
        right.assign(n, 0);
        for (int t = 0; t < n; ++t) {
          const std::int64_t c = dot.at(j, k, t);
          if (c != 0) dot.accumulate_basis(i, t, c, right);
        }
        if (left != right) return false;
      }
    }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        acc.assign(n, 0);
        for (int t = 0; t < n; ++t) {
          const std::int64_t cij = br.at(i, j, t);
          if (cij != 0) br.accumulate_basis(t, k, cij, acc);
          const std::int64_t cjk = br.at(j, k, t);
          if (cjk != 0) br.accumulate_basis(t, i, cjk, acc);
          const std::int64_t cki = br.at(k, i, t);
          if (cki != 0) br.accumulate_basis(t, j, cki, acc);
        }
        for (int t = 0; t < n; ++t)
          if (acc[t] != 0) return false;
      }

  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        // 2 z.[x,y] = [z.x, y] + [x, z.y]
        left.assign(n, 0);
        for (int t = 0; t < n; ++t) {
          const std::int64_t c = br.at(x, y, t);
          if (c != 0) dot.accumulate_basis(z, t, 2 * c % p, left);
        }
        right.assign(n, 0);
        for (int t = 0; t < n; ++t) {
          const std::int64_t zx = dot.at(z, x, t);
          if (zx != 0) br.accumulate_basis(t, y, zx, right);
          const std::int64_t zy = dot.at(z, y, t);
          if (zy != 0) br.accumulate_basis(x, t, zy, right);
        }
        if (left != right) return false;
      }
  return true;
}

}  // namespace detail

std::string catalog_summary(const std::string& name) {
  if (name == "EX_A")
    return "dim 2: e1.e1 = e2, [e1,e2] = e2; solvable but not nilpotent";
  if (name == "EX_B")
    return "dim 3: e2.e2 = e3, [e1,e2] = e3; nilpotent of class 2";
  if (name == "EX_C")
    return "dim 2: e1.e1 = e1, zero bracket; idempotent e1 splits it";
  if (name == "EX_D")
    return "dim 3: e1.e2 = e1, e2.e2 = e2, e2.e3 = e3, [e1,e2] = e3; "
           "Lie-nilpotent, not nilpotent";
  if (name == "EX_E")
    return "dim 3: e3.e3 = e1, [e1,e3] = e1+e2, [e2,e3] = e2; its product "
           "span is not an ideal";
  throw UnknownNameError("no catalog algebra named '" + name + "'");
}

}  // namespace tpa
