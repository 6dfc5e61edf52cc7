#ifndef TPA_ALGEBRA_HPP
#define TPA_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "tpa/linalg.hpp"

namespace tpa {

enum class ProductKind { Dot, Bracket };

// A finite-dimensional transposed Poisson algebra candidate given by
// structure constants: a symmetric table for the commutative product
// e_i . e_j = sum_k c[i][j][k] e_k and an antisymmetric table for the
// bracket [e_i, e_j] = sum_k b[i][j][k] e_k. Symmetry and antisymmetry are
// enforced at construction; associativity, Jacobi and the compatibility law
// are properties checked by validate_axioms, not structural invariants.
class AlgebraDef {
 public:
  class Builder {
   public:
    Builder(const FieldSpec& spec, int dim);
    Builder& set_names(std::vector<std::string> names);
    // Writes c[i][j][k] and c[j][i][k].
    Builder& product(int i, int j, int k, const Scalar& c);
    Builder& product(int i, int j, int k, long long c);
    // Writes b[i][j][k] and -b[j][i][k]; i == j with nonzero c is rejected.
    Builder& bracket(int i, int j, int k, const Scalar& c);
    Builder& bracket(int i, int j, int k, long long c);
    AlgebraDef build();

   private:
    FieldSpec spec_;
    int dim_;
    std::vector<std::string> names_;
    std::vector<Scalar> product_, bracket_;
    int index(int i, int j, int k) const;
  };

  const FieldSpec& spec() const { return spec_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }

  const Scalar& product_entry(int i, int j, int k) const {
    return product_[index(i, j, k)];
  }
  const Scalar& bracket_entry(int i, int j, int k) const {
    return bracket_[index(i, j, k)];
  }
  const Scalar& entry(ProductKind kind, int i, int j, int k) const {
    return kind == ProductKind::Dot ? product_entry(i, j, k)
                                    : bracket_entry(i, j, k);
  }

  Vec product_basis(int i, int j) const;  // e_i . e_j
  Vec bracket_basis(int i, int j) const;  // [e_i, e_j]
  Vec apply(ProductKind kind, const Vec& x, const Vec& y) const;
  Vec product(const Vec& x, const Vec& y) const {
    return apply(ProductKind::Dot, x, y);
  }
  Vec bracket(const Vec& x, const Vec& y) const {
    return apply(ProductKind::Bracket, x, y);
  }

  Mat left_mul_operator(const Vec& x) const;  // y -> x . y
  Mat ad_operator(const Vec& x) const;        // y -> [x, y]

  Subspace full_space() const { return Subspace::full(spec_, dim_); }
  Subspace zero_space() const { return Subspace::zero(spec_, dim_); }
  Vec zero_vector() const;

  bool product_table_is_zero() const;
  bool bracket_table_is_zero() const;

 private:
  AlgebraDef(FieldSpec spec, int dim, std::vector<std::string> names,
             std::vector<Scalar> product, std::vector<Scalar> bracket);
  int index(int i, int j, int k) const { return (i * dim_ + j) * dim_ + k; }
  void rebuild_sparse();

  FieldSpec spec_;
  int dim_;
  std::vector<std::string> names_;
  std::vector<Scalar> product_, bracket_;  // dense n^3 tables

  // Nonzero (i, j) pairs with their term lists; derived acceleration for
  // bilinear evaluation, kept in sync with the dense tables.
  struct Term {
    int k;
    Scalar coeff;
  };
  struct PairTerms {
    int i, j;
    std::vector<Term> terms;
  };
  std::vector<PairTerms> product_pairs_, bracket_pairs_;
};

struct OperatorPair {
  Mat left_mul;  // P_x
  Mat ad;        // Q_x
};
OperatorPair operator_of(const AlgebraDef& a, const Vec& x);

enum class Axiom {
  Commutativity,
  Associativity,
  Antisymmetry,
  Jacobi,
  TransposedLeibniz
};
std::string axiom_name(Axiom axiom);

struct AxiomViolation {
  Axiom axiom;
  // Witness basis indices. For TransposedLeibniz the triple reads (z, x, y)
  // in 2 z.[x,y] = [z.x, y] + [x, z.y]; for pair axioms k is -1.
  int i, j, k;
  Vec lhs, rhs;
  std::string describe(const AlgebraDef& a) const;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every defining identity on all basis tuples (sound by
// multilinearity) and reports each failure with a witness; never throws.
ValidationReport validate_axioms(const AlgebraDef& a);
void require_valid(const AlgebraDef& a);  // InvalidAlgebra on violations

// Span of all pairwise products (or brackets) of basis vectors of u and v.
Subspace space_product(const AlgebraDef& a, const Subspace& u,
                       const Subspace& v, ProductKind kind);
// u.v + [u, v]
Subspace space_product_both(const AlgebraDef& a, const Subspace& u,
                            const Subspace& v);

// Witness that a subspace fails to be a subalgebra/ideal: the offending
// product value and where it came from.
struct ClosureDefect {
  ProductKind kind;
  Vec left, right, value;  // value = left op right, not inside the subspace
};
std::optional<ClosureDefect> subalgebra_defect(const AlgebraDef& a,
                                               const Subspace& s);
std::optional<ClosureDefect> ideal_defect(const AlgebraDef& a,
                                          const Subspace& s);
bool is_subalgebra(const AlgebraDef& a, const Subspace& s);
bool is_ideal(const AlgebraDef& a, const Subspace& s);
// Z . Z + [Z, Z] = 0
bool is_abelian_subspace(const AlgebraDef& a, const Subspace& s);

// Tensor product algebra on basis e_i (x) f_j with
//   (x1 (x) x2) . (y1 (x) y2) = x1.y1 (x) x2.y2
//   [x1 (x) x2, y1 (x) y2]   = [x1,y1] (x) x2.y2 + x1.y1 (x) [x2,y2]
AlgebraDef tensor_product(const AlgebraDef& a, const AlgebraDef& b);

// Commutative algebra plus derivation: bracket [x,y] = x.d(y) - d(x).y.
// NotADerivation (with the witness pair) when d fails the Leibniz rule.
AlgebraDef from_derivation(const AlgebraDef& comm, const Mat& d);

struct QuotientResult {
  AlgebraDef algebra;
  Mat projection;  // new_dim x old_dim, old coordinates -> quotient
  Mat section;     // old_dim x new_dim, right inverse of projection
};
QuotientResult quotient_by_ideal(const AlgebraDef& a, const Subspace& ideal);

AlgebraDef direct_sum(const AlgebraDef& a, const AlgebraDef& b);

// Induced algebra on a subalgebra, in coordinates of its canonical basis.
AlgebraDef restrict_to(const AlgebraDef& a, const Subspace& s);

// The fixture catalog. Tables are integral, so one definition serves every
// supported field.
AlgebraDef catalog(const std::string& name, const FieldSpec& spec);
std::vector<std::string> catalog_names();
std::string catalog_summary(const std::string& name);

}  // namespace tpa

#endif  // TPA_ALGEBRA_HPP
