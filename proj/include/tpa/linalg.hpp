#ifndef TPA_LINALG_HPP
#define TPA_LINALG_HPP

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tpa/field.hpp"

namespace Eigen {

template <>
struct NumTraits<tpa::Scalar> {
  using Real = tpa::Scalar;
  using NonInteger = tpa::Scalar;
  using Literal = tpa::Scalar;
  using Nested = tpa::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static inline Real epsilon() { return tpa::Scalar(0); }
  static inline Real dummy_precision() { return tpa::Scalar(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace tpa {

using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Small builders used throughout tests and fixtures.
Vec vec_of(const FieldSpec& spec, const std::vector<long long>& entries);
Mat mat_of(const FieldSpec& spec,
           const std::vector<std::vector<long long>>& rows);
Vec unit_vector(const FieldSpec& spec, int ambient, int index);
Mat zero_matrix(const FieldSpec& spec, int rows, int cols);
Mat identity_matrix(const FieldSpec& spec, int n);

bool is_zero(const Mat& m);
bool is_zero(const Vec& v);
bool equal(const Mat& a, const Mat& b);
bool equal(const Vec& a, const Vec& b);
std::string to_string(const Vec& v);
std::string to_string(const Mat& m);

struct RrefResult {
  Mat matrix;               // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // strictly increasing pivot column indices
  int rank = 0;
};

// Gauss-Jordan elimination with exact arithmetic; the result is the unique
// RREF of the row space of m.
RrefResult rref(const Mat& m);

// A subspace of the coordinate space, held as a canonical RREF basis with no
// zero rows. Canonicity makes set equality entry-wise equality, which the
// lattice computations lean on heavily.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& spec, int ambient);
  static Subspace full(const FieldSpec& spec, int ambient);
  static Subspace span(const FieldSpec& spec, int ambient,
                       const std::vector<Vec>& vectors);
  static Subspace row_span(const FieldSpec& spec, int ambient,
                           const Mat& rows);

  const FieldSpec& spec() const { return spec_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Vec basis_vector(int i) const;  // i-th basis row as a column vector

  bool is_zero_space() const { return dim() == 0; }
  bool is_full_space() const { return dim() == ambient_; }

  // Residual of x after elimination against the basis; zero iff x lies in
  // the subspace.
  Vec reduce(Vec x) const;
  bool contains(const Vec& x) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

  // Deterministic order: dimension, then row-major entry comparison.
  static bool canonical_less(const Subspace& a, const Subspace& b);

  std::string to_string() const;

 private:
  Subspace(FieldSpec spec, int ambient, Mat basis, std::vector<int> pivots)
      : spec_(spec),
        ambient_(ambient),
        basis_(std::move(basis)),
        pivots_(std::move(pivots)) {}

  FieldSpec spec_;
  int ambient_;
  Mat basis_;
  std::vector<int> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool subspace_contains(const Subspace& u, const Vec& x);

// Span of the standard coordinate vectors at u's non-pivot columns; always a
// complement of u in the ambient space.
Subspace coordinate_complement(const Subspace& u);

// The linear map x -> x reduced against u's basis, as an ambient x ambient
// matrix. Its kernel is exactly u.
Mat reduction_matrix(const Subspace& u);

// Right null space {x : m x = 0} of an r x c matrix, as a subspace of the
// c-dimensional coordinate space.
Subspace kernel(const Mat& m, const FieldSpec& spec);

// Column span of m as a subspace of the row-count-dimensional space.
Subspace image(const Mat& m, const FieldSpec& spec);

// True iff the square matrix is nilpotent, decided by the single power
// m^K = 0 with K the least power of two >= n (Cayley-Hamilton bound).
bool matrix_nilpotent(const Mat& m);

// Exact inverse by Gauss-Jordan on [m | I]; DivisionByZero when singular.
Mat matrix_inverse(const Mat& m);

// Enumeration limits. All three are configuration values; exceeding one is
// a CapExceeded error, never a silently truncated answer.
struct EnumCaps {
  int max_dim = 5;                     // ambient dimension for subspace walks
  long long max_vectors = 100000;      // p^n bound for exhaustive vector scans
  long long max_subspaces = 100000;    // total subspaces yielded
};

// Number of k-dimensional subspaces of GF(p)^n (Gaussian binomial).
BigInt gaussian_binomial(int n, int k, long long p);

// Every subspace of GF(p)^n exactly once, dimension ascending and
// lexicographic on the RREF basis within a dimension; optionally restricted
// to the given dimensions.
std::vector<Subspace> enumerate_subspaces(
    int ambient, const FieldSpec& spec,
    const std::optional<std::vector<int>>& dims = std::nullopt,
    const EnumCaps& caps = EnumCaps{});

// Visits all p^n vectors of GF(p)^n in counting order (first coordinate most
// significant); stops early if fn returns false.
void for_each_vector(int ambient, const FieldSpec& spec, const EnumCaps& caps,
                     const std::function<bool(const Vec&)>& fn);

// Visits one representative per projective point (first nonzero coordinate
// normalized to 1) in lexicographic order.
void for_each_projective_point(int ambient, const FieldSpec& spec,
                               const EnumCaps& caps,
                               const std::function<bool(const Vec&)>& fn);

}  // namespace tpa

#endif  // TPA_LINALG_HPP
