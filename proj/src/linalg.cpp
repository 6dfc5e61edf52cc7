#include "tpa/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace tpa {

Vec vec_of(const FieldSpec& spec, const std::vector<long long>& entries) {
  Vec v(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = Scalar::of(spec, entries[i]);
  return v;
}

Mat mat_of(const FieldSpec& spec,
           const std::vector<std::vector<long long>>& rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r == 0 ? 0 : static_cast<Eigen::Index>(rows[0].size());
  Mat m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != c)
      throw DimensionMismatchError("ragged rows in matrix literal");
    for (Eigen::Index j = 0; j < c; ++j)
      m(i, j) = Scalar::of(spec, rows[i][j]);
  }
  return m;
}

Vec unit_vector(const FieldSpec& spec, int ambient, int index) {
  Vec v(ambient);
  for (int i = 0; i < ambient; ++i) v(i) = Scalar::zero(spec);
  v(index) = Scalar::one(spec);
  return v;
}

Mat zero_matrix(const FieldSpec& spec, int rows, int cols) {
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Scalar::zero(spec);
  return m;
}

Mat identity_matrix(const FieldSpec& spec, int n) {
  Mat m = zero_matrix(spec, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(spec);
  return m;
}

bool is_zero(const Mat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool is_zero(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

bool equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v(i);
  }
  os << ")";
  return os.str();
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
  }
  os << "]";
  return os.str();
}

namespace {

// Residue elimination for all-GF(p) matrices; same algorithm and canonical
// output as the generic path, minus the tagged-scalar overhead.
std::optional<RrefResult> rref_mod_p(const Mat& m, const FieldSpec& spec) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  const std::int64_t p = spec.modulus();
  std::vector<std::int64_t> w(rows * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const Scalar& s = m(i, j);
      if (s.attached()) {
        if (!s.spec().is_prime_field() || s.spec() != spec)
          return std::nullopt;
        w[i * cols + j] = s.residue();
      } else if (s.is_zero()) {
        w[i * cols + j] = 0;
      } else {
        return std::nullopt;
      }
    }
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (w[i * cols + c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j)
        std::swap(w[pivot * cols + j], w[r * cols + j]);
    const std::int64_t inv = mod_inverse(w[r * cols + c], p);
    for (int j = c; j < cols; ++j) w[r * cols + j] = w[r * cols + j] * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::int64_t factor = w[i * cols + c];
      if (factor == 0) continue;
      for (int j = c; j < cols; ++j)
        w[i * cols + j] =
            ((w[i * cols + j] - factor * w[r * cols + j]) % p + p) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  RrefResult out;
  out.rank = r;
  out.matrix = Mat(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j)
      out.matrix(i, j) = Scalar::of(spec, w[i * cols + j]);
  out.pivots = std::move(pivots);
  return out;
}

const FieldSpec* find_prime_spec(const Mat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j).attached())
        return m(i, j).spec().is_prime_field() ? &m(i, j).spec() : nullptr;
  return nullptr;
}

}  // namespace

RrefResult rref(const Mat& m) {
  if (const FieldSpec* spec = find_prime_spec(m)) {
    if (auto fast = rref_mod_p(m, *spec)) return std::move(*fast);
  }
  Mat w = m;
  const Eigen::Index rows = w.rows(), cols = w.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!w(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) w.row(pivot).swap(w.row(r));
    const Scalar inv = w(r, c).inverse();
    for (Eigen::Index j = c; j < cols; ++j) w(r, j) = w(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || w(i, c).is_zero()) continue;
      const Scalar factor = w(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        w(i, j) = w(i, j) - factor * w(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  RrefResult out;
  out.rank = static_cast<int>(r);
  out.matrix = w.topRows(r);
  out.pivots = std::move(pivots);
  return out;
}

Subspace Subspace::zero(const FieldSpec& spec, int ambient) {
  return Subspace(spec, ambient, Mat(0, ambient), {});
}

Subspace Subspace::full(const FieldSpec& spec, int ambient) {
  std::vector<int> pivots(ambient);
  for (int i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(spec, ambient, identity_matrix(spec, ambient),
                  std::move(pivots));
}

Subspace Subspace::row_span(const FieldSpec& spec, int ambient,
                            const Mat& rows) {
  if (rows.cols() != ambient && rows.rows() != 0)
    throw DimensionMismatchError("row length " + std::to_string(rows.cols()) +
                                 " does not match ambient dimension " +
                                 std::to_string(ambient));
  Mat padded = rows.rows() == 0 ? Mat(0, ambient) : rows;
  RrefResult r = rref(padded);
  return Subspace(spec, ambient, std::move(r.matrix), std::move(r.pivots));
}

Subspace Subspace::span(const FieldSpec& spec, int ambient,
                        const std::vector<Vec>& vectors) {
  Mat rows(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient)
      throw DimensionMismatchError("vector of length " +
                                   std::to_string(vectors[i].size()) +
                                   " in ambient dimension " +
                                   std::to_string(ambient));
    for (int j = 0; j < ambient; ++j)
      rows(static_cast<Eigen::Index>(i), j) = vectors[i](j);
  }
  return row_span(spec, ambient, rows);
}

Vec Subspace::basis_vector(int i) const {
  Vec v(ambient_);
  for (int j = 0; j < ambient_; ++j) v(j) = basis_(i, j);
  return v;
}

Vec Subspace::reduce(Vec x) const {
  if (x.size() != ambient_)
    throw DimensionMismatchError("vector length " + std::to_string(x.size()) +
                                 " vs ambient " + std::to_string(ambient_));
  for (int i = 0; i < dim(); ++i) {
    const Scalar c = x(pivots_[i]);
    if (c.is_zero()) continue;
    for (int j = 0; j < ambient_; ++j) x(j) = x(j) - c * basis_(i, j);
  }
  return x;
}

bool Subspace::contains(const Vec& x) const { return tpa::is_zero(reduce(x)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw DimensionMismatchError("subspaces of different ambient spaces");
  if (other.dim() > dim()) return false;
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.spec_ != b.spec_ || a.ambient_ != b.ambient_ || a.dim() != b.dim())
    return false;
  return equal(a.basis_, b.basis_);
}

bool Subspace::canonical_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (Eigen::Index i = 0; i < a.basis_.rows(); ++i)
    for (Eigen::Index j = 0; j < a.basis_.cols(); ++j) {
      const int c = Scalar::compare(a.basis_(i, j), b.basis_(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

std::string Subspace::to_string() const {
  if (dim() == 0) return "{0}";
  std::ostringstream os;
  os << "span{";
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ", ";
    os << tpa::to_string(basis_vector(i));
  }
  os << "}";
  return os.str();
}

namespace {

void check_compatible(const Subspace& u, const Subspace& v) {
  if (u.spec() != v.spec())
    throw FieldMismatchError("subspaces over " + u.spec().to_string() +
                             " and " + v.spec().to_string());
  if (u.ambient() != v.ambient())
    throw DimensionMismatchError("ambient " + std::to_string(u.ambient()) +
                                 " vs " + std::to_string(v.ambient()));
}

}  // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  check_compatible(u, v);
  Mat stacked(u.dim() + v.dim(), u.ambient());
  stacked.topRows(u.dim()) = u.basis();
  stacked.bottomRows(v.dim()) = v.basis();
  return Subspace::row_span(u.spec(), u.ambient(), stacked);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  check_compatible(u, v);
  const int n = u.ambient();
  // Zassenhaus: rows [u | u] and [v | 0]; rows of the RREF whose left half
  // vanishes carry an intersection basis in their right half.
  Mat block = zero_matrix(u.spec(), u.dim() + v.dim(), 2 * n);
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      block(i, j) = u.basis()(i, j);
      block(i, n + j) = u.basis()(i, j);
    }
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < n; ++j) block(u.dim() + i, j) = v.basis()(i, j);
  RrefResult r = rref(block);
  std::vector<Vec> inter;
  for (int i = 0; i < r.rank; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (!r.matrix(i, j).is_zero()) left_zero = false;
    if (!left_zero) continue;
    Vec w(n);
    for (int j = 0; j < n; ++j) w(j) = r.matrix(i, n + j);
    inter.push_back(std::move(w));
  }
  return Subspace::span(u.spec(), n, inter);
}

bool subspace_contains(const Subspace& u, const Vec& x) {
  return u.contains(x);
}

Subspace coordinate_complement(const Subspace& u) {
  std::vector<Vec> vectors;
  std::size_t next_pivot = 0;
  for (int j = 0; j < u.ambient(); ++j) {
    if (next_pivot < u.pivots().size() && u.pivots()[next_pivot] == j) {
      ++next_pivot;
      continue;
    }
    vectors.push_back(unit_vector(u.spec(), u.ambient(), j));
  }
  return Subspace::span(u.spec(), u.ambient(), vectors);
}

Mat reduction_matrix(const Subspace& u) {
  const int n = u.ambient();
  Mat r = identity_matrix(u.spec(), n);
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < n; ++j)
      r(j, u.pivots()[i]) = r(j, u.pivots()[i]) - u.basis()(i, j);
  return r;
}

Subspace kernel(const Mat& m, const FieldSpec& spec) {
  const int n = static_cast<int>(m.cols());
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x(n);
    for (int j = 0; j < n; ++j) x(j) = Scalar::zero(spec);
    x(f) = Scalar::one(spec);
    for (int i = 0; i < r.rank; ++i) x(r.pivots[i]) = -r.matrix(i, f);
    basis.push_back(std::move(x));
  }
  return Subspace::span(spec, n, basis);
}

Subspace image(const Mat& m, const FieldSpec& spec) {
  Mat rows(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows(j, i) = m(i, j);
  return Subspace::row_span(spec, static_cast<int>(m.rows()), rows);
}

namespace {

// Residue-arithmetic path for GF(p) matrices; the scans over all p^n
// vectors lean on this. Returns nullopt when an entry is not usable as a
// residue (an unattached nonzero literal), sending the caller to the
// generic path.
std::optional<bool> nilpotent_mod_p(const Mat& m, std::int64_t p) {
  const int n = static_cast<int>(m.rows());
  std::vector<std::int64_t> a(n * n), b(n * n);
  std::int64_t trace = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& s = m(i, j);
      if (s.attached())
        a[i * n + j] = s.residue();
      else if (s.is_zero())
        a[i * n + j] = 0;
      else
        return std::nullopt;
      if (i == j) trace = (trace + a[i * n + j]) % p;
    }
  if (trace != 0) return false;
  int covered = 1;
  while (true) {
    bool zero = true;
    for (int t = 0; t < n * n && zero; ++t) zero = a[t] == 0;
    if (zero) return true;
    if (covered >= n) return false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t acc = 0;
        for (int k = 0; k < n; ++k) acc += a[i * n + k] * a[k * n + j] % p;
        b[i * n + j] = acc % p;
      }
    std::swap(a, b);
    covered *= 2;
  }
}

}  // namespace

bool matrix_nilpotent(const Mat& m) {
  if (m.rows() != m.cols())
    throw NotSquareError("matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  const Eigen::Index n = m.rows();
  if (n == 0) return true;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (m(i, j).attached() && m(i, j).spec().is_prime_field()) {
        const auto fast = nilpotent_mod_p(m, m(i, j).spec().modulus());
        if (fast) return *fast;
        i = n;
        break;
      }
  // A nilpotent matrix has zero trace; cheap early rejection.
  Scalar trace = m(0, 0);
  for (Eigen::Index i = 1; i < n; ++i) trace += m(i, i);
  if (!trace.is_zero()) return false;
  Mat power = m;
  Eigen::Index covered = 1;
  while (true) {
    if (is_zero(power)) return true;
    if (covered >= n) return false;
    power = power * power;
    covered *= 2;
  }
}

Mat matrix_inverse(const Mat& m) {
  if (m.rows() != m.cols())
    throw NotSquareError("cannot invert a " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return m;
  const FieldSpec spec = m(0, 0).attached() ? m(0, 0).spec()
                                            : FieldSpec::rationals();
  Mat aug = zero_matrix(spec, n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(spec);
  }
  const RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1)
    throw DivisionByZeroError("matrix is singular");
  return r.matrix.block(0, n, n, n);
}

BigInt gaussian_binomial(int n, int k, long long p) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  const BigInt bp = p;
  for (int i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(bp, n - i) - 1;
    den *= boost::multiprecision::pow(bp, i + 1) - 1;
  }
  return num / den;
}

namespace {

void require_prime_field(const FieldSpec& spec, const char* what) {
  if (!spec.is_prime_field())
    throw UnsupportedFieldError(std::string(what) +
                                " requires a prime field, not Q");
}

long long checked_pow(long long p, int n, long long cap, const char* what) {
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= p;
    if (total > cap)
      throw CapExceededError(std::string(what) + ": p^n exceeds cap " +
                             std::to_string(cap));
  }
  return total;
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(
    int ambient, const FieldSpec& spec,
    const std::optional<std::vector<int>>& dims, const EnumCaps& caps) {
  require_prime_field(spec, "subspace enumeration");
  if (ambient > caps.max_dim)
    throw CapExceededError("subspace enumeration: ambient dimension " +
                           std::to_string(ambient) + " exceeds cap " +
                           std::to_string(caps.max_dim));
  const long long p = spec.modulus();
  checked_pow(p, ambient, caps.max_vectors, "subspace enumeration");

  std::vector<int> wanted;
  if (dims) {
    wanted = *dims;
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  } else {
    for (int k = 0; k <= ambient; ++k) wanted.push_back(k);
  }
  BigInt expected = 0;
  for (int k : wanted)
    if (k >= 0 && k <= ambient) expected += gaussian_binomial(ambient, k, p);
  if (expected > caps.max_subspaces)
    throw CapExceededError("subspace enumeration would yield " +
                           expected.str() + " subspaces, cap is " +
                           std::to_string(caps.max_subspaces));

  std::vector<Subspace> out;
  for (int k : wanted) {
    if (k < 0 || k > ambient) continue;
    std::vector<Subspace> layer;
    // Pivot columns run over k-subsets of the ambient coordinates; the free
    // entries of the RREF shape take every field value.
    std::vector<int> pivots(k);
    for (int i = 0; i < k; ++i) pivots[i] = i;
    bool more = k <= ambient;
    if (k == 0) {
      layer.push_back(Subspace::zero(spec, ambient));
      more = false;
    }
    while (more) {
      std::vector<bool> is_pivot(ambient, false);
      for (int c : pivots) is_pivot[c] = true;
      std::vector<std::pair<int, int>> free_cells;  // (row, col)
      for (int i = 0; i < k; ++i)
        for (int c = pivots[i] + 1; c < ambient; ++c)
          if (!is_pivot[c]) free_cells.emplace_back(i, c);

      std::vector<long long> digits(free_cells.size(), 0);
      while (true) {
        Mat basis = zero_matrix(spec, k, ambient);
        for (int i = 0; i < k; ++i) basis(i, pivots[i]) = Scalar::one(spec);
        for (std::size_t t = 0; t < free_cells.size(); ++t)
          basis(free_cells[t].first, free_cells[t].second) =
              Scalar::of(spec, digits[t]);
        layer.push_back(Subspace::row_span(spec, ambient, basis));

        std::size_t pos = digits.size();
        while (pos > 0 && digits[pos - 1] == p - 1) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
      }

      // next k-subset in lexicographic order
      int i = k - 1;
      while (i >= 0 && pivots[i] == ambient - k + i) --i;
      if (i < 0) {
        more = false;
      } else {
        ++pivots[i];
        for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
      }
    }
    std::sort(layer.begin(), layer.end(), Subspace::canonical_less);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

void for_each_vector(int ambient, const FieldSpec& spec, const EnumCaps& caps,
                     const std::function<bool(const Vec&)>& fn) {
  require_prime_field(spec, "vector scan");
  const long long p = spec.modulus();
  checked_pow(p, ambient, caps.max_vectors, "vector scan");
  std::vector<long long> digits(ambient, 0);
  while (true) {
    Vec v(ambient);
    for (int i = 0; i < ambient; ++i) v(i) = Scalar::of(spec, digits[i]);
    if (!fn(v)) return;
    int pos = ambient;
    while (pos > 0 && digits[pos - 1] == p - 1) digits[--pos] = 0;
    if (pos == 0) return;
    ++digits[pos - 1];
  }
}

void for_each_projective_point(int ambient, const FieldSpec& spec,
                               const EnumCaps& caps,
                               const std::function<bool(const Vec&)>& fn) {
  require_prime_field(spec, "projective scan");
  const long long p = spec.modulus();
  checked_pow(p, ambient, caps.max_vectors, "projective scan");
  // Leading coordinate 1 at position `lead`, zeros before, free digits after.
  for (int lead = 0; lead < ambient; ++lead) {
    const int tail = ambient - lead - 1;
    std::vector<long long> digits(tail, 0);
    while (true) {
      Vec v(ambient);
      for (int i = 0; i < lead; ++i) v(i) = Scalar::zero(spec);
      v(lead) = Scalar::one(spec);
      for (int i = 0; i < tail; ++i)
        v(lead + 1 + i) = Scalar::of(spec, digits[i]);
      if (!fn(v)) return;
      int pos = tail;
      while (pos > 0 && digits[pos - 1] == p - 1) digits[--pos] = 0;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }
}

}  // namespace tpa
