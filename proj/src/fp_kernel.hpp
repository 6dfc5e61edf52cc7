// Internal residue-arithmetic view of a structure-constant table over
// GF(p). The exhaustive scans and the all-pass axiom sweep run here; any
// failure falls back to the tagged-scalar path, which produces the
// user-facing witnesses.
#ifndef TPA_SRC_FP_KERNEL_HPP
#define TPA_SRC_FP_KERNEL_HPP

#include <cstdint>
#include <vector>

#include "tpa/algebra.hpp"

namespace tpa::detail {

struct FpTable {
  int n;
  std::int64_t p;
  struct Entry {
    int i, j;
    std::vector<std::pair<int, std::int64_t>> terms;
  };
  std::vector<Entry> pairs;
  std::vector<std::int64_t> dense;  // n^3 residues, (i*n + j)*n + k

  FpTable(const AlgebraDef& a, ProductKind kind)
      : n(a.dim()), p(a.spec().modulus()), dense(std::size_t(n) * n * n, 0) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Entry entry{i, j, {}};
        for (int k = 0; k < n; ++k) {
          const Scalar& c = a.entry(kind, i, j, k);
          if (c.is_zero()) continue;
          entry.terms.emplace_back(k, c.residue());
          dense[(std::size_t(i) * n + j) * n + k] = c.residue();
        }
        if (!entry.terms.empty()) pairs.push_back(std::move(entry));
      }
  }

  std::int64_t at(int i, int j, int k) const {
    return dense[(std::size_t(i) * n + j) * n + k];
  }

  void multiply(const std::vector<std::int64_t>& x,
                const std::vector<std::int64_t>& y,
                std::vector<std::int64_t>& out) const {
    out.assign(n, 0);
    for (const Entry& e : pairs) {
      const std::int64_t c = x[e.i] * y[e.j] % p;
      if (c == 0) continue;
      for (const auto& [k, coeff] : e.terms)
        out[k] = (out[k] + c * coeff) % p;
    }
  }

  // image of a basis vector pair, accumulated into out with a scale factor
  void accumulate_basis(int i, int j, std::int64_t scale,
                        std::vector<std::int64_t>& out) const {
    for (int k = 0; k < n; ++k) {
      const std::int64_t c = at(i, j, k);
      if (c != 0) out[k] = ((out[k] + scale * c) % p + p) % p;
    }
  }

  // operator of x on the left, flat row-major n x n
  void left_operator(const std::vector<std::int64_t>& x,
                     std::vector<std::int64_t>& m) const {
    m.assign(std::size_t(n) * n, 0);
    for (const Entry& e : pairs) {
      if (x[e.i] == 0) continue;
      for (const auto& [k, coeff] : e.terms)
        m[std::size_t(k) * n + e.j] =
            (m[std::size_t(k) * n + e.j] + x[e.i] * coeff) % p;
    }
  }

  bool left_operator_nilpotent(const std::vector<std::int64_t>& x,
                               std::vector<std::int64_t>& scratch_a,
                               std::vector<std::int64_t>& scratch_b) const {
    left_operator(x, scratch_a);
    std::int64_t trace = 0;
    for (int i = 0; i < n; ++i) trace = (trace + scratch_a[i * n + i]) % p;
    if (trace != 0) return false;
    int covered = 1;
    while (true) {
      bool zero = true;
      for (int t = 0; t < n * n && zero; ++t) zero = scratch_a[t] == 0;
      if (zero) return true;
      if (covered >= n) return false;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          std::int64_t acc = 0;
          for (int k = 0; k < n; ++k)
            acc += scratch_a[i * n + k] * scratch_a[k * n + j] % p;
          scratch_b[i * n + j] = acc % p;
        }
      std::swap(scratch_a, scratch_b);
      covered *= 2;
    }
  }
};

// True when every defining identity holds over GF(p); false sends the
// caller to the witness-building scalar path.
bool axioms_hold_mod_p(const AlgebraDef& a);

}  // namespace tpa::detail

#endif  // TPA_SRC_FP_KERNEL_HPP
