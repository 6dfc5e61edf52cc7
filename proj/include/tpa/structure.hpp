#ifndef TPA_STRUCTURE_HPP
#define TPA_STRUCTURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tpa/algebra.hpp"

namespace tpa {

enum class SeriesKind { Derived, LowerCentral, Frattini };
enum class SeriesMode { FullSum, Simplified };

// Which operations feed the descending series: both (the transposed Poisson
// structure), the product alone (associative side) or the bracket alone
// (Lie side).
enum class OpMask { Both, DotOnly, BracketOnly };

struct SeriesRecord {
  SeriesKind kind;
  std::vector<Subspace> terms;  // terms[0] is the input subalgebra
  bool terminated = false;      // reached the zero subspace
  std::optional<int> index;     // first k with terms[k] = 0, when terminated
};

// Lower central series A^0 = A, A^{k+1} built from A and A^k (simplified
// mode) or as the full convolution sum of A^i against A^{k-i} (full_sum
// mode). The two agree for transposed Poisson algebras; both are kept so the
// agreement is checkable.
SeriesRecord lower_central_series(const AlgebraDef& a, const Subspace& s,
                                  SeriesMode mode = SeriesMode::Simplified,
                                  OpMask ops = OpMask::Both);

// Derived series A^(0) = A, A^(k+1) = A^(k) A^(k) (both operations).
SeriesRecord derived_series(const AlgebraDef& a, const Subspace& s,
                            OpMask ops = OpMask::Both);

struct NilpotencyReport {
  bool nilpotent = false;
  bool solvable = false;
  bool assoc_nilpotent = false;  // product-only lower central series
  bool lie_nilpotent = false;    // bracket-only lower central series
  std::optional<int> nilpotency_class;
  std::optional<int> solvable_index;
  std::optional<int> assoc_class;
  std::optional<int> lie_class;
  // nilpotent == (assoc_nilpotent && lie_nilpotent); recorded rather than
  // assumed so the equivalence stays observable.
  bool engel_consistent = false;
};
NilpotencyReport nilpotency_report(const AlgebraDef& a);

// (P_x nilpotent, Q_x nilpotent)
std::pair<bool, bool> operator_nilpotent(const AlgebraDef& a, const Vec& x);

// A full flag of ideals 0 = P_0 < P_1 < ... < P_n = P, one per dimension,
// found by a backtracking search over 1-dimensional ideals of successive
// quotients (projective points in lexicographic order, so the witness is
// reproducible). Absence is definitive over the finite field searched.
std::optional<std::vector<Subspace>> supersolvable_flag(
    const AlgebraDef& a, const EnumCaps& caps = EnumCaps{});

enum class AnnihilatorVariant { Full, Lie, Assoc };
// Solution space of x.b = 0 / [x, b] = 0 (per variant) for all b in B.
Subspace annihilator(const AlgebraDef& a, const Subspace& b,
                     AnnihilatorVariant variant = AnnihilatorVariant::Full);

// {x : x.B + [x, B] inside B}; requires B to be a subalgebra and verifies
// that the result is one.
Subspace normalizer(const AlgebraDef& a, const Subspace& b);

enum class EngelVariant { Assoc, Lie };
// Eventual kernel of P_x (assoc) or Q_x (lie); the assoc variant is
// additionally verified to be an ideal.
Subspace engel_subspace(const AlgebraDef& a, const Vec& x,
                        EngelVariant variant);

// Associative nilpotent radical: the subspace of elements with nilpotent
// left multiplication. Over Q it is the kernel of the trace form
// (x, y) -> tr(P_{x.y}); over GF(p) it comes from an exhaustive element
// scan (the trace-form criterion is unreliable in small characteristic).
// Both paths are post-verified elementwise and as an associative ideal.
Subspace nil_radical_assoc(const AlgebraDef& a,
                           const EnumCaps& caps = EnumCaps{});

// Nilpotent radical of the full structure. Strategy ladder: Lie-nilpotent
// algebras reduce to nil_radical_assoc; otherwise prime fields fall back to
// summing the nilpotent ideals of the enumerated ideal lattice; otherwise
// Unsupported.
Subspace nil_radical(const AlgebraDef& a, const EnumCaps& caps = EnumCaps{});

// Strategy 2 forced (enumeration over a prime field), as an oracle for the
// ladder above.
Subspace nil_radical_by_enumeration(const AlgebraDef& a,
                                    const EnumCaps& caps = EnumCaps{});

bool is_idempotent(const AlgebraDef& a, const Vec& e);

struct IdempotentInfo {
  Vec element;
  bool principal;  // no idempotent u with u.e = 0
};
// All nonzero idempotents over GF(p) in counting order; UnsupportedField
// over Q (no exhaustive scan exists there).
std::vector<IdempotentInfo> idempotent_scan(const AlgebraDef& a,
                                            const EnumCaps& caps = EnumCaps{});

struct IdempotentIdentities {
  bool peirce_lie;         // e.[x,y] = [e.x, e.y]
  bool operator_identity;  // P_e Q_e = Q_e P_e = Q_e
  bool hom_lie;            // bracket with twist P_e satisfies the Hom-Jacobi law
};
IdempotentIdentities idempotent_identities(const AlgebraDef& a, const Vec& e);

struct IdempotentSplit {
  Subspace part_e;     // span(e)
  Subspace part_rest;  // image of (identity - P_e)
  Subspace sum;        // part_e + part_rest; the whole space iff spans_whole
  bool direct;         // part_e intersect part_rest = 0
  bool spans_whole;
};
IdempotentSplit idempotent_split(const AlgebraDef& a, const Vec& e);

}  // namespace tpa

#endif  // TPA_STRUCTURE_HPP
