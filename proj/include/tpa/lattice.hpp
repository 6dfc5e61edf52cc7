#ifndef TPA_LATTICE_HPP
#define TPA_LATTICE_HPP

#include "tpa/structure.hpp"

namespace tpa {

// Smallest subalgebra containing v: iterate v <- v + v.v + [v,v].
Subspace subalgebra_closure(const AlgebraDef& a, const Subspace& v);

// Smallest ideal containing v: iterate v <- v + v.P + [v,P].
Subspace ideal_closure(const AlgebraDef& a, const Subspace& v);

// Largest ideal of a contained in v, by the descending fixed point
// w <- {x in w : x.P + [x,P] inside w}. Pure linear algebra, so it works
// over every supported field.
Subspace largest_ideal_in(const AlgebraDef& a, const Subspace& v);

// Lattice enumeration over GF(p). Lists come back in canonical order
// (dimension ascending, lexicographic bases).
std::vector<Subspace> all_subalgebras(const AlgebraDef& a,
                                      const EnumCaps& caps = EnumCaps{});
std::vector<Subspace> all_ideals(const AlgebraDef& a,
                                 const EnumCaps& caps = EnumCaps{});
// Maximal elements of the proper-subalgebra poset; nonempty for dim >= 1.
std::vector<Subspace> maximal_subalgebras(const AlgebraDef& a,
                                          const EnumCaps& caps = EnumCaps{});
std::vector<Subspace> maximal_ideals(const AlgebraDef& a,
                                     const EnumCaps& caps = EnumCaps{});
// Minimal nonzero ideals.
std::vector<Subspace> minimal_ideals(const AlgebraDef& a,
                                     const EnumCaps& caps = EnumCaps{});

struct FrattiniPair {
  Subspace subalgebra;  // F(P): intersection of all maximal subalgebras
  Subspace ideal;       // phi(P): largest ideal inside F(P)
};

// Nilpotent algebras take the fast path F = P^1 (valid over any field);
// otherwise the maximal subalgebras are enumerated, which needs GF(p).
// Post-checked: phi inside F inside P^1, and phi associative nilpotent.
FrattiniPair frattini(const AlgebraDef& a, const EnumCaps& caps = EnumCaps{});

// Intersection of all maximal proper ideals (GF(p)); the full space when no
// proper ideal exists (dimension 0).
Subspace jacobson(const AlgebraDef& a, const EnumCaps& caps = EnumCaps{});

struct SocleReport {
  std::vector<Subspace> minimal;          // minimal nonzero ideals
  std::vector<Subspace> minimal_abelian;  // those with Z.Z + [Z,Z] = 0
  Subspace socle;                         // sum of minimal ideals
  Subspace zero_socle;                    // sum of minimal abelian ideals
};
SocleReport socles(const AlgebraDef& a, const EnumCaps& caps = EnumCaps{});

// F_0 = P, F_{i+1} = F(F_i) on the restricted algebra; terms are reported
// in the original coordinates. The Frattini index is the first zero term.
SeriesRecord frattini_series(const AlgebraDef& a,
                             const EnumCaps& caps = EnumCaps{});

struct LatticeReport {
  std::vector<Subspace> subalgebras;
  std::vector<Subspace> maximal_subalgebras;
  std::vector<Subspace> ideals;
  std::vector<Subspace> maximal_ideals;
  std::vector<Subspace> minimal_ideals;
  std::vector<Subspace> minimal_abelian_ideals;
  Subspace frattini_subalgebra;
  Subspace frattini_ideal;
  Subspace jacobson;
  Subspace socle;
  Subspace zero_socle;
};
LatticeReport lattice_report(const AlgebraDef& a,
                             const EnumCaps& caps = EnumCaps{});

}  // namespace tpa

#endif  // TPA_LATTICE_HPP
