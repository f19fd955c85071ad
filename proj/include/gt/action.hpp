#pragma once

#include <compare>
#include <span>

#include "gt/lattice.hpp"

namespace gt {

/// The elementary matrix E_ij, 1 <= i,j <= n.
struct GeneratorIndex {
  int i;
  int j;
  auto operator<=>(const GeneratorIndex&) const = default;
};

/// Generic keeps every shifted target tableau; Standard drops targets
/// that fail the standardness test (the truncation rule of
/// finite-dimensional modules).
enum class ActionMode { Generic, Standard };

/// E_{k,k+1} on a single tableau:
///   -sum_i [ prod_{j=1..k+1}(r_ki - r_{k+1,j}) / prod_{j!=i}(r_ki - r_kj) ] T(R + d^{ki}).
/// Zero-coefficient terms are dropped. A vanishing denominator (repeated
/// entries in row k, impossible for generic seeds and for standard
/// tableaux) raises std::domain_error.
GTVector act_raising(int k, const Tableau& t, ActionMode mode);

/// E_{k+1,k} on a single tableau:
///   sum_i [ prod_{j=1..k-1}(r_ki - r_{k-1,j}) / prod_{j!=i}(r_ki - r_kj) ] T(R - d^{ki}).
/// For k = 1 the numerator is the empty product 1.
GTVector act_lowering(int k, const Tableau& t, ActionMode mode);

/// E_kk eigenvalue: k - 1 + sum_{i<=k} r_ki - sum_{i<=k-1} r_{k-1,i}.
Rational act_cartan(int k, const Tableau& t);

/// Action of any E_ij, extended linearly. |i-j| <= 1 dispatches to the
/// explicit formulas; longer-range generators use
///   E_ij = [E_{i,j-1}, E_{j-1,j}]  (j > i+1)
///   E_ij = [E_{i,i-1}, E_{i-1,j}]  (i > j+1).
GTVector act(GeneratorIndex g, const GTVector& v, ActionMode mode);
GTVector act(GeneratorIndex g, const Tableau& t, ActionMode mode);

/// Composition; the rightmost listed generator acts first.
GTVector act_word(std::span<const GeneratorIndex> word, const GTVector& v, ActionMode mode);

/// act(a, act(b,v)) - act(b, act(a,v)) - d_jk act(E_il, v) + d_li act(E_kj, v)
/// for a = E_ij, b = E_kl. Must be the zero vector on every valid module.
GTVector commutator_defect(GeneratorIndex a, GeneratorIndex b, const GTVector& v, ActionMode mode);

/// gamma_mk evaluated at row m of t:
///   sum_{i=1..m} (r_mi + m - 1)^k prod_{j!=i} (1 - 1/(r_mi - r_mj)).
/// Repeated entries in row m raise std::domain_error.
Rational gamma_eigenvalue(int m, int k, const Tableau& t);

/// The subalgebra generator c_mk = sum over (i_1,...,i_k) in {1..m}^k of
/// E_{i_1 i_2} E_{i_2 i_3} ... E_{i_k i_1}, applied via act_word. On any
/// valid module this acts diagonally with eigenvalue gamma_mk.
GTVector act_gamma_generator(int m, int k, const GTVector& v, ActionMode mode);

}  // namespace gt
