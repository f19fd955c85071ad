#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "gt/action.hpp"
#include "gt/omega.hpp"

namespace gt {

/// Finite window on the shift lattice: one closed integer interval per
/// coordinate, in the canonical coordinate order.
class Box {
 public:
  Box(int n, std::vector<std::pair<std::int64_t, std::int64_t>> bounds);

  /// [-radius, radius] in every coordinate.
  static Box cube(int n, std::int64_t radius);
  /// radius around an arbitrary center shift.
  static Box around(const Shift& center, std::int64_t radius);

  int height() const { return n_; }
  std::size_t coord_count() const { return bounds_.size(); }
  const std::pair<std::int64_t, std::int64_t>& bounds(std::size_t idx) const;

  bool contains(const Shift& z) const;
  Box inflated(std::int64_t padding) const;

  /// Number of lattice points; saturates at uint64 max.
  std::uint64_t cell_count() const;

  /// Visit every lattice point in lexicographic order. The span is only
  /// valid during the callback.
  void for_each(const std::function<void(std::span<const std::int64_t>)>& fn) const;

  /// Materialized lattice points, lexicographic.
  std::vector<Shift> shifts() const;

 private:
  int n_;
  std::vector<std::pair<std::int64_t, std::int64_t>> bounds_;
};

/// Tableaux Q in the box with Omega+(r) contained in Omega+(Q): the basis
/// of the submodule generated by r, intersected with the box. Sorted by
/// shift. Requires a generic seed.
std::vector<Tableau> basis_N_in_box(const Tableau& r, const Box& box);

/// Tableaux Q in the box with Omega+(Q) = Omega+(r): the basis of the
/// irreducible module containing r, intersected with the box.
std::vector<Tableau> basis_I_in_box(const Tableau& r, const Box& box);

/// Union of the supports of g.t over the Chevalley generators
/// E_{k,k+1}, E_{k+1,k} (k = 1..n-1) and E_kk (k = 1..n). Contains t
/// itself whenever some Cartan eigenvalue is nonzero.
std::set<Shift> one_step_successor_shifts(const Tableau& t, ActionMode mode);
std::vector<Tableau> one_step_successors(const Tableau& t, ActionMode mode);

/// Breadth-first closure of {r} under one-step successors, explored
/// inside box.inflated(padding) and finally restricted to box. Sorted by
/// shift. Requires a generic seed and padding >= 0.
std::vector<Tableau> closure_bfs(const Tableau& r, const Box& box, std::int64_t padding);

/// For z != 0 with Omega+(T(L)) contained in Omega+(T(L+z)), some
/// coordinate (i,j) with z_ij != 0 satisfies
///   Omega+(T(L)) <= Omega+(T(L + z_ij d^{ij})) <= Omega+(T(L+z)).
/// Returns the first such (row, column) in canonical coordinate order;
/// exhaustion of the search would falsify the sandwich lemma and raises
/// std::logic_error. Violated preconditions raise std::domain_error
/// (non-generic seed, inclusion failure) or std::invalid_argument (z = 0).
std::pair<int, int> find_intermediate_index(const Seed& seed, const Shift& z);

/// Number of distinct row-p entries integrally linked to entry (p-1,u),
/// i.e. |{r_ps : (p,s,u) in Omega(T(L))}|. Bounds: 2 <= p <= n,
/// 1 <= u <= p-1.
int d_pu(const Seed& seed, int p, int u);

/// prod over 2 <= p <= n, 1 <= u <= p-1 of (d_pu + 1): the number of
/// distinct Omega+ classes over the full lattice. Requires a generic
/// seed.
std::int64_t block_count(const Seed& seed);

struct ClassNode {
  OmegaSet omega_plus;
  Shift representative;  // lexicographically least shift achieving the set
};

/// Distinct Omega+ values over a box with strict-inclusion cover edges
/// (edge a -> b means Omega+(a) is a proper subset of Omega+(b) with
/// nothing in between). Nodes are sorted by representative shift.
struct ClassPoset {
  std::vector<ClassNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Scan every shift in the box and collect the achieved Omega+ classes.
/// Node count never exceeds block_count for generic seeds, with equality
/// once the box contains sufficient_box(seed).
ClassPoset enumerate_omega_classes(const Seed& seed, const Box& box);

/// Same Omega+ class test; delegates to same_class.
bool generates_same_submodule(const Tableau& a, const Tableau& b);

/// Per-coordinate window guaranteed to realize every Omega+ class.
/// Computed by a chain cascade: a coordinate whose pair (k+1,u) links to
/// the fixed top row needs max|omega|+1; below that, realizing both signs
/// of a linked difference may ride on the upper row's excursion, adding
/// |omega| + 1 per row. Requires a generic seed.
Box sufficient_box(const Seed& seed);

}  // namespace gt
