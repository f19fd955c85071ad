#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <set>
#include <span>
#include <vector>

#include "gt/lattice.hpp"

namespace gt {

/// Cross-row index triple (p,s,u): row-p entry s against row-(p-1)
/// entry u, with 1 < p <= n, 1 <= s <= p, 1 <= u <= p-1.
struct OmegaTriple {
  int p;
  int s;
  int u;
  auto operator<=>(const OmegaTriple&) const = default;
};

/// All valid triples for height n, sorted.
std::vector<OmegaTriple> all_omega_triples(int n);

/// omega_{p,s,u}(T) = r_{p,s} - r_{p-1,u}.
Rational omega_value(const Tableau& t, const OmegaTriple& triple);

/// Finite set of triples with canonical (sorted) iteration order.
class OmegaSet {
 public:
  OmegaSet() = default;
  OmegaSet(std::initializer_list<OmegaTriple> triples) : triples_(triples) {}

  void insert(const OmegaTriple& t) { triples_.insert(t); }
  bool contains(const OmegaTriple& t) const { return triples_.count(t) != 0; }
  bool subset_of(const OmegaSet& other) const;

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

  bool operator==(const OmegaSet&) const = default;

 private:
  std::set<OmegaTriple> triples_;
};

/// Triples whose omega value is an integer.
OmegaSet omega_set(const Tableau& t);

/// Triples whose omega value is a non-negative integer.
OmegaSet omega_plus_set(const Tableau& t);

/// True iff the two tableaux have equal Omega+ sets. Requires the same
/// seed (std::invalid_argument otherwise).
bool same_class(const Tableau& a, const Tableau& b);

/// True iff some row-wise permutation g of a's entries matches b's top
/// row exactly, differs from b by integers in rows 1..n-1, and the
/// resulting tableau lies in the same Omega+ class as b. Both seeds must
/// be generic (std::domain_error) and of equal height
/// (std::invalid_argument). The search is exhaustive over the
/// n! (n-1)! ... 1! row permutations.
bool seeds_same_irreducible(const Seed& a, const Seed& b);

/// Integer-linked triples of a seed's lattice. Omega is invariant under
/// integer shifts, so Omega+ membership over a whole box reduces to
/// int64 comparisons against the base values cached here. At most 64
/// links are supported (a height-4 lattice has 20 possible triples).
class OmegaTable {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct Link {
    OmegaTriple triple;
    std::int64_t base;        // omega at the zero shift
    std::size_t upper_coord;  // shift coordinate of (p,s); npos when p = n
    std::size_t lower_coord;  // shift coordinate of (p-1,u)
  };

  explicit OmegaTable(const Seed& seed);

  int height() const { return n_; }
  const std::vector<Link>& links() const { return links_; }

  /// Bit i set iff links()[i] has non-negative omega at this shift.
  std::uint64_t plus_mask(std::span<const std::int64_t> coords) const;
  std::uint64_t plus_mask(const Shift& z) const;

  /// The shift-independent Omega set.
  OmegaSet omega() const;
  OmegaSet set_from_mask(std::uint64_t mask) const;

 private:
  int n_;
  std::vector<Link> links_;
};

}  // namespace gt
