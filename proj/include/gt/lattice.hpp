#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "gt/rational.hpp"

namespace gt {

/// Number of shifted coordinates of a height-n lattice, n(n-1)/2.
std::size_t shift_coord_count(int n);

/// Flat index of coordinate (k,i) in the canonical order: rows from n-1
/// down to 1, left to right inside each row. For gl(3) the order is
/// (z_21, z_22, z_11).
std::size_t shift_coord_index(int n, int k, int i);

/// The fixed tableau: entries l_{ki} for 1 <= i <= k <= n, row n on top.
/// Rows 1..n-1 of every tableau in the lattice differ from these entries
/// by integers; row n is pinned.
class Seed {
 public:
  /// rows[0] is the top row (length n), rows[n-1] the bottom (length 1).
  static Seed from_rows_top_down(std::vector<std::vector<Rational>> rows);

  int height() const { return n_; }

  /// Entry l_{ki}, 1 <= i <= k <= n.
  const Rational& entry(int k, int i) const;

  /// Row k as (l_{k1},...,l_{kk}).
  const std::vector<Rational>& row(int k) const;

  bool operator==(const Seed&) const = default;

 private:
  Seed() = default;
  int n_ = 0;
  std::vector<std::vector<Rational>> rows_;  // rows_[k-1] = row k
};

/// True iff no two entries of any one row 1..n-1 differ by an integer.
/// The top row is unconstrained; in particular every height-2 seed is
/// generic.
bool is_generic(const Seed& seed);

/// Integer lattice point z: coordinates z_{ki} for 1 <= i <= k <= n-1,
/// with the top row implicitly zero. Ordering is lexicographic in the
/// canonical coordinate order.
class Shift {
 public:
  explicit Shift(int n) : n_(n), coords_(shift_coord_count(n), 0) {}

  static Shift delta(int n, int k, int i);
  static Shift from_coords(int n, std::vector<std::int64_t> coords);

  int height() const { return n_; }
  std::size_t coord_count() const { return coords_.size(); }

  /// z_{ki}; reads as zero on row n.
  std::int64_t operator()(int k, int i) const;
  void set(int k, int i, std::int64_t value);

  const std::vector<std::int64_t>& coords() const { return coords_; }

  bool is_zero() const;
  std::int64_t l1_norm() const;
  std::int64_t linf_norm() const;

  Shift& operator+=(const Shift& other);
  Shift& operator-=(const Shift& other);
  Shift operator-() const;
  friend Shift operator+(Shift a, const Shift& b) { return a += b; }
  friend Shift operator-(Shift a, const Shift& b) { return a -= b; }

  auto operator<=>(const Shift&) const = default;

 private:
  int n_;
  std::vector<std::int64_t> coords_;
};

using SeedPtr = std::shared_ptr<const Seed>;

/// A lattice tableau: a seed plus an integer shift. Entries are derived,
/// never stored; two tableaux over the same seed are equal iff their
/// shifts are.
class Tableau {
 public:
  explicit Tableau(SeedPtr seed);
  Tableau(SeedPtr seed, Shift shift);

  const SeedPtr& seed() const { return seed_; }
  const Seed& seed_ref() const { return *seed_; }
  const Shift& shift() const { return shift_; }
  int height() const { return seed_->height(); }

  /// r_{ps} = l_{ps} + z_{ps} (the shift vanishes on row n).
  Rational entry(int p, int s) const;

  Tableau with_shift(Shift shift) const { return Tableau(seed_, std::move(shift)); }
  Tableau shifted_by(const Shift& delta) const;
  Tableau shifted(int k, int i, std::int64_t amount) const;

  /// Seed identity: pointer fast path, value equality otherwise.
  bool same_seed(const Tableau& other) const;

  bool operator==(const Tableau& other) const;

 private:
  SeedPtr seed_;
  Shift shift_;
};

/// Finite linear combination of lattice tableaux with rational
/// coefficients. Zero coefficients are never stored, so the support is
/// canonical.
class GTVector {
 public:
  explicit GTVector(SeedPtr seed);
  static GTVector basis_vector(const Tableau& t, Rational coeff = Rational(1));

  const SeedPtr& seed() const { return seed_; }
  int height() const { return seed_->height(); }

  const std::map<Shift, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of the tableau at z; zero when absent.
  Rational coeff(const Shift& z) const;
  std::vector<Shift> support() const;

  void add_term(const Shift& z, const Rational& c);
  void add_scaled(const GTVector& other, const Rational& c);

  GTVector& operator+=(const GTVector& other);
  GTVector& operator-=(const GTVector& other);
  GTVector& operator*=(const Rational& c);
  friend GTVector operator+(GTVector a, const GTVector& b) { return a += b; }
  friend GTVector operator-(GTVector a, const GTVector& b) { return a -= b; }
  friend GTVector operator*(const Rational& c, GTVector v) { return v *= c; }

  bool operator==(const GTVector& other) const;

 private:
  SeedPtr seed_;
  std::map<Shift, Rational> terms_;
};

}  // namespace gt
