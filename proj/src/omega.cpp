#include "gt/omega.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gt {

std::vector<OmegaTriple> all_omega_triples(int n) {
  std::vector<OmegaTriple> triples;
  for (int p = 2; p <= n; ++p) {
    for (int s = 1; s <= p; ++s) {
      for (int u = 1; u <= p - 1; ++u) triples.push_back({p, s, u});
    }
  }
  return triples;
}

Rational omega_value(const Tableau& t, const OmegaTriple& triple) {
  const int n = t.height();
  if (triple.p < 2 || triple.p > n || triple.s < 1 || triple.s > triple.p || triple.u < 1 ||
      triple.u > triple.p - 1) {
    throw std::out_of_range("omega triple (" + std::to_string(triple.p) + "," + std::to_string(triple.s) +
                            "," + std::to_string(triple.u) + ") out of range for height " + std::to_string(n));
  }
  return t.entry(triple.p, triple.s) - t.entry(triple.p - 1, triple.u);
}

bool OmegaSet::subset_of(const OmegaSet& other) const {
  return std::includes(other.triples_.begin(), other.triples_.end(), triples_.begin(), triples_.end());
}

OmegaSet omega_set(const Tableau& t) {
  OmegaSet out;
  for (const auto& triple : all_omega_triples(t.height())) {
    if (is_integer(omega_value(t, triple))) out.insert(triple);
  }
  return out;
}

OmegaSet omega_plus_set(const Tableau& t) {
  OmegaSet out;
  for (const auto& triple : all_omega_triples(t.height())) {
    if (is_nonneg_integer(omega_value(t, triple))) out.insert(triple);
  }
  return out;
}

bool same_class(const Tableau& a, const Tableau& b) {
  if (!a.same_seed(b)) throw std::invalid_argument("same_class: tableaux over different seeds");
  return omega_plus_set(a) == omega_plus_set(b);
}

namespace {

// All permutations of {0,...,k-1}, identity first.
std::vector<std::vector<int>> permutations(int k) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return all;
}

}  // namespace

bool seeds_same_irreducible(const Seed& a, const Seed& b) {
  if (a.height() != b.height()) throw std::invalid_argument("seeds_same_irreducible: height mismatch");
  if (!is_generic(a) || !is_generic(b)) {
    throw std::domain_error("seeds_same_irreducible: both seeds must be generic");
  }
  const int n = a.height();
  const auto b_ptr = std::make_shared<const Seed>(b);
  const Tableau b_zero(b_ptr);

  std::vector<std::vector<std::vector<int>>> row_perms;  // row_perms[k-1] = perms of row k
  for (int k = 1; k <= n; ++k) row_perms.push_back(permutations(k));

  std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
  while (true) {
    // permuted row k entry i is a.row(k)[perm[i]]
    bool candidate = true;
    Shift z(n);
    for (int k = n; k >= 1 && candidate; --k) {
      const auto& perm = row_perms[static_cast<std::size_t>(k - 1)][choice[static_cast<std::size_t>(k - 1)]];
      const auto& row_a = a.row(k);
      const auto& row_b = b.row(k);
      for (int i = 1; i <= k; ++i) {
        const Rational diff = row_a[static_cast<std::size_t>(perm[static_cast<std::size_t>(i - 1)])] -
                              row_b[static_cast<std::size_t>(i - 1)];
        if (k == n) {
          if (diff != 0) {
            candidate = false;
            break;
          }
        } else {
          if (!is_integer(diff)) {
            candidate = false;
            break;
          }
          z.set(k, i, static_cast<std::int64_t>(integer_value(diff)));
        }
      }
    }
    if (candidate && same_class(Tableau(b_ptr, z), b_zero)) return true;

    // odometer over the per-row permutation choices
    int k = 0;
    while (k < n) {
      if (++choice[static_cast<std::size_t>(k)] < row_perms[static_cast<std::size_t>(k)].size()) break;
      choice[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == n) return false;
  }
}

OmegaTable::OmegaTable(const Seed& seed) : n_(seed.height()) {
  const auto seed_ptr = std::make_shared<const Seed>(seed);
  const Tableau zero(seed_ptr);
  for (const auto& triple : all_omega_triples(n_)) {
    const Rational value = omega_value(zero, triple);
    if (!is_integer(value)) continue;
    const Integer base = integer_value(value);
    if (base > std::numeric_limits<std::int64_t>::max() / 4 ||
        base < std::numeric_limits<std::int64_t>::min() / 4) {
      throw std::overflow_error("omega base value out of int64 range");
    }
    Link link;
    link.triple = triple;
    link.base = static_cast<std::int64_t>(base);
    link.upper_coord = triple.p == n_ ? npos : shift_coord_index(n_, triple.p, triple.s);
    link.lower_coord = shift_coord_index(n_, triple.p - 1, triple.u);
    links_.push_back(link);
  }
  if (links_.size() > 64) throw std::overflow_error("more than 64 integer links");
}

std::uint64_t OmegaTable::plus_mask(std::span<const std::int64_t> coords) const {
  std::uint64_t mask = 0;
  for (std::size_t idx = 0; idx < links_.size(); ++idx) {
    const Link& link = links_[idx];
    const std::int64_t upper = link.upper_coord == npos ? 0 : coords[link.upper_coord];
    if (link.base + upper - coords[link.lower_coord] >= 0) mask |= std::uint64_t{1} << idx;
  }
  return mask;
}

std::uint64_t OmegaTable::plus_mask(const Shift& z) const {
  return plus_mask(std::span<const std::int64_t>(z.coords()));
}

OmegaSet OmegaTable::omega() const {
  OmegaSet out;
  for (const auto& link : links_) out.insert(link.triple);
  return out;
}

OmegaSet OmegaTable::set_from_mask(std::uint64_t mask) const {
  OmegaSet out;
  for (std::size_t idx = 0; idx < links_.size(); ++idx) {
    if (mask & (std::uint64_t{1} << idx)) out.insert(links_[idx].triple);
  }
  return out;
}

}  // namespace gt
