#pragma once

#include <cstdint>
#include <vector>

#include "gt/lattice.hpp"

namespace gt {

/// Dominant integral weight lambda_1 >= ... >= lambda_n.
class HighestWeight {
 public:
  /// Throws std::domain_error unless the entries are weakly decreasing.
  explicit HighestWeight(std::vector<std::int64_t> lambda);

  int n() const { return static_cast<int>(lambda_.size()); }
  const std::vector<std::int64_t>& lambda() const { return lambda_; }

  bool operator==(const HighestWeight&) const = default;

 private:
  std::vector<std::int64_t> lambda_;
};

/// Betweenness test: r_{k+1,i} - r_{k,i} in Z_{>=0} and
/// r_{k,i} - r_{k+1,i+1} in Z_{>0} for all 1 <= i <= k <= n-1.
/// Forces strictly decreasing rows.
bool is_standard(const Tableau& t);

/// Seed whose row k is the top row l_{nj} = lambda_j - j + 1 truncated to
/// k entries; its zero-shift tableau is the highest-weight (maximal)
/// tableau of lambda.
SeedPtr weight_seed(const HighestWeight& lam);
Tableau highest_weight_tableau(const HighestWeight& lam);

/// All standard tableaux with top row l_{nj} = lambda_j - j + 1, over
/// weight_seed(lam), in lexicographic order of the entries read row n-1
/// down to row 1.
std::vector<Tableau> standard_tableaux(const HighestWeight& lam);

/// prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i); independent
/// dimension oracle for the standard-tableau count.
std::int64_t weyl_dimension(const HighestWeight& lam);

}  // namespace gt
