#include "gt/findim.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace gt {

HighestWeight::HighestWeight(std::vector<std::int64_t> lambda) : lambda_(std::move(lambda)) {
  if (lambda_.size() < 2) throw std::domain_error("highest weight needs at least 2 parts");
  for (std::size_t i = 0; i + 1 < lambda_.size(); ++i) {
    if (lambda_[i] < lambda_[i + 1]) {
      throw std::domain_error("highest weight must be weakly decreasing");
    }
  }
}

bool is_standard(const Tableau& t) {
  const int n = t.height();
  for (int k = 1; k <= n - 1; ++k) {
    for (int i = 1; i <= k; ++i) {
      if (!is_nonneg_integer(t.entry(k + 1, i) - t.entry(k, i))) return false;
      const Rational gap = t.entry(k, i) - t.entry(k + 1, i + 1);
      if (!is_integer(gap) || gap <= 0) return false;
    }
  }
  return true;
}

SeedPtr weight_seed(const HighestWeight& lam) {
  const int n = lam.n();
  std::vector<std::vector<Rational>> rows;
  for (int k = n; k >= 1; --k) {
    std::vector<Rational> row;
    for (int i = 1; i <= k; ++i) row.emplace_back(lam.lambda()[static_cast<std::size_t>(i - 1)] - i + 1);
    rows.push_back(std::move(row));
  }
  return std::make_shared<const Seed>(Seed::from_rows_top_down(std::move(rows)));
}

Tableau highest_weight_tableau(const HighestWeight& lam) {
  return Tableau(weight_seed(lam));
}

std::vector<Tableau> standard_tableaux(const HighestWeight& lam) {
  const int n = lam.n();
  const SeedPtr seed = weight_seed(lam);
  std::vector<Tableau> out;

  // entries[k-1][i-1] holds l_{ki}; row n is fixed by the weight
  std::vector<std::vector<std::int64_t>> entries(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    entries[static_cast<std::size_t>(n - 1)].push_back(lam.lambda()[static_cast<std::size_t>(i - 1)] - i + 1);
  }

  // fill rows n-1 down to 1; within a row left to right, values ascending,
  // which makes the output lexicographic in the entries read row n-1 down
  auto emit = [&]() {
    Shift z(n);
    for (int k = 1; k <= n - 1; ++k) {
      for (int i = 1; i <= k; ++i) {
        const Rational base = seed->entry(k, i);
        z.set(k, i, entries[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] -
                        static_cast<std::int64_t>(integer_value(base)));
      }
    }
    out.emplace_back(seed, std::move(z));
  };

  auto fill = [&](auto&& self, int k, int i) -> void {
    if (k == 0) {
      emit();
      return;
    }
    const auto& upper = entries[static_cast<std::size_t>(k)];
    const std::int64_t lo = upper[static_cast<std::size_t>(i)] + 1;  // l_{k+1,i+1} + 1
    const std::int64_t hi = upper[static_cast<std::size_t>(i - 1)];  // l_{k+1,i}
    for (std::int64_t value = lo; value <= hi; ++value) {
      entries[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] = value;
      if (i == k) {
        self(self, k - 1, 1);
      } else {
        self(self, k, i + 1);
      }
    }
  };

  for (int k = 1; k <= n - 1; ++k) entries[static_cast<std::size_t>(k - 1)].resize(static_cast<std::size_t>(k));
  fill(fill, n - 1, 1);
  return out;
}

std::int64_t weyl_dimension(const HighestWeight& lam) {
  const auto& lambda = lam.lambda();
  const int n = lam.n();
  Rational dim(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      dim *= Rational(lambda[static_cast<std::size_t>(i - 1)] - lambda[static_cast<std::size_t>(j - 1)] + j - i, j - i);
    }
  }
  if (!is_integer(dim) || dim <= 0) throw std::logic_error("weyl dimension must be a positive integer");
  return static_cast<std::int64_t>(integer_value(dim));
}

}  // namespace gt
