#include "gt/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gt/action.hpp"
#include "gt/omega.hpp"
#include "gt/structure.hpp"

namespace gt {

void SuiteReport::fail(std::string note) {
  ++failures;
  if (notes.size() < 32) notes.push_back(std::move(note));
}

nlohmann::ordered_json SuiteReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["checks"] = checks;
  doc["failures"] = failures;
  doc["skipped"] = skipped;
  doc["pass"] = pass();
  doc["notes"] = notes;
  return doc;
}

Seed random_generic_seed(int n, std::mt19937_64& rng, const SeedSamplerOptions& opts) {
  const int pool = opts.pool > 0 ? opts.pool : n + 1;
  if (pool >= opts.denominator) throw std::invalid_argument("fraction pool too large for denominator");
  std::uniform_int_distribution<std::int64_t> int_part(opts.int_lo, opts.int_hi);
  std::uniform_int_distribution<int> frac_pick(1, pool);

  std::vector<std::vector<Rational>> rows;  // top down
  // top row: free fractional parts but pairwise distinct values, so the
  // gamma formulas stay defined in row n
  while (true) {
    std::vector<Rational> top;
    std::set<Rational> seen;
    for (int i = 0; i < n; ++i) {
      top.push_back(Rational(int_part(rng)) + Rational(frac_pick(rng), opts.denominator));
    }
    seen.insert(top.begin(), top.end());
    if (seen.size() == static_cast<std::size_t>(n)) {
      rows.push_back(std::move(top));
      break;
    }
  }
  for (int k = n - 1; k >= 1; --k) {
    // distinct fractional parts within the row give genericity outright
    std::vector<int> numerators(static_cast<std::size_t>(pool));
    for (int idx = 0; idx < pool; ++idx) numerators[static_cast<std::size_t>(idx)] = idx + 1;
    std::shuffle(numerators.begin(), numerators.end(), rng);
    std::vector<Rational> row;
    for (int i = 0; i < k; ++i) {
      row.push_back(Rational(int_part(rng)) + Rational(numerators[static_cast<std::size_t>(i)], opts.denominator));
    }
    rows.push_back(std::move(row));
  }
  Seed seed = Seed::from_rows_top_down(std::move(rows));
  if (!is_generic(seed)) throw std::logic_error("sampler produced a non-generic seed");
  return seed;
}

Shift random_shift(int n, std::int64_t radius, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coord(-radius, radius);
  Shift z(n);
  std::vector<std::int64_t> coords(shift_coord_count(n));
  for (auto& c : coords) c = coord(rng);
  return Shift::from_coords(n, std::move(coords));
}

std::vector<HighestWeight> dominant_weights_up_to(int n, std::int64_t spread) {
  std::vector<HighestWeight> out;
  std::vector<std::int64_t> lambda(static_cast<std::size_t>(n), 0);
  // lambda_n = 0; fill lambda_{n-1} up through lambda_1, each at least the
  // part after it and at most the spread
  auto fill = [&](auto&& self, int idx, std::int64_t lo) -> void {
    if (idx == 0) {
      out.emplace_back(lambda);
      return;
    }
    for (std::int64_t value = lo; value <= spread; ++value) {
      lambda[static_cast<std::size_t>(idx - 1)] = value;
      self(self, idx - 1, value);
    }
  };
  fill(fill, n - 1, 0);
  std::sort(out.begin(), out.end(), [](const HighestWeight& a, const HighestWeight& b) {
    return a.lambda() < b.lambda();
  });
  return out;
}

std::uint64_t commutator_defects_on(const Tableau& t, ActionMode mode) {
  const int n = t.height();
  const GTVector v = GTVector::basis_vector(t);
  std::uint64_t bad = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          if (!commutator_defect({i, j}, {k, l}, v, mode).is_zero()) ++bad;
        }
      }
    }
  }
  return bad;
}

bool gamma_diagonal_on(const Tableau& t, int m, int k, ActionMode mode) {
  const GTVector expected = GTVector::basis_vector(t, gamma_eigenvalue(m, k, t));
  return act_gamma_generator(m, k, GTVector::basis_vector(t), mode) == expected;
}

namespace {

Seed suite_seed(const SuiteOptions& opts, std::mt19937_64& rng) {
  if (opts.seed) return *opts.seed;
  return random_generic_seed(opts.n, rng);
}

}  // namespace

SuiteReport verify_relations(const SuiteOptions& opts) {
  SuiteReport report;
  report.suite = "relations";
  std::mt19937_64 rng(opts.rng_seed);
  for (int sample = 0; sample < opts.samples; ++sample) {
    const Seed seed = suite_seed(opts, rng);
    const int n = seed.height();
    const Tableau t(std::make_shared<const Seed>(seed), random_shift(n, 2, rng));
    const std::uint64_t bad = commutator_defects_on(t, ActionMode::Generic);
    report.checks += static_cast<std::uint64_t>(n) * n * n * n;
    if (bad != 0) {
      report.fail("sample " + std::to_string(sample) + ": " + std::to_string(bad) + " nonzero commutator defects");
    }
  }
  return report;
}

SuiteReport verify_gamma(const SuiteOptions& opts) {
  SuiteReport report;
  report.suite = "gamma";
  std::mt19937_64 rng(opts.rng_seed);
  if (opts.weight) {
    for (const auto& t : standard_tableaux(*opts.weight)) {
      for (int m = 1; m <= opts.weight->n(); ++m) {
        bool repeated = false;
        for (int i = 1; i <= m && !repeated; ++i) {
          for (int j = i + 1; j <= m && !repeated; ++j) {
            if (t.entry(m, i) == t.entry(m, j)) repeated = true;
          }
        }
        if (repeated) {
          ++report.skipped;
          continue;
        }
        for (int k = 1; k <= m; ++k) {
          ++report.checks;
          if (!gamma_diagonal_on(t, m, k, ActionMode::Standard)) {
            report.fail("c_" + std::to_string(m) + std::to_string(k) + " not diagonal on a standard tableau");
          }
        }
      }
    }
    return report;
  }
  for (int sample = 0; sample < opts.samples; ++sample) {
    const Seed seed = suite_seed(opts, rng);
    const int n = seed.height();
    const Tableau t(std::make_shared<const Seed>(seed), random_shift(n, 1, rng));
    for (int m = 1; m <= n; ++m) {
      for (int k = 1; k <= m; ++k) {
        ++report.checks;
        if (!gamma_diagonal_on(t, m, k, ActionMode::Generic)) {
          report.fail("sample " + std::to_string(sample) + ": c_" + std::to_string(m) + std::to_string(k) +
                      " not diagonal");
        }
      }
    }
  }
  return report;
}

SuiteReport verify_closure(const SuiteOptions& opts) {
  SuiteReport report;
  report.suite = "closure";
  std::mt19937_64 rng(opts.rng_seed);
  for (int sample = 0; sample < opts.samples; ++sample) {
    Seed seed = suite_seed(opts, rng);
    if (!opts.seed) {
      for (int attempt = 0; attempt < 64 && omega_set(Tableau(std::make_shared<const Seed>(seed))).empty();
           ++attempt) {
        seed = random_generic_seed(opts.n, rng);
      }
    }
    const auto seed_ptr = std::make_shared<const Seed>(seed);
    const int n = seed.height();
    const Box box = Box::cube(n, 2);
    const Tableau center(seed_ptr, random_shift(n, 1, rng));

    ++report.checks;
    const auto reached = closure_bfs(center, box, n);
    const auto expected = basis_N_in_box(center, box);
    if (reached.size() != expected.size() || !std::equal(reached.begin(), reached.end(), expected.begin())) {
      report.fail("sample " + std::to_string(sample) + ": closure does not match the Omega+ inclusion basis");
    }
  }
  return report;
}

SuiteReport verify_findim(const SuiteOptions& opts) {
  SuiteReport report;
  report.suite = "findim";
  const auto check_weight = [&](const HighestWeight& lam) {
    ++report.checks;
    const auto tableaux = standard_tableaux(lam);
    if (static_cast<std::int64_t>(tableaux.size()) != weyl_dimension(lam)) {
      report.fail("standard tableau count does not match the dimension formula");
      return;
    }
    const Tableau top = highest_weight_tableau(lam);
    for (int k = 1; k <= lam.n() - 1; ++k) {
      ++report.checks;
      if (!act_raising(k, top, ActionMode::Standard).is_zero()) {
        report.fail("highest-weight tableau not annihilated by raising at row " + std::to_string(k));
      }
    }
  };
  if (opts.weight) {
    check_weight(*opts.weight);
  } else {
    for (const auto& lam : dominant_weights_up_to(opts.n, 4)) check_weight(lam);
  }
  return report;
}

}  // namespace gt
