#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "gt/action.hpp"
#include "gt/findim.hpp"
#include "gt/lattice.hpp"

namespace gt {

/// Outcome of one verification suite: counted exact checks, with any
/// failures described in notes.
struct SuiteReport {
  std::string suite;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;
  std::vector<std::string> notes;

  bool pass() const { return failures == 0; }
  void fail(std::string note);
  nlohmann::ordered_json to_json() const;
};

struct SeedSamplerOptions {
  std::int64_t int_lo = -2;
  std::int64_t int_hi = 2;
  int denominator = 7;  // fractional parts are k/denominator
  int pool = 0;         // distinct fractional parts drawn from; 0 = n+1
};

/// Random generic seed: each row below the top draws distinct fractional
/// parts from a small pool (genericity by construction); the top row
/// reuses pool values freely but never repeats an exact entry value, so
/// gamma eigenvalues stay defined in every row.
Seed random_generic_seed(int n, std::mt19937_64& rng, const SeedSamplerOptions& opts = {});

/// Uniform coordinates in [-radius, radius].
Shift random_shift(int n, std::int64_t radius, std::mt19937_64& rng);

/// Dominant integral weights with lambda_n = 0 and lambda_1 <= spread,
/// lexicographically ordered.
std::vector<HighestWeight> dominant_weights_up_to(int n, std::int64_t spread);

/// Commutator defects for all n^4 generator pairs on a single tableau.
/// Returns the number of nonzero defects (0 = all relations hold).
std::uint64_t commutator_defects_on(const Tableau& t, ActionMode mode);

/// True iff c_mk acts on t as gamma_mk(t) times t, exactly.
bool gamma_diagonal_on(const Tableau& t, int m, int k, ActionMode mode);

struct SuiteOptions {
  int n = 3;
  int samples = 20;
  std::uint64_t rng_seed = 1;
  std::optional<Seed> seed;           // fixed seed instead of sampling
  std::optional<HighestWeight> weight;  // switches gamma/findim to Standard mode
};

SuiteReport verify_relations(const SuiteOptions& opts);
SuiteReport verify_gamma(const SuiteOptions& opts);
SuiteReport verify_closure(const SuiteOptions& opts);
SuiteReport verify_findim(const SuiteOptions& opts);

}  // namespace gt
