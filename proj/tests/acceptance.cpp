// Acceptance suite: exact checks at pinned scales, one line per criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "gt/cli.hpp"
#include "gt/io.hpp"
#include "gt/structure.hpp"
#include "gt/verify.hpp"
#include "test_util.hpp"

using namespace gt;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

std::string data_path(const std::string& name) { return std::string(GT_DATA_DIR) + "/" + name; }

struct Exec {
  int exit_code = -1;
  Json doc;
};

Exec run_binary(const std::string& args) {
  const std::string command = std::string(GT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  require(pipe != nullptr, "cannot spawn the CLI");
  std::string out;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  Exec result;
  result.exit_code = WEXITSTATUS(pclose(pipe));
  if (!out.empty()) result.doc = Json::parse(out);
  return result;
}

std::set<Shift> shift_set(const std::vector<Tableau>& tableaux) {
  std::set<Shift> out;
  for (const auto& t : tableaux) out.insert(t.shift());
  return out;
}

// ---------------------------------------------------------------------------
// 1. height-3 worked example with a full-depth integer chain: omega classes
//    and the irreducible-class basis, through the CLI
std::string criterion_chain_example() {
  const Exec omega = run_binary("omega --seed " + data_path("gl3_chain.json") + " --shift 0,0,0");
  require(omega.exit_code == kExitOk, "omega command failed");
  require(omega.doc["payload"]["omega_plus"] == Json::parse("[[2,1,1],[3,1,1]]"),
          "omega_plus differs from the expected classes");

  const Exec basis =
      run_binary("basis --seed " + data_path("gl3_chain.json") + " --radius 3 --which I");
  require(basis.exit_code == kExitOk, "basis command failed");

  std::set<std::vector<std::int64_t>> expected;
  for (std::int64_t m = -3; m <= 3; ++m) {
    for (std::int64_t nn = -3; nn <= 3; ++nn) {
      for (std::int64_t k = -3; k <= 3; ++k) {
        if (m <= 0 && k <= m && nn > -1) expected.insert({m, nn, k});
      }
    }
  }
  std::set<std::vector<std::int64_t>> got;
  for (const auto& entry : basis.doc["payload"]["shifts"]) {
    got.insert(entry.get<std::vector<std::int64_t>>());
  }
  require(got == expected, "irreducible-class basis differs from the m<=0, k<=m, n>-1 window");
  std::ostringstream detail;
  detail << "343 shifts scanned, " << got.size() << " class members";
  return detail.str();
}

// ---------------------------------------------------------------------------
// 2. height-3 worked example with two linked top values: d-table, block
//    count 6, census agreement at radius max|omega|+2
std::string criterion_block_example() {
  const Seed seed = parse_seed_document(testutil::read_file(data_path("gl3_block6.json")));
  std::int64_t max_abs = 0;
  for (const auto& link : OmegaTable(seed).links()) max_abs = std::max(max_abs, std::abs(link.base));
  const std::int64_t radius = max_abs + 2;

  const Exec block = run_binary("block --seed " + data_path("gl3_block6.json") + " --radius " +
                                std::to_string(radius));
  require(block.exit_code == kExitOk, "block command failed");
  require(block.doc["payload"]["d_table"] ==
              Json::parse(R"([{"p":2,"u":1,"d":0},{"p":3,"u":1,"d":2},{"p":3,"u":2,"d":1}])"),
          "d-table mismatch");
  require(block.doc["payload"]["block_count"] == 6, "block count is not 6");
  require(block.doc["payload"]["census"]["classes"] == 6, "census did not find 6 classes");
  require(block.doc["payload"]["census"]["match"] == true, "census flagged a mismatch");
  std::ostringstream detail;
  detail << "block count 6, census radius " << radius;
  return detail.str();
}

// ---------------------------------------------------------------------------
// 3. commutator relations, all n^4 generator pairs, exact
std::string criterion_relations() {
  std::uint64_t generic_checks = 0;
  std::mt19937_64 rng(2025);
  for (int n = 2; n <= 4; ++n) {
    for (int seed_idx = 0; seed_idx < 5; ++seed_idx) {
      const auto seed = std::make_shared<const Seed>(random_generic_seed(n, rng));
      for (int shift_idx = 0; shift_idx < 4; ++shift_idx) {
        const Tableau t(seed, random_shift(n, 2, rng));
        require(commutator_defects_on(t, ActionMode::Generic) == 0,
                "nonzero defect on a generic tableau at n = " + std::to_string(n));
        generic_checks += static_cast<std::uint64_t>(n) * n * n * n;
      }
    }
  }

  std::uint64_t standard_checks = 0;
  for (int n = 2; n <= 3; ++n) {
    for (const auto& lam : dominant_weights_up_to(n, 3)) {
      for (const auto& t : standard_tableaux(lam)) {
        require(commutator_defects_on(t, ActionMode::Standard) == 0,
                "nonzero defect on a finite-dimensional basis tableau");
        standard_checks += static_cast<std::uint64_t>(n) * n * n * n;
      }
    }
  }
  std::ostringstream detail;
  detail << generic_checks << " generic + " << standard_checks << " standard pair checks";
  return detail.str();
}

// ---------------------------------------------------------------------------
// 4. subalgebra generators act diagonally with the closed-form eigenvalue
std::string criterion_gamma() {
  std::uint64_t checks = 0;
  std::mt19937_64 rng(4096);
  for (int n = 2; n <= 4; ++n) {
    for (int sample = 0; sample < 10; ++sample) {
      const auto seed = std::make_shared<const Seed>(random_generic_seed(n, rng));
      const Tableau t(seed, random_shift(n, 1, rng));
      for (int m = 1; m <= n; ++m) {
        for (int k = 1; k <= m; ++k) {
          require(gamma_diagonal_on(t, m, k, ActionMode::Generic),
                  "c_mk not diagonal on a generic tableau");
          ++checks;
        }
      }
    }
  }

  std::uint64_t skipped = 0;
  for (int n = 2; n <= 3; ++n) {
    for (const auto& lam : dominant_weights_up_to(n, 3)) {
      for (const auto& t : standard_tableaux(lam)) {
        for (int m = 1; m <= n; ++m) {
          bool repeated = false;
          for (int i = 1; i <= m && !repeated; ++i) {
            for (int j = i + 1; j <= m && !repeated; ++j) {
              if (t.entry(m, i) == t.entry(m, j)) repeated = true;
            }
          }
          if (repeated) {
            ++skipped;
            continue;
          }
          for (int k = 1; k <= m; ++k) {
            require(gamma_diagonal_on(t, m, k, ActionMode::Standard),
                    "c_mk not diagonal on a standard tableau");
            ++checks;
          }
        }
      }
    }
  }
  std::ostringstream detail;
  detail << checks << " eigenvalue checks, " << skipped << " repeated-row tableaux skipped";
  return detail.str();
}

// ---------------------------------------------------------------------------
// 5/6 corpus: ten random height-3 seeds with a nonempty omega set
std::vector<Seed> closure_corpus() {
  std::vector<Seed> corpus;
  std::mt19937_64 rng(777);
  while (corpus.size() < 10) {
    Seed seed = random_generic_seed(3, rng);
    if (OmegaTable(seed).links().empty()) continue;
    corpus.push_back(std::move(seed));
  }
  return corpus;
}

// 5. breadth-first closure equals the Omega+ inclusion basis
std::string criterion_closure() {
  std::mt19937_64 rng(31337);
  std::uint64_t checks = 0;
  for (const auto& seed : closure_corpus()) {
    const auto seed_ptr = std::make_shared<const Seed>(seed);
    const Box box = Box::cube(3, 2);
    for (int start = 0; start < 3; ++start) {
      const Tableau r(seed_ptr, random_shift(3, 1, rng));
      const auto reached = shift_set(closure_bfs(r, box, 3));
      const auto expected = shift_set(basis_N_in_box(r, box));
      require(reached == expected, "closure differs from the inclusion basis");
      ++checks;
    }
  }
  return std::to_string(checks) + " closure/basis set equalities";
}

// ---------------------------------------------------------------------------
// 6. irreducible classes partition each box and are mutually reachable
std::string criterion_partition_reachability() {
  std::uint64_t reach_scans = 0;
  for (const auto& seed : closure_corpus()) {
    const auto seed_ptr = std::make_shared<const Seed>(seed);
    const Box box = Box::cube(3, 2);
    const Box region = box.inflated(3);
    const OmegaTable table(seed);

    // successor graph over the padded region, computed once per seed
    std::map<Shift, std::vector<Shift>> graph;
    region.for_each([&](std::span<const std::int64_t> coords) {
      const Shift z = Shift::from_coords(3, {coords.begin(), coords.end()});
      std::vector<Shift> next;
      for (const auto& w : one_step_successor_shifts(Tableau(seed_ptr, z), ActionMode::Generic)) {
        if (region.contains(w)) next.push_back(w);
      }
      graph.emplace(z, std::move(next));
    });

    std::map<std::uint64_t, std::set<Shift>> classes;
    box.for_each([&](std::span<const std::int64_t> coords) {
      classes[table.plus_mask(coords)].insert(Shift::from_coords(3, {coords.begin(), coords.end()}));
    });

    // partition: buckets agree with basis_I and cover the box exactly once
    std::size_t total = 0;
    for (const auto& [mask, members] : classes) {
      const Tableau rep(seed_ptr, *members.begin());
      require(shift_set(basis_I_in_box(rep, box)) == members, "class bucket differs from basis_I");
      total += members.size();
    }
    require(total == box.cell_count(), "classes do not partition the box");

    // reachability: walking the successor graph from every member covers
    // the member's whole class inside the box
    for (const auto& [mask, members] : classes) {
      for (const auto& start : members) {
        std::set<Shift> seen{start};
        std::vector<Shift> stack{start};
        while (!stack.empty()) {
          const Shift current = stack.back();
          stack.pop_back();
          for (const auto& next : graph.at(current)) {
            if (seen.insert(next).second) stack.push_back(next);
          }
        }
        for (const auto& member : members) {
          require(seen.count(member) == 1, "a class member is unreachable from a peer");
        }
        ++reach_scans;
      }
      // the library-level closure from one representative also covers it
      const Tableau rep(seed_ptr, *members.begin());
      const auto closure = shift_set(closure_bfs(rep, box, 3));
      for (const auto& member : members) {
        require(closure.count(member) == 1, "closure_bfs misses a class member");
      }
    }
  }
  return std::to_string(reach_scans) + " member reachability scans";
}

// ---------------------------------------------------------------------------
// 7. class census equals the block-count product at the sufficient window
std::string criterion_census() {
  std::uint64_t verified_3 = 0;
  std::mt19937_64 rng3(11);
  while (verified_3 < 10) {
    const Seed seed = random_generic_seed(3, rng3);
    const ClassPoset poset = enumerate_omega_classes(seed, sufficient_box(seed));
    require(static_cast<std::int64_t>(poset.nodes.size()) == block_count(seed),
            "census and block count disagree at n = 3");
    ++verified_3;
  }

  constexpr std::uint64_t kCellCap = 1000000;  // keep each scan under 10^6 shifts
  std::uint64_t verified_4 = 0;
  std::uint64_t skipped_4 = 0;
  std::mt19937_64 rng4(13);
  SeedSamplerOptions opts;
  opts.int_lo = -1;
  opts.int_hi = 1;
  while (verified_4 < 10) {
    require(skipped_4 < 500, "too many oversized height-4 windows");
    const Seed seed = random_generic_seed(4, rng4, opts);
    const Box box = sufficient_box(seed);
    if (box.cell_count() > kCellCap) {
      ++skipped_4;  // window larger than the scan cap
      continue;
    }
    const ClassPoset poset = enumerate_omega_classes(seed, box);
    require(static_cast<std::int64_t>(poset.nodes.size()) == block_count(seed),
            "census and block count disagree at n = 4");
    ++verified_4;
  }
  std::ostringstream detail;
  detail << verified_3 << " height-3 and " << verified_4 << " height-4 seeds verified, " << skipped_4
         << " skipped over the cell cap";
  return detail.str();
}

// ---------------------------------------------------------------------------
// 8. finite-dimensional corpus: tableau count equals the dimension formula
std::string criterion_findim() {
  std::uint64_t weights = 0;
  for (int n = 2; n <= 4; ++n) {
    for (const auto& lam : dominant_weights_up_to(n, 4)) {
      require(static_cast<std::int64_t>(standard_tableaux(lam).size()) == weyl_dimension(lam),
              "tableau count differs from the dimension formula");
      const Tableau top = highest_weight_tableau(lam);
      for (int k = 1; k <= n - 1; ++k) {
        require(act_raising(k, top, ActionMode::Standard).is_zero(),
                "highest-weight tableau not annihilated");
      }
      ++weights;
    }
  }
  return std::to_string(weights) + " dominant weights checked";
}

// ---------------------------------------------------------------------------
// 9. sandwich-lemma witness search always succeeds and verifies
std::string criterion_intermediate() {
  std::mt19937_64 rng(99);
  std::uint64_t verified = 0;
  std::uint64_t attempts = 0;
  while (verified < 100) {
    require(++attempts < 10000, "rejection sampling exhausted");
    const int n = 3 + static_cast<int>(attempts % 2);
    const Seed seed = random_generic_seed(n, rng);
    const Shift z = random_shift(n, 3, rng);
    if (z.is_zero()) continue;
    const auto seed_ptr = std::make_shared<const Seed>(seed);
    const Tableau zero(seed_ptr);
    const Tableau moved(seed_ptr, z);
    if (!omega_plus_set(zero).subset_of(omega_plus_set(moved))) continue;

    // a logic_error here (exhausted search) would fail the criterion
    const auto [row, col] = find_intermediate_index(seed, z);
    require(z(row, col) != 0, "witness coordinate is zero");
    Shift single(n);
    single.set(row, col, z(row, col));
    const auto mid = omega_plus_set(Tableau(seed_ptr, single));
    require(omega_plus_set(zero).subset_of(mid), "lower sandwich inclusion fails");
    require(mid.subset_of(omega_plus_set(moved)), "upper sandwich inclusion fails");
    ++verified;
  }
  std::ostringstream detail;
  detail << verified << " witnesses verified in " << attempts << " samples";
  return detail.str();
}

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"chain-seed golden example (omega + class basis)", 1.0, criterion_chain_example},
      {"two-value golden example (d-table + census)", 1.0, criterion_block_example},
      {"commutator relation suite", 60.0, criterion_relations},
      {"subalgebra eigenvalue suite", 120.0, criterion_gamma},
      {"closure oracle equivalence", 60.0, criterion_closure},
      {"class partition and reachability", 60.0, criterion_partition_reachability},
      {"class census vs block count", 300.0, criterion_census},
      {"finite-dimensional dimension match", 60.0, criterion_findim},
      {"sandwich-lemma witnesses", 10.0, criterion_intermediate},
  };

  int failures = 0;
  for (std::size_t idx = 0; idx < criteria.size(); ++idx) {
    const auto& criterion = criteria[idx];
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
      detail = criterion.run();
    } catch (const std::exception& e) {
      pass = false;
      detail = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (pass && elapsed > criterion.limit_seconds) {
      pass = false;
      detail += " (exceeded the " + std::to_string(criterion.limit_seconds) + " s budget)";
    }
    if (!pass) ++failures;
    std::printf("[%zu/%zu] %s  %s (%.2f s) - %s\n", idx + 1, criteria.size(), pass ? "PASS" : "FAIL",
                criterion.name.c_str(), elapsed, detail.c_str());
    std::fflush(stdout);
  }
  if (failures != 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
