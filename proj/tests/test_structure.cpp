#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "gt/structure.hpp"
#include "gt/verify.hpp"
#include "test_util.hpp"

using namespace gt;
using testutil::block6_seed;
using testutil::chain_seed;
using testutil::irreducible_seed;
using testutil::make_seed;
using testutil::make_shift;

namespace {

std::set<Shift> shifts_of(const std::vector<Tableau>& tableaux) {
  std::set<Shift> out;
  for (const auto& t : tableaux) out.insert(t.shift());
  return out;
}

}  // namespace

TEST_CASE("box iteration is lexicographic and counts cells") {
  const Box box(2, {{-1, 1}});
  CHECK(box.cell_count() == 3);
  const auto shifts = box.shifts();
  REQUIRE(shifts.size() == 3);
  CHECK(shifts.front() == make_shift(2, {-1}));
  CHECK(shifts.back() == make_shift(2, {1}));
  CHECK(std::is_sorted(shifts.begin(), shifts.end()));

  const Box cube = Box::cube(3, 2);
  CHECK(cube.cell_count() == 125);
  CHECK(cube.contains(make_shift(3, {2, -2, 0})));
  CHECK_FALSE(cube.contains(make_shift(3, {3, 0, 0})));
  CHECK(cube.inflated(1).contains(make_shift(3, {3, 0, 0})));

  const Box around = Box::around(make_shift(3, {5, 0, 0}), 1);
  CHECK(around.contains(make_shift(3, {6, 1, -1})));
  CHECK_FALSE(around.contains(make_shift(3, {3, 0, 0})));

  CHECK_THROWS_AS(Box(3, {{0, -1}, {0, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("submodule basis in a box") {
  const auto seed = chain_seed();
  const Tableau r(seed);
  const Box box = Box::cube(3, 2);

  // inclusion of {(3,1,1),(2,1,1)} pins m <= 0 and k <= m; n is free
  const auto members = shifts_of(basis_N_in_box(r, box));
  std::set<Shift> expected;
  for (std::int64_t m = -2; m <= 2; ++m) {
    for (std::int64_t nn = -2; nn <= 2; ++nn) {
      for (std::int64_t k = -2; k <= 2; ++k) {
        if (m <= 0 && k <= m) expected.insert(make_shift(3, {m, nn, k}));
      }
    }
  }
  CHECK(members == expected);
  CHECK(members.count(r.shift()) == 1);

  // empty Omega+ keeps the whole box
  const Tableau free(irreducible_seed());
  CHECK(basis_N_in_box(free, box).size() == box.cell_count());

  const auto nongeneric = make_seed({{"0", "1", "2"}, {"0", "1"}, {"0"}});
  CHECK_THROWS_AS(basis_N_in_box(Tableau(nongeneric), box), std::domain_error);
}

TEST_CASE("irreducible-class basis in a box") {
  const auto seed = chain_seed();
  const Tableau r(seed);
  const Box box = Box::cube(3, 3);

  const auto members = shifts_of(basis_I_in_box(r, box));
  std::set<Shift> expected;
  for (std::int64_t m = -3; m <= 3; ++m) {
    for (std::int64_t nn = -3; nn <= 3; ++nn) {
      for (std::int64_t k = -3; k <= 3; ++k) {
        if (m <= 0 && k <= m && nn > -1) expected.insert(make_shift(3, {m, nn, k}));
      }
    }
  }
  CHECK(members == expected);

  const Tableau free(irreducible_seed());
  CHECK(basis_I_in_box(free, box).size() == box.cell_count());

  // the class basis always sits inside the submodule basis
  const auto in_n = shifts_of(basis_N_in_box(r, box));
  for (const auto& z : members) CHECK(in_n.count(z) == 1);
}

TEST_CASE("one-step successors") {
  const auto two = make_seed({{"1", "-1"}, {"2/7"}});
  const Tableau t(two);
  const auto next = one_step_successor_shifts(t, ActionMode::Generic);
  CHECK(next == std::set<Shift>{make_shift(2, {-1}), make_shift(2, {0}), make_shift(2, {1})});

  // r_11 = r_21 kills the raising coefficient at +delta(1,1)
  const Tableau chain(chain_seed());
  const auto reached = one_step_successor_shifts(chain, ActionMode::Generic);
  CHECK(reached.count(make_shift(3, {0, 0, 1})) == 0);
  CHECK(reached.count(make_shift(3, {0, 0, -1})) == 1);
  CHECK(reached.count(chain.shift()) == 1);
}

TEST_CASE("breadth-first closure matches the inclusion basis") {
  const Box box = Box::cube(3, 2);

  for (const auto& seed : {chain_seed(), block6_seed()}) {
    for (const auto& start :
         {Shift(3), make_shift(3, {1, 0, 0}), make_shift(3, {-1, 1, 0}), make_shift(3, {0, -2, 1})}) {
      const Tableau r(seed, start);
      const auto reached = closure_bfs(r, box, 3);
      const auto expected = basis_N_in_box(r, box);
      CHECK(shifts_of(reached) == shifts_of(expected));

      // nothing reachable ever violates the Omega+ inclusion
      const auto target = omega_plus_set(r);
      for (const auto& t : closure_bfs(r, box, 0)) {
        CHECK(target.subset_of(omega_plus_set(t)));
      }
    }
  }

  // no links: everything in the box is reachable
  const Tableau free(irreducible_seed());
  CHECK(closure_bfs(free, box, 3).size() == box.cell_count());

  CHECK_THROWS_AS(closure_bfs(free, box, -1), std::invalid_argument);
}

TEST_CASE("closure matches the inclusion basis at height 4") {
  // a full-depth chain in the first column plus two shorter chains keeps
  // the submodule thin enough to walk
  const auto seed = make_seed({{"1/7", "2/7", "3/7", "4/7"},
                               {"1/7", "2/7", "3/7"},
                               {"1/7", "2/7"},
                               {"1/7"}});
  const Tableau r(seed);
  const Box box = Box::cube(4, 1);
  CHECK(shifts_of(closure_bfs(r, box, 4)) == shifts_of(basis_N_in_box(r, box)));
}

TEST_CASE("intermediate index witnesses the sandwich") {
  const auto seed = chain_seed();

  // single nonzero coordinate collapses the sandwich
  CHECK(find_intermediate_index(*seed, make_shift(3, {0, 2, 0})) == std::pair<int, int>{2, 2});

  // z = (-1, 0, -1): the row-2 candidate breaks the lower inclusion, so the
  // search settles on (1,1)
  {
    const Shift z = make_shift(3, {-1, 0, -1});
    const auto [row, col] = find_intermediate_index(*seed, z);
    CHECK(std::pair<int, int>{row, col} == std::pair<int, int>{1, 1});
    Shift single(3);
    single.set(row, col, z(row, col));
    const auto base = omega_plus_set(Tableau(seed));
    const auto mid = omega_plus_set(Tableau(seed, single));
    CHECK(base.subset_of(mid));
    CHECK(mid.subset_of(omega_plus_set(Tableau(seed, z))));
  }

  // z = (-1, 0, -2): the row-2 move alone leaves the class, only (1,1) works
  CHECK(find_intermediate_index(*seed, make_shift(3, {-1, 0, -2})) == std::pair<int, int>{1, 1});

  CHECK_THROWS_AS(find_intermediate_index(*seed, Shift(3)), std::invalid_argument);
  // (1,0,0) moves Omega+ out of the zero class, violating the inclusion
  CHECK_THROWS_AS(find_intermediate_index(*seed, make_shift(3, {1, 0, 0})), std::domain_error);
  const auto nongeneric = make_seed({{"0", "1", "2"}, {"0", "1"}, {"0"}});
  CHECK_THROWS_AS(find_intermediate_index(*nongeneric, make_shift(3, {1, 0, 0})), std::domain_error);
}

TEST_CASE("intermediate index on random inputs") {
  std::mt19937_64 rng(31);
  int verified = 0;
  while (verified < 25) {
    const Seed seed = random_generic_seed(3, rng);
    const auto seed_ptr = std::make_shared<const Seed>(seed);
    const Shift z = random_shift(3, 3, rng);
    if (z.is_zero()) continue;
    const Tableau zero(seed_ptr);
    const Tableau moved(seed_ptr, z);
    if (!omega_plus_set(zero).subset_of(omega_plus_set(moved))) continue;

    const auto [row, col] = find_intermediate_index(seed, z);
    CHECK(z(row, col) != 0);
    Shift single(3);
    single.set(row, col, z(row, col));
    const auto mid = omega_plus_set(Tableau(seed_ptr, single));
    CHECK(omega_plus_set(zero).subset_of(mid));
    CHECK(mid.subset_of(omega_plus_set(moved)));
    ++verified;
  }
}

TEST_CASE("linked-value counts and the block count") {
  const auto seed = block6_seed();
  CHECK(d_pu(*seed, 3, 1) == 2);
  CHECK(d_pu(*seed, 3, 2) == 1);
  CHECK(d_pu(*seed, 2, 1) == 0);
  CHECK(block_count(*seed) == 6);

  CHECK(block_count(*chain_seed()) == 8);

  const auto free = irreducible_seed();
  for (int p = 2; p <= 3; ++p) {
    for (int u = 1; u <= p - 1; ++u) CHECK(d_pu(*free, p, u) == 0);
  }
  CHECK(block_count(*free) == 1);

  CHECK_THROWS_AS(d_pu(*seed, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(d_pu(*seed, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(block_count(*make_seed({{"0", "1", "2"}, {"0", "1"}, {"0"}})), std::domain_error);

  // below the top row a generic seed links at most one value
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Seed random = random_generic_seed(4, rng);
    for (int p = 2; p <= 3; ++p) {
      for (int u = 1; u <= p - 1; ++u) CHECK(d_pu(random, p, u) <= 1);
    }
  }
}

TEST_CASE("class census at fixed radius") {
  {
    const ClassPoset poset = enumerate_omega_classes(*block6_seed(), Box::cube(3, 3));
    CHECK(poset.nodes.size() == 6);
  }
  {
    const ClassPoset poset = enumerate_omega_classes(*chain_seed(), Box::cube(3, 3));
    CHECK(poset.nodes.size() == 8);
  }
  {
    const ClassPoset poset = enumerate_omega_classes(*irreducible_seed(), Box::cube(3, 2));
    CHECK(poset.nodes.size() == 1);
    CHECK(poset.edges.empty());
    CHECK(poset.nodes.front().omega_plus.empty());
  }
}

TEST_CASE("census nodes never exceed the block count and match at the sufficient box") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    const Seed seed = random_generic_seed(3, rng);
    const std::int64_t count = block_count(seed);

    const ClassPoset small = enumerate_omega_classes(seed, Box::cube(3, 1));
    CHECK(static_cast<std::int64_t>(small.nodes.size()) <= count);

    const ClassPoset full = enumerate_omega_classes(seed, sufficient_box(seed));
    CHECK(static_cast<std::int64_t>(full.nodes.size()) == count);
  }
}

TEST_CASE("classes partition the box") {
  const auto seed = block6_seed();
  const Box box = Box::cube(3, 2);
  const ClassPoset poset = enumerate_omega_classes(*seed, box);

  std::size_t total = 0;
  for (const auto& node : poset.nodes) {
    total += basis_I_in_box(Tableau(seed, node.representative), box).size();
  }
  CHECK(total == box.cell_count());

  for (std::size_t a = 0; a < poset.nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < poset.nodes.size(); ++b) {
      CHECK_FALSE(same_class(Tableau(seed, poset.nodes[a].representative),
                             Tableau(seed, poset.nodes[b].representative)));
    }
  }
}

TEST_CASE("poset edges are strict covers and ordering matches submodule containment") {
  const auto seed = block6_seed();
  const Box box = Box::cube(3, 3);
  const ClassPoset poset = enumerate_omega_classes(*seed, box);

  for (const auto& [a, b] : poset.edges) {
    CHECK(poset.nodes[a].omega_plus.subset_of(poset.nodes[b].omega_plus));
    CHECK(poset.nodes[a].omega_plus.size() < poset.nodes[b].omega_plus.size());
  }

  // containment of submodule bases is equivalent to reverse containment
  // of the Omega+ sets
  for (const auto& node_a : poset.nodes) {
    for (const auto& node_b : poset.nodes) {
      const auto basis_a = shifts_of(basis_N_in_box(Tableau(seed, node_a.representative), box));
      const auto basis_b = shifts_of(basis_N_in_box(Tableau(seed, node_b.representative), box));
      const bool basis_contained =
          std::includes(basis_b.begin(), basis_b.end(), basis_a.begin(), basis_a.end());
      CHECK(basis_contained == node_b.omega_plus.subset_of(node_a.omega_plus));
    }
  }
}

TEST_CASE("submodule membership delegates to the class test") {
  const auto seed = chain_seed();
  const Tableau zero(seed);
  CHECK(generates_same_submodule(zero, zero));
  CHECK(generates_same_submodule(zero, Tableau(seed, make_shift(3, {-1, 0, -1}))));
  CHECK_FALSE(generates_same_submodule(zero, Tableau(seed, make_shift(3, {1, 0, 0}))));
}

TEST_CASE("successors of basis members stay in the submodule") {
  const auto seed = block6_seed();
  const Box box = Box::cube(3, 1);
  const Tableau r(seed);
  const auto target = omega_plus_set(r);
  for (const auto& q : basis_N_in_box(r, box)) {
    for (const auto& next : one_step_successors(q, ActionMode::Generic)) {
      CHECK(target.subset_of(omega_plus_set(next)));
    }
  }
}
