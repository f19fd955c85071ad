#include "gt/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace gt {

namespace {

void require_generic(const Seed& seed, const char* where) {
  if (!is_generic(seed)) throw std::domain_error(std::string(where) + ": seed is not generic");
}

}  // namespace

Box::Box(int n, std::vector<std::pair<std::int64_t, std::int64_t>> bounds)
    : n_(n), bounds_(std::move(bounds)) {
  if (bounds_.size() != shift_coord_count(n)) {
    throw std::invalid_argument("box for height " + std::to_string(n) + " needs " +
                                std::to_string(shift_coord_count(n)) + " intervals");
  }
  for (const auto& [lo, hi] : bounds_) {
    if (lo > hi) throw std::invalid_argument("box interval with lower bound above upper bound");
  }
}

Box Box::cube(int n, std::int64_t radius) {
  if (radius < 0) throw std::invalid_argument("box radius must be non-negative");
  return Box(n, std::vector<std::pair<std::int64_t, std::int64_t>>(shift_coord_count(n), {-radius, radius}));
}

Box Box::around(const Shift& center, std::int64_t radius) {
  if (radius < 0) throw std::invalid_argument("box radius must be non-negative");
  std::vector<std::pair<std::int64_t, std::int64_t>> bounds;
  bounds.reserve(center.coord_count());
  for (std::int64_t c : center.coords()) bounds.emplace_back(c - radius, c + radius);
  return Box(center.height(), std::move(bounds));
}

const std::pair<std::int64_t, std::int64_t>& Box::bounds(std::size_t idx) const {
  return bounds_.at(idx);
}

bool Box::contains(const Shift& z) const {
  if (z.height() != n_) return false;
  for (std::size_t idx = 0; idx < bounds_.size(); ++idx) {
    if (z.coords()[idx] < bounds_[idx].first || z.coords()[idx] > bounds_[idx].second) return false;
  }
  return true;
}

Box Box::inflated(std::int64_t padding) const {
  if (padding < 0) throw std::invalid_argument("padding must be non-negative");
  auto bounds = bounds_;
  for (auto& [lo, hi] : bounds) {
    lo -= padding;
    hi += padding;
  }
  return Box(n_, std::move(bounds));
}

std::uint64_t Box::cell_count() const {
  std::uint64_t total = 1;
  for (const auto& [lo, hi] : bounds_) {
    const std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
    if (total > std::numeric_limits<std::uint64_t>::max() / width) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= width;
  }
  return total;
}

void Box::for_each(const std::function<void(std::span<const std::int64_t>)>& fn) const {
  std::vector<std::int64_t> coords;
  coords.reserve(bounds_.size());
  for (const auto& [lo, hi] : bounds_) coords.push_back(lo);
  while (true) {
    fn(std::span<const std::int64_t>(coords));
    // lexicographic successor: last coordinate moves fastest
    std::size_t idx = coords.size();
    while (idx > 0 && coords[idx - 1] == bounds_[idx - 1].second) {
      coords[idx - 1] = bounds_[idx - 1].first;
      --idx;
    }
    if (idx == 0) return;
    ++coords[idx - 1];
  }
}

std::vector<Shift> Box::shifts() const {
  std::vector<Shift> out;
  for_each([&](std::span<const std::int64_t> coords) {
    out.push_back(Shift::from_coords(n_, std::vector<std::int64_t>(coords.begin(), coords.end())));
  });
  return out;
}

std::vector<Tableau> basis_N_in_box(const Tableau& r, const Box& box) {
  require_generic(r.seed_ref(), "basis_N_in_box");
  const OmegaTable table(r.seed_ref());
  const std::uint64_t target = table.plus_mask(r.shift());
  std::vector<Tableau> out;
  box.for_each([&](std::span<const std::int64_t> coords) {
    if ((table.plus_mask(coords) & target) == target) {
      out.push_back(r.with_shift(Shift::from_coords(box.height(), {coords.begin(), coords.end()})));
    }
  });
  return out;
}

std::vector<Tableau> basis_I_in_box(const Tableau& r, const Box& box) {
  require_generic(r.seed_ref(), "basis_I_in_box");
  const OmegaTable table(r.seed_ref());
  const std::uint64_t target = table.plus_mask(r.shift());
  std::vector<Tableau> out;
  box.for_each([&](std::span<const std::int64_t> coords) {
    if (table.plus_mask(coords) == target) {
      out.push_back(r.with_shift(Shift::from_coords(box.height(), {coords.begin(), coords.end()})));
    }
  });
  return out;
}

std::set<Shift> one_step_successor_shifts(const Tableau& t, ActionMode mode) {
  const int n = t.height();
  std::set<Shift> out;
  for (int k = 1; k <= n - 1; ++k) {
    const GTVector raised = act_raising(k, t, mode);
    for (const auto& [z, c] : raised.terms()) out.insert(z);
    const GTVector lowered = act_lowering(k, t, mode);
    for (const auto& [z, c] : lowered.terms()) out.insert(z);
  }
  for (int k = 1; k <= n; ++k) {
    if (act_cartan(k, t) != 0) {
      out.insert(t.shift());
      break;
    }
  }
  return out;
}

std::vector<Tableau> one_step_successors(const Tableau& t, ActionMode mode) {
  std::vector<Tableau> out;
  for (const auto& z : one_step_successor_shifts(t, mode)) out.push_back(t.with_shift(z));
  return out;
}

std::vector<Tableau> closure_bfs(const Tableau& r, const Box& box, std::int64_t padding) {
  require_generic(r.seed_ref(), "closure_bfs");
  if (padding < 0) throw std::invalid_argument("closure_bfs: padding must be non-negative");
  const Box region = box.inflated(padding);

  std::set<Shift> visited;
  std::deque<Shift> frontier;
  if (region.contains(r.shift())) {
    visited.insert(r.shift());
    frontier.push_back(r.shift());
  }
  while (!frontier.empty()) {
    const Shift current = frontier.front();
    frontier.pop_front();
    for (const auto& next : one_step_successor_shifts(r.with_shift(current), ActionMode::Generic)) {
      if (!region.contains(next) || visited.count(next) != 0) continue;
      visited.insert(next);
      frontier.push_back(next);
    }
  }

  std::vector<Tableau> out;
  for (const auto& z : visited) {
    if (box.contains(z)) out.push_back(r.with_shift(z));
  }
  return out;
}

std::pair<int, int> find_intermediate_index(const Seed& seed, const Shift& z) {
  require_generic(seed, "find_intermediate_index");
  if (z.height() != seed.height()) throw std::invalid_argument("find_intermediate_index: height mismatch");
  if (z.is_zero()) throw std::invalid_argument("find_intermediate_index: z must be nonzero");

  const OmegaTable table(seed);
  const std::uint64_t base = table.plus_mask(Shift(seed.height()));
  const std::uint64_t target = table.plus_mask(z);
  if ((base & target) != base) {
    throw std::domain_error("find_intermediate_index: Omega+ inclusion precondition fails");
  }

  const int n = seed.height();
  for (int k = n - 1; k >= 1; --k) {
    for (int i = 1; i <= k; ++i) {
      const std::int64_t value = z(k, i);
      if (value == 0) continue;
      Shift single(n);
      single.set(k, i, value);
      const std::uint64_t mid = table.plus_mask(single);
      if ((base & mid) == base && (mid & target) == mid) return {k, i};
    }
  }
  throw std::logic_error("find_intermediate_index: no coordinate satisfies the sandwich inclusions");
}

int d_pu(const Seed& seed, int p, int u) {
  const int n = seed.height();
  if (p < 2 || p > n || u < 1 || u > p - 1) {
    throw std::out_of_range("d_pu index (" + std::to_string(p) + "," + std::to_string(u) +
                            ") out of range for height " + std::to_string(n));
  }
  const Tableau zero(std::make_shared<const Seed>(seed));
  std::set<Rational> values;
  for (int s = 1; s <= p; ++s) {
    if (is_integer(omega_value(zero, {p, s, u}))) values.insert(zero.entry(p, s));
  }
  return static_cast<int>(values.size());
}

std::int64_t block_count(const Seed& seed) {
  require_generic(seed, "block_count");
  std::int64_t count = 1;
  for (int p = 2; p <= seed.height(); ++p) {
    for (int u = 1; u <= p - 1; ++u) count *= d_pu(seed, p, u) + 1;
  }
  return count;
}

ClassPoset enumerate_omega_classes(const Seed& seed, const Box& box) {
  if (box.height() != seed.height()) throw std::invalid_argument("enumerate_omega_classes: height mismatch");
  const OmegaTable table(seed);

  std::unordered_map<std::uint64_t, Shift> reps;  // first hit = lexicographically least
  box.for_each([&](std::span<const std::int64_t> coords) {
    const std::uint64_t mask = table.plus_mask(coords);
    if (reps.find(mask) == reps.end()) {
      reps.emplace(mask, Shift::from_coords(box.height(), {coords.begin(), coords.end()}));
    }
  });

  std::vector<std::pair<std::uint64_t, Shift>> classes(reps.begin(), reps.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });

  ClassPoset poset;
  for (const auto& [mask, rep] : classes) {
    poset.nodes.push_back(ClassNode{table.set_from_mask(mask), rep});
  }
  const auto strictly_below = [&](std::size_t a, std::size_t b) {
    return classes[a].first != classes[b].first &&
           (classes[a].first & classes[b].first) == classes[a].first;
  };
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = 0; b < classes.size(); ++b) {
      if (!strictly_below(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < classes.size() && cover; ++c) {
        if (c == a || c == b) continue;
        if (strictly_below(a, c) && strictly_below(c, b)) cover = false;
      }
      if (cover) poset.edges.emplace_back(a, b);
    }
  }
  std::sort(poset.edges.begin(), poset.edges.end());
  return poset;
}

bool generates_same_submodule(const Tableau& a, const Tableau& b) {
  return same_class(a, b);
}

Box sufficient_box(const Seed& seed) {
  require_generic(seed, "sufficient_box");
  const int n = seed.height();
  const OmegaTable table(seed);

  std::vector<std::int64_t> bound(shift_coord_count(n), 0);
  // pair (p,u) is controlled by coordinate (p-1,u); rows descend so the
  // upper row's bound is known when its lower mover is processed
  for (int k = n - 1; k >= 1; --k) {
    for (int u = 1; u <= k; ++u) {
      const int p = k + 1;
      std::int64_t value = 0;
      if (p == n) {
        for (const auto& link : table.links()) {
          if (link.triple.p == p && link.triple.u == u) {
            value = std::max(value, std::abs(link.base) + 1);
          }
        }
      } else {
        int found = 0;
        for (const auto& link : table.links()) {
          if (link.triple.p == p && link.triple.u == u) {
            ++found;
            value = std::abs(link.base) + bound[shift_coord_index(n, p, link.triple.s)] + 1;
          }
        }
        if (found > 1) throw std::logic_error("generic row with two integer-linked entries");
      }
      bound[shift_coord_index(n, k, u)] = value;
    }
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> bounds;
  bounds.reserve(bound.size());
  for (std::int64_t b : bound) bounds.emplace_back(-b, b);
  return Box(n, std::move(bounds));
}

}  // namespace gt
