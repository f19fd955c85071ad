#include "gt/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace gt {

namespace {

void check_height(int n) {
  if (n < 2) throw std::invalid_argument("lattice height must be at least 2, got " + std::to_string(n));
}

[[noreturn]] void bounds_error(const char* what, int k, int i, int n) {
  throw std::out_of_range(std::string(what) + ": index (" + std::to_string(k) + "," + std::to_string(i) +
                          ") out of range for height " + std::to_string(n));
}

}  // namespace

std::size_t shift_coord_count(int n) {
  return static_cast<std::size_t>(n) * (n - 1) / 2;
}

std::size_t shift_coord_index(int n, int k, int i) {
  if (k < 1 || k > n - 1 || i < 1 || i > k) bounds_error("shift coordinate", k, i, n);
  // rows n-1, n-2, ..., k precede; this row contributes i-1
  const std::size_t before = shift_coord_count(n) - static_cast<std::size_t>(k) * (k + 1) / 2;
  return before + static_cast<std::size_t>(i - 1);
}

Seed Seed::from_rows_top_down(std::vector<std::vector<Rational>> rows) {
  const int n = static_cast<int>(rows.size());
  check_height(n);
  Seed seed;
  seed.n_ = n;
  seed.rows_.resize(n);
  for (int k = n; k >= 1; --k) {
    auto& row = rows[static_cast<std::size_t>(n - k)];
    if (static_cast<int>(row.size()) != k) {
      throw std::invalid_argument("seed row " + std::to_string(k) + " must have " + std::to_string(k) +
                                  " entries, got " + std::to_string(row.size()));
    }
    seed.rows_[static_cast<std::size_t>(k - 1)] = std::move(row);
  }
  return seed;
}

const Rational& Seed::entry(int k, int i) const {
  if (k < 1 || k > n_ || i < 1 || i > k) bounds_error("seed entry", k, i, n_);
  return rows_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)];
}

const std::vector<Rational>& Seed::row(int k) const {
  if (k < 1 || k > n_) throw std::out_of_range("seed row " + std::to_string(k) + " out of range");
  return rows_[static_cast<std::size_t>(k - 1)];
}

bool is_generic(const Seed& seed) {
  for (int k = 1; k <= seed.height() - 1; ++k) {
    for (int i = 1; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) {
        if (is_integer(seed.entry(k, i) - seed.entry(k, j))) return false;
      }
    }
  }
  return true;
}

Shift Shift::delta(int n, int k, int i) {
  Shift z(n);
  z.set(k, i, 1);
  return z;
}

Shift Shift::from_coords(int n, std::vector<std::int64_t> coords) {
  check_height(n);
  if (coords.size() != shift_coord_count(n)) {
    throw std::invalid_argument("shift for height " + std::to_string(n) + " needs " +
                                std::to_string(shift_coord_count(n)) + " coordinates, got " +
                                std::to_string(coords.size()));
  }
  Shift z(n);
  z.coords_ = std::move(coords);
  return z;
}

std::int64_t Shift::operator()(int k, int i) const {
  if (k == n_ && i >= 1 && i <= n_) return 0;  // pinned top row
  return coords_[shift_coord_index(n_, k, i)];
}

void Shift::set(int k, int i, std::int64_t value) {
  coords_[shift_coord_index(n_, k, i)] = value;
}

bool Shift::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t Shift::l1_norm() const {
  std::int64_t total = 0;
  for (std::int64_t c : coords_) total += std::abs(c);
  return total;
}

std::int64_t Shift::linf_norm() const {
  std::int64_t best = 0;
  for (std::int64_t c : coords_) best = std::max<std::int64_t>(best, std::abs(c));
  return best;
}

Shift& Shift::operator+=(const Shift& other) {
  if (n_ != other.n_) throw std::invalid_argument("shift height mismatch");
  for (std::size_t idx = 0; idx < coords_.size(); ++idx) coords_[idx] += other.coords_[idx];
  return *this;
}

Shift& Shift::operator-=(const Shift& other) {
  if (n_ != other.n_) throw std::invalid_argument("shift height mismatch");
  for (std::size_t idx = 0; idx < coords_.size(); ++idx) coords_[idx] -= other.coords_[idx];
  return *this;
}

Shift Shift::operator-() const {
  Shift z(*this);
  for (auto& c : z.coords_) c = -c;
  return z;
}

namespace {
const SeedPtr& require_seed(const SeedPtr& seed) {
  if (!seed) throw std::invalid_argument("tableau needs a seed");
  return seed;
}
}  // namespace

Tableau::Tableau(SeedPtr seed) : seed_(std::move(seed)), shift_(require_seed(seed_)->height()) {}

Tableau::Tableau(SeedPtr seed, Shift shift) : seed_(std::move(seed)), shift_(std::move(shift)) {
  require_seed(seed_);
  if (shift_.height() != seed_->height()) {
    throw std::invalid_argument("shift height does not match seed");
  }
}

Rational Tableau::entry(int p, int s) const {
  const Rational& base = seed_->entry(p, s);  // validates bounds
  if (p == seed_->height()) return base;
  return base + shift_(p, s);
}

Tableau Tableau::shifted_by(const Shift& delta) const {
  return Tableau(seed_, shift_ + delta);
}

Tableau Tableau::shifted(int k, int i, std::int64_t amount) const {
  Shift z = shift_;
  z.set(k, i, z(k, i) + amount);
  return Tableau(seed_, std::move(z));
}

bool Tableau::same_seed(const Tableau& other) const {
  return seed_ == other.seed_ || *seed_ == *other.seed_;
}

bool Tableau::operator==(const Tableau& other) const {
  return same_seed(other) && shift_ == other.shift_;
}

GTVector::GTVector(SeedPtr seed) : seed_(std::move(seed)) {
  if (!seed_) throw std::invalid_argument("vector needs a seed");
}

GTVector GTVector::basis_vector(const Tableau& t, Rational coeff) {
  GTVector v(t.seed());
  v.add_term(t.shift(), coeff);
  return v;
}

Rational GTVector::coeff(const Shift& z) const {
  const auto it = terms_.find(z);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Shift> GTVector::support() const {
  std::vector<Shift> shifts;
  shifts.reserve(terms_.size());
  for (const auto& [z, c] : terms_) shifts.push_back(z);
  return shifts;
}

void GTVector::add_term(const Shift& z, const Rational& c) {
  if (z.height() != seed_->height()) throw std::invalid_argument("term shift height does not match seed");
  if (c == 0) return;
  const auto [it, inserted] = terms_.try_emplace(z, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GTVector::add_scaled(const GTVector& other, const Rational& c) {
  if (seed_ != other.seed_ && !(*seed_ == *other.seed_)) {
    throw std::invalid_argument("vectors over different seeds");
  }
  if (c == 0) return;
  for (const auto& [z, coeff] : other.terms_) add_term(z, coeff * c);
}

GTVector& GTVector::operator+=(const GTVector& other) {
  add_scaled(other, Rational(1));
  return *this;
}

GTVector& GTVector::operator-=(const GTVector& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

GTVector& GTVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [z, coeff] : terms_) coeff *= c;
  return *this;
}

bool GTVector::operator==(const GTVector& other) const {
  return terms_ == other.terms_;
}

}  // namespace gt
