#include "gt/action.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "gt/findim.hpp"

namespace gt {

namespace {

void check_ladder_row(int k, int n) {
  if (k < 1 || k > n - 1) {
    throw std::out_of_range("ladder row " + std::to_string(k) + " out of range for height " + std::to_string(n));
  }
}

std::vector<Rational> row_values(const Tableau& t, int k) {
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) values.push_back(t.entry(k, i));
  return values;
}

// prod_{j != i} (row[i] - row[j]); zero iff row k has repeated entries,
// which cannot happen for generic seeds or standard tableaux.
Rational within_row_denominator(const std::vector<Rational>& row, std::size_t i, int k) {
  Rational den(1);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j == i) continue;
    den *= row[i] - row[j];
  }
  if (den == 0) {
    throw std::domain_error("vanishing denominator: repeated entries in row " + std::to_string(k));
  }
  return den;
}

}  // namespace

GTVector act_raising(int k, const Tableau& t, ActionMode mode) {
  const int n = t.height();
  check_ladder_row(k, n);
  const auto row_k = row_values(t, k);
  const auto row_up = row_values(t, k + 1);

  GTVector out(t.seed());
  for (std::size_t i = 0; i < row_k.size(); ++i) {
    const Rational den = within_row_denominator(row_k, i, k);
    Rational num(1);
    for (const auto& upper : row_up) num *= row_k[i] - upper;
    if (num == 0) continue;
    const Tableau target = t.shifted(k, static_cast<int>(i) + 1, +1);
    if (mode == ActionMode::Standard && !is_standard(target)) continue;
    out.add_term(target.shift(), -num / den);
  }
  return out;
}

GTVector act_lowering(int k, const Tableau& t, ActionMode mode) {
  const int n = t.height();
  check_ladder_row(k, n);
  const auto row_k = row_values(t, k);
  const auto row_down = k >= 2 ? row_values(t, k - 1) : std::vector<Rational>{};

  GTVector out(t.seed());
  for (std::size_t i = 0; i < row_k.size(); ++i) {
    const Rational den = within_row_denominator(row_k, i, k);
    Rational num(1);
    for (const auto& lower : row_down) num *= row_k[i] - lower;
    if (num == 0) continue;
    const Tableau target = t.shifted(k, static_cast<int>(i) + 1, -1);
    if (mode == ActionMode::Standard && !is_standard(target)) continue;
    out.add_term(target.shift(), num / den);
  }
  return out;
}

Rational act_cartan(int k, const Tableau& t) {
  const int n = t.height();
  if (k < 1 || k > n) {
    throw std::out_of_range("cartan row " + std::to_string(k) + " out of range for height " + std::to_string(n));
  }
  Rational value(k - 1);
  for (int i = 1; i <= k; ++i) value += t.entry(k, i);
  for (int i = 1; i <= k - 1; ++i) value -= t.entry(k - 1, i);
  return value;
}

GTVector act(GeneratorIndex g, const GTVector& v, ActionMode mode) {
  const int n = v.height();
  if (g.i < 1 || g.i > n || g.j < 1 || g.j > n) {
    throw std::out_of_range("generator E_" + std::to_string(g.i) + "," + std::to_string(g.j) +
                            " out of range for height " + std::to_string(n));
  }
  GTVector out(v.seed());
  if (g.i == g.j) {
    for (const auto& [z, c] : v.terms()) {
      out.add_term(z, c * act_cartan(g.i, Tableau(v.seed(), z)));
    }
    return out;
  }
  if (g.j == g.i + 1) {
    for (const auto& [z, c] : v.terms()) {
      out.add_scaled(act_raising(g.i, Tableau(v.seed(), z), mode), c);
    }
    return out;
  }
  if (g.i == g.j + 1) {
    for (const auto& [z, c] : v.terms()) {
      out.add_scaled(act_lowering(g.j, Tableau(v.seed(), z), mode), c);
    }
    return out;
  }
  // E_ij = [E_{i,j-1}, E_{j-1,j}] for j > i+1, [E_{i,i-1}, E_{i-1,j}] for i > j+1
  const GeneratorIndex a = g.j > g.i + 1 ? GeneratorIndex{g.i, g.j - 1} : GeneratorIndex{g.i, g.i - 1};
  const GeneratorIndex b = g.j > g.i + 1 ? GeneratorIndex{g.j - 1, g.j} : GeneratorIndex{g.i - 1, g.j};
  GTVector result = act(a, act(b, v, mode), mode);
  result -= act(b, act(a, v, mode), mode);
  return result;
}

GTVector act(GeneratorIndex g, const Tableau& t, ActionMode mode) {
  return act(g, GTVector::basis_vector(t), mode);
}

GTVector act_word(std::span<const GeneratorIndex> word, const GTVector& v, ActionMode mode) {
  GTVector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act(*it, out, mode);
  return out;
}

GTVector commutator_defect(GeneratorIndex a, GeneratorIndex b, const GTVector& v, ActionMode mode) {
  GTVector defect = act(a, act(b, v, mode), mode);
  defect -= act(b, act(a, v, mode), mode);
  if (a.j == b.i) defect.add_scaled(act(GeneratorIndex{a.i, b.j}, v, mode), Rational(-1));
  if (b.j == a.i) defect.add_scaled(act(GeneratorIndex{b.i, a.j}, v, mode), Rational(1));
  return defect;
}

Rational gamma_eigenvalue(int m, int k, const Tableau& t) {
  const int n = t.height();
  if (m < 1 || m > n || k < 1 || k > m) {
    throw std::out_of_range("gamma index (m,k) = (" + std::to_string(m) + "," + std::to_string(k) +
                            ") out of range for height " + std::to_string(n));
  }
  const auto row = row_values(t, m);
  for (std::size_t i = 0; i < row.size(); ++i) {
    for (std::size_t j = i + 1; j < row.size(); ++j) {
      if (row[i] == row[j]) {
        throw std::domain_error("gamma eigenvalue undefined: repeated entries in row " + std::to_string(m));
      }
    }
  }
  Rational total(0);
  for (std::size_t i = 0; i < row.size(); ++i) {
    const Rational base = row[i] + (m - 1);
    Rational power(1);
    for (int e = 0; e < k; ++e) power *= base;
    Rational prod(1);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j == i) continue;
      const Rational diff = row[i] - row[j];
      prod *= (diff - 1) / diff;
    }
    total += power * prod;
  }
  return total;
}

GTVector act_gamma_generator(int m, int k, const GTVector& v, ActionMode mode) {
  const int n = v.height();
  if (m < 1 || m > n || k < 1 || k > m) {
    throw std::out_of_range("gamma index (m,k) = (" + std::to_string(m) + "," + std::to_string(k) +
                            ") out of range for height " + std::to_string(n));
  }
  GTVector out(v.seed());
  std::vector<int> tuple(static_cast<std::size_t>(k), 1);
  std::vector<GeneratorIndex> word(static_cast<std::size_t>(k));
  while (true) {
    for (std::size_t a = 0; a < word.size(); ++a) {
      word[a] = GeneratorIndex{tuple[a], tuple[(a + 1) % word.size()]};
    }
    out += act_word(word, v, mode);

    std::size_t pos = 0;
    while (pos < tuple.size()) {
      if (++tuple[pos] <= m) break;
      tuple[pos] = 1;
      ++pos;
    }
    if (pos == tuple.size()) break;
  }
  return out;
}

}  // namespace gt
