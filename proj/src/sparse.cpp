#include "hensel/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace hensel {

Integer rank(const SparseMatrix<Rational>& a) {
  // Rows as sparse maps col -> value; eliminate column by column.
  std::map<Integer, std::map<Integer, Rational>> rows;
  for (const auto& [c, col] : a.columns())
    for (const auto& [r, v] : col) rows[r][c] = v;

  std::vector<std::map<Integer, Rational>> pending;
  pending.reserve(rows.size());
  for (auto& [r, row] : rows) pending.push_back(std::move(row));

  Integer rk = 0;
  while (!pending.empty()) {
    // Pivot: the row whose leading column is smallest, shortest among ties.
    auto pivot_it = std::min_element(pending.begin(), pending.end(), [](const auto& x, const auto& y) {
      if (x.begin()->first != y.begin()->first) return x.begin()->first < y.begin()->first;
      return x.size() < y.size();
    });
    auto pivot = std::move(*pivot_it);
    pending.erase(pivot_it);
    ++rk;
    const Integer lead = pivot.begin()->first;
    const Rational lead_val = pivot.begin()->second;
    std::vector<std::map<Integer, Rational>> next;
    next.reserve(pending.size());
    for (auto& row : pending) {
      auto it = row.find(lead);
      if (it != row.end()) {
        const Rational factor = it->second / lead_val;
        for (const auto& [c, v] : pivot) {
          Rational& slot = row[c];
          slot -= factor * v;
          if (slot == 0) row.erase(c);
        }
      }
      if (!row.empty()) next.push_back(std::move(row));
    }
    pending = std::move(next);
  }
  return rk;
}

Rational max_abs_entry(const SparseMatrix<Rational>& a) {
  Rational best = 0;
  for (const auto& [c, col] : a.columns())
    for (const auto& [r, v] : col)
      if (abs(v) > best) best = abs(v);
  return best;
}

namespace {

template <class S, class Mag>
double power_iteration(const SparseMatrix<S>& a, int iterations, Mag to_value) {
  if (a.empty()) return 0.0;
  std::vector<Integer> col_labels;
  for (const auto& [c, col] : a.columns()) col_labels.push_back(c);
  std::map<Integer, std::size_t> col_index;
  for (std::size_t i = 0; i < col_labels.size(); ++i) col_index[col_labels[i]] = i;

  // Fixed seed: the estimate is reproducible.
  std::mt19937_64 rng(0x5eed);
  std::vector<Complex> x(col_labels.size());
  for (auto& v : x) v = {static_cast<double>(rng() % 1000 + 1) / 1000.0, 0.0};

  double sigma = 0.0;
  for (int it = 0; it < iterations; ++it) {
    double nx = 0.0;
    for (auto& v : x) nx += std::norm(v);
    nx = std::sqrt(nx);
    if (nx == 0.0) return 0.0;
    for (auto& v : x) v /= nx;
    std::map<Integer, Complex> y;  // y = A x
    for (const auto& [c, col] : a.columns())
      for (const auto& [r, v] : col) y[r] += to_value(v) * x[col_index[c]];
    double ny = 0.0;
    for (const auto& [r, v] : y) ny += std::norm(v);
    sigma = std::sqrt(ny);
    std::vector<Complex> z(x.size(), Complex{0.0, 0.0});  // z = A^* y
    for (const auto& [c, col] : a.columns())
      for (const auto& [r, v] : col) z[col_index[c]] += std::conj(to_value(v)) * y[r];
    x = std::move(z);
  }
  return sigma;
}

}  // namespace

double estimate_norm(const SparseMatrix<Rational>& a, int iterations) {
  return power_iteration(a, iterations, [](const Rational& v) { return Complex{v.get_d(), 0.0}; });
}

double estimate_norm(const SparseMatrix<Complex>& a, int iterations) {
  return power_iteration(a, iterations, [](const Complex& v) { return v; });
}

double max_abs_difference(const SparseMatrix<Complex>& a, const SparseMatrix<Complex>& b) {
  double worst = 0.0;
  for (const auto& [c, col] : a.columns())
    for (const auto& [r, v] : col) worst = std::max(worst, std::abs(v - b.get(r, c)));
  for (const auto& [c, col] : b.columns())
    for (const auto& [r, v] : col) worst = std::max(worst, std::abs(v - a.get(r, c)));
  return worst;
}

}  // namespace hensel
