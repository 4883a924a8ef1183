#pragma once

// Test-only reference computations. None of these share a code path with
// the library routine they check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <utility>
#include <vector>

#include "wzw/weights.hpp"

namespace wzw::oracle {

using cd = std::complex<double>;

/// SU(2)_k: S_ab = sqrt(2/(k+2)) sin((a+1)(b+1) pi / (k+2)).
inline double su2_s(int k, int a, int b) {
  return std::sqrt(2.0 / (k + 2)) * std::sin((a + 1) * (b + 1) * std::numbers::pi / (k + 2));
}

/// Quadratic Casimir from partition rows: sum r_a (r_a - 2a + n + 1) - |r|^2 / n,
/// halved and divided by (k+n).
inline double casimir_h(int n, int k, const std::vector<int>& rows) {
  double sum = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double r = rows[i];
    const double a = static_cast<double>(i) + 1.0;
    sum += r * (r - 2.0 * a + n + 1.0);
    total += r;
  }
  sum -= total * total / n;
  return sum / (2.0 * (k + n));
}

/// Weyl orbit of a regular weight in the Dynkin basis, generated by simple
/// reflections s_i(x) = x - x_i alpha_i. Each element carries det(w).
inline std::vector<std::pair<std::vector<long>, int>> weyl_orbit(const std::vector<long>& start) {
  const std::size_t r = start.size();
  std::map<std::vector<long>, int> seen{{start, 1}};
  std::vector<std::vector<long>> frontier{start};
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& x : frontier) {
      const int sign = seen[x];
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<long> y = x;
        // alpha_i in the Dynkin basis is row i of the Cartan matrix.
        const long c = x[i];
        y[i] -= 2 * c;
        if (i > 0) y[i - 1] += c;
        if (i + 1 < r) y[i + 1] += c;
        if (seen.emplace(y, -sign).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// (x, y) with the inverse Cartan matrix, scaled by n: sum x_i y_j min(i,j)(n-max(i,j)).
inline long scaled_form(int n, const std::vector<long>& x, const std::vector<long>& y) {
  long t = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      const long a = static_cast<long>(std::min(i, j)) + 1;
      const long b = static_cast<long>(std::max(i, j)) + 1;
      t += x[i] * y[j] * a * (n - b);
    }
  }
  return t;
}

/// Kac-Peterson S with its closed-form modulus 1/(sqrt(n) (k+n)^{(n-1)/2}),
/// as a sum over the Weyl orbit of mu + rho; global phase fixed by S_00 > 0.
inline std::vector<std::vector<cd>> weyl_sum_s(const TheoryParams& tp) {
  const int n = tp.n();
  const int kappa = tp.kappa();
  const std::size_t m = tp.size();
  auto shifted = [&](const Weight& w) {
    std::vector<long> x(w.labels().begin(), w.labels().end());
    for (auto& e : x) e += 1;
    return x;
  };
  const double modulus = 1.0 / (std::sqrt(static_cast<double>(n)) * std::pow(static_cast<double>(kappa), (n - 1) / 2.0));
  std::vector<std::vector<cd>> s(m, std::vector<cd>(m));
  std::vector<std::vector<std::pair<std::vector<long>, int>>> orbits;
  for (const Weight& w : tp.alcove()) orbits.push_back(weyl_orbit(shifted(w)));
  for (std::size_t a = 0; a < m; ++a) {
    const auto la = shifted(tp[a]);
    for (std::size_t b = 0; b < m; ++b) {
      cd sum = 0.0;
      for (const auto& [wx, sign] : orbits[b]) {
        const double phase = -2.0 * std::numbers::pi * static_cast<double>(scaled_form(n, la, wx)) / (n * kappa);
        sum += static_cast<double>(sign) * std::polar(1.0, phase);
      }
      s[a][b] = modulus * sum;
    }
  }
  const cd fix = std::conj(s[0][0]) / std::abs(s[0][0]);
  for (auto& row : s)
    for (auto& e : row) e *= fix;
  return s;
}

}  // namespace wzw::oracle
