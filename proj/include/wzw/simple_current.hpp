#pragma once

// Z_n simple-current orbits and the D-type modular invariant at level k = n' n.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "wzw/errors.hpp"
#include "wzw/modular_data.hpp"
#include "wzw/weights.hpp"

namespace wzw {

struct OrbitData {
  Weight representative;        // lexicographically smallest member
  std::vector<Weight> members;  // w^j(lambda) for j = 0..l-1
  int l = 0;                    // smallest l > 0 with w^l(lambda) = lambda
  int pieces = 0;               // n / l
  double piece_dim = 0.0;       // d_lambda / pieces
};

/// Smallest i >= 1 with w^i(lambda) = lambda; always divides n.
inline int stabilizer_exponent(const TheoryParams& tp, const Weight& w) {
  for (int i = 1; i < tp.n(); ++i) {
    if (tp.omega(w, i) == w) return i;
  }
  return tp.n();
}

inline OrbitData orbit_structure(const ModularData& md, const Weight& w) {
  const TheoryParams& tp = md.params();
  OrbitData o;
  o.l = stabilizer_exponent(tp, w);
  for (int j = 0; j < o.l; ++j) o.members.push_back(tp.omega(w, j));
  o.representative = *std::min_element(o.members.begin(), o.members.end());
  o.pieces = tp.n() / o.l;
  o.piece_dim = md.qdims()[tp.index(w)] / o.pieces;
  return o;
}

/// All orbits, ordered by representative.
inline std::vector<OrbitData> all_orbits(const ModularData& md) {
  const TheoryParams& tp = md.params();
  std::vector<OrbitData> out;
  std::vector<bool> seen(tp.size(), false);
  for (std::size_t i = 0; i < tp.size(); ++i) {
    if (seen[i]) continue;
    OrbitData o = orbit_structure(md, tp[i]);
    for (const Weight& w : o.members) seen[tp.index(w)] = true;
    out.push_back(std::move(o));
  }
  return out;
}

/// Rejects (n, n') outside the supported family: n' >= 3, and n' even when n is even.
inline void validate_simple_current_level(int n, int nprime) {
  if (n < 2) throw ValidationError("rank n must be >= 2, got " + std::to_string(n));
  if (nprime < 3) throw ValidationError("n' must be >= 3, got " + std::to_string(nprime));
  if (n % 2 == 0 && nprime % 2 != 0) {
    throw ValidationError("n' must be even when n is even (n=" + std::to_string(n) + ", n'=" + std::to_string(nprime) +
                          ")");
  }
}

struct SimpleCurrentData {
  int nprime = 0;
  Eigen::MatrixXi Z;
  std::vector<std::pair<Weight, int>> exponents;  // mu with multiplicity Z_mumu > 0
  std::vector<OrbitData> orbits;
  double zs_residual = 0.0;  // max |ZS - SZ|
  double zt_residual = 0.0;  // max |ZT - TZ|
};

/// Z_lm = [col(l) = 0 mod n] * #{ j in 0..n-1 : w^j(l) = m }, validated by
/// commutation with S and T.
inline SimpleCurrentData build_z(const ModularData& md, int nprime) {
  const TheoryParams& tp = md.params();
  const int n = tp.n();
  validate_simple_current_level(n, nprime);
  if (tp.k() != nprime * n) {
    throw ValidationError("level k=" + std::to_string(tp.k()) + " is not n' n = " + std::to_string(nprime * n));
  }
  const auto m = static_cast<Eigen::Index>(tp.size());
  SimpleCurrentData sc;
  sc.nprime = nprime;
  sc.Z = Eigen::MatrixXi::Zero(m, m);
  for (std::size_t a = 0; a < tp.size(); ++a) {
    if (tp.color(tp[a]) != 0) continue;
    for (int j = 0; j < n; ++j) sc.Z(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(tp.omega_index(a, j))) += 1;
  }
  for (Eigen::Index a = 0; a < m; ++a) {
    if (sc.Z(a, a) > 0) sc.exponents.emplace_back(tp[static_cast<std::size_t>(a)], sc.Z(a, a));
  }
  sc.orbits = all_orbits(md);

  const ComplexMatrix z = sc.Z.cast<Complex>();
  const ComplexMatrix t = md.T_matrix();
  sc.zs_residual = (z * md.S() - md.S() * z).cwiseAbs().maxCoeff();
  sc.zt_residual = (z * t - t * z).cwiseAbs().maxCoeff();
  if (sc.Z(0, 0) != 1) throw ConsistencyError("Z_{00} != 1");
  if (sc.zs_residual > md.tolerances().general || sc.zt_residual > md.tolerances().general) {
    throw ConsistencyError("Z does not commute with S and T (|ZS-SZ|=" + std::to_string(sc.zs_residual) +
                           ", |ZT-TZ|=" + std::to_string(sc.zt_residual) + ")");
  }
  return sc;
}

/// <a_l, a_m>: the number of pieces of l when m lies in the orbit of l, else 0.
inline int induced_overlap(const TheoryParams& tp, int nprime, const Weight& l, const Weight& m) {
  validate_simple_current_level(tp.n(), nprime);
  if (tp.k() != nprime * tp.n()) throw ValidationError("level k is not n' n");
  tp.index(l);
  tp.index(m);
  const int stab = stabilizer_exponent(tp, l);
  for (int j = 0; j < stab; ++j) {
    if (tp.omega(l, j) == m) return tp.n() / stab;
  }
  return 0;
}

}  // namespace wzw
