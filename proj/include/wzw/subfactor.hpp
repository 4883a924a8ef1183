#pragma once

// Maximality classification of lambda(M) in M, prime-power consistency
// scans, and numeric evidence for the 2n intermediate subfactors of a_u.
// Everything here is a finite shadow of operator-level statements: the
// outputs are evidence, not proofs.

#include <cmath>
#include <complex>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wzw/errors.hpp"
#include "wzw/fusion.hpp"
#include "wzw/modular_data.hpp"
#include "wzw/simple_current.hpp"
#include "wzw/weights.hpp"

namespace wzw {

enum class Verdict { Maximal, NotMaximal, Undetermined };

enum class MaximalityRule { FixedPoint, GenericLevel, SvNonzero, SpecialCase_k_n_2, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Maximal: return "Maximal";
    case Verdict::NotMaximal: return "NotMaximal";
    default: return "Undetermined";
  }
}

inline const char* to_string(MaximalityRule r) {
  switch (r) {
    case MaximalityRule::FixedPoint: return "FixedPoint";
    case MaximalityRule::GenericLevel: return "GenericLevel";
    case MaximalityRule::SvNonzero: return "SvNonzero";
    case MaximalityRule::SpecialCase_k_n_2: return "SpecialCase_k_n_2";
    default: return "Inconclusive";
  }
}

struct MaximalityReport {
  Weight weight;
  Verdict verdict = Verdict::Undetermined;
  MaximalityRule reason = MaximalityRule::Inconclusive;
  Complex s_v_value;  // S_{v, lambda}
};

struct FixedPointResult {
  int exponent = 0;        // smallest i >= 1 with w^i(lambda) = lambda
  bool nontrivial = false;  // exponent < n
};

inline FixedPointResult fixed_point_test(const TheoryParams& tp, const Weight& w) {
  tp.index(w);
  const int e = stabilizer_exponent(tp, w);
  return {e, e < tp.n()};
}

/// True at the levels k in {n-2, n, n+2}, where only S_{v lambda} != 0 decides.
inline bool exceptional_level(int n, int k) { return k == n - 2 || k == n || k == n + 2; }

inline MaximalityReport is_maximal(const ModularData& md, const Weight& w) {
  const TheoryParams& tp = md.params();
  const std::size_t idx = tp.index(w);
  MaximalityReport r;
  r.weight = w;
  r.s_v_value = md.S(tp.index(tp.v()), idx);
  if (tp.k() == 2 && tp.n() == 2) {
    r.verdict = Verdict::Maximal;
    r.reason = MaximalityRule::SpecialCase_k_n_2;
  } else if (fixed_point_test(tp, w).nontrivial) {
    r.verdict = Verdict::NotMaximal;
    r.reason = MaximalityRule::FixedPoint;
  } else if (!exceptional_level(tp.n(), tp.k())) {
    r.verdict = Verdict::Maximal;
    r.reason = MaximalityRule::GenericLevel;
  } else if (!md.s_is_zero(tp.index(tp.v()), idx)) {
    r.verdict = Verdict::Maximal;
    r.reason = MaximalityRule::SvNonzero;
  } else {
    r.verdict = Verdict::Undetermined;
    r.reason = MaximalityRule::Inconclusive;
  }
  return r;
}

inline std::vector<MaximalityReport> maximality_table(const ModularData& md) {
  std::vector<MaximalityReport> out;
  out.reserve(md.size());
  for (const Weight& w : md.params().alcove()) out.push_back(is_maximal(md, w));
  return out;
}

/// Returns p if x = p^e for a prime p and e >= 1, else 0.
inline int prime_power_base(int x) {
  if (x < 2) return 0;
  for (int p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      return x == 1 ? p : 0;
    }
  }
  return x;
}

struct PrimePowerReport {
  int prime = 0;
  std::vector<Weight> s_v_zeros;       // {lambda : S_{v lambda} = 0}
  std::vector<Weight> fixed_points;    // {lambda : w^i(lambda) = lambda, 1 <= i < n}
  std::vector<Weight> counterexamples;  // symmetric difference

  bool consistent() const { return counterexamples.empty(); }
};

/// With k + n a prime power, S_{v lambda} vanishes exactly on the nontrivial
/// fixed points of the simple-current action. Scans every alcove weight.
inline PrimePowerReport prime_power_consistency(const ModularData& md) {
  const TheoryParams& tp = md.params();
  PrimePowerReport r;
  r.prime = prime_power_base(tp.kappa());
  if (r.prime == 0) throw ValidationError("k+n = " + std::to_string(tp.kappa()) + " is not a prime power");
  if (tp.k() == 2 && tp.n() == 2) throw ValidationError("(k,n) = (2,2) is excluded");
  const std::size_t v = tp.index(tp.v());
  for (std::size_t i = 0; i < tp.size(); ++i) {
    const bool zero = md.s_is_zero(v, i);
    const bool fixed = fixed_point_test(tp, tp[i]).nontrivial;
    if (zero) r.s_v_zeros.push_back(tp[i]);
    if (fixed) r.fixed_points.push_back(tp[i]);
    if (zero != fixed) r.counterexamples.push_back(tp[i]);
  }
  return r;
}

/// (n'+1, n', ..., n')
inline Weight u_weight(int n, int nprime) {
  std::vector<int> l(static_cast<std::size_t>(n - 1), nprime);
  l.front() += 1;
  return Weight(std::move(l));
}

/// (n', ..., n'), the unique weight fixed by all of Z_n at level n' n.
inline Weight fixed_representation(int n, int nprime) {
  return Weight(std::vector<int>(static_cast<std::size_t>(n - 1), nprime));
}

struct LatticeEvidence {
  int n = 0;
  int nprime = 0;
  Weight u;
  Weight fixed_rep;
  std::vector<Weight> orbit_of_u;  // w^j(u), j = 0..n-1
  SectorSum v_times_fixed;         // v x (n',...,n')
  bool decomposition_check = false;
  double d_u = 0.0;
  double d_v = 0.0;
  double d_fixed = 0.0;
  bool dimension_check = false;
  Complex s_u_v0;
  Complex s_u_lambda;  // Lambda = (n, 0, ..., 0)
  bool s_check = false;
  std::vector<std::string> failures;

  bool passed() const { return decomposition_check && dimension_check && s_check; }
};

inline LatticeEvidence lattice_evidence(const ModularData& md, int nprime) {
  const TheoryParams& tp = md.params();
  const int n = tp.n();
  validate_simple_current_level(n, nprime);
  if (tp.k() != nprime * n) throw ValidationError("level k is not n' n");

  LatticeEvidence e;
  e.n = n;
  e.nprime = nprime;
  e.u = u_weight(n, nprime);
  e.fixed_rep = fixed_representation(n, nprime);
  for (int j = 0; j < n; ++j) e.orbit_of_u.push_back(tp.omega(e.u, j));

  e.v_times_fixed = verlinde_product(md, tp.v(), e.fixed_rep);
  SectorSum expected;
  for (const Weight& w : e.orbit_of_u) expected.add(w);
  e.decomposition_check = e.v_times_fixed == expected;
  if (!e.decomposition_check) {
    e.failures.push_back("v x (" + e.fixed_rep.str() + ") = " + e.v_times_fixed.str() + ", expected " + expected.str());
  }

  const auto& d = md.qdims();
  e.d_u = d[tp.index(e.u)];
  e.d_v = d[tp.index(tp.v())];
  e.d_fixed = d[tp.index(e.fixed_rep)];
  e.dimension_check = std::abs(e.d_u - e.d_v * e.d_fixed / n) <= 1e-8 * std::max(1.0, e.d_u);
  if (!e.dimension_check) {
    e.failures.push_back("d_u = " + std::to_string(e.d_u) + " but d_v d_F / n = " + std::to_string(e.d_v * e.d_fixed / n));
  }

  const std::size_t iu = tp.index(e.u);
  const Weight big_lambda = Weight::fundamental(n, 1, n);
  e.s_u_v0 = md.S(iu, tp.index(tp.v0()));
  e.s_u_lambda = md.S(iu, tp.index(big_lambda));
  e.s_check = !md.s_is_zero(iu, tp.index(tp.v0())) && !md.s_is_zero(iu, tp.index(big_lambda));
  if (!e.s_check) e.failures.push_back("S_{u v0} or S_{u Lambda} vanishes");
  return e;
}

/// Pairs (l1, l2) whose piece dimensions, colors and fusion are compatible
/// with a_u = x_1 y_1 for pieces x_1 of a_{l1} and y_1 of a_{l2}:
///  (a) every w^j(u) occurs in l1 x l2;
///  (b) (d_l1 / pieces(l1)) (d_l2 / pieces(l2)) = d_u;
///  (c) col(l1) + col(l2) = 1 mod n;
///  (d) 1 < d_l1 / pieces(l1) < d_u.
inline std::vector<std::pair<Weight, Weight>> factorization_scan(const ModularData& md, const FusionTensor& fusion,
                                                                 int nprime) {
  const TheoryParams& tp = md.params();
  const int n = tp.n();
  validate_simple_current_level(n, nprime);
  if (tp.k() != nprime * n) throw ValidationError("level k is not n' n");
  const Weight u = u_weight(n, nprime);
  std::vector<std::size_t> orbit_u;
  for (int j = 0; j < n; ++j) orbit_u.push_back(tp.index(tp.omega(u, j)));
  const double d_u = md.qdims()[tp.index(u)];

  std::vector<double> piece(tp.size());
  std::vector<int> col(tp.size());
  for (std::size_t i = 0; i < tp.size(); ++i) {
    piece[i] = md.qdims()[i] * stabilizer_exponent(tp, tp[i]) / n;
    col[i] = tp.color(tp[i]);
  }
  const double eps = 1e-9 * std::max(1.0, d_u);

  std::vector<std::pair<Weight, Weight>> out;
  for (std::size_t a = 0; a < tp.size(); ++a) {
    if (!(piece[a] > 1.0 + eps && piece[a] < d_u - eps)) continue;
    for (std::size_t b = 0; b < tp.size(); ++b) {
      if ((col[a] + col[b]) % n != 1 % n) continue;
      if (std::abs(piece[a] * piece[b] - d_u) > 1e-6) continue;
      bool contains = true;
      for (std::size_t x : orbit_u) contains = contains && fusion(a, b, x) > 0;
      if (contains) out.emplace_back(tp[a], tp[b]);
    }
  }
  return out;
}

/// The survivors predicted for the M_{2n} lattice: (w^a(v), F) and (F, w^a(v))
/// with F = (n', ..., n').
inline std::set<std::pair<Weight, Weight>> expected_survivors(const TheoryParams& tp, int nprime) {
  const Weight f = fixed_representation(tp.n(), nprime);
  std::set<std::pair<Weight, Weight>> out;
  for (int a = 0; a < tp.n(); ++a) {
    const Weight va = tp.omega(tp.v(), a);
    for (int b = 0; b < tp.n(); ++b) {
      out.emplace(va, tp.omega(f, b));
      out.emplace(tp.omega(f, b), va);
    }
  }
  return out;
}

}  // namespace wzw
