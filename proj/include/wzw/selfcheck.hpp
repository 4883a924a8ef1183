#pragma once

// The full invariant suite for one theory, as run by `wzw selfcheck`.

#include <array>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "wzw/fusion.hpp"
#include "wzw/modular_data.hpp"
#include "wzw/simple_current.hpp"
#include "wzw/subfactor.hpp"
#include "wzw/ymatrix.hpp"

namespace wzw {

struct Check {
  std::string name;
  double value = 0.0;      // worst residual or violation count
  double tolerance = 0.0;  // pass iff value <= tolerance
  std::string detail;

  bool passed() const { return value <= tolerance; }
};

namespace detail {

inline std::vector<std::array<std::size_t, 3>> sample_triples(std::size_t m, std::size_t exhaustive_limit,
                                                              std::size_t samples) {
  std::vector<std::array<std::size_t, 3>> out;
  if (m <= exhaustive_limit) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c) out.push_back({a, b, c});
    return out;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  for (std::size_t i = 0; i < samples; ++i) out.push_back({pick(rng), pick(rng), pick(rng)});
  return out;
}

}  // namespace detail

inline std::vector<Check> run_selfcheck(const ModularData& md) {
  const TheoryParams& tp = md.params();
  const Tolerances& tol = md.tolerances();
  const std::size_t m = md.size();
  const int n = tp.n();
  std::vector<Check> out;

  const ModularReport rel = check_modular_relations(md);
  out.push_back({"S unitarity |SS^dag - 1|", rel.unitarity, tol.general, ""});
  out.push_back({"S symmetry |S - S^T|", rel.symmetry, tol.general, ""});
  out.push_back({"S^2 = C", rel.s_squared, tol.general, ""});
  out.push_back({"STS = T^-1 S T^-1", rel.sts, tol.general, ""});
  out.push_back({"T unitary", rel.t_unitarity, tol.general, ""});
  out.push_back({"TC = CT", rel.tc, tol.general, ""});
  out.push_back({"S_{l,w^i(m)} phase symmetry", rel.phase_symmetry, tol.general, ""});
  out.push_back({"|S_lm| <= d_l S_0m", rel.extremality, tol.general, ""});
  out.push_back({"{d = 1} = simple currents", rel.invertibles_match ? 0.0 : 1.0, 0.0, ""});
  out.push_back({"|a|^2 = sum d^2 (relative)", rel.gauss_norm / md.global_dimension_squared(), tol.general, ""});
  out.push_back({"c0 = k(n^2-1)/(k+n) mod 8", rel.c0_offset, tol.general, ""});

  const FusionTensor fusion = verlinde_tensor(md);
  out.push_back({"Verlinde rounding residual", fusion.max_residual(), tol.verlinde, ""});

  double pieri_mismatch = 0.0;
  for (int i = 1; i < n; ++i) {
    const std::size_t fi = tp.index(Weight::fundamental(n, i));
    for (std::size_t b = 0; b < m; ++b) {
      if (pieri_fundamental(tp, i, tp[b]) != fusion.product(tp[fi], tp[b])) pieri_mismatch += 1.0;
    }
  }
  out.push_back({"Pieri = Verlinde slices (mismatches)", pieri_mismatch, 0.0, ""});

  double comm = 0.0;
  double unit = 0.0;
  double color = 0.0;
  double dimsum = 0.0;
  double covariance = 0.0;
  const auto& d = md.qdims();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      double s = 0.0;
      for (const auto& e : fusion.slice(a, b)) {
        s += e.mult * d[e.nu];
        if (fusion(b, a, e.nu) != static_cast<long>(e.mult)) comm += 1.0;
        if ((tp.color(tp[a]) + tp.color(tp[b])) % n != tp.color(tp[e.nu])) color += 1.0;
      }
      dimsum = std::max(dimsum, std::abs(s - d[a] * d[b]) / (d[a] * d[b]));
    }
    const auto vac = fusion.slice(a, 0);
    if (vac.size() != 1 || vac[0].nu != a || vac[0].mult != 1) unit += 1.0;
  }
  for (const auto& [a, b, c] : detail::sample_triples(m, 12, 4000)) {
    const long base = fusion(a, b, c);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (fusion(tp.omega_index(a, x), tp.omega_index(b, y), tp.omega_index(c, x + y)) != base) covariance += 1.0;
      }
    }
  }
  out.push_back({"N commutative (violations)", comm, 0.0, ""});
  out.push_back({"vacuum is the unit (violations)", unit, 0.0, ""});
  out.push_back({"color selection rule (violations)", color, 0.0, ""});
  out.push_back({"sum_nu N d_nu = d_l d_m (relative)", dimsum, 1e-8, ""});
  out.push_back({"w-covariance (violations)", covariance, 0.0, ""});

  double assoc = 0.0;
  double frob = 0.0;
  for (const auto& [a, b, c] : detail::sample_triples(m, 10, 300)) {
    const SectorSum x(tp[a]), y(tp[b]), z(tp[c]);
    if (fuse(fusion, fuse(fusion, x, y), z) != fuse(fusion, x, fuse(fusion, y, z))) assoc += 1.0;
    if (inner(fuse(fusion, x, y), z) != inner(y, fuse(fusion, conjugate(x), z))) frob += 1.0;
  }
  out.push_back({"associativity (violations)", assoc, 0.0, ""});
  out.push_back({"Frobenius reciprocity (violations)", frob, 0.0, ""});

  const ComplexMatrix y = ymatrix(md, fusion);
  const YComparison yc = compare_y_with_s(md, y, 1e-8);
  out.push_back({"|a|^-1 Y = S or conj(S)", std::min(yc.distance_to_s, yc.distance_to_sbar), 1e-8,
                 std::string("branch ") + to_string(yc.branch)});
  out.push_back({"Y symmetric", yc.symmetry, 1e-8 * std::abs(md.a()), ""});
  out.push_back({"Y_{l conj m} = conj(Y_lm)", yc.conjugation, 1e-8 * std::abs(md.a()), ""});

  if (tp.k() % n == 0) {
    const int nprime = tp.k() / n;
    bool valid = true;
    try {
      validate_simple_current_level(n, nprime);
    } catch (const ValidationError&) {
      valid = false;
    }
    if (valid) {
      const SimpleCurrentData sc = build_z(md, nprime);
      out.push_back({"|ZS - SZ|", sc.zs_residual, tol.general, ""});
      out.push_back({"|ZT - TZ|", sc.zt_residual, tol.general, ""});
      const LatticeEvidence ev = lattice_evidence(md, nprime);
      out.push_back({"lattice evidence (failed checks)", static_cast<double>(ev.failures.size()), 0.0, ""});
    }
  }

  if (prime_power_base(tp.kappa()) != 0 && !(tp.k() == 2 && n == 2)) {
    const PrimePowerReport pp = prime_power_consistency(md);
    out.push_back({"S_{v.} zeros = fixed points (counterexamples)", static_cast<double>(pp.counterexamples.size()), 0.0,
                   ""});
  }

  double undetermined = 0.0;
  for (const auto& r : maximality_table(md)) {
    if (r.verdict == Verdict::Undetermined && !exceptional_level(n, tp.k())) undetermined += 1.0;
  }
  out.push_back({"Undetermined verdicts off exceptional levels", undetermined, 0.0, ""});
  return out;
}

}  // namespace wzw
