#pragma once

// Fusion-side Y-matrix and monodromy scalars.

#include <complex>
#include <string>

#include "wzw/fusion.hpp"
#include "wzw/modular_data.hpp"

namespace wzw {

/// Which orientation |a|^{-1} Y reproduces.
enum class YBranch { S, SConjugate, Neither };

inline const char* to_string(YBranch b) {
  switch (b) {
    case YBranch::S: return "S";
    case YBranch::SConjugate: return "conj(S)";
    default: return "none";
  }
}

/// Y_{lm} = sum_nu N_{lm}^nu (omega_l omega_m / omega_nu) d_nu.
inline ComplexMatrix ymatrix(const ModularData& md, const FusionTensor& n) {
  const std::size_t m = md.size();
  const auto& w = md.twists();
  const auto& d = md.qdims();
  ComplexMatrix y(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Complex sum{0.0, 0.0};
      for (const auto& e : n.slice(a, b)) sum += static_cast<double>(e.mult) * d[e.nu] / w[e.nu];
      y(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sum * w[a] * w[b];
    }
  }
  return y;
}

struct YComparison {
  YBranch branch = YBranch::Neither;
  double distance_to_s = 0.0;     // max |Y/|a| - S|
  double distance_to_sbar = 0.0;  // max |Y/|a| - conj(S)|
  double symmetry = 0.0;          // max |Y_lm - Y_ml|
  double conjugation = 0.0;       // max |Y_{l conj m} - conj(Y_lm)|
};

inline YComparison compare_y_with_s(const ModularData& md, const ComplexMatrix& y, double tolerance) {
  YComparison c;
  const ComplexMatrix scaled = y / std::abs(md.a());
  c.distance_to_s = (scaled - md.S()).cwiseAbs().maxCoeff();
  c.distance_to_sbar = (scaled - md.S().conjugate()).cwiseAbs().maxCoeff();
  c.symmetry = (y - y.transpose()).cwiseAbs().maxCoeff();
  for (std::size_t a = 0; a < md.size(); ++a) {
    for (std::size_t b = 0; b < md.size(); ++b) {
      const auto ia = static_cast<Eigen::Index>(a);
      const Complex lhs = y(ia, static_cast<Eigen::Index>(md.conjugate(b)));
      c.conjugation = std::max(c.conjugation, std::abs(lhs - std::conj(y(ia, static_cast<Eigen::Index>(b)))));
    }
  }
  if (c.distance_to_s <= tolerance) {
    c.branch = YBranch::S;
  } else if (c.distance_to_sbar <= tolerance) {
    c.branch = YBranch::SConjugate;
  }
  return c;
}

/// omega_nu / (omega_l omega_m) on a fusion channel nu of l x m.
inline Complex monodromy_scalar(const ModularData& md, const FusionTensor& n, const Weight& l, const Weight& m,
                                const Weight& nu) {
  const TheoryParams& tp = md.params();
  const std::size_t a = tp.index(l);
  const std::size_t b = tp.index(m);
  const std::size_t c = tp.index(nu);
  if (n(a, b, c) == 0) {
    throw ValidationError("(" + nu.str() + ") does not appear in (" + l.str() + ") x (" + m.str() + ")");
  }
  const auto& w = md.twists();
  return w[c] / (w[a] * w[b]);
}

}  // namespace wzw
