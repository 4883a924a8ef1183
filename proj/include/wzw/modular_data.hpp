#pragma once

// Modular data of SU(n) at level k: Kac-Peterson S, twists and T, quantum
// dimensions, the Gauss sum a and the central charge mod 8.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wzw/errors.hpp"
#include "wzw/rational.hpp"
#include "wzw/weights.hpp"

namespace wzw {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Table of exp(2 pi i j / order) for j in [0, order).
class RootsOfUnity {
 public:
  explicit RootsOfUnity(std::int64_t order) : order_(order), table_(static_cast<std::size_t>(order)) {
    for (std::int64_t j = 0; j < order; ++j) {
      table_[static_cast<std::size_t>(j)] =
          std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(order));
    }
  }
  std::int64_t order() const { return order_; }
  /// exp(2 pi i e / order) for any integer e.
  Complex operator()(std::int64_t e) const {
    std::int64_t r = e % order_;
    if (r < 0) r += order_;
    return table_[static_cast<std::size_t>(r)];
  }

 private:
  std::int64_t order_;
  std::vector<Complex> table_;
};

/// The common root-of-unity order 2 n^2 (k+n): fine enough for the centered
/// Kac-Peterson phases (denominator n^2 (k+n)) and the twists (2n(k+n)).
inline RootsOfUnity roots_for(const TheoryParams& tp) {
  const std::int64_t n = tp.n();
  return RootsOfUnity(2 * n * n * tp.kappa());
}

/// h_lambda = (lambda, lambda + 2 rho) / (2 (k+n)), exact.
inline Rational conformal_dim(const TheoryParams& tp, const Weight& w) {
  const std::int64_t n = tp.n();
  const auto& l = w.labels();
  std::int64_t num = 0;
  for (std::size_t ii = 0; ii < l.size(); ++ii) {
    const std::int64_t i = static_cast<std::int64_t>(ii) + 1;
    num += i * (n - i) * l[ii] * l[ii];
    num += n * i * (n - i) * l[ii];
    for (std::size_t jj = 0; jj < ii; ++jj) {
      const std::int64_t j = static_cast<std::int64_t>(jj) + 1;
      num += 2 * j * (n - i) * l[jj] * l[ii];
    }
  }
  return Rational(num, 2 * n * tp.kappa());
}

namespace detail {

// n * ell_a - |ell| for ell_a = row_a + n - a, a = 1..n: the shifted weight
// lambda + rho in orthonormal coordinates, centered and scaled by n.
inline std::vector<std::int64_t> centered_shifted(const TheoryParams& tp, const Weight& w) {
  const int n = tp.n();
  const Partition p = to_partition(w);
  std::vector<std::int64_t> ell(static_cast<std::size_t>(n));
  std::int64_t total = 0;
  for (int a = 0; a < n; ++a) {
    const std::int64_t row = a < static_cast<int>(p.rows.size()) ? p.rows[static_cast<std::size_t>(a)] : 0;
    ell[static_cast<std::size_t>(a)] = row + (n - 1 - a);
    total += ell[static_cast<std::size_t>(a)];
  }
  for (auto& e : ell) e = n * e - total;
  return ell;
}

}  // namespace detail

/// Unnormalized Kac-Peterson kernel det[exp(-2 pi i (l_a(lambda) l_b(mu)) / (k+n))]
/// over centered shifted weights.
inline ComplexMatrix kac_peterson_kernel(const TheoryParams& tp) {
  const std::size_t m = tp.size();
  const int n = tp.n();
  const RootsOfUnity roots = roots_for(tp);
  std::vector<std::vector<std::int64_t>> ell;
  ell.reserve(m);
  for (const auto& w : tp.alcove()) ell.push_back(detail::centered_shifted(tp, w));

  ComplexMatrix kernel(m, m);
  ComplexMatrix block(n, n);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = x; y < m; ++y) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          // exp(-2 pi i c_a c_b / (n^2 kappa)) in units of 1/(2 n^2 kappa)
          block(a, b) = roots(-2 * ell[x][static_cast<std::size_t>(a)] * ell[y][static_cast<std::size_t>(b)]);
        }
      }
      const Complex d = block.determinant();
      kernel(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = d;
      kernel(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = d;
    }
  }
  return kernel;
}

/// Normalized S-matrix: row 0 scaled to unit norm, global phase fixed so that
/// S_{00} > 0. Throws ConsistencyError unless the result is unitary with a
/// positive vacuum row.
inline ComplexMatrix smatrix(const TheoryParams& tp, const Tolerances& tol = {}) {
  ComplexMatrix s = kac_peterson_kernel(tp);
  const double norm = s.row(0).norm();
  if (!(norm > 0.0)) throw ConsistencyError("Kac-Peterson kernel has a vanishing vacuum row");
  const Complex phase = std::conj(s(0, 0)) / std::abs(s(0, 0));
  s *= phase / norm;

  const auto m = s.rows();
  for (Eigen::Index j = 0; j < m; ++j) {
    const Complex e = s(0, j);
    if (!(e.real() > 0.0) || std::abs(e.imag()) > tol.unitarity) {
      throw ConsistencyError("S_{0," + tp[static_cast<std::size_t>(j)].str() + "} is not positive real");
    }
  }
  const double err = (s * s.adjoint() - ComplexMatrix::Identity(m, m)).cwiseAbs().maxCoeff();
  if (err > tol.unitarity) {
    throw ConsistencyError("S-matrix not unitary after normalization (max deviation " + std::to_string(err) + ")");
  }
  return s;
}

/// a = sum d^2 / omega and c0 = -8 arg(a) / (2 pi) reduced to [0, 8).
struct GaussSum {
  Complex a;
  double c0 = 0.0;
};

inline GaussSum compute_a(const std::vector<double>& qdim, const std::vector<Complex>& twist) {
  Complex a{0.0, 0.0};
  double total = 0.0;
  for (std::size_t i = 0; i < qdim.size(); ++i) {
    a += qdim[i] * qdim[i] / twist[i];
    total += qdim[i] * qdim[i];
  }
  if (std::abs(a) < 1e-12 * total) throw ConsistencyError("Gauss sum a vanishes (degenerate braiding)");
  double c0 = -8.0 * std::arg(a) / (2.0 * std::numbers::pi);
  c0 = std::fmod(c0, 8.0);
  if (c0 < 0.0) c0 += 8.0;
  if (c0 >= 8.0) c0 -= 8.0;
  return {a, c0};
}

/// Distance between x and y on the circle R / (period Z).
inline double mod_distance(double x, double y, double period) {
  double d = std::fmod(x - y, period);
  if (d < 0) d += period;
  return std::min(d, period - d);
}

/// Full modular data of SU(n)_k. Immutable after construction.
class ModularData {
 public:
  explicit ModularData(TheoryParams tp, Tolerances tol = {}) : tp_(std::move(tp)), tol_(tol) {
    const std::size_t m = tp_.size();
    const RootsOfUnity roots = roots_for(tp_);
    const std::int64_t n = tp_.n();
    s_ = smatrix(tp_, tol_);
    h_.reserve(m);
    twist_.reserve(m);
    qdim_.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      h_.push_back(conformal_dim(tp_, tp_[i]));
      // h has denominator dividing 2 n kappa; the roots table has order 2 n^2 kappa
      const Rational& h = h_.back();
      twist_.push_back(roots(h.num() * (roots.order() / h.den())));
      qdim_.push_back(s_(0, static_cast<Eigen::Index>(i)).real() / s_(0, 0).real());
    }
    gauss_ = compute_a(qdim_, twist_);
    const Complex c = std::polar(1.0, -2.0 * std::numbers::pi * gauss_.c0 / 24.0);
    t_.reserve(m);
    for (std::size_t i = 0; i < m; ++i) t_.push_back(c * twist_[i]);
    central_charge_ = Rational(tp_.k() * (n * n - 1), tp_.kappa());
    conj_.reserve(m);
    for (std::size_t i = 0; i < m; ++i) conj_.push_back(tp_.conjugate_index(i));
  }

  const TheoryParams& params() const { return tp_; }
  const Tolerances& tolerances() const { return tol_; }
  std::size_t size() const { return tp_.size(); }

  const ComplexMatrix& S() const { return s_; }
  Complex S(std::size_t a, std::size_t b) const { return s_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)); }
  /// Diagonal of T = exp(-2 pi i c0 / 24) Diag(omega).
  const std::vector<Complex>& T() const { return t_; }
  const std::vector<Rational>& conformal_dims() const { return h_; }
  const std::vector<Complex>& twists() const { return twist_; }
  const std::vector<double>& qdims() const { return qdim_; }
  Complex a() const { return gauss_.a; }
  double c0() const { return gauss_.c0; }
  /// k (n^2 - 1) / (k + n)
  Rational central_charge() const { return central_charge_; }
  std::size_t conjugate(std::size_t i) const { return conj_[i]; }

  double global_dimension_squared() const {
    double t = 0.0;
    for (double d : qdim_) t += d * d;
    return t;
  }

  /// max |S| over all entries; the scale for zero detection.
  double max_abs_s() const { return s_.cwiseAbs().maxCoeff(); }
  bool s_is_zero(std::size_t a, std::size_t b) const { return std::abs(S(a, b)) < tol_.zero_rel * max_abs_s(); }

  ComplexMatrix T_matrix() const {
    ComplexMatrix t = ComplexMatrix::Zero(static_cast<Eigen::Index>(size()), static_cast<Eigen::Index>(size()));
    for (std::size_t i = 0; i < size(); ++i) t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = t_[i];
    return t;
  }

  ComplexMatrix conjugation_matrix() const {
    ComplexMatrix c = ComplexMatrix::Zero(static_cast<Eigen::Index>(size()), static_cast<Eigen::Index>(size()));
    for (std::size_t i = 0; i < size(); ++i) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(conj_[i])) = 1.0;
    return c;
  }

 private:
  TheoryParams tp_;
  Tolerances tol_;
  ComplexMatrix s_;
  std::vector<Complex> t_;
  std::vector<Rational> h_;
  std::vector<Complex> twist_;
  std::vector<double> qdim_;
  GaussSum gauss_;
  Rational central_charge_;
  std::vector<std::size_t> conj_;
};

/// Max-norm residuals of every modular identity.
struct ModularReport {
  double unitarity = 0.0;     // |S S^dag - 1|
  double symmetry = 0.0;      // |S - S^T|
  double s_squared = 0.0;     // |S^2 - C|
  double sts = 0.0;           // |STS - T^-1 S T^-1|
  double t_unitarity = 0.0;   // max ||T_ll| - 1|
  double tc = 0.0;            // |TC - CT|
  double phase_symmetry = 0.0;  // |S_{l, w^i(m)} - exp(2 pi i col(l) i / n) S_{lm}|
  double extremality = 0.0;   // max(0, |S_lm| - d_l S_0m)
  double gauss_norm = 0.0;    // ||a|^2 - sum d^2|
  double c0_offset = 0.0;     // c0 vs k(n^2-1)/(k+n) on R/8Z
  bool invertibles_match = false;  // {d = 1} == {w^i(vacuum)}

  double worst() const {
    return std::max({unitarity, symmetry, s_squared, sts, t_unitarity, tc, phase_symmetry, extremality});
  }
};

inline ModularReport check_modular_relations(const ModularData& md) {
  ModularReport r;
  const TheoryParams& tp = md.params();
  const auto m = static_cast<Eigen::Index>(md.size());
  const ComplexMatrix& s = md.S();
  const ComplexMatrix id = ComplexMatrix::Identity(m, m);
  const ComplexMatrix c = md.conjugation_matrix();
  const ComplexMatrix t = md.T_matrix();
  ComplexMatrix tinv = t.adjoint();

  r.unitarity = (s * s.adjoint() - id).cwiseAbs().maxCoeff();
  r.symmetry = (s - s.transpose()).cwiseAbs().maxCoeff();
  r.s_squared = (s * s - c).cwiseAbs().maxCoeff();
  r.sts = (s * t * s - tinv * s * tinv).cwiseAbs().maxCoeff();
  r.tc = (t * c - c * t).cwiseAbs().maxCoeff();
  for (const Complex& x : md.T()) r.t_unitarity = std::max(r.t_unitarity, std::abs(std::abs(x) - 1.0));

  const int n = tp.n();
  for (int i = 1; i < n; ++i) {
    for (std::size_t b = 0; b < md.size(); ++b) {
      const std::size_t wb = tp.omega_index(b, i);
      for (std::size_t a = 0; a < md.size(); ++a) {
        const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * tp.color(tp[a]) * i / n);
        r.phase_symmetry = std::max(r.phase_symmetry, std::abs(md.S(a, wb) - phase * md.S(a, b)));
      }
    }
  }

  std::vector<bool> unit(md.size(), false);
  for (std::size_t a = 0; a < md.size(); ++a) {
    for (std::size_t b = 0; b < md.size(); ++b) {
      const double excess = std::abs(md.S(a, b)) - md.qdims()[a] * md.S(0, b).real();
      r.extremality = std::max(r.extremality, excess);
    }
    unit[a] = std::abs(md.qdims()[a] - 1.0) < md.tolerances().general;
  }
  std::vector<bool> current(md.size(), false);
  for (int i = 0; i < n; ++i) current[tp.omega_index(0, i)] = true;
  r.invertibles_match = unit == current;

  r.gauss_norm = std::abs(std::norm(md.a()) - md.global_dimension_squared());
  r.c0_offset = mod_distance(md.c0(), md.central_charge().value(), 8.0);
  return r;
}

}  // namespace wzw
