#pragma once

// Fusion ring of SU(n)_k. The Verlinde formula is the ground truth; the
// fundamental Pieri rule is provided as an independent combinatorial route.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "wzw/errors.hpp"
#include "wzw/modular_data.hpp"
#include "wzw/weights.hpp"

namespace wzw {

/// Formal nonnegative combination of sectors, e.g. [1] + 2[v0].
class SectorSum {
 public:
  SectorSum() = default;
  SectorSum(std::initializer_list<std::pair<const Weight, long>> terms) {
    for (const auto& [w, c] : terms) add(w, c);
  }
  explicit SectorSum(const Weight& w, long mult = 1) { add(w, mult); }

  void add(const Weight& w, long mult = 1) {
    if (mult < 0) throw ValidationError("sector multiplicities must be nonnegative");
    if (mult == 0) return;
    terms_[w] += mult;
  }

  long operator[](const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  const std::map<Weight, long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t distinct() const { return terms_.size(); }
  long total_multiplicity() const {
    long t = 0;
    for (const auto& [w, c] : terms_) t += c;
    return t;
  }

  friend SectorSum operator+(SectorSum a, const SectorSum& b) {
    for (const auto& [w, c] : b.terms_) a.add(w, c);
    return a;
  }
  bool operator==(const SectorSum&) const = default;

  /// "1 x 2,0 + 1 x 0,1"
  std::string str() const {
    std::string s;
    for (const auto& [w, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += std::to_string(c) + " x " + w.str();
    }
    return s.empty() ? "0" : s;
  }

 private:
  std::map<Weight, long> terms_;
};

inline SectorSum conjugate(const SectorSum& x) {
  SectorSum out;
  for (const auto& [w, c] : x.terms()) out.add(conjugate(w), c);
  return out;
}

inline double qdim(const ModularData& md, const SectorSum& x) {
  double d = 0.0;
  for (const auto& [w, c] : x.terms()) d += static_cast<double>(c) * md.qdims()[md.params().index(w)];
  return d;
}

/// <x, y> = sum_l mult_x(l) mult_y(l): the dimension of the intertwiner space.
inline long inner(const SectorSum& x, const SectorSum& y) {
  long t = 0;
  for (const auto& [w, c] : x.terms()) t += c * y[w];
  return t;
}

/// Sparse N_{lm}^n, stored per ordered pair (l, m) as a sorted list of (n, N).
class FusionTensor {
 public:
  struct Entry {
    std::uint32_t nu;
    std::uint32_t mult;
  };

  FusionTensor(TheoryParams tp, std::vector<std::uint64_t> offsets, std::vector<Entry> entries, double max_residual)
      : tp_(std::move(tp)), offsets_(std::move(offsets)), entries_(std::move(entries)), max_residual_(max_residual) {}

  const TheoryParams& params() const { return tp_; }
  std::size_t size() const { return tp_.size(); }
  std::size_t nnz() const { return entries_.size(); }
  /// Largest distance of a pre-rounding Verlinde sum from its integer.
  double max_residual() const { return max_residual_; }

  std::span<const Entry> slice(std::size_t l, std::size_t m) const {
    const std::size_t p = l * size() + m;
    return {entries_.data() + offsets_[p], entries_.data() + offsets_[p + 1]};
  }

  long operator()(std::size_t l, std::size_t m, std::size_t nu) const {
    const auto s = slice(l, m);
    auto it = std::lower_bound(s.begin(), s.end(), nu, [](const Entry& e, std::size_t x) { return e.nu < x; });
    return (it != s.end() && it->nu == nu) ? static_cast<long>(it->mult) : 0;
  }

  long operator()(const Weight& l, const Weight& m, const Weight& nu) const {
    return (*this)(tp_.index(l), tp_.index(m), tp_.index(nu));
  }

  SectorSum product(const Weight& l, const Weight& m) const {
    SectorSum out;
    for (const Entry& e : slice(tp_.index(l), tp_.index(m))) out.add(tp_[e.nu], e.mult);
    return out;
  }

  /// Dense m x m slice M[m][nu] = N_{l m}^nu.
  Eigen::MatrixXd dense_slice(std::size_t l) const {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(size()), static_cast<Eigen::Index>(size()));
    for (std::size_t m = 0; m < size(); ++m) {
      for (const Entry& e : slice(l, m)) d(static_cast<Eigen::Index>(m), e.nu) = e.mult;
    }
    return d;
  }

 private:
  TheoryParams tp_;
  std::vector<std::uint64_t> offsets_;
  std::vector<Entry> entries_;
  double max_residual_;
};

namespace detail {

inline long round_verlinde(Complex value, double tolerance, double& max_residual, const TheoryParams& tp, std::size_t a,
                           std::size_t b, std::size_t c) {
  const double r = std::round(value.real());
  const double residual = std::max(std::abs(value.real() - r), std::abs(value.imag()));
  max_residual = std::max(max_residual, residual);
  if (residual > tolerance || r < 0.0) {
    throw ConsistencyError("Verlinde sum for (" + tp[a].str() + ") x (" + tp[b].str() + ") -> (" + tp[c].str() +
                           ") is " + std::to_string(value.real()) + std::string(value.imag() < 0 ? "" : "+") +
                           std::to_string(value.imag()) + "i, not a nonnegative integer");
  }
  return static_cast<long>(r);
}

}  // namespace detail

/// Streams the Verlinde sums over every triple with l <= m <= r, where
/// V(l, m, r) = sum_d S_ld S_md S_rd / S_0d = N_{lm}^{conj r} is symmetric in
/// all three slots. `visit(l, m, r, N)` receives rounded values, including
/// zeros. Returns the worst rounding residual; throws ConsistencyError on a
/// residual above `tolerance` or a negative value.
template <typename Visitor>
double for_each_verlinde_triple(const ModularData& md, double tolerance, Visitor&& visit) {
  const TheoryParams& tp = md.params();
  const auto m = static_cast<Eigen::Index>(md.size());
  const ComplexMatrix& s = md.S();
  Eigen::VectorXcd inv_vac(m);
  for (Eigen::Index d = 0; d < m; ++d) inv_vac(d) = 1.0 / s(0, d);

  double max_residual = 0.0;
  ComplexMatrix weighted;
  ComplexMatrix block;
  for (Eigen::Index l = 0; l < m; ++l) {
    const Eigen::Index rest = m - l;
    const auto tail = s.bottomRows(rest);
    weighted = tail * (s.row(l).transpose().cwiseProduct(inv_vac)).asDiagonal();
    block.setZero(rest, rest);
    block.triangularView<Eigen::Upper>() = weighted * tail.transpose();
    for (Eigen::Index a = 0; a < rest; ++a) {
      for (Eigen::Index b = a; b < rest; ++b) {
        const auto mu = static_cast<std::size_t>(l + a);
        const auto rho = static_cast<std::size_t>(l + b);
        const long value =
            detail::round_verlinde(block(a, b), tolerance, max_residual, tp, static_cast<std::size_t>(l), mu, rho);
        visit(static_cast<std::size_t>(l), mu, rho, value);
      }
    }
  }
  return max_residual;
}

/// Full fusion tensor from the Verlinde formula.
inline FusionTensor verlinde_tensor(const ModularData& md) {
  const TheoryParams& tp = md.params();
  const std::size_t m = md.size();
  std::vector<std::size_t> conj(m);
  for (std::size_t i = 0; i < m; ++i) conj[i] = md.conjugate(i);

  struct Triple {
    std::uint32_t a, b, c, n;
  };
  std::vector<Triple> triples;
  const double residual = for_each_verlinde_triple(md, md.tolerances().verlinde,
                                                   [&](std::size_t a, std::size_t b, std::size_t c, long value) {
                                                     if (value > 0) {
                                                       triples.push_back({static_cast<std::uint32_t>(a),
                                                                          static_cast<std::uint32_t>(b),
                                                                          static_cast<std::uint32_t>(c),
                                                                          static_cast<std::uint32_t>(value)});
                                                     }
                                                   });

  // Every distinct ordering (x, y, z) of a symmetric triple yields N_{xy}^{conj z}.
  auto expand = [&](const Triple& t, auto&& emit) {
    std::array<std::uint32_t, 3> p{t.a, t.b, t.c};
    do {
      emit(p[0], p[1], static_cast<std::uint32_t>(conj[p[2]]), t.n);
    } while (std::next_permutation(p.begin(), p.end()));
  };

  std::vector<std::uint64_t> offsets(m * m + 1, 0);
  for (const Triple& t : triples) {
    expand(t, [&](std::uint32_t x, std::uint32_t y, std::uint32_t, std::uint32_t) { ++offsets[x * m + y + 1]; });
  }
  for (std::size_t p = 0; p < m * m; ++p) offsets[p + 1] += offsets[p];
  std::vector<FusionTensor::Entry> entries(offsets.back());
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Triple& t : triples) {
    expand(t, [&](std::uint32_t x, std::uint32_t y, std::uint32_t z, std::uint32_t n) {
      entries[cursor[x * m + y]++] = {z, n};
    });
  }
  for (std::size_t p = 0; p < m * m; ++p) {
    std::sort(entries.begin() + static_cast<std::ptrdiff_t>(offsets[p]),
              entries.begin() + static_cast<std::ptrdiff_t>(offsets[p + 1]),
              [](const auto& u, const auto& v) { return u.nu < v.nu; });
  }
  return FusionTensor(tp, std::move(offsets), std::move(entries), residual);
}

/// One product l x m by the Verlinde formula, without building the tensor.
inline SectorSum verlinde_product(const ModularData& md, const Weight& l, const Weight& m) {
  const TheoryParams& tp = md.params();
  const std::size_t a = tp.index(l);
  const std::size_t b = tp.index(m);
  const std::size_t size = md.size();
  double residual = 0.0;
  SectorSum out;
  for (std::size_t nu = 0; nu < size; ++nu) {
    Complex sum{0.0, 0.0};
    for (std::size_t d = 0; d < size; ++d) sum += md.S(a, d) * md.S(b, d) * std::conj(md.S(nu, d)) / md.S(0, d);
    out.add(tp[nu], detail::round_verlinde(sum, md.tolerances().verlinde, residual, tp, a, b, nu));
  }
  return out;
}

/// Bilinear extension of the fusion product.
inline SectorSum fuse(const FusionTensor& n, const SectorSum& x, const SectorSum& y) {
  const TheoryParams& tp = n.params();
  std::map<std::size_t, long> acc;
  for (const auto& [wx, cx] : x.terms()) {
    const std::size_t a = tp.index(wx);
    for (const auto& [wy, cy] : y.terms()) {
      for (const auto& e : n.slice(a, tp.index(wy))) acc[e.nu] += cx * cy * static_cast<long>(e.mult);
    }
  }
  SectorSum out;
  for (const auto& [nu, c] : acc) out.add(tp[nu], c);
  return out;
}

inline SectorSum fuse(const FusionTensor& n, const SectorSum& x, const SectorSum& y, const SectorSum& z) {
  return fuse(n, fuse(n, x, y), z);
}

/// Fusion with the i-th fundamental weight via vertical strips: add i boxes
/// to distinct rows of the n-row diagram, strip full columns, keep what lies
/// in the level-k alcove. Each survivor has multiplicity one.
inline SectorSum pieri_fundamental(const TheoryParams& tp, int i, const Weight& w) {
  const int n = tp.n();
  if (i < 1 || i > n - 1) throw ValidationError("fundamental index must lie in 1..n-1, got " + std::to_string(i));
  if (!tp.contains(w)) tp.index(w);
  const Partition p = to_partition(w);
  std::vector<int> rows(static_cast<std::size_t>(n), 0);
  std::copy(p.rows.begin(), p.rows.end(), rows.begin());

  std::vector<bool> choose(static_cast<std::size_t>(n), false);
  std::fill(choose.begin(), choose.begin() + i, true);
  SectorSum out;
  do {
    std::vector<int> r = rows;
    for (std::size_t a = 0; a < r.size(); ++a) r[a] += choose[a] ? 1 : 0;
    if (!std::is_sorted(r.rbegin(), r.rend())) continue;
    const int full = r.back();
    for (int& x : r) x -= full;
    const Weight nu = from_partition(Partition{r}, n);
    if (nu.level_sum() <= tp.k()) out.add(nu);
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

}  // namespace wzw
