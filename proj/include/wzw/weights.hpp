#pragma once

// Level-k integrable weights of SU(n): the alcove, its Z_n simple-current
// action, conjugation, n-ality and Young-diagram conversion.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wzw/errors.hpp"

namespace wzw {

/// Dynkin labels (lambda_1, ..., lambda_{n-1}) of a dominant SU(n) weight.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> labels) : labels_(std::move(labels)) {
    for (int l : labels_) {
      if (l < 0) throw ValidationError("weight labels must be nonnegative");
    }
  }

  static Weight zero(int n) { return Weight(std::vector<int>(static_cast<std::size_t>(n - 1), 0)); }

  /// The i-th fundamental weight Lambda_i (1 <= i <= n-1) scaled by `scale`.
  static Weight fundamental(int n, int i, int scale = 1) {
    if (i < 1 || i > n - 1) throw ValidationError("fundamental index out of range");
    std::vector<int> l(static_cast<std::size_t>(n - 1), 0);
    l[static_cast<std::size_t>(i - 1)] = scale;
    return Weight(std::move(l));
  }

  const std::vector<int>& labels() const { return labels_; }
  int rank() const { return static_cast<int>(labels_.size()) + 1; }  // n
  int operator[](std::size_t i) const { return labels_[i]; }          // lambda_{i+1}
  int level_sum() const { return std::accumulate(labels_.begin(), labels_.end(), 0); }

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(labels_[i]);
    }
    return s;
  }

  /// Parses "1,0,2". Rejects empty fields, signs and trailing garbage.
  static Weight parse(std::string_view text) {
    std::vector<int> labels;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = text.find(',', pos);
      const std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      if (field.empty() || field.size() > 9 ||
          !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ValidationError("malformed weight '" + std::string(text) + "'");
      }
      labels.push_back(std::stoi(std::string(field)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Weight(std::move(labels));
  }

 private:
  std::vector<int> labels_;
};

/// Young diagram row lengths, weakly decreasing.
struct Partition {
  std::vector<int> rows;
  bool operator==(const Partition&) const = default;
};

/// Row a of the diagram is sum_{j >= a} lambda_j; trailing zero rows dropped.
inline Partition to_partition(const Weight& w) {
  const auto& l = w.labels();
  std::vector<int> rows(l.size(), 0);
  int acc = 0;
  for (std::size_t a = l.size(); a-- > 0;) {
    acc += l[a];
    rows[a] = acc;
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Partition{std::move(rows)};
}

/// Inverse of to_partition; full columns of height n are stripped.
inline Weight from_partition(const Partition& p, int n) {
  if (n < 2) throw ValidationError("rank must be at least 2");
  if (p.rows.size() > static_cast<std::size_t>(n)) throw ValidationError("partition has more than n rows");
  for (std::size_t a = 0; a < p.rows.size(); ++a) {
    if (p.rows[a] < 0) throw ValidationError("partition rows must be nonnegative");
    if (a > 0 && p.rows[a] > p.rows[a - 1]) throw ValidationError("partition rows must be weakly decreasing");
  }
  auto row = [&](std::size_t a) { return a < p.rows.size() ? p.rows[a] : 0; };
  std::vector<int> labels(static_cast<std::size_t>(n - 1));
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) labels[i] = row(i) - row(i + 1);
  return Weight(std::move(labels));
}

/// Label reversal: the weight of the contragredient representation.
inline Weight conjugate(const Weight& w) {
  std::vector<int> l(w.labels().rbegin(), w.labels().rend());
  return Weight(std::move(l));
}

/// Rank n, level k and the ordered alcove of weights with sum of labels <= k.
class TheoryParams {
 public:
  TheoryParams(int n, int k) : n_(n), k_(k) {
    if (n < 2) throw ValidationError("rank n must be >= 2, got " + std::to_string(n));
    if (k < 1) throw ValidationError("level k must be >= 1, got " + std::to_string(k));
    std::vector<int> cur(static_cast<std::size_t>(n - 1), 0);
    enumerate(cur, 0, k);
    std::sort(alcove_.begin(), alcove_.end());
    for (std::size_t i = 0; i < alcove_.size(); ++i) index_.emplace(alcove_[i], i);
  }

  int n() const { return n_; }
  int k() const { return k_; }
  /// k + n, the shifted level appearing in every modular formula.
  int kappa() const { return k_ + n_; }
  std::size_t size() const { return alcove_.size(); }
  const std::vector<Weight>& alcove() const { return alcove_; }
  const Weight& operator[](std::size_t i) const { return alcove_[i]; }

  bool contains(const Weight& w) const { return index_.count(w) != 0; }

  std::size_t index(const Weight& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) {
      throw ValidationError("weight " + w.str() + " is not in the level-" + std::to_string(k_) + " alcove of SU(" +
                            std::to_string(n_) + ")");
    }
    return it->second;
  }

  /// Parses and validates a weight string against this alcove.
  Weight parse(std::string_view text) const {
    Weight w = Weight::parse(text);
    if (w.rank() != n_) {
      throw ValidationError("weight '" + std::string(text) + "' needs " + std::to_string(n_ - 1) + " labels");
    }
    index(w);
    return w;
  }

  Weight vacuum() const { return Weight::zero(n_); }
  /// v = (1,0,...,0)
  Weight v() const { return Weight::fundamental(n_, 1); }
  /// v0 = (1,0,...,0,1), the adjoint
  Weight v0() const {
    std::vector<int> l(static_cast<std::size_t>(n_ - 1), 0);
    l.front() += 1;
    l.back() += 1;
    return Weight(std::move(l));
  }

  /// sum_i i * lambda_i mod n.
  int color(const Weight& w) const {
    long c = 0;
    for (std::size_t i = 0; i < w.labels().size(); ++i) c += static_cast<long>(i + 1) * w[i];
    return static_cast<int>(c % n_);
  }

  /// (lambda_1..lambda_{n-1}) -> (lambda_0, lambda_1, .., lambda_{n-2}), applied i times (i mod n).
  Weight omega(const Weight& w, int i = 1) const {
    const int times = ((i % n_) + n_) % n_;
    // Rotate the extended label vector (lambda_0, ..., lambda_{n-1}).
    std::vector<int> ext(static_cast<std::size_t>(n_));
    ext[0] = k_ - w.level_sum();
    std::copy(w.labels().begin(), w.labels().end(), ext.begin() + 1);
    std::rotate(ext.rbegin(), ext.rbegin() + times, ext.rend());
    return Weight(std::vector<int>(ext.begin() + 1, ext.end()));
  }

  std::size_t omega_index(std::size_t idx, int i = 1) const { return index(omega(alcove_[idx], i)); }

  std::size_t conjugate_index(std::size_t idx) const { return index(conjugate(alcove_[idx])); }

 private:
  void enumerate(std::vector<int>& cur, std::size_t pos, int remaining) {
    if (pos == cur.size()) {
      alcove_.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = v;
      enumerate(cur, pos + 1, remaining - v);
    }
    cur[pos] = 0;
  }

  int n_;
  int k_;
  std::vector<Weight> alcove_;
  std::map<Weight, std::size_t> index_;
};

/// Binomial coefficient, for alcove-size checks.
inline long binomial(long a, long b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace wzw
