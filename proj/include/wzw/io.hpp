#pragma once

// Machine-readable emission: JSON documents (nlohmann::json) and CSV with
// re/im column pairs. Every matrix carries the alcove ordering.

#include <charconv>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wzw/fusion.hpp"
#include "wzw/modular_data.hpp"
#include "wzw/weights.hpp"

namespace wzw::io {

using json = nlohmann::ordered_json;

/// Shortest "%.17g" rendering, so CSV values round-trip exactly.
/// Shortest text that parses back to the same double.
inline std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drop negative zero
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline json alcove_json(const TheoryParams& tp) {
  json a = json::array();
  for (const Weight& w : tp.alcove()) a.push_back(w.str());
  return a;
}

inline json complex_json(Complex z) { return json::array({z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag()}); }

/// {"n", "k", "alcove", "matrix": rows of [re, im] pairs}
inline json matrix_json(const TheoryParams& tp, const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"n", tp.n()}, {"k", tp.k()}, {"alcove", alcove_json(tp)}, {"matrix", std::move(rows)}};
}

inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

/// First column is the row weight; then one re/im column pair per alcove weight.
inline std::string matrix_csv(const TheoryParams& tp, const ComplexMatrix& m) {
  std::ostringstream os;
  os << "weight";
  for (const Weight& w : tp.alcove()) os << ',' << csv_quote(w.str() + ".re") << ',' << csv_quote(w.str() + ".im");
  os << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << csv_quote(tp[static_cast<std::size_t>(i)].str());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << ',' << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag());
    }
    os << '\n';
  }
  return os.str();
}

/// Diagonal data (e.g. T) as a one-row-per-weight CSV.
inline std::string diagonal_csv(const TheoryParams& tp, const std::vector<Complex>& diag) {
  std::ostringstream os;
  os << "weight,re,im\n";
  for (std::size_t i = 0; i < diag.size(); ++i) {
    os << csv_quote(tp[i].str()) << ',' << format_double(diag[i].real()) << ',' << format_double(diag[i].imag()) << '\n';
  }
  return os.str();
}

inline json sector_sum_json(const SectorSum& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back(json{{"weight", w.str()}, {"mult", c}});
  return terms;
}

/// "mult x weight" lines, in alcove order.
inline std::string sector_sum_text(const SectorSum& x) {
  std::string s;
  for (const auto& [w, c] : x.terms()) s += std::to_string(c) + " x " + w.str() + "\n";
  return s;
}

/// Tensor export: {"n", "k", "alcove", "max_residual", "triples": [[l, m, nu, N], ...]} with alcove indices.
inline json tensor_json(const FusionTensor& t) {
  const TheoryParams& tp = t.params();
  json triples = json::array();
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      for (const auto& e : t.slice(a, b)) triples.push_back(json::array({a, b, e.nu, e.mult}));
    }
  }
  return json{{"n", tp.n()},
              {"k", tp.k()},
              {"alcove", alcove_json(tp)},
              {"max_residual", t.max_residual()},
              {"triples", std::move(triples)}};
}

}  // namespace wzw::io
