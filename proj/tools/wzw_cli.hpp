#pragma once

// Batch front end. `run` is separate from main() so the test suite can drive
// every subcommand in-process.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wzw/io.hpp"
#include "wzw/selfcheck.hpp"
#include "wzw/wzw.hpp"

namespace wzw::cli {

using io::json;

enum class Format { text, json, csv };

struct Invocation {
  std::string subcommand;
  int n = 0;
  int k = 0;
  int nprime = 0;
  int fundamental = 1;
  std::string a;
  std::string b;
  std::string weight;
  std::string format = "text";
  std::optional<double> tolerance;
  std::optional<double> verlinde_tolerance;
  std::string export_path;
};

namespace detail {

inline Format parse_format(const std::string& f) {
  if (f == "text") return Format::text;
  if (f == "json") return Format::json;
  if (f == "csv") return Format::csv;
  throw ValidationError("unknown format '" + f + "'");
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

inline std::string fixed(double x, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::fixed << (x == 0.0 ? 0.0 : x);
  return os.str();
}

inline Tolerances tolerances(const Invocation& inv) {
  Tolerances t = Tolerances::from_env();
  if (inv.tolerance) {
    if (!(*inv.tolerance > 0.0)) throw ValidationError("--tol must be positive");
    t.general = *inv.tolerance;
    t.unitarity = *inv.tolerance;
  }
  if (inv.verlinde_tolerance) {
    if (!(*inv.verlinde_tolerance > 0.0)) throw ValidationError("--verlinde-tol must be positive");
    t.verlinde = *inv.verlinde_tolerance;
  }
  return t;
}

inline TheoryParams level_from(const Invocation& inv) {
  if (inv.nprime != 0) {
    validate_simple_current_level(inv.n, inv.nprime);
    return TheoryParams(inv.n, inv.n * inv.nprime);
  }
  return TheoryParams(inv.n, inv.k);
}

inline json tolerance_json(const Tolerances& t) {
  return json{{"general", t.general}, {"verlinde", t.verlinde}, {"zero_rel", t.zero_rel}, {"unitarity", t.unitarity}};
}

inline int spectrum(const ModularData& md, Format f, std::ostream& out) {
  const TheoryParams& tp = md.params();
  if (f == Format::json) {
    json ws = json::array();
    for (std::size_t i = 0; i < md.size(); ++i) {
      ws.push_back(json{{"index", i},
                        {"weight", tp[i].str()},
                        {"color", tp.color(tp[i])},
                        {"conjugate", conjugate(tp[i]).str()},
                        {"h", md.conformal_dims()[i].str()},
                        {"qdim", md.qdims()[i]},
                        {"twist", io::complex_json(md.twists()[i])}});
    }
    emit(out, json{{"n", tp.n()},
                   {"k", tp.k()},
                   {"alcove_size", md.size()},
                   {"central_charge", md.central_charge().str()},
                   {"c0", md.c0()},
                   {"a", io::complex_json(md.a())},
                   {"global_dimension_squared", md.global_dimension_squared()},
                   {"weights", std::move(ws)}});
  } else if (f == Format::csv) {
    out << "index,weight,color,conjugate,h,qdim,twist.re,twist.im\n";
    for (std::size_t i = 0; i < md.size(); ++i) {
      out << i << ',' << io::csv_quote(tp[i].str()) << ',' << tp.color(tp[i]) << ','
          << io::csv_quote(conjugate(tp[i]).str()) << ',' << md.conformal_dims()[i].str() << ','
          << io::format_double(md.qdims()[i]) << ',' << io::format_double(md.twists()[i].real()) << ','
          << io::format_double(md.twists()[i].imag()) << '\n';
    }
  } else {
    out << "SU(" << tp.n() << ") level " << tp.k() << ": " << md.size() << " weights, c = " << md.central_charge().str()
        << ", c0 = " << fixed(md.c0(), 10) << " (mod 8)\n";
    out << "weight\tcolor\th\tqdim\n";
    for (std::size_t i = 0; i < md.size(); ++i) {
      out << tp[i].str() << '\t' << tp.color(tp[i]) << '\t' << md.conformal_dims()[i].str() << '\t'
          << fixed(md.qdims()[i]) << '\n';
    }
  }
  return 0;
}

inline int matrix_dump(const TheoryParams& tp, const ComplexMatrix& m, Format f, std::ostream& out) {
  if (f == Format::json) {
    emit(out, io::matrix_json(tp, m));
  } else {
    out << io::matrix_csv(tp, m);
  }
  return 0;
}

inline int tmatrix(const ModularData& md, Format f, std::ostream& out) {
  const TheoryParams& tp = md.params();
  if (f == Format::json) {
    json diag = json::array();
    for (const Complex& t : md.T()) diag.push_back(io::complex_json(t));
    emit(out, json{{"n", tp.n()},
                   {"k", tp.k()},
                   {"alcove", io::alcove_json(tp)},
                   {"c0", md.c0()},
                   {"diagonal", std::move(diag)}});
  } else {
    out << io::diagonal_csv(tp, md.T());
  }
  return 0;
}

inline int sector_output(const TheoryParams& tp, const std::string& lhs, const std::string& rhs, const SectorSum& x,
                         Format f, std::ostream& out) {
  if (f == Format::json) {
    emit(out, json{{"n", tp.n()}, {"k", tp.k()}, {"a", lhs}, {"b", rhs}, {"product", io::sector_sum_json(x)}});
  } else if (f == Format::csv) {
    out << "weight,mult\n";
    for (const auto& [w, c] : x.terms()) out << io::csv_quote(w.str()) << ',' << c << '\n';
  } else {
    out << io::sector_sum_text(x);
  }
  return 0;
}

inline int orbits(const ModularData& md, Format f, std::ostream& out) {
  const auto all = all_orbits(md);
  if (f == Format::json) {
    json arr = json::array();
    for (const auto& o : all) {
      json members = json::array();
      for (const Weight& w : o.members) members.push_back(w.str());
      arr.push_back(json{{"representative", o.representative.str()},
                         {"members", std::move(members)},
                         {"l", o.l},
                         {"pieces", o.pieces},
                         {"piece_dim", o.piece_dim}});
    }
    emit(out, json{{"n", md.params().n()}, {"k", md.params().k()}, {"orbits", std::move(arr)}});
  } else {
    const char sep = f == Format::csv ? ',' : '\t';
    out << "representative" << sep << "l" << sep << "pieces" << sep << "piece_dim" << sep << "members\n";
    for (const auto& o : all) {
      std::string members;
      for (const Weight& w : o.members) members += (members.empty() ? "" : " ") + w.str();
      const std::string rep = f == Format::csv ? io::csv_quote(o.representative.str()) : o.representative.str();
      out << rep << sep << o.l << sep << o.pieces << sep << io::format_double(o.piece_dim) << sep
          << (f == Format::csv ? io::csv_quote(members) : members) << '\n';
    }
  }
  return 0;
}

inline int invariant(const ModularData& md, int nprime, Format f, std::ostream& out) {
  const TheoryParams& tp = md.params();
  const SimpleCurrentData sc = build_z(md, nprime);
  if (f == Format::json) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < sc.Z.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < sc.Z.cols(); ++j) row.push_back(sc.Z(i, j));
      rows.push_back(std::move(row));
    }
    json exps = json::array();
    for (const auto& [w, c] : sc.exponents) exps.push_back(json{{"weight", w.str()}, {"mult", c}});
    emit(out, json{{"n", tp.n()},
                   {"k", tp.k()},
                   {"nprime", nprime},
                   {"alcove", io::alcove_json(tp)},
                   {"Z", std::move(rows)},
                   {"exponents", std::move(exps)},
                   {"commutation", json{{"max_abs_ZS_minus_SZ", sc.zs_residual},
                                        {"max_abs_ZT_minus_TZ", sc.zt_residual}}}});
  } else if (f == Format::csv) {
    out << "weight";
    for (const Weight& w : tp.alcove()) out << ',' << io::csv_quote(w.str());
    out << '\n';
    for (Eigen::Index i = 0; i < sc.Z.rows(); ++i) {
      out << io::csv_quote(tp[static_cast<std::size_t>(i)].str());
      for (Eigen::Index j = 0; j < sc.Z.cols(); ++j) out << ',' << sc.Z(i, j);
      out << '\n';
    }
    out << "# max|ZS-SZ|=" << io::format_double(sc.zs_residual) << '\n';
    out << "# max|ZT-TZ|=" << io::format_double(sc.zt_residual) << '\n';
  } else {
    out << "SU(" << tp.n() << ") level " << tp.k() << " simple-current invariant (n' = " << nprime << ")\n";
    for (Eigen::Index i = 0; i < sc.Z.rows(); ++i) {
      for (Eigen::Index j = 0; j < sc.Z.cols(); ++j) {
        if (sc.Z(i, j) != 0) {
          out << "Z[" << tp[static_cast<std::size_t>(i)].str() << "][" << tp[static_cast<std::size_t>(j)].str()
              << "] = " << sc.Z(i, j) << '\n';
        }
      }
    }
    out << "max|ZS-SZ| = " << io::format_double(sc.zs_residual) << '\n';
    out << "max|ZT-TZ| = " << io::format_double(sc.zt_residual) << '\n';
  }
  return 0;
}

inline int maximal(const ModularData& md, Format f, std::ostream& out) {
  const auto table = maximality_table(md);
  if (f == Format::json) {
    json arr = json::array();
    for (const auto& r : table) {
      arr.push_back(json{{"weight", r.weight.str()},
                         {"verdict", to_string(r.verdict)},
                         {"reason", to_string(r.reason)},
                         {"s_v", io::complex_json(r.s_v_value)}});
    }
    emit(out, json{{"n", md.params().n()}, {"k", md.params().k()}, {"table", std::move(arr)}});
  } else {
    const char sep = f == Format::csv ? ',' : '\t';
    out << "weight" << sep << "verdict" << sep << "reason\n";
    for (const auto& r : table) {
      out << (f == Format::csv ? io::csv_quote(r.weight.str()) : r.weight.str()) << sep << to_string(r.verdict) << sep
          << to_string(r.reason) << '\n';
    }
  }
  return 0;
}

inline int lattice(const ModularData& md, int nprime, Format f, std::ostream& out) {
  const LatticeEvidence e = lattice_evidence(md, nprime);
  const FusionTensor fusion = verlinde_tensor(md);
  const auto survivors = factorization_scan(md, fusion, nprime);
  const auto expected = expected_survivors(md.params(), nprime);
  const std::set<std::pair<Weight, Weight>> got(survivors.begin(), survivors.end());

  json orbit = json::array();
  for (const Weight& w : e.orbit_of_u) orbit.push_back(w.str());
  json surv = json::array();
  for (const auto& [x, y] : survivors) surv.push_back(json::array({x.str(), y.str()}));
  json surplus = json::array();
  for (const auto& p : got) {
    if (!expected.count(p)) surplus.push_back(json::array({p.first.str(), p.second.str()}));
  }
  json missing = json::array();
  for (const auto& p : expected) {
    if (!got.count(p)) missing.push_back(json::array({p.first.str(), p.second.str()}));
  }
  json failures = json::array();
  for (const auto& s : e.failures) failures.push_back(s);
  const bool scan_ok = surplus.empty() && missing.empty();
  const json doc{{"kind", "evidence"},
                 {"n", e.n},
                 {"nprime", e.nprime},
                 {"k", e.n * e.nprime},
                 {"u", e.u.str()},
                 {"fixed_rep", e.fixed_rep.str()},
                 {"orbit_of_u", std::move(orbit)},
                 {"v_times_fixed", io::sector_sum_json(e.v_times_fixed)},
                 {"decomposition_check", e.decomposition_check},
                 {"d_u", e.d_u},
                 {"d_v", e.d_v},
                 {"d_fixed", e.d_fixed},
                 {"dimension_check", e.dimension_check},
                 {"s_checks", json{{"S_u_v0", io::complex_json(e.s_u_v0)}, {"S_u_Lambda", io::complex_json(e.s_u_lambda)}}},
                 {"s_check", e.s_check},
                 {"survivors", std::move(surv)},
                 {"surplus_survivors", std::move(surplus)},
                 {"missing_survivors", std::move(missing)},
                 {"scan_matches_expected", scan_ok},
                 {"failures", std::move(failures)},
                 {"passed", e.passed() && scan_ok}};
  if (f == Format::json) {
    emit(out, doc);
  } else {
    out << "u = " << e.u.str() << ", fixed representation = " << e.fixed_rep.str() << '\n';
    out << "v x fixed = " << e.v_times_fixed.str() << '\n';
    out << "decomposition_check " << (e.decomposition_check ? "pass" : "FAIL") << '\n';
    out << "dimension_check " << (e.dimension_check ? "pass" : "FAIL") << '\n';
    out << "s_check " << (e.s_check ? "pass" : "FAIL") << '\n';
    out << "survivors (evidence)\n";
    for (const auto& [x, y] : survivors) out << "  (" << x.str() << ") (" << y.str() << ")\n";
    out << "scan_matches_expected " << (scan_ok ? "pass" : "FAIL") << '\n';
  }
  return 0;
}

inline int selfcheck(const ModularData& md, Format f, std::ostream& out) {
  const auto checks = run_selfcheck(md);
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
  if (f == Format::json) {
    json arr = json::array();
    for (const auto& c : checks) {
      arr.push_back(json{{"name", c.name},
                         {"value", c.value},
                         {"tolerance", c.tolerance},
                         {"passed", c.passed()},
                         {"detail", c.detail}});
    }
    emit(out, json{{"n", md.params().n()},
                   {"k", md.params().k()},
                   {"tolerances", tolerance_json(md.tolerances())},
                   {"checks", std::move(arr)},
                   {"passed", ok}});
  } else {
    const Tolerances& t = md.tolerances();
    out << "tolerances: general=" << io::format_double(t.general) << " verlinde=" << io::format_double(t.verlinde)
        << " zero_rel=" << io::format_double(t.zero_rel) << " unitarity=" << io::format_double(t.unitarity) << '\n';
    for (const auto& c : checks) {
      out << (c.passed() ? "PASS " : "FAIL ") << c.name << " value=" << io::format_double(c.value)
          << " tol=" << io::format_double(c.tolerance);
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << '\n';
    }
    out << (ok ? "selfcheck passed\n" : "selfcheck FAILED\n");
  }
  return ok ? 0 : 2;
}

inline int execute(const Invocation& inv, std::ostream& out) {
  const Format f = parse_format(inv.format);
  const TheoryParams tp = level_from(inv);
  const std::string& s = inv.subcommand;

  if (s == "pieri") return sector_output(tp, Weight::fundamental(tp.n(), inv.fundamental).str(), inv.weight,
                                         pieri_fundamental(tp, inv.fundamental, tp.parse(inv.weight)), f, out);

  if (s == "fuse") {
    const Weight a = tp.parse(inv.a);
    const Weight b = tp.parse(inv.b);
    const ModularData md(tp, tolerances(inv));
    if (!inv.export_path.empty()) {
      std::ofstream file(inv.export_path);
      if (!file) throw ValidationError("cannot open '" + inv.export_path + "' for writing");
      file << io::tensor_json(verlinde_tensor(md)).dump() << '\n';
    }
    return sector_output(tp, a.str(), b.str(), verlinde_product(md, a, b), f, out);
  }

  const ModularData md(tp, tolerances(inv));
  if (s == "spectrum") return spectrum(md, f, out);
  if (s == "smatrix") return matrix_dump(tp, md.S(), f, out);
  if (s == "tmatrix") return tmatrix(md, f, out);
  if (s == "orbits") return orbits(md, f, out);
  if (s == "invariant") return invariant(md, inv.nprime, f, out);
  if (s == "maximal") return maximal(md, f, out);
  if (s == "lattice-evidence") return lattice(md, inv.nprime, f, out);
  if (s == "selfcheck") return selfcheck(md, f, out);
  throw ValidationError("unknown subcommand '" + s + "'");
}

}  // namespace detail

/// Exit status: 0 success, 1 validation failure, 2 internal consistency abort.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular data, fusion and simple-current analysis for SU(n) at level k", "wzw"};
  app.require_subcommand(1, 1);
  Invocation inv;

  auto add_format = [&](CLI::App* sub, bool csv = true) {
    sub->add_option("--format", inv.format, "Output format")
        ->check(CLI::IsMember(csv ? std::vector<std::string>{"text", "json", "csv"}
                                  : std::vector<std::string>{"text", "json"}));
    sub->add_option("--tol", inv.tolerance, "General numerical tolerance (default 1e-9, env WZW_TOL)");
    sub->add_option("--verlinde-tol", inv.verlinde_tolerance, "Verlinde rounding tolerance (default 1e-6)");
  };
  auto add_nk = [&](CLI::App* sub) {
    sub->add_option("--n", inv.n, "Rank n >= 2")->required();
    sub->add_option("--k", inv.k, "Level k >= 1")->required();
  };
  auto add_nprime = [&](CLI::App* sub) {
    sub->add_option("--n", inv.n, "Rank n >= 2")->required();
    sub->add_option("--nprime", inv.nprime, "n' with k = n' n")->required();
  };

  for (const char* name : {"spectrum", "smatrix", "tmatrix", "orbits", "maximal", "selfcheck"}) {
    auto* sub = app.add_subcommand(name);
    add_nk(sub);
    add_format(sub);
  }
  app.get_subcommand("spectrum")->description("Conformal dimensions, twists, quantum dimensions, c0");
  app.get_subcommand("smatrix")->description("Kac-Peterson S-matrix");
  app.get_subcommand("tmatrix")->description("Diagonal of T");
  app.get_subcommand("orbits")->description("Z_n simple-current orbits and fixed-point splitting");
  app.get_subcommand("maximal")->description("Maximality verdict for every alcove weight");
  app.get_subcommand("selfcheck")->description("Run every invariant check for one theory");

  auto* fuse = app.add_subcommand("fuse", "Decompose a x b by the Verlinde formula");
  add_nk(fuse);
  fuse->add_option("--a", inv.a, "First weight, e.g. 1,0")->required();
  fuse->add_option("--b", inv.b, "Second weight")->required();
  fuse->add_option("--export-tensor", inv.export_path, "Also write the full fusion tensor as JSON triples");
  add_format(fuse);

  auto* pieri = app.add_subcommand("pieri", "Fusion with a fundamental weight via vertical strips");
  add_nk(pieri);
  pieri->add_option("--i", inv.fundamental, "Fundamental index 1..n-1")->required();
  pieri->add_option("--weight", inv.weight, "Weight, e.g. 2,1")->required();
  add_format(pieri);

  auto* invariant = app.add_subcommand("invariant", "Simple-current modular invariant Z at k = n' n");
  add_nprime(invariant);
  add_format(invariant);

  auto* lattice = app.add_subcommand("lattice-evidence", "Numeric evidence for the 2n intermediate subfactors of a_u");
  add_nprime(lattice);
  add_format(lattice, false);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  inv.subcommand = app.get_subcommands().front()->get_name();

  try {
    return detail::execute(inv, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace wzw::cli
