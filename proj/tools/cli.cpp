#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coinv/artinian.hpp"
#include "coinv/compositions.hpp"
#include "coinv/homology.hpp"
#include "coinv/inverse_system.hpp"
#include "coinv/json_io.hpp"
#include "coinv/random_lm.hpp"

namespace coinv::cli {

namespace {

Field parse_field(const std::string& s) {
  if (s == "q" || s == "Q" || s == "QQ") return Field::rationals();
  std::uint64_t p = 0;
  try {
    p = std::stoull(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("field must be 'q' or a prime below 2^31, got '" + s + "'");
  }
  return Field::prime(p);
}

std::vector<int> parse_caps(const std::string& s, int n) {
  std::vector<int> caps;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      caps.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("caps must be integers, got '" + tok + "'");
    }
  }
  if (caps.size() == 1) return std::vector<int>(n, caps[0]);
  if (static_cast<int>(caps.size()) != n) {
    throw std::invalid_argument("expected 1 or " + std::to_string(n) + " cap values");
  }
  return caps;
}

template <typename Seq>
void print_csv_row(std::ostream& out, const std::string& head, const Seq& values) {
  out << head;
  for (const auto& v : values) out << "," << v;
  out << "\n";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// Fixed 3 decimals with trailing zeros trimmed (keeps at least one digit
// before the point).
std::string short_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

int cmd_analyze(const std::string& file, const Field& field, const std::string& emit,
                std::ostream& out) {
  const SimplicialComplex cx = read_complex_file(file);
  const FVector fv = fhg_vectors(cx);
  print_csv_row(out, "f", fv.f);
  print_csv_row(out, "h", fv.h);
  print_csv_row(out, "g", fv.g);
  out << "dim," << cx.dim() << "\n";
  out << "n_vertices," << cx.n_vertices() << "\n";

  const PseudomanifoldReport pm = classify_pseudomanifold(cx);
  out << "pure," << yesno(pm.is_pure) << "\n";
  out << "strongly_connected," << yesno(pm.is_strongly_connected) << "\n";
  out << "max_ridge_degree," << pm.max_ridge_degree << "\n";
  out << "boundary_ridges," << pm.boundary_ridges.size() << "\n";
  out << "pseudomanifold: " << yesno(pm.is_pseudomanifold)
      << ", without boundary: " << yesno(pm.is_without_boundary) << "\n";
  out << "cone_apexes";
  for (int v : pm.cone_apexes) out << "," << cx.label_of(v);
  out << "\n";

  const BettiProfile betti = reduced_betti(cx, field);
  print_csv_row(out, "betti", betti.betti);
  const bool orientable =
      pm.is_pseudomanifold && pm.is_without_boundary && betti.at(cx.dim()) > 0;
  if (pm.is_pseudomanifold && pm.is_without_boundary) {
    out << "orientable: " << yesno(orientable) << "\n";
  } else {
    out << "orientable: n/a\n";
  }
  const ReisnerFlags rf = reisner_check(cx, field);
  out << "cohen_macaulay," << yesno(rf.is_cohen_macaulay) << "\n";
  out << "homology_sphere," << yesno(rf.is_homology_sphere) << "\n";
  out << "field," << field.name() << "\n";

  if (!emit.empty()) {
    std::ofstream f(emit);
    if (!f) throw std::invalid_argument("cannot write '" + emit + "'");
    write_complex_json(f, cx);
  }
  return 0;
}

int cmd_stress(const std::string& file, const Field& field, std::ostream& out,
               std::ostream& err) {
  const SimplicialComplex cx = read_complex_file(file);
  const TopCycleSpace cycles = top_cycle_space(cx, field);
  if (cycles.basis.empty()) {
    err << "error: no top-dimensional cycle (reduced top homology vanishes over "
        << field.name() << ")\n";
    return 1;
  }
  const DualPolynomial f_delta = top_stress(cx, cycles.basis.front(), field);

  bool elementary_ok = true;
  for (int k = 1; k <= cx.dim() + 1; ++k) {
    const DualPolynomial image = contract(elementary_symmetric_on_faces(cx, k), f_delta);
    if (field.is_rationals()) {
      elementary_ok = elementary_ok && image.is_zero();
    } else {
      for (const auto& [e, c] : image.terms()) {
        elementary_ok = elementary_ok && reduce_mod(c, field.modulus()) == 0;
      }
    }
  }
  bool sr_ok = true;
  for (const Face& nf : cx.minimal_nonfaces()) {
    DualPolynomial gen(cx.n_vertices());
    Exponents e(cx.n_vertices(), 0);
    for (int v : nf) e[v] = 1;
    gen.add_term(e, Rat(1));
    sr_ok = sr_ok && contract(gen, f_delta).is_zero();
  }

  nlohmann::json doc;
  doc["degree"] = f_delta.degree();
  doc["term_count"] = f_delta.term_count();
  doc["orientation_basis"] = cycles.orientation_flagged;
  doc["terms"] = nlohmann::json::parse(dual_polynomial_to_json(f_delta));
  doc["checks"]["elementary_contractions_vanish"] = elementary_ok;
  doc["checks"]["stanley_reisner_contractions_vanish"] = sr_ok;
  out << doc.dump(2) << "\n";
  return elementary_ok && sr_ok ? 0 : 1;
}

int cmd_perp(const std::string& file, const std::string& extra_arg, int max_degree,
             const Field& field, std::ostream& out) {
  const SimplicialComplex cx = read_complex_file(file);
  std::vector<DualPolynomial> extra;
  if (extra_arg == "elementary") {
    extra = universal_parameters(cx);
  } else {
    extra = read_forms_file(extra_arg, cx.n_vertices());
  }
  const StressProfile prof = dual_module_generators(cx, extra, max_degree, field);
  out << "degree,perp_dim,generators\n";
  for (std::size_t k = 0; k < prof.perp_dims.size(); ++k) {
    out << k << "," << prof.perp_dims[k] << "," << prof.generator_counts[k] << "\n";
  }
  return 0;
}

void print_hf_rows(std::ostream& out, const GradedRankReport& rep) {
  print_csv_row(out, "hf", rep.dims);
  print_csv_row(out, "hf_mod_l", quotient_dims(rep));
}

int cmd_wlp(const std::string& file, const std::string& caps_arg, const Field& field,
            int jmax, bool quotient, std::ostream& out) {
  const SimplicialComplex cx = read_complex_file(file);
  const ArtinianSpec spec(cx, parse_caps(caps_arg, cx.n_vertices()), field);
  const GradedRankReport rep = lefschetz_verdict(spec, jmax);
  if (quotient) {
    print_hf_rows(out, rep);
  } else {
    const auto& r1 = rep.ranks.at(1);
    out << "degree,dim,rank_to_next,full_rank_target,status\n";
    for (std::size_t t = 0; t < rep.dims.size(); ++t) {
      out << t << "," << rep.dims[t];
      if (t < r1.size()) {
        const long long target = std::min(rep.dims[t], rep.dims[t + 1]);
        out << "," << r1[t] << "," << target << ","
            << (r1[t] == target ? "full" : "deficient");
      } else {
        out << ",,,";
      }
      out << "\n";
    }
    for (const auto& [j, ranks] : rep.ranks) {
      if (j == 1) continue;
      for (std::size_t t = 0; t < ranks.size(); ++t) {
        const long long target = std::min(rep.dims[t], rep.dims[t + j]);
        out << "power," << j << "," << t << "," << t + j << "," << ranks[t] << ","
            << target << "," << (ranks[t] == target ? "full" : "deficient") << "\n";
      }
    }
  }
  out << "verdict," << (rep.wlp_holds ? "holds" : "fails") << "\n";
  return 0;
}

int cmd_hilbert(const std::string& file, const std::string& caps_arg, const Field& field,
                std::ostream& out) {
  const SimplicialComplex cx = read_complex_file(file);
  const ArtinianSpec spec(cx, parse_caps(caps_arg, cx.n_vertices()), field);
  print_hf_rows(out, lefschetz_verdict(spec, 1));
  return 0;
}

int cmd_compositions_verify(int dmax, std::ostream& out) {
  const auto checks = verify_identities(dmax);
  out << "kind,d,i,lhs,rhs,ok\n";
  bool all_ok = true;
  for (const auto& c : checks) {
    out << c.kind << "," << c.d << ",";
    if (c.kind == "peak") out << c.i;
    out << "," << c.lhs.get_str() << "," << c.rhs.get_str() << "," << yesno(c.ok) << "\n";
    all_ok = all_ok && c.ok;
  }
  return all_ok ? 0 : 1;
}

int cmd_lm(const LMConfig& cfg, const std::string& mode_str, long long budget,
           std::ostream& out) {
  const LMMode mode = lm_mode_from_string(mode_str);
  const MonteCarloReport rep = monte_carlo(cfg, mode, budget);
  out << "n,d,p,trials,seed,field,mode,hits,skipped,estimate,mean_fd\n";
  out << cfg.n << "," << cfg.d << "," << cfg.p << "," << cfg.trials << "," << cfg.seed
      << "," << cfg.field.name() << "," << lm_mode_name(mode) << "," << rep.hits << ","
      << rep.skipped << "," << rat_to_string(rep.estimate) << ","
      << rat_to_string(rep.mean_fd) << "\n";
  return 0;
}

int cmd_cd(int dmax, double tol, std::ostream& out) {
  out << "d";
  for (int d = 2; d <= dmax; ++d) out << "," << d;
  out << "\nc_d";
  for (int d = 2; d <= dmax; ++d) out << "," << short_real(threshold_cd(d, tol));
  out << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"coinvariant stresses, Lefschetz verdicts and random complexes"};
  app.require_subcommand(1);

  std::string file, field_str = "q", emit, extra_arg = "elementary", caps_arg;
  std::string mode_str = "homology", forms_path;
  int max_degree = -1, jmax = 1, dmax = 8;
  bool quotient = false;
  double tol = 1e-9;
  long long budget = 50000;
  LMConfig lmcfg;

  auto* analyze = app.add_subcommand("analyze", "enumerative, topological and ring-theoretic report");
  analyze->add_option("file", file)->required();
  analyze->add_option("--field", field_str);
  analyze->add_option("--emit", emit, "write the canonical complex JSON to this path");

  auto* stress = app.add_subcommand("stress", "top stress of a top-dimensional cycle");
  stress->add_option("file", file)->required();
  stress->add_option("--field", field_str);

  auto* perp = app.add_subcommand("perp", "annihilator dimensions and dual generators");
  perp->add_option("file", file)->required();
  perp->add_option("--extra", extra_arg, "'elementary' or a forms JSON file");
  perp->add_option("--max", max_degree, "top degree (default binom(d+2,2))");
  perp->add_option("--field", field_str);

  auto* wlp = app.add_subcommand("wlp", "Lefschetz rank report for a monomial reduction");
  wlp->add_option("file", file)->required();
  wlp->add_option("--caps", caps_arg)->required();
  wlp->add_option("--field", field_str);
  wlp->add_option("--jmax", jmax, "check powers of L up to this exponent");
  wlp->add_flag("--quotient", quotient, "print the Hilbert rows of A and A/(L)");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a monomial reduction");
  hilbert->add_option("file", file)->required();
  hilbert->add_option("--caps", caps_arg)->required();
  hilbert->add_option("--field", field_str);

  auto* compositions = app.add_subcommand("compositions", "bounded composition counts");
  auto* verify = compositions->add_subcommand("verify", "check the peak and linkage identities");
  verify->add_option("--dmax", dmax)->required();
  compositions->require_subcommand(1);

  auto* lm = app.add_subcommand("lm", "Monte Carlo over random complexes");
  lm->add_option("--n", lmcfg.n)->required();
  lm->add_option("--d", lmcfg.d)->required();
  lm->add_option("--p", lmcfg.p)->required();
  lm->add_option("--trials", lmcfg.trials)->required();
  lm->add_option("--seed", lmcfg.seed)->required();
  lm->add_option("--mode", mode_str, "homology | wlp_criterion | wlp_direct");
  lm->add_option("--field", field_str);
  lm->add_option("--budget", budget, "matrix cell budget for wlp_direct (<=0: unlimited)");

  auto* cd = app.add_subcommand("cd", "top-homology threshold constants");
  cd->add_option("--dmax", dmax)->required();
  cd->add_option("--tol", tol);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Field field = parse_field(field_str);
    if (analyze->parsed()) return cmd_analyze(file, field, emit, out);
    if (stress->parsed()) return cmd_stress(file, field, out, err);
    if (perp->parsed()) return cmd_perp(file, extra_arg, max_degree, field, out);
    if (wlp->parsed()) return cmd_wlp(file, caps_arg, field, jmax, quotient, out);
    if (hilbert->parsed()) return cmd_hilbert(file, caps_arg, field, out);
    if (compositions->parsed()) return cmd_compositions_verify(dmax, out);
    if (lm->parsed()) {
      lmcfg.field = field;
      return cmd_lm(lmcfg, mode_str, budget, out);
    }
    if (cd->parsed()) return cmd_cd(dmax, tol, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace coinv::cli
