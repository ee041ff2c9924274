// diskpoly: evaluate, tabulate and verify the disk polynomial family.
// Exit codes: 0 pass, 1 a check failed, 2 usage, domain or I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "complex_arg.hpp"
#include "diskpoly/disk_poly.hpp"
#include "diskpoly/quadrature.hpp"
#include "diskpoly/recurrences.hpp"
#include "diskpoly/series.hpp"
#include "diskpoly/verify.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace diskpoly;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ComplexValue complex_arg(const std::string& s, const char* what) {
  const auto z = cli::parse_complex(s);
  if (!z) throw UsageError(std::string("cannot parse ") + what + " '" + s + "' (expected re+imi)");
  return *z;
}

json cjson(ComplexValue z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Evaluated {
  ComplexValue value;
  std::string engine;
  double cond = 1.0;
  std::string polynomial;
};

Evaluated evaluate(const std::string& engine, DiskIndex idx, double gamma, ComplexValue z) {
  if (engine == "exact") {
    const TriPoly p = zernike_exact(idx);
    const ExactComplex ez{BigRational(z.real()), BigRational(z.imag())};
    const ExactComplex v = eval_exact(p, BigRational(gamma), ez);
    const auto mag = detail::explicit_max_term(idx.m, idx.n, gamma, z);
    const ComplexValue val(v.re.get_d(), v.im.get_d());
    return {val, "exact", detail::condition_ratio(mag, std::abs(val)), p.to_string()};
  }
  DiskPolyValue v;
  switch (parse_engine(engine)) {
    case Engine::explicit_sum: v = zernike_explicit(idx, gamma, z); break;
    case Engine::jacobi: v = zernike_jacobi(idx, gamma, z); break;
    case Engine::hyp2f1: v = zernike_2f1(idx, gamma, z); break;
    case Engine::recurrence: v = eval_by_recurrence(idx, gamma, z); break;
  }
  return {v.value, engine_name(v.engine), v.condition_estimate, ""};
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  int m = 0, n = 0;
  double gamma = 0;
  std::string z = "0", engine = "explicit";
  bool dump_exact = false;
};

int cmd_eval(const EvalArgs& a) {
  const ComplexValue z = complex_arg(a.z, "--z");
  if (std::abs(z) > 1.0) std::cerr << "warning: |z| = " << std::abs(z) << " lies outside the closed unit disk\n";
  const Evaluated e = evaluate(a.engine, DiskIndex(a.m, a.n), a.gamma, z);
  json out{{"m", a.m}, {"n", a.n}, {"gamma", a.gamma}, {"z", cjson(z)},
           {"value", cjson(e.value)}, {"engine", e.engine}, {"cond", e.cond}};
  if (!e.polynomial.empty()) {
    out["polynomial"] = e.polynomial;
  } else if (a.dump_exact) {
    out["polynomial"] = zernike_exact(DiskIndex(a.m, a.n)).to_string();
  }
  std::cout << out.dump(2) << "\n";
  return kPass;
}

// ---------------------------------------------------------------- table

struct TableArgs {
  double gamma = 0;
  int cap = 0;
  std::string engine = "explicit", format = "csv", points, output;
  int nr = 1, nt = 1;
  double rmax = 0;
};

std::vector<ComplexValue> grid(const TableArgs& a) {
  std::vector<ComplexValue> pts;
  if (!a.points.empty()) {
    std::stringstream ss(a.points);
    std::string item;
    while (std::getline(ss, item, ',')) pts.push_back(complex_arg(item, "--points entry"));
    return pts;
  }
  if (a.nr < 1 || a.nt < 1) throw UsageError("--nr and --nt must be positive");
  for (int i = 0; i < a.nr; ++i) {
    const double r = a.rmax * (i + 1) / a.nr;
    for (int j = 0; j < a.nt; ++j) pts.push_back(std::polar(r, 2 * std::numbers::pi * j / a.nt));
  }
  return pts;
}

int cmd_table(const TableArgs& a) {
  if (a.cap < 0) throw UsageError("--cap must be nonnegative");
  if (a.format != "csv" && a.format != "json") throw UsageError("--format must be csv or json");
  const auto pts = grid(a);
  std::ostringstream os;
  json rows = json::array();
  if (a.format == "csv") os << "m,n,gamma,re_z,im_z,re_val,im_val,engine,cond\n";
  for (int m = 0; m <= a.cap; ++m) {
    for (int n = 0; m + n <= a.cap; ++n) {
      for (const ComplexValue z : pts) {
        const Evaluated e = evaluate(a.engine, DiskIndex(m, n), a.gamma, z);
        if (a.format == "csv") {
          os << m << ',' << n << ',' << num(a.gamma) << ',' << num(z.real()) << ',' << num(z.imag()) << ','
             << num(e.value.real()) << ',' << num(e.value.imag()) << ',' << e.engine << ',' << num(e.cond) << '\n';
        } else {
          rows.push_back(json{{"m", m}, {"n", n}, {"gamma", a.gamma}, {"re_z", z.real()}, {"im_z", z.imag()},
                              {"re_val", e.value.real()}, {"im_val", e.value.imag()}, {"engine", e.engine},
                              {"cond", e.cond}});
        }
      }
    }
  }
  if (a.format == "json") os << rows.dump(2) << '\n';
  if (a.output.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(a.output, std::ios::binary);
    if (!f || !(f << os.str()) || !f.flush()) {
      std::cerr << "error: cannot write '" << a.output << "'\n";
      return kUsage;
    }
  }
  return kPass;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  SuiteOptions opts;
  int max_m = -1;
  bool json_out = false;
};

json suite_json(const SuiteResult& r) {
  return json{{"suite", r.suite_name},
              {"cases_run", r.cases_run},
              {"cases_failed", r.cases_failed},
              {"worst_residual", r.worst_residual},
              {"elapsed", r.elapsed},
              {"failures", r.failures}};
}

void print_suite(const SuiteResult& r) {
  std::cout << r.suite_name << ": " << r.cases_run << " cases, " << r.cases_failed << " failed, worst residual "
            << r.worst_residual << ", " << r.elapsed << " s\n";
  for (const auto& f : r.failures) std::cout << "  FAILED " << f << "\n";
}

int cmd_verify(VerifyArgs a) {
  if (a.max_m > 0) a.opts.cap = a.max_m;
  std::vector<std::string> names;
  if (a.suite == "all") {
    names = identity_suite_names();
  } else {
    const auto& known = all_suite_names();
    if (std::find(known.begin(), known.end(), a.suite) == known.end()) {
      throw UsageError("unknown suite '" + a.suite + "'");
    }
    names = {a.suite};
  }
  std::vector<SuiteResult> results;
  int failed = 0;
  for (const auto& name : names) {
    results.push_back(run_suite(name, a.opts));
    failed += results.back().cases_failed;
    if (!a.json_out) print_suite(results.back());
  }
  if (a.json_out) {
    if (results.size() == 1) {
      std::cout << suite_json(results[0]).dump(2) << "\n";
    } else {
      json arr = json::array();
      for (const auto& r : results) arr.push_back(suite_json(r));
      std::cout << json{{"suites", arr}, {"cases_failed", failed}}.dump(2) << "\n";
    }
  }
  return failed == 0 ? kPass : kFail;
}

// ---------------------------------------------------------------- series

struct SeriesArgs {
  std::string which;
  int m = 0, n = 0, r = 0;
  double gamma = 0, a = 0.5, b = 0.5, xi = 0.1, alpha = 1, beta = 1;
  std::string z = "0", u = "0", v = "0", x = "0";
  double tol = -1;
  int max_terms = -1, consecutive_small = -1;
};

int cmd_series(const SeriesArgs& s) {
  TruncationPolicy p = TruncationPolicy::from_env();
  if (s.max_terms > 0) p.max_terms = s.max_terms;
  if (s.tol > 0) p.tol = s.tol;
  if (s.consecutive_small > 0) p.consecutive_small = s.consecutive_small;
  const ComplexValue z = complex_arg(s.z, "--z");
  SeriesReport rep;
  if (s.which == "genfct_single") {
    rep = genfct_single(s.m, s.gamma, complex_arg(s.v, "--v"), z, p);
  } else if (s.which == "genfct_double") {
    rep = genfct_double(s.gamma, complex_arg(s.u, "--u"), complex_arg(s.v, "--v"), z, p);
  } else if (s.which == "quadratic") {
    rep = quadratic_transformation_check(s.a, s.b, s.xi, p);
  } else if (s.which == "reduction") {
    rep = hyp2f1_reduction_check(s.alpha, s.beta, complex_arg(s.x, "--x"), p);
  } else {
    SummationParams q;
    q.m = s.m;
    q.n = s.n;
    q.r = s.r;
    q.gamma = s.gamma;
    rep = summation_check(parse_summation(s.which), q, z, p);
  }
  json out{{"which", s.which},
           {"partial_sum", cjson(rep.partial_sum)},
           {"closed_form", cjson(rep.closed_form)},
           {"residual", rep.residual},
           {"terms_used", rep.terms_used},
           {"converged", rep.converged},
           {"digits", rep.digits},
           {"tol", p.tol},
           {"max_terms", p.max_terms}};
  std::cout << out.dump(2) << "\n";
  return rep.converged ? kPass : kFail;
}

// ---------------------------------------------------------------- ortho

struct OrthoArgs {
  double gamma = 0;
  int cap = 4;
  int radial_order = -1;
  double tol = 1e-10;
};

int cmd_ortho(const OrthoArgs& a) {
  if (a.cap < 0) throw UsageError("--cap must be nonnegative");
  DiskRule rule = rule_for_degree(a.gamma, a.cap);
  if (a.radial_order > 0) rule = build_rule(a.gamma, a.radial_order, rule.angular_count);
  const GramMatrix G = gram_matrix(a.cap, a.gamma, rule);
  const double worst = G.worst_offdiagonal_ratio();
  const double mass_err = std::abs(rule.mass() - std::numbers::pi / (a.gamma + 1));
  double diag = 0;
  for (std::size_t k = 0; k < G.indices.size(); ++k) {
    const double oracle = norm_by_monomials(G.indices[k], a.gamma);
    diag = std::max(diag, std::abs(G.entries(k, k).real() - oracle) / oracle);
  }
  const bool ok = worst <= a.tol && diag <= a.tol && mass_err <= 1e-12;
  json out{{"gamma", a.gamma},
           {"cap", a.cap},
           {"radial_order", rule.radial_nodes.size()},
           {"angular_count", rule.angular_count},
           {"basis_size", G.indices.size()},
           {"worst_offdiagonal_ratio", worst},
           {"hermitian_defect", G.hermitian_defect()},
           {"worst_diagonal_vs_oracle", diag},
           {"mass", rule.mass()},
           {"mass_error", mass_err},
           {"tol", a.tol},
           {"passed", ok}};
  std::cout << out.dump(2) << "\n";
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disk polynomials: evaluation, tables and identity verification"};
  app.require_subcommand(1);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate Z^gamma_{m,n}(z) and print JSON");
  eval->add_option("--m", ea.m, "first index")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--n", ea.n, "second index")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--gamma", ea.gamma, "parameter gamma")->required();
  eval->add_option("--z", ea.z, "point, re+imi")->required();
  eval->add_option("--engine", ea.engine, "explicit|jacobi|hyp2f1|recurrence|exact")
      ->check(CLI::IsMember({"explicit", "jacobi", "hyp2f1", "recurrence", "exact"}));
  eval->add_flag("--dump-exact", ea.dump_exact, "also print the exact polynomial text");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Tabulate Z_{m,n} for m+n <= cap over a grid");
  table->add_option("--gamma", ta.gamma, "parameter gamma")->required();
  table->add_option("--cap", ta.cap, "degree cap m+n");
  table->add_option("--engine", ta.engine, "explicit|jacobi|hyp2f1|recurrence|exact")
      ->check(CLI::IsMember({"explicit", "jacobi", "hyp2f1", "recurrence", "exact"}));
  table->add_option("--format", ta.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--points", ta.points, "comma-separated points (overrides the polar grid)");
  table->add_option("--nr", ta.nr, "radii of the polar grid: rmax (i+1)/nr");
  table->add_option("--nt", ta.nt, "angles of the polar grid: 2 pi j/nt");
  table->add_option("--rmax", ta.rmax, "outer radius of the polar grid");
  table->add_option("--output,-o", ta.output, "write to this file instead of stdout");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", va.suite, "burchnall|nielsen|recurrences|runge|chu|hermite|all, or another suite")
      ->required();
  verify->add_option("--cap", va.opts.cap, "index cap");
  verify->add_option("--cap2", va.opts.cap2, "secondary index cap");
  verify->add_option("--max-m", va.max_m, "index cap (alias of --cap)");
  verify->add_option("--seed", va.opts.seed, "seed for random polynomials and points");
  verify->add_option("--tol", va.opts.tol, "tolerance of numeric suites");
  verify->add_option("--samples", va.opts.samples, "random polynomials or points");
  verify->add_option("--max-terms", va.opts.max_terms, "series term cap (overrides DISKPOLY_MAX_TERMS)");
  verify->add_flag("--json", va.json_out, "print a JSON report");

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "Check one generating function or summation formula");
  series->add_option("--which", sa.which,
                     "gz1|gz2|gz4|confluent|hermite_mixed|monomial|exponential|genfct_single|genfct_double|"
                     "quadratic|reduction")
      ->required()
      ->check(CLI::IsMember({"gz1", "gz2", "gz4", "confluent", "hermite_mixed", "monomial", "exponential",
                             "genfct_single", "genfct_double", "quadratic", "reduction"}));
  series->add_option("--m", sa.m);
  series->add_option("--n", sa.n);
  series->add_option("--r", sa.r);
  series->add_option("--gamma", sa.gamma);
  series->add_option("--z", sa.z, "point, re+imi");
  series->add_option("--u", sa.u, "auxiliary variable, re+imi");
  series->add_option("--v", sa.v, "auxiliary variable, re+imi");
  series->add_option("--a", sa.a, "quadratic: a");
  series->add_option("--b", sa.b, "quadratic: b");
  series->add_option("--xi", sa.xi, "quadratic: xi");
  series->add_option("--alpha", sa.alpha, "reduction: alpha");
  series->add_option("--beta", sa.beta, "reduction: beta");
  series->add_option("--x", sa.x, "reduction: x, re+imi");
  series->add_option("--tol", sa.tol, "truncation tolerance");
  series->add_option("--max-terms", sa.max_terms, "term cap (overrides DISKPOLY_MAX_TERMS)");
  series->add_option("--consecutive-small", sa.consecutive_small, "small terms required before stopping");

  OrthoArgs oa;
  auto* ortho = app.add_subcommand("ortho", "Gram matrix orthogonality check");
  ortho->add_option("--gamma", oa.gamma, "parameter gamma")->required();
  ortho->add_option("--cap", oa.cap, "degree cap m+n");
  ortho->add_option("--radial-order", oa.radial_order, "radial Gauss nodes (default from the cap)");
  ortho->add_option("--tol", oa.tol, "tolerance for the off-diagonal ratio and the norms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(ea);
    if (*table) return cmd_table(ta);
    if (*verify) return cmd_verify(va);
    if (*series) return cmd_series(sa);
    if (*ortho) return cmd_ortho(oa);
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
