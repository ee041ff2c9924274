#include "diskpoly/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "diskpoly/identities.hpp"
#include "diskpoly/quadrature.hpp"
#include "diskpoly/random_poly.hpp"
#include "diskpoly/recurrences.hpp"
#include "diskpoly/series.hpp"

namespace diskpoly {

void SuiteResult::record(bool ok, double residual, const std::string& label) {
  ++cases_run;
  if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
  worst_residual = std::max(worst_residual, residual);
  if (!ok) {
    ++cases_failed;
    if (failures.size() < 10) failures.push_back(label);
  }
}

void SuiteResult::merge(const SuiteResult& other) {
  cases_run += other.cases_run;
  cases_failed += other.cases_failed;
  worst_residual = std::max(worst_residual, other.worst_residual);
  elapsed += other.elapsed;
  for (const auto& f : other.failures) {
    if (failures.size() < 10) failures.push_back(other.suite_name + ": " + f);
  }
}

namespace {

int pick(int v, int def) { return v > 0 ? v : def; }
double pick(double v, double def) { return v > 0 ? v : def; }

template <class... Args>
std::string label(const Args&... args) {
  std::ostringstream os;
  ((os << args), ...);
  return os.str();
}

// Exact case: zero residual passes; the residual reported is the term count.
void exact_case(SuiteResult& r, const TriPoly& res, const std::string& what) {
  r.record(res.is_zero(), static_cast<double>(res.size()), what);
}

// Runs body with timing.
template <class F>
SuiteResult timed(const std::string& name, F&& body) {
  SuiteResult r;
  r.suite_name = name;
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void series_case(SuiteResult& r, const SeriesReport& rep, double tol, const std::string& what, int term_cap = 0) {
  const bool ok = rep.converged && rep.residual <= tol && (term_cap == 0 || rep.terms_used <= term_cap);
  r.record(ok, rep.residual, what);
}

TruncationPolicy policy(const SuiteOptions& o) {
  TruncationPolicy p = TruncationPolicy::from_env();
  if (o.max_terms > 0) p.max_terms = o.max_terms;
  return p;
}

}  // namespace

SuiteResult suite_burchnall(const SuiteOptions& o) {
  return timed("burchnall", [&](SuiteResult& r) {
    const int cap = pick(o.cap, 3);
    std::mt19937 rng(o.seed);
    for (int s = 0; s < pick(o.samples, 5); ++s) {
      const TriPoly f = random_poly(rng, 3);
      for (int formula = 1; formula <= 3; ++formula) {
        for (int m = 0; m <= cap; ++m) {
          for (int n = 0; n <= cap; ++n) {
            exact_case(r, burchnall_residual(formula, m, n, f), label("f#", s, " formula ", formula, " m=", m, " n=", n));
          }
        }
      }
    }
  });
}

SuiteResult suite_composition(const SuiteOptions& o) {
  return timed("composition", [&](SuiteResult& r) {
    const int cap = pick(o.cap, 3);
    std::mt19937 rng(o.seed);
    for (int s = 0; s < pick(o.samples, 5); ++s) {
      const TriPoly f = random_poly(rng, 3);
      for (int m = 0; m <= cap; ++m) {
        for (int mp = 0; mp <= cap; ++mp) {
          exact_case(r, composition_residual(m, mp, f), label("f#", s, " m=", m, " m'=", mp));
        }
        exact_case(r, iterated_operator_residual(m, f), label("f#", s, " iterated m=", m));
      }
    }
  });
}

SuiteResult suite_nielsen(const SuiteOptions& o) {
  return timed("nielsen", [&](SuiteResult& r) {
    const int cap = pick(o.cap, 3), cap2 = pick(o.cap2, cap + 1);
    for (int m = 0; m <= cap; ++m) {
      for (int n = 0; n <= cap; ++n) {
        for (int s = 0; s <= cap; ++s) {
          for (int rr = 0; rr <= cap; ++rr) {
            exact_case(r, nielsen_residual(NielsenId::nielsen1, m, n, rr, s), label("nielsen1 ", m, n, rr, s));
          }
          exact_case(r, nielsen_residual(NielsenId::eq41, m, n, 0, s), label("eq41 ", m, n, s));
          exact_case(r, nielsen_residual(NielsenId::eq42, m, n, 0, s), label("eq42 ", m, n, s));
        }
      }
    }
    for (int m = 0; m <= cap2; ++m) {
      for (int n = 0; n <= cap2; ++n) {
        for (int rr = 0; rr <= cap2; ++rr) {
          exact_case(r, nielsen_residual(NielsenId::nielsen2, m, n, rr, 0), label("nielsen2 ", m, n, rr));
        }
      }
    }
  });
}

SuiteResult suite_recurrences(const SuiteOptions& o) {
  return timed("recurrences", [&](SuiteResult& r) {
    const int cap = pick(o.cap, 6);
    for (RecurrenceId id : kAllRecurrences) {
      for (int m = 0; m <= cap; ++m) {
        for (int n = 0; n <= cap; ++n) {
          exact_case(r, recurrence_residual(id, DiskIndex(m, n)), label(recurrence_name(id), " m=", m, " n=", n));
          exact_case(r, conjugate_counterpart(id, DiskIndex(m, n)),
                     label(recurrence_name(id), " conjugate m=", m, " n=", n));
        }
      }
    }
  });
}

SuiteResult suite_chu(const SuiteOptions& o) {
  return timed("chu", [&](SuiteResult& r) {
    for (int m = 1; m <= pick(o.cap, 10); ++m) {
      const GammaPoly res = chu_vandermonde_residual(m);
      r.record(res.is_zero(), res.is_zero() ? 0.0 : res.degree() + 1.0, label("chu-vandermonde m=", m));
    }
    const int cap2 = pick(o.cap2, 5);
    for (int m = 0; m <= cap2; ++m) {
      for (int n = 0; n <= cap2; ++n) {
        exact_case(r, corollary32_residual(m, n), label("cor32 m=", m, " n=", n));
        exact_case(r, corollary32_operator_residual(m, n), label("cor32 operator m=", m, " n=", n));
      }
    }
  });
}

SuiteResult suite_hermite(const SuiteOptions& o) {
  return timed("hermite", [&](SuiteResult& r) {
    const int cap = pick(o.cap, 4);
    for (int m = 0; m <= cap; ++m) {
      for (int n = 0; n <= cap; ++n) exact_case(r, hermite_corollary_residual(m, n), label("m=", m, " n=", n));
    }
  });
}

SuiteResult suite_runge(const SuiteOptions& o) {
  return timed("runge", [&](SuiteResult& r) {
    const int cap = pick(o.cap, 2);
    const double tol = pick(o.tol, 1e-9);
    std::mt19937 rng(o.seed);
    std::vector<std::pair<ComplexValue, ComplexValue>> pts;
    for (int i = 0; i < pick(o.samples, 20); ++i) {
      const ComplexValue z = random_disk_point(rng, 0.6);
      pts.emplace_back(z, random_disk_point(rng, 0.6));
    }
    for (int gamma = 1; gamma <= 3; ++gamma) {
      for (int m = 0; m <= cap; ++m) {
        for (int n = 0; n <= cap; ++n) {
          for (std::size_t i = 0; i < pts.size(); ++i) {
            const double res = std::abs(runge_residual(m, n, gamma, pts[i].first, pts[i].second));
            r.record(res <= tol, res, label("gamma=", gamma, " m=", m, " n=", n, " pair#", i));
          }
        }
      }
    }
    // the remark's constant: exact at rational points, z-independent numerically
    for (int gamma = 0; gamma <= 8; ++gamma) {
      BigRational expect(mpz_class(1) << gamma, factorial_exact(gamma));
      expect.canonicalize();
      for (const ExactComplex& z : {ExactComplex{0, 0}, ExactComplex{BigRational(1, 3), BigRational(2, 7)},
                                    ExactComplex{BigRational(-3, 5), BigRational(1, 2)}}) {
        const BigRational v = runge_remark_value_exact(gamma, z);
        r.record(v == expect, v == expect ? 0.0 : 1.0, label("remark exact gamma=", gamma));
      }
      const double first = runge_remark_value(gamma, pts[0].first);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const double d = std::abs(runge_remark_value(gamma, pts[i].first) - first);
        r.record(d <= 1e-13, d, label("remark z-independence gamma=", gamma, " point#", i));
      }
    }
  });
}

SuiteResult suite_engines(const SuiteOptions& o) {
  return timed("engines", [&](SuiteResult& r) {
    const int cap = pick(o.cap, 8);
    const double tol = pick(o.tol, 1e-10);
    std::mt19937 rng(o.seed);
    std::vector<ComplexValue> pts;
    for (int i = 0; i < pick(o.samples, 50); ++i) pts.push_back(random_disk_point(rng, 0.95));
    for (double gamma : {-0.5, 0.0, 1.5, 3.0}) {
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const ComplexValue z = pts[i];
        for (int m = 0; m <= cap; ++m) {
          for (int n = 0; n <= cap; ++n) {
            const DiskIndex idx(m, n);
            const ComplexValue e = zernike_explicit(idx, gamma, z).value;
            double worst = 0;
            for (ComplexValue v : {zernike_jacobi(idx, gamma, z).value, zernike_2f1(idx, gamma, z).value,
                                   eval_by_recurrence(idx, gamma, z).value}) {
              const double den = std::max(std::abs(e), std::abs(v));
              if (den > 0) worst = std::max(worst, std::abs(e - v) / den);
            }
            r.record(worst <= tol, worst, label("gamma=", gamma, " point#", i, " m=", m, " n=", n));
          }
        }
      }
    }
  });
}

SuiteResult suite_genfct(const SuiteOptions& o) {
  return timed("genfct", [&](SuiteResult& r) {
    const int cap = pick(o.cap, 4);
    const double tol = pick(o.tol, 1e-9);
    const TruncationPolicy p = policy(o);
    std::mt19937 rng(o.seed);
    for (int i = 0; i < pick(o.samples, 10); ++i) {
      const ComplexValue z = random_disk_point(rng, 0.7);
      const ComplexValue v = random_disk_point(rng, 0.4);
      const ComplexValue u2 = random_disk_point(rng, 0.3), v2 = random_disk_point(rng, 0.3);
      for (double gamma : {0.0, 1.0, 2.5}) {
        for (int m = 0; m <= cap; ++m) {
          series_case(r, genfct_single(m, gamma, v, z, p), tol, label("single point#", i, " gamma=", gamma, " m=", m),
                      500);
        }
        series_case(r, genfct_double(gamma, u2, v2, z, p), tol, label("double point#", i, " gamma=", gamma));
      }
    }
  });
}

SuiteResult suite_summation(const SuiteOptions& o) {
  return timed("summation", [&](SuiteResult& r) {
    const int cap = pick(o.cap, 3);
    const double tol = pick(o.tol, 1e-8);
    const TruncationPolicy p = policy(o);
    std::mt19937 rng(o.seed);
    for (int i = 0; i < pick(o.samples, 10); ++i) {
      const ComplexValue z = random_disk_point(rng, 0.7);
      for (double gamma : {0.0, 1.5}) {
        auto run = [&](SummationId id, int m, int n, int rr) {
          SummationParams q;
          q.m = m;
          q.n = n;
          q.r = rr;
          q.gamma = gamma;
          series_case(r, summation_check(id, q, z, p), tol,
                      label(summation_name(id), " point#", i, " gamma=", gamma, " m=", m, " n=", n, " r=", rr));
        };
        run(SummationId::gz2, 0, 0, 0);
        run(SummationId::gz4, 0, 0, 0);
        run(SummationId::exponential, 0, 0, 0);
        for (int m = 0; m <= cap; ++m) {
          run(SummationId::gz1, m, 0, 0);
          run(SummationId::confluent, m, 0, 0);
          for (int n = 0; n <= cap; ++n) {
            for (int rr = 0; rr <= cap; ++rr) run(SummationId::hermite_mixed, m, n, rr);
          }
        }
        for (int m = 0; m <= cap + 1; ++m) run(SummationId::monomial, m, 0, 0);
      }
    }
  });
}

SuiteResult suite_orthogonality(const SuiteOptions& o) {
  return timed("orthogonality", [&](SuiteResult& r) {
    const int cap = pick(o.cap, 10);
    const double tol = pick(o.tol, 1e-10);
    for (double gamma : {0.0, 1.0, 2.5}) {
      const DiskRule rule = rule_for_degree(gamma, cap);
      const double mass_err = std::abs(rule.mass() - std::numbers::pi / (gamma + 1));
      r.record(mass_err <= 1e-12, mass_err, label("mass gamma=", gamma));
      const GramMatrix G = gram_matrix(cap, gamma, rule);
      const double worst = G.worst_offdiagonal_ratio();
      r.record(worst <= tol, worst, label("off-diagonal gamma=", gamma));
      const double herm = G.hermitian_defect();
      r.record(herm <= 1e-14, herm, label("hermitian gamma=", gamma));
      for (std::size_t a = 0; a < G.indices.size(); ++a) {
        const double oracle = norm_by_monomials(G.indices[a], gamma);
        const double rel = std::abs(G.entries(a, a).real() - oracle) / oracle;
        r.record(rel <= tol, rel, label("diagonal gamma=", gamma, " m=", G.indices[a].m, " n=", G.indices[a].n));
      }
      const DiskRule twice = build_rule(gamma, 2 * static_cast<int>(rule.radial_nodes.size()), rule.angular_count);
      const GramMatrix G2 = gram_matrix(cap, gamma, twice);
      const double sat =
          (G.entries - G2.entries).cwiseAbs().maxCoeff() / G.entries.diagonal().cwiseAbs().maxCoeff();
      r.record(sat <= 1e-12, sat, label("saturation gamma=", gamma));
    }
  });
}

SuiteResult suite_hypergeometric(const SuiteOptions& o) {
  return timed("hypergeometric", [&](SuiteResult& r) {
    const double tol = pick(o.tol, 1e-10);
    const TruncationPolicy p = policy(o);
    for (double a : {0.5, 1.0, 1.5}) {
      for (double b : {0.5, 1.0, 1.5}) {
        for (double xi : {-0.4, -0.3, -0.2, -0.1, 0.0, 0.05, 0.1, 0.14}) {
          series_case(r, quadratic_transformation_check(a, b, xi, p), tol,
                      label("quadratic a=", a, " b=", b, " xi=", xi));
        }
      }
    }
    for (double alpha : {0.5, 1.5, 3.0}) {
      for (double beta : {0.25, 0.75, 2.0}) {
        for (ComplexValue x : {ComplexValue(0.3), ComplexValue(-0.5), ComplexValue(0.2, 0.4), ComplexValue(-0.1, -0.6)}) {
          series_case(r, hyp2f1_reduction_check(alpha, beta, x, p), tol,
                      label("reduction alpha=", alpha, " beta=", beta, " x=", x));
        }
      }
    }
  });
}

const std::vector<std::string>& identity_suite_names() {
  static const std::vector<std::string> names = {"burchnall", "nielsen", "recurrences", "runge", "chu", "hermite"};
  return names;
}

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = {"burchnall", "composition", "nielsen", "recurrences",
                                                 "runge", "chu", "hermite", "engines", "genfct",
                                                 "summation", "orthogonality", "hypergeometric"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  static const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>> table = {
      {"burchnall", suite_burchnall},     {"composition", suite_composition},
      {"nielsen", suite_nielsen},         {"recurrences", suite_recurrences},
      {"runge", suite_runge},             {"chu", suite_chu},
      {"hermite", suite_hermite},         {"engines", suite_engines},
      {"genfct", suite_genfct},           {"summation", suite_summation},
      {"orthogonality", suite_orthogonality}, {"hypergeometric", suite_hypergeometric},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw DomainError("unknown suite '" + name + "'");
  return it->second(opts);
}

}  // namespace diskpoly
