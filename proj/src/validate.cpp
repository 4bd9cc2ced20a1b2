#include "hopnorms/validate.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <tuple>

#include "hopnorms/errors.hpp"
#include "hopnorms/exact.hpp"
#include "hopnorms/info.hpp"
#include "hopnorms/laplace.hpp"
#include "hopnorms/param.hpp"
#include "hopnorms/polykernel.hpp"
#include "hopnorms/special.hpp"

namespace hopnorms::validate {

namespace {

using F = PolynomialFamily;
using param::Form;
using param::Large;

const double kPi = std::numbers::pi;
const double kLn2 = std::numbers::ln2;

// Both sides at roundoff: the formula is exact for this case and the
// "smaller at the larger parameter" comparison only sees noise.
const double kNoiseFloor = 1e-9;

double rel_log(const SignedLogReal& a, const SignedLogReal& b) {
  if (a.is_zero() || b.is_zero() || a.sign() != b.sign()) return a.is_zero() && b.is_zero() ? 0.0 : INFINITY;
  return std::fabs(std::expm1(a.log_abs() - b.log_abs()));
}

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

class Collector {
 public:
  explicit Collector(Report& r, std::string suite) : r_(r), suite_(std::move(suite)) {}

  void check(const std::string& name, double measured, double reference, double error, double tol,
             const std::string& note = "") {
    r_.checks.push_back({suite_, name, error <= tol, false, measured, reference, error, tol, note});
  }
  // Documented discrepancy: a formula kept as published, compared with its oracle.
  void info(const std::string& name, double measured, double reference, double error, double tol,
            const std::string& note) {
    r_.checks.push_back({suite_, name, error <= tol, true, measured, reference, error, tol, note});
  }
  void boolean(const std::string& name, bool ok, double measured, double reference, const std::string& note) {
    r_.checks.push_back({suite_, name, ok, false, measured, reference, ok ? 0.0 : 1.0, 0.0, note});
  }
  // Runs body; an exception becomes a failed check.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      r_.checks.push_back({suite_, name, false, false, NAN, NAN, INFINITY, 0.0, std::string("exception: ") + e.what()});
    }
  }

 private:
  Report& r_;
  std::string suite_;
};

struct Fam {
  F f;
  std::string tag;
};

std::vector<Fam> sample_families() {
  return {{F::hermite(), "hermite"},
          {F::laguerre(0), "laguerre(0)"},
          {F::laguerre(2.5), "laguerre(2.5)"},
          {F::jacobi(0, 0), "jacobi(0,0)"},
          {F::jacobi(2.5, 1.5), "jacobi(2.5,1.5)"},
          {F::gegenbauer(1), "gegenbauer(1)"},
          {F::gegenbauer(3.5), "gegenbauer(3.5)"}};
}

std::string at(const std::string& tag, int n) { return tag + " n=" + std::to_string(n); }

void identities(Report& rep) {
  Collector c(rep, "identities");
  for (const auto& [f, tag] : sample_families()) {
    for (int n : {0, 3, 8}) {
      c.guarded("normalization " + at(tag, n), [&] {
        double w1 = exact::weighted_norm_quad(f, n, 1, {}, true).value.to_double();
        c.check("normalization W1 " + at(tag, n), w1, 1.0, rel(w1, 1.0), 1e-9);
        auto n2 = exact::unweighted_norm_quad(f, n, 2).value;
        auto k = norm_constant_log(f, n);
        c.check("normalization N2=kappa " + at(tag, n), n2.log_abs(), k.log_abs(), rel_log(n2, k), 1e-9);
      });
    }
    for (int n : {2, 5}) {
      for (int q : {2, 4}) {
        c.guarded("bell vs quadrature " + at(tag, n), [&] {
          auto b = exact::unweighted_norm_bell(f, n, q).value;
          auto qd = exact::unweighted_norm_quad(f, n, q).value;
          c.check("bell vs quadrature " + at(tag, n) + " q=" + std::to_string(q), b.log_abs(), qd.log_abs(),
                  rel_log(b, qd), 1e-8);
        });
      }
    }
    for (int n : {1, 3}) {
      c.guarded("E dual method " + at(tag, n), [&] {
        auto eq = info::functional_E(f, n, info::EMethod::quadrature);
        auto ed = info::functional_E(f, n, info::EMethod::qderivative);
        double tol = 1e-5;
        double err = rel_log(ed, eq);
        // E can cross zero as a parameter varies; fall back to the scale kappa there.
        auto k = norm_constant_log(f, n);
        double scaled = std::fabs((ed - eq).to_double()) / k.to_double();
        c.check("E dual method " + at(tag, n), ed.to_double(), eq.to_double(), std::min(err, scaled), tol);
      });
      c.guarded("S from dW/dq " + at(tag, n), [&] {
        info::DensityHandle d{f, n, true};
        double s = info::shannon_entropy(d), sd = info::shannon_from_Wq_derivative(d);
        c.check("S from -dW/dq " + at(tag, n), sd, s, std::fabs(sd - s) / std::max(1.0, std::fabs(s)), 1e-5);
      });
      c.guarded("S decomposition " + at(tag, n), [&] {
        info::DensityHandle d{f, n, true};
        double s = info::shannon_entropy(d);
        auto k = norm_constant_log(f, n);
        double via = k.log_abs() + ((info::functional_E(f, n) + info::functional_I(f, n)) / k).to_double();
        c.check("S decomposition " + at(tag, n), via, s, std::fabs(via - s) / std::max(1.0, std::fabs(s)), 1e-7);
      });
    }
    for (int n : {0, 2, 5}) {
      c.guarded("complexity bounds " + at(tag, n), [&] {
        info::DensityHandle d{f, n, true};
        double lmc = info::lmc_plain(d);
        c.check("LMC >= 1 " + at(tag, n), lmc, 1.0, std::max(0.0, 1.0 - lmc), 1e-9);
        if (info::fisher_diverges(f)) {
          c.boolean("Fisher-Shannon >= 1 " + at(tag, n), true, INFINITY, 1.0, "Fisher information diverges");
        } else {
          double fs = info::fisher_shannon(d);
          c.check("Fisher-Shannon >= 1 " + at(tag, n), fs, 1.0, std::max(0.0, 1.0 - fs), 1e-9);
        }
      });
    }
  }
  c.guarded("gaussian", [&] {
    info::DensityHandle g{F::hermite(), 0, true};
    double s = info::shannon_entropy(g), sref = 0.5 * std::log(kPi * std::numbers::e);
    c.check("gaussian S", s, sref, std::fabs(s - sref), 1e-6);
    double fi = info::fisher_information(g);
    c.check("gaussian F", fi, 2.0, std::fabs(fi - 2), 1e-6);
    double fs = info::fisher_shannon(g);
    c.check("gaussian C_FS", fs, 1.0, std::fabs(fs - 1), 1e-6);
  });
}

// Relative error of the Laplace (q -> inf) term against quadrature.
double q_err_weighted(const F& f, int n, double q) {
  return rel_log(laplace::weighted_norm_q_asym(f, n, q).value, exact::weighted_norm_quad(f, n, q).value);
}
double q_err_unweighted(const F& f, int n, double q) {
  return rel_log(laplace::unweighted_norm_q_asym(f, n, q).value, exact::unweighted_norm_quad(f, n, q).value);
}

void decreasing(Collector& c, const std::string& name, const std::vector<double>& grid,
                const std::function<double(double)>& err, double tol_first) {
  std::vector<double> e;
  for (double p : grid) e.push_back(err(p));
  for (size_t i = 0; i < grid.size(); ++i)
    c.check(name + " at " + fmt("%g", grid[i]), e[i], 0.0, e[i], i == 0 ? tol_first : e[i - 1]);
}

void convergence(Report& rep) {
  Collector c(rep, "convergence");
  for (double a : {10.0, 100.0, 1000.0}) {
    c.guarded("temme witness", [&] {
      double v = param::temme_I1(1, a, 1, 1, 2, 2).value.to_double();
      c.check("temme witness alpha^2+1 at alpha=" + fmt("%g", a), v, a * a + 1, rel(v, a * a + 1), 1e-12);
    });
  }
  for (int m = 1; m <= 3; ++m) {
    c.guarded("temme I2 identity", [&] {
      const double a = 200, h = 1e-5;
      double cd = 2 * (param::temme_I1(m, a, 1.5, 1, 2 + h).value.to_double() -
                       param::temme_I1(m, a, 1.5, 1, 2 - h).value.to_double()) / (2 * h);
      double v = param::temme_I2(m, a, 1.5, 1).value.to_double();
      c.check("temme I2 = 2 dI1/dq m=" + std::to_string(m), v, cd, rel(v, cd), 1e-6);
    });
  }

  c.guarded("hermite n=2 q-ratio", [&] {
    auto h = F::hermite();
    std::vector<double> qs = {25, 50, 100, 200};
    std::vector<double> e;
    for (double q : qs) e.push_back(q_err_weighted(h, 2, q));
    for (size_t i = 0; i < qs.size(); ++i)
      c.check("q-asymptotics hermite n=2 weighted |ratio-1| q=" + fmt("%g", qs[i]), e[i], 0.0, e[i],
              i == 0 ? 0.05 : e[i - 1], "q * error " + fmt("%.6g", qs[i] * e[i]));
  });
  for (auto [n, a, b] : {std::tuple{1, 1.0, 0.0}, {2, 0.0, 0.5}}) {
    c.guarded("jacobi unweighted q-ratio", [&] {
      auto f = F::jacobi(a, b);
      std::string name = "q-asymptotics " + f.describe() + " n=" + std::to_string(n) + " unweighted |ratio-1|";
      decreasing(c, name, {50, 100, 200, 400}, [&](double q) { return q_err_unweighted(f, n, q); }, 0.2);
    });
  }
  c.guarded("legendre tie", [&] {
    for (double q : {50.0, 100.0, 200.0, 400.0}) {
      double v = laplace::unweighted_norm_q_asym_jacobi(1, 0, 0, q).value.to_double();
      c.check("q-asymptotics legendre n=1 vs 2/(q+1) q=" + fmt("%g", q), v, 2 / (q + 1), rel(v, 2 / (q + 1)), 2 / q);
    }
  });

  // Parameter asymptotics against quadrature at 400 and 800.
  struct PCase {
    std::string name;
    std::function<SignedLogReal(double)> asym, quad;
  };
  std::vector<PCase> pc = {
      {"laguerre n=1 q=2 weighted normalized", [](double a) { return param::laguerre_weighted_param(1, a, 2, true).value; },
       [](double a) { return exact::weighted_norm_quad(F::laguerre(a), 1, 2, {}, true).value; }},
      {"jacobi n=1 beta=0 q=2 unweighted", [](double a) { return param::jacobi_unweighted_param(1, a, 0, 2).value; },
       [](double a) { return exact::unweighted_norm_quad(F::jacobi(a, 0), 1, 2).value; }},
      {"jacobi n=1 beta=0 q=2 weighted", [](double a) { return param::jacobi_weighted_param(1, a, 0, 2, false).value; },
       [](double a) { return exact::weighted_norm_quad(F::jacobi(a, 0), 1, 2).value; }},
      {"gegenbauer n=1 q=1 weighted first line",
       [](double l) { return param::gegenbauer_weighted_param(1, l, 1, false, Form::printed).value; },
       [](double l) { return exact::weighted_norm_quad(F::gegenbauer(l), 1, 1).value; }},
      {"gegenbauer n=1 q=2 weighted first line",
       [](double l) { return param::gegenbauer_weighted_param(1, l, 2, false, Form::printed).value; },
       [](double l) { return exact::weighted_norm_quad(F::gegenbauer(l), 1, 2).value; }},
  };
  for (const auto& p : pc) {
    c.guarded("parameter " + p.name, [&] {
      double e4 = std::fabs(p.asym(400).log_abs() - p.quad(400).log_abs());
      double e8 = std::fabs(p.asym(800).log_abs() - p.quad(800).log_abs());
      c.check("parameter " + p.name + " log error at 400", e4, 0.0, e4, 0.05);
      bool smaller = e8 < e4 || std::max(e4, e8) <= kNoiseFloor;
      c.boolean("parameter " + p.name + " error smaller at 800", smaller, e8, e4,
                std::max(e4, e8) <= kNoiseFloor ? "exact at roundoff" : "");
    });
  }

  // Shannon parameter asymptotics: slow ln(alpha) convergence.
  c.guarded("laguerre shannon", [&] {
    auto err = [](double a) {
      return std::fabs(
          (param::laguerre_shannon_param(1, a).value / -info::functional_E(F::laguerre(a), 1)).to_double() - 1);
    };
    double e3 = err(1e3), e4 = err(4e3);
    c.check("shannon parameter laguerre m=1 |ratio-1| at 1e3", e3, 0.0, e3, 0.15);
    c.check("shannon parameter laguerre m=1 |ratio-1| at 4e3", e4, 0.0, e4, e3);
  });
  c.guarded("jacobi shannon", [&] {
    auto err = [](double a) {
      return std::fabs((param::jacobi_shannon_param(1, a, 0).value / info::functional_E(F::jacobi(a, 0), 1)).to_double() - 1);
    };
    double e3 = err(1e3), e4 = err(4e3);
    c.check("shannon parameter jacobi n=1 beta=0 |ratio-1| at 1e3", e3, 0.0, e3, 0.15);
    c.check("shannon parameter jacobi n=1 beta=0 |ratio-1| at 4e3", e4, 0.0, e4, e3);
  });
  for (int n : {1, 2}) {
    c.guarded("gegenbauer shannon", [&] {
      double l = 1e4;
      auto f = F::gegenbauer(l);
      auto k = norm_constant_log(f, n);
      double quad = (-info::functional_E(f, n) / k).to_double() - k.log_abs();
      double v = param::gegenbauer_shannon_param(n, l, true).value.to_double();
      c.check("shannon parameter gegenbauer normalized n=" + std::to_string(n) + " limit at 1e4", v, quad, rel(v, quad),
              0.01);
    });
  }
}

void paper_closed_forms(Report& rep) {
  Collector c(rep, "paper-closed-forms");
  auto h = F::hermite();
  for (double q : {2.0, 25.0, 100.0}) {
    std::string qs = " q=" + fmt("%g", q);
    c.guarded("hermite closed forms", [&] {
      auto r0 = laplace::weighted_norm_q_asym(h, 0, q).value;
      double v0 = std::sqrt(kPi / q);
      c.check("hermite n=0 weighted q-asymptotics sqrt(pi/q)" + qs, r0.to_double(), v0, rel(r0.to_double(), v0), 1e-12);
      // 2^{2q+1} e^{-q} sqrt(pi/(2q)) and 2^{6q+1} e^{-5q/2} sqrt(2 pi/(5q))
      auto h1 = SignedLogReal::from_log((2 * q + 1) * kLn2 - q + 0.5 * std::log(kPi / (2 * q)));
      auto h2 = SignedLogReal::from_log((6 * q + 1) * kLn2 - 2.5 * q + 0.5 * std::log(2 * kPi / (5 * q)));
      auto r1 = laplace::weighted_norm_q_asym(h, 1, q).value, r2 = laplace::weighted_norm_q_asym(h, 2, q).value;
      c.check("hermite n=1 weighted q-asymptotics" + qs, r1.log_abs(), h1.log_abs(), rel_log(r1, h1), 1e-12);
      c.check("hermite n=2 weighted q-asymptotics" + qs, r2.log_abs(), h2.log_abs(), rel_log(r2, h2), 1e-12);
    });
    for (auto [a, b] : {std::pair{1.0, 1.0}, {2.5, 1.5}, {0.5, 4.0}}) {
      c.guarded("jacobi n=0 closed form", [&] {
        double s = a + b;
        auto ref = SignedLogReal::from_log(q * s * kLn2 + a * q * std::log(a / s) + b * q * std::log(b / s) +
                                           0.5 * std::log(8 * kPi * a * b / (q * s * s * s)));
        auto r = laplace::weighted_norm_q_asym(F::jacobi(a, b), 0, q).value;
        c.check("jacobi n=0 weighted q-asymptotics " + F::jacobi(a, b).describe() + qs, r.log_abs(), ref.log_abs(),
                rel_log(r, ref), 1e-12);
      });
    }
  }
  c.guarded("laguerre x0", [&] {
    for (double a : {2.0, 10.0}) {
      double x0 = laplace::locate_density_maximum(F::laguerre(a), 0).x0;
      c.check("laguerre n=0 maximizer x0=alpha alpha=" + fmt("%g", a), x0, a, rel(x0, a), 1e-12);
    }
  });
  c.guarded("legendre 2/q", [&] {
    double q = 100, v = laplace::unweighted_norm_q_asym_jacobi(1, 0, 0, q).value.to_double();
    c.check("legendre n=1 unweighted q-asymptotics 2/q", v, 2 / q, rel(v, 2 / q), 1e-12);
  });
  c.guarded("laguerre m=0 constant", [&] {
    double v = param::laguerre_constant(0, 2.5).to_double();
    c.check("laguerre constant m=0 sqrt(2 pi)", v, std::sqrt(2 * kPi), rel(v, std::sqrt(2 * kPi)), 1e-12);
  });

  // Exact at n = 0.
  for (double a : {2.0, 30.0}) {
    for (double q : {0.5, 2.0, 3.0}) {
      std::string ps = " alpha=" + fmt("%g", a) + " q=" + fmt("%g", q);
      c.guarded("n=0 exact set", [&] {
        auto lw = param::laguerre_weighted_param(0, a, q, false).value;
        auto lq = exact::weighted_norm_quad(F::laguerre(a), 0, q).value;
        c.check("laguerre n=0 weighted Gamma(q a+1)/q^(q a+1)" + ps, lw.log_abs(), lq.log_abs(), rel_log(lw, lq), 1e-8);
        auto f = F::jacobi(a, 1.5);
        auto ju = param::jacobi_unweighted_param(0, a, 1.5, q).value;
        auto jq = exact::unweighted_norm_quad(f, 0, q).value;
        c.check("jacobi n=0 unweighted Beta form beta=1.5" + ps, ju.log_abs(), jq.log_abs(), rel_log(ju, jq), 1e-8);
        auto jw = param::jacobi_weighted_param(0, a, 1.5, q, false).value;
        auto jwq = exact::weighted_norm_quad(f, 0, q).value;
        c.check("jacobi n=0 weighted Beta form beta=1.5" + ps, jw.log_abs(), jwq.log_abs(), rel_log(jw, jwq), 1e-8);
      });
    }
  }

  // Documented discrepancies.
  c.guarded("jacobi orthonormal q=2", [&] {
    const double a = 400;
    double beta_oracle = exact::weighted_norm_quad(F::jacobi(a, 2), 0, 2, {}, true).value.to_double();
    double div = param::jacobi_weighted_param(0, a, 2, 2, true).value.to_double();
    c.check("jacobi orthonormal q=2 n=0 beta=2 division route vs Beta oracle", div, beta_oracle, rel(div, beta_oracle),
            0.02);
    c.check("jacobi orthonormal q=2 n=0 beta=2 division route coefficient 3/32", div / a, 3.0 / 32,
            rel(div / a, 3.0 / 32), 0.02);
    double printed = param::jacobi_weighted_param(0, a, 2, 2, true, Large::alpha, Form::printed_simplified).value.to_double();
    c.info("jacobi orthonormal q=2 n=0 beta=2 printed coefficient 3/16", printed / a, 3.0 / 16, rel(printed / a, 3.0 / 16),
           1e-12, "printed display is 2x the Beta oracle");
  });
  c.guarded("gegenbauer second line", [&] {
    const double l = 400;
    double first = param::gegenbauer_weighted_param(1, l, 1, false, Form::printed).value.to_double();
    double oracle = exact::weighted_norm_quad(F::gegenbauer(l), 1, 1).value.to_double();
    c.check("gegenbauer n=1 q=1 weighted first line vs quadrature", first, oracle, rel(first, oracle), 0.02);
    double second = param::gegenbauer_weighted_param(1, l, 1, false, Form::printed_simplified).value.to_double();
    c.info("gegenbauer n=1 q=1 weighted second line / first line", second / first, 2.0, rel(second / first, 2.0), 0.01,
           "second-line simplification is 2x the first line and the oracle");
  });
  c.guarded("laguerre printed constant", [&] {
    double r = (param::laguerre_constant(1, 2, Form::printed) / param::laguerre_constant(1, 2)).to_double();
    c.info("laguerre constant m=1 q=2 printed / limit", r, 0.5, rel(r, 0.5), 1e-12,
           "printed power 2^(mq-1/2) against 2^(mq/2-1/2); the latter matches kappa = Gamma(alpha+2)");
  });
  c.guarded("printed displays", [&] {
    const double a = 400;
    double lw = (param::laguerre_weighted_param(1, a, 2, true, Form::printed).value /
                 exact::weighted_norm_quad(F::laguerre(a), 1, 2, {}, true).value).to_double();
    c.info("laguerre n=1 q=2 weighted normalized printed / quadrature", lw, 1.0, rel(lw, 1.0), 0.05,
           "printed display assumes the polynomial limit at the wrong scale");
    double ju = (param::jacobi_unweighted_param(1, a, 0, 2, Large::alpha, Form::printed).value /
                 exact::unweighted_norm_quad(F::jacobi(a, 0), 1, 2).value).to_double();
    c.info("jacobi n=1 beta=0 q=2 unweighted printed / quadrature", ju, 1.0, rel(ju, 1.0), 0.05,
           "printed display carries alpha^-(1+beta+nq); the true power is alpha^-(1+beta)");
    double js = (param::jacobi_shannon_param(1, 1e3, 0, Large::alpha, Form::printed).value /
                 info::functional_E(F::jacobi(1e3, 0), 1)).to_double();
    c.info("jacobi n=1 beta=0 shannon printed / quadrature at 1e3", js, 1.0, rel(js, 1.0), 0.15, "");
    double ls = (param::laguerre_shannon_param(1, 1e3, 0, Form::printed).value /
                 -info::functional_E(F::laguerre(1e3), 1)).to_double();
    c.info("laguerre m=1 shannon printed / quadrature at 1e3", ls, 1.0, rel(ls, 1.0), 0.15,
           "printed final display has one extra power of alpha");
    for (int n : {1, 2}) {
      const double l = 1e4;
      auto f = F::gegenbauer(l);
      auto k = norm_constant_log(f, n);
      double quad = (-info::functional_E(f, n) / k).to_double() - k.log_abs();
      double simp = param::gegenbauer_shannon_param(n, l, true, Form::printed_simplified).value.to_double();
      c.info("gegenbauer normalized n=" + std::to_string(n) + " shannon 2 ln(lambda^n 2^n/n!) / quadrature at 1e4",
             simp / quad, 1.0, rel(simp / quad, 1.0), 0.10, "true growth is n ln(lambda), not 2n ln(lambda)");
      double br = param::gegenbauer_shannon_param(n, l, true, Form::printed).value.to_double();
      c.info("gegenbauer normalized n=" + std::to_string(n) + " shannon bracket / simplified at 1e4", br / simp, 1.0,
             rel(br / simp, 1.0), 0.05, "");
    }
  });
}

}  // namespace

bool Report::all_passed() const { return failures() == 0; }

int Report::failures() const {
  int k = 0;
  for (const auto& c : checks)
    if (!c.passed && !c.informational) ++k;
  return k;
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "convergence", "paper-closed-forms", "all"};
  return names;
}

Report run_suite(const std::string& suite) {
  Report r;
  if (suite == "identities") {
    identities(r);
  } else if (suite == "convergence") {
    convergence(r);
  } else if (suite == "paper-closed-forms") {
    paper_closed_forms(r);
  } else if (suite == "all") {
    identities(r);
    convergence(r);
    paper_closed_forms(r);
  } else {
    throw InvalidInput("unknown validation suite '" + suite + "'");
  }
  return r;
}

std::string format_line(const CheckResult& c) {
  const char* tag = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
  char buf[512];
  std::snprintf(buf, sizeof buf, "%-5s %s/%s  measured=%.10g reference=%.10g error=%.3g tol=%.3g", tag, c.suite.c_str(),
                c.name.c_str(), c.measured, c.reference, c.error, c.tolerance);
  std::string s = buf;
  if (!c.note.empty()) s += "  (" + c.note + ")";
  return s;
}

nlohmann::json to_json(const Report& r) {
  auto num = [](double v) -> nlohmann::json {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return nullptr;
    return v > 0 ? "inf" : "-inf";
  };
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"suite", c.suite},
                      {"name", c.name},
                      {"status", c.informational ? "documented-discrepancy" : (c.passed ? "pass" : "fail")},
                      {"within_tolerance", c.passed},
                      {"measured", num(c.measured)},
                      {"reference", num(c.reference)},
                      {"error", num(c.error)},
                      {"tolerance", num(c.tolerance)},
                      {"note", c.note}});
  }
  return {{"checks", checks}, {"failures", r.failures()}, {"passed", r.all_passed()}};
}

}  // namespace hopnorms::validate
