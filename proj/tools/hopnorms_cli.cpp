#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "hopnorms/errors.hpp"
#include "hopnorms/exact.hpp"
#include "hopnorms/info.hpp"
#include "hopnorms/laplace.hpp"
#include "hopnorms/param.hpp"
#include "hopnorms/polykernel.hpp"
#include "hopnorms/validate.hpp"
#include "json.hpp"

using namespace hopnorms;
using json = nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCompute = 3;
constexpr int kExitValidation = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kOps = {"unweighted-norm", "weighted-norm", "renyi",          "shannon",
                                       "shannon-dw",      "functional-e",  "functional-e-dq", "functional-i",
                                       "fisher",          "variance",      "lmc",             "fisher-shannon",
                                       "fisher-renyi",    "laplace-x0"};
const std::vector<std::string> kEngines = {"quadrature", "bell", "asymptotic-q", "asymptotic-parameter"};
const std::vector<std::string> kAxes = {"n", "q", "alpha", "beta", "lambda"};

bool op_needs_q(const std::string& op) {
  return op == "unweighted-norm" || op == "weighted-norm" || op == "renyi" || op == "fisher-renyi";
}

// Engines each op accepts; the first one is the default.
std::vector<std::string> op_engines(const std::string& op) {
  if (op == "unweighted-norm") return {"quadrature", "bell", "asymptotic-q", "asymptotic-parameter"};
  if (op == "weighted-norm") return {"quadrature", "asymptotic-q", "asymptotic-parameter"};
  if (op == "functional-e") return {"quadrature", "asymptotic-parameter"};
  if (op == "laplace-x0") return {"asymptotic-q"};
  return {"quadrature"};
}

struct Point {
  std::string family;
  int n = 0;
  std::optional<double> q, alpha, beta, lambda;
};

struct Options {
  std::string family;
  std::string op;
  std::vector<std::string> engines;
  std::optional<int> n;
  std::optional<double> q, alpha, beta, lambda;
  std::vector<std::string> grid;
  std::string format = "csv";
  std::string out;
  std::optional<double> tol;
  bool normalized = false;
  std::string form = "limit";
  std::string large = "alpha";
  unsigned threads = 0;
};

struct Row {
  Point p;
  std::string engine;
  SignedLogReal value;
  std::optional<double> linear;  // set for ops whose result is not a norm-like magnitude
  std::optional<double> rel_err;
  std::optional<double> ratio;
  std::string error;
};

PolynomialFamily make_family(const Point& p) {
  if (p.family == "hermite") return PolynomialFamily::hermite();
  if (p.family == "laguerre") return PolynomialFamily::laguerre(*p.alpha);
  if (p.family == "jacobi") return PolynomialFamily::jacobi(*p.alpha, *p.beta);
  return PolynomialFamily::gegenbauer(*p.lambda);
}

std::vector<std::string> family_params(const std::string& family) {
  if (family == "laguerre") return {"alpha"};
  if (family == "jacobi") return {"alpha", "beta"};
  if (family == "gegenbauer") return {"lambda"};
  return {};
}

std::optional<double>& axis_ref(Point& p, const std::string& axis) {
  if (axis == "q") return p.q;
  if (axis == "alpha") return p.alpha;
  if (axis == "beta") return p.beta;
  return p.lambda;
}

std::vector<double> parse_values(const std::string& axis, const std::string& text) {
  std::vector<double> v;
  auto num = [&](const std::string& s) {
    try {
      size_t pos = 0;
      double d = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return d;
    } catch (const std::exception&) {
      throw UsageError("bad number '" + s + "' in --grid " + axis);
    }
  };
  if (text.find(':') != std::string::npos) {
    // start:stop:factor, geometric and inclusive of stop
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string s; std::getline(ss, s, ':');) parts.push_back(s);
    if (parts.size() != 3) throw UsageError("geometric grid must be start:stop:factor, got '" + text + "'");
    double a = num(parts[0]), b = num(parts[1]), r = num(parts[2]);
    if (!(a > 0) || !(b >= a) || !(r > 1)) throw UsageError("geometric grid needs 0 < start <= stop and factor > 1");
    for (double x = a; x <= b * (1 + 1e-12); x *= r) v.push_back(x);
  } else {
    std::stringstream ss(text);
    for (std::string s; std::getline(ss, s, ',');) v.push_back(num(s));
  }
  if (v.empty()) throw UsageError("empty grid for " + axis);
  return v;
}

// Grid points in lexicographic order over n, q, alpha, beta, lambda.
std::vector<Point> expand(const Options& o) {
  std::map<std::string, std::vector<double>> axes;
  for (const auto& g : o.grid) {
    auto eq = g.find('=');
    if (eq == std::string::npos) throw UsageError("--grid expects axis=values, got '" + g + "'");
    std::string axis = g.substr(0, eq);
    if (std::find(kAxes.begin(), kAxes.end(), axis) == kAxes.end()) throw UsageError("unknown grid axis '" + axis + "'");
    if (axes.count(axis)) throw UsageError("grid axis '" + axis + "' given twice");
    axes[axis] = parse_values(axis, g.substr(eq + 1));
  }
  Point base;
  base.family = o.family;
  base.q = o.q;
  base.alpha = o.alpha;
  base.beta = o.beta;
  base.lambda = o.lambda;
  std::vector<Point> pts = {base};
  auto fp = family_params(o.family);
  for (const auto& axis : kAxes) {
    bool in_grid = axes.count(axis) > 0;
    bool given = axis == "n" ? o.n.has_value() : axis_ref(base, axis).has_value();
    if (in_grid && given) throw UsageError("--" + axis + " and --grid " + axis + " are exclusive");
    bool wanted = axis == "n" || (axis == "q" && op_needs_q(o.op)) ||
                  std::find(fp.begin(), fp.end(), axis) != fp.end();
    if ((in_grid || given) && !wanted) throw UsageError("--" + axis + " does not apply to " + o.family + " " + o.op);
    if (!in_grid && !given) {
      if (axis == "n") throw UsageError("--n is required");
      if (wanted) throw UsageError("--" + axis + " is required for " + o.family + " " + o.op);
      continue;
    }
    std::vector<double> values = in_grid ? axes[axis] : std::vector<double>{};
    std::vector<Point> next;
    for (const auto& p : pts) {
      if (!in_grid) {
        Point c = p;
        if (axis == "n") c.n = *o.n;
        next.push_back(c);
        continue;
      }
      for (double v : values) {
        Point c = p;
        if (axis == "n") {
          if (v != std::floor(v) || v < 0) throw UsageError("grid values for n must be nonnegative integers");
          c.n = int(v);
        } else {
          axis_ref(c, axis) = v;
        }
        next.push_back(c);
      }
    }
    pts = std::move(next);
  }
  return pts;
}

bool even_integer(double q) { return q > 0 && q == std::floor(q) && std::fmod(q, 2.0) == 0; }

// Capability of (op, engine, point), checked before anything runs.
std::string incompatibility(const Options& o, const std::string& engine, const Point& p) {
  auto allowed = op_engines(o.op);
  if (std::find(allowed.begin(), allowed.end(), engine) == allowed.end())
    return "engine " + engine + " cannot compute " + o.op;
  if (engine == "bell" && !even_integer(*p.q)) return "bell needs an even integer q";
  if (engine == "asymptotic-parameter" && p.family == "hermite") return "hermite has no weight parameter";
  if (o.op == "functional-e" && engine == "asymptotic-parameter" && p.n < 1) return "parameter asymptotics of E need n >= 1";
  return "";
}

SignedLogReal kappa_pow(const PolynomialFamily& f, int n, double e) { return norm_constant_log(f, n).pow(e); }

void compute_row(const Options& o, Row& r) {
  const Point& p = r.p;
  PolynomialFamily f = make_family(p);
  QuadratureConfig cfg;
  if (o.tol) cfg.rel_tol = *o.tol;
  cfg.validate();
  param::Form form = param::parse_form(o.form);
  param::Large large = o.large == "beta" ? param::Large::beta : param::Large::alpha;
  const std::string& e = r.engine;
  auto norm = [&](const NormResult& nr) {
    r.value = nr.value;
    r.rel_err = nr.error_estimate;
  };
  auto scalar = [&](double v) {
    r.value = SignedLogReal::from_double(v);
    r.linear = v;
  };
  info::DensityHandle d{f, p.n, true};

  if (o.op == "unweighted-norm") {
    double q = *p.q;
    if (e == "quadrature") {
      norm(exact::unweighted_norm_quad(f, p.n, q, cfg));
    } else if (e == "bell") {
      norm(exact::unweighted_norm_bell(f, p.n, int(q)));
    } else if (e == "asymptotic-q") {
      norm(laplace::unweighted_norm_q_asym(f, p.n, q));
    } else {
      if (p.family == "gegenbauer") {
        r.value = param::gegenbauer_unweighted_param(p.n, *p.lambda, q, o.normalized, form).value;
        return;
      }
      r.value = p.family == "laguerre" ? param::laguerre_unweighted_param(p.n, *p.alpha, q, 0, form).value
                                       : param::jacobi_unweighted_param(p.n, *p.alpha, *p.beta, q, large, form).value;
    }
    if (o.normalized) r.value /= kappa_pow(f, p.n, q / 2);
  } else if (o.op == "weighted-norm") {
    double q = *p.q;
    if (e == "quadrature") {
      norm(exact::weighted_norm_quad(f, p.n, q, cfg, o.normalized));
    } else if (e == "asymptotic-q") {
      norm(laplace::weighted_norm_q_asym(f, p.n, q));
      if (o.normalized) r.value /= kappa_pow(f, p.n, q);
    } else if (p.family == "laguerre") {
      r.value = param::laguerre_weighted_param(p.n, *p.alpha, q, o.normalized, form).value;
    } else if (p.family == "jacobi") {
      r.value = param::jacobi_weighted_param(p.n, *p.alpha, *p.beta, q, o.normalized, large, form).value;
    } else {
      r.value = param::gegenbauer_weighted_param(p.n, *p.lambda, q, o.normalized, form).value;
    }
  } else if (o.op == "functional-e") {
    if (e == "quadrature") {
      r.value = info::functional_E(f, p.n, info::EMethod::quadrature, cfg);
    } else if (p.family == "laguerre") {
      r.value = -param::laguerre_shannon_param(p.n, *p.alpha, 0, form).value;
    } else if (p.family == "jacobi") {
      r.value = param::jacobi_shannon_param(p.n, *p.alpha, *p.beta, large, form).value;
    } else {
      r.value = -param::gegenbauer_shannon_param(p.n, *p.lambda, false, form).value;
    }
  } else if (o.op == "functional-e-dq") {
    r.value = info::functional_E(f, p.n, info::EMethod::qderivative, cfg);
  } else if (o.op == "functional-i") {
    r.value = info::functional_I(f, p.n, cfg);
  } else if (o.op == "renyi") {
    scalar(info::renyi_entropy(d, *p.q, cfg));
  } else if (o.op == "shannon") {
    scalar(info::shannon_entropy(d, cfg));
  } else if (o.op == "shannon-dw") {
    scalar(info::shannon_from_Wq_derivative(d, cfg));
  } else if (o.op == "fisher") {
    scalar(info::fisher_information(d, cfg));
  } else if (o.op == "variance") {
    scalar(info::variance(d, cfg));
  } else if (o.op == "lmc") {
    scalar(info::lmc_plain(d, cfg));
  } else if (o.op == "fisher-shannon") {
    scalar(info::fisher_shannon(d, cfg));
  } else if (o.op == "fisher-renyi") {
    scalar(info::fisher_renyi(d, *p.q, cfg));
  } else if (o.op == "laplace-x0") {
    scalar(laplace::locate_density_maximum(f, p.n).x0);
  }
}

std::string g17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::optional<double> linear_of(const Row& r) {
  if (r.linear) return r.linear;
  if (r.value.is_zero()) return 0.0;
  if (std::fabs(r.value.log_abs()) < 690) return r.value.to_double();
  return std::nullopt;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
  os << "family,n,q,alpha,beta,lambda,engine,sign,log_value,rel_err_estimate,value,ratio,error\n";
  auto opt = [](const std::optional<double>& v) { return v ? g17(*v) : std::string(); };
  for (const auto& r : rows) {
    bool ok = r.error.empty();
    os << r.p.family << ',' << r.p.n << ',' << opt(r.p.q) << ',' << opt(r.p.alpha) << ',' << opt(r.p.beta) << ','
       << opt(r.p.lambda) << ',' << r.engine << ',';
    if (ok) {
      os << r.value.sign() << ',' << (r.value.is_zero() ? std::string("-inf") : g17(r.value.log_abs())) << ','
         << opt(r.rel_err) << ',' << opt(linear_of(r)) << ',' << opt(r.ratio) << ',';
    } else {
      os << ",,,,,";
    }
    os << csv_quote(r.error) << '\n';
  }
}

json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return nullptr;
  return v > 0 ? "inf" : "-inf";
}

json row_json(const Row& r) {
  auto opt = [](const std::optional<double>& v) { return v ? num(*v) : json(nullptr); };
  json j = {{"family", r.p.family}, {"n", r.p.n},       {"q", opt(r.p.q)},          {"alpha", opt(r.p.alpha)},
            {"beta", opt(r.p.beta)}, {"lambda", opt(r.p.lambda)}, {"engine", r.engine}};
  if (r.error.empty()) {
    j["sign"] = r.value.sign();
    j["log_value"] = r.value.is_zero() ? json("-inf") : num(r.value.log_abs());
    j["rel_err_estimate"] = opt(r.rel_err);
    j["value"] = opt(linear_of(r));
    j["ratio"] = opt(r.ratio);
    j["error"] = nullptr;
  } else {
    j["error"] = r.error;
  }
  return j;
}

json invocation(const std::vector<std::string>& args) {
  json a = json::array();
  for (const auto& s : args) a.push_back(s);
  return {{"program", "hopnorms"}, {"args", a}};
}

void emit(const Options& o, const std::vector<std::string>& args, const std::vector<Row>& rows) {
  std::ostringstream os;
  if (o.format == "json") {
    json rj = json::array();
    for (const auto& r : rows) rj.push_back(row_json(r));
    json doc = {{"schema", 1}, {"invocation", invocation(args)}, {"rows", rj}};
    os << doc.dump(2) << '\n';
  } else {
    write_csv(os, rows);
  }
  if (o.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << os.str();
  }
}

std::vector<Row> plan(const Options& o) {
  if (std::find(kOps.begin(), kOps.end(), o.op) == kOps.end()) throw UsageError("unknown --op '" + o.op + "'");
  try {
    param::parse_form(o.form);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  std::vector<std::string> engines = o.engines;
  if (engines.empty()) engines.push_back(op_engines(o.op).front());
  for (const auto& e : engines)
    if (std::find(kEngines.begin(), kEngines.end(), e) == kEngines.end()) throw UsageError("unknown engine '" + e + "'");
  std::vector<Row> rows;
  std::vector<std::string> problems;
  for (const auto& p : expand(o)) {
    for (const auto& e : engines) {
      std::string why = incompatibility(o, e, p);
      if (!why.empty()) {
        std::string where = "n=" + std::to_string(p.n) + (p.q ? " q=" + g17(*p.q) : "");
        problems.push_back(why + " (" + where + ")");
      }
      rows.push_back({p, e, {}, {}, {}, {}, {}});
    }
  }
  if (!problems.empty()) {
    std::string msg = "incompatible engine/grid combination: " + problems.front();
    if (problems.size() > 1) msg += " and " + std::to_string(problems.size() - 1) + " more";
    throw UsageError(msg);
  }
  return rows;
}

void run_rows(const Options& o, std::vector<Row>& rows) {
  unsigned workers = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, rows.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next++) < rows.size();) {
      try {
        compute_row(o, rows[i]);
      } catch (const std::exception& e) {
        rows[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  // ratio of each non-quadrature row to the quadrature row at the same grid point
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].error.empty() || rows[i].engine == "quadrature") continue;
    for (size_t j = 0; j < rows.size(); ++j) {
      const Row& b = rows[j];
      if (b.engine != "quadrature" || !b.error.empty() || b.value.is_zero()) continue;
      const Point &x = rows[i].p, &y = b.p;
      if (x.n == y.n && x.q == y.q && x.alpha == y.alpha && x.beta == y.beta && x.lambda == y.lambda)
        rows[i].ratio = (rows[i].value / b.value).to_double();
    }
  }
}

void add_common(CLI::App* c, Options& o, bool multi_engine) {
  c->add_option("--family", o.family, "hermite, laguerre, jacobi or gegenbauer")
      ->required()
      ->check(CLI::IsMember({"hermite", "laguerre", "jacobi", "gegenbauer"}));
  c->add_option("--op", o.op, "operation")->required()->check(CLI::IsMember(kOps));
  c->add_option("--alpha", o.alpha, "Laguerre or Jacobi alpha");
  c->add_option("--beta", o.beta, "Jacobi beta");
  c->add_option("--lambda", o.lambda, "Gegenbauer lambda");
  c->add_option("--n", o.n, "degree");
  c->add_option("--q", o.q, "norm or entropy order");
  auto* eng = c->add_option("--engine", o.engines, "quadrature, bell, asymptotic-q or asymptotic-parameter");
  if (multi_engine) {
    eng->delimiter(',');
  } else {
    eng->expected(1);
  }
  c->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  c->add_option("--out", o.out, "output file (default stdout)");
  c->add_option("--tol", o.tol, "quadrature relative tolerance");
  c->add_flag("--normalized", o.normalized, "use the orthonormal polynomial");
  c->add_option("--form", o.form, "limit, printed or printed-simplified (asymptotic-parameter)");
  c->add_option("--large", o.large, "Jacobi parameter sent to infinity")->check(CLI::IsMember({"alpha", "beta"}));
}

int cmd_rows(const Options& o, const std::vector<std::string>& args, bool single) {
  std::vector<Row> rows = plan(o);
  if (single && rows.size() != 1) throw UsageError("compute takes a single point; use sweep for grids");
  run_rows(o, rows);
  emit(o, args, rows);
  bool failed = false;
  for (const auto& r : rows) {
    if (r.error.empty()) continue;
    failed = true;
    std::cerr << "hopnorms: " << r.engine << " n=" << r.p.n << ": " << r.error << '\n';
  }
  return failed ? kExitCompute : 0;
}

int cmd_validate(const std::string& suite, const std::string& out, const std::vector<std::string>& args) {
  validate::Report rep = validate::run_suite(suite);
  for (const auto& c : rep.checks) std::cout << validate::format_line(c) << '\n';
  int info = 0;
  for (const auto& c : rep.checks) info += c.informational;
  std::cout << "summary: " << rep.checks.size() - info - rep.failures() << " passed, " << rep.failures() << " failed, "
            << info << " documented discrepancies\n";
  json body = validate::to_json(rep);
  json doc = {{"schema", 1},
              {"invocation", invocation(args)},
              {"suite", suite},
              {"rows", body["checks"]},
              {"failures", body["failures"]},
              {"passed", body["passed"]}};
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << doc.dump(2) << '\n';
  return rep.all_passed() ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CLI::App app{"L_q norms, entropies and complexities of classical orthogonal polynomials", "hopnorms"};
  app.require_subcommand(1);

  Options co, so;
  auto* compute = app.add_subcommand("compute", "compute one value");
  add_common(compute, co, false);
  auto* sweep = app.add_subcommand("sweep", "compute a grid of values");
  add_common(sweep, so, true);
  sweep->add_option("--grid", so.grid, "axis=v1,v2,... or axis=start:stop:factor (n, q, alpha, beta, lambda)");
  sweep->add_option("--threads", so.threads, "worker threads (0: one per core)");

  std::string suite, report = "validation_report.json";
  auto* val = app.add_subcommand("validate", "run a validation suite");
  val->add_option("suite", suite, "identities, convergence, paper-closed-forms or all")
      ->required()
      ->check(CLI::IsMember(validate::suite_names()));
  val->add_option("--out", report, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_rows(co, args, true);
    if (*sweep) return cmd_rows(so, args, false);
    return cmd_validate(suite, report, args);
  } catch (const UsageError& e) {
    std::cerr << "hopnorms: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "hopnorms: " << e.what() << '\n';
    return kExitCompute;
  }
}
