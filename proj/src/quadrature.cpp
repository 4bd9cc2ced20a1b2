#include "hopnorms/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "hopnorms/errors.hpp"

namespace hopnorms {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980759617, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWg[5] = {0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                           0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                           0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr long kMaxEvaluations = 4'000'000;
constexpr int kPeakScan = 32;
constexpr int kGrading = 12;

enum class MapKind { identity, from_lower, from_upper };

struct Piece {
  MapKind kind = MapKind::identity;
  double v0 = 0, v1 = 0;
  // t = v^power measured from the endpoint; power = 1/(1+s) for singular ends.
  double power = 1.0;
};

struct Interval {
  int piece;
  double v0, v1;
  int depth;
  double resk = 0, resabs = 0, err = 0;
  bool operator<(const Interval& o) const { return err < o.err; }
};

struct Rescale {
  double new_reference;
};

class Driver {
 public:
  Driver(const IntegrationProblem& p, const QuadratureConfig& cfg) : p_(p), cfg_(cfg) {}

  QuadratureResult run();

 private:
  // Log of the transformed integrand (value times jacobian) at local v.
  SignedLogReal log_at(const Piece& pc, double v);
  double log_abs_at(const Piece& pc, double v) {
    SignedLogReal s = log_at(pc, v);
    return s.is_zero() ? kNegInf : s.log_abs();
  }
  double scaled(const Piece& pc, double v);

  double march(double start, double direction);
  void build_pieces();
  void split_at_peaks();
  void evaluate(Interval& iv);

  const IntegrationProblem& p_;
  const QuadratureConfig& cfg_;
  std::vector<Piece> pieces_;
  double lo_ = 0, hi_ = 0;
  double reference_ = kNegInf;  // M: running maximum of the log-integrand
  long evaluations_ = 0;
};

SignedLogReal Driver::log_at(const Piece& pc, double v) {
  ++evaluations_;
  const Support& s = p_.support;
  SupportPoint pt{0.0};
  double log_jac = 0.0;
  double t = v;
  if (pc.kind != MapKind::identity && pc.power != 1.0) {
    t = std::pow(v, pc.power);
    log_jac = std::log(pc.power) + (pc.power - 1.0) * std::log(v);
  }
  switch (pc.kind) {
    case MapKind::identity:
      pt.x = v;
      if (s.lower_finite()) pt.from_lower = v - s.lower;
      if (s.upper_finite()) pt.from_upper = s.upper - v;
      break;
    case MapKind::from_lower:
      pt.x = s.lower + t;
      pt.from_lower = t;
      if (s.upper_finite()) pt.from_upper = s.upper - pt.x;
      break;
    case MapKind::from_upper:
      pt.x = s.upper - t;
      pt.from_upper = t;
      if (s.lower_finite()) pt.from_lower = pt.x - s.lower;
      break;
  }
  SignedLogReal r = p_.f(pt);
  if (r.is_zero()) return r;
  if (std::isnan(r.log_abs())) throw NumericalFailure("integrand returned NaN");
  return SignedLogReal::from_log(r.log_abs() + log_jac, r.sign());
}

double Driver::scaled(const Piece& pc, double v) {
  SignedLogReal r = log_at(pc, v);
  if (r.is_zero()) return 0.0;
  double e = r.log_abs() - reference_;
  if (e > 600) throw Rescale{r.log_abs()};
  return r.sign() * std::exp(e);
}

// Walks outward from start with geometric steps until the integrand is
// negligible relative to everything seen so far; returns the cut point.
double Driver::march(double start, double direction) {
  Piece id;
  double step = 0.25;
  double x = start;
  double prev = kNegInf;
  double run_max = kNegInf;
  for (int k = 0; k < 4000; ++k) {
    x += direction * step;
    step *= 1.25;
    double l = log_abs_at(id, x);
    run_max = std::max(run_max, l);
    // An integrand that is identically zero on the sampled tail is cut as well.
    bool vanishing = k >= 8 && run_max == kNegInf;
    if (vanishing || (k >= 2 && l < run_max + cfg_.tail_cutoff_log && l <= prev)) {
      reference_ = std::max(reference_, run_max);
      return x;
    }
    prev = l;
  }
  throw NumericalFailure("tail truncation point not found");
}

void Driver::build_pieces() {
  const Support& s = p_.support;
  std::vector<double> bps;
  for (double b : p_.breakpoints)
    if (b > s.lower && b < s.upper) bps.push_back(b);
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  lo_ = s.lower_finite() ? s.lower : march(bps.empty() ? p_.anchor : bps.front(), -1.0);
  double right_start = bps.empty() ? (s.lower_finite() ? s.lower : p_.anchor) : bps.back();
  hi_ = s.upper_finite() ? s.upper : march(right_start, +1.0);

  std::vector<double> pts{lo_};
  for (double b : bps)
    if (b > lo_ && b < hi_) pts.push_back(b);
  pts.push_back(hi_);

  auto power_for = [](double expo) { return (expo < 0 && expo > -1) ? 1.0 / (1.0 + expo) : 1.0; };
  auto lower_piece = [&](double x1) {
    Piece pc{MapKind::from_lower, 0.0, 0.0, power_for(p_.lower_exponent)};
    pc.v1 = std::pow(x1 - s.lower, 1.0 / pc.power);
    pieces_.push_back(pc);
  };
  auto upper_piece = [&](double x0) {
    Piece pc{MapKind::from_upper, 0.0, 0.0, power_for(p_.upper_exponent)};
    pc.v1 = std::pow(s.upper - x0, 1.0 / pc.power);
    pieces_.push_back(pc);
  };

  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    double a = pts[i], b = pts[i + 1];
    bool at_lower = s.lower_finite() && a == s.lower;
    bool at_upper = s.upper_finite() && b == s.upper;
    if (at_lower && at_upper) {
      double mid = 0.5 * (a + b);
      lower_piece(mid);
      upper_piece(mid);
    } else if (at_lower) {
      lower_piece(b);
    } else if (at_upper) {
      upper_piece(a);
    } else {
      pieces_.push_back(Piece{MapKind::identity, a, b, 1.0});
    }
  }
}

// Locates the maximum of the log-integrand within every piece, splits the
// piece there and records the global reference level.
void Driver::split_at_peaks() {
  std::vector<Piece> out;
  for (const Piece& pc : pieces_) {
    double w = pc.v1 - pc.v0;
    double vals[kPeakScan];
    int best = 0;
    for (int i = 0; i < kPeakScan; ++i) {
      vals[i] = log_abs_at(pc, pc.v0 + (i + 0.5) / kPeakScan * w);
      if (vals[i] > vals[best]) best = i;
    }
    if (vals[best] == kNegInf) {
      out.push_back(pc);
      continue;
    }
    double a = pc.v0 + std::max(0.0, best - 0.5) / kPeakScan * w;
    double b = pc.v0 + std::min(double(kPeakScan), best + 1.5) / kPeakScan * w;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = log_abs_at(pc, c), fd = log_abs_at(pc, d);
    for (int it = 0; it < 80 && (b - a) > 1e-13 * w; ++it) {
      if (fc >= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - g * (b - a);
        fc = log_abs_at(pc, c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + g * (b - a);
        fd = log_abs_at(pc, d);
      }
    }
    double vstar = fc >= fd ? c : d;
    double fstar = std::max({fc, fd, vals[best]});
    reference_ = std::max(reference_, fstar);
    if (vstar > pc.v0 + 1e-9 * w && vstar < pc.v1 - 1e-9 * w) {
      Piece left = pc, right = pc;
      left.v1 = vstar;
      right.v0 = vstar;
      out.push_back(left);
      out.push_back(right);
    } else {
      out.push_back(pc);
    }
  }
  pieces_ = std::move(out);
}

void Driver::evaluate(Interval& iv) {
  const Piece& pc = pieces_[iv.piece];
  double center = 0.5 * (iv.v0 + iv.v1);
  double half = 0.5 * (iv.v1 - iv.v0);
  double fc = scaled(pc, center);
  double resg = 0.0;
  double resk = kWgk[10] * fc;
  double resabs = std::fabs(resk);
  double f1[10], f2[10];
  for (int j = 0; j < 10; ++j) {
    double dx = half * kXgk[j];
    f1[j] = scaled(pc, center - dx);
    f2[j] = scaled(pc, center + dx);
    resk += kWgk[j] * (f1[j] + f2[j]);
    resabs += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1[j] + f2[j]);
  }
  double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::fabs(fc - reskh);
  for (int j = 0; j < 10; ++j) resasc += kWgk[j] * (std::fabs(f1[j] - reskh) + std::fabs(f2[j] - reskh));
  iv.resk = resk * half;
  iv.resabs = resabs * std::fabs(half);
  resasc *= std::fabs(half);
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (iv.resabs > std::numeric_limits<double>::min() / (50 * kEps)) err = std::max(50 * kEps * iv.resabs, err);
  iv.err = err;
}

struct Neumaier {
  double sum = 0, comp = 0;
  void add(double v) {
    double t = sum + v;
    comp += std::fabs(sum) >= std::fabs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

QuadratureResult Driver::run() {
  build_pieces();
  split_at_peaks();
  if (reference_ == kNegInf) return {SignedLogReal::zero(), SignedLogReal::zero(), 0.0, evaluations_};

  for (int attempt = 0;; ++attempt) {
    try {
      std::priority_queue<Interval> queue;
      std::vector<Interval> frozen;
      for (int i = 0; i < int(pieces_.size()); ++i) {
        const Piece& pc = pieces_[i];
        double w = pc.v1 - pc.v0;
        if (!(w > 0)) continue;
        std::vector<double> cuts{pc.v0};
        for (int k = kGrading; k >= 2; --k) cuts.push_back(pc.v0 + w * std::ldexp(1.0, -k));
        cuts.push_back(pc.v0 + 0.5 * w);
        for (int k = 2; k <= kGrading; ++k) cuts.push_back(pc.v1 - w * std::ldexp(1.0, -k));
        cuts.push_back(pc.v1);
        for (size_t c = 0; c + 1 < cuts.size(); ++c) {
          Interval iv{i, cuts[c], cuts[c + 1], 0};
          evaluate(iv);
          queue.push(iv);
        }
      }

      auto totals = [&](double& value, double& l1, double& err) {
        Neumaier v, a, e;
        std::vector<Interval> all = frozen;
        auto copy = queue;
        while (!copy.empty()) {
          all.push_back(copy.top());
          copy.pop();
        }
        std::sort(all.begin(), all.end(), [](const Interval& x, const Interval& y) {
          return x.piece != y.piece ? x.piece < y.piece : x.v0 < y.v0;
        });
        for (const Interval& iv : all) {
          v.add(iv.resk);
          a.add(iv.resabs);
          e.add(iv.err);
        }
        value = v.value();
        l1 = a.value();
        err = e.value();
      };

      double value, l1, err;
      totals(value, l1, err);
      // Running sums between exact recomputations.
      double run_err = err, run_l1 = l1;
      for (long iter = 0;; ++iter) {
        double tol = std::max(cfg_.rel_tol * run_l1, cfg_.abs_tol);
        if (run_err <= tol || queue.empty() || evaluations_ > kMaxEvaluations) {
          totals(value, l1, err);
          tol = std::max(cfg_.rel_tol * l1, cfg_.abs_tol);
          if (err <= tol || l1 == 0.0) break;
          if (queue.empty() || evaluations_ > kMaxEvaluations) {
            SignedLogReal best = SignedLogReal::from_double(value);
            if (!best.is_zero()) best = SignedLogReal::from_log(best.log_abs() + reference_, best.sign());
            throw NumericalFailure("quadrature tolerance not met within max_depth", best,
                                   l1 > 0 ? err / l1 : 0.0);
          }
          run_err = err;
          run_l1 = l1;
        }
        Interval worst = queue.top();
        queue.pop();
        if (worst.depth >= cfg_.max_depth) {
          frozen.push_back(worst);
          continue;
        }
        double mid = 0.5 * (worst.v0 + worst.v1);
        if (!(mid > worst.v0 && mid < worst.v1)) {
          frozen.push_back(worst);
          continue;
        }
        Interval left{worst.piece, worst.v0, mid, worst.depth + 1};
        Interval right{worst.piece, mid, worst.v1, worst.depth + 1};
        evaluate(left);
        evaluate(right);
        run_err += left.err + right.err - worst.err;
        run_l1 += left.resabs + right.resabs - worst.resabs;
        queue.push(left);
        queue.push(right);
        if (iter % 256 == 255) {
          totals(value, l1, err);
          run_err = err;
          run_l1 = l1;
        }
      }

      QuadratureResult r;
      r.evaluations = evaluations_;
      r.rel_error = l1 > 0 ? err / l1 : 0.0;
      SignedLogReal v = SignedLogReal::from_double(value);
      r.value = v.is_zero() ? v : SignedLogReal::from_log(v.log_abs() + reference_, v.sign());
      r.l1 = l1 > 0 ? SignedLogReal::from_log(std::log(l1) + reference_) : SignedLogReal::zero();
      return r;
    } catch (const Rescale& rs) {
      if (attempt >= 4) throw NumericalFailure("integrand peak could not be bracketed");
      reference_ = rs.new_reference;
    }
  }
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0)) throw InvalidInput("rel_tol must be positive");
  if (max_depth < 1) throw InvalidInput("max_depth must be at least 1");
  if (!(abs_tol >= 0)) throw InvalidInput("abs_tol must be nonnegative");
}

QuadratureResult integrate(const IntegrationProblem& problem, const QuadratureConfig& cfg) {
  cfg.validate();
  Driver d(problem, cfg);
  return d.run();
}

}  // namespace hopnorms
