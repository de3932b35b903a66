#include "flowcheck/mollify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace flowcheck {

namespace {

// Unit-mass bump profile exp(-1/(1-t^2)) on (-1,1), unnormalized; every user
// normalizes its discrete samples, so the closed-form constant never enters.
double bump(double t2) { return t2 < 1.0 ? std::exp(-1.0 / (1.0 - t2)) : 0.0; }

// Gauss-Legendre nodes and weights on [-1,1] by Newton iteration on the
// three-term recurrence.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    nodes[n - 1 - i] = x;
    weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

struct QuadPoint {
  double y[3];
  double w;
};

// Masked product-Gauss rule over the unit ball, weights carrying rho and
// normalized to unit mass. y_max is the largest |y| that survives the mask:
// it bounds the sampling radius in the support shortcut below.
struct BallQuadrature {
  std::vector<QuadPoint> points;
  double y_max = 0.0;

  explicit BallQuadrature(int order) {
    std::vector<double> x, w;
    gauss_legendre(order, x, w);
    double total = 0.0;
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j)
        for (int k = 0; k < order; ++k) {
          double r2 = x[i] * x[i] + x[j] * x[j] + x[k] * x[k];
          if (r2 >= 1.0) continue;
          double weight = w[i] * w[j] * w[k] * bump(r2);
          points.push_back({{x[i], x[j], x[k]}, weight});
          total += weight;
          y_max = std::max(y_max, std::sqrt(r2));
        }
    for (QuadPoint& p : points) p.w /= total;
  }
};

// Trilinear read of the zero-extended field: exact zero outside the closed
// unit ball (the extension is known there; interpolating across the sphere
// would leak support past the geometric margin).
void sample_extension(const SampledField& v, const double p[3], double out[3]) {
  out[0] = out[1] = out[2] = 0.0;
  if (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] > 1.0) return;
  int n = v.n;
  double h = v.spacing();
  double fx = (p[0] + 1.0) / h, fy = (p[1] + 1.0) / h, fz = (p[2] + 1.0) / h;
  int ix = std::clamp(int(fx), 0, n - 2);
  int iy = std::clamp(int(fy), 0, n - 2);
  int iz = std::clamp(int(fz), 0, n - 2);
  double ax = fx - ix, ay = fy - iy, az = fz - iz;
  double wx[2] = {1.0 - ax, ax}, wy[2] = {1.0 - ay, ay}, wz[2] = {1.0 - az, az};
  std::size_t base = (std::size_t(ix) * n + iy) * n + iz;
  std::size_t comp = v.nodes();
  for (int dx = 0; dx < 2; ++dx)
    for (int dy = 0; dy < 2; ++dy) {
      double wxy = wx[dx] * wy[dy];
      std::size_t row = base + (std::size_t(dx) * n + dy) * n;
      for (int dz = 0; dz < 2; ++dz) {
        double wgt = wxy * wz[dz];
        std::size_t idx = row + dz;
        out[0] += wgt * v.data[idx];
        out[1] += wgt * v.data[idx + comp];
        out[2] += wgt * v.data[idx + 2 * comp];
      }
    }
}

void check_uniform_series(const std::vector<SampledField>& series, double& dt) {
  if (series.size() < 2) throw InvalidConfig("time series needs at least two frames");
  dt = series[1].time - series[0].time;
  if (!(dt > 0.0)) throw InvalidConfig("time series must be strictly increasing");
  for (std::size_t i = 1; i < series.size(); ++i) {
    double step = series[i].time - series[i - 1].time;
    if (std::abs(step - dt) > 1e-9 * dt)
      throw InvalidConfig("time series must be uniformly sampled");
    if (series[i].n != series[0].n || series[i].domain != series[0].domain)
      throw InvalidConfig("time series frames must share one grid");
  }
}

double to_q(const ExtRational& q) {
  return q.is_infinite() ? std::numeric_limits<double>::infinity() : q.to_double();
}

SampledField diff_field(const SampledField& a, const SampledField& b) {
  SampledField d = a;
  for (std::size_t i = 0; i < d.data.size(); ++i) d.data[i] -= b.data[i];
  return d;
}

}  // namespace

double TransversalMap::s(double r) {
  if (r >= 0.5) return 1.0 / r;
  double r2 = r * r;
  return 3.75 - 10.0 * r2 + 12.0 * r2 * r2;
}

double TransversalMap::s_prime(double r) {
  if (r >= 0.5) return -1.0 / (r * r);
  return -20.0 * r + 48.0 * r * r * r;
}

std::array<double, 3> TransversalMap::theta(const std::array<double, 3>& x) const {
  double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  double f = 1.0 + delta * s(r);
  return {f * x[0], f * x[1], f * x[2]};
}

std::array<double, 9> TransversalMap::piola(const std::array<double, 3>& x) const {
  double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  double a = 1.0 + delta * s(r);
  if (r < 1e-12) {
    double d = a * a;
    return {d, 0, 0, 0, d, 0, 0, 0, d};
  }
  double b = delta * s_prime(r) * r;
  double alpha = a * (a + b);
  double beta = -a * b;
  double ux = x[0] / r, uy = x[1] / r, uz = x[2] / r;
  return {alpha + beta * ux * ux, beta * ux * uy,          beta * ux * uz,
          beta * uy * ux,          alpha + beta * uy * uy, beta * uy * uz,
          beta * uz * ux,          beta * uz * uy,          alpha + beta * uz * uz};
}

double TransversalMap::piola_deviation(double r) const {
  double a = 1.0 + delta * s(r);
  double b = r < 1e-12 ? 0.0 : delta * s_prime(r) * r;
  double alpha = a * (a + b);
  double beta = -a * b;
  // Eigenvalues alpha (tangential, twice) and alpha + beta (radial).
  return std::max(std::abs(alpha - 1.0), std::abs(alpha + beta - 1.0));
}

MollifierConfig::MollifierConfig(double delta_, double xi_, int quad_order_)
    : delta(delta_), xi(xi_), quad_order(quad_order_) {
  if (!(delta > 0.0) || delta > 1.0) throw InvalidConfig("delta must lie in (0, 1]");
  if (!(xi > 0.0) || xi > 1.0 / 3.0)
    throw InvalidConfig("xi must lie in (0, 1/3] or the support margin degenerates");
  // Order 2 puts every product node on the unit sphere where rho vanishes;
  // 3 is the smallest order with interior mass.
  if (quad_order < 3 || quad_order > 32)
    throw InvalidConfig("quadrature order must lie in [3, 32]");

  // Clearance sweep: for every direction and every radius within 2*delta*xi
  // of the sphere, the sampling ball around theta(x) must miss the closed
  // unit ball.
  TransversalMap map(delta);
  for (int ix = -1; ix <= 1; ++ix)
    for (int iy = -1; iy <= 1; ++iy)
      for (int iz = -1; iz <= 1; ++iz) {
        if (ix == 0 && iy == 0 && iz == 0) continue;
        double len = std::sqrt(double(ix * ix + iy * iy + iz * iz));
        for (double r : {1.0 - 2.0 * delta * xi, 1.0 - delta * xi, 1.0}) {
          std::array<double, 3> x = {r * ix / len, r * iy / len, r * iz / len};
          std::array<double, 3> t = map.theta(x);
          double tn = std::sqrt(t[0] * t[0] + t[1] * t[1] + t[2] * t[2]);
          if (tn - delta * xi < 1.0 - 1e-12) {
            char buf[128];
            std::snprintf(buf, sizeof(buf),
                          "margin check failed: |theta(x)| - delta*xi = %.12g < 1 at r = %.12g",
                          tn - delta * xi, r);
            throw InvalidConfig(buf);
          }
        }
      }
}

TimeMollifierConfig::TimeMollifierConfig(double eps) : epsilon(eps) {
  if (!(epsilon > 0.0)) throw InvalidConfig("time mollifier width must be positive");
}

SampledField mollify_div(const SampledField& v, const MollifierConfig& cfg) {
  if (v.domain != Domain::Ball)
    throw InvalidConfig("the divergence-preserving mollifier acts on ball fields");
  int n = v.n;
  BallQuadrature quad(cfg.quad_order);
  TransversalMap map(cfg.delta);
  double reach = cfg.delta * cfg.xi;

  SampledField out(Domain::Ball, n);
  out.time = v.time;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        std::array<double, 3> x = {out.coord(ix), out.coord(iy), out.coord(iz)};
        double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        if (r2 > 1.0) continue;
        std::array<double, 3> t = map.theta(x);
        double tn = std::sqrt(t[0] * t[0] + t[1] * t[1] + t[2] * t[2]);
        // Whole sampling ball outside the support: exact zero.
        if (tn - reach * quad.y_max >= 1.0) continue;

        double acc[3] = {0.0, 0.0, 0.0};
        for (const QuadPoint& p : quad.points) {
          double pos[3] = {t[0] + reach * p.y[0], t[1] + reach * p.y[1],
                           t[2] + reach * p.y[2]};
          double s[3];
          sample_extension(v, pos, s);
          acc[0] += p.w * s[0];
          acc[1] += p.w * s[1];
          acc[2] += p.w * s[2];
        }
        std::array<double, 9> pm = map.piola(x);
        std::size_t idx = out.index(ix, iy, iz);
        std::size_t comp = out.nodes();
        out.data[idx] = pm[0] * acc[0] + pm[1] * acc[1] + pm[2] * acc[2];
        out.data[idx + comp] = pm[3] * acc[0] + pm[4] * acc[1] + pm[5] * acc[2];
        out.data[idx + 2 * comp] = pm[6] * acc[0] + pm[7] * acc[1] + pm[8] * acc[2];
      }
  return out;
}

std::vector<SampledField> mollify_time(const std::vector<SampledField>& series,
                                       const TimeMollifierConfig& cfg) {
  double dt = 0.0;
  check_uniform_series(series, dt);
  if (dt > cfg.epsilon / 8.0)
    throw InvalidConfig("time grid too coarse: need dt <= epsilon/8");
  int half = int(cfg.epsilon / dt + 1e-12);
  long long frames = (long long)series.size() - 2 * half;
  if (frames <= 0)
    throw InvalidConfig("time series shorter than one mollification window");

  std::vector<double> w(2 * half + 1);
  double total = 0.0;
  for (int j = -half; j <= half; ++j) {
    double t = j * dt / cfg.epsilon;
    w[j + half] = bump(t * t);
    total += w[j + half];
  }
  for (double& x : w) x /= total;

  std::vector<SampledField> out;
  out.reserve(frames);
  for (long long i = half; i < (long long)series.size() - half; ++i) {
    SampledField f(series[0].domain, series[0].n);
    f.time = series[i].time;
    for (int j = -half; j <= half; ++j) {
      double c = w[j + half];
      const std::vector<double>& src = series[i + j].data;
      for (std::size_t k = 0; k < f.data.size(); ++k) f.data[k] += c * src[k];
    }
    out.push_back(std::move(f));
  }
  return out;
}

double support_margin(const SampledField& w) {
  if (w.domain != Domain::Ball) throw InvalidConfig("support margin is a ball-field notion");
  double peak = 0.0;
  for (double v : w.data) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 1.0;
  double threshold = 1e-14 * peak;
  int n = w.n;
  double outermost = 0.0;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        std::size_t idx = w.index(ix, iy, iz);
        std::size_t comp = w.nodes();
        if (std::abs(w.data[idx]) <= threshold && std::abs(w.data[idx + comp]) <= threshold &&
            std::abs(w.data[idx + 2 * comp]) <= threshold)
          continue;
        double x = w.coord(ix), y = w.coord(iy), z = w.coord(iz);
        outermost = std::max(outermost, std::sqrt(x * x + y * y + z * z));
      }
  return 1.0 - outermost;
}

std::vector<ExperimentRow> convergence_experiment(const SampledField& v,
                                                  const std::vector<double>& deltas,
                                                  const ExtRational& q) {
  if (deltas.empty()) throw InvalidConfig("experiment needs at least one delta");
  for (std::size_t i = 1; i < deltas.size(); ++i)
    if (!(deltas[i] < deltas[i - 1])) throw InvalidConfig("deltas must be strictly decreasing");
  double qd = to_q(q);
  std::vector<ExperimentRow> rows;
  for (double d : deltas) {
    SampledField m = mollify_div(v, MollifierConfig(d));
    rows.push_back({d, lq_norm(diff_field(m, v), qd)});
  }
  return rows;
}

std::vector<ExperimentRow> gradient_bound_experiment(const SampledField& v,
                                                     const std::vector<double>& deltas,
                                                     const ExtRational& q) {
  if (deltas.empty()) throw InvalidConfig("experiment needs at least one delta");
  double qd = to_q(q);
  std::vector<ExperimentRow> rows;
  for (double d : deltas)
    rows.push_back({d, gradient_lq_norm(mollify_div(v, MollifierConfig(d)), qd)});
  return rows;
}

double commutation_residual(const std::vector<SampledField>& series, double delta,
                            double epsilon) {
  MollifierConfig cfg(delta);
  TimeMollifierConfig tcfg(epsilon);

  std::vector<SampledField> space_first;
  space_first.reserve(series.size());
  for (const SampledField& f : series) space_first.push_back(mollify_div(f, cfg));
  std::vector<SampledField> a = mollify_time(space_first, tcfg);

  std::vector<SampledField> time_first = mollify_time(series, tcfg);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    SampledField b = mollify_div(time_first[i], cfg);
    for (std::size_t k = 0; k < b.data.size(); ++k)
      worst = std::max(worst, std::abs(a[i].data[k] - b.data[k]));
  }
  return worst;
}

std::vector<ExperimentRow> uniform_time_check(const std::vector<SampledField>& series,
                                              const std::vector<double>& deltas,
                                              const ExtRational& q) {
  if (series.empty()) throw InvalidConfig("time series must be nonempty");
  if (deltas.empty()) throw InvalidConfig("experiment needs at least one delta");
  double qd = to_q(q);
  std::vector<ExperimentRow> rows;
  for (double d : deltas) {
    MollifierConfig cfg(d);
    double worst = 0.0;
    for (const SampledField& f : series)
      worst = std::max(worst, lq_norm(diff_field(mollify_div(f, cfg), f), qd));
    rows.push_back({d, worst});
  }
  return rows;
}

}  // namespace flowcheck
