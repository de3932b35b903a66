#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "flowcheck/field.hpp"
#include "flowcheck/mollify.hpp"

using namespace flowcheck;

namespace {

constexpr double kPi = 3.14159265358979323846;

double max_abs_diff(const SampledField& a, const SampledField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

double grid_sup_deviation(const TransversalMap& map, int n) {
  SampledField probe(Domain::Ball, n);
  double sup = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double x = probe.coord(i), y = probe.coord(j), z = probe.coord(k);
        double r = std::sqrt(x * x + y * y + z * z);
        if (r > 1.0) continue;
        sup = std::max(sup, map.piola_deviation(r));
      }
  return sup;
}

// Amplitude-modulated rotation frames on a uniform time grid.
std::vector<SampledField> modulated_series(int n, int frames, double dt) {
  SampledField rot = rigid_rotation({0, 0, 1}, n);
  std::vector<SampledField> series;
  series.reserve(frames);
  for (int i = 0; i < frames; ++i) {
    SampledField f = rot;
    f.time = i * dt;
    double a = 1.0 + 0.5 * std::sin(2.0 * kPi * f.time);
    for (double& v : f.data) v *= a;
    series.push_back(std::move(f));
  }
  return series;
}

}  // namespace

TEST_CASE("transversal map blends smoothly and pushes radially outward") {
  // The profile meets 1/r at r = 1/2 with two matched derivatives.
  CHECK(TransversalMap::s(0.5) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(TransversalMap::s_prime(0.5) == doctest::Approx(-4.0).epsilon(1e-14));
  double h = 1e-6;
  CHECK((TransversalMap::s(0.5 + h) - TransversalMap::s(0.5 - h)) / (2 * h) ==
        doctest::Approx(-4.0).epsilon(1e-5));

  TransversalMap map(0.15);
  // |theta(x)| = r + delta wherever the profile is 1/r.
  for (double r : {0.5, 0.7, 0.9, 1.0}) {
    std::array<double, 3> x = {r / std::sqrt(3.0), r / std::sqrt(3.0), r / std::sqrt(3.0)};
    std::array<double, 3> t = map.theta(x);
    double tn = std::sqrt(t[0] * t[0] + t[1] * t[1] + t[2] * t[2]);
    CHECK(tn == doctest::Approx(r + 0.15).epsilon(1e-13));
  }
  std::array<double, 3> origin = map.theta({0.0, 0.0, 0.0});
  CHECK(origin[0] == 0.0);
  CHECK(origin[1] == 0.0);
  CHECK(origin[2] == 0.0);
}

TEST_CASE("piola matrix equals cofactor of the finite-difference jacobian") {
  TransversalMap map(0.12);
  // piola = det(J) J^{-1}, so piola * J must equal det(J) I.
  std::array<std::array<double, 3>, 4> points = {{{0.3, -0.2, 0.5},
                                                  {0.04, 0.01, -0.02},
                                                  {0.6, 0.1, -0.3},
                                                  {0.0, 0.0, 0.9}}};
  double h = 1e-6;
  for (const auto& p : points) {
    double J[9];
    for (int j = 0; j < 3; ++j) {
      std::array<double, 3> lo = p, hi = p;
      lo[j] -= h;
      hi[j] += h;
      std::array<double, 3> tl = map.theta(lo), th = map.theta(hi);
      for (int i = 0; i < 3; ++i) J[i * 3 + j] = (th[i] - tl[i]) / (2 * h);
    }
    double det = J[0] * (J[4] * J[8] - J[5] * J[7]) - J[1] * (J[3] * J[8] - J[5] * J[6]) +
                 J[2] * (J[3] * J[7] - J[4] * J[6]);
    std::array<double, 9> pm = map.piola(p);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double prod = 0.0;
        for (int k = 0; k < 3; ++k) prod += pm[i * 3 + k] * J[k * 3 + j];
        CHECK(prod == doctest::Approx(i == j ? det : 0.0).epsilon(2e-5).scale(1.0));
      }
  }
}

TEST_CASE("jacobian deviation is bounded by a single constant times delta") {
  double sup2 = grid_sup_deviation(TransversalMap(0.2), 64);
  double c = sup2 / 0.2;
  CHECK(c == doctest::Approx(10.2861).epsilon(1e-3));
  CHECK(grid_sup_deviation(TransversalMap(0.1), 64) <= c * 0.1);
  CHECK(grid_sup_deviation(TransversalMap(0.05), 64) <= c * 0.05);
}

TEST_CASE("mollifier config validation") {
  CHECK_THROWS_AS(MollifierConfig(0.0), InvalidConfig);
  CHECK_THROWS_AS(MollifierConfig(-0.1), InvalidConfig);
  CHECK_THROWS_AS(MollifierConfig(1.5), InvalidConfig);
  CHECK_THROWS_AS(MollifierConfig(0.2, 0.0), InvalidConfig);
  CHECK_THROWS_AS(MollifierConfig(0.2, 0.4), InvalidConfig);
  CHECK_THROWS_AS(MollifierConfig(0.2, 0.25, 2), InvalidConfig);
  CHECK_THROWS_AS(MollifierConfig(0.2, 0.25, 33), InvalidConfig);
  MollifierConfig extreme(1.0, 0.25, 3);
  CHECK(extreme.quad_order == 3);
  MollifierConfig wide_xi(0.2, 1.0 / 3.0);
  CHECK(wide_xi.xi == doctest::Approx(1.0 / 3.0));
  // Large delta*xi pushes the vanishing collar below the blend knee at
  // r = 1/2, where the outward shift is weaker; the clearance sweep
  // rejects the combination.
  CHECK_THROWS_AS(MollifierConfig(1.0, 1.0 / 3.0), InvalidConfig);
  MollifierConfig defaults(0.2);
  CHECK(defaults.xi == doctest::Approx(0.25));
  CHECK(defaults.quad_order == 8);
  CHECK_THROWS_AS(TimeMollifierConfig(0.0), InvalidConfig);
  CHECK_THROWS_AS(TimeMollifierConfig(-1.0), InvalidConfig);
}

TEST_CASE("mollifying zero gives zero and the timestamp survives") {
  SampledField zero(Domain::Ball, 16);
  zero.time = 0.7;
  SampledField out = mollify_div(zero, MollifierConfig(0.2));
  CHECK(out.time == 0.7);
  for (double v : out.data) CHECK(v == 0.0);
}

TEST_CASE("mollification is linear") {
  int n = 24;
  SampledField r = rigid_rotation({0, 0, 1}, n);
  SampledField p = poloidal_ball_field(n);
  SampledField combo(Domain::Ball, n);
  for (std::size_t i = 0; i < combo.data.size(); ++i)
    combo.data[i] = 2.0 * r.data[i] - 3.0 * p.data[i];
  MollifierConfig cfg(0.15);
  SampledField lhs = mollify_div(combo, cfg);
  SampledField mr = mollify_div(r, cfg);
  SampledField mp = mollify_div(p, cfg);
  SampledField rhs(Domain::Ball, n);
  for (std::size_t i = 0; i < rhs.data.size(); ++i)
    rhs.data[i] = 2.0 * mr.data[i] - 3.0 * mp.data[i];
  CHECK(max_abs_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("mollification rejects torus fields") {
  SampledField u = abc_flow(1.0, 1.0, 1.0, 16);
  CHECK_THROWS_AS(mollify_div(u, MollifierConfig(0.2)), InvalidConfig);
}

TEST_CASE("operator norm stays bounded across delta") {
  int n = 32;
  SampledField rot = rigid_rotation({0, 0, 1}, n);
  SampledField pol = poloidal_ball_field(n);
  double rot2 = lq_norm(rot, 2.0);
  double pol4 = lq_norm(pol, 4.0);
  for (double d : {0.2, 0.1, 0.05}) {
    MollifierConfig cfg(d);
    CHECK(lq_norm(mollify_div(rot, cfg), 2.0) / rot2 <= 1.5);
    CHECK(lq_norm(mollify_div(pol, cfg), 4.0) / pol4 <= 1.5);
  }
}

TEST_CASE("mollification error decreases as delta shrinks") {
  int n = 32;
  std::vector<double> deltas = {0.2, 0.1, 0.05, 0.025};
  SampledField rot = rigid_rotation({0, 0, 1}, n);
  std::vector<ExperimentRow> rows = convergence_experiment(rot, deltas, ExtRational(2));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].value == doctest::Approx(1.170703).epsilon(1e-4));
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].delta == deltas[i]);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].value < rows[i - 1].value);

  SampledField pol = poloidal_ball_field(n);
  rows = convergence_experiment(pol, deltas, ExtRational(4));
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].value < rows[i - 1].value);

  SampledField zero(Domain::Ball, 16);
  for (const ExperimentRow& row : convergence_experiment(zero, deltas, ExtRational(2)))
    CHECK(row.value == 0.0);

  CHECK_THROWS_AS(convergence_experiment(rot, {0.1, 0.2}, ExtRational(2)), InvalidConfig);
  CHECK_THROWS_AS(convergence_experiment(rot, {}, ExtRational(2)), InvalidConfig);
}

TEST_CASE("mollified gradients stay uniformly bounded") {
  int n = 32;
  std::vector<double> deltas = {0.2, 0.1, 0.05, 0.025};
  std::vector<ExperimentRow> rows =
      gradient_bound_experiment(rigid_rotation({0, 0, 1}, n), deltas, ExtRational(2));
  REQUIRE(rows.size() == 4);
  std::vector<double> vals;
  for (const ExperimentRow& r : rows) {
    CHECK(r.value > 0.0);
    vals.push_back(r.value);
  }
  std::sort(vals.begin(), vals.end());
  double median = 0.5 * (vals[1] + vals[2]);
  CHECK(vals.back() <= 2.0 * median);
}

TEST_CASE("support margins respect the collar width") {
  SampledField zero(Domain::Ball, 16);
  CHECK(support_margin(zero) == 1.0);

  // Odd grid so the sphere touches nodes on the axes; the raw rotation is
  // nonzero there, hence margin exactly zero.
  SampledField raw = rigid_rotation({0, 0, 1}, 33);
  CHECK(support_margin(raw) == 0.0);

  SampledField m = mollify_div(raw, MollifierConfig(0.1));
  CHECK(support_margin(m) >= 0.05);

  SampledField rot = rigid_rotation({0, 0, 1}, 32);
  for (double d : {0.2, 0.1, 0.05}) {
    MollifierConfig cfg(d);
    CHECK(support_margin(mollify_div(rot, cfg)) >= 2.0 * d * cfg.xi);
  }

  SampledField torus = abc_flow(1.0, 0.0, 0.0, 16);
  CHECK_THROWS_AS(support_margin(torus), InvalidConfig);
}

TEST_CASE("divergence residual of the mollified rotation shrinks under refinement") {
  MollifierConfig cfg(0.2);
  double r32 = lq_norm(divergence(mollify_div(rigid_rotation({0, 0, 1}, 32), cfg)), 2.0);
  double r64 = lq_norm(divergence(mollify_div(rigid_rotation({0, 0, 1}, 64), cfg)), 2.0);
  CHECK(r32 / r64 >= 1.5);
}

TEST_CASE("space and time mollification commute to round-off") {
  std::vector<SampledField> series = modulated_series(24, 18, 0.04);
  SampledField pol = poloidal_ball_field(24);
  for (std::size_t i = 0; i < series.size(); ++i)
    for (std::size_t k = 0; k < pol.data.size(); ++k)
      series[i].data[k] += series[i].time * pol.data[k];
  CHECK(commutation_residual(series, 0.15, 0.32) <= 1e-10);

  std::vector<SampledField> flat;
  for (int i = 0; i < 18; ++i) {
    SampledField f(Domain::Ball, 16);
    f.time = i * 0.04;
    flat.push_back(std::move(f));
  }
  CHECK(commutation_residual(flat, 0.15, 0.32) == 0.0);
}

TEST_CASE("time mollifier reproduces constants and linear ramps") {
  int n = 16, frames = 20;
  double dt = 0.05, eps = 0.4;
  SampledField rot = rigid_rotation({0, 0, 1}, n);

  std::vector<SampledField> constant;
  for (int i = 0; i < frames; ++i) {
    SampledField f = rot;
    f.time = i * dt;
    constant.push_back(std::move(f));
  }
  std::vector<SampledField> out = mollify_time(constant, TimeMollifierConfig(eps));
  REQUIRE(out.size() == 4);
  CHECK(out.front().time == doctest::Approx(8 * dt).epsilon(1e-14));
  for (const SampledField& f : out) CHECK(max_abs_diff(f, rot) < 1e-14);

  std::vector<SampledField> ramp;
  for (int i = 0; i < frames; ++i) {
    SampledField f = rot;
    f.time = i * dt;
    for (double& v : f.data) v *= f.time;
    ramp.push_back(std::move(f));
  }
  out = mollify_time(ramp, TimeMollifierConfig(eps));
  for (const SampledField& f : out) {
    SampledField expect = rot;
    for (double& v : expect.data) v *= f.time;
    CHECK(max_abs_diff(f, expect) < 1e-13);
  }
}

TEST_CASE("time mollifier damps a sinusoid by the kernel cosine factor") {
  int n = 16, frames = 24;
  double dt = 0.04, eps = 0.32, omega = 5.0;
  SampledField rot = rigid_rotation({0, 0, 1}, n);
  std::vector<SampledField> series;
  for (int i = 0; i < frames; ++i) {
    SampledField f = rot;
    f.time = i * dt;
    double a = std::sin(omega * f.time);
    for (double& v : f.data) v *= a;
    series.push_back(std::move(f));
  }
  std::vector<SampledField> out = mollify_time(series, TimeMollifierConfig(eps));
  REQUIRE(out.size() == 8);

  // One-dimensional oracle: even kernel turns the shift into a cosine factor.
  int half = 8;
  double wsum = 0.0, factor = 0.0;
  for (int j = -half; j <= half; ++j) {
    double t = j * dt / eps;
    double w = t * t < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0;
    wsum += w;
    factor += w * std::cos(omega * j * dt);
  }
  factor /= wsum;
  CHECK(factor == doctest::Approx(0.811638).epsilon(1e-5));
  for (const SampledField& f : out) {
    SampledField expect = rot;
    double a = factor * std::sin(omega * f.time);
    for (double& v : expect.data) v *= a;
    CHECK(max_abs_diff(f, expect) < 1e-13);
  }
}

TEST_CASE("time mollifier validation") {
  SampledField rot = rigid_rotation({0, 0, 1}, 16);
  auto make = [&](int frames, double dt) {
    std::vector<SampledField> s;
    for (int i = 0; i < frames; ++i) {
      SampledField f = rot;
      f.time = i * dt;
      s.push_back(std::move(f));
    }
    return s;
  };
  // dt above eps/8 is too coarse.
  CHECK_THROWS_AS(mollify_time(make(20, 0.1), TimeMollifierConfig(0.4)), InvalidConfig);
  // 16 frames leave no interior window for half-width 8.
  CHECK_THROWS_AS(mollify_time(make(16, 0.05), TimeMollifierConfig(0.4)), InvalidConfig);
  CHECK_THROWS_AS(mollify_time(make(1, 0.05), TimeMollifierConfig(0.4)), InvalidConfig);

  std::vector<SampledField> skewed = make(20, 0.05);
  skewed[7].time += 0.01;
  CHECK_THROWS_AS(mollify_time(skewed, TimeMollifierConfig(0.4)), InvalidConfig);

  std::vector<SampledField> mixed = make(20, 0.05);
  mixed[3] = rigid_rotation({0, 0, 1}, 24);
  mixed[3].time = 3 * 0.05;
  CHECK_THROWS_AS(mollify_time(mixed, TimeMollifierConfig(0.4)), InvalidConfig);
}

TEST_CASE("uniform-in-time mollification error decreases with delta") {
  std::vector<SampledField> series = modulated_series(32, 4, 0.05);
  std::vector<double> deltas = {0.2, 0.1};
  std::vector<ExperimentRow> rows = uniform_time_check(series, deltas, ExtRational(2));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].delta == 0.2);
  CHECK(rows[1].value < rows[0].value);
  CHECK_THROWS_AS(uniform_time_check({}, deltas, ExtRational(2)), InvalidConfig);
}
