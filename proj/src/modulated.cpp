#include "mhdlab/modulated.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "mhdlab/errors.hpp"
#include "mhdlab/norms.hpp"
#include "mhdlab/pressure.hpp"
#include "mhdlab/spectral.hpp"

namespace mhdlab {

namespace {

void require_matched(const Grid& a, const Grid& b, double ta, double tb, double tol,
                     const char* what) {
  if (!(a == b)) throw UsageError(std::string(what) + ": grid mismatch");
  if (std::abs(ta - tb) > tol) {
    std::ostringstream os;
    os << what << ": time mismatch (" << ta << " vs " << tb << ")";
    throw UsageError(os.str());
  }
}

VectorField sqrt_rho_u(const CompressibleState& c) {
  ScalarField inv_sqrt = c.rho;
  for (double& v : inv_sqrt.values()) v = 1.0 / std::sqrt(v);
  return inv_sqrt * c.mom;
}

double half_sq(double x) { return 0.5 * x * x; }

}  // namespace

ScalarField phi_epsilon(const ScalarField& rho, const PhysParams& p) {
  ScalarField out = rho;
  for (double& v : out.values()) v = (v - 1.0) / p.eps;
  return out;
}

ScalarField pi_epsilon(const ScalarField& rho, const PhysParams& p, bool signed_variant) {
  ScalarField out(rho.grid());
  for (std::size_t i = 0; i < rho.size(); ++i) out[i] = pi_value(rho[i], p, signed_variant);
  return out;
}

ModulatedComponents modulated_components(const CompressibleState& c, const IdealState& i,
                                         const AcousticState& a, const PhysParams& p,
                                         bool signed_pi, double time_tol) {
  const Grid& g = c.rho.grid();
  require_matched(g, i.u.grid(), c.t, i.t, time_tol, "modulated_components(ideal)");
  require_matched(g, a.grid(), c.t, a.t(), time_tol, "modulated_components(corrector)");
  for (const auto& r : c.rho.values()) {
    if (!(r > kRhoFloor)) throw VacuumError("modulated_components: vacuum");
  }

  ModulatedComponents m;
  m.t = c.t;
  VectorField w = sqrt_rho_u(c);
  w -= i.u;
  m.uncorrected_w2 = half_sq(l2_norm(w));
  w -= a.g();
  m.w2 = half_sq(l2_norm(w));
  m.Z2 = half_sq(l2_norm(c.H - i.H));
  ScalarField pi = pi_epsilon(c.rho, p, signed_pi);
  m.uncorrected_pi2 = half_sq(l2_norm(pi));
  pi -= a.phi();
  m.pi2 = half_sq(l2_norm(pi));
  m.total = m.w2 + m.Z2 + m.pi2;
  return m;
}

Subdomain Subdomain::whole(const Grid& g) {
  Subdomain s;
  for (int a = 0; a < g.dim(); ++a) s.hi[static_cast<std::size_t>(a)] = g.box_len();
  return s;
}

bool Subdomain::contains(const std::array<double, 3>& x, int dim) const {
  for (int a = 0; a < dim; ++a) {
    const auto k = static_cast<std::size_t>(a);
    if (x[k] < lo[k] || x[k] >= hi[k]) return false;
  }
  return true;
}

TheoremNorms theorem_norms(const CompressibleState& c, const IdealState& i, const PhysParams& p,
                           const Subdomain& sub, double time_tol) {
  const Grid& g = c.rho.grid();
  require_matched(g, i.u.grid(), c.t, i.t, time_tol, "theorem_norms");
  TheoremNorms n;
  n.t = c.t;
  ScalarField dev = c.rho;
  dev += -1.0;
  n.lq2_rho = lq2_norm(dev, p.gamma);
  n.l2_Zh = l2_norm(c.H - i.H);
  const VectorField su = sqrt_rho_u(c);
  n.l2_Pu = l2_norm(helmholtz_P(su) - i.u);

  const VectorField diff = su - i.u;
  double acc = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!sub.contains(g.point(k), g.dim())) continue;
    for (int a = 0; a < g.dim(); ++a) acc += diff[a][k] * diff[a][k];
  }
  n.l2_local = std::sqrt(acc * g.cell_volume());
  return n;
}

RateReport fit_rate(std::vector<RatePoint> points, double alpha, double beta) {
  std::sort(points.begin(), points.end(),
            [](const RatePoint& a, const RatePoint& b) { return a.eps > b.eps; });
  std::set<double> distinct;
  for (const auto& pt : points) distinct.insert(pt.eps);
  if (distinct.size() < 3) {
    throw InsufficientDataError("fit_rate needs at least 3 distinct eps values");
  }
  RateReport rep;
  rep.sigma_theory = 1.0 - 0.5 * (alpha + beta);
  double sx = 0.0, sy = 0.0;
  for (const auto& pt : points) {
    if (!(pt.eps > 0.0) || !(pt.sup_total > 0.0)) {
      throw UsageError("fit_rate: eps and sup totals must be positive");
    }
    rep.eps_values.push_back(pt.eps);
    rep.sup_mod_total.push_back(pt.sup_total);
    rep.initial_misfit.push_back(pt.initial_misfit);
    sx += std::log(pt.eps);
    sy += std::log(pt.sup_total);
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n;
  const double my = sy / n;
  double sxy = 0.0, sxx = 0.0;
  for (const auto& pt : points) {
    const double dx = std::log(pt.eps) - mx;
    sxy += dx * (std::log(pt.sup_total) - my);
    sxx += dx * dx;
  }
  rep.fitted_slope = sxy / sxx;
  for (std::size_t k = 1; k < points.size(); ++k) {
    const auto& a = points[k - 1];
    const auto& b = points[k];
    rep.pair_slopes.push_back(std::log(a.sup_total / b.sup_total) / std::log(a.eps / b.eps));
  }
  return rep;
}

}  // namespace mhdlab
