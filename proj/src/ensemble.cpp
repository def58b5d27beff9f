#include "eulertop/ensemble.hpp"

#include <cmath>
#include <numbers>

#include "eulertop/geometry.hpp"

namespace eulertop {

EnsembleCone make_cone(const Vec3& center, double half_angle, std::size_t count, double big_j) {
  if (!(big_j > 0.0) || !std::isfinite(big_j)) {
    throw PreconditionError("make_cone: |J| must be positive and finite");
  }
  if (count < 2) {
    throw PreconditionError("make_cone: at least two members required");
  }
  if (!(half_angle > 0.0) || half_angle >= std::numbers::pi) {
    throw PreconditionError("make_cone: half-angle must lie in (0, pi)");
  }
  EnsembleCone cone;
  cone.center = normalized(center);
  cone.half_angle = half_angle;
  cone.count = count;
  cone.big_j = big_j;
  cone.samples.reserve(count);

  const TangentBasis basis = tangent_basis(cone.center);
  const double ca = std::cos(half_angle), sa = std::sin(half_angle);
  for (std::size_t i = 0; i < count; ++i) {
    const double psi = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count);
    const Vec3 dir = ca * cone.center + sa * (std::cos(psi) * basis.e_theta + std::sin(psi) * basis.e_phi);
    cone.samples.push_back(BodyState::from(big_j * dir));
  }
  return cone;
}

EnsembleResult ensemble_squeeze(const EnsembleCone& cone, const InertiaConfig& cfg, double dt,
                                std::size_t steps, std::size_t output_stride, Execution exec) {
  if (!(dt > 0.0) || steps < 1) {
    throw PreconditionError("ensemble_squeeze: dt must be positive and steps >= 1");
  }
  if (output_stride < 1) output_stride = 1;

  EnsembleResult result;
  if (cone.half_angle > 0.2) {
    result.warnings.push_back(
        "cone half-angle exceeds 0.2 rad; tangent-plane covariance is only a leading-order "
        "description of the spread");
  }

  const std::size_t n_times = steps / output_stride + 1;  // includes t = 0
  const std::size_t n_members = cone.samples.size();
  const TangentBasis basis = tangent_basis(cone.center);
  const FieldCoeffs f = FieldCoeffs::from(cfg);

  // dev[time * n_members + member] = (d_theta, d_phi)
  std::vector<double> dev_theta(n_times * n_members), dev_phi(n_times * n_members);

  // Exceptions must not cross the parallel region; record the failure of the
  // lowest member index and rethrow afterwards.
  std::vector<std::size_t> failed_at(n_members, 0);
  std::vector<char> failed(n_members, 0);

  for_index(n_members, exec, [&](std::size_t m) {
    Vec3 j = cone.samples[m].vec();
    std::size_t out = 0;
    auto record = [&](const Vec3& v) {
      double dth, dph;
      angular_deviation(cone.center, basis, normalized(v), dth, dph);
      dev_theta[out * n_members + m] = dth;
      dev_phi[out * n_members + m] = dph;
      ++out;
    };
    record(j);
    for (std::size_t step = 1; step <= steps; ++step) {
      j = rk4_step(f, j, dt);
      if (!all_finite(j)) {
        failed[m] = 1;
        failed_at[m] = out - 1;
        return;
      }
      if (step % output_stride == 0) record(j);
    }
  });

  for (std::size_t m = 0; m < n_members; ++m) {
    if (failed[m]) {
      throw IntegrationDivergedError("ensemble_squeeze: member " + std::to_string(m) + " diverged",
                                     failed_at[m]);
    }
  }

  result.series.reserve(n_times);
  for (std::size_t ti = 0; ti < n_times; ++ti) {
    double mth = 0.0, mph = 0.0;
    for (std::size_t m = 0; m < n_members; ++m) {
      mth += dev_theta[ti * n_members + m];
      mph += dev_phi[ti * n_members + m];
    }
    mth /= static_cast<double>(n_members);
    mph /= static_cast<double>(n_members);
    double cxx = 0.0, cxy = 0.0, cyy = 0.0;
    for (std::size_t m = 0; m < n_members; ++m) {
      const double a = dev_theta[ti * n_members + m] - mth;
      const double b = dev_phi[ti * n_members + m] - mph;
      cxx += a * a;
      cxy += a * b;
      cyy += b * b;
    }
    const double inv = 1.0 / static_cast<double>(n_members);
    const VarianceEllipse e = covariance_ellipse(cxx * inv, cxy * inv, cyy * inv);
    result.series.push_back({static_cast<double>(ti) * static_cast<double>(output_stride) * dt,
                             e.var_major, e.var_minor, e.tilt});
  }
  return result;
}

}  // namespace eulertop
