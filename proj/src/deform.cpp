#include "srep/deform.hpp"

#include <cmath>

#include "srep/errors.hpp"

namespace srep::synth {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSeriesKappa = 1e-6; // below this the bend uses series forms

// sin(k*x)/k and (1 - cos(k*x))/k via 5th-order series, exact at k = 0.
double sin_kx_over_k(double k, double x) {
    const double kx = k * x;
    return x * (1.0 - kx * kx / 6.0 + kx * kx * kx * kx / 120.0);
}

double one_minus_cos_kx_over_k(double k, double x) {
    const double kx = k * x;
    return k * x * x * (0.5 - kx * kx / 24.0 + kx * kx * kx * kx / 720.0);
}

void bend(double kappa, double& x, double& z) {
    if (std::abs(kappa) < kSeriesKappa) {
        // x' = S*(1 - k*z), z' = C2 + z*(1 - k*C2) with S = sin(kx)/k and
        // C2 = (1 - cos(kx))/k; reduces to the identity at k = 0.
        const double s = sin_kx_over_k(kappa, x);
        const double c2 = one_minus_cos_kx_over_k(kappa, x);
        const double nx = s * (1.0 - kappa * z);
        const double nz = c2 + z * (1.0 - kappa * c2);
        x = nx;
        z = nz;
        return;
    }
    const double u = 1.0 / kappa - z;
    const double nx = std::sin(kappa * x) * u;
    const double nz = 1.0 / kappa - std::cos(kappa * x) * u;
    x = nx;
    z = nz;
}

void unbend(double kappa, double& x, double& z) {
    if (kappa == 0.0) return;
    // Rearranged so no 1/kappa term appears; stable for any small kappa and
    // exact enough (O((kx)^6) mismatch) to invert the series branch too.
    const double tx = kappa * x;
    const double tz = 1.0 - kappa * z;
    const double h = std::hypot(tx, tz); // = |kappa| * (bend-center distance)
    const double nx = std::atan2(tx, tz) / kappa;
    const double nz = (2.0 * z - kappa * (x * x + z * z)) / (1.0 + h);
    x = nx;
    z = nz;
}

void twist(double rate, double& y, double& z, double x) {
    const double beta = rate * x;
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double ny = y * cb - z * sb;
    const double nz = y * sb + z * cb;
    y = ny;
    z = nz;
}

} // namespace

void DeformationParams::validate() const {
    if (!finite(scale) || !(scale.x > 0.0) || !(scale.y > 0.0) || !(scale.z > 0.0))
        throw validation_error("DeformationParams: scale factors must be positive finite");
    if (!std::isfinite(bend_angle) || std::abs(bend_angle) >= kPi)
        throw validation_error("DeformationParams: |bend_angle| must be < pi");
    if (!std::isfinite(twist_angle))
        throw validation_error("DeformationParams: twist_angle must be finite");
}

Vec3 apply_deformation(const Vec3& q, const DeformationParams& p, double half_length) {
    Vec3 v{q.x * p.scale.x, q.y * p.scale.y, q.z * p.scale.z};
    bend(p.bend_angle / (2.0 * half_length), v.x, v.z);
    twist(p.twist_angle / (2.0 * half_length), v.y, v.z, v.x);
    return v;
}

Vec3 inverse_deformation(const Vec3& q, const DeformationParams& p, double half_length) {
    Vec3 v = q;
    twist(-p.twist_angle / (2.0 * half_length), v.y, v.z, v.x);
    unbend(p.bend_angle / (2.0 * half_length), v.x, v.z);
    v.x /= p.scale.x;
    v.y /= p.scale.y;
    v.z /= p.scale.z;
    return v;
}

Srep deform_srep(const Srep& s, const DeformationParams& p, double half_length) {
    Srep out = s;
    auto map = [&](const Vec3& q) { return apply_deformation(q, p, half_length); };
    for (int k = 0; k < s.num_skeletal(); ++k) {
        const Vec3 base = map(s.skeletal_points[k]);
        out.skeletal_points[k] = base;
        out.up_spokes[k] = map(s.skeletal_points[k] + s.up_spokes[k]) - base;
        out.down_spokes[k] = map(s.skeletal_points[k] + s.down_spokes[k]) - base;
    }
    for (int i = 0; i < s.angular_samples; ++i) {
        const int k = s.fold_index(i);
        out.crest_spokes[i] =
            map(s.skeletal_points[k] + s.crest_spokes[i]) - out.skeletal_points[k];
    }
    return out;
}

} // namespace srep::synth
