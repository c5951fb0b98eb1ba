#include "srep/ellipsoid.hpp"

#include <algorithm>
#include <cmath>

#include "srep/errors.hpp"

namespace srep::synth {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

EllipsoidSpec::EllipsoidSpec(double sa, double sb, double sc) {
    if (!(sa > 0.0) || !(sb > 0.0) || !(sc > 0.0) || !std::isfinite(sa) || !std::isfinite(sb) ||
        !std::isfinite(sc))
        throw validation_error("EllipsoidSpec: semi-axes must be positive finite");
    double v[3] = {sa, sb, sc};
    std::sort(v, v + 3, std::greater<>());
    a = v[0];
    b = v[1];
    c = v[2];
}

double implicit_value(const EllipsoidSpec& e, const Vec3& p) {
    const double xa = p.x / e.a, yb = p.y / e.b, zc = p.z / e.c;
    return xa * xa + yb * yb + zc * zc;
}

Vec3 surface_normal(const EllipsoidSpec& e, const Vec3& p) {
    return normalized({p.x / (e.a * e.a), p.y / (e.b * e.b), p.z / (e.c * e.c)});
}

Vec3 boundary_point(const EllipsoidSpec& e, double theta, double phi) {
    const double cp = std::cos(phi);
    return {e.a * cp * std::cos(theta), e.b * cp * std::sin(theta), e.c * std::sin(phi)};
}

Vec3 medial_spoke(const Vec3& p, const EllipsoidSpec& e) {
    const double c2 = e.c * e.c;
    return {p.x * c2 / (e.a * e.a), p.y * c2 / (e.b * e.b), p.z};
}

MedialPoint medial_map(const Vec3& p, const EllipsoidSpec& e) {
    if (std::abs(implicit_value(e, p) - 1.0) > 1e-9)
        throw validation_error("medial_map: point is not on the ellipsoid surface");
    const Vec3 v = medial_spoke(p, e);
    return {p - v, norm(v)};
}

Srep analytic_srep(const EllipsoidSpec& e, int rings, int angular_samples) {
    if (rings < 1 || angular_samples < 3)
        throw validation_error("analytic_srep: grid dims must satisfy R >= 1, T >= 3");
    const int R = rings, T = angular_samples;

    Srep s;
    s.rings = R;
    s.angular_samples = T;
    s.skeletal_points.resize(s.num_skeletal());
    s.up_spokes.resize(s.num_skeletal());
    s.down_spokes.resize(s.num_skeletal());
    s.crest_spokes.resize(T);

    // Center: pole pair at phi = +-pi/2, written in closed form to keep the
    // center exactly at the origin.
    const Vec3 pole{0.0, 0.0, e.c};
    s.skeletal_points[0] = pole - medial_spoke(pole, e); // origin
    s.up_spokes[0] = medial_spoke(pole, e);
    s.down_spokes[0] = {s.up_spokes[0].x, s.up_spokes[0].y, -s.up_spokes[0].z};

    for (int j = 1; j <= R; ++j) {
        const double sin_phi = 1.0 - static_cast<double>(j) / R; // equal-area in sin(phi)
        const double phi = std::asin(sin_phi);
        for (int i = 0; i < T; ++i) {
            const double theta = 2.0 * kPi * i / T;
            const Vec3 p = boundary_point(e, theta, phi);
            const Vec3 up = medial_spoke(p, e);
            const int k = s.skeletal_index(j, i);
            s.skeletal_points[k] = p - up;
            s.skeletal_points[k].z = 0.0; // exact: the skeletal sheet is z = 0
            s.up_spokes[k] = up;
            s.down_spokes[k] = {up.x, up.y, -up.z};
            if (j == R) s.crest_spokes[i] = {up.x, up.y, 0.0};
        }
    }
    return s;
}

} // namespace srep::synth
