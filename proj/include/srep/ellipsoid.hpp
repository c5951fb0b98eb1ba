#pragma once

#include "srep/srep.hpp"
#include "srep/vec3.hpp"

namespace srep::synth {

// Axis-aligned ellipsoid (x/a)^2 + (y/b)^2 + (z/c)^2 = 1 in its canonical
// frame: a along x, b along y, c along z. Semi-axes are sorted on
// construction so a >= b >= c > 0.
struct EllipsoidSpec {
    double a = 1.0;
    double b = 1.0;
    double c = 1.0;

    EllipsoidSpec() = default;
    EllipsoidSpec(double sa, double sb, double sc);
};

// Value of the implicit function (1 on the surface).
double implicit_value(const EllipsoidSpec& e, const Vec3& p);

// Unit outward normal, proportional to (x/a^2, y/b^2, z/c^2).
Vec3 surface_normal(const EllipsoidSpec& e, const Vec3& p);

// Boundary parametrization: theta is longitude, phi latitude in [-pi/2, pi/2].
Vec3 boundary_point(const EllipsoidSpec& e, double theta, double phi);

struct MedialPoint {
    Vec3 m;   // skeletal point, z = 0
    double r; // inscribed sphere radius, equals |p - m|
};

// Maps a boundary point to the center and radius of the maximal inscribed
// sphere tangent at p. Throws if p is not on the surface within 1e-9.
MedialPoint medial_map(const Vec3& p, const EllipsoidSpec& e);

// Medial spoke p - m computed without cancellation: c^2 * (x/a^2, y/b^2, z/c^2).
Vec3 medial_spoke(const Vec3& p, const EllipsoidSpec& e);

// Exact s-rep of the ellipsoid. Ring latitudes are sin-spaced,
// sin(phi_j) = 1 - j/R, so the fold ring lies at phi = 0 where the up, down
// and crest spokes coincide with the in-plane medial spoke.
Srep analytic_srep(const EllipsoidSpec& e, int rings, int angular_samples);

} // namespace srep::synth
