#pragma once

#include "srep/srep.hpp"
#include "srep/vec3.hpp"

namespace srep::synth {

// Global deformation applied to generated samples, composed in the order
// scale -> bend -> twist. The bend curves the long (x) axis in the x-z plane
// about y with curvature kappa = bend_angle / (2 * half_length); the twist
// rotates (y, z) about x by an angle linear in x, reaching twist_angle / 2
// at x = half_length.
struct DeformationParams {
    Vec3 scale{1.0, 1.0, 1.0};
    double bend_angle = 0.0;  // radians, |alpha| < pi
    double twist_angle = 0.0; // radians

    void validate() const;
};

Vec3 apply_deformation(const Vec3& q, const DeformationParams& p, double half_length);
Vec3 inverse_deformation(const Vec3& q, const DeformationParams& p, double half_length);

// Deforms skeletal points and spoke tips; spoke vectors become
// deformed tip - deformed base.
Srep deform_srep(const Srep& s, const DeformationParams& p, double half_length);

} // namespace srep::synth
