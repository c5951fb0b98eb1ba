#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "srep/deform.hpp"
#include "srep/ellipsoid.hpp"
#include "srep/vec3.hpp"

namespace srep::synth {

// Binary voxel grid with physical geometry. Voxels are stored x-fastest;
// origin is the world position of the center of voxel (0,0,0).
struct VolumetricMask {
    std::array<int, 3> dims{0, 0, 0};
    Vec3 spacing{1.0, 1.0, 1.0};
    Vec3 origin{0.0, 0.0, 0.0};
    std::vector<std::uint8_t> voxels;

    std::size_t index(int i, int j, int k) const {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(dims[0]) *
                   (static_cast<std::size_t>(j) + static_cast<std::size_t>(dims[1]) * k);
    }
    std::size_t size() const {
        return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
    }
    Vec3 voxel_center(int i, int j, int k) const {
        return {origin.x + spacing.x * i, origin.y + spacing.y * j, origin.z + spacing.z * k};
    }
    Vec3 center() const {
        return {origin.x + spacing.x * (dims[0] - 1) * 0.5,
                origin.y + spacing.y * (dims[1] - 1) * 0.5,
                origin.z + spacing.z * (dims[2] - 1) * 0.5};
    }
    std::size_t foreground_count() const;

    void validate() const; // dims >= 8 per axis, spacing > 0
};

struct ImageGeometry {
    std::array<int, 3> dims;
    Vec3 spacing;
    Vec3 origin;
};

// World-space bounding box of the deformed ellipsoid boundary, sampled
// densely in (theta, phi).
void deformed_bounds(const EllipsoidSpec& spec, const DeformationParams& params,
                     double half_length, Vec3& lo, Vec3& hi);

// Isotropic spacing fitted so the deformed shape spans `occupancy` of the
// tightest axis; the grid is centered on the shape.
ImageGeometry auto_geometry(const EllipsoidSpec& spec, const DeformationParams& params,
                            double half_length, const std::array<int, 3>& dims,
                            double occupancy = 0.70);

// Rasterizes the deformed ellipsoid: a voxel is foreground iff the inverse
// deformation of its center lies inside the base ellipsoid. Requires the
// shape to fit with a two-voxel margin on every axis.
VolumetricMask voxelize(const EllipsoidSpec& spec, const DeformationParams& params,
                        double half_length, const ImageGeometry& geom);

// NRRD with a text header and raw little-endian uchar payload.
void save_nrrd(const VolumetricMask& m, const std::string& path);
VolumetricMask load_nrrd(const std::string& path);

// Exact Euclidean distance (mm) from every voxel center to the nearest
// background voxel center; 0 on background. Felzenszwalb-Huttenlocher
// separable passes, anisotropic spacing supported.
std::vector<double> distance_transform(const VolumetricMask& m);

// Trilinear interpolation of a per-voxel field at a world-space point.
// Clamps to the grid.
double sample_trilinear(const VolumetricMask& m, const std::vector<double>& field, const Vec3& p);

} // namespace srep::synth
