#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "srep/deform.hpp"
#include "srep/ellipsoid.hpp"
#include "srep/mask.hpp"

namespace srep::synth {

struct SampleRecord {
    int id = 0;
    std::string split; // "train" or "test"
    std::string mask_path;
    std::string srep_path;
    EllipsoidSpec spec;
    DeformationParams params;
};

struct DatasetManifest {
    std::uint64_t seed = 0;
    int rings = 3;
    int angular_samples = 8;
    std::array<int, 3> dims{64, 64, 64};
    std::vector<SampleRecord> samples; // unique ids, ascending

    std::vector<const SampleRecord*> split_samples(const std::string& split) const;

    // Paths inside the manifest are relative to its directory.
    void save(const std::string& path) const;
    static DatasetManifest load(const std::string& path);
};

struct GenerateOptions {
    int count = 0;
    std::uint64_t seed = 0;
    int rings = 3;
    int angular_samples = 8;
    std::array<int, 3> dims{64, 64, 64};
    EllipsoidSpec base{2.0, 1.5, 1.0};
    double occupancy = 0.70;
    double train_fraction = 0.8;
    int jobs = 1;
    std::string out_dir;
};

// Draws scale ~ N(1, 0.15) per axis, bend ~ N(pi/3, pi/8), twist
// ~ N(pi/6, pi/8) from per-sample streams, rejection-resampling
// non-positive scales and |bend| >= pi. Writes one NRRD mask and one s-rep
// per sample plus the manifest; byte-identical for a given seed regardless
// of job count.
DatasetManifest generate_dataset(const GenerateOptions& opts);

// The deformation parameters' random draw for one sample; exposed so tests
// can reproduce ground truth without generating files.
DeformationParams draw_deformation(std::uint64_t dataset_seed, int sample_id);

} // namespace srep::synth
