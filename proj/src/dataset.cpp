#include "srep/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "srep/errors.hpp"
#include "srep/rng.hpp"
#include "srep/srep_io.hpp"

namespace srep::synth {

namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string sample_name(int id) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "s%05d", id);
    return buf;
}

} // namespace

std::vector<const SampleRecord*> DatasetManifest::split_samples(const std::string& split) const {
    std::vector<const SampleRecord*> out;
    for (const auto& s : samples)
        if (s.split == split) out.push_back(&s);
    return out;
}

void DatasetManifest::save(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw io_error("cannot open for writing: " + path);
    os << "manifest/1\n";
    os << "seed " << seed << "\n";
    os << "grid " << rings << " " << angular_samples << "\n";
    os << "dims " << dims[0] << " " << dims[1] << " " << dims[2] << "\n";
    os << "count " << samples.size() << "\n";
    for (const auto& s : samples) {
        os << "sample " << s.id << " " << s.split << " " << s.mask_path << " " << s.srep_path
           << " axes " << fmt(s.spec.a) << " " << fmt(s.spec.b) << " " << fmt(s.spec.c)
           << " scale " << fmt(s.params.scale.x) << " " << fmt(s.params.scale.y) << " "
           << fmt(s.params.scale.z) << " bend " << fmt(s.params.bend_angle) << " twist "
           << fmt(s.params.twist_angle) << "\n";
    }
    os << "end\n";
    if (!os) throw io_error("write failed: " + path);
}

DatasetManifest DatasetManifest::load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open: " + path);
    const std::string dir = fs::path(path).parent_path().string();
    auto resolve = [&](const std::string& rel) {
        return dir.empty() ? rel : (fs::path(dir) / rel).string();
    };

    DatasetManifest m;
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& what) -> void {
        throw parse_error(path + ":" + std::to_string(line_no) + ": " + what);
    };
    auto next = [&]() {
        if (!std::getline(is, line)) fail("unexpected end of file");
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
    };

    next();
    if (line != "manifest/1") fail("unsupported version header '" + line + "'");
    std::size_t count = 0;
    while (true) {
        next();
        if (line == "end") break;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "seed") {
            if (!(ss >> m.seed)) fail("malformed seed");
        } else if (key == "grid") {
            if (!(ss >> m.rings >> m.angular_samples)) fail("malformed grid");
        } else if (key == "dims") {
            if (!(ss >> m.dims[0] >> m.dims[1] >> m.dims[2])) fail("malformed dims");
        } else if (key == "count") {
            if (!(ss >> count)) fail("malformed count");
        } else if (key == "sample") {
            SampleRecord r;
            std::string axes_kw, scale_kw, bend_kw, twist_kw;
            double a, b, c;
            if (!(ss >> r.id >> r.split >> r.mask_path >> r.srep_path >> axes_kw >> a >> b >> c >>
                  scale_kw >> r.params.scale.x >> r.params.scale.y >> r.params.scale.z >>
                  bend_kw >> r.params.bend_angle >> twist_kw >> r.params.twist_angle) ||
                axes_kw != "axes" || scale_kw != "scale" || bend_kw != "bend" ||
                twist_kw != "twist")
                fail("malformed sample record '" + line + "'");
            r.spec = EllipsoidSpec(a, b, c);
            r.mask_path = resolve(r.mask_path);
            r.srep_path = resolve(r.srep_path);
            m.samples.push_back(std::move(r));
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (m.samples.size() != count)
        throw parse_error(path + ": count " + std::to_string(count) + " does not match " +
                          std::to_string(m.samples.size()) + " sample records");
    for (std::size_t i = 1; i < m.samples.size(); ++i)
        if (m.samples[i].id <= m.samples[i - 1].id)
            throw parse_error(path + ": sample ids must be unique and ascending");
    return m;
}

DeformationParams draw_deformation(std::uint64_t dataset_seed, int sample_id) {
    Rng rng(sample_seed(dataset_seed, "dataset", static_cast<std::uint64_t>(sample_id)));
    DeformationParams p;
    for (int axis = 0; axis < 3; ++axis) {
        double s = rng.gaussian(1.0, 0.15);
        while (!(s > 0.0)) {
            std::clog << "sample " << sample_id << ": resampling non-positive scale\n";
            s = rng.gaussian(1.0, 0.15);
        }
        p.scale[axis] = s;
    }
    double bend = rng.gaussian(kPi / 3.0, kPi / 8.0);
    while (std::abs(bend) >= kPi) {
        std::clog << "sample " << sample_id << ": resampling out-of-range bend angle\n";
        bend = rng.gaussian(kPi / 3.0, kPi / 8.0);
    }
    p.bend_angle = bend;
    p.twist_angle = rng.gaussian(kPi / 6.0, kPi / 8.0);
    return p;
}

DatasetManifest generate_dataset(const GenerateOptions& opts) {
    if (opts.count < 1) throw usage_error("generate_dataset: count must be >= 1");
    if (opts.rings < 1 || opts.angular_samples < 3)
        throw usage_error("generate_dataset: illegal grid dims");
    if (opts.out_dir.empty()) throw usage_error("generate_dataset: output directory required");

    std::error_code ec;
    fs::create_directories(fs::path(opts.out_dir) / "masks", ec);
    fs::create_directories(fs::path(opts.out_dir) / "sreps", ec);
    if (ec) throw io_error("cannot create output directories under " + opts.out_dir);

    // Split assignment: shuffle ids, first 80% (rounded) train.
    std::vector<int> order(opts.count);
    for (int i = 0; i < opts.count; ++i) order[i] = i;
    Rng split_rng(substream_seed(opts.seed, "split"));
    split_rng.shuffle(order);
    const int n_train = std::clamp<int>(
        static_cast<int>(std::llround(opts.train_fraction * opts.count)), 1, opts.count);
    std::vector<std::string> split(opts.count);
    for (int i = 0; i < opts.count; ++i) split[order[i]] = i < n_train ? "train" : "test";

    DatasetManifest manifest;
    manifest.seed = opts.seed;
    manifest.rings = opts.rings;
    manifest.angular_samples = opts.angular_samples;
    manifest.dims = opts.dims;
    manifest.samples.resize(opts.count);

    const Srep base_srep = analytic_srep(opts.base, opts.rings, opts.angular_samples);

    std::atomic<int> next_id{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        while (true) {
            const int id = next_id.fetch_add(1);
            if (id >= opts.count || failed.load()) break;
            try {
                const DeformationParams params = draw_deformation(opts.seed, id);
                const double half_length = params.scale.x * opts.base.a;
                const ImageGeometry geom =
                    auto_geometry(opts.base, params, half_length, opts.dims, opts.occupancy);
                VolumetricMask mask = voxelize(opts.base, params, half_length, geom);
                if (mask.foreground_count() == 0)
                    throw numeric_error("sample " + std::to_string(id) + ": empty mask");
                const Srep gt = deform_srep(base_srep, params, half_length);

                SampleRecord& rec = manifest.samples[id];
                rec.id = id;
                rec.split = split[id];
                rec.spec = opts.base;
                rec.params = params;
                rec.mask_path = "masks/" + sample_name(id) + ".nrrd";
                rec.srep_path = "sreps/" + sample_name(id) + ".srep";
                save_nrrd(mask, (fs::path(opts.out_dir) / rec.mask_path).string());
                save_srep(gt, (fs::path(opts.out_dir) / rec.srep_path).string());
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failed.store(true);
                failure = e.what();
            }
        }
    };

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) throw io_error("generate_dataset: " + failure);

    manifest.save((fs::path(opts.out_dir) / "manifest.txt").string());
    // The file stores relative paths; hand the caller resolved ones.
    for (auto& rec : manifest.samples) {
        rec.mask_path = (fs::path(opts.out_dir) / rec.mask_path).string();
        rec.srep_path = (fs::path(opts.out_dir) / rec.srep_path).string();
    }
    return manifest;
}

} // namespace srep::synth
