#include "srep/mask.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "srep/errors.hpp"

namespace srep::synth {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::size_t VolumetricMask::foreground_count() const {
    std::size_t n = 0;
    for (std::uint8_t v : voxels) n += v != 0;
    return n;
}

void VolumetricMask::validate() const {
    for (int axis = 0; axis < 3; ++axis)
        if (dims[axis] < 8)
            throw validation_error("mask dims must be >= 8 per axis, axis " +
                                   std::to_string(axis) + " has " + std::to_string(dims[axis]));
    if (!(spacing.x > 0.0 && spacing.y > 0.0 && spacing.z > 0.0))
        throw validation_error("mask spacing must be positive");
    if (voxels.size() != size())
        throw validation_error("mask voxel buffer size mismatch");
}

void deformed_bounds(const EllipsoidSpec& spec, const DeformationParams& params,
                     double half_length, Vec3& lo, Vec3& hi) {
    constexpr int kTheta = 96, kPhi = 49;
    lo = {std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
          std::numeric_limits<double>::max()};
    hi = {-lo.x, -lo.y, -lo.z};
    for (int it = 0; it < kTheta; ++it) {
        const double theta = 2.0 * kPi * it / kTheta;
        for (int ip = 0; ip < kPhi; ++ip) {
            const double phi = -kPi / 2.0 + kPi * ip / (kPhi - 1);
            const Vec3 q = apply_deformation(boundary_point(spec, theta, phi), params, half_length);
            for (int axis = 0; axis < 3; ++axis) {
                lo[axis] = std::min(lo[axis], q[axis]);
                hi[axis] = std::max(hi[axis], q[axis]);
            }
        }
    }
}

ImageGeometry auto_geometry(const EllipsoidSpec& spec, const DeformationParams& params,
                            double half_length, const std::array<int, 3>& dims,
                            double occupancy) {
    Vec3 lo, hi;
    deformed_bounds(spec, params, half_length, lo, hi);
    double spacing = 0.0;
    for (int axis = 0; axis < 3; ++axis)
        spacing = std::max(spacing, (hi[axis] - lo[axis]) / (occupancy * dims[axis]));
    ImageGeometry g;
    g.dims = dims;
    g.spacing = {spacing, spacing, spacing};
    for (int axis = 0; axis < 3; ++axis) {
        const double center = 0.5 * (lo[axis] + hi[axis]);
        g.origin[axis] = center - spacing * (dims[axis] - 1) * 0.5;
    }
    return g;
}

VolumetricMask voxelize(const EllipsoidSpec& spec, const DeformationParams& params,
                        double half_length, const ImageGeometry& geom) {
    params.validate();
    Vec3 lo, hi;
    deformed_bounds(spec, params, half_length, lo, hi);
    static const char* axis_names[3] = {"x", "y", "z"};
    for (int axis = 0; axis < 3; ++axis) {
        const double grid_lo = geom.origin[axis] + 2.0 * geom.spacing[axis];
        const double grid_hi =
            geom.origin[axis] + geom.spacing[axis] * (geom.dims[axis] - 3);
        if (lo[axis] < grid_lo || hi[axis] > grid_hi)
            throw validation_error(std::string("voxelize: shape exceeds image extent on the ") +
                                   axis_names[axis] + " axis");
    }

    VolumetricMask m;
    m.dims = geom.dims;
    m.spacing = geom.spacing;
    m.origin = geom.origin;
    m.voxels.assign(m.size(), 0);
    m.validate();
    for (int k = 0; k < m.dims[2]; ++k)
        for (int j = 0; j < m.dims[1]; ++j)
            for (int i = 0; i < m.dims[0]; ++i) {
                const Vec3 q = inverse_deformation(m.voxel_center(i, j, k), params, half_length);
                if (implicit_value(spec, q) <= 1.0) m.voxels[m.index(i, j, k)] = 1;
            }
    return m;
}

void save_nrrd(const VolumetricMask& m, const std::string& path) {
    m.validate();
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot open for writing: " + path);
    char buf[256];
    os << "NRRD0004\n";
    os << "type: uchar\n";
    os << "dimension: 3\n";
    os << "space: left-posterior-superior\n";
    os << "sizes: " << m.dims[0] << " " << m.dims[1] << " " << m.dims[2] << "\n";
    std::snprintf(buf, sizeof(buf), "space directions: (%.17g,0,0) (0,%.17g,0) (0,0,%.17g)\n",
                  m.spacing.x, m.spacing.y, m.spacing.z);
    os << buf;
    os << "kinds: domain domain domain\n";
    os << "endian: little\n";
    os << "encoding: raw\n";
    std::snprintf(buf, sizeof(buf), "space origin: (%.17g,%.17g,%.17g)\n", m.origin.x, m.origin.y,
                  m.origin.z);
    os << buf;
    os << "\n";
    os.write(reinterpret_cast<const char*>(m.voxels.data()),
             static_cast<std::streamsize>(m.voxels.size()));
    if (!os) throw io_error("write failed: " + path);
}

namespace {

// "(a,b,c)" -> Vec3; diag picks the axis'th component of a direction vector.
Vec3 parse_triple(const std::string& s, const std::string& path) {
    Vec3 v;
    if (std::sscanf(s.c_str(), " (%lf,%lf,%lf)", &v.x, &v.y, &v.z) != 3)
        throw parse_error(path + ": malformed vector '" + s + "'");
    return v;
}

} // namespace

VolumetricMask load_nrrd(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw io_error("cannot open: " + path);
    std::string line;
    if (!std::getline(is, line) || line.rfind("NRRD", 0) != 0)
        throw parse_error(path + ": missing NRRD magic");

    VolumetricMask m;
    bool have_sizes = false, type_ok = false, encoding_ok = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) break; // header/data separator
        if (line[0] == '#') continue;
        const auto colon = line.find(": ");
        if (colon == std::string::npos) throw parse_error(path + ": malformed field '" + line + "'");
        const std::string key = line.substr(0, colon);
        const std::string value = line.substr(colon + 2);
        if (key == "type") {
            if (value != "uchar" && value != "unsigned char")
                throw parse_error(path + ": unsupported type '" + value + "'");
            type_ok = true;
        } else if (key == "dimension") {
            if (value != "3") throw parse_error(path + ": unsupported dimension '" + value + "'");
        } else if (key == "sizes") {
            std::istringstream ss(value);
            if (!(ss >> m.dims[0] >> m.dims[1] >> m.dims[2]))
                throw parse_error(path + ": malformed sizes '" + value + "'");
            have_sizes = true;
        } else if (key == "space directions") {
            std::istringstream ss(value);
            std::string t0, t1, t2;
            if (!(ss >> t0 >> t1 >> t2))
                throw parse_error(path + ": malformed space directions '" + value + "'");
            m.spacing.x = parse_triple(t0, path).x;
            m.spacing.y = parse_triple(t1, path).y;
            m.spacing.z = parse_triple(t2, path).z;
        } else if (key == "space origin") {
            m.origin = parse_triple(value, path);
        } else if (key == "encoding") {
            if (value != "raw") throw parse_error(path + ": unsupported encoding '" + value + "'");
            encoding_ok = true;
        }
        // space, kinds, endian: informational for uchar
    }
    if (!type_ok || !encoding_ok || !have_sizes)
        throw parse_error(path + ": header is missing type/encoding/sizes");
    m.voxels.resize(m.size());
    is.read(reinterpret_cast<char*>(m.voxels.data()), static_cast<std::streamsize>(m.size()));
    if (is.gcount() != static_cast<std::streamsize>(m.size()))
        throw parse_error(path + ": truncated voxel data");
    m.validate();
    return m;
}

namespace {

// 1D squared-distance lower envelope (Felzenszwalb & Huttenlocher).
void edt_1d(const std::vector<double>& f, std::vector<double>& d, double step) {
    const int n = static_cast<int>(f.size());
    static thread_local std::vector<int> v;
    static thread_local std::vector<double> zbuf;
    v.assign(n, 0);
    zbuf.assign(n + 1, 0.0);
    const double inf = std::numeric_limits<double>::infinity();
    int k = 0;
    v[0] = 0;
    zbuf[0] = -inf;
    zbuf[1] = inf;
    auto sq = [](double t) { return t * t; };
    for (int q = 1; q < n; ++q) {
        double s;
        while (true) {
            const int p = v[k];
            // intersection abscissa of the parabolas rooted at p and q
            s = (f[q] + sq(q * step) - f[p] - sq(p * step)) / (2.0 * step * (q - p));
            if (s > zbuf[k]) break;
            --k;
        }
        ++k;
        v[k] = q;
        zbuf[k] = s;
        zbuf[k + 1] = inf;
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        const double x = q * step;
        while (zbuf[k + 1] < x) ++k;
        d[q] = sq(x - v[k] * step) + f[v[k]];
    }
}

} // namespace

std::vector<double> distance_transform(const VolumetricMask& m) {
    m.validate();
    const int nx = m.dims[0], ny = m.dims[1], nz = m.dims[2];
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) dist[i] = m.voxels[i] ? inf : 0.0;

    std::vector<double> line, out;
    auto pass = [&](int n, double step, auto get, auto set) {
        line.resize(n);
        out.resize(n);
        for (int i = 0; i < n; ++i) line[i] = get(i);
        edt_1d(line, out, step);
        for (int i = 0; i < n; ++i) set(i, out[i]);
    };

    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            pass(nx, m.spacing.x, [&](int i) { return dist[m.index(i, j, k)]; },
                 [&](int i, double v) { dist[m.index(i, j, k)] = v; });
    for (int k = 0; k < nz; ++k)
        for (int i = 0; i < nx; ++i)
            pass(ny, m.spacing.y, [&](int j) { return dist[m.index(i, j, k)]; },
                 [&](int j, double v) { dist[m.index(i, j, k)] = v; });
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            pass(nz, m.spacing.z, [&](int k) { return dist[m.index(i, j, k)]; },
                 [&](int k, double v) { dist[m.index(i, j, k)] = v; });

    for (double& v : dist) v = std::sqrt(v);
    return dist;
}

double sample_trilinear(const VolumetricMask& m, const std::vector<double>& field, const Vec3& p) {
    if (field.size() != m.size())
        throw validation_error("sample_trilinear: field size does not match mask");
    double fc[3];
    int lo[3];
    for (int axis = 0; axis < 3; ++axis) {
        double t = (p[axis] - m.origin[axis]) / m.spacing[axis];
        t = std::clamp(t, 0.0, static_cast<double>(m.dims[axis] - 1));
        lo[axis] = std::min(static_cast<int>(t), m.dims[axis] - 2);
        fc[axis] = t - lo[axis];
    }
    double acc = 0.0;
    for (int dz = 0; dz < 2; ++dz)
        for (int dy = 0; dy < 2; ++dy)
            for (int dx = 0; dx < 2; ++dx) {
                const double w = (dx ? fc[0] : 1.0 - fc[0]) * (dy ? fc[1] : 1.0 - fc[1]) *
                                 (dz ? fc[2] : 1.0 - fc[2]);
                acc += w * field[m.index(lo[0] + dx, lo[1] + dy, lo[2] + dz)];
            }
    return acc;
}

} // namespace srep::synth
