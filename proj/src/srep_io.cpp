#include "srep/srep_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "srep/errors.hpp"

namespace srep {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_block(std::ostream& os, const char* name, const std::vector<Vec3>& pts) {
    os << name << "\n";
    for (const Vec3& p : pts) os << fmt(p.x) << " " << fmt(p.y) << " " << fmt(p.z) << "\n";
}

struct LineReader {
    std::istream& is;
    std::string path;
    int line_no = 0;

    bool next(std::string& line) {
        while (std::getline(is, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error(path + ":" + std::to_string(line_no) + ": " + what);
    }
};

std::vector<Vec3> read_block(LineReader& r, const char* name, std::size_t count) {
    std::string line;
    if (!r.next(line)) r.fail(std::string("expected '") + name + "' block");
    if (line != name) r.fail(std::string("expected '") + name + "', got '" + line + "'");
    std::vector<Vec3> pts(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (!r.next(line)) r.fail(std::string(name) + ": truncated after " + std::to_string(i));
        std::istringstream ss(line);
        if (!(ss >> pts[i].x >> pts[i].y >> pts[i].z))
            r.fail(std::string(name) + ": expected 3 numbers, got '" + line + "'");
        std::string extra;
        if (ss >> extra) r.fail(std::string(name) + ": trailing content '" + extra + "'");
    }
    return pts;
}

} // namespace

void save_srep(const Srep& s, const std::string& path) {
    s.validate();
    std::ofstream os(path);
    if (!os) throw io_error("cannot open for writing: " + path);
    os << "srep/1\n";
    os << "rings " << s.rings << "\n";
    os << "angular_samples " << s.angular_samples << "\n";
    write_block(os, "skeletal_points", s.skeletal_points);
    write_block(os, "up_spokes", s.up_spokes);
    write_block(os, "down_spokes", s.down_spokes);
    write_block(os, "crest_spokes", s.crest_spokes);
    os << "end\n";
    if (!os) throw io_error("write failed: " + path);
}

Srep load_srep(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open: " + path);
    LineReader r{is, path};
    std::string line;
    if (!r.next(line)) r.fail("empty file");
    if (line != "srep/1") r.fail("unsupported version header '" + line + "'");

    Srep s;
    auto read_int = [&](const char* key) {
        if (!r.next(line)) r.fail(std::string("expected '") + key + "'");
        std::istringstream ss(line);
        std::string k;
        int v = 0;
        if (!(ss >> k >> v) || k != key)
            r.fail(std::string("expected '") + key + " <int>', got '" + line + "'");
        return v;
    };
    s.rings = read_int("rings");
    s.angular_samples = read_int("angular_samples");
    if (s.rings < 1 || s.angular_samples < 3)
        r.fail("illegal grid dims (rings " + std::to_string(s.rings) + ", angular_samples " +
               std::to_string(s.angular_samples) + ")");

    const std::size_t ns = static_cast<std::size_t>(s.num_skeletal());
    s.skeletal_points = read_block(r, "skeletal_points", ns);
    s.up_spokes = read_block(r, "up_spokes", ns);
    s.down_spokes = read_block(r, "down_spokes", ns);
    s.crest_spokes = read_block(r, "crest_spokes", static_cast<std::size_t>(s.angular_samples));
    if (!r.next(line) || line != "end") r.fail("expected 'end'");
    s.validate();
    return s;
}

} // namespace srep
