#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace srep {

// All randomness flows from one root seed through named substreams so that
// commands reproduce byte-for-byte. std::mt19937_64 output is fully specified
// by the standard; the distributions here are hand-rolled because the
// std::*_distribution sequences are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; one draw per call keeps the stream position predictable.
    double gaussian() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

    // Uniform integer in [0, n). Modulo is fine here; determinism is what matters.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to mix seeds and stream names.
std::uint64_t mix_seed(std::uint64_t state);

// Derive the seed for a named substream ("dataset", "init", "augment", ...).
std::uint64_t substream_seed(std::uint64_t root, std::string_view name);

// Per-sample stream: order- and thread-count-independent generation.
std::uint64_t sample_seed(std::uint64_t root, std::string_view name, std::uint64_t id);

inline Rng substream(std::uint64_t root, std::string_view name) {
    return Rng(substream_seed(root, name));
}

} // namespace srep
