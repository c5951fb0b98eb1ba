#include "srep/rng.hpp"

namespace srep {

std::uint64_t mix_seed(std::uint64_t state) {
    std::uint64_t z = state + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t substream_seed(std::uint64_t root, std::string_view name) {
    // FNV-1a over the name, then mixed with the root.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return mix_seed(root ^ h);
}

std::uint64_t sample_seed(std::uint64_t root, std::string_view name, std::uint64_t id) {
    return mix_seed(substream_seed(root, name) + 0x632be59bd9b4e019ULL * (id + 1));
}

} // namespace srep
