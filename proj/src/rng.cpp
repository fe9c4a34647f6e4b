#include "graspsyn/rng.hpp"

namespace graspsyn {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv1a(std::uint64_t hash, std::string_view bytes) {
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= kFnvPrime;
    }
    // Separator so {"ab","c"} and {"a","bc"} differ.
    hash ^= 0x1f;
    hash *= kFnvPrime;
    return hash;
}

std::uint64_t fnv1a(std::uint64_t hash, std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
        hash ^= (value >> (8 * i)) & 0xff;
        hash *= kFnvPrime;
    }
    return hash;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::string_view> parts,
                          std::uint64_t index) {
    std::uint64_t hash = fnv1a(kFnvOffset, base);
    for (std::string_view part : parts) hash = fnv1a(hash, part);
    hash = fnv1a(hash, index);
    return splitmix64(hash);
}

}  // namespace graspsyn
