#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace graspsyn {

// Deterministic random stream with explicit, implementation-pinned
// distributions so that a fixed seed yields bit-identical output across
// standard library versions.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53 bits of resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    // Standard normal truncated to [-bound, bound] by rejection.
    double truncated_gaussian(double bound) {
        for (;;) {
            const double z = gaussian();
            if (z >= -bound && z <= bound) return z;
        }
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Stable per-key seed derivation (FNV-1a mix, splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::string_view> parts,
                          std::uint64_t index = 0);

}  // namespace graspsyn
