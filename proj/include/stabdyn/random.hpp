#pragma once

// Deterministic seeded generators for tests and verification sweeps.  The
// generator is SplitMix64 with an explicit uint64 -> double mapping, so a
// fixed seed produces identical values on every platform and toolchain.

#include <cstdint>

#include "stabdyn/dynamics.hpp"
#include "stabdyn/laurent.hpp"
#include "stabdyn/semisimple.hpp"

namespace stabdyn {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// Masses uniform in [mass_lo, mass_hi] (must be positive), phases uniform in
// [phase_lo, phase_hi].  Throws std::invalid_argument on an empty or
// non-positive mass range.
StabilityCondition random_stability(std::uint64_t seed, int simple_count,
                                    double mass_lo, double mass_hi,
                                    double phase_lo, double phase_hi);

// Uniform random permutation (Fisher-Yates) on a size drawn from
// [1, max_size], with exponents uniform in [-max_shift, max_shift].
AutoEquivalence random_auto_equivalence(std::uint64_t seed, int max_size,
                                        std::int64_t max_shift);

// Same distribution with the size pinned (for paired instances).
AutoEquivalence random_auto_equivalence_of_size(std::uint64_t seed, int size,
                                                std::int64_t max_shift);

// Random non-nilpotent Laurent matrix with degree_range exactly
// (degree_lo, degree_hi) (or a degenerate sub-range when they collide on the
// sampled pair).  One diagonal anchor entry carries z^{dmin} + z^{dmax} with
// coefficient 1 and every other generated term has degree strictly between
// dmin and dmax, so the extremal-degree coefficient matrices each have
// spectral radius exactly 1.  Consequently the degree-range slopes (-D, -d)
// returned by asymptotic_slopes are the true asymptotic slopes of the growth
// curve of every matrix this generator emits.
LaurentMatrix random_laurent_matrix(std::uint64_t seed, int max_size,
                                    std::int64_t degree_lo,
                                    std::int64_t degree_hi);

// Random nonzero direct sum of shifted simples: up to max_summands terms,
// shifts in [-max_shift, max_shift], multiplicities in [1, max_count].
GradedObject random_graded_object(std::uint64_t seed, int simple_count,
                                  std::int64_t max_shift, int max_summands,
                                  int max_count);

}  // namespace stabdyn
