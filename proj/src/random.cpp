#include "stabdyn/random.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace stabdyn {

StabilityCondition random_stability(std::uint64_t seed, int simple_count,
                                    double mass_lo, double mass_hi,
                                    double phase_lo, double phase_hi) {
    if (simple_count <= 0) {
        throw std::invalid_argument("random_stability: need simple_count > 0");
    }
    if (!(mass_lo > 0.0) || !(mass_lo <= mass_hi) || !(phase_lo <= phase_hi)) {
        throw std::invalid_argument(
            "random_stability: need 0 < mass_lo <= mass_hi and "
            "phase_lo <= phase_hi");
    }
    Rng rng(seed);
    StabilityCondition sigma;
    sigma.masses.reserve(simple_count);
    sigma.phases.reserve(simple_count);
    for (int i = 0; i < simple_count; ++i) {
        sigma.masses.push_back(rng.uniform(mass_lo, mass_hi));
    }
    for (int i = 0; i < simple_count; ++i) {
        sigma.phases.push_back(rng.uniform(phase_lo, phase_hi));
    }
    return sigma;
}

namespace {

AutoEquivalence draw_auto_equivalence(Rng& rng, int size,
                                      std::int64_t max_shift) {
    std::vector<int> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = size - 1; i > 0; --i) {
        std::swap(perm[i], perm[rng.uniform_int(0, i)]);
    }
    std::vector<std::int64_t> shifts(size);
    for (auto& s : shifts) {
        s = rng.uniform_int(-max_shift, max_shift);
    }
    return AutoEquivalence(std::move(perm), std::move(shifts));
}

}  // namespace

AutoEquivalence random_auto_equivalence(std::uint64_t seed, int max_size,
                                        std::int64_t max_shift) {
    if (max_size < 1 || max_shift < 0) {
        throw std::invalid_argument(
            "random_auto_equivalence: need max_size >= 1 and max_shift >= 0");
    }
    Rng rng(seed);
    const int size = static_cast<int>(rng.uniform_int(1, max_size));
    return draw_auto_equivalence(rng, size, max_shift);
}

AutoEquivalence random_auto_equivalence_of_size(std::uint64_t seed, int size,
                                                std::int64_t max_shift) {
    if (size < 1 || max_shift < 0) {
        throw std::invalid_argument(
            "random_auto_equivalence_of_size: need size >= 1 and max_shift "
            ">= 0");
    }
    Rng rng(seed);
    return draw_auto_equivalence(rng, size, max_shift);
}

LaurentMatrix random_laurent_matrix(std::uint64_t seed, int max_size,
                                    std::int64_t degree_lo,
                                    std::int64_t degree_hi) {
    if (max_size < 1 || degree_lo > degree_hi) {
        throw std::invalid_argument(
            "random_laurent_matrix: need max_size >= 1 and a nonempty degree "
            "range");
    }
    Rng rng(seed);
    const int size = static_cast<int>(rng.uniform_int(1, max_size));
    std::int64_t dmin = rng.uniform_int(degree_lo, degree_hi);
    std::int64_t dmax = rng.uniform_int(degree_lo, degree_hi);
    if (dmin > dmax) {
        std::swap(dmin, dmax);
    }
    LaurentMatrix m(size);
    const int anchor = static_cast<int>(rng.uniform_int(0, size - 1));
    m.at(anchor, anchor).add_term(dmin, 1);
    if (dmax != dmin) {
        m.at(anchor, anchor).add_term(dmax, 1);
    }
    // Interior terms only: the anchor keeps both degree extremes exclusive,
    // which pins the asymptotics (see header).
    if (dmax - dmin >= 2) {
        for (int i = 0; i < size; ++i) {
            for (int j = 0; j < size; ++j) {
                const std::int64_t terms = rng.uniform_int(0, 2);
                for (std::int64_t k = 0; k < terms; ++k) {
                    m.at(i, j).add_term(rng.uniform_int(dmin + 1, dmax - 1),
                                        rng.uniform_int(1, 3));
                }
            }
        }
    }
    return m;
}

GradedObject random_graded_object(std::uint64_t seed, int simple_count,
                                  std::int64_t max_shift, int max_summands,
                                  int max_count) {
    if (simple_count < 1 || max_shift < 0 || max_summands < 1 ||
        max_count < 1) {
        throw std::invalid_argument("random_graded_object: bad parameters");
    }
    Rng rng(seed);
    GradedObject e(simple_count);
    const std::int64_t summands = rng.uniform_int(1, max_summands);
    for (std::int64_t s = 0; s < summands; ++s) {
        e.add_summand(static_cast<int>(rng.uniform_int(0, simple_count - 1)),
                      rng.uniform_int(-max_shift, max_shift),
                      BigInt(rng.uniform_int(1, max_count)));
    }
    return e;
}

}  // namespace stabdyn
