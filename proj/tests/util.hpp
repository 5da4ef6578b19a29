#pragma once

#include <cstdint>
#include <vector>

#include <hcw/graded.hpp>

// Deterministic RNG for the property-style tests; identical streams on every
// platform and run.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    long int_in(long lo, long hi) { return lo + (long)below((std::uint64_t)(hi - lo + 1)); }
    double real() { return (next() >> 11) * 0x1.0p-53; }
    double real_in(double lo, double hi) { return lo + (hi - lo) * real(); }
};

inline hcw::Element random_element(Rng& rng, const hcw::AlgebraPtr& alg, int nterms,
                                   int max_factors = 3) {
    hcw::Element e(alg);
    for (int t = 0; t < nterms; ++t) {
        hcw::Element mono = hcw::Element::one(alg);
        int nf = (int)rng.int_in(0, max_factors);
        for (int f = 0; f < nf; ++f) {
            hcw::GenId g = (hcw::GenId)rng.below(alg->size());
            mono = mono * hcw::Element::generator(alg, g);
        }
        e += mono * hcw::rat(rng.int_in(-4, 4), rng.int_in(1, 3));
    }
    return e;
}
