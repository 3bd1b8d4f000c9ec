#pragma once

#include <random>

#include "berkline/berkovich.hpp"
#include "berkline/moebius.hpp"
#include "berkline/polynomial.hpp"
#include "berkline/slnr.hpp"

namespace berkline {

// Deterministic generators for property sweeps.  All draws go through the
// engine with explicit arithmetic (no std distributions), so a fixed seed
// reproduces byte-identical streams.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t raw() { return rng_(); }
    long uniform(long lo, long hi); // inclusive
    bool coin() { return (rng_() & 1) != 0; }
    double uniform_real(double lo, double hi);

    Rational rational(long max_abs_num = 6, long max_den = 4);
    Rational nonzero_rational(long max_abs_num = 6, long max_den = 4);
    Rational exponent(long max_abs_num = 5, long max_den = 3);

    PuiseuxNumber puiseux(int max_terms = 3);
    PuiseuxNumber nonzero_puiseux(int max_terms = 3);
    PuiseuxNumber positive_puiseux(int max_terms = 3);
    ComplexPuiseux complex_puiseux(int max_terms = 2);

    BerkPoint disk();
    BerkPoint real_disk();     // satisfies the disk criterion
    BerkPoint nonreal_disk();  // violates it

    PolyK poly_k(int max_degree);
    PolyF poly_f(int max_degree);

    MoebiusMap moebius_k();    // invertible, entries over K
    MoebiusMap moebius_sl_k(); // determinant exactly 1 over K

    Matrix spd(int n);         // SPD with det 1
    Matrix sl(int n);          // det 1, moderate entries
    Matrix rotation(int n);    // special orthogonal

private:
    std::mt19937_64 rng_;
};

} // namespace berkline
