#pragma once

#include <span>
#include <vector>

#include "berkline/polynomial.hpp"
#include "berkline/puiseux.hpp"

namespace berkline {

// A prime cone of K[z]: an evaluation point u, a one-sided point u+/-, one
// of the two infinite ends, or a free Dedekind cut approximated by a finite
// strictly monotone ladder with a staleness budget.
struct SpectrumLinePoint {
    enum class Kind { point, right_of, left_of, plus_inf, minus_inf, free_cut };

    Kind kind = Kind::point;
    PuiseuxNumber u;                    // point / right_of / left_of
    std::vector<PuiseuxNumber> ladder;  // free_cut: strictly monotone
    int budget = 2;                     // free_cut: required stable suffix

    static SpectrumLinePoint point(PuiseuxNumber u);
    static SpectrumLinePoint right_of(PuiseuxNumber u);
    static SpectrumLinePoint left_of(PuiseuxNumber u);
    static SpectrumLinePoint plus_inf();
    static SpectrumLinePoint minus_inf();
    static SpectrumLinePoint free_cut(std::vector<PuiseuxNumber> ladder, int budget = 2);
};

bool operator==(const SpectrumLinePoint& a, const SpectrumLinePoint& b);

// Sign of f in the ordering of the prime cone:
//   point u:      sign f(u)
//   u+:           sign of the lowest nonvanishing derivative at u
//   u-:           that sign times (-1)^j, j the multiplicity of u in f
//   +inf:         sign of the leading coefficient
//   -inf:         leading sign times (-1)^deg
//   free cut:     the eventual sign along the ladder (stable suffix of
//                 length >= budget required, else ladder_exhausted).
int sign_at(const SpectrumLinePoint& p, const PolyK& f);

// Membership in the basic open U(f_1, ..., f_p): every sign strictly +1.
bool in_basic_open(const SpectrumLinePoint& p, std::span<const PolyK> fs);

struct LineClassification {
    bool closed = false;
    bool archimedean = false;
    std::vector<SpectrumLinePoint> closure; // of {p} in the spectral topology
};

// Points and free cuts are the closed Archimedean points; one-sided points
// have the evaluation point in their closure; the two ends are closed but
// the variable escapes every bound in K there.
LineClassification classify(const SpectrumLinePoint& p);

} // namespace berkline
