#pragma once

#include "berkline/berkovich.hpp"

namespace berkline {

// An element of PGL_2(F) given by an invertible 2x2 matrix over F; entries
// over K (zero imaginary parts) give the PGL_2(K) action preserving the
// real subtree.  Compared and applied projectively.
class MoebiusMap {
public:
    MoebiusMap(ComplexPuiseux a, ComplexPuiseux b, ComplexPuiseux c, ComplexPuiseux d);

    static MoebiusMap identity();
    static MoebiusMap from_real(PuiseuxNumber a, PuiseuxNumber b,
                                PuiseuxNumber c, PuiseuxNumber d);

    const ComplexPuiseux& a() const { return a_; }
    const ComplexPuiseux& b() const { return b_; }
    const ComplexPuiseux& c() const { return c_; }
    const ComplexPuiseux& d() const { return d_; }
    const ComplexPuiseux& det() const { return det_; }

    bool entries_real() const;

    MoebiusMap inverse() const; // adjugate; same projective class scaling
    friend MoebiusMap operator*(const MoebiusMap& g, const MoebiusMap& h);

private:
    ComplexPuiseux a_, b_, c_, d_;
    ComplexPuiseux det_;
};

// (a v + b) / (c v + d) on type-1 points; the pole maps to infinity and
// infinity maps to a/c.  `precision` bounds the truncation of the division.
BerkPoint apply_point(const MoebiusMap& g, const BerkPoint& type1_point,
                      const Rational& precision = Rational(kDefaultKnownBelow));

// Image of a disk point.  Pole outside D(v, e^t): D(g(v), e^{t'}) with
// t' = t + log|det| - 2 log|c v + d|.  Pole inside: the image point is the
// disk D(g(inf), e^{t'}) with t' = log|det| - 2 log|c| - t, whose
// complement-shaped set image contains infinity (chart-W description);
// as a seminorm point it is again a chart-Z disk.
BerkPoint apply_disk(const MoebiusMap& g, const BerkPoint& disk_point);

// Dispatch on the point kind.
BerkPoint apply(const MoebiusMap& g, const BerkPoint& p);

// Translation length on the tree: after normalizing det to 1 (requires a
// positive real determinant), 2 max(0, log|tr|); zero for elliptic and
// parabolic classes (|tr| <= 1).
Rational translation_length(const MoebiusMap& g,
                            const Rational& precision = Rational(kDefaultKnownBelow));

} // namespace berkline
