#include "berkline/sampling.hpp"

#include <cmath>

namespace berkline {

long Sampler::uniform(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

double Sampler::uniform_real(double lo, double hi) {
    double unit = static_cast<double>(rng_() >> 11) * (1.0 / 9007199254740992.0);
    return lo + unit * (hi - lo);
}

Rational Sampler::rational(long max_abs_num, long max_den) {
    return berkline::rational(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
}

Rational Sampler::nonzero_rational(long max_abs_num, long max_den) {
    for (;;) {
        Rational q = rational(max_abs_num, max_den);
        if (q != 0) return q;
    }
}

Rational Sampler::exponent(long max_abs_num, long max_den) {
    return berkline::rational(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
}

PuiseuxNumber Sampler::puiseux(int max_terms) {
    int k = static_cast<int>(uniform(0, max_terms));
    std::vector<PuiseuxNumber::Term> terms;
    for (int i = 0; i < k; ++i) terms.push_back({exponent(), nonzero_rational()});
    return PuiseuxNumber::from_terms(std::move(terms));
}

PuiseuxNumber Sampler::nonzero_puiseux(int max_terms) {
    for (;;) {
        PuiseuxNumber v = puiseux(max_terms);
        if (!v.terms().empty()) return v;
    }
}

PuiseuxNumber Sampler::positive_puiseux(int max_terms) {
    PuiseuxNumber v = nonzero_puiseux(max_terms);
    return v.sign() > 0 ? v : -v;
}

ComplexPuiseux Sampler::complex_puiseux(int max_terms) {
    return {puiseux(max_terms), puiseux(max_terms)};
}

BerkPoint Sampler::disk() {
    return BerkPoint::disk(complex_puiseux(), exponent());
}

BerkPoint Sampler::real_disk() {
    Rational t = exponent();
    PuiseuxNumber re = puiseux();
    // im either vanishes or stays within the radius.
    PuiseuxNumber im;
    if (coin()) im = PuiseuxNumber::monomial(nonzero_rational(), t - Rational(uniform(0, 3)));
    return BerkPoint::disk({std::move(re), std::move(im)}, std::move(t));
}

BerkPoint Sampler::nonreal_disk() {
    Rational t = exponent();
    PuiseuxNumber re = puiseux();
    PuiseuxNumber im = PuiseuxNumber::monomial(nonzero_rational(),
                                               t + Rational(uniform(1, 4)));
    return BerkPoint::disk({std::move(re), std::move(im)}, std::move(t));
}

PolyK Sampler::poly_k(int max_degree) {
    int deg = static_cast<int>(uniform(0, max_degree));
    std::vector<PuiseuxNumber> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = puiseux(2);
    return PolyK(std::move(c));
}

PolyF Sampler::poly_f(int max_degree) {
    int deg = static_cast<int>(uniform(0, max_degree));
    std::vector<ComplexPuiseux> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = complex_puiseux(2);
    return PolyF(std::move(c));
}

MoebiusMap Sampler::moebius_k() {
    for (;;) {
        PuiseuxNumber a = puiseux(2), b = puiseux(2), c = puiseux(2), d = puiseux(2);
        PuiseuxNumber det = a * d - b * c;
        if (det.terms().empty()) continue;
        return MoebiusMap::from_real(std::move(a), std::move(b), std::move(c), std::move(d));
    }
}

MoebiusMap Sampler::moebius_sl_k() {
    // Product of elementary matrices: unit determinant stays exact.
    MoebiusMap g = MoebiusMap::identity();
    const PuiseuxNumber one = PuiseuxNumber::constant(Rational(1));
    int factors = static_cast<int>(uniform(2, 4));
    for (int i = 0; i < factors; ++i) {
        switch (uniform(0, 2)) {
            case 0:
                g = g * MoebiusMap::from_real(one, puiseux(2), PuiseuxNumber(), one);
                break;
            case 1:
                g = g * MoebiusMap::from_real(one, PuiseuxNumber(), puiseux(2), one);
                break;
            default: {
                PuiseuxNumber u = PuiseuxNumber::monomial(nonzero_rational(), exponent());
                g = g * MoebiusMap::from_real(u, PuiseuxNumber(), PuiseuxNumber(),
                                              u.inv());
                break;
            }
        }
    }
    return g;
}

Matrix Sampler::sl(int n) {
    for (;;) {
        Matrix g(n);
        for (double& v : g.a) v = uniform_real(-1.5, 1.5);
        double dt = det(g);
        if (std::fabs(dt) < 0.3) continue;
        double scale = std::pow(std::fabs(dt), -1.0 / n);
        for (double& v : g.a) v *= scale;
        if (dt < 0.0)
            for (int j = 0; j < n; ++j) g.at(0, j) = -g.at(0, j);
        return g;
    }
}

Matrix Sampler::spd(int n) {
    Matrix g = sl(n);
    Matrix a = g * transpose(g);
    // Symmetrize rounding noise.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double s = 0.5 * (a.at(i, j) + a.at(j, i));
            a.at(i, j) = s;
            a.at(j, i) = s;
        }
    return a;
}

Matrix Sampler::rotation(int n) {
    // Product of random Givens rotations.
    Matrix r = Matrix::eye(n);
    for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) {
            double theta = uniform_real(0.0, 6.283185307179586);
            Matrix g = Matrix::eye(n);
            g.at(p, p) = std::cos(theta);
            g.at(q, q) = std::cos(theta);
            g.at(p, q) = -std::sin(theta);
            g.at(q, p) = std::sin(theta);
            r = r * g;
        }
    return r;
}

} // namespace berkline
