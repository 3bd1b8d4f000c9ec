#pragma once

#include <vector>

#include "berkline/puiseux.hpp"

namespace berkline {

// Dense univariate polynomial over a coefficient ring R (PuiseuxNumber or
// ComplexPuiseux).  Coefficients ascend: coeff(i) multiplies z^i.  Only
// exactly-zero leading coefficients are trimmed; an inexact coefficient that
// merely looks zero stays and surfaces as precision_exhausted where a sign
// would be needed.
template <class R>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(R c) { return Polynomial({std::move(c)}); }
    // z - root
    static Polynomial linear_root(const R& root) { return Polynomial({-root, R(one())}); }

    const std::vector<R>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const R& coeff(std::size_t i) const { return c_[i]; }
    const R& leading() const { return c_.back(); }

    R operator()(const R& v) const {
        if (c_.empty()) return R();
        R acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * v + c_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<R> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = c_[i] * natural(i);
        return Polynomial(std::move(d));
    }

    // Coefficients of f(z + v): exact Taylor shift by repeated synthetic
    // division, no floating point.
    std::vector<R> shifted_coeffs(const R& v) const {
        std::vector<R> a = c_;
        const std::size_t n = a.size();
        for (std::size_t k = 0; k + 1 < n; ++k)
            for (std::size_t j = n - 1; j-- > k;)
                a[j] = a[j] + v * a[j + 1];
        return a;
    }

    // Quotient and remainder of division by (z - u).
    std::pair<Polynomial, R> deflate(const R& u) const {
        if (c_.empty()) return {Polynomial(), R()};
        std::vector<R> q(c_.size() - 1);
        R carry = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            if (i < q.size()) q[i] = carry;
            carry = c_[i] + u * carry;
        }
        return {Polynomial(std::move(q)), carry};
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<R> s(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i < a.c_.size()) s[i] = s[i] + a.c_[i];
            if (i < b.c_.size()) s[i] = s[i] + b.c_[i];
        }
        return Polynomial(std::move(s));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return Polynomial();
        std::vector<R> p(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                p[i + j] = p[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(p));
    }

private:
    static R one() {
        if constexpr (std::is_same_v<R, PuiseuxNumber>)
            return PuiseuxNumber::constant(Rational(1));
        else
            return R(PuiseuxNumber::constant(Rational(1)));
    }
    static R natural(std::size_t n) {
        if constexpr (std::is_same_v<R, PuiseuxNumber>)
            return PuiseuxNumber::constant(Rational(static_cast<long>(n)));
        else
            return R(PuiseuxNumber::constant(Rational(static_cast<long>(n))));
    }

    void trim() {
        while (!c_.empty() && c_.back().is_exact_zero()) c_.pop_back();
    }

    std::vector<R> c_;
};

using PolyK = Polynomial<PuiseuxNumber>;
using PolyF = Polynomial<ComplexPuiseux>;

inline PolyF complexify(const PolyK& f) {
    std::vector<ComplexPuiseux> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.emplace_back(a);
    return PolyF(std::move(c));
}

// Multiplicity of u as a root of f (0 when f(u) != 0); exact repeated
// synthetic division.  Throws precision_exhausted if a remainder's vanishing
// cannot be decided.
template <class R>
int multiplicity_at(Polynomial<R> f, const R& u) {
    int j = 0;
    while (!f.is_zero()) {
        auto [q, rem] = f.deflate(u);
        bool is_zero;
        if constexpr (std::is_same_v<R, PuiseuxNumber>) {
            is_zero = compare(rem, PuiseuxNumber()) == Cmp::EQ;
        } else {
            is_zero = rem == R();
        }
        if (!is_zero) break;
        ++j;
        f = std::move(q);
    }
    return j;
}

} // namespace berkline
