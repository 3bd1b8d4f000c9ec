#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "berkline/rational.hpp"

namespace berkline {

// Absolute precision (exponent) used when an operation produces an infinite
// expansion from exact inputs: omitted terms sit strictly below x^kDefaultKnownBelow.
inline const long kDefaultKnownBelow = -40;

enum class Cmp { LT, EQ, GT };

// A truncated real Puiseux series sum c_k x^{e_k} with exact rational
// coefficients and strictly decreasing rational exponents.  The variable x
// is infinitely large: the sign of a nonzero value is the sign of the
// leading (largest-exponent) coefficient, and x is a big element of the
// field.  A value is either exact (a finite sum, known_below absent) or
// carries a bound known_below: every omitted term has exponent strictly
// below it.
class PuiseuxNumber {
public:
    struct Term {
        Rational exponent;
        Rational coefficient; // nonzero
    };

    PuiseuxNumber() = default; // exact zero

    static PuiseuxNumber constant(const Rational& c);
    static PuiseuxNumber monomial(const Rational& coefficient, const Rational& exponent);
    static PuiseuxNumber variable(); // x
    // Normalizes: sorts descending, merges duplicate exponents, drops zero
    // coefficients and terms below known_below.
    static PuiseuxNumber from_terms(std::vector<Term> terms,
                                    std::optional<Rational> known_below = std::nullopt);

    const std::vector<Term>& terms() const { return terms_; }
    const std::optional<Rational>& known_below() const { return known_below_; }
    bool exact() const { return !known_below_.has_value(); }
    bool is_exact_zero() const { return exact() && terms_.empty(); }
    bool is_monomial() const { return exact() && terms_.size() == 1; }

    // lcm of the exponent denominators of the stored terms (>= 1).
    long ramification() const;

    const Rational& leading_exponent() const;   // pre: !terms().empty()
    const Rational& leading_coefficient() const;

    // Sign of the value: +1/-1 from the leading stored term, 0 for exact
    // zero.  Throws precision_exhausted when no term is stored but the
    // value is not known to be zero.
    int sign() const;

    PuiseuxNumber operator-() const;
    friend PuiseuxNumber operator+(const PuiseuxNumber& a, const PuiseuxNumber& b);
    friend PuiseuxNumber operator-(const PuiseuxNumber& a, const PuiseuxNumber& b);
    friend PuiseuxNumber operator*(const PuiseuxNumber& a, const PuiseuxNumber& b);

    // Multiplicative inverse.  Exact only when *this is a monomial; for all
    // other inputs the result is truncated, at `precision` (absolute) when
    // *this is exact, at the tightest derivable bound otherwise.
    PuiseuxNumber inv(const Rational& precision = Rational(kDefaultKnownBelow)) const;

    PuiseuxNumber truncated(const Rational& known_below) const;

private:
    std::vector<Term> terms_;             // descending exponents
    std::optional<Rational> known_below_; // absent: exact
};

PuiseuxNumber operator/(const PuiseuxNumber& a, const PuiseuxNumber& b);

Cmp compare(const PuiseuxNumber& a, const PuiseuxNumber& b);
bool operator==(const PuiseuxNumber& a, const PuiseuxNumber& b);
bool operator<(const PuiseuxNumber& a, const PuiseuxNumber& b);
bool operator<=(const PuiseuxNumber& a, const PuiseuxNumber& b);
bool operator>(const PuiseuxNumber& a, const PuiseuxNumber& b);
bool operator>=(const PuiseuxNumber& a, const PuiseuxNumber& b);

// Square root of a positive element.  The leading coefficient must be a
// rational square (not_representable otherwise); ramification doubles only
// when the leading exponent's numerator is odd.
PuiseuxNumber sqrt_pos(const PuiseuxNumber& a,
                       const Rational& precision = Rational(kDefaultKnownBelow));

// The absolute value nu(h) = e^{log_b |h|} with big element b = x: zero for
// h = 0, otherwise e^(leading exponent).  Multiplicative, ultrametric and
// compatible with the order on nonnegative elements.
struct LogValue {
    bool zero = true;
    Rational exponent; // meaningful when !zero

    static LogValue make_zero() { return LogValue{}; }
    static LogValue finite(Rational e) { return LogValue{false, std::move(e)}; }
};

LogValue operator*(const LogValue& a, const LogValue& b);
bool operator==(const LogValue& a, const LogValue& b);
bool operator<(const LogValue& a, const LogValue& b);
bool operator<=(const LogValue& a, const LogValue& b);
LogValue max(const LogValue& a, const LogValue& b);
std::string to_string(const LogValue& v);

LogValue log_abs(const PuiseuxNumber& a);

// K(sqrt(-1)): the algebraic closure of the Puiseux field.
struct ComplexPuiseux {
    PuiseuxNumber re;
    PuiseuxNumber im;

    ComplexPuiseux() = default;
    ComplexPuiseux(PuiseuxNumber r) : re(std::move(r)) {}
    ComplexPuiseux(PuiseuxNumber r, PuiseuxNumber i) : re(std::move(r)), im(std::move(i)) {}

    bool is_exact_zero() const { return re.is_exact_zero() && im.is_exact_zero(); }
    ComplexPuiseux conj() const;
    ComplexPuiseux operator-() const;
    ComplexPuiseux inv(const Rational& precision = Rational(kDefaultKnownBelow)) const;
};

ComplexPuiseux operator+(const ComplexPuiseux& a, const ComplexPuiseux& b);
ComplexPuiseux operator-(const ComplexPuiseux& a, const ComplexPuiseux& b);
ComplexPuiseux operator*(const ComplexPuiseux& a, const ComplexPuiseux& b);
ComplexPuiseux operator/(const ComplexPuiseux& a, const ComplexPuiseux& b);
bool operator==(const ComplexPuiseux& a, const ComplexPuiseux& b);

// |k + h sqrt(-1)| = |sqrt(k^2 + h^2)|; since squares cannot cancel this is
// max(|k|, |h|) in exponent arithmetic.
LogValue log_abs(const ComplexPuiseux& a);

struct SpecializeResult {
    double value = 0.0;
    double truncation_bound = 0.0; // heuristic scale t^known_below / (1 - t^{-1/m})
    bool overflow = false;
};

// Floating evaluation at x = t (t > 1 so the big element is numerically big).
SpecializeResult specialize(const PuiseuxNumber& a, double t);

// Minimal natural k with sum v_i^2 < x^k; certifies membership in the k-th
// Archimedean ball of the exhaustion.
unsigned big_ball_index(std::span<const PuiseuxNumber> values);

// Literal grammar: signed sum of terms `c`, `c*x^(p/q)`, `x`, `x^(p/q)`
// with c an integer, `n/d`, or a decimal converted exactly.
PuiseuxNumber parse_puiseux(std::string_view text);
std::string format_puiseux(const PuiseuxNumber& a);

// The field automorphism x^e -> x^{m e}.  Composing log_abs with it
// realizes the absolute value generated by the big element x^{1/m}:
// log_{x^{1/m}}|h| = log_x|rescale_exponents(h, m)|.
PuiseuxNumber rescale_exponents(const PuiseuxNumber& a, long m);

} // namespace berkline
