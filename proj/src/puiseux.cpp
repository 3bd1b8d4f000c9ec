#include "berkline/puiseux.hpp"

#include <algorithm>
#include <cmath>

namespace berkline {

namespace {

// Weaker of two truncation bounds (larger cut-off).
std::optional<Rational> weaker(const std::optional<Rational>& a,
                               const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
}

} // namespace

PuiseuxNumber PuiseuxNumber::constant(const Rational& c) {
    return monomial(c, Rational(0));
}

PuiseuxNumber PuiseuxNumber::monomial(const Rational& coefficient, const Rational& exponent) {
    PuiseuxNumber r;
    if (coefficient != 0) r.terms_.push_back({exponent, coefficient});
    return r;
}

PuiseuxNumber PuiseuxNumber::variable() {
    return monomial(Rational(1), Rational(1));
}

PuiseuxNumber PuiseuxNumber::from_terms(std::vector<Term> terms,
                                        std::optional<Rational> known_below) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
    PuiseuxNumber r;
    r.known_below_ = std::move(known_below);
    for (std::size_t i = 0; i < terms.size();) {
        Rational coeff = std::move(terms[i].coefficient);
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j].exponent == terms[i].exponent)
            coeff += terms[j++].coefficient;
        if (coeff != 0 && !(r.known_below_ && terms[i].exponent < *r.known_below_))
            r.terms_.push_back({std::move(terms[i].exponent), std::move(coeff)});
        i = j;
    }
    return r;
}

long PuiseuxNumber::ramification() const {
    long m = 1;
    for (const auto& t : terms_)
        m = lcm_int64(m, t.exponent.get_den().get_si());
    return m;
}

const Rational& PuiseuxNumber::leading_exponent() const {
    if (terms_.empty()) throw precision_exhausted("leading exponent of a term-free value");
    return terms_.front().exponent;
}

const Rational& PuiseuxNumber::leading_coefficient() const {
    if (terms_.empty()) throw precision_exhausted("leading coefficient of a term-free value");
    return terms_.front().coefficient;
}

int PuiseuxNumber::sign() const {
    if (!terms_.empty()) return sign_of(terms_.front().coefficient);
    if (exact()) return 0;
    throw precision_exhausted("sign undecidable: all known terms cancelled");
}

PuiseuxNumber PuiseuxNumber::operator-() const {
    PuiseuxNumber r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
}

PuiseuxNumber operator+(const PuiseuxNumber& a, const PuiseuxNumber& b) {
    std::vector<PuiseuxNumber::Term> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return PuiseuxNumber::from_terms(std::move(terms), weaker(a.known_below_, b.known_below_));
}

PuiseuxNumber operator-(const PuiseuxNumber& a, const PuiseuxNumber& b) {
    return a + (-b);
}

PuiseuxNumber operator*(const PuiseuxNumber& a, const PuiseuxNumber& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) return PuiseuxNumber();

    std::vector<PuiseuxNumber::Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            terms.push_back({ta.exponent + tb.exponent, ta.coefficient * tb.coefficient});

    // Omitted-tail bookkeeping: a = A + alpha, b = B + beta with
    // alpha < x^{kb_a}, beta < x^{kb_b}; cross products stay below
    // kb_a + upper(b) resp. kb_b + upper(a).
    auto upper = [](const PuiseuxNumber& v) -> const Rational& {
        return v.terms_.empty() ? *v.known_below_ : v.terms_.front().exponent;
    };
    std::optional<Rational> kb;
    if (a.known_below_) kb = *a.known_below_ + upper(b);
    if (b.known_below_) {
        Rational bound = *b.known_below_ + upper(a);
        kb = kb ? std::max(*kb, bound) : bound;
    }
    return PuiseuxNumber::from_terms(std::move(terms), kb);
}

PuiseuxNumber PuiseuxNumber::truncated(const Rational& known_below) const {
    std::optional<Rational> kb = known_below;
    if (known_below_ && *known_below_ > known_below) kb = *known_below_;
    return from_terms(terms_, kb);
}

namespace {

// Product truncated below `kb`; avoids building terms that get dropped.
PuiseuxNumber mul_trunc(const PuiseuxNumber& a, const PuiseuxNumber& b, const Rational& kb) {
    std::vector<PuiseuxNumber::Term> terms;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            Rational e = ta.exponent + tb.exponent;
            if (e < kb) continue;
            terms.push_back({std::move(e), ta.coefficient * tb.coefficient});
        }
    return PuiseuxNumber::from_terms(std::move(terms), kb);
}

// 1 / (1 + u) as a geometric series truncated below `kb`; u infinitesimal.
PuiseuxNumber inv_one_plus(const PuiseuxNumber& u, const Rational& kb) {
    PuiseuxNumber acc = PuiseuxNumber::constant(Rational(1)).truncated(kb);
    PuiseuxNumber power = acc;
    const PuiseuxNumber minus_u = -u;
    while (!power.terms().empty()) {
        power = mul_trunc(power, minus_u, kb);
        acc = acc + power;
    }
    return acc;
}

} // namespace

PuiseuxNumber PuiseuxNumber::inv(const Rational& precision) const {
    if (is_exact_zero()) throw division_by_zero();
    if (terms_.empty())
        throw precision_exhausted("inverse of a value with no known leading term");

    const Rational& e = terms_.front().exponent;
    const Rational& c = terms_.front().coefficient;
    if (is_monomial()) return monomial(1 / c, -e);

    // a = c x^e (1 + u); target absolute bound for the result.
    Rational kb_result = exact() ? precision : (*known_below_ - 2 * e);
    Rational kb_series = kb_result + e; // bound for the (1+u)^{-1} factor

    PuiseuxNumber scaled = *this * monomial(1 / c, -e); // 1 + u
    PuiseuxNumber u = scaled - constant(Rational(1));
    PuiseuxNumber series = inv_one_plus(u, kb_series);
    PuiseuxNumber r = mul_trunc(series, monomial(1 / c, -e), kb_result);
    return from_terms(r.terms(), kb_result);
}

PuiseuxNumber operator/(const PuiseuxNumber& a, const PuiseuxNumber& b) {
    return a * b.inv();
}

Cmp compare(const PuiseuxNumber& a, const PuiseuxNumber& b) {
    PuiseuxNumber d = a - b;
    if (!d.terms().empty())
        return sign_of(d.terms().front().coefficient) > 0 ? Cmp::GT : Cmp::LT;
    if (d.exact()) return Cmp::EQ;
    throw precision_exhausted("comparison undecidable at this precision");
}

bool operator==(const PuiseuxNumber& a, const PuiseuxNumber& b) {
    return compare(a, b) == Cmp::EQ;
}
bool operator<(const PuiseuxNumber& a, const PuiseuxNumber& b) {
    return compare(a, b) == Cmp::LT;
}
bool operator<=(const PuiseuxNumber& a, const PuiseuxNumber& b) {
    return compare(a, b) != Cmp::GT;
}
bool operator>(const PuiseuxNumber& a, const PuiseuxNumber& b) {
    return compare(a, b) == Cmp::GT;
}
bool operator>=(const PuiseuxNumber& a, const PuiseuxNumber& b) {
    return compare(a, b) != Cmp::LT;
}

PuiseuxNumber sqrt_pos(const PuiseuxNumber& a, const Rational& precision) {
    int s = a.sign();
    if (s < 0) throw negative_input("sqrt of a negative element");
    if (s == 0) return PuiseuxNumber();

    const Rational& e = a.leading_exponent();
    const Rational& c = a.leading_coefficient();
    auto root = exact_sqrt(c);
    if (!root)
        throw not_representable("leading coefficient " + to_string(c) +
                                " is not a rational square");
    Rational half_e = e / 2;
    if (a.is_monomial()) return PuiseuxNumber::monomial(*root, half_e);

    // a = c x^e (1 + u); Newton iteration y <- (y + (1+u)/y)/2 on the series.
    Rational kb_result = a.exact() ? precision : (*a.known_below() - half_e);
    Rational kb_series = kb_result - half_e;

    PuiseuxNumber one_plus_u = a * PuiseuxNumber::monomial(1 / c, -e);
    one_plus_u = one_plus_u.truncated(kb_series);
    PuiseuxNumber y = PuiseuxNumber::constant(Rational(1)).truncated(kb_series);
    const Rational half(1, 2);
    for (;;) {
        PuiseuxNumber residual = mul_trunc(y, y, kb_series) - one_plus_u;
        if (residual.terms().empty()) break;
        // y <- (y + (1+u)/y) / 2
        PuiseuxNumber inv_y = inv_one_plus(y - PuiseuxNumber::constant(Rational(1)), kb_series);
        PuiseuxNumber quotient = mul_trunc(one_plus_u, inv_y, kb_series);
        y = ((y + quotient) * PuiseuxNumber::constant(half)).truncated(kb_series);
    }
    PuiseuxNumber r = mul_trunc(y, PuiseuxNumber::monomial(*root, half_e), kb_result);
    return PuiseuxNumber::from_terms(r.terms(), kb_result);
}

LogValue operator*(const LogValue& a, const LogValue& b) {
    if (a.zero || b.zero) return LogValue::make_zero();
    return LogValue::finite(a.exponent + b.exponent);
}

bool operator==(const LogValue& a, const LogValue& b) {
    if (a.zero != b.zero) return false;
    return a.zero || a.exponent == b.exponent;
}

bool operator<(const LogValue& a, const LogValue& b) {
    if (a.zero) return !b.zero;
    if (b.zero) return false;
    return a.exponent < b.exponent;
}

bool operator<=(const LogValue& a, const LogValue& b) { return a < b || a == b; }

LogValue max(const LogValue& a, const LogValue& b) { return a < b ? b : a; }

std::string to_string(const LogValue& v) {
    return v.zero ? std::string("zero") : to_string(v.exponent);
}

LogValue log_abs(const PuiseuxNumber& a) {
    if (!a.terms().empty()) return LogValue::finite(a.terms().front().exponent);
    if (a.exact()) return LogValue::make_zero();
    throw precision_exhausted("absolute value undecidable: all known terms cancelled");
}

ComplexPuiseux ComplexPuiseux::conj() const { return {re, -im}; }

ComplexPuiseux ComplexPuiseux::operator-() const { return {-re, -im}; }

ComplexPuiseux operator+(const ComplexPuiseux& a, const ComplexPuiseux& b) {
    return {a.re + b.re, a.im + b.im};
}
ComplexPuiseux operator-(const ComplexPuiseux& a, const ComplexPuiseux& b) {
    return {a.re - b.re, a.im - b.im};
}
ComplexPuiseux operator*(const ComplexPuiseux& a, const ComplexPuiseux& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexPuiseux ComplexPuiseux::inv(const Rational& precision) const {
    PuiseuxNumber n = re * re + im * im;
    // Result components are known below `precision`: their error is the
    // error of 1/n scaled by |re| resp. |im|, both at most |this|.
    if (!re.terms().empty() || !im.terms().empty()) {
        Rational size = log_abs(*this).exponent;
        PuiseuxNumber inv_n = n.inv(precision - size);
        return {re * inv_n, -(im * inv_n)};
    }
    PuiseuxNumber inv_n = n.inv(precision); // exact zero or undecidable
    return {re * inv_n, -(im * inv_n)};
}

ComplexPuiseux operator/(const ComplexPuiseux& a, const ComplexPuiseux& b) {
    return a * b.inv();
}

bool operator==(const ComplexPuiseux& a, const ComplexPuiseux& b) {
    return a.re == b.re && a.im == b.im;
}

LogValue log_abs(const ComplexPuiseux& a) {
    // |re^2 + im^2| cannot cancel: both squares have positive leading
    // coefficients, so |a| = max(|re|, |im|).  Decidable as soon as the
    // known part of either component dominates the other's tail bound.
    bool re_terms = !a.re.terms().empty();
    bool im_terms = !a.im.terms().empty();
    if (re_terms && im_terms)
        return max(log_abs(a.re), log_abs(a.im));
    if (re_terms || im_terms) {
        const PuiseuxNumber& known = re_terms ? a.re : a.im;
        const PuiseuxNumber& other = re_terms ? a.im : a.re;
        if (other.exact() || *other.known_below() <= known.leading_exponent())
            return LogValue::finite(known.leading_exponent());
        throw precision_exhausted("complex absolute value undecidable");
    }
    if (a.re.exact() && a.im.exact()) return LogValue::make_zero();
    throw precision_exhausted("complex absolute value undecidable");
}

SpecializeResult specialize(const PuiseuxNumber& a, double t) {
    if (!(t > 1.0)) throw out_of_range_error("specialization point must exceed 1");
    SpecializeResult r;
    for (const auto& term : a.terms())
        r.value += term.coefficient.get_d() * std::pow(t, term.exponent.get_d());
    if (!a.exact()) {
        double m = static_cast<double>(a.ramification());
        double ratio = std::pow(t, -1.0 / m);
        r.truncation_bound = std::pow(t, a.known_below()->get_d()) / (1.0 - ratio);
    }
    r.overflow = !std::isfinite(r.value);
    return r;
}

unsigned big_ball_index(std::span<const PuiseuxNumber> values) {
    if (values.empty()) throw out_of_range_error("big_ball_index of an empty tuple");
    PuiseuxNumber sum;
    for (const auto& v : values) sum = sum + v * v;
    for (unsigned k = 0;; ++k) {
        if (compare(sum, PuiseuxNumber::monomial(Rational(1), Rational(k))) == Cmp::LT)
            return k;
    }
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }

    // number := digits [('/' digits) | ('.' digits)]
    Rational number() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw syntax_error("expected a number", pos);
        if (pos < text.size() && (text[pos] == '/' || text[pos] == '.')) {
            ++pos;
            std::size_t frac = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == frac) throw syntax_error("expected digits", pos);
        }
        return parse_rational(text.substr(start, pos - start), start);
    }

    // exponent := '(' signed_rational ')' | signed_integer
    Rational exponent() {
        skip_ws();
        if (pos < text.size() && text[pos] == '(') {
            ++pos;
            skip_ws();
            Rational e = signed_number();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')')
                throw syntax_error("expected ')'", pos);
            ++pos;
            return e;
        }
        return signed_number();
    }

    Rational signed_number() {
        skip_ws();
        bool neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            neg = text[pos] == '-';
            ++pos;
            skip_ws();
        }
        Rational n = number();
        return neg ? Rational(-n) : n;
    }

    // term := number ['*' x-part] | x-part
    PuiseuxNumber::Term term() {
        skip_ws();
        Rational coeff(1);
        bool saw_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = number();
            saw_coeff = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            } else {
                return {Rational(0), coeff};
            }
        }
        if (pos >= text.size() || text[pos] != 'x') {
            if (saw_coeff) throw syntax_error("expected 'x' after '*'", pos);
            throw syntax_error("expected a term", pos);
        }
        ++pos;
        Rational exp(1);
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exp = exponent();
        }
        return {exp, coeff};
    }
};

} // namespace

PuiseuxNumber parse_puiseux(std::string_view text) {
    Parser p{text};
    std::vector<PuiseuxNumber::Term> terms;
    bool negative = false;
    p.skip_ws();
    if (!p.done() && (p.peek() == '+' || p.peek() == '-')) {
        negative = p.peek() == '-';
        ++p.pos;
    }
    if (p.done()) throw syntax_error("empty literal", p.pos);
    for (;;) {
        auto t = p.term();
        if (negative) t.coefficient = -t.coefficient;
        terms.push_back(std::move(t));
        p.skip_ws();
        if (p.done()) break;
        char c = p.peek();
        if (c != '+' && c != '-') throw syntax_error("expected '+' or '-'", p.pos);
        negative = c == '-';
        ++p.pos;
    }
    return PuiseuxNumber::from_terms(std::move(terms));
}

PuiseuxNumber rescale_exponents(const PuiseuxNumber& a, long m) {
    if (m <= 0) throw out_of_range_error("rescaling factor must be positive");
    std::vector<PuiseuxNumber::Term> terms = a.terms();
    for (auto& t : terms) t.exponent *= m;
    std::optional<Rational> kb = a.known_below();
    if (kb) *kb *= m;
    return PuiseuxNumber::from_terms(std::move(terms), std::move(kb));
}

std::string format_puiseux(const PuiseuxNumber& a) {
    if (a.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : a.terms()) {
        int s = sign_of(t.coefficient);
        if (first) {
            if (s < 0) out += "-";
            first = false;
        } else {
            out += s < 0 ? " - " : " + ";
        }
        out += to_string(abs_of(t.coefficient));
        if (t.exponent != 0) {
            out += "*x^(";
            out += to_string(t.exponent);
            out += ")";
        }
    }
    return out;
}

} // namespace berkline
