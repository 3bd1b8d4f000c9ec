#include "berkline/rational.hpp"

#include <cctype>
#include <numeric>

namespace berkline {

Rational floor_of(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(r);
}

Rational ceil_of(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(r);
}

Rational pow_rational(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0) {
        if (e < 0) throw division_by_zero();
        return Rational(0);
    }
    mpz_class num, den;
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
    Rational r(num, den);
    if (e < 0) r = 1 / r;
    r.canonicalize();
    return r;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_den_mpz_t()) == 0) return std::nullopt;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text, std::size_t at) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw syntax_error("expected a number", at);

    Rational value;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num)) throw syntax_error("bad numerator", at);
        if (!all_digits(den)) throw syntax_error("bad denominator", at + slash + 1);
        Rational d(std::string(den), 10);
        if (d == 0) throw syntax_error("zero denominator", at + slash + 1);
        value = Rational(std::string(num), 10) / d;
    } else if (dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (!all_digits(ip) && !ip.empty()) throw syntax_error("bad integer part", at);
        if (!all_digits(fp)) throw syntax_error("bad fractional part", at + dot + 1);
        Rational integral = ip.empty() ? Rational(0) : Rational(std::string(ip), 10);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        value = integral + Rational(mpz_class(std::string(fp), 10)) / Rational(scale);
    } else {
        if (!all_digits(s)) throw syntax_error("bad number", at);
        value = Rational(std::string(s), 10);
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::int64_t lcm_int64(std::int64_t a, std::int64_t b) {
    return std::lcm(a, b);
}

} // namespace berkline
