#include "berkline/moebius.hpp"

namespace berkline {

MoebiusMap::MoebiusMap(ComplexPuiseux a, ComplexPuiseux b, ComplexPuiseux c, ComplexPuiseux d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    det_ = a_ * d_ - b_ * c_;
    if (det_.is_exact_zero()) throw invariant_violation("Moebius map with zero determinant");
}

MoebiusMap MoebiusMap::identity() {
    PuiseuxNumber one = PuiseuxNumber::constant(Rational(1));
    return MoebiusMap(ComplexPuiseux(one), ComplexPuiseux(), ComplexPuiseux(),
                      ComplexPuiseux(one));
}

MoebiusMap MoebiusMap::from_real(PuiseuxNumber a, PuiseuxNumber b,
                                 PuiseuxNumber c, PuiseuxNumber d) {
    return MoebiusMap(ComplexPuiseux(std::move(a)), ComplexPuiseux(std::move(b)),
                      ComplexPuiseux(std::move(c)), ComplexPuiseux(std::move(d)));
}

bool MoebiusMap::entries_real() const {
    return a_.im.is_exact_zero() && b_.im.is_exact_zero() && c_.im.is_exact_zero() &&
           d_.im.is_exact_zero();
}

MoebiusMap MoebiusMap::inverse() const {
    return MoebiusMap(d_, -b_, -c_, a_);
}

MoebiusMap operator*(const MoebiusMap& g, const MoebiusMap& h) {
    return MoebiusMap(g.a_ * h.a_ + g.b_ * h.c_, g.a_ * h.b_ + g.b_ * h.d_,
                      g.c_ * h.a_ + g.d_ * h.c_, g.c_ * h.b_ + g.d_ * h.d_);
}

namespace {

bool decidably_zero(const ComplexPuiseux& v) {
    return v.is_exact_zero();
}

// num / den with the quotient known below `bound` (absolute).
ComplexPuiseux divide_to(const ComplexPuiseux& num, const ComplexPuiseux& den,
                         const Rational& bound) {
    if (num.is_exact_zero()) return ComplexPuiseux();
    if (!num.re.terms().empty() || !num.im.terms().empty()) {
        Rational num_size = log_abs(num).exponent;
        return num * den.inv(bound - num_size);
    }
    return num * den.inv(bound);
}

} // namespace

BerkPoint apply_point(const MoebiusMap& g, const BerkPoint& p, const Rational& precision) {
    if (p.kind() != BerkPoint::Kind::type1)
        throw invariant_violation("apply_point expects a type-1 point");
    if (p.is_infinity()) {
        if (decidably_zero(g.c())) return BerkPoint::infinity();
        return BerkPoint::type1(divide_to(g.a(), g.c(), precision));
    }
    const ComplexPuiseux& v = p.center();
    ComplexPuiseux denom = g.c() * v + g.d();
    if (decidably_zero(denom)) return BerkPoint::infinity();
    return BerkPoint::type1(divide_to(g.a() * v + g.b(), denom, precision));
}

BerkPoint apply_disk(const MoebiusMap& g, const BerkPoint& p) {
    if (!p.is_disk()) throw invariant_violation("apply_disk expects a disk point");
    const ComplexPuiseux& v = p.center();
    const Rational& t = p.log_radius();
    LogValue det_size = log_abs(g.det());

    if (decidably_zero(g.c())) {
        // Affine map; the pole sits at infinity.
        LogValue d_size = log_abs(g.d());
        Rational t_image = t + det_size.exponent - 2 * d_size.exponent;
        ComplexPuiseux center = divide_to(g.a() * v + g.b(), g.d(), t_image);
        return BerkPoint::disk(std::move(center), std::move(t_image));
    }

    LogValue c_size = log_abs(g.c());
    ComplexPuiseux denom = g.c() * v + g.d();
    // pole inside <=> |v - pole| <= e^t <=> |c v + d| <= |c| e^t
    LogValue denom_size =
        decidably_zero(denom) ? LogValue::make_zero() : log_abs(denom);
    LogValue threshold = LogValue::finite(c_size.exponent + t);
    if (denom_size <= threshold) {
        Rational t_image = det_size.exponent - 2 * c_size.exponent - t;
        ComplexPuiseux center = divide_to(g.a(), g.c(), t_image);
        return BerkPoint::disk(std::move(center), std::move(t_image));
    }
    Rational t_image = t + det_size.exponent - 2 * denom_size.exponent;
    ComplexPuiseux center = divide_to(g.a() * v + g.b(), denom, t_image);
    return BerkPoint::disk(std::move(center), std::move(t_image));
}

BerkPoint apply(const MoebiusMap& g, const BerkPoint& p) {
    return p.is_disk() ? apply_disk(g, p) : apply_point(g, p);
}

Rational translation_length(const MoebiusMap& g, const Rational& precision) {
    const ComplexPuiseux& det = g.det();
    if (!det.im.is_exact_zero()) throw non_unit_determinant();
    if (det.re.sign() <= 0) throw non_unit_determinant();
    PuiseuxNumber scale = sqrt_pos(det.re, precision).inv(precision);

    ComplexPuiseux trace = g.a() + g.d();
    ComplexPuiseux normalized{trace.re * scale, trace.im * scale};
    if (normalized.is_exact_zero()) return Rational(0);
    LogValue size = log_abs(normalized);
    if (size.zero || size.exponent <= 0) return Rational(0);
    return 2 * size.exponent;
}

} // namespace berkline
