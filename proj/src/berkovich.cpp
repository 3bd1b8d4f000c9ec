#include "berkline/berkovich.hpp"

namespace berkline {

BerkPoint BerkPoint::type1(ComplexPuiseux v) {
    BerkPoint p;
    p.kind_ = Kind::type1;
    p.center_ = std::move(v);
    return p;
}

BerkPoint BerkPoint::infinity() {
    BerkPoint p;
    p.kind_ = Kind::type1;
    p.at_infinity_ = true;
    return p;
}

namespace {

// Any point of a closed disk is a center, so a disk only depends on its
// center modulo e^t: keep the terms above the radius.  When the truncated
// part (known terms <= t together with the unknown tail) is certifiably
// within the radius, the kept finite prefix is an exact representative.
PuiseuxNumber reduce_center_component(const PuiseuxNumber& v, const Rational& t) {
    std::vector<PuiseuxNumber::Term> kept;
    for (const auto& term : v.terms())
        if (term.exponent > t) kept.push_back(term);
    if (v.exact() || *v.known_below() <= t)
        return PuiseuxNumber::from_terms(std::move(kept), std::nullopt);
    return PuiseuxNumber::from_terms(std::move(kept), v.known_below());
}

} // namespace

BerkPoint BerkPoint::disk(ComplexPuiseux center, Rational log_radius) {
    BerkPoint p;
    p.kind_ = Kind::disk;
    p.center_.re = reduce_center_component(center.re, log_radius);
    p.center_.im = reduce_center_component(center.im, log_radius);
    p.log_radius_ = std::move(log_radius);
    return p;
}

BerkPoint BerkPoint::gauss() {
    return disk(ComplexPuiseux(), Rational(0));
}

const Rational& BerkPoint::log_radius() const {
    if (!is_disk()) throw invariant_violation("log_radius of a type-1 point");
    return log_radius_;
}

bool points_equal(const BerkPoint& p, const BerkPoint& q) {
    if (p.is_infinity() || q.is_infinity()) return p.is_infinity() && q.is_infinity();
    if (p.kind() != q.kind()) return false;
    if (p.kind() == BerkPoint::Kind::type1) return p.center() == q.center();
    if (p.log_radius() != q.log_radius()) return false;
    LogValue gap = log_abs(p.center() - q.center());
    return gap <= LogValue::finite(p.log_radius());
}

LogValue seminorm_eval(const BerkPoint& p, const PolyF& f) {
    if (p.is_infinity())
        throw invariant_violation("seminorm at infinity is not defined on polynomials");
    if (f.is_zero()) return LogValue::make_zero();
    if (p.kind() == BerkPoint::Kind::type1) return log_abs(f(p.center()));

    auto shifted = f.shifted_coeffs(p.center());
    const Rational& t = p.log_radius();
    LogValue best = LogValue::make_zero();
    for (std::size_t n = 0; n < shifted.size(); ++n) {
        LogValue a;
        if (shifted[n].is_exact_zero())
            continue;
        a = log_abs(shifted[n]);
        if (a.zero) continue;
        LogValue candidate = LogValue::finite(a.exponent + Rational(static_cast<long>(n)) * t);
        best = max(best, candidate);
    }
    return best;
}

LogValue seminorm_eval(const BerkPoint& p, const PolyK& f) {
    return seminorm_eval(p, complexify(f));
}

LogValue diam(const BerkPoint& p) {
    if (p.is_infinity()) throw infinity_has_no_diameter();
    if (p.kind() == BerkPoint::Kind::type1) return LogValue::make_zero();
    return LogValue::finite(p.log_radius());
}

BerkPoint join(const BerkPoint& p, const BerkPoint& q) {
    if (p.is_infinity() || q.is_infinity()) return BerkPoint::infinity();

    LogValue rp = diam(p);
    LogValue rq = diam(q);
    LogValue gap = log_abs(p.center() - q.center());
    LogValue r = max(max(rp, rq), gap);
    if (r.zero) return p; // coincident type-1 points
    return BerkPoint::disk(p.center(), r.exponent);
}

bool below(const BerkPoint& p, const BerkPoint& q) {
    return points_equal(join(p, q), q);
}

Rational dan_distance(const BerkPoint& p, const BerkPoint& q) {
    if (!p.is_disk() || !q.is_disk()) throw distance_infinite();
    BerkPoint apex = join(p, q);
    return 2 * apex.log_radius() - p.log_radius() - q.log_radius();
}

BerkPoint path_point(const BerkPoint& p, const BerkPoint& q, const Rational& s) {
    if (!p.is_disk() || !q.is_disk()) throw distance_infinite();
    Rational total = dan_distance(p, q);
    if (s < 0 || s > total) throw out_of_range_error("arc parameter outside [0, d(p,q)]");
    BerkPoint apex = join(p, q);
    Rational up = apex.log_radius() - p.log_radius();
    if (s <= up) return BerkPoint::disk(p.center(), p.log_radius() + s);
    return BerkPoint::disk(q.center(), apex.log_radius() - (s - up));
}

BasicOpenSpec BasicOpenSpec::open_disk(ComplexPuiseux v, Rational t) {
    BasicOpenSpec u;
    u.shape = Shape::open_disk;
    u.center = std::move(v);
    u.log_radius = std::move(t);
    return u;
}

BasicOpenSpec BasicOpenSpec::open_disk_minus_closed(ComplexPuiseux v, Rational t,
                                                    std::vector<ClosedDisk> excluded) {
    BasicOpenSpec u = open_disk(std::move(v), std::move(t));
    u.shape = Shape::open_disk_minus_closed;
    u.excluded = std::move(excluded);
    return u;
}

BasicOpenSpec BasicOpenSpec::complement_of_closed(std::vector<ClosedDisk> excluded) {
    BasicOpenSpec u;
    u.shape = Shape::complement_of_closed;
    u.excluded = std::move(excluded);
    return u;
}

namespace {

// eta_p(z - v) without building a polynomial.
LogValue linear_seminorm(const BerkPoint& p, const ComplexPuiseux& v) {
    LogValue gap = log_abs(p.center() - v);
    if (p.kind() == BerkPoint::Kind::type1) return gap;
    return max(gap, LogValue::finite(p.log_radius()));
}

} // namespace

bool in_basic_open(const BerkPoint& p, const BasicOpenSpec& u) {
    const bool inf = p.is_infinity();
    switch (u.shape) {
        case BasicOpenSpec::Shape::open_disk:
            if (inf) return false;
            return linear_seminorm(p, u.center) < LogValue::finite(u.log_radius);
        case BasicOpenSpec::Shape::open_disk_minus_closed: {
            if (inf) return false;
            if (!(linear_seminorm(p, u.center) < LogValue::finite(u.log_radius))) return false;
            for (const auto& d : u.excluded)
                if (linear_seminorm(p, d.center) <= LogValue::finite(d.log_radius)) return false;
            return true;
        }
        case BasicOpenSpec::Shape::complement_of_closed: {
            if (inf) return true;
            for (const auto& d : u.excluded)
                if (linear_seminorm(p, d.center) <= LogValue::finite(d.log_radius)) return false;
            return true;
        }
    }
    throw invariant_violation("unreachable basic-open shape");
}

} // namespace berkline
