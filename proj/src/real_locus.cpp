#include "berkline/real_locus.hpp"

namespace berkline {

BerkPoint galois_conjugate(const BerkPoint& p) {
    if (p.is_infinity()) return p;
    if (p.kind() == BerkPoint::Kind::type1) return BerkPoint::type1(p.center().conj());
    return BerkPoint::disk(p.center().conj(), p.log_radius());
}

MaxSquaresReport check_max_squares(const BerkPoint& p, std::span<const PolyK> fs) {
    if (fs.empty()) throw out_of_range_error("check_max_squares needs a nonempty family");
    MaxSquaresReport r;
    PolyK sum;
    bool first = true;
    for (const auto& f : fs) {
        PolyK sq = f * f;
        sum = sum + sq;
        LogValue v = seminorm_eval(p, sq);
        r.rhs = first ? v : max(r.rhs, v);
        first = false;
    }
    r.lhs = seminorm_eval(p, sum);
    r.holds = r.lhs == r.rhs;
    return r;
}

RealnessCertificate is_real_point(const BerkPoint& p) {
    RealnessCertificate cert;
    if (p.is_infinity()) {
        cert.verdict = true;
        cert.galois_fixed_witness = p;
        return cert;
    }

    LogValue im_size = log_abs(ComplexPuiseux(p.center().im));
    bool real;
    if (p.kind() == BerkPoint::Kind::type1)
        real = im_size.zero;
    else
        real = im_size <= LogValue::finite(p.log_radius());

    if (real) {
        cert.verdict = true;
        cert.galois_fixed_witness = galois_conjugate(p);
        return cert;
    }

    // Canonical violating family from the factorization of
    // (z - v)(z - conj v): {z - re(v), im(v)}.
    std::vector<PolyK> family;
    family.push_back(PolyK({-p.center().re, PuiseuxNumber::constant(Rational(1))}));
    family.push_back(PolyK::constant(p.center().im));
    MaxSquaresReport report = check_max_squares(p, family);
    if (report.holds)
        throw invariant_violation("canonical witness family failed to violate");
    cert.verdict = false;
    cert.violating_family =
        RealnessCertificate::ViolatingFamily{std::move(family), report.lhs, report.rhs};
    return cert;
}

BerkPoint project_to_real_tree(const BerkPoint& p) {
    if (!p.is_disk()) throw distance_infinite();
    BerkPoint conj = galois_conjugate(p);
    BerkPoint apex = join(p, conj);
    // The apex is equidistant from p and conj(p) and Galois fixed; rewrite
    // it over the real part of the center so the fixedness is visible.
    return BerkPoint::disk(ComplexPuiseux(p.center().re), apex.log_radius());
}

} // namespace berkline
