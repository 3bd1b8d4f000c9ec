#include <doctest.h>

#include "berkline/real_locus.hpp"
#include "berkline/sampling.hpp"

using namespace berkline;

namespace {

ComplexPuiseux c(const char* re, const char* im = "0") {
    return {parse_puiseux(re), parse_puiseux(im)};
}

const PuiseuxNumber kOne = PuiseuxNumber::constant(Rational(1));

} // namespace

TEST_CASE("galois conjugation") {
    BerkPoint p = BerkPoint::disk(c("0", "x^(-1)"), Rational(0));
    CHECK(points_equal(galois_conjugate(p), BerkPoint::disk(c("0", "-x^(-1)"), Rational(0))));

    BerkPoint real = BerkPoint::disk(c("1 + x"), Rational(2));
    CHECK(points_equal(galois_conjugate(real), real));

    CHECK(galois_conjugate(BerkPoint::infinity()).is_infinity());

    Sampler s(41);
    for (int i = 0; i < 100; ++i) {
        BerkPoint q = s.disk();
        CHECK(points_equal(galois_conjugate(galois_conjugate(q)), q));
    }
}

TEST_CASE("disk criterion") {
    // |im| = e^{-1} <= 1: the disk meets the K-line.
    CHECK(is_real_point(BerkPoint::disk(c("0", "x^(-1)"), Rational(0))).verdict);

    // |im| = 1 > e^{-1}: not real, witness {z, 1} with eta values e^{-1} vs 1.
    RealnessCertificate cert = is_real_point(BerkPoint::disk(c("0", "1"), Rational(-1)));
    CHECK(!cert.verdict);
    REQUIRE(cert.violating_family.has_value());
    CHECK(cert.violating_family->family.size() == 2);
    CHECK(cert.violating_family->lhs == LogValue::finite(Rational(-1)));
    CHECK(cert.violating_family->rhs == LogValue::finite(Rational(0)));

    CHECK(is_real_point(BerkPoint::type1(c("x + 1/2"))).verdict);
    CHECK(!is_real_point(BerkPoint::type1(c("0", "1"))).verdict);
    CHECK(is_real_point(BerkPoint::infinity()).verdict);
}

TEST_CASE("max of squares report") {
    PolyK z({PuiseuxNumber(), kOne});
    std::vector<PolyK> family = {z, PolyK::constant(kOne)};

    MaxSquaresReport at_gauss = check_max_squares(BerkPoint::gauss(), family);
    CHECK(at_gauss.holds);
    CHECK(at_gauss.lhs == LogValue::finite(Rational(0)));

    MaxSquaresReport at_bad =
        check_max_squares(BerkPoint::disk(c("0", "1"), Rational(-1)), family);
    CHECK(!at_bad.holds);
    CHECK(at_bad.lhs == LogValue::finite(Rational(-1)));
    CHECK(at_bad.rhs == LogValue::finite(Rational(0)));

    std::vector<PolyK> ones = {PolyK::constant(kOne)};
    CHECK(check_max_squares(BerkPoint::disk(c("0", "1"), Rational(-1)), ones).holds);

    CHECK_THROWS_AS(check_max_squares(BerkPoint::gauss(), {}), out_of_range_error);
}

TEST_CASE("projection to the real subtree") {
    BerkPoint real = BerkPoint::disk(c("x + 1", "x^(-1)"), Rational(0));
    CHECK(points_equal(project_to_real_tree(real), real));

    BerkPoint p = BerkPoint::disk(c("0", "1"), Rational(-1));
    CHECK(points_equal(project_to_real_tree(p), BerkPoint::gauss()));

    BerkPoint q = BerkPoint::disk(c("0", "x"), Rational(0));
    CHECK(points_equal(project_to_real_tree(q), BerkPoint::disk(c("0"), Rational(1))));

    CHECK_THROWS_AS(project_to_real_tree(BerkPoint::type1(c("0", "1"))), distance_infinite);
}

TEST_CASE("galois fixed iff real") {
    Sampler s(42);
    for (int i = 0; i < 300; ++i) {
        BerkPoint p = s.coin() ? s.real_disk() : s.nonreal_disk();
        CHECK(is_real_point(p).verdict == points_equal(galois_conjugate(p), p));
    }
}

TEST_CASE("the complement of the real subtree is open") {
    Sampler s(43);
    for (int i = 0; i < 150; ++i) {
        BerkPoint p = s.nonreal_disk();
        BerkPoint proj = project_to_real_tree(p);
        Rational dist = dan_distance(p, proj);
        REQUIRE(dist > 0);
        // Everything strictly closer to p than the projection stays
        // non-real: walk toward the projection and jiggle the radius.
        Rational eps = dist / 3;
        BerkPoint toward = path_point(p, proj, eps);
        CHECK(!is_real_point(toward).verdict);
        BerkPoint inflated = BerkPoint::disk(p.center(), p.log_radius() + eps / 2);
        CHECK(!is_real_point(inflated).verdict);
        if (eps / 2 < dist) {
            BerkPoint deflated = BerkPoint::disk(p.center(), p.log_radius() - eps / 2);
            CHECK(!is_real_point(deflated).verdict);
        }
    }
}

TEST_CASE("the real subtree is convex") {
    Sampler s(44);
    for (int i = 0; i < 150; ++i) {
        BerkPoint p = s.real_disk(), q = s.real_disk();
        Rational total = dan_distance(p, q);
        for (int k = 1; k < 4; ++k) {
            BerkPoint m = path_point(p, q, total * k / 4);
            CHECK(is_real_point(m).verdict);
        }
    }
}

TEST_CASE("projection is idempotent and 1-Lipschitz") {
    Sampler s(45);
    for (int i = 0; i < 200; ++i) {
        BerkPoint p = s.coin() ? s.real_disk() : s.nonreal_disk();
        BerkPoint q = s.coin() ? s.real_disk() : s.nonreal_disk();
        BerkPoint pp = project_to_real_tree(p);
        CHECK(is_real_point(pp).verdict);
        CHECK(points_equal(project_to_real_tree(pp), pp));
        CHECK(dan_distance(project_to_real_tree(p), project_to_real_tree(q)) <=
              dan_distance(p, q));
    }
}
