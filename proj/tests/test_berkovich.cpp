#include <doctest.h>

#include "berkline/berkovich.hpp"
#include "berkline/sampling.hpp"

using namespace berkline;

namespace {

PuiseuxNumber lit(const char* text) { return parse_puiseux(text); }

ComplexPuiseux c(const char* re, const char* im = "0") {
    return {parse_puiseux(re), parse_puiseux(im)};
}

const PuiseuxNumber kOne = PuiseuxNumber::constant(Rational(1));

PolyF zpoly(std::initializer_list<ComplexPuiseux> coeffs) {
    return PolyF(std::vector<ComplexPuiseux>(coeffs));
}

} // namespace

TEST_CASE("seminorm evaluation") {
    BerkPoint gauss = BerkPoint::gauss();
    PolyF z = zpoly({c("0"), c("1")});
    CHECK(seminorm_eval(gauss, z) == LogValue::finite(Rational(0)));

    BerkPoint d1 = BerkPoint::disk(c("0"), Rational(1));
    PolyF f = zpoly({c("1"), c("x"), c("1")}); // z^2 + x z + 1
    CHECK(seminorm_eval(d1, f) == LogValue::finite(Rational(2)));

    ComplexPuiseux v = c("x + 1", "x^(-1)");
    PolyF z_minus_v = zpoly({-v, c("1")});
    CHECK(seminorm_eval(BerkPoint::type1(v), z_minus_v).zero);
}

TEST_CASE("join") {
    BerkPoint a = BerkPoint::gauss();
    BerkPoint b = BerkPoint::disk(c("x"), Rational(0));
    CHECK(points_equal(join(a, b), BerkPoint::disk(c("0"), Rational(1))));

    BerkPoint p = BerkPoint::disk(c("x + 1", "1"), Rational(-2));
    CHECK(points_equal(join(p, p), p));

    BerkPoint t0 = BerkPoint::type1(c("0"));
    BerkPoint t1 = BerkPoint::type1(c("1"));
    CHECK(points_equal(join(t0, t1), BerkPoint::gauss()));

    CHECK(join(p, BerkPoint::infinity()).is_infinity());
}

TEST_CASE("diameter") {
    CHECK(diam(BerkPoint::type1(c("x"))).zero);
    CHECK(diam(BerkPoint::disk(c("0"), Rational(3))) == LogValue::finite(Rational(3)));
    BerkPoint j = join(BerkPoint::type1(c("0")), BerkPoint::type1(c("x^(-2)")));
    CHECK(diam(j) == LogValue::finite(Rational(-2)));
    CHECK_THROWS_AS(diam(BerkPoint::infinity()), infinity_has_no_diameter);
}

TEST_CASE("hyperbolic distance") {
    BerkPoint a = BerkPoint::disk(c("0"), Rational(1));
    BerkPoint b = BerkPoint::disk(c("0"), Rational(4));
    CHECK(dan_distance(a, b) == Rational(3));
    CHECK(dan_distance(a, a) == Rational(0));

    BerkPoint g = BerkPoint::gauss();
    BerkPoint far = BerkPoint::disk(c("x") * c("x"), Rational(0));
    CHECK(dan_distance(g, far) == Rational(4));

    CHECK_THROWS_AS(dan_distance(g, BerkPoint::type1(c("0"))), distance_infinite);
}

TEST_CASE("path points") {
    BerkPoint a = BerkPoint::gauss();
    BerkPoint b = BerkPoint::disk(c("0"), Rational(4));
    CHECK(points_equal(path_point(a, b, Rational(1)), BerkPoint::disk(c("0"), Rational(1))));
    CHECK(points_equal(path_point(a, b, Rational(0)), a));
    CHECK(points_equal(path_point(a, b, Rational(4)), b));

    BerkPoint q = BerkPoint::disk(c("x"), Rational(0));
    // The tripod apex sits one unit above both endpoints.
    CHECK(points_equal(path_point(a, q, Rational(1)), join(a, q)));

    CHECK_THROWS_AS(path_point(a, b, Rational(5)), out_of_range_error);
    CHECK_THROWS_AS(path_point(a, b, Rational(-1)), out_of_range_error);
}

TEST_CASE("basic opens") {
    BerkPoint gauss = BerkPoint::gauss();
    CHECK(in_basic_open(gauss, BasicOpenSpec::open_disk(c("0"), Rational(1))));
    BerkPoint d1 = BerkPoint::disk(c("0"), Rational(1));
    CHECK(!in_basic_open(d1, BasicOpenSpec::open_disk(c("0"), Rational(1))));
    CHECK(in_basic_open(BerkPoint::infinity(),
                        BasicOpenSpec::complement_of_closed({{c("0"), Rational(5)}})));
    CHECK(!in_basic_open(BerkPoint::type1(c("1")),
                         BasicOpenSpec::complement_of_closed({{c("0"), Rational(0)}})));
    CHECK(in_basic_open(
        BerkPoint::type1(c("1")),
        BasicOpenSpec::open_disk_minus_closed(c("0"), Rational(2), {{c("0"), Rational(-1)}})));
    CHECK(!in_basic_open(
        BerkPoint::type1(c("1")),
        BasicOpenSpec::open_disk_minus_closed(c("0"), Rational(2), {{c("1"), Rational(0)}})));
}

TEST_CASE("join is a semilattice") {
    Sampler s(31);
    for (int i = 0; i < 300; ++i) {
        BerkPoint p = s.disk(), q = s.disk(), r = s.disk();
        CHECK(points_equal(join(p, p), p));
        CHECK(points_equal(join(p, q), join(q, p)));
        CHECK(points_equal(join(join(p, q), r), join(p, join(q, r))));
        CHECK(below(p, join(p, q)));
    }
}

TEST_CASE("shrinking nested disks have nonincreasing seminorms") {
    Sampler s(32);
    for (int i = 0; i < 60; ++i) {
        ComplexPuiseux center = s.complex_puiseux();
        PolyF f = s.poly_f(5);
        Rational t = Rational(4);
        LogValue previous;
        bool first = true;
        for (int step = 0; step < 8; ++step, t -= Rational(1)) {
            LogValue now = seminorm_eval(BerkPoint::disk(center, t), f);
            if (!first) CHECK(now <= previous);
            previous = now;
            first = false;
        }
        // The values converge down to the type-1 evaluation.
        if (!f.is_zero()) CHECK(seminorm_eval(BerkPoint::type1(center), f) <= previous);
    }
}

TEST_CASE("four point condition") {
    Sampler s(33);
    for (int i = 0; i < 300; ++i) {
        BerkPoint p = s.disk(), q = s.disk(), r = s.disk(), w = s.disk();
        Rational lhs = dan_distance(p, q) + dan_distance(r, w);
        Rational a = dan_distance(p, r) + dan_distance(q, w);
        Rational b = dan_distance(p, w) + dan_distance(q, r);
        CHECK(lhs <= std::max(a, b));
    }
}

TEST_CASE("path points stay on the arc") {
    Sampler s(34);
    for (int i = 0; i < 200; ++i) {
        BerkPoint p = s.disk(), q = s.disk();
        Rational total = dan_distance(p, q);
        Rational step = total / 3;
        BerkPoint m = path_point(p, q, step);
        CHECK(points_equal(join(m, join(p, q)), join(p, q)));
        CHECK(dan_distance(p, m) == step);
        CHECK(dan_distance(m, q) == total - step);
    }
}

TEST_CASE("disk centers reduce modulo the radius") {
    // Any point of a disk is a center; the canonical form keeps the part
    // of the center that sticks out of the radius.
    BerkPoint p = BerkPoint::disk(c("x^(2) + 1"), Rational(0));
    CHECK(p.center().re.terms().size() == 1);
    CHECK(p.center().re.leading_exponent() == 2);
    CHECK(points_equal(p, BerkPoint::disk(c("x^(2) + 5"), Rational(0))));
    CHECK(!points_equal(p, BerkPoint::disk(c("x^(2) + x"), Rational(0))));
}
