#include <doctest.h>

#include "berkline/moebius.hpp"
#include "berkline/real_locus.hpp"
#include "berkline/sampling.hpp"

using namespace berkline;

namespace {

PuiseuxNumber lit(const char* text) { return parse_puiseux(text); }

MoebiusMap real_map(const char* a, const char* b, const char* c, const char* d) {
    return MoebiusMap::from_real(lit(a), lit(b), lit(c), lit(d));
}

ComplexPuiseux cc(const char* re, const char* im = "0") {
    return {parse_puiseux(re), parse_puiseux(im)};
}

} // namespace

TEST_CASE("action on type-1 points") {
    MoebiusMap shift = real_map("1", "1", "0", "1");
    BerkPoint p = apply_point(shift, BerkPoint::type1(cc("0")));
    CHECK(compare(p.center().re, lit("1")) == Cmp::EQ);

    MoebiusMap inversion = real_map("0", "1", "1", "0");
    CHECK(compare(apply_point(inversion, BerkPoint::infinity()).center().re,
                  PuiseuxNumber()) == Cmp::EQ);
    CHECK(apply_point(inversion, BerkPoint::type1(cc("0"))).is_infinity());

    MoebiusMap diag = real_map("x", "0", "0", "x^(-1)");
    BerkPoint q = apply_point(diag, BerkPoint::type1(cc("1")));
    CHECK(compare(q.center().re, lit("x^(2)")) == Cmp::EQ);
}

TEST_CASE("action on disks") {
    MoebiusMap diag = real_map("x", "0", "0", "x^(-1)");
    CHECK(points_equal(apply_disk(diag, BerkPoint::gauss()),
                       BerkPoint::disk(cc("0"), Rational(2))));

    MoebiusMap id = MoebiusMap::identity();
    BerkPoint p = BerkPoint::disk(cc("x + 1", "x^(-2)"), Rational(-1));
    CHECK(points_equal(apply_disk(id, p), p));

    MoebiusMap shift = real_map("1", "1", "0", "1");
    CHECK(points_equal(apply_disk(shift, BerkPoint::gauss()),
                       BerkPoint::disk(cc("1"), Rational(0))));
}

TEST_CASE("pole inside the disk") {
    // Inversion maps D(0, e^t) to D(0, e^{-t}); the set image is the
    // complement-shaped neighborhood of infinity with the same parameters.
    MoebiusMap inversion = real_map("0", "1", "1", "0");
    BerkPoint big = BerkPoint::disk(cc("0"), Rational(3));
    CHECK(points_equal(apply_disk(inversion, big), BerkPoint::disk(cc("0"), Rational(-3))));
    CHECK(points_equal(apply_disk(inversion, BerkPoint::gauss()), BerkPoint::gauss()));

    // Functoriality spanning both pole cases.
    Sampler s(51);
    for (int i = 0; i < 200; ++i) {
        MoebiusMap g = s.moebius_k();
        MoebiusMap h = s.moebius_k();
        BerkPoint p = s.disk();
        CHECK(points_equal(apply_disk(g * h, p), apply_disk(g, apply_disk(h, p))));
    }
}

TEST_CASE("isometry on sampled pairs") {
    Sampler s(52);
    for (int i = 0; i < 300; ++i) {
        MoebiusMap g = s.moebius_k();
        BerkPoint p = s.disk(), q = s.disk();
        CHECK(dan_distance(apply_disk(g, p), apply_disk(g, q)) == dan_distance(p, q));
    }
}

TEST_CASE("maps over K preserve the real subtree") {
    Sampler s(53);
    for (int i = 0; i < 200; ++i) {
        MoebiusMap g = s.moebius_k();
        BerkPoint p = s.real_disk();
        CHECK(is_real_point(apply_disk(g, p)).verdict);
    }
}

TEST_CASE("translation lengths from the trace") {
    CHECK(translation_length(real_map("x", "0", "0", "x^(-1)")) == Rational(2));
    CHECK(translation_length(real_map("1", "1", "0", "1")) == Rational(0));
    CHECK(translation_length(real_map("0", "-1", "1", "0")) == Rational(0));
    // Scaling the matrix does not change the projective class.
    CHECK(translation_length(real_map("x^(2)", "0", "0", "1")) == Rational(2));
    CHECK_THROWS_AS(translation_length(real_map("0", "1", "1", "0")), non_unit_determinant);
}

TEST_CASE("orbit oracle attains the translation length on the axis") {
    MoebiusMap diag = real_map("x", "0", "0", "x^(-1)");
    Rational best;
    bool first = true;
    for (long twice_s = -8; twice_s <= 8; ++twice_s) {
        BerkPoint p = BerkPoint::disk(cc("0"), Rational(twice_s, 2));
        Rational d = dan_distance(p, apply_disk(diag, p));
        if (first || d < best) best = d;
        first = false;
    }
    CHECK(best == Rational(2));
}

TEST_CASE("displacement bounds below by the translation length") {
    Sampler s(54);
    int hyperbolic_seen = 0;
    for (int i = 0; i < 300; ++i) {
        MoebiusMap g = s.moebius_sl_k();
        Rational len = translation_length(g);
        BerkPoint p = s.disk();
        BerkPoint gp = apply_disk(g, p);
        Rational disp = dan_distance(p, gp);
        CHECK(disp >= len);
        if (len > 0 && disp > 0) {
            // The midpoint of [p, gp] lies on the axis: displacement there
            // equals the translation length exactly.
            BerkPoint m = path_point(p, gp, disp / 2);
            CHECK(dan_distance(m, apply_disk(g, m)) == len);
            ++hyperbolic_seen;
        }
    }
    CHECK(hyperbolic_seen > 20);
}

TEST_CASE("boundary sampling certifies the image radius") {
    // 50 points on the boundary |w - v| = r of one disk, mapped through a
    // pole-outside instance: all land exactly at the claimed image radius.
    MoebiusMap g = real_map("x", "1", "1", "x^(-1) + 1"); // det = x
    BerkPoint p = BerkPoint::disk(cc("0"), Rational(-1));
    BerkPoint image = apply_disk(g, p);
    Sampler s(56);
    BerkPoint center_image = apply_point(g, BerkPoint::type1(p.center()));
    for (int k = 0; k < 50; ++k) {
        ComplexPuiseux mu(PuiseuxNumber::monomial(s.nonzero_rational(), p.log_radius()));
        BerkPoint w = apply_point(g, BerkPoint::type1(p.center() + mu));
        CHECK(log_abs(w.center() - center_image.center()) ==
              LogValue::finite(image.log_radius()));
    }
}

TEST_CASE("composition and inverse") {
    Sampler s(55);
    for (int i = 0; i < 100; ++i) {
        MoebiusMap g = s.moebius_k();
        BerkPoint p = s.disk();
        BerkPoint back = apply_disk(g.inverse(), apply_disk(g, p));
        CHECK(points_equal(back, p));
    }
}
