#include "berkline/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "berkline/degeneration.hpp"
#include "berkline/real_locus.hpp"
#include "berkline/real_spectrum.hpp"
#include "berkline/sampling.hpp"

namespace berkline {

namespace {

struct Failure {
    std::string message;
};

void expect(bool ok, const std::string& message) {
    if (!ok) throw Failure{message};
}

std::string d2s(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// 1. Exact R-tree axioms for the hyperbolic metric.
void check_tree_axioms(Sampler& s) {
    for (int i = 0; i < 1000; ++i) {
        BerkPoint p = s.disk(), q = s.disk(), r = s.disk(), w = s.disk();
        Rational dpq = dan_distance(p, q);
        expect(dpq == dan_distance(q, p), "dan not symmetric");
        expect(dpq >= 0, "dan negative");
        expect((dpq == 0) == points_equal(p, q), "dan zero mismatch with equality");

        // An equal pair written with a different center representative.
        BerkPoint p2 = BerkPoint::disk(
            p.center() + ComplexPuiseux(PuiseuxNumber::monomial(
                             Rational(1), p.log_radius() - Rational(i % 3))),
            p.log_radius());
        expect(dan_distance(p, p2) == 0, "recentred disk not at distance zero");

        Rational dpr = dan_distance(p, r), dqr = dan_distance(q, r);
        expect(dpr <= dpq + dqr, "triangle inequality failed");

        Rational dpw = dan_distance(p, w), dqw = dan_distance(q, w), drw = dan_distance(r, w);
        Rational lhs = dpq + drw;
        Rational a = dpr + dqw, b = dpw + dqr;
        expect(lhs <= std::max(a, b), "four-point condition failed");
    }
}

// 2. Multiplicativity and the ultrametric inequality of the seminorm.
void check_seminorm_laws(Sampler& s) {
    for (int i = 0; i < 1000; ++i) {
        BerkPoint p = (i % 4 == 0) ? BerkPoint::type1(s.complex_puiseux()) : s.disk();
        PolyF f = s.poly_f(6), g = s.poly_f(6);
        LogValue ef = seminorm_eval(p, f);
        LogValue eg = seminorm_eval(p, g);
        expect(seminorm_eval(p, f * g) == ef * eg, "seminorm not multiplicative");
        LogValue es = seminorm_eval(p, f + g);
        expect(es <= max(ef, eg), "ultrametric inequality failed");
        if (!(ef == eg))
            expect(es == max(ef, eg), "strict-max case must be an equality");
    }
}

// 3. Disk criterion vs the max-of-squares characterization, with
// re-verifiable witnesses on every negative verdict.
void check_real_oracle(Sampler& s) {
    for (int i = 0; i < 500; ++i) {
        BerkPoint p = (i % 2 == 0) ? s.real_disk() : s.nonreal_disk();
        RealnessCertificate cert = is_real_point(p);

        bool squares_verdict = true;
        if (cert.verdict) {
            for (int k = 0; k < 12; ++k) {
                std::vector<PolyK> fs;
                int q = static_cast<int>(s.uniform(1, 3));
                for (int j = 0; j < q; ++j) fs.push_back(s.poly_k(3));
                MaxSquaresReport rep = check_max_squares(p, fs);
                if (!rep.holds) squares_verdict = false;
            }
            // The canonical family of the criterion must also hold.
            std::vector<PolyK> canon;
            canon.push_back(PolyK({-p.center().re, PuiseuxNumber::constant(Rational(1))}));
            canon.push_back(PolyK::constant(p.center().im));
            if (!check_max_squares(p, canon).holds) squares_verdict = false;
        } else {
            expect(cert.violating_family.has_value(), "negative verdict without witness");
            MaxSquaresReport again = check_max_squares(p, cert.violating_family->family);
            expect(!again.holds, "witness family does not re-verify");
            expect(again.lhs == cert.violating_family->lhs, "witness lhs drifted");
            expect(again.rhs == cert.violating_family->rhs, "witness rhs drifted");
            squares_verdict = false;
        }
        expect(cert.verdict == squares_verdict, "disk criterion disagrees with oracle");
        expect(cert.verdict == points_equal(galois_conjugate(p), p),
               "verdict disagrees with Galois fixedness");
    }
}

// 4. The action is isometric and preserves the real subtree.
void check_isometry_invariance(Sampler& s) {
    for (int i = 0; i < 500; ++i) {
        MoebiusMap g = s.moebius_k();
        BerkPoint p = s.real_disk(), q = s.real_disk();
        BerkPoint gp = apply_disk(g, p), gq = apply_disk(g, q);
        expect(dan_distance(gp, gq) == dan_distance(p, q), "action not isometric");
        expect(is_real_point(gp).verdict, "image of a real point not real");
    }
}

// 5. Boundary-sampling oracle for the image-of-disk radius formula.
void check_disk_image_oracle(Sampler& s) {
    int done = 0;
    while (done < 200) {
        MoebiusMap g = s.moebius_k();
        BerkPoint p = s.disk();
        if (!g.c().is_exact_zero()) {
            // Keep only pole-strictly-outside instances.
            ComplexPuiseux denom = g.c() * p.center() + g.d();
            if (denom.is_exact_zero()) continue;
            LogValue pole_gap = log_abs(denom);
            LogValue threshold = LogValue::finite(log_abs(g.c()).exponent + p.log_radius());
            if (pole_gap <= threshold) continue;
        }
        BerkPoint image = apply_disk(g, p);
        // The samples only need to resolve the image points down to the
        // expected radius.
        Rational prec = image.log_radius() - Rational(8);
        for (int k = 0; k < 5; ++k) {
            ComplexPuiseux mu(PuiseuxNumber::monomial(s.nonzero_rational(), p.log_radius()),
                              s.coin() ? PuiseuxNumber::monomial(s.rational(), p.log_radius())
                                       : PuiseuxNumber());
            BerkPoint w = apply_point(g, BerkPoint::type1(p.center() + mu), prec);
            BerkPoint v = apply_point(g, BerkPoint::type1(p.center()), prec);
            expect(!w.is_infinity() && !v.is_infinity(), "boundary point hit the pole");
            LogValue moved = log_abs(w.center() - v.center());
            expect(moved == LogValue::finite(image.log_radius()),
                   "boundary sample disagrees with the image radius");
        }
        ++done;
    }
}

// 6. Degeneration convergence on the shipped example suite.
void check_degeneration(int jobs) {
    for (const RepTupleK& rep : shipped_example_reps()) {
        DegenerationJob job;
        job.rep = rep;
        job.words = {"a", "aa", "aaa", "aaaa"};
        job.t_grid = {1e2, 1e4, 1e6};
        auto rows = convergence_table(job, jobs);
        for (std::size_t i = 0; i < rows.size(); i += 3) {
            const auto& r2 = rows[i];
            const auto& r4 = rows[i + 1];
            const auto& r6 = rows[i + 2];
            expect(!r6.overflow, "overflow in the convergence table");
            expect(r6.gap <= 1e-2,
                   "gap at t=1e6 too large for word " + r6.word + ": " + d2s(r6.gap));
            expect(r4.gap <= r2.gap + 1e-12, "gap not decreasing (1e2 -> 1e4), word " + r4.word);
            expect(r6.gap <= r4.gap + 1e-12, "gap not decreasing (1e4 -> 1e6), word " + r6.word);
        }
    }
}

// 7. Cartan multiplicative distance laws for n in {2, 3, 4}.
void check_cartan_laws(Sampler& s) {
    for (int i = 0; i < 1000; ++i) {
        int n = 2 + i % 3;
        Matrix A = s.spd(n), B = s.spd(n), C = s.spd(n);
        double dab = d_delta(A, B), dbc = d_delta(B, C), dac = d_delta(A, C);
        expect(dac <= dab * dbc * (1.0 + 1e-9), "submultiplicativity failed");
        expect(std::fabs(d_delta(A, A) - 1.0) <= 1e-9, "d(A, A) != 1");
        expect(dab > 1.0 + 1e-9, "distinct points at distance 1");
        Matrix g = s.sl(n);
        double moved = d_delta(g * A * transpose(g), g * B * transpose(g));
        expect(std::fabs(moved / dab - 1.0) <= 1e-9, "congruence invariance failed");
    }
}

// 8. Minimal-vector residuals and the two linear-algebra bounds.
void check_minvec_and_bounds(Sampler& s) {
    for (int i = 0; i < 200; ++i) {
        int n = 2 + i % 3;
        // Normal generators (rotations, symmetric matrices) form minimal
        // tuples; SO(n)-conjugation keeps them minimal.
        Matrix sym = s.spd(n);
        Matrix rot = s.rotation(n);
        RepTupleR rep{n, {"a", "b"}, {sym, rot}};
        MinimalVectorReport ok = is_minimal_vector(rep, 1e-10);
        expect(ok.ok, "constructed minimal tuple has residual " + d2s(ok.residual));

        Matrix k = s.rotation(n);
        RepTupleR conj{n,
                       {"a", "b"},
                       {k * sym * transpose(k), k * rot * transpose(k)}};
        expect(is_minimal_vector(conj, 1e-10).ok, "SO(n)-conjugate lost minimality");
    }

    Matrix unip(2);
    unip.at(0, 0) = 1;
    unip.at(0, 1) = 1;
    unip.at(1, 1) = 1;
    RepTupleR bad{2, {"a"}, {unip}};
    MinimalVectorReport rep = is_minimal_vector(bad, 1e-10);
    expect(!rep.ok && rep.residual > 1.0, "unipotent counterexample not flagged");

    for (int i = 0; i < 1000; ++i) {
        int n = 2 + i % 3;
        Matrix g = s.sl(n);
        Matrix A = g * transpose(g);
        MatrixBoundsReport b = matrix_bounds_check(A);
        expect(b.entries_ok, "entry bound |A_ij| <= lambda_1 failed");
        expect(b.minors_ok, "minor bound lambda_n^l <= det(A[l]) failed");
    }
}

// 9. Membership truth table of the five prime-cone variants against the
// three interval families of basic opens.
void check_spectrum_tables() {
    auto run_table = [](const PuiseuxNumber& s_val, const PuiseuxNumber& t_val,
                        const std::vector<PuiseuxNumber>& samples) {
        const PuiseuxNumber one = PuiseuxNumber::constant(Rational(1));
        PolyK z_minus_s({-s_val, one});
        PolyK t_minus_z({t_val, -one});
        std::vector<PolyK> band = {z_minus_s, t_minus_z};
        std::vector<PolyK> ray_up = {z_minus_s};
        std::vector<PolyK> ray_down = {t_minus_z};

        // samples = {below s, s, between, t, above t}
        const PuiseuxNumber& u0 = samples[0];
        const PuiseuxNumber& u2 = samples[2];
        const PuiseuxNumber& u4 = samples[4];

        struct Row {
            SpectrumLinePoint p;
            bool in_band, in_up, in_down;
        };
        std::vector<Row> rows = {
            {SpectrumLinePoint::point(u0), false, false, true},
            {SpectrumLinePoint::point(s_val), false, false, true},
            {SpectrumLinePoint::point(u2), true, true, true},
            {SpectrumLinePoint::point(t_val), false, true, false},
            {SpectrumLinePoint::point(u4), false, true, false},
            {SpectrumLinePoint::right_of(u0), false, false, true},
            {SpectrumLinePoint::right_of(s_val), true, true, true},
            {SpectrumLinePoint::right_of(u2), true, true, true},
            {SpectrumLinePoint::right_of(t_val), false, true, false},
            {SpectrumLinePoint::right_of(u4), false, true, false},
            {SpectrumLinePoint::left_of(u0), false, false, true},
            {SpectrumLinePoint::left_of(s_val), false, false, true},
            {SpectrumLinePoint::left_of(u2), true, true, true},
            {SpectrumLinePoint::left_of(t_val), true, true, true},
            {SpectrumLinePoint::left_of(u4), false, true, false},
            {SpectrumLinePoint::plus_inf(), false, true, false},
            {SpectrumLinePoint::minus_inf(), false, false, true},
        };
        for (const auto& row : rows) {
            expect(in_basic_open(row.p, band) == row.in_band, "band membership wrong");
            expect(in_basic_open(row.p, ray_up) == row.in_up, "upper ray membership wrong");
            expect(in_basic_open(row.p, ray_down) == row.in_down, "lower ray membership wrong");
        }
    };

    auto lit = [](const char* text) { return parse_puiseux(text); };
    run_table(lit("1"), lit("3"), {lit("0"), lit("1"), lit("2"), lit("3"), lit("4")});
    // Same table with infinitely large endpoints.
    run_table(lit("x"), lit("2*x"),
              {lit("1"), lit("x"), lit("3/2*x"), lit("2*x"), lit("x^(2)")});
}

// 10. Archimedean exhaustion: minimal ball index against a
// leading-exponent oracle, and monotonicity.
void check_big_ball(Sampler& s) {
    for (int i = 0; i < 500; ++i) {
        int count = static_cast<int>(s.uniform(1, 4));
        std::vector<PuiseuxNumber> v;
        for (int k = 0; k < count; ++k) v.push_back(s.nonzero_puiseux());

        unsigned got = big_ball_index(v);

        // Oracle: the squares cannot cancel, so the sum's leading exponent
        // and coefficient come straight from the inputs' leading terms.
        Rational lam;
        Rational coeff(0);
        bool first = true;
        for (const auto& val : v) {
            Rational e = 2 * val.leading_exponent();
            if (first || e > lam) {
                lam = e;
                first = false;
            }
        }
        for (const auto& val : v)
            if (2 * val.leading_exponent() == lam)
                coeff += val.leading_coefficient() * val.leading_coefficient();

        unsigned want;
        if (sign_of(lam) < 0) {
            want = 0;
        } else if (lam.get_den() != 1) {
            want = static_cast<unsigned>(floor_of(lam).get_num().get_ui()) + 1;
        } else if (coeff < 1) {
            want = static_cast<unsigned>(lam.get_num().get_ui());
        } else if (coeff > 1) {
            want = static_cast<unsigned>(lam.get_num().get_ui()) + 1;
        } else {
            // Tie at the leading order: the next orders decide.
            PuiseuxNumber sum;
            for (const auto& val : v) sum = sum + val * val;
            PuiseuxNumber rem = sum - PuiseuxNumber::monomial(Rational(1), lam);
            unsigned base = static_cast<unsigned>(lam.get_num().get_ui());
            want = (!rem.terms().empty() && rem.sign() < 0) ? base : base + 1;
        }
        expect(got == want, "big_ball_index disagrees with the oracle");

        // Monotone under coordinate-wise increase of nonnegative tuples.
        std::vector<PuiseuxNumber> absd, larger;
        for (const auto& val : v) {
            PuiseuxNumber a = val.sign() < 0 ? -val : val;
            absd.push_back(a);
            larger.push_back(a + PuiseuxNumber::monomial(Rational(s.uniform(0, 3)),
                                                         Rational(s.uniform(0, 2))));
        }
        expect(big_ball_index(absd) <= big_ball_index(larger),
               "big_ball_index not monotone");
    }
}

} // namespace

std::vector<CheckResult> run_check_suite(std::ostream& out, std::uint64_t seed, int jobs) {
    struct Entry {
        std::string name;
        double budget_seconds; // 0 = unbounded
        std::function<void(Sampler&)> run;
    };
    const std::vector<Entry> entries = {
        {"exact R-tree axioms (1000 samples)", 10.0,
         [](Sampler& s) { check_tree_axioms(s); }},
        {"seminorm multiplicativity + ultrametric (1000 samples)", 10.0,
         [](Sampler& s) { check_seminorm_laws(s); }},
        {"real-subtree oracle equivalence (500 disks)", 20.0,
         [](Sampler& s) { check_real_oracle(s); }},
        {"PSL2 isometry + real-subtree invariance (500 samples)", 0.0,
         [](Sampler& s) { check_isometry_invariance(s); }},
        {"disk-image boundary oracle (200 instances)", 0.0,
         [](Sampler& s) { check_disk_image_oracle(s); }},
        {"degeneration convergence (3 representations)", 30.0,
         [jobs](Sampler&) { check_degeneration(jobs); }},
        {"Cartan distance laws, n in {2,3,4} (1000 samples)", 0.0,
         [](Sampler& s) { check_cartan_laws(s); }},
        {"minimal vectors + matrix bounds", 0.0,
         [](Sampler& s) { check_minvec_and_bounds(s); }},
        {"real-spectrum membership tables", 0.0, [](Sampler&) { check_spectrum_tables(); }},
        {"Archimedean exhaustion index (500 tuples)", 0.0,
         [](Sampler& s) { check_big_ball(s); }},
    };

    std::vector<CheckResult> results;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        Sampler sampler(seed + i);
        CheckResult r;
        r.name = entries[i].name;
        auto start = std::chrono::steady_clock::now();
        try {
            entries[i].run(sampler);
            r.passed = true;
        } catch (const Failure& f) {
            r.passed = false;
            r.detail = f.message;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        auto stop = std::chrono::steady_clock::now();
        r.seconds = std::chrono::duration<double>(stop - start).count();
        if (r.passed && entries[i].budget_seconds > 0.0 &&
            r.seconds > entries[i].budget_seconds) {
            r.passed = false;
            r.detail = "runtime budget exceeded";
        }
        out << (r.passed ? "PASS" : "FAIL") << " [" << (i + 1) << "/" << entries.size()
            << "] " << r.name;
        if (!r.passed) out << " -- " << r.detail;
        char buf[32];
        std::snprintf(buf, sizeof(buf), " (%.2fs)", r.seconds);
        out << buf << "\n";
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

} // namespace berkline
