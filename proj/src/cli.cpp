#include "berkline/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "berkline/checks.hpp"
#include "berkline/degeneration.hpp"
#include "berkline/real_locus.hpp"
#include "berkline/real_spectrum.hpp"
#include "berkline/serialize.hpp"

namespace berkline {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Options {
    std::string out_format; // "json" or "csv"; empty = per-command default
    long precision = kDefaultKnownBelow;
    int jobs = 1;
    std::uint64_t seed = 7;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int run_tree_metric(const Options& opt, const std::string& p_file, const std::string& q_file,
                    std::ostream& out) {
    BerkPoint p = parse_point(unwrap_job(parse_json_file(p_file), ""));
    BerkPoint q = parse_point(unwrap_job(parse_json_file(q_file), ""));
    Rational d = dan_distance(p, q);
    if (opt.out_format == "json")
        emit(out, Json{{"dan", to_string(d)}});
    else
        out << to_string(d) << "\n";
    return 0;
}

int run_tree_path(const Options&, const std::string& p_file, const std::string& q_file,
                  const std::string& s_text, std::ostream& out) {
    BerkPoint p = parse_point(unwrap_job(parse_json_file(p_file), ""));
    BerkPoint q = parse_point(unwrap_job(parse_json_file(q_file), ""));
    Rational s = parse_rational(s_text);
    emit(out, point_to_json(path_point(p, q, s)));
    return 0;
}

int run_seminorm(const Options&, const std::string& point_file, const std::string& poly_file,
                 std::ostream& out) {
    BerkPoint p = parse_point(unwrap_job(parse_json_file(point_file), ""));
    PolyF f = parse_poly_f(unwrap_job(parse_json_file(poly_file), ""), "poly");
    emit(out, Json{{"seminorm", log_value_to_json(seminorm_eval(p, f))}});
    return 0;
}

int run_real_test(const Options&, const std::string& point_file, std::ostream& out) {
    BerkPoint p = parse_point(unwrap_job(parse_json_file(point_file), ""));
    emit(out, realness_to_json(is_real_point(p)));
    return 0;
}

int run_orbit(const Options& opt, const std::string& map_file, const std::string& point_file,
              int steps, std::ostream& out) {
    MoebiusMap g = parse_moebius(unwrap_job(parse_json_file(map_file), ""), "matrix");
    BerkPoint p = parse_point(unwrap_job(parse_json_file(point_file), ""));
    if (!p.is_disk()) throw input_error("orbit needs a positive-diameter starting point");

    Json rows = Json::array();
    std::string csv = "step,displacement,from_start\n";
    BerkPoint current = p;
    for (int k = 0; k <= steps; ++k) {
        Rational displacement = dan_distance(current, apply(g, current));
        Rational from_start = dan_distance(p, current);
        rows.push_back(Json{{"step", k},
                            {"point", point_to_json(current)},
                            {"displacement", to_string(displacement)},
                            {"from_start", to_string(from_start)}});
        csv += std::to_string(k) + "," + to_string(displacement) + "," +
               to_string(from_start) + "\n";
        current = apply(g, current);
    }
    if (opt.out_format == "csv")
        out << csv;
    else
        emit(out, rows);
    return 0;
}

int run_translation_length(const Options& opt, const std::string& map_file, std::ostream& out) {
    MoebiusMap g = parse_moebius(unwrap_job(parse_json_file(map_file), ""), "matrix");
    Rational len = translation_length(g, Rational(opt.precision));
    if (opt.out_format == "json")
        emit(out, Json{{"translation_length", to_string(len)}});
    else
        out << to_string(len) << "\n";
    return 0;
}

int run_minvec_check(const Options&, const std::string& rep_file, double tol, std::ostream& out) {
    RepTupleR rep = parse_rep_r(unwrap_job(parse_json_file(rep_file), ""), "rep");
    MinimalVectorReport r = is_minimal_vector(rep, tol);
    emit(out, Json{{"ok", r.ok}, {"residual", r.residual}});
    return 0;
}

int run_cartan(const Options&, const std::string& a_file, const std::string& b_file,
               std::ostream& out) {
    Json ja = unwrap_job(parse_json_file(a_file), "");
    Json jb = unwrap_job(parse_json_file(b_file), "");
    if (!ja.is_array() || ja.empty()) throw input_error("matrix A: expected rows");
    int n = static_cast<int>(ja.size());
    Matrix A = parse_matrix_r(ja, n, "A");
    Matrix B = parse_matrix_r(jb, n, "B");
    CartanDiag diag = cartan_delta(A, B);
    Json lambdas = Json::array();
    for (double v : diag.lambdas) lambdas.push_back(v);
    emit(out, Json{{"lambdas", std::move(lambdas)},
                   {"d_delta", diag.lambdas.front() / diag.lambdas.back()}});
    return 0;
}

int run_spectrum_sign(const Options&, const std::string& point_file, const std::string& poly_file,
                      std::ostream& out) {
    SpectrumLinePoint p = parse_spectrum_point(unwrap_job(parse_json_file(point_file), ""));
    PolyK f = parse_poly_k(unwrap_job(parse_json_file(poly_file), ""), "poly");
    LineClassification c = classify(p);
    emit(out, Json{{"sign", sign_at(p, f)},
                   {"closed", c.closed},
                   {"archimedean", c.archimedean}});
    return 0;
}

int run_degenerate(const Options& opt, const std::string& job_file, std::ostream& out) {
    DegenerationJob job =
        parse_degeneration_job(unwrap_job(parse_json_file(job_file), "degenerate"), "job");
    auto rows = convergence_table(job, opt.jobs);
    if (opt.out_format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back(Json{{"word", r.word},
                               {"t", r.t},
                               {"rescaled", r.rescaled},
                               {"limit", to_string(r.limit)},
                               {"gap", r.gap},
                               {"overflow", r.overflow}});
        emit(out, arr);
    } else {
        out << "word,t,rescaled,limit,gap\n";
        for (const auto& r : rows)
            out << r.word << "," << fmt_double(r.t) << "," << fmt_double(r.rescaled) << ","
                << fmt_double(r.limit.get_d()) << "," << fmt_double(r.gap) << "\n";
    }
    return 0;
}

int run_check_suite_cmd(const Options& opt, std::ostream& out) {
    auto results = run_check_suite(out, opt.seed, opt.jobs);
    return all_passed(results) ? 0 : 4;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tools for the tree of a non-Archimedean real closed line"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    app.add_option("--precision", opt.precision,
                   "known_below exponent for truncated expansions (default -40)");
    app.add_option("--jobs", opt.jobs, "worker threads for independent rows/sweeps");
    app.add_option("--seed", opt.seed, "seed for property sweeps");
    std::string out_format;
    app.add_option("--out", out_format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string file_a, file_b, file_c;
    std::string arc_s;
    int orbit_steps = 8;
    double minvec_tol = 1e-10;

    auto* tree_metric = app.add_subcommand("tree-metric", "hyperbolic distance of two points");
    tree_metric->add_option("p", file_a)->required();
    tree_metric->add_option("q", file_b)->required();

    auto* tree_path = app.add_subcommand("tree-path", "point on the arc [p,q] at distance s");
    tree_path->add_option("p", file_a)->required();
    tree_path->add_option("q", file_b)->required();
    tree_path->add_option("s", arc_s)->required();

    auto* seminorm = app.add_subcommand("seminorm", "evaluate a point on a polynomial");
    seminorm->add_option("point", file_a)->required();
    seminorm->add_option("poly", file_b)->required();

    auto* real_test = app.add_subcommand("real-test", "realness certificate for a point");
    real_test->add_option("point", file_a)->required();

    auto* orbit = app.add_subcommand("orbit", "orbit of a point with displacement samples");
    orbit->add_option("matrix", file_a)->required();
    orbit->add_option("point", file_b)->required();
    orbit->add_option("--steps", orbit_steps);

    auto* translation = app.add_subcommand("translation-length", "tree translation length");
    translation->add_option("matrix", file_a)->required();

    auto* minvec = app.add_subcommand("minvec-check", "minimal-vector residual of a tuple");
    minvec->add_option("rep", file_a)->required();
    minvec->add_option("--tol", minvec_tol);

    auto* cartan = app.add_subcommand("cartan", "Cartan projection of an SPD pair");
    cartan->add_option("A", file_a)->required();
    cartan->add_option("B", file_b)->required();

    auto* spectrum = app.add_subcommand("spectrum-sign", "sign of a polynomial at a prime cone");
    spectrum->add_option("point", file_a)->required();
    spectrum->add_option("poly", file_b)->required();

    auto* degenerate = app.add_subcommand("degenerate", "specialize a representation on a t-grid");
    degenerate->add_option("job", file_a)->required();

    app.add_subcommand("check-suite", "run the shipped verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (tree_metric->parsed()) {
            opt.out_format = out_format.empty() ? "text" : out_format;
            return run_tree_metric(opt, file_a, file_b, out);
        }
        if (translation->parsed()) {
            opt.out_format = out_format.empty() ? "text" : out_format;
            return run_translation_length(opt, file_a, out);
        }
        opt.out_format = out_format.empty() ? "json" : out_format;
        if (tree_path->parsed()) return run_tree_path(opt, file_a, file_b, arc_s, out);
        if (seminorm->parsed()) return run_seminorm(opt, file_a, file_b, out);
        if (real_test->parsed()) return run_real_test(opt, file_a, out);
        if (orbit->parsed()) return run_orbit(opt, file_a, file_b, orbit_steps, out);
        if (minvec->parsed()) return run_minvec_check(opt, file_a, minvec_tol, out);
        if (cartan->parsed()) return run_cartan(opt, file_a, file_b, out);
        if (spectrum->parsed()) return run_spectrum_sign(opt, file_a, file_b, out);
        if (degenerate->parsed()) {
            if (out_format.empty()) opt.out_format = "csv";
            return run_degenerate(opt, file_a, out);
        }
        return run_check_suite_cmd(opt, out);
    } catch (const precision_exhausted& e) {
        err << "precision exhausted: " << e.what() << "\n";
        return 3;
    } catch (const ladder_exhausted& e) {
        err << "precision exhausted: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const syntax_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_violation& e) {
        err << "internal invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace berkline
