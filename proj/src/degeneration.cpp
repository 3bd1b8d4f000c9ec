#include "berkline/degeneration.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace berkline {

const MoebiusMap& RepTupleK::generator(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return mats[i];
    throw out_of_range_error("unknown generator '" + name + "'");
}

RepTupleK make_rep_k(std::vector<std::string> names, std::vector<MoebiusMap> mats) {
    if (names.size() != mats.size())
        throw out_of_range_error("generator names and matrices differ in count");
    const PuiseuxNumber one = PuiseuxNumber::constant(Rational(1));
    for (const auto& g : mats) {
        if (!g.entries_real())
            throw invariant_violation("degeneration representations live over K");
        if (!(g.det().re == one) || !g.det().im.is_exact_zero())
            throw invariant_violation("generator determinant must be exactly 1");
    }
    return RepTupleK{std::move(names), std::move(mats)};
}

MoebiusMap evaluate_word(const RepTupleK& rep, const std::vector<WordLetter>& word) {
    MoebiusMap m = MoebiusMap::identity();
    for (const auto& letter : word) {
        const MoebiusMap& g = rep.mats[letter.index];
        m = m * (letter.inverse ? g.inverse() : g);
    }
    return m;
}

std::vector<std::pair<std::string, Rational>> translation_spectrum(
    const RepTupleK& rep, const std::vector<std::string>& words) {
    std::vector<std::pair<std::string, Rational>> out;
    out.reserve(words.size());
    for (const auto& w : words) {
        MoebiusMap g = evaluate_word(rep, parse_word(w, rep.names));
        out.emplace_back(w, translation_length(g));
    }
    return out;
}

SpecializedRep specialize_rep(const RepTupleK& rep, double t) {
    if (!(t > 1.0)) throw out_of_range_error("specialization point must exceed 1");
    SpecializedRep out;
    out.rep.n = 2;
    out.rep.names = rep.names;
    for (const auto& g : rep.mats) {
        Matrix m(2);
        const PuiseuxNumber* entries[4] = {&g.a().re, &g.b().re, &g.c().re, &g.d().re};
        for (int k = 0; k < 4; ++k) {
            SpecializeResult s = specialize(*entries[k], t);
            out.overflow = out.overflow || s.overflow;
            m.a[k] = s.value;
        }
        double dt = det(m);
        out.max_det_drift = std::max(out.max_det_drift, std::fabs(dt - 1.0));
        if (!(dt > 0.0)) throw non_unit_determinant();
        double scale = 1.0 / std::sqrt(dt);
        for (double& v : m.a) v *= scale;
        out.rep.mats.push_back(std::move(m));
    }
    return out;
}

namespace {

// d_delta for 2x2 determinant-one SPD pairs in log scale, stable for the
// huge values the t-grid produces: the relative eigenvalues are mu, 1/mu
// with mu + 1/mu = tr(A^{-1} B), so log d_delta = 2 log mu.
double log_d_delta_2x2(const Matrix& A, const Matrix& B) {
    double T = trace(inverse(A) * B);
    if (!(T >= 2.0)) T = 2.0; // rounding guard; T >= 2 for SPD det-1 pairs
    double mu = 0.5 * (T + std::sqrt(T * T - 4.0));
    return 2.0 * std::log(mu);
}

ConvergenceRow make_row(const DegenerationJob& job, const std::string& word,
                        const std::vector<WordLetter>& letters, double t,
                        const Rational& limit) {
    ConvergenceRow row;
    row.word = word;
    row.t = t;
    row.limit = limit;

    SpecializedRep sp = specialize_rep(job.rep, t);
    Matrix g = evaluate_word(sp.rep, letters);
    Matrix base = job.basepoint.n == 2 ? job.basepoint : Matrix::eye(2);
    Matrix moved = g * base * transpose(g);
    double logd = log_d_delta_2x2(base, moved);
    row.rescaled = logd / std::log(t);
    row.gap = std::fabs(row.rescaled - limit.get_d());
    row.overflow = sp.overflow || !std::isfinite(row.rescaled);
    return row;
}

} // namespace

std::vector<ConvergenceRow> convergence_table(const DegenerationJob& job, int threads) {
    if (job.t_grid.empty()) throw out_of_range_error("empty t grid");
    for (std::size_t i = 0; i < job.t_grid.size(); ++i) {
        if (!(job.t_grid[i] > 1.0)) throw out_of_range_error("t grid entries must exceed 1");
        if (i > 0 && !(job.t_grid[i] > job.t_grid[i - 1]))
            throw out_of_range_error("t grid must be strictly increasing");
    }

    struct Task {
        std::string word;
        std::vector<WordLetter> letters;
        double t;
        Rational limit;
    };
    std::vector<Task> tasks;
    std::vector<std::string> words = job.words;
    std::sort(words.begin(), words.end());
    const BerkPoint gauss = BerkPoint::gauss();
    for (const auto& w : words) {
        auto letters = parse_word(w, job.rep.names);
        MoebiusMap g = evaluate_word(job.rep, letters);
        BerkPoint image = apply_disk(g, gauss);
        Rational limit = 2 * dan_distance(gauss, image);
        for (double t : job.t_grid) tasks.push_back({w, letters, t, limit});
    }

    std::vector<ConvergenceRow> rows(tasks.size());
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            rows[i] = make_row(job, tasks[i].word, tasks[i].letters, tasks[i].t,
                               tasks[i].limit);
    };
    if (threads <= 1 || tasks.size() < 2) {
        worker(0, tasks.size());
    } else {
        std::size_t nthreads = std::min<std::size_t>(threads, tasks.size());
        std::vector<std::thread> pool;
        std::size_t chunk = (tasks.size() + nthreads - 1) / nthreads;
        for (std::size_t k = 0; k < nthreads; ++k) {
            std::size_t begin = k * chunk;
            std::size_t end = std::min(tasks.size(), begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::vector<RepTupleK> shipped_example_reps() {
    auto lit = [](const char* text) { return parse_puiseux(text); };
    std::vector<RepTupleK> reps;
    // Diagonal family: the Gauss point rides the axis.
    reps.push_back(make_rep_k(
        {"a"}, {MoebiusMap::from_real(lit("x"), lit("0"), lit("0"), lit("x^(-1)"))}));
    // Upper triangular: same trace, off-axis bounded part.
    reps.push_back(make_rep_k(
        {"a"}, {MoebiusMap::from_real(lit("x"), lit("1"), lit("0"), lit("x^(-1)"))}));
    // Generic entries, determinant exactly 1, pole away from the Gauss disk.
    reps.push_back(make_rep_k(
        {"a"}, {MoebiusMap::from_real(lit("x"), lit("x^(2)"), lit("x^(-3)"),
                                      lit("x^(-1) + x^(-2)"))}));
    return reps;
}

} // namespace berkline
