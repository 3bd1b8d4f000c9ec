#pragma once

#include <string>
#include <vector>

#include "berkline/moebius.hpp"
#include "berkline/slnr.hpp"

namespace berkline {

// A generating tuple of SL_2(K) matrices (determinant exactly 1 in K).
struct RepTupleK {
    std::vector<std::string> names;
    std::vector<MoebiusMap> mats;

    const MoebiusMap& generator(const std::string& name) const;
};

RepTupleK make_rep_k(std::vector<std::string> names, std::vector<MoebiusMap> mats);

MoebiusMap evaluate_word(const RepTupleK& rep, const std::vector<WordLetter>& word);

// Exact tree translation length of rho(word) for each word.
std::vector<std::pair<std::string, Rational>> translation_spectrum(
    const RepTupleK& rep, const std::vector<std::string>& words);

struct SpecializedRep {
    RepTupleR rep;
    double max_det_drift = 0.0; // worst |det - 1| before renormalization
    bool overflow = false;
};

// Entry-wise evaluation at x = t, then determinant renormalization.
SpecializedRep specialize_rep(const RepTupleK& rep, double t);

struct DegenerationJob {
    RepTupleK rep;
    std::vector<std::string> words;
    std::vector<double> t_grid;      // strictly increasing, > 1
    Matrix basepoint;                // SPD, det 1; empty -> identity
};

struct ConvergenceRow {
    std::string word;
    double t = 0.0;
    double rescaled = 0.0; // log d_delta(base, rho_t(w).base) / log t
    Rational limit;        // 2 * dan(Gauss, rho(w).Gauss), exact
    double gap = 0.0;      // |rescaled - limit|
    bool overflow = false;
};

// The desk-scale convergence experiment: for each word and each t, the
// rescaled Cartan displacement of the specialized representation against
// twice the exact displacement of the Gauss point on the tree.  Rows come
// back sorted by word then t; rows are independent and computed on
// `threads` workers when threads > 1.
std::vector<ConvergenceRow> convergence_table(const DegenerationJob& job, int threads = 1);

// The three-representation example family exercised by the acceptance
// suite: diagonal, upper-triangular, and a generic SL_2(K) matrix.
std::vector<RepTupleK> shipped_example_reps();

} // namespace berkline
