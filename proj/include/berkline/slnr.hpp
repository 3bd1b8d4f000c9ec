#pragma once

#include <string>
#include <vector>

#include "berkline/errors.hpp"

namespace berkline {

// Dense real matrix, row-major, square.
struct Matrix {
    int n = 0;
    std::vector<double> a; // n * n

    Matrix() = default;
    Matrix(int dim, double fill = 0.0) : n(dim), a(static_cast<std::size_t>(dim) * dim, fill) {}

    static Matrix eye(int dim);

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& x);
Matrix inverse(const Matrix& x); // Gauss-Jordan with partial pivoting
double det(const Matrix& x);
double frobenius_norm(const Matrix& x);
double trace(const Matrix& x);
// det of the j-th leading principal minor (1 <= j <= n).
double leading_minor_det(const Matrix& x, int j);

struct EigenSym {
    std::vector<double> values; // descending
    Matrix vectors;             // columns, same order
};

// Cyclic Jacobi iteration for symmetric matrices; plenty for n <= 8.
EigenSym sym_eigen(const Matrix& x);
std::vector<double> sym_eigenvalues(const Matrix& x); // descending

// A generating tuple of SL_n(R) matrices with generator names (single
// characters; a trailing ' in a word selects the inverse).
struct RepTupleR {
    int n = 0;
    std::vector<std::string> names;
    std::vector<Matrix> mats;

    const Matrix& generator(const std::string& name) const;
};

struct WordLetter {
    int index = 0;
    bool inverse = false;
};

// "ab'a" -> a, b^{-1}, a.  Names must be single characters.
std::vector<WordLetter> parse_word(const std::string& word, const std::vector<std::string>& names);
Matrix evaluate_word(const RepTupleR& rep, const std::vector<WordLetter>& word);

struct MinimalVectorReport {
    bool ok = false;
    double residual = 0.0; // Frobenius norm of sum [A_i, A_i^T]
};

// Minimal-vector test: the tuple is a minimal vector iff sum of the
// commutators [A_i, A_i^T] vanishes.
MinimalVectorReport is_minimal_vector(const RepTupleR& rep, double tol);

struct CartanDiag {
    std::vector<double> lambdas; // descending, product 1
};

// Eigenvalues of A^{-1/2} B A^{-1/2}: the diagonal representative of the
// relative position of two determinant-one SPD matrices.
CartanDiag cartan_delta(const Matrix& A, const Matrix& B);

// Multiplicative Cartan distance lambda_1 / lambda_n >= 1.
double d_delta(const Matrix& A, const Matrix& B);

// sum_i tr(rho(gamma_i)^T rho(gamma_i)); >= n * s.
double eta_norm(const RepTupleR& rep);

// A point of the double cover: (A, t) with det(A[j]) t_j^2 = 1.
struct CoverPoint {
    Matrix A;
    std::vector<double> t; // n - 1 entries
};

CoverPoint cover_lift(const Matrix& A); // positive lift
CoverPoint cover_lift_and_act(const Matrix& g, const CoverPoint& p);

// Displacement ball membership: d_delta(Id, A) < eta(rep)^k, strict.
bool in_U_k(const RepTupleR& rep, const CoverPoint& p, unsigned k);

struct DisplacementReport {
    double lhs = 0.0;         // d_delta(Id, rho(word).A)
    double rhs = 0.0;         // per-letter bound prod_i tr(g_i^T g_i)^n * d_delta(Id, A)
    bool ok = false;          // lhs <= rhs (1 + 1e-9); provable, always expected
    double stated_rhs = 0.0;  // eta^{(n/2)|word|} * d_delta(Id, A)
    bool stated_ok = false;   // the same test against stated_rhs; can fail
};

// Both displacement bounds for a word acting on a cover point.  `rhs` uses
// the per-letter factors tr(g^T g)^n that the submultiplicativity chain
// actually yields (d_delta(Id, g.Id) = (lambda_1/lambda_n)^2 for the
// singular values of g); `stated_rhs` keeps the n/2 exponent for
// comparison and is not a bound (see tests for an explicit 2x2 failure).
DisplacementReport check_displacement_bound(const RepTupleR& rep,
                                            const std::vector<WordLetter>& word,
                                            const CoverPoint& p);

struct MatrixBoundsReport {
    bool entries_ok = false;   // |A_ij| <= lambda_1
    bool minors_ok = false;    // lambda_n^l <= det(A[l])
    double max_entry_slack = 0.0;
    double max_minor_slack = 0.0;
};

MatrixBoundsReport matrix_bounds_check(const Matrix& A);

} // namespace berkline
