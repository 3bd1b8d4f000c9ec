#include "berkline/slnr.hpp"

#include <algorithm>
#include <cmath>

namespace berkline {

Matrix Matrix::eye(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.n != y.n) throw invariant_violation("matrix size mismatch");
    Matrix r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            double xv = x.at(i, k);
            if (xv == 0.0) continue;
            for (int j = 0; j < x.n; ++j) r.at(i, j) += xv * y.at(k, j);
        }
    return r;
}

Matrix transpose(const Matrix& x) {
    Matrix r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) r.at(i, j) = x.at(j, i);
    return r;
}

Matrix inverse(const Matrix& x) {
    int n = x.n;
    Matrix a = x;
    Matrix inv = Matrix::eye(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a.at(r, col)) > std::fabs(a.at(pivot, col))) pivot = r;
        if (a.at(pivot, col) == 0.0) throw invariant_violation("singular matrix");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        double p = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            double f = a.at(r, col);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

double det(const Matrix& x) {
    int n = x.n;
    Matrix a = x;
    double d = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a.at(r, col)) > std::fabs(a.at(pivot, col))) pivot = r;
        if (a.at(pivot, col) == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            double f = a.at(r, col) / a.at(col, col);
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
        }
    }
    return d;
}

double frobenius_norm(const Matrix& x) {
    double s = 0.0;
    for (double v : x.a) s += v * v;
    return std::sqrt(s);
}

double trace(const Matrix& x) {
    double s = 0.0;
    for (int i = 0; i < x.n; ++i) s += x.at(i, i);
    return s;
}

double leading_minor_det(const Matrix& x, int j) {
    Matrix sub(j);
    for (int r = 0; r < j; ++r)
        for (int c = 0; c < j; ++c) sub.at(r, c) = x.at(r, c);
    return det(sub);
}

EigenSym sym_eigen(const Matrix& x) {
    const int n = x.n;
    Matrix a = x;
    Matrix v = Matrix::eye(n);
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a.at(i, j) * a.at(i, j);
        if (off < 1e-30) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a.at(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                double app = a.at(p, p), aqq = a.at(q, q);
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v.at(k, p), vkq = v.at(k, q);
                    v.at(k, p) = c * vkp - s * vkq;
                    v.at(k, q) = s * vkp + c * vkq;
                }
            }
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a.at(i, i) > a.at(j, j); });
    EigenSym e;
    e.values.resize(n);
    e.vectors = Matrix(n);
    for (int k = 0; k < n; ++k) {
        e.values[k] = a.at(order[k], order[k]);
        for (int r = 0; r < n; ++r) e.vectors.at(r, k) = v.at(r, order[k]);
    }
    return e;
}

std::vector<double> sym_eigenvalues(const Matrix& x) {
    return sym_eigen(x).values;
}

const Matrix& RepTupleR::generator(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return mats[i];
    throw out_of_range_error("unknown generator '" + name + "'");
}

std::vector<WordLetter> parse_word(const std::string& word,
                                   const std::vector<std::string>& names) {
    std::vector<WordLetter> letters;
    for (std::size_t i = 0; i < word.size(); ++i) {
        char c = word[i];
        if (c == '\'') throw out_of_range_error("dangling inverse marker in word");
        int idx = -1;
        for (std::size_t k = 0; k < names.size(); ++k)
            if (names[k].size() == 1 && names[k][0] == c) idx = static_cast<int>(k);
        if (idx < 0)
            throw out_of_range_error(std::string("unknown generator letter '") + c + "'");
        bool inv = i + 1 < word.size() && word[i + 1] == '\'';
        if (inv) ++i;
        letters.push_back({idx, inv});
    }
    return letters;
}

Matrix evaluate_word(const RepTupleR& rep, const std::vector<WordLetter>& word) {
    Matrix m = Matrix::eye(rep.n);
    for (const auto& letter : word) {
        const Matrix& g = rep.mats[letter.index];
        m = m * (letter.inverse ? inverse(g) : g);
    }
    return m;
}

MinimalVectorReport is_minimal_vector(const RepTupleR& rep, double tol) {
    Matrix sum(rep.n);
    for (const auto& g : rep.mats) {
        Matrix gt = transpose(g);
        Matrix comm = g * gt;
        Matrix other = gt * g;
        for (std::size_t i = 0; i < sum.a.size(); ++i) sum.a[i] += comm.a[i] - other.a[i];
    }
    MinimalVectorReport r;
    r.residual = frobenius_norm(sum);
    r.ok = r.residual <= tol;
    return r;
}

namespace {

Matrix sym_half_inverse(const Matrix& A) {
    EigenSym e = sym_eigen(A);
    for (double v : e.values)
        if (!(v > 0.0)) throw not_positive_definite();
    Matrix d(A.n);
    for (int i = 0; i < A.n; ++i) d.at(i, i) = 1.0 / std::sqrt(e.values[i]);
    return e.vectors * d * transpose(e.vectors);
}

} // namespace

CartanDiag cartan_delta(const Matrix& A, const Matrix& B) {
    if (A.n != B.n) throw invariant_violation("matrix size mismatch");
    Matrix half = sym_half_inverse(A);
    Matrix m = half * B * half;
    // Symmetrize away the rounding skew before the eigen solve.
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) {
            double s = 0.5 * (m.at(i, j) + m.at(j, i));
            m.at(i, j) = s;
            m.at(j, i) = s;
        }
    EigenSym e = sym_eigen(m);
    for (double v : e.values)
        if (!(v > 0.0)) throw not_positive_definite();
    return CartanDiag{std::move(e.values)};
}

double d_delta(const Matrix& A, const Matrix& B) {
    CartanDiag diag = cartan_delta(A, B);
    return diag.lambdas.front() / diag.lambdas.back();
}

double eta_norm(const RepTupleR& rep) {
    double s = 0.0;
    for (const auto& g : rep.mats) s += trace(transpose(g) * g);
    return s;
}

CoverPoint cover_lift(const Matrix& A) {
    CoverPoint p;
    p.A = A;
    p.t.resize(A.n - 1);
    for (int j = 1; j < A.n; ++j) {
        double m = leading_minor_det(A, j);
        if (!(m > 0.0)) throw not_positive_definite();
        p.t[j - 1] = 1.0 / std::sqrt(m);
    }
    return p;
}

CoverPoint cover_lift_and_act(const Matrix& g, const CoverPoint& p) {
    CoverPoint q;
    q.A = g * p.A * transpose(g);
    q.t.resize(p.t.size());
    for (std::size_t j = 1; j <= p.t.size(); ++j) {
        double before = leading_minor_det(p.A, static_cast<int>(j));
        double after = leading_minor_det(q.A, static_cast<int>(j));
        if (!(after > 0.0)) throw not_positive_definite();
        q.t[j - 1] = std::sqrt(before / after) * p.t[j - 1];
    }
    return q;
}

bool in_U_k(const RepTupleR& rep, const CoverPoint& p, unsigned k) {
    double lhs = d_delta(Matrix::eye(rep.n), p.A);
    return lhs < std::pow(eta_norm(rep), static_cast<double>(k));
}

DisplacementReport check_displacement_bound(const RepTupleR& rep,
                                            const std::vector<WordLetter>& word,
                                            const CoverPoint& p) {
    const Matrix id = Matrix::eye(rep.n);
    Matrix g = evaluate_word(rep, word);
    CoverPoint moved = cover_lift_and_act(g, p);

    DisplacementReport r;
    r.lhs = d_delta(id, moved.A);
    double base = d_delta(id, p.A);

    double per_letter = 1.0;
    for (const auto& letter : word) {
        const Matrix& gen = rep.mats[letter.index];
        Matrix m = letter.inverse ? inverse(gen) : gen;
        per_letter *= std::pow(trace(transpose(m) * m), rep.n);
    }
    r.rhs = per_letter * base;
    r.ok = r.lhs <= r.rhs * (1.0 + 1e-9);

    double eta = eta_norm(rep);
    r.stated_rhs =
        std::pow(eta, 0.5 * rep.n * static_cast<double>(word.size())) * base;
    r.stated_ok = r.lhs <= r.stated_rhs * (1.0 + 1e-9);
    return r;
}

MatrixBoundsReport matrix_bounds_check(const Matrix& A) {
    MatrixBoundsReport r;
    std::vector<double> lam = sym_eigenvalues(A);
    double top = std::fabs(lam.front());
    double bottom = lam.back();

    r.entries_ok = true;
    r.max_entry_slack = -top; // worst violation |A_ij| - lambda_1 over entries
    for (double v : A.a) {
        r.max_entry_slack = std::max(r.max_entry_slack, std::fabs(v) - top);
        if (std::fabs(v) > top * (1.0 + 1e-9) + 1e-12) r.entries_ok = false;
    }

    r.minors_ok = true;
    r.max_minor_slack = -1e300; // worst violation lambda_n^l - det(A[l])
    for (int l = 1; l <= A.n; ++l) {
        double minor = leading_minor_det(A, l);
        double bound = std::pow(bottom, l);
        r.max_minor_slack = std::max(r.max_minor_slack, bound - minor);
        if (minor < bound - std::max(1e-9 * std::fabs(bound), 1e-12)) r.minors_ok = false;
    }
    return r;
}

} // namespace berkline
