#include "berkline/real_spectrum.hpp"

namespace berkline {

SpectrumLinePoint SpectrumLinePoint::point(PuiseuxNumber u) {
    SpectrumLinePoint p;
    p.kind = Kind::point;
    p.u = std::move(u);
    return p;
}

SpectrumLinePoint SpectrumLinePoint::right_of(PuiseuxNumber u) {
    SpectrumLinePoint p = point(std::move(u));
    p.kind = Kind::right_of;
    return p;
}

SpectrumLinePoint SpectrumLinePoint::left_of(PuiseuxNumber u) {
    SpectrumLinePoint p = point(std::move(u));
    p.kind = Kind::left_of;
    return p;
}

SpectrumLinePoint SpectrumLinePoint::plus_inf() {
    SpectrumLinePoint p;
    p.kind = Kind::plus_inf;
    return p;
}

SpectrumLinePoint SpectrumLinePoint::minus_inf() {
    SpectrumLinePoint p;
    p.kind = Kind::minus_inf;
    return p;
}

SpectrumLinePoint SpectrumLinePoint::free_cut(std::vector<PuiseuxNumber> ladder, int budget) {
    if (ladder.size() < 2)
        throw out_of_range_error("a free-cut ladder needs at least two rungs");
    bool increasing = ladder[1] > ladder[0];
    for (std::size_t i = 1; i < ladder.size(); ++i) {
        bool step_up = ladder[i] > ladder[i - 1];
        if (step_up != increasing)
            throw invariant_violation("free-cut ladder must be strictly monotone");
    }
    SpectrumLinePoint p;
    p.kind = Kind::free_cut;
    p.ladder = std::move(ladder);
    p.budget = budget;
    return p;
}

bool operator==(const SpectrumLinePoint& a, const SpectrumLinePoint& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case SpectrumLinePoint::Kind::plus_inf:
        case SpectrumLinePoint::Kind::minus_inf:
            return true;
        case SpectrumLinePoint::Kind::free_cut: {
            if (a.ladder.size() != b.ladder.size()) return false;
            for (std::size_t i = 0; i < a.ladder.size(); ++i)
                if (!(a.ladder[i] == b.ladder[i])) return false;
            return true;
        }
        default:
            return a.u == b.u;
    }
}

namespace {

int sign_of_value(const PuiseuxNumber& v) { return v.sign(); }

int leading_sign(const PolyK& f) {
    if (f.is_zero()) return 0;
    return sign_of_value(f.leading());
}

int sign_one_sided(const PolyK& f, const PuiseuxNumber& u, bool from_right) {
    if (f.is_zero()) return 0;
    int j = multiplicity_at(f, u);
    PolyK g = f;
    for (int k = 0; k < j; ++k) g = g.deflate(u).first;
    int s = sign_of_value(g(u));
    if (!from_right && (j % 2 == 1)) s = -s;
    return s;
}

int sign_free_cut(const SpectrumLinePoint& p, const PolyK& f) {
    if (f.is_zero()) return 0;
    std::vector<int> signs;
    signs.reserve(p.ladder.size());
    for (const auto& rung : p.ladder) signs.push_back(sign_of_value(f(rung)));
    int tail = 0;
    for (std::size_t i = signs.size(); i-- > 0;) {
        if (signs[i] == 0 || signs[i] != signs.back()) break;
        ++tail;
    }
    if (signs.back() == 0 || tail < p.budget) throw ladder_exhausted();
    return signs.back();
}

} // namespace

int sign_at(const SpectrumLinePoint& p, const PolyK& f) {
    switch (p.kind) {
        case SpectrumLinePoint::Kind::point:
            return f.is_zero() ? 0 : sign_of_value(f(p.u));
        case SpectrumLinePoint::Kind::right_of:
            return sign_one_sided(f, p.u, true);
        case SpectrumLinePoint::Kind::left_of:
            return sign_one_sided(f, p.u, false);
        case SpectrumLinePoint::Kind::plus_inf:
            return leading_sign(f);
        case SpectrumLinePoint::Kind::minus_inf: {
            int s = leading_sign(f);
            if (s != 0 && f.degree() % 2 == 1) s = -s;
            return s;
        }
        case SpectrumLinePoint::Kind::free_cut:
            return sign_free_cut(p, f);
    }
    throw invariant_violation("unreachable spectrum point kind");
}

bool in_basic_open(const SpectrumLinePoint& p, std::span<const PolyK> fs) {
    for (const auto& f : fs)
        if (sign_at(p, f) != 1) return false;
    return true;
}

LineClassification classify(const SpectrumLinePoint& p) {
    LineClassification c;
    switch (p.kind) {
        case SpectrumLinePoint::Kind::point:
            c.closed = true;
            c.archimedean = true;
            c.closure = {p};
            break;
        case SpectrumLinePoint::Kind::free_cut:
            c.closed = true;
            c.archimedean = true;
            c.closure = {p};
            break;
        case SpectrumLinePoint::Kind::plus_inf:
        case SpectrumLinePoint::Kind::minus_inf:
            c.closed = true;
            c.archimedean = false;
            c.closure = {p};
            break;
        case SpectrumLinePoint::Kind::right_of:
        case SpectrumLinePoint::Kind::left_of:
            c.closed = false;
            c.archimedean = false;
            c.closure = {p, SpectrumLinePoint::point(p.u)};
            break;
    }
    return c;
}

} // namespace berkline
