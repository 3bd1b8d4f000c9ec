#include "berkline/serialize.hpp"

#include <algorithm>
#include <fstream>

namespace berkline {

StrictObject::StrictObject(const Json& j, std::string where)
    : j_(j), where_(std::move(where)) {
    if (!j.is_object()) throw input_error(where_ + ": expected an object");
}

const Json& StrictObject::require(const std::string& key) {
    auto it = j_.find(key);
    if (it == j_.end()) throw input_error(where_ + ": missing field '" + key + "'");
    seen_.push_back(key);
    return *it;
}

const Json* StrictObject::optional(const std::string& key) {
    auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    seen_.push_back(key);
    return &*it;
}

void StrictObject::finish() {
    for (auto it = j_.begin(); it != j_.end(); ++it)
        if (std::find(seen_.begin(), seen_.end(), it.key()) == seen_.end())
            throw input_error(where_ + ": unknown field '" + it.key() + "'");
}

namespace {

std::string get_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw input_error(where + ": expected a string");
    return j.get<std::string>();
}

PuiseuxNumber parse_literal(const Json& j, const std::string& where) {
    try {
        return parse_puiseux(get_string(j, where));
    } catch (const syntax_error& e) {
        throw input_error(where + ": " + e.what());
    }
}

Rational parse_rational_field(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    try {
        return parse_rational(get_string(j, where));
    } catch (const syntax_error& e) {
        throw input_error(where + ": " + e.what());
    }
}

} // namespace

PuiseuxNumber parse_scalar_k(const Json& j, const std::string& where) {
    return parse_literal(j, where);
}

ComplexPuiseux parse_scalar_f(const Json& j, const std::string& where) {
    if (j.is_string()) return ComplexPuiseux(parse_literal(j, where));
    StrictObject o(j, where);
    ComplexPuiseux v;
    v.re = parse_literal(o.require("re"), where + ".re");
    v.im = parse_literal(o.require("im"), where + ".im");
    o.finish();
    return v;
}

Json scalar_to_json(const PuiseuxNumber& v) { return format_puiseux(v); }

Json scalar_to_json(const ComplexPuiseux& v) {
    if (v.im.is_exact_zero()) return format_puiseux(v.re);
    return Json{{"re", format_puiseux(v.re)}, {"im", format_puiseux(v.im)}};
}

BerkPoint parse_point(const Json& j) {
    StrictObject o(j, "point");
    std::string kind = get_string(o.require("kind"), "point.kind");
    std::string chart = "Z";
    if (const Json* c = o.optional("chart")) chart = get_string(*c, "point.chart");
    if (chart != "Z" && chart != "W") throw input_error("point.chart: expected 'Z' or 'W'");

    if (kind == "infinity") {
        o.finish();
        return BerkPoint::infinity();
    }
    if (kind == "type1") {
        ComplexPuiseux v = parse_scalar_f(o.require("center"), "point.center");
        o.finish();
        if (chart == "W") {
            if (v.is_exact_zero()) return BerkPoint::infinity();
            return BerkPoint::type1(v.inv());
        }
        return BerkPoint::type1(std::move(v));
    }
    if (kind == "disk") {
        ComplexPuiseux v = parse_scalar_f(o.require("center"), "point.center");
        Rational t = parse_rational_field(o.require("log_radius"), "point.log_radius");
        o.finish();
        if (chart == "W") {
            // w-coordinate disk; as a seminorm point this is a chart-Z disk:
            // pole w=0 outside => D(1/w0, t - 2 log|w0|), inside => D(0, -t).
            LogValue w0 = v.is_exact_zero() ? LogValue::make_zero() : log_abs(v);
            if (LogValue::finite(t) < w0)
                return BerkPoint::disk(v.inv(), t - 2 * w0.exponent);
            return BerkPoint::disk(ComplexPuiseux(), -t);
        }
        return BerkPoint::disk(std::move(v), std::move(t));
    }
    throw input_error("point.kind: expected 'type1', 'disk' or 'infinity'");
}

Json point_to_json(const BerkPoint& p) {
    Json j;
    j["chart"] = "Z";
    if (p.is_infinity()) {
        j["kind"] = "infinity";
        return j;
    }
    if (p.kind() == BerkPoint::Kind::type1) {
        j["kind"] = "type1";
        j["center"] = scalar_to_json(p.center());
        return j;
    }
    j["kind"] = "disk";
    j["center"] = scalar_to_json(p.center());
    j["log_radius"] = to_string(p.log_radius());
    return j;
}

PolyK parse_poly_k(const Json& j, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": expected a coefficient array");
    std::vector<PuiseuxNumber> coeffs;
    for (std::size_t i = 0; i < j.size(); ++i)
        coeffs.push_back(parse_literal(j[i], where + "[" + std::to_string(i) + "]"));
    return PolyK(std::move(coeffs));
}

PolyF parse_poly_f(const Json& j, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": expected a coefficient array");
    std::vector<ComplexPuiseux> coeffs;
    for (std::size_t i = 0; i < j.size(); ++i)
        coeffs.push_back(parse_scalar_f(j[i], where + "[" + std::to_string(i) + "]"));
    return PolyF(std::move(coeffs));
}

Json poly_to_json(const PolyK& f) {
    Json arr = Json::array();
    for (const auto& c : f.coeffs()) arr.push_back(format_puiseux(c));
    return arr;
}

SpectrumLinePoint parse_spectrum_point(const Json& j) {
    StrictObject o(j, "spectrum point");
    std::string kind = get_string(o.require("kind"), "spectrum point.kind");
    if (kind == "plus_inf") {
        o.finish();
        return SpectrumLinePoint::plus_inf();
    }
    if (kind == "minus_inf") {
        o.finish();
        return SpectrumLinePoint::minus_inf();
    }
    if (kind == "free_cut") {
        const Json& ladder = o.require("ladder");
        if (!ladder.is_array()) throw input_error("spectrum point.ladder: expected an array");
        std::vector<PuiseuxNumber> rungs;
        for (std::size_t i = 0; i < ladder.size(); ++i)
            rungs.push_back(parse_literal(ladder[i], "ladder[" + std::to_string(i) + "]"));
        int budget = 2;
        if (const Json* b = o.optional("budget")) {
            if (!b->is_number_integer()) throw input_error("spectrum point.budget: expected an integer");
            budget = b->get<int>();
        }
        o.finish();
        return SpectrumLinePoint::free_cut(std::move(rungs), budget);
    }
    PuiseuxNumber u = parse_literal(o.require("u"), "spectrum point.u");
    o.finish();
    if (kind == "point") return SpectrumLinePoint::point(std::move(u));
    if (kind == "right_of") return SpectrumLinePoint::right_of(std::move(u));
    if (kind == "left_of") return SpectrumLinePoint::left_of(std::move(u));
    throw input_error("spectrum point.kind: unknown kind '" + kind + "'");
}

Json spectrum_point_to_json(const SpectrumLinePoint& p) {
    Json j;
    switch (p.kind) {
        case SpectrumLinePoint::Kind::point: j["kind"] = "point"; break;
        case SpectrumLinePoint::Kind::right_of: j["kind"] = "right_of"; break;
        case SpectrumLinePoint::Kind::left_of: j["kind"] = "left_of"; break;
        case SpectrumLinePoint::Kind::plus_inf: j["kind"] = "plus_inf"; return j;
        case SpectrumLinePoint::Kind::minus_inf: j["kind"] = "minus_inf"; return j;
        case SpectrumLinePoint::Kind::free_cut: {
            j["kind"] = "free_cut";
            Json arr = Json::array();
            for (const auto& r : p.ladder) arr.push_back(format_puiseux(r));
            j["ladder"] = std::move(arr);
            j["budget"] = p.budget;
            return j;
        }
    }
    j["u"] = format_puiseux(p.u);
    return j;
}

MoebiusMap parse_moebius(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
        j[0].size() != 2 || j[1].size() != 2)
        throw input_error(where + ": expected a 2x2 array");
    return MoebiusMap(parse_scalar_f(j[0][0], where + "[0][0]"),
                      parse_scalar_f(j[0][1], where + "[0][1]"),
                      parse_scalar_f(j[1][0], where + "[1][0]"),
                      parse_scalar_f(j[1][1], where + "[1][1]"));
}

Json moebius_to_json(const MoebiusMap& g) {
    return Json::array({Json::array({scalar_to_json(g.a()), scalar_to_json(g.b())}),
                        Json::array({scalar_to_json(g.c()), scalar_to_json(g.d())})});
}

Matrix parse_matrix_r(const Json& j, int n, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw input_error(where + ": expected " + std::to_string(n) + " rows");
    Matrix m(n);
    for (int r = 0; r < n; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw input_error(where + ": expected " + std::to_string(n) + " columns");
        for (int c = 0; c < n; ++c) {
            const Json& cell = row[c];
            if (!cell.is_number())
                throw input_error(where + ": expected numeric entries");
            m.at(r, c) = cell.get<double>();
        }
    }
    return m;
}

RepTupleR parse_rep_r(const Json& j, const std::string& where) {
    StrictObject o(j, where);
    RepTupleR rep;
    const Json& n = o.require("n");
    if (!n.is_number_integer()) throw input_error(where + ".n: expected an integer");
    rep.n = n.get<int>();
    if (rep.n < 2 || rep.n > 8) throw input_error(where + ".n: expected 2 <= n <= 8");
    const Json& names = o.require("generators");
    if (!names.is_array()) throw input_error(where + ".generators: expected an array");
    for (const auto& g : names) rep.names.push_back(get_string(g, where + ".generators[]"));
    const Json& mats = o.require("matrices");
    if (!mats.is_array() || mats.size() != rep.names.size())
        throw input_error(where + ".matrices: expected one matrix per generator");
    for (std::size_t i = 0; i < mats.size(); ++i)
        rep.mats.push_back(parse_matrix_r(mats[i], rep.n, where + ".matrices[" + std::to_string(i) + "]"));
    o.finish();
    return rep;
}

RepTupleK parse_rep_k(const Json& j, const std::string& where) {
    StrictObject o(j, where);
    std::vector<std::string> names;
    std::vector<MoebiusMap> mats;
    const Json& jnames = o.require("generators");
    if (!jnames.is_array()) throw input_error(where + ".generators: expected an array");
    for (const auto& g : jnames) names.push_back(get_string(g, where + ".generators[]"));
    const Json& jmats = o.require("matrices");
    if (!jmats.is_array() || jmats.size() != names.size())
        throw input_error(where + ".matrices: expected one matrix per generator");
    for (std::size_t i = 0; i < jmats.size(); ++i)
        mats.push_back(parse_moebius(jmats[i], where + ".matrices[" + std::to_string(i) + "]"));
    o.finish();
    try {
        return make_rep_k(std::move(names), std::move(mats));
    } catch (const invariant_violation& e) {
        throw input_error(where + ": " + e.what());
    }
}

DegenerationJob parse_degeneration_job(const Json& j, const std::string& where) {
    StrictObject o(j, where);
    DegenerationJob job;
    job.rep = parse_rep_k(o.require("rep"), where + ".rep");
    const Json& words = o.require("words");
    if (!words.is_array()) throw input_error(where + ".words: expected an array");
    for (const auto& w : words) job.words.push_back(get_string(w, where + ".words[]"));
    const Json& grid = o.require("t_grid");
    if (!grid.is_array() || grid.empty())
        throw input_error(where + ".t_grid: expected a nonempty array");
    for (const auto& t : grid) {
        if (!t.is_number()) throw input_error(where + ".t_grid: expected numbers");
        job.t_grid.push_back(t.get<double>());
    }
    if (const Json* base = o.optional("basepoint"))
        job.basepoint = parse_matrix_r(*base, 2, where + ".basepoint");
    o.finish();
    return job;
}

Json log_value_to_json(const LogValue& v) {
    if (v.zero) return "zero";
    return to_string(v.exponent);
}

Json realness_to_json(const RealnessCertificate& c) {
    Json j;
    j["verdict"] = c.verdict;
    if (c.galois_fixed_witness) {
        j["witness"] = {{"kind", "galois_fixed"},
                        {"conjugate", point_to_json(*c.galois_fixed_witness)}};
    }
    if (c.violating_family) {
        Json fam = Json::array();
        for (const auto& f : c.violating_family->family) fam.push_back(poly_to_json(f));
        j["witness"] = {{"kind", "violating_family"},
                        {"family", std::move(fam)},
                        {"lhs", log_value_to_json(c.violating_family->lhs)},
                        {"rhs", log_value_to_json(c.violating_family->rhs)}};
    }
    return j;
}

Json unwrap_job(const Json& j, const std::string& expected_command) {
    if (!j.is_object() || !j.contains("version")) return j;
    StrictObject o(j, "job");
    const Json& version = o.require("version");
    if (!version.is_number_integer() || version.get<int>() != 1)
        throw input_error("job.version: expected 1");
    std::string command = get_string(o.require("command"), "job.command");
    if (!expected_command.empty() && command != expected_command)
        throw input_error("job.command: expected '" + expected_command + "', got '" +
                          command + "'");
    const Json& payload = o.require("payload");
    o.finish();
    return payload;
}

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw input_error("'" + path + "': " + e.what());
    }
}

} // namespace berkline
