#include "cfx/json_io.hpp"

#include <utility>
#include <vector>

namespace cfx::json {

namespace {

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
    return j.at(name);
}

const json& array_field(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_array()) throw ParseError(std::string("field '") + name + "' must be an array");
    return f;
}

std::vector<Rational> rationals(const json& arr) {
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const auto& v : arr) out.push_back(rational_from_json(v));
    return out;
}

json strings(std::span<const Rational> values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(to_json(v));
    return out;
}

unsigned degree(const json& j) {
    if (!j.is_number_unsigned()) throw ParseError("polynomial degree must be a non-negative integer");
    return j.get<unsigned>();
}

}  // namespace

json to_json(const Integer& v) { return to_string(v); }

json to_json(const Rational& v) { return v.to_string(); }

Integer integer_from_json(const json& j) {
    if (j.is_string()) return parse_integer(j.get<std::string>());
    if (j.is_number_integer()) return parse_integer(j.dump());
    throw ParseError("expected an integer string, got " + j.dump());
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(parse_integer(j.dump()));
    throw ParseError("expected a rational string, got " + j.dump());
}

json to_json(const BivarPoly& f) {
    json out = json::array();
    for (const auto& m : f.terms()) out.push_back(json::array({m.deg_x, m.deg_y, to_string(m.coeff)}));
    return out;
}

BivarPoly poly_from_json(const json& j) {
    if (j.is_string()) return BivarPoly::parse(j.get<std::string>());
    if (!j.is_array()) throw ParseError("polynomial must be a string or a list of [degX, degY, coeff]");
    std::vector<Monomial> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw ParseError("monomial must be [degX, degY, coeff]");
        terms.push_back({degree(t[0]), degree(t[1]), integer_from_json(t[2])});
    }
    return BivarPoly(std::move(terms));
}

json to_json(const GeneralizedCF& cf) {
    json terms = json::array();
    for (const auto& t : cf.terms()) terms.push_back(json::array({to_json(t.a), to_json(t.b)}));
    return {{"integer_part", to_json(cf.integer_part())}, {"terms", std::move(terms)}};
}

GeneralizedCF cf_from_json(const json& j) {
    std::vector<CfTerm> terms;
    for (const auto& t : array_field(j, "terms")) {
        if (!t.is_array() || t.size() != 2) throw ParseError("continued fraction term must be [a, b]");
        terms.push_back({rational_from_json(t[0]), rational_from_json(t[1])});
    }
    Rational integer_part;
    if (j.contains("integer_part")) integer_part = rational_from_json(j.at("integer_part"));
    return GeneralizedCF(std::move(terms), std::move(integer_part));
}

json to_json(const RegularCF& rcf) {
    json q = json::array();
    for (const auto& v : rcf.quotients) q.push_back(to_json(v));
    return {{"a0", to_json(rcf.a0)}, {"quotients", std::move(q)}};
}

RegularCF regular_from_json(const json& j) {
    RegularCF out{integer_from_json(field(j, "a0")), {}};
    for (const auto& v : array_field(j, "quotients")) out.quotients.push_back(integer_from_json(v));
    return out;
}

json to_json(const SumSpec& s) { return {{"x", strings(s.xs().subspan(1))}, {"y", strings(s.ys().subspan(1))}}; }

SumSpec sumspec_from_json(const json& j) {
    return SumSpec(rationals(array_field(j, "x")), rationals(array_field(j, "y")));
}

json sequence_to_json(const std::string& name, const SequencePrefix& seq) {
    json values = json::array();
    for (const auto& v : seq.values) values.push_back(to_json(v));
    return {{"name", name}, {"values", std::move(values)}};
}

SequencePrefix sequence_from_json(const json& j) {
    SequencePrefix seq;
    for (const auto& v : array_field(j, "values")) seq.values.push_back(integer_from_json(v));
    return seq;
}

json to_json(const PolyRecurrence& rec) {
    json out = {{"x1", to_json(rec.x1())}, {"description", rec.description()}};
    if (rec.is_stationary()) {
        out["F"] = to_json(rec.polys().front());
    } else {
        json family = json::array();
        for (const auto& f : rec.polys()) family.push_back(to_json(f));
        out["family"] = std::move(family);
    }
    return out;
}

PolyRecurrence recurrence_from_json(const json& j) {
    Integer x1 = integer_from_json(field(j, "x1"));
    std::string description = j.value("description", std::string());
    if (j.contains("family")) {
        std::vector<BivarPoly> fs;
        for (const auto& f : array_field(j, "family")) fs.push_back(poly_from_json(f));
        return PolyRecurrence::family(std::move(fs), std::move(x1), std::move(description));
    }
    return PolyRecurrence::stationary(poly_from_json(field(j, "F")), std::move(x1), std::move(description));
}

}  // namespace cfx::json
