#pragma once

// JSON views of the library's results.  Every number that is a field
// element is written as a "num/den" string; exponents are flattened arrays;
// generator indices are 1-based.

#include <string>

#include <json.hpp>

#include <shortpoly/determinantal.hpp>
#include <shortpoly/matroid.hpp>
#include <shortpoly/shortness.hpp>

namespace shortpoly {

using json = nlohmann::ordered_json;

inline json exponent_to_json(const Exponent& e)
{
    return json(e.entries());
}

template <class F>
json polynomial_to_json(const Polynomial<F>& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exponent", exponent_to_json(e)}, {"coeff", p.field().to_string(c)}});
    }
    return {{"text", p.to_string()}, {"terms", std::move(terms)}};
}

/// {"alpha": [..], "terms": [{"gen": i, "gamma": [..], "coeff": "num/den"}]}
template <class F>
json pform_to_json(const PForm<F>& p)
{
    json terms = json::array();
    for (const auto& [y, c] : p.terms) {
        terms.push_back({{"gen", y.generator + 1}, {"gamma", exponent_to_json(y.gamma)}, {"coeff", p.field.to_string(c)}});
    }
    return {{"alpha", exponent_to_json(p.alpha)}, {"terms", std::move(terms)}};
}

inline const char* status_name(ShortnessStatus s)
{
    switch (s) {
    case ShortnessStatus::exact:
        return "exact";
    case ShortnessStatus::lower_bound:
        return "lower_bound";
    case ShortnessStatus::zero_component:
        return "zero_component";
    }
    return "unknown";
}

template <class F>
json report_to_json(const ShortnessReport<F>& r)
{
    json j;
    j["degree"] = r.degree;
    j["field"] = r.field;
    j["label"] = r.certified ? "certified" : "candidate";
    j["monomials"] = r.monomials;
    j["dimension"] = r.dimension;
    j["non_loops"] = r.non_loops;
    j["status"] = status_name(r.status);
    if (r.status == ShortnessStatus::exact) {
        j["shortness"] = r.shortness;
    }
    if (r.status == ShortnessStatus::lower_bound) {
        j["absent_upto"] = r.absent_upto;
        j["budget_exhausted"] = r.budget_exhausted;
    }
    if (r.upper_bound) {
        j["sampled_upper_bound"] = *r.upper_bound;
    }
    j["rank_tests"] = r.rank_tests;
    if (r.witness) {
        json cof = json::array();
        for (const auto& g : r.witness->cofactors) {
            cof.push_back(g.to_string());
        }
        j["witness"] = {{"polynomial", polynomial_to_json(r.witness->polynomial)}, {"cofactors", std::move(cof)}};
    }
    json bounds = json::object();
    if (r.dim_bound) {
        bounds["dim_bound"] = *r.dim_bound;
    }
    if (r.occurrence_bound) {
        bounds["occurrence_bound"] = *r.occurrence_bound;
    }
    if (r.hyperplane_shortness) {
        bounds["hyperplane_shortness"] = *r.hyperplane_shortness;
    }
    if (r.status != ShortnessStatus::zero_component) {
        bounds["note"] = "dim_bound and occurrence_bound are upper bounds on the shortness";
    }
    j["bounds"] = std::move(bounds);
    return j;
}

inline json label_sets_to_json(const std::vector<LabelSet>& sets)
{
    json out = json::array();
    for (const auto& s : sets) {
        out.push_back(s);
    }
    return out;
}

inline json relation_to_json(const Relation& rel, const Shape& shape)
{
    json members = json::array();
    for (const auto& a : rel.members) {
        members.push_back(exponent_label(a, shape));
    }
    json pairs = json::array();
    for (const auto& p : rel.pairings) {
        pairs.push_back({{"gen", p.y.generator + 1},
                         {"gamma", exponent_label(p.y.gamma, shape)},
                         {"from", exponent_label(p.from, shape)},
                         {"sigma", p.sigma},
                         {"to", exponent_label(p.to, shape)},
                         {"tau", p.tau}});
    }
    return {{"beta", exponent_label(rel.beta, shape)},
            {"members", std::move(members)},
            {"coefficients", "p_beta = -(sum of the other members)"},
            {"pairings", std::move(pairs)}};
}

} // namespace shortpoly
