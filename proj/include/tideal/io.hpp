#pragma once

// JSON forms of the shared value types and reports.
//
//   Partition          [5,2,2]
//   Decomposition      {"m": 8, "terms": [{"partition": [8], "mult": 1}, ...],
//                       "dimension": "1128", "total_multiplicity": 33}
//   OrderedPartition   [[1,2],[3]]
//   RationalPolynomial {"variable": "n", "coefficients": ["0","-1","3/2","2","1/2"], "text": "..."}
//                      coefficients lowest degree first, as exact rational strings

#include "bounds.hpp"
#include "glk.hpp"
#include "stability.hpp"

#include <json.hpp>

namespace tideal {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("partition must be a JSON array");
    try {
        return Partition(j.get<std::vector<int>>());
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

inline Json to_json(const Decomposition& d) {
    Json terms = Json::array();
    for (const auto& [p, c] : d.terms()) terms.push_back({{"partition", to_json(p)}, {"mult", c}});
    return {{"m", d.degree()},
            {"terms", terms},
            {"dimension", d.dimension().get_str()},
            {"total_multiplicity", d.total_multiplicity()}};
}

inline Decomposition decomposition_from_json(const Json& j) {
    try {
        Decomposition d(j.at("m").get<int>());
        for (const auto& t : j.at("terms")) d.add(partition_from_json(t.at("partition")), t.at("mult").get<std::uint64_t>());
        return d;
    } catch (const Json::exception& e) {
        throw parse_error(std::string("decomposition: ") + e.what());
    }
}

inline Json to_json(const OrderedPartition& o) { return Json(o.parts()); }

inline OrderedPartition ordered_partition_from_json(const Json& j) {
    try {
        return OrderedPartition(j.get<std::vector<std::vector<int>>>());
    } catch (const std::exception& e) {
        throw parse_error(std::string("ordered partition: ") + e.what());
    }
}

inline Json to_json(const RationalPolynomial& p) {
    Json c = Json::array();
    for (const auto& x : p.coefficients()) c.push_back(x.get_str());
    return {{"variable", p.variable()}, {"coefficients", c}, {"text", p.str()}};
}

inline RationalPolynomial polynomial_from_json(const Json& j) {
    try {
        std::vector<Rational> c;
        for (const auto& x : j.at("coefficients")) {
            Rational q(x.get<std::string>());
            q.canonicalize();
            c.push_back(q);
        }
        return RationalPolynomial(std::move(c), j.at("variable").get<std::string>());
    } catch (const std::exception& e) {
        throw parse_error(std::string("polynomial: ") + e.what());
    }
}

inline Json to_json(const MultiplicityResult& r) {
    return {{"shape", to_json(r.shape)},      {"multiplicity", r.value},     {"irrep_dim", r.irrep_dim},
            {"rows_visited", r.rows_visited}, {"rows_nonzero", r.rows_nonzero}, {"certified", r.certified},
            {"pruned", r.pruned},             {"method", r.method}};
}

inline Json to_json(const StabilizationReport& r) {
    Json ns = Json::array(), decs = Json::array(), derived = Json::array(), fam = Json::array(), dec = Json::array();
    for (std::size_t i = 0; i < r.ns.size(); ++i) {
        ns.push_back(r.ns[i]);
        decs.push_back({{"n", r.ns[i]}, {"m", r.ns[i] + r.K}, {"decomposition", to_json(r.decompositions[i])}});
        Json row = Json::array();
        for (std::size_t j = 0; j < r.ns.size(); ++j) row.push_back(j >= i && r.derived[i][j]);
        derived.push_back(row);
    }
    for (const auto& [key, seq] : r.families) fam.push_back({{"tail", to_json(key)}, {"multiplicities", seq}});
    for (const auto& key : r.decreasing_families) dec.push_back(to_json(key));
    return {{"K", r.K},
            {"n_min", r.n_min},
            {"n_max", r.n_max},
            {"n", ns},
            {"decompositions", decs},
            {"derived", derived},
            {"n_obs", r.n_obs ? Json(*r.n_obs) : Json(nullptr)},
            {"families", fam},
            {"decreasing_families", dec},
            {"incomplete", r.incomplete},
            {"certified", r.certified}};
}

inline StabilizationReport stabilization_report_from_json(const Json& j) {
    try {
        StabilizationReport r;
        r.K = j.at("K").get<int>();
        r.n_min = j.at("n_min").get<int>();
        r.n_max = j.at("n_max").get<int>();
        r.ns = j.at("n").get<std::vector<int>>();
        for (const auto& d : j.at("decompositions")) r.decompositions.push_back(decomposition_from_json(d.at("decomposition")));
        for (const auto& row : j.at("derived")) r.derived.push_back(row.get<std::vector<bool>>());
        if (!j.at("n_obs").is_null()) r.n_obs = j.at("n_obs").get<int>();
        for (const auto& f : j.at("families"))
            r.families[partition_from_json(f.at("tail"))] = f.at("multiplicities").get<std::vector<std::uint64_t>>();
        for (const auto& k : j.at("decreasing_families")) r.decreasing_families.push_back(partition_from_json(k));
        r.incomplete = j.at("incomplete").get<bool>();
        r.certified = j.at("certified").get<bool>();
        return r;
    } catch (const Json::exception& e) {
        throw parse_error(std::string("stabilization report: ") + e.what());
    }
}

inline Json to_json(const CoeffPolyFit& f) {
    Json s = Json::array();
    for (const auto& [x, v] : f.samples) s.push_back({{"s", x}, {"value", v.get_str()}});
    return {{"samples", s}, {"offset", f.offset}, {"polynomial", to_json(f.polynomial)}, {"residual", f.residual}};
}

inline Json to_json(const DimFit& f) {
    return {{"polynomial", to_json(f.polynomial)},
            {"validated", f.validated},
            {"fitted_on", f.fitted_on},
            {"validated_on", f.validated_on},
            {"method", f.note}};
}

} // namespace tideal
