#pragma once

#include <json.hpp>
#include <string>
#include <variant>
#include <vector>

#include "qinv/oracle.hpp"
#include "qinv/qi_engine.hpp"

namespace qinv {

using Json = nlohmann::ordered_json;

/// Every ring the problem format can name. PolyRing is fixed over Q.
using AnyRing = std::variant<IntRing, RatRing, ModRing, ZBetaRing, PolyRingQ, RatFuncField, ProperRatRing>;

inline std::vector<std::string> string_list(const Json& j, const std::string& field) {
    if (!j.is_array()) throw invalid_argument_error("field '" + field + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) throw invalid_argument_error("field '" + field + "' must be an array of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

inline AnyRing ring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw invalid_argument_error("ring descriptor must be an object with a 'kind' field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "integers") return IntRing{};
    if (kind == "rationals") return RatRing{};
    if (kind == "integers_mod_p") {
        if (!j.contains("p")) throw invalid_argument_error("integers_mod_p needs a 'p' field");
        return ModRing{Int(j.at("p").get<long>())};
    }
    if (kind == "zbeta") return ZBetaRing{};
    if (kind == "poly_ring") return PolyRingQ{RatRing{}, string_list(j.at("vars"), "vars")};
    if (kind == "rat_func_field") return RatFuncField{string_list(j.at("vars"), "vars")};
    if (kind == "proper_rat_ring")
        return ProperRatRing{string_list(j.at("free_vars"), "free_vars"),
                             string_list(j.at("proper_vars"), "proper_vars")};
    throw invalid_argument_error("unknown ring kind '" + kind + "'");
}

inline Json ring_to_json(const AnyRing& ar) {
    Json j;
    std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, IntRing>) {
                j["kind"] = "integers";
            } else if constexpr (std::is_same_v<R, RatRing>) {
                j["kind"] = "rationals";
            } else if constexpr (std::is_same_v<R, ModRing>) {
                j["kind"] = "integers_mod_p";
                j["p"] = r.modulus().get_si();
            } else if constexpr (std::is_same_v<R, ZBetaRing>) {
                j["kind"] = "zbeta";
            } else if constexpr (std::is_same_v<R, PolyRingQ>) {
                j["kind"] = "poly_ring";
                j["vars"] = r.var_names();
            } else if constexpr (std::is_same_v<R, RatFuncField>) {
                j["kind"] = "rat_func_field";
                j["vars"] = r.var_names();
            } else {
                j["kind"] = "proper_rat_ring";
                j["free_vars"] = r.free_vars();
                j["proper_vars"] = r.proper_vars();
            }
        },
        ar);
    return j;
}

template <commutative_ring R>
Matrix<R> matrix_from_json(const R& ring, const Json& j) {
    if (!j.is_array()) throw invalid_argument_error("matrix must be an array of arrays of expression strings");
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : j) rows.push_back(string_list(row, "matrix row"));
    return parse_matrix(ring, rows);
}

template <commutative_ring R>
Json matrix_to_json(const Matrix<R>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.ring().to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <commutative_ring R>
ControllerSet<R> controller_set_from_json(const R& ring, const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw invalid_argument_error("controller_set must be an object with a 'kind' field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "sparsity") {
        std::vector<std::vector<bool>> pattern;
        for (const auto& row : j.at("pattern")) {
            std::vector<bool> r;
            for (const auto& v : row) r.push_back(v.get<bool>());
            pattern.push_back(std::move(r));
        }
        return ControllerSet<R>::sparsity(ring, std::move(pattern));
    }
    if (kind == "delay_bounds") {
        std::vector<std::vector<std::int64_t>> bounds;
        for (const auto& row : j.at("bounds")) {
            std::vector<std::int64_t> r;
            for (const auto& v : row) r.push_back(v.get<std::int64_t>());
            bounds.push_back(std::move(r));
        }
        return ControllerSet<R>::delay_bounds(ring, j.at("d_var").get<std::string>(), std::move(bounds));
    }
    if (kind == "generators") {
        std::vector<Matrix<R>> gens;
        for (const auto& m : j.at("matrices")) gens.push_back(matrix_from_json(ring, m));
        return ControllerSet<R>::from_generators(ring, gens);
    }
    throw invalid_argument_error("unknown controller_set kind '" + kind + "'");
}

template <commutative_ring R>
Json controller_set_to_json(const ControllerSet<R>& s) {
    Json j;
    switch (s.kind()) {
        case ControllerSet<R>::Sparsity: {
            j["kind"] = "sparsity";
            Json rows = Json::array();
            for (const auto& row : s.pattern()) {
                Json r = Json::array();
                for (bool b : row) r.push_back(b);
                rows.push_back(std::move(r));
            }
            j["pattern"] = std::move(rows);
            break;
        }
        case ControllerSet<R>::DelayBounds: {
            j["kind"] = "delay_bounds";
            j["d_var"] = s.delay_var();
            j["bounds"] = s.bounds();
            break;
        }
        case ControllerSet<R>::Generators: {
            j["kind"] = "generators";
            Json mats = Json::array();
            for (const auto& g : s.generators()) mats.push_back(matrix_to_json(g));
            j["matrices"] = std::move(mats);
            break;
        }
    }
    return j;
}

/// One loaded problem instance over a fixed ring.
template <commutative_ring R>
struct Problem {
    R ring;
    Matrix<R> plant;
    ControllerSet<R> set;
    std::optional<Matrix<R>> p11, p12, p21;
};

/// Parses the problem file and hands a typed Problem<R> to the callback.
template <typename F>
auto with_problem(const Json& j, F&& f) {
    if (!j.is_object()) throw invalid_argument_error("problem file must be a JSON object");
    if (j.contains("format") && j.at("format").get<int>() != 1)
        throw invalid_argument_error("unsupported problem format version");
    if (!j.contains("ring") || !j.contains("plant") || !j.contains("controller_set"))
        throw invalid_argument_error("problem file needs 'ring', 'plant' and 'controller_set' fields");
    AnyRing ar = ring_from_json(j.at("ring"));
    return std::visit(
        [&](const auto& ring) {
            using R = std::decay_t<decltype(ring)>;
            Problem<R> p{ring, matrix_from_json(ring, j.at("plant")),
                         controller_set_from_json(ring, j.at("controller_set")), std::nullopt, std::nullopt,
                         std::nullopt};
            if (j.contains("p11")) p.p11 = matrix_from_json(ring, j.at("p11"));
            if (j.contains("p12")) p.p12 = matrix_from_json(ring, j.at("p12"));
            if (j.contains("p21")) p.p21 = matrix_from_json(ring, j.at("p21"));
            return f(std::move(p));
        },
        ar);
}

template <commutative_ring R>
Json report_to_json(const QiReport<R>& rep) {
    Json j;
    j["verdict"] = to_string(rep.verdict);
    j["method"] = to_string(rep.method);
    if (rep.witness) {
        Json w;
        if (rep.witness->generator_pair)
            w["generator_pair"] = {rep.witness->generator_pair->first, rep.witness->generator_pair->second};
        if (rep.witness->witness_k) w["witness_k"] = matrix_to_json(*rep.witness->witness_k);
        if (rep.witness->violating) w["violating"] = matrix_to_json(*rep.witness->violating);
        w["detail"] = rep.witness->detail;
        j["witness"] = std::move(w);
    }
    Json pre = Json::array();
    for (const auto& p : rep.preconditions)
        pre.push_back(Json{{"name", p.name}, {"status", Precondition::status_string(p.status)}});
    j["preconditions"] = std::move(pre);
    return j;
}

inline Json oracle_report_to_json(const oracle::OracleReport& rep) {
    Json j;
    j["format"] = 1;
    j["p"] = rep.config.p.get_si();
    j["m"] = rep.config.m;
    j["n"] = rep.config.n;
    j["gens"] = rep.config.gen_count;
    j["seed"] = rep.config.seed;
    j["trials"] = rep.trials;
    j["agreements"] = rep.agreements;
    Json d = Json::array();
    for (const auto& disc : rep.discrepancies)
        d.push_back(Json{{"trial", disc.trial}, {"qi", disc.qi}, {"h_invariance", disc.h_inv}});
    j["discrepancies"] = std::move(d);
    return j;
}

}  // namespace qinv
