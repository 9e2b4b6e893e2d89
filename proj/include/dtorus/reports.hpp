#pragma once

#include <string>

#include "json.hpp"

#include "dtorus/basis.hpp"
#include "dtorus/cstar.hpp"
#include "dtorus/matrix_reps.hpp"
#include "dtorus/module.hpp"
#include "dtorus/parser.hpp"
#include "dtorus/rewrite.hpp"

namespace dtorus {

// All reports share insertion-ordered keys and a schema stamp so identical
// run configurations serialize byte-identically.
using Json = nlohmann::ordered_json;

Json report_header(const std::string& check);
Json json_params(const DeformParams& par);

/// Writes dump(2) + newline to the path, or to stdout when path is empty.
void write_text(const std::string& text, const std::string& out_path);
void write_report(const Json& j, const std::string& out_path);

Json json_residuals(const ResidualReport& rep);
Json json_spectral(const SpectralReport& rep);
Json json_intertwine(const IntertwineReport& rep);
Json json_roundtrip(const RoundtripReport& rep);
Json json_scaling(const ScalingTable& table);
std::string scaling_csv(const ScalingTable& table);
Json json_product_law(const ProductLawReport& rep);
Json json_curvature(const CurvatureReport& rep);

template <class Ctx>
Json json_confluence(const ConfluenceReport<typename Ctx::C>& report,
                     const ReductionSystem<typename Ctx::C>& sys, const Ctx& ctx) {
    Json j = report_header("confluence");
    j["system"] = "S1..S8";
    j["params"] = json_params(ctx.par);
    j["mode"] = report.certificate ? "certificate" : "evidence";
    Json items = Json::array();
    for (const auto& oc : report.outcomes) {
        Json item;
        item["overlap"] = oc.ambiguity.overlap.to_string();
        item["ruleA"] = sys.rules()[oc.ambiguity.rule_left].name;
        item["ruleB"] = sys.rules()[oc.ambiguity.rule_right].name;
        item["resolved"] = to_canonical_string(oc.resolved, ctx);
        item["residual"] = oc.residual;
        item["pass"] = oc.pass;
        items.push_back(std::move(item));
    }
    j["ambiguities"] = std::move(items);
    j["count"] = report.outcomes.size();
    j["pass"] = report.pass;
    return j;
}

/// Basis vectors serialize as arrays of {kind, m1, m2, re, im}.
template <class C>
Json json_basis_vector(const BasisVector<C>& v) {
    Json arr = Json::array();
    for (const auto& [idx, c] : v) {
        Json e;
        e["kind"] = idx.kind == BasisIndex::Kind::T ? "T" : "S";
        e["m1"] = idx.m1;
        e["m2"] = idx.m2;
        const auto z = coeff_to_complex(c);
        e["re"] = z.real();
        e["im"] = z.imag();
        arr.push_back(std::move(e));
    }
    return arr;
}

}  // namespace dtorus
