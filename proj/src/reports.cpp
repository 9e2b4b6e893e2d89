#include "dtorus/reports.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "dtorus/errors.hpp"

namespace dtorus {

Json report_header(const std::string& check) {
    Json j;
    j["schema"] = 1;
    j["check"] = check;
    return j;
}

Json json_params(const DeformParams& par) {
    Json j;
    j["mu"] = par.mu;
    j["theta"] = par.theta;
    if (par.theta_rational) {
        j["theta_p"] = par.theta_rational->first;
        j["theta_N"] = par.theta_rational->second;
    }
    j["hbar"] = par.hbar;
    j["q_re"] = par.q.real();
    j["q_im"] = par.q.imag();
    j["z_re"] = par.z.real();
    j["z_im"] = par.z.imag();
    j["admissible"] = par.admissible;
    return j;
}

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open output path " + out_path);
    out << text << "\n";
}

void write_report(const Json& j, const std::string& out_path) { write_text(j.dump(2), out_path); }

Json json_residuals(const ResidualReport& rep) {
    Json j;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json item;
        item["relation"] = e.name;
        item["residual"] = e.residual;
        entries.push_back(std::move(item));
    }
    j["residuals"] = std::move(entries);
    j["max_residual"] = rep.max_residual;
    j["tol"] = rep.tol;
    if (rep.fitted_mu) j["fitted_mu"] = *rep.fitted_mu;
    j["pass"] = rep.pass;
    return j;
}

Json json_spectral(const SpectralReport& rep) {
    Json j;
    j["phases"] = rep.phases;
    j["min_eigenvalue"] = rep.min_eigenvalue;
    j["bound"] = rep.bound;
    j["pass"] = rep.pass;
    return j;
}

Json json_intertwine(const IntertwineReport& rep) {
    Json j;
    j["residual"] = rep.residual_main;
    j["residual_shifted"] = rep.residual_shifted;
    j["max_residual"] = rep.max_residual;
    return j;
}

Json json_roundtrip(const RoundtripReport& rep) {
    Json j;
    j["v_roundtrip"] = rep.v_roundtrip;
    j["u_roundtrip"] = rep.u_roundtrip;
    j["v_unitarity"] = rep.v_unitarity;
    j["w_roundtrip"] = rep.w_roundtrip;
    return j;
}

Json json_scaling(const ScalingTable& table) {
    Json j;
    Json rows = Json::array();
    for (const auto& r : table.rows) {
        Json row;
        row["eps"] = r.eps;
        row["l"] = r.l;
        row["value"] = r.value;
        row["limit"] = r.limit;
        row["abs_err"] = r.abs_err;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["eps"] = table.eps;
    j["max_dev"] = table.max_dev;
    j["pair_orders"] = table.pair_orders;
    j["fitted_order"] = table.fitted_order;
    j["lambda_eps_drift"] = table.lambda_eps_drift;
    return j;
}

std::string scaling_csv(const ScalingTable& table) {
    std::ostringstream os;
    os << "eps,l,value,limit,abs_err";
    char buf[64];
    for (const auto& r : table.rows) {
        os << "\n";
        std::snprintf(buf, sizeof(buf), "%.17g", r.eps);
        os << buf << "," << r.l << ",";
        std::snprintf(buf, sizeof(buf), "%.17g", r.value);
        os << buf << ",";
        std::snprintf(buf, sizeof(buf), "%.17g", r.limit);
        os << buf << ",";
        std::snprintf(buf, sizeof(buf), "%.17g", r.abs_err);
        os << buf;
    }
    return os.str();
}

Json json_product_law(const ProductLawReport& rep) {
    Json j;
    j["range"] = rep.range;
    j["pairs_checked"] = rep.pairs_checked;
    j["closed_pairs"] = rep.closed_pairs;
    j["max_discrepancy"] = rep.max_discrepancy;
    j["exact"] = rep.exact;
    j["all_exact_zero"] = rep.all_exact_zero;
    j["pass"] = rep.pass;
    return j;
}

Json json_curvature(const CurvatureReport& rep) {
    Json j;
    j["constant_re"] = rep.constant.real();
    j["constant_im"] = rep.constant.imag();
    j["expected_re"] = rep.expected.real();
    j["expected_im"] = rep.expected.imag();
    j["max_deviation"] = rep.max_deviation;
    j["used_points"] = rep.used_points;
    return j;
}

}  // namespace dtorus
