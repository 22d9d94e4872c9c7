#include "dompoly/app/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace dompoly::app {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int low_degree(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("low_degree: zero polynomial");
    int i = 0;
    while (p.coeff(static_cast<std::size_t>(i)) == 0) ++i;
    return i;
}

namespace {

ordered_json json_complex(const Complex& z) {
    return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json json_interval(const RealRootInterval& iv) {
    return ordered_json{{"lo", to_decimal(iv.lo)}, {"hi", to_decimal(iv.hi)}};
}

}  // namespace

std::string poly_json(const DominationPolynomial& dp, int vertex_count) {
    ordered_json j;
    j["graph"] = dp.graph_id;
    j["method"] = method_name(dp.method);
    j["vertex_count"] = vertex_count;
    j["degree"] = dp.poly.degree();
    j["domination_number"] = dp.poly.is_zero() ? ordered_json() : ordered_json(low_degree(dp.poly));
    j["coefficients"] = dp.poly.coefficient_strings();
    return j.dump(2) + "\n";
}

std::string report_json(const RootReport& report) {
    ordered_json j;
    j["graph"] = report.graph_id;
    j["seed"] = report.seed;
    j["degree"] = report.degree;
    j["coefficients"] = report.poly.coefficient_strings();
    j["zero_root_multiplicity"] = report.zero_root_multiplicity;

    ordered_json roots = ordered_json::array();
    for (const ComplexRoot& r : report.complex_roots) {
        ordered_json e;
        e["re"] = r.z.real();
        e["im"] = r.z.imag();
        e["residual"] = r.residual;
        e["residual_abs"] = r.residual_abs;
        e["last_correction"] = r.last_correction;
        e["multiplicity"] = r.multiplicity;
        e["converged"] = r.converged;
        e["roundoff_limited"] = r.roundoff_limited;
        roots.push_back(std::move(e));
    }
    j["complex_roots"] = std::move(roots);

    j["max_real_part"] =
        std::isnan(report.max_real_part) ? ordered_json() : ordered_json(report.max_real_part);
    j["has_rhp_root"] = report.has_rhp_root;
    j["tau"] = report.tau;
    ordered_json boundary = ordered_json::array();
    for (const Complex& z : report.boundary_indeterminate) boundary.push_back(json_complex(z));
    j["boundary_indeterminate"] = std::move(boundary);

    j["certified"] = report.certified;
    if (report.certified) {
        j["certified_real_root_count"] = report.certified_real_root_count;
        ordered_json intervals = ordered_json::array();
        for (const RealRootInterval& iv : report.real_root_intervals)
            intervals.push_back(json_interval(iv));
        j["real_root_intervals"] = std::move(intervals);
    }

    if (report.limit_curves) {
        ordered_json lc;
        lc["distances"] = report.limit_diagnostic.distances;
        lc["median"] = report.limit_diagnostic.median;
        lc["max"] = report.limit_diagnostic.max;
        j["limit_curve"] = std::move(lc);
    }
    return j.dump(2) + "\n";
}

std::string report_csv(const RootReport& report) {
    std::string out = "re,im,residual\n";
    for (const ComplexRoot& r : report.complex_roots) {
        out += format_double(r.z.real());
        out += ',';
        out += format_double(r.z.imag());
        out += ',';
        out += format_double(r.residual);
        out += '\n';
    }
    return out;
}

}  // namespace dompoly::app
