#include "dompoly/app/sweep.hpp"

#include <exception>

#include "dompoly/app/report_io.hpp"

namespace dompoly::app {

namespace {

SweepInstance run_instance(const SweepRequest& req, int value) {
    SweepInstance inst;
    inst.param = value;
    inst.spec.kind = req.kind;
    inst.spec.params = req.fixed;
    inst.spec.params[req.free_param] = value;
    try {
        const ClosedFormResult cf = closed_form_for(inst.spec);
        if (cf.poly.degree() > req.max_degree)
            throw budget_error("degree " + std::to_string(cf.poly.degree()) +
                               " exceeds sweep limit " + std::to_string(req.max_degree));
        inst.report = analyze_roots(cf.poly, req.options, inst.spec.to_string());
        inst.ok = true;
    } catch (const std::exception& e) {
        inst.error = e.what();
    }
    return inst;
}

}  // namespace

SweepResult run_sweep(const SweepRequest& request) {
    if (request.to < request.from)
        throw std::invalid_argument("run_sweep: empty parameter range");
    SweepResult result;
    result.request = request;
    const int count = request.to - request.from + 1;
    result.instances.resize(static_cast<std::size_t>(count));
    // Instances are pure; the slot index fixes the output order no matter
    // how the loop is scheduled.
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i)
        result.instances[static_cast<std::size_t>(i)] =
            run_instance(request, request.from + i);
    return result;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = "re,im,residual,family,param,error\n";
    // "kn,n" would split the CSV column; emit the comma-free alias, which
    // FamilySpec::parse accepts back.
    std::string family = family_kind_name(result.request.kind);
    std::erase(family, ',');
    for (const SweepInstance& inst : result.instances) {
        if (!inst.ok) {
            std::string error = inst.error;
            for (char& c : error)
                if (c == ',' || c == '\n') c = ';';
            out += ",,," + family + ',' + std::to_string(inst.param) + ',' + error + '\n';
            continue;
        }
        for (const ComplexRoot& r : inst.report.complex_roots) {
            out += format_double(r.z.real());
            out += ',';
            out += format_double(r.z.imag());
            out += ',';
            out += format_double(r.residual);
            out += ',';
            out += family;
            out += ',';
            out += std::to_string(inst.param);
            out += ",\n";
        }
    }
    return out;
}

std::vector<SweepRequest> figure_sweep_requests(std::uint64_t seed) {
    auto make = [&](FamilyKind kind, int from, int to,
                    std::map<std::string, int> fixed = {}) {
        SweepRequest r;
        r.kind = kind;
        r.from = from;
        r.to = to;
        r.fixed = std::move(fixed);
        r.options.aberth.seed = seed;
        return r;
    };
    return {
        make(FamilyKind::Star, 1, 60),
        make(FamilyKind::CompleteBipartiteBalanced, 1, 40),
        make(FamilyKind::DutchWindmill, 1, 30),
        make(FamilyKind::CliqueComposition, 8, 8, {{"t", 8}}),
        make(FamilyKind::PendantDutchWindmill, 1, 30),
        make(FamilyKind::Fan, 1, 30, {{"m", 2}}),
        make(FamilyKind::GemPlusEdge, 1, 30),
        make(FamilyKind::Wheel, 1, 30),
    };
}

}  // namespace dompoly::app
