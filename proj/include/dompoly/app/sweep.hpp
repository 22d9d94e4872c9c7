// sweep.hpp
// Parameter sweeps over graph families: one root analysis per parameter
// value, aggregated into CSV rows (and optionally an SVG scatter, see
// svg.hpp). Instances are independent and may run in parallel; results
// are always emitted in parameter order.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "dompoly/families.hpp"
#include "dompoly/roots.hpp"

namespace dompoly::app {

struct SweepRequest {
    FamilyKind kind = FamilyKind::Star;
    std::string free_param = "n";
    std::map<std::string, int> fixed;  // the family's other parameters
    int from = 1;
    int to = 1;  // inclusive
    RootAnalysisOptions options;
    int max_degree = 2000;  // per-instance guard for the root pipeline
};

struct SweepInstance {
    int param = 0;
    FamilySpec spec;
    bool ok = false;
    std::string error;  // set when the instance failed; the sweep continues
    RootReport report;
};

struct SweepResult {
    SweepRequest request;
    std::vector<SweepInstance> instances;  // ascending by param
};

SweepResult run_sweep(const SweepRequest& request);

// One row per root: re,im,residual,family,param,error. A failed instance
// contributes one row with only family, param and error set.
std::string sweep_csv(const SweepResult& result);

// The standing figure-reproduction set: star 1..60, balanced complete
// bipartite 1..40, windmill 1..30, windmill-clique n=8 t=8, pendant
// windmill 1..30, fan m=2 n=1..30, gem-plus-edge 1..30, wheel 1..30.
std::vector<SweepRequest> figure_sweep_requests(std::uint64_t seed = 1);

}  // namespace dompoly::app
