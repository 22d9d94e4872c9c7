// svg.hpp
// Scatter plots of sweep root sets. Pure presentation: every plotted
// point carries its data coordinates verbatim (same formatting as the
// CSV) in data-re/data-im attributes.
#pragma once

#include <string>

#include "dompoly/app/sweep.hpp"

namespace dompoly::app {

struct SvgOptions {
    std::string title;
    bool overlay_unit_circle = false;  // draws |z+1| = 1 for comparison
};

std::string sweep_svg(const SweepResult& result, const SvgOptions& options = {});

}  // namespace dompoly::app
