// report_io.hpp
// JSON/CSV serialization for computation results. Exact quantities
// (coefficients, interval endpoints) are emitted as decimal strings so
// they survive any JSON reader; numerical roots are emitted as floats.
#pragma once

#include <string>

#include "dompoly/dom_engine.hpp"
#include "dompoly/roots.hpp"

namespace dompoly::app {

// Shortest exact form via %.17g; shared by CSV and SVG so coordinates
// match byte for byte across outputs.
std::string format_double(double v);

// Index of the lowest nonzero coefficient (the domination number when p
// is a domination polynomial); 0 for constants.
int low_degree(const IntPolynomial& p);

std::string poly_json(const DominationPolynomial& dp, int vertex_count);
std::string report_json(const RootReport& report);
std::string report_csv(const RootReport& report);  // re,im,residual

}  // namespace dompoly::app
