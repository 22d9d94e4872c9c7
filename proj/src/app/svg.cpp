#include "dompoly/app/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dompoly/app/report_io.hpp"

namespace dompoly::app {

namespace {

constexpr double kSize = 800;
constexpr double kMarginPx = 64;  // room for axis labels

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string sweep_svg(const SweepResult& result, const SvgOptions& options) {
    // Data window: tight on the real axis, symmetric about it on the
    // imaginary axis, 5% margin on every side.
    double re_lo = 0, re_hi = 0, im_max = 0;
    bool any = false;
    for (const SweepInstance& inst : result.instances) {
        if (!inst.ok) continue;
        for (const ComplexRoot& r : inst.report.complex_roots) {
            if (!any) {
                re_lo = re_hi = r.z.real();
                any = true;
            }
            re_lo = std::min(re_lo, r.z.real());
            re_hi = std::max(re_hi, r.z.real());
            im_max = std::max(im_max, std::fabs(r.z.imag()));
        }
    }
    if (!any) {
        re_lo = -1;
        re_hi = 1;
        im_max = 1;
    }
    double re_span = re_hi - re_lo;
    if (re_span < 1e-9) re_span = 1e-9;
    if (im_max < 1e-9) im_max = 1e-9;
    re_lo -= re_span * 0.05;
    re_hi += re_span * 0.05;
    im_max *= 1.10;

    const double plot = kSize - 2 * kMarginPx;
    const double sx = plot / (re_hi - re_lo);
    const double sy = plot / (2 * im_max);
    auto px = [&](double re) { return kMarginPx + (re - re_lo) * sx; };
    auto py = [&](double im) { return kMarginPx + (im_max - im) * sy; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    if (!options.title.empty())
        svg += "  <title>" + escape(options.title) + "</title>\n";
    svg += "  <style>.root{fill:#20609c;fill-opacity:0.6;stroke:none}"
           ".axis{stroke:#777;stroke-width:1}"
           ".guide{stroke:#b04a4a;stroke-width:1;stroke-dasharray:5 4;fill:none}"
           ".lbl{font:13px monospace;fill:#333}</style>\n";
    svg += "  <rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
    svg += "  <rect x=\"" + num(kMarginPx) + "\" y=\"" + num(kMarginPx) + "\" width=\"" +
           num(plot) + "\" height=\"" + num(plot) +
           "\" fill=\"none\" stroke=\"#aaa\" stroke-width=\"1\"/>\n";

    // Real axis (always inside: the imaginary window is symmetric).
    svg += "  <line class=\"axis\" x1=\"" + num(kMarginPx) + "\" y1=\"" + num(py(0)) +
           "\" x2=\"" + num(kSize - kMarginPx) + "\" y2=\"" + num(py(0)) + "\"/>\n";
    if (re_lo < 0 && re_hi > 0)
        svg += "  <line class=\"axis\" x1=\"" + num(px(0)) + "\" y1=\"" + num(kMarginPx) +
               "\" x2=\"" + num(px(0)) + "\" y2=\"" + num(kSize - kMarginPx) + "\"/>\n";

    // Window annotations.
    char lab[64];
    std::snprintf(lab, sizeof lab, "%.6g", re_lo);
    svg += "  <text class=\"lbl\" x=\"" + num(kMarginPx) + "\" y=\"" +
           num(kSize - kMarginPx / 3) + "\">Re=" + lab + "</text>\n";
    std::snprintf(lab, sizeof lab, "%.6g", re_hi);
    svg += "  <text class=\"lbl\" x=\"" + num(kSize - kMarginPx - 120) + "\" y=\"" +
           num(kSize - kMarginPx / 3) + "\">Re=" + lab + "</text>\n";
    std::snprintf(lab, sizeof lab, "%.6g", im_max);
    svg += "  <text class=\"lbl\" x=\"4\" y=\"" + num(kMarginPx - 8) + "\">Im=" + lab +
           "</text>\n";

    if (options.overlay_unit_circle)
        svg += "  <ellipse class=\"guide\" cx=\"" + num(px(-1)) + "\" cy=\"" + num(py(0)) +
               "\" rx=\"" + num(sx) + "\" ry=\"" + num(sy) + "\"/>\n";

    for (const SweepInstance& inst : result.instances) {
        if (!inst.ok) continue;
        for (const ComplexRoot& r : inst.report.complex_roots) {
            svg += "  <circle class=\"root\" cx=\"" + num(px(r.z.real())) + "\" cy=\"" +
                   num(py(r.z.imag())) + "\" r=\"2.5\" data-re=\"" +
                   format_double(r.z.real()) + "\" data-im=\"" + format_double(r.z.imag()) +
                   "\" data-param=\"" + std::to_string(inst.param) + "\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace dompoly::app
