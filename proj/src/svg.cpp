#include "pernloci/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>

#include "pernloci/error.hpp"

namespace pernloci {

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += ch;
        }
    }
    return out;
}

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

std::string render_svg(const MarkedSet& marks, const std::vector<SvgLayer>& layers, const std::string& title) {
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    auto grow = [&](const cplx& z) {
        x0 = std::min(x0, z.real());
        x1 = std::max(x1, z.real());
        y0 = std::min(y0, z.imag());
        y1 = std::max(y1, z.imag());
    };
    for (const auto& p : marks.points()) {
        if (p.pos.is_finite()) grow(p.pos.value());
    }
    for (const auto& l : layers) {
        for (const auto& poly : l.polygons) {
            for (const auto& z : poly) grow(z);
        }
    }
    if (!std::isfinite(x0)) x0 = y0 = -1.0, x1 = y1 = 1.0;
    double w = std::max(x1 - x0, 1e-9), h = std::max(y1 - y0, 1e-9);
    const double side = std::max(w, h);
    // Square viewport, 10% margin on every side.
    const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
    const double half = 0.5 * side * 1.2;
    const double size = 800.0;
    auto sx = [&](double x) { return (x - (cx - half)) / (2 * half) * size; };
    auto sy = [&](double y) { return ((cy + half) - y) / (2 * half) * size; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(size) + "\" height=\"" + num(size + 40) +
           "\" viewBox=\"0 0 " + num(size) + " " + num(size + 40) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(size) + "\" height=\"" + num(size + 40) + "\" fill=\"white\"/>\n";
    if (!title.empty()) out += "<title>" + xml_escape(title) + "</title>\n";

    std::map<std::string, std::string> colors;
    for (const auto& l : layers) {
        if (!colors.count(l.label)) colors[l.label] = kPalette[colors.size() % (sizeof kPalette / sizeof *kPalette)];
    }
    for (const auto& l : layers) {
        for (const auto& poly : l.polygons) {
            std::string pts;
            for (const auto& z : poly) pts += num(sx(z.real())) + "," + num(sy(z.imag())) + " ";
            out += "<polygon points=\"" + pts + "\" fill=\"none\" stroke=\"" + colors[l.label] + "\" stroke-width=\"1.5\"";
            if (l.dashed) out += " stroke-dasharray=\"6,4\"";
            out += "><title>" + xml_escape(l.label) + "</title></polygon>\n";
        }
    }
    std::string at_inf;
    for (const auto& p : marks.points()) {
        if (p.pos.is_inf()) {
            at_inf = p.label;
            continue;
        }
        const double px = sx(p.pos.value().real()), py = sy(p.pos.value().imag());
        out += "<circle cx=\"" + num(px) + "\" cy=\"" + num(py) + "\" r=\"4\" fill=\"black\"/>\n";
        out += "<text x=\"" + num(px + 6) + "\" y=\"" + num(py - 6) + "\" font-family=\"sans-serif\" font-size=\"14\">" +
               xml_escape(p.label) + "</text>\n";
    }
    std::string legend;
    for (const auto& [label, color] : colors) {
        legend += "<tspan fill=\"" + color + "\">" + xml_escape(label) + "</tspan> ";
    }
    if (!at_inf.empty()) legend += "(marked at infinity: " + xml_escape(at_inf) + ")";
    out += "<text x=\"10\" y=\"" + num(size + 28) + "\" font-family=\"sans-serif\" font-size=\"14\">" + legend + "</text>\n";
    out += "</svg>\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    out << content;
    if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace pernloci
