#pragma once

#include <string>
#include <vector>

#include "pernloci/dynamics.hpp"

namespace pernloci {

struct SvgLayer {
    std::string label;  ///< curves sharing a label share a color
    std::vector<std::vector<cplx>> polygons;
    bool dashed = false;
};

/// Marked points as labelled dots, solid input curves, dashed preimage
/// components; the viewport fits every finite point with a 10% margin.
std::string render_svg(const MarkedSet& marks, const std::vector<SvgLayer>& layers, const std::string& title = "");

std::string xml_escape(const std::string& s);

/// Throws IO on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace pernloci
