#pragma once

#include <string>
#include <vector>

#include "hodgekp/curve.hpp"

namespace hodgekp::cli {

// Parses "point = q p s" lines; '#' starts a comment. Error on malformed lines.
std::vector<CurveParams> parse_catalog(const std::string& text);

// Explicit path if given; else the installed file, the source-tree file, then the built-in list.
std::vector<CurveParams> load_catalog(const std::string& path, std::string* source = nullptr);

}  // namespace hodgekp::cli
