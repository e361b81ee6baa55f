#include "catalog.hpp"

#include <fstream>
#include <sstream>

#include "hodgekp/error.hpp"

namespace hodgekp::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

std::vector<CurveParams> parse_catalog(const std::string& text) {
  std::vector<CurveParams> points;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error("catalog line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key != "point") throw Error("catalog line " + std::to_string(lineno) + ": unknown key " + key);
    std::istringstream vals(line.substr(eq + 1));
    std::string q, p, s, extra;
    if (!(vals >> q >> p >> s) || (vals >> extra))
      throw Error("catalog line " + std::to_string(lineno) + ": expected three rationals q p s");
    points.push_back(CurveParams::make(parse_rational(q), parse_rational(p), parse_rational(s)));
  }
  if (points.empty()) throw Error("catalog has no points");
  return points;
}

std::vector<CurveParams> load_catalog(const std::string& path, std::string* source) {
  std::string text;
  if (!path.empty()) {
    if (!read_file(path, text)) throw Error("cannot read catalog " + path);
    if (source) *source = path;
    return parse_catalog(text);
  }
  for (const char* candidate : {HODGEKP_CATALOG_FILE, HODGEKP_SOURCE_CATALOG})
    if (read_file(candidate, text)) {
      if (source) *source = candidate;
      return parse_catalog(text);
    }
  if (source) *source = "built-in";
  return catalog_points();
}

}  // namespace hodgekp::cli
