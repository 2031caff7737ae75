#include "oddcolor/coloring.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"

namespace oddcolor {

std::vector<Color> ColorSet::to_vector() const {
  std::vector<Color> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Coloring::Coloring(int n, int k) : k_(k), colors_(static_cast<std::size_t>(n) + 1, kNoColor) {
  if (k < 1 || k > kMaxPalette) throw ColoringError("palette size must be in 1.." + std::to_string(kMaxPalette));
}

Coloring::Coloring(int k, std::vector<Color> colors_1_based) : Coloring(static_cast<int>(colors_1_based.size()), k) {
  for (std::size_t i = 0; i < colors_1_based.size(); ++i) {
    if (colors_1_based[i] != kNoColor) assign(static_cast<Vertex>(i + 1), colors_1_based[i]);
  }
}

bool Coloring::total() const {
  for (std::size_t v = 1; v < colors_.size(); ++v)
    if (colors_[v] == kNoColor) return false;
  return true;
}

void Coloring::assign(Vertex v, Color c) {
  if (v < 1 || v > order()) throw ColoringError("unknown vertex " + std::to_string(v));
  if (c < 1 || c > k_) throw ColoringError("color " + std::to_string(c) + " outside palette 1.." + std::to_string(k_));
  colors_[v] = c;
}

int Coloring::colors_used() const {
  ColorSet used;
  for (std::size_t v = 1; v < colors_.size(); ++v)
    if (colors_[v] != kNoColor) used.insert(colors_[v]);
  return used.size();
}

namespace {

void require_total(const Graph& g, const Coloring& c, const char* what) {
  if (c.order() != g.order()) throw ColoringError(std::string(what) + ": coloring size does not match graph");
  if (!c.total()) throw ColoringError(std::string(what) + ": coloring is partial");
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
  require_total(g, c, "is_proper");
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

ColorSet odd_colors(const Graph& g, const Coloring& c, Vertex v) {
  if (c.order() != g.order()) throw ColoringError("odd_colors: coloring size does not match graph");
  const auto& nbrs = g.neighbors(v);
  if (nbrs.empty()) throw ColoringError("odd_colors: vertex " + std::to_string(v) + " is isolated");
  ColorSet odd;
  for (Vertex u : nbrs) {
    if (!c.assigned(u)) throw ColoringError("odd_colors: neighbor " + std::to_string(u) + " is uncolored");
    odd.toggle(c[u]);
  }
  return odd;
}

OddReport is_odd_coloring(const Graph& g, const Coloring& c) {
  require_total(g, c, "is_odd_coloring");
  OddReport report;
  report.odd.resize(static_cast<std::size_t>(g.order()) + 1);
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) report.monochromatic.emplace_back(u, v);
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) == 0) continue;
    report.odd[v] = odd_colors(g, c, v);
    if (report.odd[v].empty()) report.failing.push_back(v);
  }
  report.proper = report.monochromatic.empty();
  report.verdict = report.proper && report.failing.empty();
  return report;
}

ColorSet forbidden_colors_at(const Graph& g, const Coloring& c, Vertex v) {
  if (c.order() != g.order()) throw ColoringError("forbidden_colors_at: coloring size does not match graph");
  const auto& nbrs = g.neighbors(v);
  for (Vertex u : nbrs)
    if (!c.assigned(u)) throw ColoringError("forbidden_colors_at: neighbor " + std::to_string(u) + " is uncolored");
  const ColorSet all = ColorSet::palette(c.palette());
  if (nbrs.empty()) return {};

  ColorSet forbidden;
  ColorSet own;
  for (Vertex u : nbrs) {
    forbidden.insert(c[u]);
    own.toggle(c[u]);
  }
  if (own.empty()) return all;

  for (Vertex u : nbrs) {
    ColorSet rest;
    for (Vertex x : g.neighbors(u)) {
      if (x == v) continue;
      if (!c.assigned(x)) throw ColoringError("forbidden_colors_at: vertex " + std::to_string(x) + " is uncolored");
      rest.toggle(c[x]);
    }
    // Adding c0 toggles it; the result is empty only when rest == {c0}.
    if (rest.size() == 1) forbidden.insert(rest.first());
  }
  return forbidden & all;
}

std::string to_json(const Coloring& c) {
  nlohmann::ordered_json j;
  j["k"] = c.palette();
  nlohmann::ordered_json colors = nlohmann::ordered_json::object();
  for (Vertex v = 1; v <= c.order(); ++v)
    if (c.assigned(v)) colors[std::to_string(v)] = c[v];
  j["colors"] = std::move(colors);
  return j.dump() + "\n";
}

Coloring coloring_from_json(std::string_view text, int n) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ColoringError(std::string("coloring JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("colors") || !j["k"].is_number_integer() ||
      !j["colors"].is_object())
    throw ColoringError("coloring JSON must be {\"k\": int, \"colors\": {vertex: color}}");
  Coloring out(n, j["k"].get<int>());
  for (const auto& [key, value] : j["colors"].items()) {
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc() || ptr != key.data() + key.size()) throw ColoringError("bad vertex id '" + key + "'");
    if (!value.is_number_integer()) throw ColoringError("color of vertex " + key + " is not an integer");
    out.assign(v, value.get<int>());
  }
  return out;
}

std::string to_text(const Coloring& c) {
  std::ostringstream os;
  os << "# k " << c.palette() << '\n';
  for (Vertex v = 1; v <= c.order(); ++v)
    if (c.assigned(v)) os << v << ' ' << c[v] << '\n';
  return os.str();
}

Coloring coloring_from_text(std::string_view text, int n) {
  std::istringstream is{std::string(text)};
  std::string line;
  int k = 0, max_color = 1;
  std::vector<std::pair<Vertex, Color>> entries;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == '#') {
      std::string hash, tag;
      int value = 0;
      if (ls >> hash >> tag >> value && tag == "k") k = value;
      continue;
    }
    Vertex v = 0;
    Color col = 0;
    std::string extra;
    if (!(ls >> v >> col) || (ls >> extra)) throw ColoringError("coloring text line " + std::to_string(lineno) + ": expected 'v c'");
    entries.emplace_back(v, col);
    max_color = std::max(max_color, col);
  }
  if (k == 0) k = max_color;
  Coloring out(n, k);
  for (auto [v, col] : entries) out.assign(v, col);
  return out;
}

Coloring parse_coloring(std::string_view text, int n) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return coloring_from_json(text, n);
  return coloring_from_text(text, n);
}

}  // namespace oddcolor
