#include "oddcolor/formats.hpp"

#include <sstream>

namespace oddcolor {

namespace {

constexpr int kSmallLimit = 62;
constexpr int kMediumLimit = 258047;

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  std::size_t pos = 0;
  if (line.starts_with(">>graph6<<")) pos = 10;
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= line.size()) throw FormatError("graph6: unexpected end of line", i);
    int b = static_cast<unsigned char>(line[i]);
    if (b < 63 || b > 126) throw FormatError("graph6: byte outside 63..126", i);
    return b - 63;
  };
  if (pos >= line.size()) throw FormatError("graph6: empty line", pos);

  long n = 0;
  if (line[pos] == '~') {
    if (pos + 1 < line.size() && line[pos + 1] == '~')
      throw FormatError("graph6: 8-byte size header is not supported", pos);
    for (int i = 1; i <= 3; ++i) n = (n << 6) | byte_at(pos + i);
    if (n <= kSmallLimit) throw FormatError("graph6: non-canonical extended size header", pos);
    pos += 4;
  } else {
    n = byte_at(pos);
    pos += 1;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t groups = (bits + 5) / 6;
  for (std::size_t k = pos; k < std::min(line.size(), pos + groups); ++k) byte_at(k);
  if (line.size() - pos > groups) throw FormatError("graph6: trailing garbage", pos + groups);
  std::vector<Edge> edges;
  std::size_t bit = 0;
  int i = 0, j = 1;
  for (std::size_t gidx = 0; gidx < groups; ++gidx) {
    int value = byte_at(pos + gidx);
    for (int b = 5; b >= 0; --b, ++bit) {
      bool set = (value >> b) & 1;
      if (bit >= bits) {
        if (set) throw FormatError("graph6: nonzero padding bits", pos + gidx);
        continue;
      }
      if (set) edges.emplace_back(i + 1, j + 1);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const long n = g.order();
  std::string out;
  if (n <= kSmallLimit) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= kMediumLimit) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw std::invalid_argument("encode_graph6: graphs above 258047 vertices are not supported");
  }
  int value = 0, filled = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + value));
        value = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
  return out;
}

std::vector<Graph> parse_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const FormatError& e) {
        throw FormatError(std::string("line ") + std::to_string(out.size() + 1) + ": " + e.what(), start + e.offset());
      }
    }
    start = end + 1;
  }
  return out;
}

PlanarCodeReader::PlanarCodeReader(std::istream& in) : in_(in) {
  std::string header(kPlanarCodeHeader.size(), '\0');
  in_.read(header.data(), static_cast<std::streamsize>(header.size()));
  if (in_.gcount() != static_cast<std::streamsize>(header.size()) || header != kPlanarCodeHeader)
    throw FormatError("planar_code: missing >>planar_code<< header", 0);
  offset_ = header.size();
}

int PlanarCodeReader::get() {
  int c = in_.get();
  if (c == std::char_traits<char>::eof()) return -1;
  ++offset_;
  return c;
}

std::optional<PlaneGraph> PlanarCodeReader::next() {
  const std::size_t record_start = offset_;
  int n = get();
  if (n < 0) return std::nullopt;
  if (n == 0) throw FormatError("planar_code: wide (>=256 vertex) records are not supported", record_start);
  std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(n) + 1);
  // A bad neighbor is reported only after the record's terminators are
  // consumed, so a caller may keep reading from the next record.
  std::optional<FormatError> bad;
  for (Vertex v = 1; v <= n; ++v) {
    while (true) {
      int b = get();
      if (b < 0) throw FormatError("planar_code: truncated record", offset_);
      if (b == 0) break;
      if (b > n && !bad) bad.emplace("planar_code: neighbor " + std::to_string(b) + " out of range", offset_ - 1);
      rotation[v].push_back(b);
    }
  }
  if (bad) throw *bad;
  PlaneGraph p;
  try {
    p = PlaneGraph::from_rotation(std::move(rotation));
  } catch (const GraphError& e) {
    throw FormatError(std::string("planar_code: ") + e.what(), record_start);
  }
  bool euler = false;
  try {
    euler = check_euler(p);
  } catch (const GraphError&) {
    throw FormatError("planar_code: record is disconnected", record_start);
  }
  if (!euler) throw FormatError("planar_code: rotation system is not plane (Euler check failed)", record_start);
  ++records_;
  return p;
}

std::vector<PlaneGraph> parse_planar_code(std::string_view bytes) {
  std::istringstream in{std::string(bytes)};
  PlanarCodeReader reader(in);
  std::vector<PlaneGraph> out;
  while (auto p = reader.next()) out.push_back(std::move(*p));
  return out;
}

std::string encode_planar_code_record(const PlaneGraph& p) {
  if (p.order() < 1 || p.order() > 255) throw std::invalid_argument("planar_code: order must be in 1..255");
  std::string out;
  out.push_back(static_cast<char>(p.order()));
  for (Vertex v = 1; v <= p.order(); ++v) {
    for (Vertex w : p.rotation(v)) out.push_back(static_cast<char>(w));
    out.push_back('\0');
  }
  return out;
}

std::string encode_planar_code(std::span<const PlaneGraph> graphs) {
  std::string out(kPlanarCodeHeader);
  for (const auto& p : graphs) out += encode_planar_code_record(p);
  return out;
}

bool looks_like_planar_code(std::string_view bytes) { return bytes.starts_with(kPlanarCodeHeader); }

}  // namespace oddcolor
