#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "helpers.hpp"
#include "oddcolor/formats.hpp"

using namespace th;

namespace {

std::string data_file(const std::string& name) {
  std::ifstream in(std::string(ODDCOLOR_TEST_DATA) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string bytes(std::initializer_list<int> b) {
  std::string out(kPlanarCodeHeader);
  for (int x : b) out.push_back(static_cast<char>(x));
  return out;
}

}  // namespace

TEST_SUITE("formats") {
  TEST_CASE("graph6 reference strings") {
    CHECK(parse_graph6("Bw") == complete(3));
    CHECK(parse_graph6("C~") == complete(4));
    CHECK(parse_graph6("@") == edges(1, {}));
    CHECK(parse_graph6(">>graph6<<Bw\n") == complete(3));
    CHECK(encode_graph6(complete(3)) == "Bw");
    CHECK(encode_graph6(complete(4)) == "C~");
    CHECK(encode_graph6(edges(1, {})) == "@");
  }

  TEST_CASE("graph6 against a reference encoder") {
    std::istringstream in(data_file("graph6_reference.txt"));
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string g6, edge_text;
      int n = 0;
      std::getline(fields, g6, '\t');
      fields >> n;
      fields.ignore();
      std::getline(fields, edge_text);
      std::vector<Edge> e;
      std::istringstream es(edge_text);
      std::string tok;
      while (es >> tok) {
        auto dash = tok.find('-');
        e.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
      }
      Graph want = Graph::from_edges(n, e);
      CHECK(parse_graph6(g6) == want);
      CHECK(encode_graph6(want) == g6);
      ++count;
    }
    CHECK(count == 80);
  }

  TEST_CASE("graph6 errors carry offsets") {
    auto offset_of = [](std::string_view s) -> long {
      try {
        parse_graph6(s);
      } catch (const FormatError& e) {
        return static_cast<long>(e.offset());
      }
      return -1;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("Bw?") == 2);      // trailing garbage
    CHECK(offset_of("Bx") == 1);       // padding bit set
    CHECK(offset_of("B w") == 1);      // byte below 63
    CHECK(offset_of("~~??????") == 0);  // 8-byte header
    CHECK(offset_of("C") == 1);        // truncated
  }

  TEST_CASE("graph6 stream") {
    auto gs = parse_graph6_stream(">>graph6<<Bw\n\nC~\r\n@");
    REQUIRE(gs.size() == 3);
    CHECK(gs[1] == complete(4));
    try {
      parse_graph6_stream("Bw\nBx\n");
      FAIL("expected an error");
    } catch (const FormatError& e) {
      CHECK(e.offset() == 4);
    }
    auto atlas = parse_graph6_stream(data_file("connected_upto7.g6"));
    CHECK(atlas.size() == 996);
  }

  TEST_CASE("planar_code") {
    auto k3 = parse_planar_code(bytes({3, 2, 3, 0, 3, 1, 0, 1, 2, 0}));
    REQUIRE(k3.size() == 1);
    CHECK(k3[0].graph() == complete(3));
    CHECK(faces(k3[0]).size() == 2);
    CHECK(parse_planar_code(std::string(kPlanarCodeHeader)).empty());
    CHECK(looks_like_planar_code(bytes({})));
    CHECK_FALSE(looks_like_planar_code("Bw\n"));
  }

  TEST_CASE("planar_code round trip") {
    std::mt19937_64 rng(41);
    std::vector<PlaneGraph> gs;
    for (int i = 0; i < 50; ++i) gs.push_back(corpus::random_triangulation(4 + static_cast<int>(rng() % 60), rng));
    for (const auto& p : corpus::all_connected_plane_graphs(4)) gs.push_back(p);
    std::string data = encode_planar_code(gs);
    auto back = parse_planar_code(data);
    REQUIRE(back.size() == gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) CHECK(back[i] == gs[i]);

    auto tris = corpus::triangulations(4);
    auto four = parse_planar_code(encode_planar_code(tris));
    REQUIRE(four.size() == 1);
    CHECK(four[0].graph() == complete(4));
  }

  TEST_CASE("planar_code errors") {
    auto offset_of = [](const std::string& s) -> long {
      try {
        parse_planar_code(s);
      } catch (const FormatError& e) {
        return static_cast<long>(e.offset());
      }
      return -1;
    };
    CHECK(offset_of("nope") == 0);
    CHECK(offset_of(bytes({3, 2, 3, 0, 3, 1})) == 21);        // truncated
    CHECK(offset_of(bytes({3, 2, 9, 0, 3, 1, 0, 1, 2, 0})) == 17);  // neighbor out of range
    CHECK(offset_of(bytes({3, 2, 0, 1, 0, 0})) == 15);         // not connected
    CHECK(offset_of(bytes({3, 2, 0, 3, 0, 1, 0})) == 15);      // asymmetric rotation
    CHECK(offset_of(bytes({0})) == 15);                         // wide format
    // K5 written with plain rotations is not plane.
    std::vector<int> k5{5};
    for (int v = 1; v <= 5; ++v) {
      for (int w = 1; w <= 5; ++w)
        if (w != v) k5.push_back(w);
      k5.push_back(0);
    }
    std::string raw(kPlanarCodeHeader);
    for (int x : k5) raw.push_back(static_cast<char>(x));
    CHECK(offset_of(raw) == 15);
  }

  TEST_CASE("planar_code reader resumes after a bad record") {
    std::string data = bytes({3, 2, 9, 0, 3, 1, 0, 1, 2, 0, 3, 2, 3, 0, 3, 1, 0, 1, 2, 0});
    std::istringstream in(data);
    PlanarCodeReader reader(in);
    CHECK_THROWS_AS(reader.next(), FormatError);
    auto ok = reader.next();
    REQUIRE(ok.has_value());
    CHECK(ok->graph() == complete(3));
    CHECK_FALSE(reader.next().has_value());
  }
}
