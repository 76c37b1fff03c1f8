#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "gt/errors.hpp"
#include "gt/io.hpp"
#include "test_util.hpp"

using gtt::throws_with_code;

namespace {

// Each case writes its inputs under a scratch directory next to the test
// binary so runs are hermetic and repeatable.
struct Scratch {
  std::filesystem::path dir;
  Scratch() : dir(std::filesystem::path("io_test_tmp")) {
    std::filesystem::create_directories(dir);
  }
  ~Scratch() { std::filesystem::remove_all(dir); }
  std::string put(const std::string& name, const std::string& content) const {
    auto p = dir / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p.string();
  }
};

const char* kP3 = R"({
  "vertices": ["a", "b", "c"],
  "edges": [["a", "b"], ["b", "c"]],
  "potential": {"a": 0, "b": 1, "c": 0}
})";

const char* kLandscape = R"({
  "vertices": ["v0", "v1", "v2", "v3", "v4"],
  "edges": [["v0", "v1"], ["v1", "v2"], ["v2", "v3"], ["v3", "v4"]],
  "energy": {"v0": 0, "v1": 1, "v2": 2, "v3": 1, "v4": 0}
})";

}  // namespace

TEST_CASE("sha256 known answers") {
  CHECK(gt::sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(gt::sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("graph files round-trip") {
  Scratch s;
  auto path = s.put("p3.json", kP3);
  auto in = gt::load_graph_file(path);
  CHECK(in.graph.size() == 3);
  CHECK(in.graph.label(0) == "a");
  CHECK(in.graph.has_edge(0, 1));
  CHECK(in.graph.has_edge(1, 2));
  CHECK(!in.graph.has_edge(0, 2));
  CHECK(in.potential.value(0) == 0.0);
  CHECK(in.potential.value(1) == 1.0);
  CHECK(in.sha256 == gt::sha256_hex(kP3));
  CHECK(in.sha256.size() == 64);
}

TEST_CASE("landscape files round-trip") {
  Scratch s;
  auto in = gt::load_landscape_file(s.put("l.json", kLandscape));
  CHECK(in.landscape.graph().size() == 5);
  CHECK(in.landscape.energies() == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(in.landscape.minima() == std::vector<int>{0, 4});
  CHECK(in.sha256 == gt::sha256_hex(kLandscape));
}

TEST_CASE("missing and malformed files") {
  Scratch s;
  CHECK(throws_with_code(
      [&] { gt::load_graph_file((s.dir / "nope.json").string()); }, "FileNotFound"));
  auto bad = s.put("bad.json", "{ not json");
  CHECK(throws_with_code([&] { gt::load_graph_file(bad); }, "ParseError"));
}

TEST_CASE("graph schema violations") {
  Scratch s;
  CHECK(throws_with_code(
      [&] { gt::load_graph_file(s.put("a.json", R"({"edges": [], "potential": {}})")); },
      "ParseError"));
  CHECK(throws_with_code(
      [&] {
        gt::load_graph_file(s.put("b.json", R"({"vertices": [1], "edges": [], "potential": {}})"));
      },
      "ParseError"));
  CHECK(throws_with_code(
      [&] {
        gt::load_graph_file(
            s.put("c.json", R"({"vertices": ["a"], "edges": [["a"]], "potential": {"a": 0}})"));
      },
      "ParseError"));
  CHECK(throws_with_code(
      [&] {
        gt::load_graph_file(
            s.put("d.json", R"({"vertices": ["a"], "edges": [], "potential": {"a": "x"}})"));
      },
      "ParseError"));
  // Structural errors propagate from the graph layer.
  CHECK(throws_with_code(
      [&] {
        gt::load_graph_file(s.put(
            "e.json",
            R"({"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]],
                "potential": {"a": 0, "b": 1}})"));
      },
      "DuplicateEdge"));
  CHECK(throws_with_code(
      [&] {
        gt::load_graph_file(
            s.put("f.json", R"({"vertices": ["a"], "edges": [], "potential": {}})"));
      },
      "MissingPotential"));
}

TEST_CASE("landscape schema violations") {
  Scratch s;
  CHECK(throws_with_code(
      [&] {
        gt::load_landscape_file(s.put(
            "a.json",
            R"({"vertices": ["a", "b"], "edges": [["a", "b"]], "energy": {"a": 0, "b": 1.5}})"));
      },
      "InvalidLandscape"));
  CHECK(throws_with_code(
      [&] {
        gt::load_landscape_file(s.put(
            "b.json", R"({"vertices": ["a", "b"], "edges": [["a", "b"]], "energy": {"a": 0}})"));
      },
      "InvalidLandscape"));
  CHECK(throws_with_code(
      [&] {
        gt::load_landscape_file(s.put(
            "c.json",
            R"({"vertices": ["a", "b"], "edges": [["a", "b"]], "energy": {"a": 0, "b": 0}})"));
      },
      "InvalidLandscape"));
}
