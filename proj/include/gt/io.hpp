#ifndef GT_IO_HPP
#define GT_IO_HPP

#include <string>

#include "gt/annealing.hpp"
#include "gt/graph.hpp"

namespace gt {

// {"vertices":[...], "edges":[[u,v],...], "potential":{vertex:number,...}}
struct GraphInput {
  Graph graph;
  Potential potential;
  std::string sha256;  // of the raw file bytes
};

GraphInput load_graph_file(const std::string& path);

// {"vertices":[...], "edges":[[u,v],...], "energy":{vertex:int,...}}
struct LandscapeInput {
  Landscape landscape;
  std::string sha256;
};

LandscapeInput load_landscape_file(const std::string& path);

std::string sha256_hex(const std::string& bytes);

}  // namespace gt

#endif
