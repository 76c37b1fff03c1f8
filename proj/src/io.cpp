#include "gt/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include <openssl/evp.h>

#include "json.hpp"

#include "gt/errors.hpp"

namespace gt {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("FileNotFound", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json parse(const std::string& raw, const std::string& path) {
  nlohmann::json doc = nlohmann::json::parse(raw, nullptr, false);
  if (doc.is_discarded())
    throw ValidationError("ParseError", path + " is not valid JSON");
  return doc;
}

std::vector<std::string> read_vertices(const nlohmann::json& doc, const std::string& path) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw ValidationError("ParseError", path + ": expected a \"vertices\" array");
  std::vector<std::string> out;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string())
      throw ValidationError("ParseError", path + ": vertex labels must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> read_edges(const nlohmann::json& doc,
                                                            const std::string& path) {
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw ValidationError("ParseError", path + ": expected an \"edges\" array");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ValidationError("ParseError",
                            path + ": each edge must be a pair of vertex labels");
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw NumericalError("DigestFailure", "SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

GraphInput load_graph_file(const std::string& path) {
  const std::string raw = read_file(path);
  const nlohmann::json doc = parse(raw, path);

  const auto vertices = read_vertices(doc, path);
  const auto edges = read_edges(doc, path);
  if (!doc.contains("potential") || !doc["potential"].is_object())
    throw ValidationError("ParseError", path + ": expected a \"potential\" object");
  std::map<std::string, double> values;
  for (const auto& [key, val] : doc["potential"].items()) {
    if (!val.is_number())
      throw ValidationError("ParseError", path + ": potential values must be numbers");
    values[key] = val.get<double>();
  }

  GraphInput input;
  input.graph = Graph::build(vertices, edges);
  input.potential = Potential::build(input.graph, values);
  input.sha256 = sha256_hex(raw);
  return input;
}

LandscapeInput load_landscape_file(const std::string& path) {
  const std::string raw = read_file(path);
  const nlohmann::json doc = parse(raw, path);

  const auto vertices = read_vertices(doc, path);
  const auto edges = read_edges(doc, path);
  if (!doc.contains("energy") || !doc["energy"].is_object())
    throw ValidationError("ParseError", path + ": expected an \"energy\" object");

  Graph graph = Graph::build(vertices, edges);
  std::vector<int> energy(vertices.size(), 0);
  std::vector<bool> seen(vertices.size(), false);
  for (const auto& [key, val] : doc["energy"].items()) {
    if (!val.is_number_integer())
      throw ValidationError("InvalidLandscape",
                            path + ": energies must be integers (" + key + ")");
    const int idx = graph.index_of(key);
    energy[idx] = val.get<int>();
    seen[idx] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw ValidationError("InvalidLandscape",
                            path + ": missing energy for " + graph.label(static_cast<int>(i)));

  LandscapeInput input;
  input.landscape = Landscape::build(std::move(graph), std::move(energy));
  input.sha256 = sha256_hex(raw);
  return input;
}

}  // namespace gt
