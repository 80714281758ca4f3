#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsg/gain_graph.hpp"

namespace gsg {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance parsed without invariant enforcement, so verification can report
// violations instead of refusing to load.
struct ParsedInstance {
  Group group = Group::integers();
  int n = 0;
  struct RawEdge {
    EdgeKind kind;
    std::vector<VertexId> ends;
    Sign sign = 1;
    std::vector<Sign> tau;
    GroupElem gain;
  };
  std::vector<RawEdge> edges;
  std::vector<std::string> issues;  // invariant violations, empty when valid
  std::optional<std::string> note;

  bool valid() const { return issues.empty(); }
  GainSignedGraph build() const;  // throws ParseError when issues exist
};

ParsedInstance parse_instance_lenient(const std::string& json_text);
GainSignedGraph parse_instance(const std::string& json_text);
GainSignedGraph load_instance(const std::string& path);
ParsedInstance load_instance_lenient(const std::string& path);

std::string serialize_instance(const GainSignedGraph& u,
                               const std::optional<std::string>& note = std::nullopt);
void save_instance(const GainSignedGraph& u, const std::string& path,
                   const std::optional<std::string>& note = std::nullopt);

}  // namespace gsg
