#include "gsg/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gsg {

namespace {

using ordered_json = nlohmann::ordered_json;

EdgeKind kind_from_string(const std::string& s) {
  if (s == "link") return EdgeKind::Link;
  if (s == "loop") return EdgeKind::Loop;
  if (s == "half") return EdgeKind::Half;
  if (s == "loose") return EdgeKind::Loose;
  throw ParseError("unknown edge kind '" + s + "'");
}

const char* kind_to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Link: return "link";
    case EdgeKind::Loop: return "loop";
    case EdgeKind::Half: return "half";
    case EdgeKind::Loose: return "loose";
  }
  return "?";
}

}  // namespace

ParsedInstance parse_instance_lenient(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
  ParsedInstance inst;
  try {
    if (j.value("version", 0) != 1)
      throw ParseError("unsupported or missing instance version (expected 1)");
    inst.group = Group::from_name(j.at("group").get<std::string>());
    inst.n = j.at("n").get<int>();
    if (inst.n < 0) throw ParseError("n must be >= 0");
    if (j.contains("note")) inst.note = j.at("note").get<std::string>();
    int expected_id = 0;
    for (const auto& je : j.at("edges")) {
      ParsedInstance::RawEdge e;
      if (je.at("id").get<int>() != expected_id)
        throw ParseError("edge ids must be dense and in order; expected " +
                         std::to_string(expected_id));
      ++expected_id;
      e.kind = kind_from_string(je.at("kind").get<std::string>());
      for (const auto& v : je.at("ends")) e.ends.push_back(v.get<int>());
      e.sign = je.at("sign").get<int>();
      for (const auto& t : je.at("tau")) e.tau.push_back(t.get<int>());
      e.gain = inst.group.parse(je.at("gain").get<std::string>());
      inst.edges.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }

  // invariant checks, reported rather than thrown
  for (size_t i = 0; i < inst.edges.size(); ++i) {
    const auto& e = inst.edges[i];
    auto issue = [&](const std::string& msg) {
      inst.issues.push_back("edge " + std::to_string(i) + ": " + msg);
    };
    size_t want_ends = e.kind == EdgeKind::Link || e.kind == EdgeKind::Loop ? 2
                       : e.kind == EdgeKind::Half                           ? 1
                                                                            : 0;
    if (e.ends.size() != want_ends) issue("wrong number of ends");
    if (e.tau.size() != want_ends) issue("wrong number of tau values");
    for (VertexId v : e.ends)
      if (v < 0 || v >= inst.n) issue("end vertex out of range");
    if (e.sign != 1 && e.sign != -1) issue("sign must be +1 or -1");
    for (Sign t : e.tau)
      if (t != 1 && t != -1) issue("tau values must be +1 or -1");
    if (e.kind == EdgeKind::Link && e.ends.size() == 2 && e.ends[0] == e.ends[1])
      issue("link endpoints must differ");
    if (e.kind == EdgeKind::Loop && e.ends.size() == 2 && e.ends[0] != e.ends[1])
      issue("loop endpoints must coincide");
    if (e.kind == EdgeKind::Half && e.sign != -1) issue("half edges must have sign -1");
    if (e.kind == EdgeKind::Loose && e.sign != 1) issue("loose edges must have sign +1");
    if (want_ends == 2 && e.tau.size() == 2 && (e.sign == 1 || e.sign == -1) &&
        e.tau[0] * e.tau[1] != -e.sign)
      issue("tau(v,e)*tau(w,e) must equal -sigma(e)");
  }
  return inst;
}

GainSignedGraph ParsedInstance::build() const {
  if (!issues.empty()) throw ParseError("invalid instance: " + issues.front());
  Graph g(n);
  std::vector<Sign> sigma;
  std::vector<std::array<Sign, 2>> tau;
  std::vector<GroupElem> phi;
  for (const auto& e : edges) {
    switch (e.kind) {
      case EdgeKind::Link:
        g.add_link(e.ends[0], e.ends[1]);
        tau.push_back({e.tau[0], e.tau[1]});
        break;
      case EdgeKind::Loop:
        g.add_loop(e.ends[0]);
        tau.push_back({e.tau[0], e.tau[1]});
        break;
      case EdgeKind::Half:
        g.add_half(e.ends[0]);
        tau.push_back({e.tau[0], 1});
        break;
      case EdgeKind::Loose:
        g.add_loose();
        tau.push_back({1, 1});
        break;
    }
    sigma.push_back(e.sign);
    phi.push_back(e.gain);
  }
  SignedGraph sg(std::move(g), std::move(sigma));
  Orientation orient(sg, std::move(tau));
  return GainSignedGraph(std::move(sg), std::move(orient), group, std::move(phi));
}

GainSignedGraph parse_instance(const std::string& json_text) {
  return parse_instance_lenient(json_text).build();
}

GainSignedGraph load_instance(const std::string& path) {
  return load_instance_lenient(path).build();
}

ParsedInstance load_instance_lenient(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_lenient(ss.str());
}

std::string serialize_instance(const GainSignedGraph& u,
                               const std::optional<std::string>& note) {
  ordered_json j;
  j["version"] = 1;
  j["group"] = u.group().name();
  j["n"] = u.vertex_count();
  if (note) j["note"] = *note;
  j["edges"] = ordered_json::array();
  for (const Edge& e : u.graph().edges()) {
    ordered_json je;
    je["id"] = e.id;
    je["kind"] = kind_to_string(e.kind);
    ordered_json ends = ordered_json::array();
    ordered_json tau = ordered_json::array();
    for (int slot = 0; slot < e.end_count(); ++slot) {
      ends.push_back(e.ends[slot]);
      tau.push_back(u.tau(e.id, slot));
    }
    je["ends"] = ends;
    je["sign"] = u.sign(e.id);
    je["tau"] = tau;
    je["gain"] = u.group().format(u.gain(e.id));
    j["edges"].push_back(je);
  }
  return j.dump(2) + "\n";
}

void save_instance(const GainSignedGraph& u, const std::string& path,
                   const std::optional<std::string>& note) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write instance file: " + path);
  out << serialize_instance(u, note);
}

}  // namespace gsg
