#include "hdecomp/io.hpp"

#include <fstream>
#include <sstream>

namespace hdecomp {

namespace {

Json edge_json(const REdge& e) { return Json(e.vertices()); }

REdge edge_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("edge must be an array");
  std::vector<Vertex> labels;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw FormatError("edge label must be a nonnegative integer");
    labels.push_back(v.get<Vertex>());
  }
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] <= labels[i - 1]) throw FormatError("edge labels must be strictly ascending");
  }
  return REdge(std::move(labels));
}

Json edges_json(const std::vector<REdge>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back(edge_json(e));
  return out;
}

std::vector<REdge> edges_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("edge list must be an array");
  std::vector<REdge> out;
  for (const auto& e : j) out.push_back(edge_from_json(e));
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

Json to_json(const Hypergraph& g) {
  Json j;
  j["n"] = g.n();
  j["r"] = g.r();
  j["edges"] = edges_json(g.edges());
  return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
  const auto& n = field(j, "n");
  const auto& r = field(j, "r");
  if (!n.is_number_integer() || !r.is_number_integer() || n.get<std::int64_t>() < 0 || r.get<std::int64_t>() < 1) {
    throw FormatError("n and r must be integers with r >= 1");
  }
  auto edges = edges_from_json(field(j, "edges"));
  try {
    return Hypergraph(n.get<Vertex>(), r.get<Vertex>(), std::move(edges));
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const PackingCertificate& cert) {
  Json j;
  j["value"] = cert.value();
  Json copies = Json::array();
  for (const auto& copy : cert.copies) copies.push_back(edges_json(copy));
  j["copies"] = std::move(copies);
  j["leftover"] = edges_json(cert.leftover);
  j["optimal"] = cert.optimal;
  return j;
}

PackingCertificate certificate_from_json(const Json& j) {
  PackingCertificate cert;
  for (const auto& copy : field(j, "copies")) cert.copies.push_back(edges_from_json(copy));
  cert.leftover = edges_from_json(field(j, "leftover"));
  cert.optimal = field(j, "optimal").get<bool>();
  if (field(j, "value").get<std::size_t>() != cert.copies.size()) throw FormatError("value differs from copy count");
  return cert;
}

Json to_json(const Decomposition& d, std::int64_t phi) {
  Json j;
  j["phi"] = phi;
  j["source"] = to_string(d.source);
  Json parts = Json::array();
  for (const auto& part : d.parts) {
    Json p;
    if (part.kind == Part::Kind::Single) {
      p["type"] = "single";
      p["edge"] = edge_json(part.edges.front());
    } else {
      p["type"] = "copy";
      p["edges"] = edges_json(part.edges);
    }
    parts.push_back(std::move(p));
  }
  j["parts"] = std::move(parts);
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  const auto source = field(j, "source").get<std::string>();
  if (source == "constructive") {
    d.source = Source::Constructive;
  } else if (source == "formula") {
    d.source = Source::Formula;
  } else if (source == "oracle") {
    d.source = Source::Oracle;
  } else {
    throw FormatError("unknown source \"" + source + "\"");
  }
  for (const auto& p : field(j, "parts")) {
    const auto type = field(p, "type").get<std::string>();
    if (type == "single") {
      d.parts.push_back(Part::single(edge_from_json(field(p, "edge"))));
    } else if (type == "copy") {
      d.parts.push_back(Part::copy(edges_from_json(field(p, "edges"))));
    } else {
      throw FormatError("unknown part type \"" + type + "\"");
    }
  }
  if (field(j, "phi").get<std::size_t>() != d.size()) throw FormatError("phi differs from part count");
  return d;
}

Json to_json(const IntersectionGraph& g) {
  Json j;
  j["kind"] = kind_name(g.kind());
  j["n"] = g.n();
  j["r"] = g.r();
  j["k"] = g.k();
  j["vertex_count"] = g.vertex_count();
  j["adjacency"] = g.adjacency();
  j["labels"] = edges_json(g.labels());
  return j;
}

Json to_json(const VerificationReport& report, bool with_timing) {
  Json j;
  j["check"] = report.check;
  for (const auto& [name, v] : report.params) j[name] = v;
  if (!report.pattern.empty()) j["pattern"] = report.pattern;
  Json values = Json::object();
  for (const auto& [name, v] : report.values) values[name] = v ? Json(*v) : Json(nullptr);
  j["values"] = std::move(values);
  Json flags = Json::object();
  for (const auto& [name, ok] : report.flags) flags[name] = ok;
  j["flags"] = std::move(flags);
  j["budget_exceeded"] = report.budget_exceeded;
  j["agree"] = report.agree();
  if (!report.note.empty()) j["note"] = report.note;
  if (with_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << contents;
}

}  // namespace hdecomp
