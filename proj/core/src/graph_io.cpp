#include "graphclass/graph_io.hpp"

#include <charconv>
#include <limits>
#include <vector>

#include "graphclass/errors.hpp"

namespace graphclass {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

/// Exactly two unsigned integers separated by whitespace.
std::pair<std::uint64_t, std::uint64_t> parse_pair(std::string_view line, std::size_t lineno) {
  std::uint64_t values[2] = {0, 0};
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (int i = 0; i < 2; ++i) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    auto [next, ec] = std::from_chars(p, end, values[i]);
    if (ec != std::errc() || next == p)
      throw ParseError(lineno, "expected two non-negative integers, got '" + std::string(line) + "'");
    p = next;
  }
  while (p < end && (*p == ' ' || *p == '\t')) ++p;
  if (p != end) throw ParseError(lineno, "trailing characters in '" + std::string(line) + "'");
  return {values[0], values[1]};
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    Json doc;
    try {
      doc = Json::parse(body);
    } catch (const nlohmann::json::parse_error& err) {
      // byte offset -> line number
      std::size_t line = 1;
      const std::size_t stop = std::min<std::size_t>(err.byte, text.size());
      for (std::size_t i = 0; i < stop; ++i)
        if (text[i] == '\n') ++line;
      throw ParseError(line, err.what());
    }
    return graph_from_json(doc);
  }
  return parse_edge_list(text);
}

Multigraph parse_edge_list(std::string_view text) {
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::vector<std::pair<Vertex, Vertex>> ends;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;

    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto [a, b] = parse_pair(line, lineno);
    if (!have_header) {
      if (b > kMaxLabels)
        throw ParseError(lineno, "at most " + std::to_string(kMaxLabels) + " edges supported");
      if (a > std::numeric_limits<Vertex>::max()) throw ParseError(lineno, "too many vertices");
      vertex_count = a;
      edge_count = b;
      have_header = true;
      continue;
    }
    if (ends.size() == edge_count)
      throw ParseError(lineno, "more edge lines than the " + std::to_string(edge_count) +
                                   " declared in the header");
    if (a >= vertex_count || b >= vertex_count)
      throw ParseError(lineno, "endpoint out of range (vertex_count " +
                                   std::to_string(vertex_count) + ")");
    ends.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw ParseError(lineno, "missing header line 'V n'");
  if (ends.size() != edge_count)
    throw ParseError(lineno, "header declares " + std::to_string(edge_count) + " edges, found " +
                                 std::to_string(ends.size()));
  return Multigraph(vertex_count, ends);
}

Multigraph graph_from_json(const Json& doc) {
  try {
    const auto vertex_count = doc.at("vertex_count").get<std::size_t>();
    const auto& edges = doc.at("edges");
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& pair = edges.at(i);
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument("edge " + std::to_string(i) + " is not a [u, v] pair");
      out.push_back(Edge{pair[0].get<Vertex>(), pair[1].get<Vertex>(), static_cast<EdgeLabel>(i)});
    }
    if (doc.contains("labels")) {
      const auto& labels = doc.at("labels");
      if (labels.size() != out.size())
        throw std::invalid_argument("labels and edges differ in length");
      for (std::size_t i = 0; i < out.size(); ++i) out[i].label = labels[i].get<EdgeLabel>();
    }
    const std::size_t label_space = doc.value("label_space", std::size_t{0});
    return Multigraph::with_labels(vertex_count, std::move(out), label_space);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(1, std::string("malformed graph JSON: ") + err.what());
  } catch (const std::logic_error& err) {
    throw ParseError(1, std::string("invalid graph: ") + err.what());
  }
}

Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  Json labels = Json::array();
  for (const Edge& ed : g.edges()) {
    edges.push_back({ed.u, ed.v});
    labels.push_back(ed.label);
  }
  Json doc;
  doc["vertex_count"] = g.vertex_count();
  doc["edges"] = std::move(edges);
  doc["labels"] = std::move(labels);
  doc["label_space"] = g.label_space();
  return doc;
}

std::string to_edge_list(const Multigraph& g) {
  std::string out = std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + '\n';
  for (const Edge& ed : g.edges()) out += std::to_string(ed.u) + ' ' + std::to_string(ed.v) + '\n';
  return out;
}

Json poly_to_json(const MultilinearPoly& p) {
  Json terms = Json::array();
  for (const auto& [vars, c] : p.terms()) {
    if (c.fits_slong_p())
      terms.push_back({vars, c.get_si()});
    else
      terms.push_back({vars, c.get_str()});
  }
  Json doc;
  doc["var_count"] = p.var_count();
  doc["terms"] = std::move(terms);
  return doc;
}

Json count_record_to_json(const CountRecord& rec) {
  Json doc;
  doc["q"] = rec.q;
  doc["n"] = rec.n;
  doc["affine_zero_count"] = rec.affine_zero_count;
  doc["complement_count"] = rec.complement_count;
  doc["projective_count"] = rec.projective_count ? Json(*rec.projective_count) : Json(nullptr);
  return doc;
}

}  // namespace graphclass
