#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "graphclass/ffcount.hpp"
#include "graphclass/multigraph.hpp"
#include "graphclass/multilinear_poly.hpp"

namespace graphclass {

using Json = nlohmann::ordered_json;

/// Edge-list text: a header "V n" followed by n lines "u v" (0-based, u == v
/// is a loop); labels follow file order. Blank lines and '#' comments are
/// skipped. Text whose first non-blank character is '{' is read as JSON.
/// Errors are ParseError carrying the 1-based line number.
Multigraph parse_graph(std::string_view text);

Multigraph parse_edge_list(std::string_view text);

/// {"vertex_count": V, "edges": [[u, v], ...], "labels": [...]?, "label_space": N?}
Multigraph graph_from_json(const Json& doc);
Json graph_to_json(const Multigraph& g);

/// Edge-list text in label order. Labels are not written, so graphs with
/// gaps in their labels come back relabelled 0..n-1.
std::string to_edge_list(const Multigraph& g);

/// {"var_count": n, "terms": [[mask, coefficient], ...]} by ascending mask.
Json poly_to_json(const MultilinearPoly& p);

Json count_record_to_json(const CountRecord& rec);

}  // namespace graphclass
