#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cihp/hypergraph.hpp"
#include "cihp/orientation.hpp"
#include "cihp/poset.hpp"

namespace cihp {

/// Parsed but not yet shape-validated input: the ground plus raw edges in
/// declaration order.
struct RawHypergraph {
    GroundInterval ground;
    std::vector<VertexSet> edges;
};

/// Text format: first non-comment line `n <N>` (ground [1, N]) or
/// `ground <x> <y>`; each further line one hyperedge, as whitespace- or
/// comma-separated integers or, when the ground has at most 9 vertices,
/// as a compact digit string like `1256`. `#` starts a comment.
RawHypergraph parse_hypergraph_text(std::istream& in);

/// {"ground":[x,y],"edges":[[...],...]}
RawHypergraph parse_hypergraph_json(const std::string& text);

/// Auto-detects JSON by a leading '{'.
RawHypergraph parse_hypergraph(const std::string& text);
RawHypergraph load_hypergraph_file(const std::string& path);

/// Renders in the text input format (round-trips through the parser).
std::string to_text(const CyclicIntervalHypergraph& h);

/// "1,3,5,3,5" -> sources in declaration order.
Orientation parse_orientation(const std::string& text);
std::string to_string(const Orientation& a);

/// DOT digraph, nodes labeled by source sequences, edges bottom-to-top,
/// deterministic node order.
std::string hasse_dot(const SourcePoset& p);
/// {"elements": [[...],...], "covers": [[i,j],...]}
std::string hasse_json(const SourcePoset& p);

std::string to_string(const CharacterizationWitness& w);
std::string to_string(const LatticeReport& r, const SourcePoset* poset);
std::string report_json(const LatticeReport& r, const SourcePoset* poset);

}  // namespace cihp
