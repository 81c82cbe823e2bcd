#include "cihp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cihp/errors.hpp"

namespace cihp {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::string tok;
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
            if (!tok.empty()) out.push_back(std::move(tok));
            tok.clear();
        } else {
            tok.push_back(c);
        }
    }
    if (!tok.empty()) out.push_back(std::move(tok));
    return out;
}

int parse_int(const std::string& tok, int line) {
    size_t used = 0;
    int v;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line);
    }
    if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", line);
    return v;
}

}  // namespace

RawHypergraph parse_hypergraph_text(std::istream& in) {
    RawHypergraph raw;
    bool have_ground = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::vector<std::string> toks = tokenize(body);
        if (!have_ground) {
            if (toks.size() == 2 && toks[0] == "n") {
                raw.ground = GroundInterval{1, parse_int(toks[1], lineno)};
            } else if (toks.size() == 3 && toks[0] == "ground") {
                raw.ground = GroundInterval{parse_int(toks[1], lineno), parse_int(toks[2], lineno)};
            } else {
                throw ParseError("first line must be 'n <N>' or 'ground <x> <y>'", lineno);
            }
            if (raw.ground.lo >= raw.ground.hi)
                throw EmptyGroundError("ground " + to_string(raw.ground) +
                                           " has fewer than two vertices",
                                       lineno);
            have_ground = true;
            continue;
        }
        VertexSet edge;
        if (toks.size() == 1 && toks[0].size() > 1 &&
            toks[0].find_first_not_of("0123456789") == std::string::npos && raw.ground.hi <= 9) {
            // compact digit-string form, unambiguous only for single-digit vertices
            for (char c : toks[0]) edge.add(c - '0');
        } else {
            for (const std::string& t : toks) {
                int v = parse_int(t, lineno);
                if (v < 1 || v > kMaxVertex)
                    throw ParseError("vertex " + std::to_string(v) + " out of range", lineno);
                edge.add(v);
            }
        }
        if (!edge.subset_of(raw.ground.vertices()))
            throw EdgeShapeError("edge " + to_string(edge) + " leaves the ground " +
                                     to_string(raw.ground),
                                 lineno);
        raw.edges.push_back(edge);
    }
    if (!have_ground) throw ParseError("input declares no ground interval", lineno);
    return raw;
}

RawHypergraph parse_hypergraph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("ground") || !j["ground"].is_array() || j["ground"].size() != 2)
        throw ParseError("JSON input needs \"ground\": [lo, hi]");
    RawHypergraph raw;
    raw.ground = GroundInterval{j["ground"][0].get<int>(), j["ground"][1].get<int>()};
    if (raw.ground.lo >= raw.ground.hi || raw.ground.lo < 1 || raw.ground.hi > kMaxVertex)
        throw EmptyGroundError("invalid ground " + to_string(raw.ground));
    for (const auto& edge : j.value("edges", nlohmann::json::array())) {
        VertexSet s;
        for (const auto& v : edge) {
            int vi = v.get<int>();
            if (vi < 1 || vi > kMaxVertex)
                throw ParseError("vertex " + std::to_string(vi) + " out of range");
            s.add(vi);
        }
        raw.edges.push_back(s);
    }
    return raw;
}

RawHypergraph parse_hypergraph(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_hypergraph_json(text);
        break;
    }
    std::istringstream in(text);
    return parse_hypergraph_text(in);
}

RawHypergraph load_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hypergraph(buf.str());
}

std::string to_text(const CyclicIntervalHypergraph& h) {
    std::ostringstream out;
    out << "ground " << h.ground().lo << ' ' << h.ground().hi << '\n';
    for (const Hyperedge& e : h.edges()) {
        bool first = true;
        for (int v : e.vertices.to_vector()) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

Orientation parse_orientation(const std::string& text) {
    Orientation a;
    for (const std::string& t : tokenize(text)) a.sources.push_back(parse_int(t, 0));
    if (a.sources.empty()) throw ParseError("empty orientation '" + text + "'");
    return a;
}

std::string to_string(const Orientation& a) {
    std::ostringstream out;
    for (size_t i = 0; i < a.sources.size(); ++i) {
        if (i) out << ',';
        out << a.sources[i];
    }
    return out.str();
}

std::string hasse_dot(const SourcePoset& p) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i)
        out << "  n" << i << " [label=\"" << to_string(p.elements()[i]) << "\"];\n";
    for (auto [a, b] : hasse(p)) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string hasse_json(const SourcePoset& p) {
    nlohmann::json j;
    j["schema"] = 1;
    j["elements"] = nlohmann::json::array();
    for (const Orientation& e : p.elements()) j["elements"].push_back(e.sources);
    j["covers"] = nlohmann::json::array();
    for (auto [a, b] : hasse(p)) j["covers"].push_back({a, b});
    return j.dump(2) + "\n";
}

std::string to_string(const CharacterizationWitness& w) {
    std::ostringstream out;
    out << "interval " << to_string(w.interval) << ": ";
    if (const auto* iw = std::get_if<IntersectionWitness>(&w.violation)) {
        out << "regular edges " << to_string(iw->a.vertices) << " and " << to_string(iw->b.vertices)
            << " intersect in " << to_string(iw->missing) << ", which is not an edge";
    } else {
        const auto& q = std::get<FixlessQuadrupleWitness>(w.violation).quadruple;
        out << "hugging quadruple (" << to_string(q.i.vertices) << ", "
            << to_string(q.i_cyc.vertices) << ", " << to_string(q.j.vertices) << ", "
            << to_string(q.j_cyc.vertices) << ") has no fix";
    }
    return out.str();
}

namespace {

const char* method_name(LatticeMethod m) {
    switch (m) {
        case LatticeMethod::Characterization: return "characterization";
        case LatticeMethod::BruteForce: return "brute-force";
        case LatticeMethod::Both: return "characterization+brute-force";
    }
    return "?";
}

}  // namespace

std::string to_string(const LatticeReport& r, const SourcePoset* poset) {
    std::ostringstream out;
    out << (r.is_lattice ? "lattice" : "not a lattice") << " (" << method_name(r.method) << ")\n";
    if (r.characterization_witness)
        out << "  " << to_string(*r.characterization_witness) << '\n';
    if (r.pair_witness) {
        const auto& w = *r.pair_witness;
        out << "  pair without a unique " << (w.join_side ? "join" : "meet");
        if (poset) {
            out << ": " << to_string(poset->elements()[w.a]) << " vs "
                << to_string(poset->elements()[w.b]) << "; "
                << (w.join_side ? "minimal upper" : "maximal lower") << " bounds:";
            for (int c : w.extremal_bounds) out << " (" << to_string(poset->elements()[c]) << ")";
        }
        out << '\n';
    }
    return out.str();
}

std::string report_json(const LatticeReport& r, const SourcePoset* poset) {
    nlohmann::json j;
    j["schema"] = 1;
    j["lattice"] = r.is_lattice;
    j["method"] = method_name(r.method);
    if (r.characterization_witness) {
        const auto& w = *r.characterization_witness;
        nlohmann::json cw;
        cw["interval"] = {w.interval.lo, w.interval.hi};
        if (const auto* iw = std::get_if<IntersectionWitness>(&w.violation)) {
            cw["kind"] = "non_closed_regular_pair";
            cw["edges"] = {iw->a.vertices.to_vector(), iw->b.vertices.to_vector()};
            cw["missing_intersection"] = iw->missing.to_vector();
        } else {
            const auto& q = std::get<FixlessQuadrupleWitness>(w.violation).quadruple;
            cw["kind"] = "fixless_hugging_quadruple";
            cw["quadruple"] = {q.i.vertices.to_vector(), q.i_cyc.vertices.to_vector(),
                               q.j.vertices.to_vector(), q.j_cyc.vertices.to_vector()};
        }
        j["characterization_witness"] = cw;
    }
    if (r.pair_witness && poset) {
        const auto& w = *r.pair_witness;
        nlohmann::json pw;
        pw["kind"] = w.join_side ? "no_unique_join" : "no_unique_meet";
        pw["pair"] = {poset->elements()[w.a].sources, poset->elements()[w.b].sources};
        pw["extremal_bounds"] = nlohmann::json::array();
        for (int c : w.extremal_bounds) pw["extremal_bounds"].push_back(poset->elements()[c].sources);
        j["pair_witness"] = pw;
    }
    return j.dump(2) + "\n";
}

}  // namespace cihp
