#ifndef COVERCOUNT_IO_HPP
#define COVERCOUNT_IO_HPP

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "covercount/multigraph.hpp"

namespace covercount {

// A graph file may carry a per-edge sign column (2-lift encoding) and a
// per-edge role column (factorientation decoration); either is optional.
struct ParsedGraph {
    Multigraph graph;
    std::optional<Signing> signing;
    std::optional<Decoration> decoration;
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    std::string s = pos == std::string::npos ? line : line.substr(0, pos);
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

inline bool blank(const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

} // namespace detail

// Text format: line 1 "n m", then m lines "u v [sign] [role]" with
// sign in {+,-} and role in {o,s}; '#' starts a comment.
inline ParsedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            out = detail::strip_comment(line);
            if (!detail::blank(out)) return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw InputError("empty graph file");
    int n = 0, m = 0;
    {
        std::istringstream hs(header);
        if (!(hs >> n >> m) || n < 0 || m < 0)
            throw InputError("bad header line: '" + header + "'");
        std::string extra;
        if (hs >> extra) throw InputError("bad header line: '" + header + "'");
    }

    std::vector<std::pair<int, int>> edges;
    Signing signing;
    Decoration decoration;
    bool any_sign = false, any_role = false;

    for (int e = 0; e < m; ++e) {
        std::string body;
        if (!next_line(body))
            throw InputError("expected " + std::to_string(m) + " edges, got " +
                             std::to_string(e));
        std::istringstream es(body);
        int u, v;
        if (!(es >> u >> v))
            throw InputError("malformed edge line " + std::to_string(lineno) +
                             ": '" + body + "'");
        if (u == v)
            throw InputError("loop edge at line " + std::to_string(lineno) +
                             ": '" + body + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("vertex index out of range at line " +
                             std::to_string(lineno) + ": '" + body + "'");
        Sign sg = Sign::Plus;
        Role rl = Role::O;
        std::string tok;
        while (es >> tok) {
            if (tok == "+") { sg = Sign::Plus; any_sign = true; }
            else if (tok == "-") { sg = Sign::Minus; any_sign = true; }
            else if (tok == "o") { rl = Role::O; any_role = true; }
            else if (tok == "s") { rl = Role::S; any_role = true; }
            else
                throw InputError("unknown token '" + tok + "' at line " +
                                 std::to_string(lineno));
        }
        edges.emplace_back(u, v);
        signing.push_back(sg);
        decoration.push_back(rl);
    }

    std::string trailing;
    if (next_line(trailing))
        throw InputError("trailing content: '" + trailing + "'");

    ParsedGraph out;
    out.graph = Multigraph(n, std::move(edges));
    if (any_sign) out.signing = std::move(signing);
    if (any_role) out.decoration = std::move(decoration);
    return out;
}

// Bit-exact: space-separated fields, LF endings, sign/role columns present
// iff the corresponding annotation is present.
inline std::string serialize_graph(const ParsedGraph& pg) {
    std::ostringstream out;
    const Multigraph& g = pg.graph;
    out << g.n << ' ' << g.edge_count() << '\n';
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out << g.edges[e].first << ' ' << g.edges[e].second;
        if (pg.signing)
            out << ' ' << ((*pg.signing)[e] == Sign::Plus ? '+' : '-');
        if (pg.decoration)
            out << ' ' << ((*pg.decoration)[e] == Role::O ? 'o' : 's');
        out << '\n';
    }
    return out.str();
}

inline std::string serialize_graph(const Multigraph& g) {
    return serialize_graph(ParsedGraph{g, std::nullopt, std::nullopt});
}

inline nlohmann::json graph_to_json(const ParsedGraph& pg) {
    nlohmann::json edges = nlohmann::json::array();
    for (EdgeId e = 0; e < pg.graph.edge_count(); ++e) {
        nlohmann::json je = {{"u", pg.graph.edges[e].first},
                             {"v", pg.graph.edges[e].second}};
        if (pg.signing)
            je["sign"] = (*pg.signing)[e] == Sign::Plus ? "+" : "-";
        if (pg.decoration)
            je["role"] = (*pg.decoration)[e] == Role::O ? "o" : "s";
        edges.push_back(je);
    }
    return {{"n", pg.graph.n}, {"edges", edges}};
}

inline ParsedGraph graph_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    Signing signing;
    Decoration decoration;
    bool any_sign = false, any_role = false;
    for (const auto& je : j.at("edges")) {
        int u = je.at("u").get<int>();
        int v = je.at("v").get<int>();
        if (u == v) throw InputError("loop edge in JSON graph");
        edges.emplace_back(u, v);
        Sign sg = Sign::Plus;
        Role rl = Role::O;
        if (je.contains("sign")) {
            any_sign = true;
            std::string s = je["sign"].get<std::string>();
            if (s == "+") sg = Sign::Plus;
            else if (s == "-") sg = Sign::Minus;
            else throw InputError("bad sign '" + s + "' in JSON graph");
        }
        if (je.contains("role")) {
            any_role = true;
            std::string s = je["role"].get<std::string>();
            if (s == "o") rl = Role::O;
            else if (s == "s") rl = Role::S;
            else throw InputError("bad role '" + s + "' in JSON graph");
        }
        signing.push_back(sg);
        decoration.push_back(rl);
    }
    ParsedGraph out;
    out.graph = Multigraph(n, std::move(edges));
    if (any_sign) out.signing = std::move(signing);
    if (any_role) out.decoration = std::move(decoration);
    return out;
}

} // namespace covercount

#endif
