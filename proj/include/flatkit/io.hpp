#pragma once

// Line-oriented text formats for graphs and structures.
//
//   graph <n> <m>             structure <n>
//   <u> <v>      (m lines)    sig <name> <arity>
//   label <v> <tag>           <name> <args...>
//
// '#' starts a comment anywhere on a line; blank lines are ignored.

#include "flatkit/graph.hpp"
#include "flatkit/structure.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace flatkit {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

struct TokenLine {
    std::size_t number = 0;
    std::vector<std::string> tokens;
};

/// Splits the input into non-empty, comment-stripped token lines.
inline std::vector<TokenLine> tokenize_lines(std::istream& in)
{
    std::vector<TokenLine> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ss(raw);
        TokenLine line{number, {}};
        for (std::string tok; ss >> tok;)
            line.tokens.push_back(tok);
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

inline std::uint64_t parse_count(const TokenLine& line, const std::string& tok, const char* what)
{
    std::uint64_t value = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line.number, std::string("expected a non-negative integer for ") + what
                                          + ", got '" + tok + "'");
    return value;
}

inline Vertex parse_vertex(const TokenLine& line, const std::string& tok, std::size_t n)
{
    const auto v = parse_count(line, tok, "a vertex id");
    if (v >= n)
        throw ParseError(line.number, "vertex " + tok + " out of range (n = " + std::to_string(n) + ")");
    return Vertex(v);
}

} // namespace detail

inline Graph read_graph(std::istream& in)
{
    const auto lines = detail::tokenize_lines(in);
    if (lines.empty())
        throw ParseError(0, "missing 'graph <n> <m>' header");
    const auto& header = lines.front();
    if (header.tokens.size() != 3 || header.tokens[0] != "graph")
        throw ParseError(header.number, "expected 'graph <n> <m>'");
    const auto n = detail::parse_count(header, header.tokens[1], "the vertex count");
    const auto m = detail::parse_count(header, header.tokens[2], "the edge count");

    GraphBuilder b(n);
    std::size_t edges_read = 0;
    std::size_t i = 1;
    for (; i < lines.size() && edges_read < m; ++i, ++edges_read) {
        const auto& line = lines[i];
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "expected an edge line '<u> <v>' (" + std::to_string(m)
                                              + " edges declared, " + std::to_string(edges_read) + " read)");
        const auto u = detail::parse_vertex(line, line.tokens[0], n);
        const auto v = detail::parse_vertex(line, line.tokens[1], n);
        if (u == v)
            throw ParseError(line.number, "loop at vertex " + line.tokens[0]);
        if (b.has_edge(u, v))
            throw ParseError(line.number, "duplicate edge " + line.tokens[0] + " " + line.tokens[1]);
        b.add_edge(u, v);
    }
    if (edges_read < m)
        throw ParseError(lines.back().number, std::to_string(m) + " edges declared, only "
                                                  + std::to_string(edges_read) + " present");
    std::set<Vertex> labelled;
    for (; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.empty() || line.tokens[0] != "label")
            throw ParseError(line.number, "unexpected line after " + std::to_string(m) + " edges");
        if (line.tokens.size() != 3)
            throw ParseError(line.number, "expected 'label <v> <tag>'");
        const auto v = detail::parse_vertex(line, line.tokens[1], n);
        if (!labelled.insert(v).second)
            throw ParseError(line.number, "vertex " + line.tokens[1] + " labelled twice");
        b.set_label(v, line.tokens[2]);
    }
    return b.build();
}

inline Graph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g)
{
    out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!g.label(v).empty())
            out << "label " << v << ' ' << g.label(v) << '\n';
}

inline std::string to_text(const Graph& g)
{
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

inline RelStructure read_structure(std::istream& in)
{
    const auto lines = detail::tokenize_lines(in);
    if (lines.empty())
        throw ParseError(0, "missing 'structure <n>' header");
    const auto& header = lines.front();
    if (header.tokens.size() != 2 || header.tokens[0] != "structure")
        throw ParseError(header.number, "expected 'structure <n>'");
    const auto n = detail::parse_count(header, header.tokens[1], "the universe size");

    Signature sig;
    std::size_t i = 1;
    for (; i < lines.size() && lines[i].tokens[0] == "sig"; ++i) {
        const auto& line = lines[i];
        if (line.tokens.size() != 3)
            throw ParseError(line.number, "expected 'sig <name> <arity>'");
        const auto arity = detail::parse_count(line, line.tokens[2], "the arity");
        if (arity > 2)
            throw ParseError(line.number, "arity " + line.tokens[2] + " exceeds 2");
        if (sig.find(line.tokens[1]))
            throw ParseError(line.number, "duplicate symbol " + line.tokens[1]);
        sig.add(line.tokens[1], unsigned(arity));
    }

    RelStructure m(sig, n);
    for (; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto idx = sig.find(line.tokens[0]);
        if (!idx)
            throw ParseError(line.number, line.tokens[0] == "sig"
                                              ? "'sig' lines must precede facts"
                                              : "unknown symbol " + line.tokens[0]);
        const auto arity = sig[*idx].arity;
        if (line.tokens.size() - 1 != arity)
            throw ParseError(line.number, "symbol " + line.tokens[0] + " has arity " + std::to_string(arity)
                                              + ", got " + std::to_string(line.tokens.size() - 1)
                                              + " arguments");
        std::vector<Vertex> args;
        for (std::size_t k = 1; k < line.tokens.size(); ++k)
            args.push_back(detail::parse_vertex(line, line.tokens[k], n));
        m.add_fact(*idx, args);
    }
    return m;
}

inline RelStructure parse_structure(const std::string& text)
{
    std::istringstream in(text);
    return read_structure(in);
}

inline void write_structure(std::ostream& out, const RelStructure& m)
{
    out << "structure " << m.universe_size() << '\n';
    for (const auto& s : m.signature())
        out << "sig " << s.name << ' ' << s.arity << '\n';
    for (std::size_t s = 0; s < m.signature().size(); ++s) {
        const auto arity = m.signature()[s].arity;
        for (const auto& t : m.facts(s)) {
            out << m.signature()[s].name;
            for (unsigned k = 0; k < arity; ++k)
                out << ' ' << t[k];
            out << '\n';
        }
    }
}

inline std::string to_text(const RelStructure& m)
{
    std::ostringstream out;
    write_structure(out, m);
    return out.str();
}

} // namespace flatkit
