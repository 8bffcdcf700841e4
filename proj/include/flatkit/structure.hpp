#pragma once

// Finite relational structures whose symbols are at most binary
// ("coloured digraphs"), and their Gaifman graphs.

#include "flatkit/graph.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace flatkit {

struct Symbol {
    std::string name;
    unsigned arity = 0;

    friend bool operator==(const Symbol&, const Symbol&) = default;
};

class Signature {
public:
    Signature() = default;
    Signature(std::initializer_list<Symbol> symbols)
    {
        for (const auto& s : symbols)
            add(s.name, s.arity);
    }

    std::size_t add(const std::string& name, unsigned arity)
    {
        if (name.empty())
            throw std::invalid_argument("empty symbol name");
        if (arity > 2)
            throw std::invalid_argument("symbol " + name + " has arity " + std::to_string(arity)
                                        + "; at most 2 is supported");
        if (index_.count(name))
            throw std::invalid_argument("duplicate symbol " + name);
        index_[name] = symbols_.size();
        symbols_.push_back({name, arity});
        return symbols_.size() - 1;
    }

    std::optional<std::size_t> find(const std::string& name) const
    {
        const auto it = index_.find(name);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    const Symbol& operator[](std::size_t i) const { return symbols_.at(i); }
    std::size_t size() const { return symbols_.size(); }
    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

    /// Symbol indices of the given arity, in signature order. Position k in
    /// this list is the symbol's 1-based colour index k+1.
    std::vector<std::size_t> of_arity(unsigned arity) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i].arity == arity)
                out.push_back(i);
        return out;
    }

    friend bool operator==(const Signature& a, const Signature& b) { return a.symbols_ == b.symbols_; }

private:
    std::vector<Symbol> symbols_;
    std::map<std::string, std::size_t> index_;
};

/// Tuple padded to two entries; unused slots are zero.
using Tuple = std::array<Vertex, 2>;

class RelStructure {
public:
    RelStructure() = default;
    RelStructure(Signature signature, std::size_t universe)
        : signature_(std::move(signature)), universe_(universe), facts_(signature_.size())
    {
    }

    const Signature& signature() const { return signature_; }
    std::size_t universe_size() const { return universe_; }

    void add_fact(std::size_t symbol, std::span<const Vertex> args)
    {
        if (symbol >= signature_.size())
            throw std::out_of_range("symbol index " + std::to_string(symbol) + " out of range");
        const auto& sym = signature_[symbol];
        if (args.size() != sym.arity)
            throw std::invalid_argument("symbol " + sym.name + " expects " + std::to_string(sym.arity)
                                        + " arguments, got " + std::to_string(args.size()));
        Tuple t{0, 0};
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] >= universe_)
                throw std::out_of_range("element " + std::to_string(args[i]) + " outside universe of size "
                                        + std::to_string(universe_));
            t[i] = args[i];
        }
        facts_[symbol].insert(t);
    }

    void add_fact(const std::string& name, std::initializer_list<Vertex> args)
    {
        const auto idx = signature_.find(name);
        if (!idx)
            throw std::invalid_argument("unknown symbol " + name);
        add_fact(*idx, std::span<const Vertex>(args.begin(), args.size()));
    }

    bool holds(std::size_t symbol, std::span<const Vertex> args) const
    {
        Tuple t{0, 0};
        for (std::size_t i = 0; i < args.size() && i < 2; ++i)
            t[i] = args[i];
        return facts_.at(symbol).count(t) != 0;
    }

    /// Facts of one symbol, sorted.
    const std::set<Tuple>& facts(std::size_t symbol) const { return facts_.at(symbol); }

    friend bool operator==(const RelStructure&, const RelStructure&) = default;

private:
    Signature signature_;
    std::size_t universe_ = 0;
    std::vector<std::set<Tuple>> facts_;
};

/// {a,b} is an edge iff a != b and some binary fact mentions both.
inline Graph gaifman(const RelStructure& m)
{
    std::set<Edge> edges;
    for (std::size_t s = 0; s < m.signature().size(); ++s) {
        if (m.signature()[s].arity != 2)
            continue;
        for (const auto& t : m.facts(s))
            if (t[0] != t[1])
                edges.emplace(t[0], t[1]);
    }
    const std::vector<Edge> list(edges.begin(), edges.end());
    return Graph(m.universe_size(), list);
}

/// A graph as an {E}-structure with E symmetric.
inline RelStructure as_structure(const Graph& g)
{
    RelStructure m(Signature{{"E", 2}}, g.vertex_count());
    for (const auto& e : g.edges()) {
        const std::array<Vertex, 2> fwd{e.u, e.v};
        const std::array<Vertex, 2> back{e.v, e.u};
        m.add_fact(0, fwd);
        m.add_fact(0, back);
    }
    return m;
}

} // namespace flatkit
