#pragma once

// Recogniser formulas for the gadgets built by encode_digraph and
// augment_diameter4, the interpretation of a coloured digraph inside its
// encoding, and exhaustive verification of that interpretation.

#include "flatkit/eval.hpp"
#include "flatkit/generators.hpp"

namespace flatkit {

namespace formulas {

/// Hands out variable names that are unique within one constructed formula,
/// so nested recognisers never capture each other's variables.
class VarPool {
public:
    explicit VarPool(std::string stem = "v") : stem_(std::move(stem)) {}
    std::string operator()() { return fresh(stem_, next_++); }

private:
    std::string stem_;
    std::size_t next_ = 0;
};

inline Formula all_distinct(const std::vector<std::string>& vars)
{
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            parts.push_back(neq(vars[i], vars[j]));
    return Formula::conjunction(std::move(parts));
}

/// x has exactly k neighbours.
inline Formula degree_exactly(std::size_t k, const std::string& x, VarPool& pool)
{
    std::vector<std::string> nb;
    for (std::size_t i = 0; i < k; ++i)
        nb.push_back(pool());
    const auto other = pool();
    std::vector<Formula> only;
    for (const auto& v : nb)
        only.push_back(Formula::equal(other, v));
    std::vector<Formula> parts{all_distinct(nb)};
    for (const auto& v : nb)
        parts.push_back(edge(x, v));
    parts.push_back(Formula::forall(other, Formula::implication(edge(x, other), Formula::disjunction(std::move(only)))));
    Formula body = Formula::conjunction(std::move(parts));
    for (auto it = nb.rbegin(); it != nb.rend(); ++it)
        body = Formula::exists(*it, std::move(body));
    return body;
}

/// x has at least k neighbours.
inline Formula degree_at_least(std::size_t k, const std::string& x, VarPool& pool)
{
    std::vector<std::string> nb;
    for (std::size_t i = 0; i < k; ++i)
        nb.push_back(pool());
    std::vector<Formula> parts{all_distinct(nb)};
    for (const auto& v : nb)
        parts.push_back(edge(x, v));
    Formula body = Formula::conjunction(std::move(parts));
    for (auto it = nb.rbegin(); it != nb.rend(); ++it)
        body = Formula::exists(*it, std::move(body));
    return body;
}

/// x lies in a 4-clique.
inline Formula in_four_clique(const std::string& x, VarPool& pool)
{
    const auto p = pool(), q = pool(), s = pool();
    return Formula::exists(
        p, Formula::conjunction(
               {edge(x, p),
                Formula::exists(q, Formula::conjunction(
                                       {edge(x, q), edge(p, q),
                                        Formula::exists(s, Formula::conjunction({edge(x, s), edge(p, s), edge(q, s)}))}))}));
}

/// x lies on a 3-cycle.
inline Formula on_triangle(const std::string& x, VarPool& pool)
{
    const auto p = pool(), q = pool();
    return Formula::exists(p, Formula::conjunction({edge(x, p), Formula::exists(q, Formula::conjunction({edge(x, q), edge(p, q)}))}));
}

/// x lies on a chordless 4-cycle x - p - q - s - x.
inline Formula on_chordless_four_cycle(const std::string& x, VarPool& pool)
{
    const auto p = pool(), q = pool(), s = pool();
    return Formula::exists(
        p, Formula::conjunction(
               {edge(x, p),
                Formula::exists(
                    q, Formula::conjunction(
                           {edge(p, q), neq(q, x), Formula::negation(edge(x, q)),
                            Formula::exists(s, Formula::conjunction({edge(q, s), edge(s, x), neq(s, p),
                                                                     Formula::negation(edge(p, s))}))}))}));
}

/// A pendant path of exactly i vertices hangs at x: distinct c_1..c_i, none
/// equal to x, with x - c_1 - ... - c_i, c_1..c_{i-1} of degree 2 and c_i of
/// degree 1.
inline Formula pendant(std::size_t i, const std::string& x, VarPool& pool)
{
    if (i == 0)
        throw std::invalid_argument("pendant paths have length >= 1");
    std::vector<std::string> chain{x};
    for (std::size_t k = 1; k <= i; ++k)
        chain.push_back(pool());
    Formula body = degree_exactly(1, chain[i], pool);
    for (std::size_t k = i; k >= 1; --k) {
        std::vector<Formula> parts{edge(chain[k - 1], chain[k])};
        for (std::size_t j = 0; j < k; ++j)
            parts.push_back(neq(chain[k], chain[j]));
        if (k < i)
            parts.push_back(degree_exactly(2, chain[k], pool));
        parts.push_back(std::move(body));
        body = Formula::exists(chain[k], Formula::conjunction(std::move(parts)));
    }
    return body;
}

/// x is adjacent to a vertex in a 4-clique and lies in none: the element
/// images of encode_digraph.
inline Formula encoded_element(const std::string& x, VarPool& pool)
{
    const auto z = pool();
    return Formula::conjunction({Formula::exists(z, Formula::conjunction({edge(x, z), in_four_clique(z, pool)})),
                                 Formula::negation(in_four_clique(x, pool))});
}

/// Colour i on the binary pair (x, y): x - u - v - y with u, v gadget
/// vertices and a pendant path of length i at v.
inline Formula encoded_binary(std::size_t i, const std::string& x, const std::string& y, VarPool& pool)
{
    const auto u = pool(), v = pool();
    const auto gadget = [&](const std::string& w) {
        return Formula::conjunction(
            {Formula::negation(encoded_element(w, pool)), Formula::negation(in_four_clique(w, pool))});
    };
    return Formula::exists(
        u, Formula::conjunction(
               {edge(x, u), gadget(u),
                Formula::exists(v, Formula::conjunction({edge(u, v), edge(v, y), gadget(v), pendant(i, v, pool)}))}));
}

/// Colour i on the nullary anchor: a vertex off the chordless 4-cycle but
/// adjacent to it carries a pendant path of length i.
inline Formula encoded_nullary(std::size_t i, VarPool& pool)
{
    const auto d = pool(), w = pool();
    return Formula::exists(
        d, Formula::conjunction({Formula::exists(w, Formula::conjunction({edge(d, w), on_chordless_four_cycle(w, pool)})),
                                 Formula::negation(on_chordless_four_cycle(d, pool)), pendant(i, d, pool)}));
}

} // namespace formulas

/// Domain formula over x plus one translation per source symbol. Unary
/// translations use x, binary ones x and y, nullary ones are sentences.
/// Equality translates to equality.
struct Interpretation {
    Signature source;
    Formula domain;
    std::map<std::string, Formula> atoms;
};

/// The interpretation of a structure over `sig` in its encode_digraph image.
inline Interpretation encoding_interpretation(const Signature& sig)
{
    Interpretation out;
    out.source = sig;
    formulas::VarPool pool;
    out.domain = formulas::encoded_element("x", pool);
    for (std::size_t arity = 0; arity <= 2; ++arity) {
        const auto symbols = sig.of_arity(arity);
        for (std::size_t k = 0; k < symbols.size(); ++k) {
            const auto colour = k + 1;
            const auto& name = sig[symbols[k]].name;
            switch (arity) {
            case 0: out.atoms[name] = formulas::encoded_nullary(colour, pool); break;
            case 1: out.atoms[name] = formulas::pendant(colour, "x", pool); break;
            default: out.atoms[name] = formulas::encoded_binary(colour, "x", "y", pool); break;
            }
        }
    }
    return out;
}

struct InterpretationReport {
    std::vector<Vertex> domain; ///< the delta-set; domain[a] stands for element a
    std::size_t checks = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks M |= R(a..) iff target |= R_I(s(a)..) for every symbol R (and
/// equality) and every tuple. The correspondence s maps element a to the
/// a-th vertex of the delta-set in id order.
inline InterpretationReport verify_interpretation(const Interpretation& interp, const RelStructure& m, const Graph& target,
                                                  std::uint64_t budget = default_eval_budget)
{
    if (!(interp.source == m.signature()))
        throw std::invalid_argument("interpretation and structure have different signatures");
    InterpretationReport report;
    auto domain = make_query(target, interp.domain, {"x"}, budget);
    for (Vertex v = 0; v < target.vertex_count(); ++v)
        if (domain({v}))
            report.domain.push_back(v);
    const auto n = m.universe_size();
    if (report.domain.size() != n)
        throw std::invalid_argument("domain formula selects " + std::to_string(report.domain.size())
                                    + " vertices but the structure has " + std::to_string(n) + " elements");
    const auto& s = report.domain;

    const auto record = [&](const std::string& atom, bool source, bool translated) {
        ++report.checks;
        if (source != translated)
            report.violations.push_back(atom + ": structure " + (source ? "true" : "false") + ", translation "
                                        + (translated ? "true" : "false"));
    };
    const auto show = [](const std::string& name, std::initializer_list<Vertex> args) {
        std::string out = name + "(";
        bool first = true;
        for (auto a : args) {
            out += (first ? "" : ",") + std::to_string(a);
            first = false;
        }
        return out + ")";
    };

    auto equality = make_query(target, Formula::equal("x", "y"), {"x", "y"}, budget);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            record(show("=", {a, b}), a == b, equality({s[a], s[b]}));

    const auto& sig = m.signature();
    for (std::size_t idx = 0; idx < sig.size(); ++idx) {
        const auto& sym = sig[idx];
        const auto it = interp.atoms.find(sym.name);
        if (it == interp.atoms.end())
            throw std::invalid_argument("interpretation has no translation for " + sym.name);
        switch (sym.arity) {
        case 0: {
            auto q = make_query(target, it->second, {}, budget);
            record(sym.name, m.holds(idx, {}), q(std::span<const Vertex>{}));
            break;
        }
        case 1: {
            auto q = make_query(target, it->second, {"x"}, budget);
            for (Vertex a = 0; a < n; ++a) {
                const Vertex args[1] = {a};
                record(show(sym.name, {a}), m.holds(idx, args), q({s[a]}));
            }
            break;
        }
        default: {
            auto q = make_query(target, it->second, {"x", "y"}, budget);
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = 0; b < n; ++b) {
                    const Vertex args[2] = {a, b};
                    record(show(sym.name, {a, b}), m.holds(idx, args), q({s[a], s[b]}));
                }
        }
        }
    }
    return report;
}

/// Formulas in x singling out the parts of augment_diameter4's output.
struct AugmentationRecognizers {
    Formula apex;     ///< degree > 2 and on a 3-cycle: exactly t
    Formula original; ///< adjacent to the apex and on no 3-cycle
};

inline AugmentationRecognizers augmentation_recognizers()
{
    formulas::VarPool pool;
    AugmentationRecognizers out;
    const auto apex = [&](const std::string& x) {
        return Formula::conjunction({formulas::degree_at_least(3, x, pool), formulas::on_triangle(x, pool)});
    };
    out.apex = apex("x");
    const auto z = pool();
    out.original = Formula::conjunction({Formula::exists(z, Formula::conjunction({formulas::edge("x", z), apex(z)})),
                                         Formula::negation(formulas::on_triangle("x", pool))});
    return out;
}

/// Vertices of g satisfying phi(x).
inline std::vector<Vertex> satisfying_vertices(const Graph& g, const Formula& phi,
                                               std::uint64_t budget = default_eval_budget)
{
    auto q = make_query(g, phi, {"x"}, budget);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (q({v}))
            out.push_back(v);
    return out;
}

} // namespace flatkit
