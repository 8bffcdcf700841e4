#pragma once

// Deterministic fixture corpus and seeded random instances shared by the
// unit tests and the acceptance binary.

#include "flatkit/flatkit.hpp"

#include <random>

namespace fixtures {

using namespace flatkit;

struct Fixture {
    std::string name;
    Graph graph;
};

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p)
{
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                b.add_edge(u, v);
    return b.build();
}

inline std::vector<Fixture> corpus()
{
    std::vector<Fixture> out;
    const auto add = [&](std::string name, Graph g) { out.push_back({std::move(name), std::move(g)}); };
    for (std::size_t n = 1; n <= 8; ++n)
        add("P" + std::to_string(n), path_graph(n));
    for (std::size_t n = 3; n <= 8; ++n)
        add("C" + std::to_string(n), cycle_graph(n));
    for (std::size_t n = 1; n <= 6; ++n)
        add("K" + std::to_string(n), clique(n));
    add("star3", star_graph(3));
    add("star4", star_graph(4));
    add("grid2x3", grid_graph(2, 3));
    add("grid3x3", grid_graph(3, 3));
    add("grid3x4", grid_graph(3, 4));
    for (std::size_t k = 3; k <= 5; ++k)
        add("prism" + std::to_string(k), prism_graph(k));
    add("petersen", generalized_petersen(5, 2));
    add("moebius-kantor", generalized_petersen(8, 3));
    {
        const std::size_t jumps[] = {1, 4};
        add("wagner", circulant_graph(8, jumps));
        const std::size_t k33[] = {1, 3};
        add("K3,3", circulant_graph(6, k33));
    }
    for (std::size_t n = 2; n <= 4; ++n)
        add("half" + std::to_string(n), half_graph(n));
    add("K3^1", subdivided_clique(3, 1));
    add("K4^1", subdivided_clique(4, 1));
    add("K4^2", subdivided_clique(4, 2));
    add("K5^1", subdivided_clique(5, 1));
    add("A2^0", independence_witness(2, 0));
    add("A2^1", independence_witness(2, 1));
    add("aug-P3", augment_diameter4(path_graph(3)).graph);
    std::mt19937_64 rng(20261015);
    for (std::size_t i = 0; i < 8; ++i) {
        const std::size_t n = 6 + i;
        add("random" + std::to_string(i), random_graph(rng, n, 0.35));
    }
    return out;
}

inline std::vector<Fixture> corpus_up_to(std::size_t max_vertices)
{
    std::vector<Fixture> out;
    for (auto& f : corpus())
        if (f.graph.vertex_count() <= max_vertices)
            out.push_back(std::move(f));
    return out;
}

/// R1, R2 binary; P1, P2 unary; A1 nullary.
inline Signature digraph_signature()
{
    Signature sig;
    sig.add("R1", 2);
    sig.add("R2", 2);
    sig.add("P1", 1);
    sig.add("P2", 1);
    sig.add("A1", 0);
    return sig;
}

inline RelStructure random_structure(std::mt19937_64& rng, const Signature& sig, std::size_t max_elements,
                                     double density = 0.3)
{
    std::uniform_int_distribution<std::size_t> size(1, max_elements);
    std::bernoulli_distribution coin(density);
    const auto n = size(rng);
    RelStructure m(sig, n);
    for (std::size_t s = 0; s < sig.size(); ++s) {
        switch (sig[s].arity) {
        case 0:
            if (coin(rng))
                m.add_fact(s, std::span<const Vertex>{});
            break;
        case 1:
            for (Vertex a = 0; a < n; ++a)
                if (coin(rng)) {
                    const Vertex t[1] = {a};
                    m.add_fact(s, t);
                }
            break;
        default:
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = 0; b < n; ++b)
                    if (coin(rng)) {
                        const Vertex t[2] = {a, b};
                        m.add_fact(s, t);
                    }
        }
    }
    return m;
}

} // namespace fixtures
