#pragma once

// Brute-force reference implementations. They share no search code with the
// library: each enumerates labellings, maps or tuples outright, and is only
// meant for graphs with a handful of vertices.

#include "flatkit/graph.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace oracles {

using flatkit::Graph;
using flatkit::Vertex;

inline constexpr unsigned inf = 1u << 30;

/// Floyd-Warshall distances; inf for unreachable pairs.
inline std::vector<std::vector<unsigned>> all_distances(const Graph& g)
{
    const auto n = g.vertex_count();
    std::vector<std::vector<unsigned>> d(n, std::vector<unsigned>(n, inf));
    for (Vertex v = 0; v < n; ++v)
        d[v][v] = 0;
    for (const auto& e : g.edges())
        d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j])
                    d[i][j] = d[i][k] + d[k][j];
    return d;
}

/// Some path of exactly k edges on distinct vertices joins x and y.
inline bool has_path_of_length(const Graph& g, Vertex x, Vertex y, std::size_t k)
{
    if (x == y)
        return false;
    std::vector<bool> used(g.vertex_count(), false);
    std::function<bool(Vertex, std::size_t)> walk = [&](Vertex at, std::size_t left) {
        if (left == 0)
            return at == y;
        for (Vertex w = 0; w < g.vertex_count(); ++w) {
            if (!g.adjacent(at, w) || used[w] || (w == y && left != 1))
                continue;
            used[w] = true;
            const bool ok = walk(w, left - 1);
            used[w] = false;
            if (ok)
                return true;
        }
        return false;
    };
    used[x] = true;
    return walk(x, k);
}

/// Calls f(map) for every injective map {0..k-1} -> {0..n-1}; stops when f
/// returns true and reports whether it did.
inline bool any_injection(std::size_t k, std::size_t n, const std::function<bool(const std::vector<Vertex>&)>& f)
{
    std::vector<Vertex> map;
    std::vector<bool> used(n, false);
    std::function<bool()> rec = [&]() {
        if (map.size() == k)
            return f(map);
        for (Vertex v = 0; v < n; ++v) {
            if (used[v])
                continue;
            used[v] = true;
            map.push_back(v);
            const bool ok = rec();
            map.pop_back();
            used[v] = false;
            if (ok)
                return true;
        }
        return false;
    };
    return rec();
}

/// Pattern is a (not necessarily induced) subgraph of host.
inline bool is_subgraph(const Graph& pattern, const Graph& host)
{
    return any_injection(pattern.vertex_count(), host.vertex_count(), [&](const std::vector<Vertex>& map) {
        for (const auto& e : pattern.edges())
            if (!host.adjacent(map[e.u], map[e.v]))
                return false;
        return true;
    });
}

/// BFS distance from a to b using only vertices of `allowed` (plus a, b).
inline unsigned distance_within(const Graph& g, Vertex a, Vertex b, const std::vector<bool>& allowed)
{
    std::vector<unsigned> d(g.vertex_count(), inf);
    std::vector<Vertex> queue{a};
    d[a] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const auto v = queue[i];
        if (v == b)
            return d[v];
        if (v != a && !allowed[v])
            continue;
        for (auto w : g.neighbors(v))
            if (d[w] == inf && (allowed[w] || w == b)) {
                d[w] = d[v] + 1;
                queue.push_back(w);
            }
    }
    return inf;
}

/// Pattern h is a topological minor of g with every subdivided path of at
/// most max_len edges: enumerate branch maps, then assign every other host
/// vertex to one pattern edge or to nothing, and require each edge's
/// endpoints to be joined inside its own class.
inline bool is_topological_minor(const Graph& g, const Graph& h, std::size_t max_len)
{
    const auto edges = h.edges();
    const auto n = g.vertex_count();
    return any_injection(h.vertex_count(), n, [&](const std::vector<Vertex>& map) {
        std::vector<bool> branch(n, false);
        for (auto v : map)
            branch[v] = true;
        std::vector<Vertex> free;
        for (Vertex v = 0; v < n; ++v)
            if (!branch[v])
                free.push_back(v);
        std::vector<std::size_t> label(free.size(), 0); // 0 = unused, k+1 = edge k
        const auto check = [&] {
            for (std::size_t k = 0; k < edges.size(); ++k) {
                std::vector<bool> allowed(n, false);
                for (std::size_t i = 0; i < free.size(); ++i)
                    if (label[i] == k + 1)
                        allowed[free[i]] = true;
                if (distance_within(g, map[edges[k].u], map[edges[k].v], allowed) > max_len)
                    return false;
            }
            return true;
        };
        for (;;) {
            if (check())
                return true;
            std::size_t i = 0;
            while (i < label.size() && label[i] == edges.size())
                label[i++] = 0;
            if (i == label.size())
                return false;
            ++label[i];
        }
    });
}

/// K_m is an r-minor of g: every labelling of vertices by set 1..m or none
/// is tried; each set must be connected with a center at radius <= r inside
/// the set, and every two sets adjacent.
inline bool has_clique_minor(const Graph& g, std::size_t m, std::size_t r)
{
    const auto n = g.vertex_count();
    std::vector<std::size_t> label(n, 0);
    const auto valid = [&] {
        for (std::size_t s = 1; s <= m; ++s) {
            std::vector<bool> inside(n, false);
            std::size_t size = 0;
            for (Vertex v = 0; v < n; ++v)
                if (label[v] == s) {
                    inside[v] = true;
                    ++size;
                }
            if (size == 0)
                return false;
            bool centred = false;
            for (Vertex c = 0; c < n && !centred; ++c) {
                if (!inside[c])
                    continue;
                bool ok = true;
                for (Vertex v = 0; v < n && ok; ++v)
                    if (inside[v] && v != c && distance_within(g, c, v, inside) > r)
                        ok = false;
                centred = ok;
            }
            if (!centred)
                return false;
        }
        for (std::size_t s = 1; s <= m; ++s)
            for (std::size_t t = s + 1; t <= m; ++t) {
                bool touch = false;
                for (const auto& e : g.edges())
                    if ((label[e.u] == s && label[e.v] == t) || (label[e.u] == t && label[e.v] == s))
                        touch = true;
                if (!touch)
                    return false;
            }
        return true;
    };
    for (;;) {
        if (valid())
            return true;
        std::size_t i = 0;
        while (i < n && label[i] == m)
            label[i++] = 0;
        if (i == n)
            return false;
        ++label[i];
    }
}

/// Longest n <= cap with a_i, b_j such that rel(a_i, b_j) iff i < j
/// (strict) or i <= j (reflexive), by enumerating all sequences.
inline std::size_t ladder_index(std::size_t universe, const std::function<bool(Vertex, Vertex)>& rel, std::size_t cap,
                                bool reflexive)
{
    std::size_t best = 0;
    for (std::size_t len = 1; len <= cap; ++len) {
        std::vector<Vertex> seq(2 * len, 0); // a_0..a_{len-1}, b_0..b_{len-1}
        bool found = false;
        for (;;) {
            bool ok = true;
            for (std::size_t i = 0; i < len && ok; ++i)
                for (std::size_t j = 0; j < len && ok; ++j)
                    ok = rel(seq[i], seq[len + j]) == (reflexive ? i <= j : i < j);
            if (ok) {
                found = true;
                break;
            }
            std::size_t k = 0;
            while (k < seq.size() && seq[k] + 1 == universe)
                seq[k++] = 0;
            if (k == seq.size())
                break;
            ++seq[k];
        }
        if (!found)
            break;
        best = len;
    }
    return best;
}

/// Largest shattered set of size <= cap, by enumerating all subsets.
inline std::size_t independence_index(std::size_t universe, const std::function<bool(Vertex, Vertex)>& rel,
                                      std::size_t cap)
{
    std::size_t best = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << universe); ++mask) {
        std::vector<Vertex> set;
        for (Vertex v = 0; v < universe; ++v)
            if (mask >> v & 1)
                set.push_back(v);
        if (set.size() > cap || set.size() <= best)
            continue;
        std::vector<bool> seen(std::size_t{1} << set.size(), false);
        for (Vertex b = 0; b < universe; ++b) {
            std::size_t trace = 0;
            for (std::size_t i = 0; i < set.size(); ++i)
                if (rel(set[i], b))
                    trace |= std::size_t{1} << i;
            seen[trace] = true;
        }
        if (std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }))
            best = set.size();
    }
    if (best == 0 && universe == 0)
        return 0;
    return best;
}

/// Some 2 x 2 strong-dependence array exists for rel0, rel1.
inline bool has_sd_array_2(std::size_t universe, const std::function<bool(Vertex, Vertex)>& rel0,
                           const std::function<bool(Vertex, Vertex)>& rel1)
{
    for (Vertex b00 = 0; b00 < universe; ++b00)
        for (Vertex b01 = 0; b01 < universe; ++b01)
            for (Vertex b10 = 0; b10 < universe; ++b10)
                for (Vertex b11 = 0; b11 < universe; ++b11) {
                    bool all = true;
                    for (int f = 0; f < 4 && all; ++f) {
                        const int f0 = f & 1, f1 = f >> 1 & 1;
                        bool some = false;
                        for (Vertex a = 0; a < universe && !some; ++a)
                            some = rel0(a, b00) == (f0 == 0) && rel0(a, b01) == (f0 == 1)
                                   && rel1(a, b10) == (f1 == 0) && rel1(a, b11) == (f1 == 1);
                        all = some;
                    }
                    if (all)
                        return true;
                }
    return false;
}

} // namespace oracles
