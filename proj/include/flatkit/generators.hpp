#pragma once

// Graph families and gadget constructions. Every builder assigns vertex ids in
// a fixed documented order, so outputs are reproducible and role tags can be
// looked up either by label or by arithmetic on ids.
//
// Role tags used by the gadget builders:
//   subdivided_clique       branch:<i>  sub:<i>-<j>:<k>
//   half_graph              a:<i>  b:<j>
//   augment_diameter4       orig:<v>  edge:<u>-<v>  t  t1  t2
//   encode_digraph          elem:<a>  a0:<a>..a3:<a>  c:<x>,<y> (adjacent to y)
//                           loop:<a>  loop':<a>  unary:<P>:<a>:<k>
//                           binary:<R>:<a>,<b>:<k>  d  d0..d3  nullary:<A>:<k>
//   independence_witness    a:<i>  b:<J as bitmask>  path:<i>:<J>:<k>

#include "flatkit/graph.hpp"
#include "flatkit/structure.hpp"

#include <map>
#include <set>
#include <string>

namespace flatkit {

inline std::string tag(const std::string& role, std::size_t index)
{
    return role + ":" + std::to_string(index);
}

// ---------------------------------------------------------------------------
// Standard families

inline Graph clique(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

inline Graph edgeless(std::size_t n) { return Graph(n); }

/// Path on n vertices.
inline Graph path_graph(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex v = 1; v < n; ++v)
        b.add_edge(v - 1, v);
    return b.build();
}

inline Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        b.add_edge(v, Vertex((v + 1) % n));
    return b.build();
}

/// rows x cols grid; vertex (r,c) has id r*cols + c.
inline Graph grid_graph(std::size_t rows, std::size_t cols)
{
    GraphBuilder b(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const auto v = Vertex(r * cols + c);
            if (c + 1 < cols)
                b.add_edge(v, v + 1);
            if (r + 1 < rows)
                b.add_edge(v, Vertex(v + cols));
        }
    return b.build();
}

/// K_{1,leaves}; the centre is vertex 0.
inline Graph star_graph(std::size_t leaves)
{
    GraphBuilder b(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v)
        b.add_edge(0, v);
    return b.build();
}

/// C_k x K_2: outer cycle 0..k-1, inner cycle k..2k-1, spokes i -- k+i.
inline Graph prism_graph(std::size_t k)
{
    if (k < 3)
        throw std::invalid_argument("a prism needs k >= 3");
    GraphBuilder b(2 * k);
    for (Vertex i = 0; i < k; ++i) {
        const auto j = Vertex((i + 1) % k);
        b.add_edge(i, j);
        b.add_edge(Vertex(k + i), Vertex(k + j));
        b.add_edge(i, Vertex(k + i));
    }
    return b.build();
}

/// Circulant graph: i ~ i +- j (mod n) for each jump j.
inline Graph circulant_graph(std::size_t n, std::span<const std::size_t> jumps)
{
    GraphBuilder b(n);
    for (auto j : jumps) {
        if (j == 0 || j > n / 2)
            throw std::invalid_argument("circulant jump " + std::to_string(j) + " outside 1.." + std::to_string(n / 2));
        for (Vertex i = 0; i < n; ++i) {
            const auto w = Vertex((i + j) % n);
            if (!b.has_edge(i, w))
                b.add_edge(i, w);
        }
    }
    return b.build();
}

/// Generalised Petersen graph GP(n, s); GP(8, 3) is the Moebius-Kantor graph.
inline Graph generalized_petersen(std::size_t n, std::size_t s)
{
    if (n < 3 || s == 0 || 2 * s >= n)
        throw std::invalid_argument("generalized_petersen needs n >= 3 and 1 <= s < n/2");
    GraphBuilder b(2 * n);
    for (Vertex i = 0; i < n; ++i) {
        b.add_edge(i, Vertex((i + 1) % n));
        b.add_edge(i, Vertex(n + i));
        b.add_edge(Vertex(n + i), Vertex(n + (i + s) % n));
    }
    return b.build();
}

enum class FamilyKind { clique, path, cycle, grid, star, prism, edgeless };

inline FamilyKind family_kind_from_string(const std::string& s)
{
    static const std::map<std::string, FamilyKind> names{
        {"clique", FamilyKind::clique}, {"path", FamilyKind::path},   {"cycle", FamilyKind::cycle},
        {"grid", FamilyKind::grid},     {"star", FamilyKind::star},   {"prism", FamilyKind::prism},
        {"edgeless", FamilyKind::edgeless}};
    const auto it = names.find(s);
    if (it == names.end())
        throw std::invalid_argument("unknown family kind '" + s + "'");
    return it->second;
}

/// One member of a standard family. Grids take (rows, cols), or a single
/// side length for a square grid; every other kind takes one size.
inline Graph standard_graph(FamilyKind kind, std::span<const std::size_t> params)
{
    const auto want = [&](std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi)
            throw std::invalid_argument("wrong number of family parameters");
    };
    switch (kind) {
    case FamilyKind::clique: want(1, 1); return clique(params[0]);
    case FamilyKind::path: want(1, 1); return path_graph(params[0]);
    case FamilyKind::cycle: want(1, 1); return cycle_graph(params[0]);
    case FamilyKind::grid:
        want(1, 2);
        return grid_graph(params[0], params.size() == 2 ? params[1] : params[0]);
    case FamilyKind::star: want(1, 1); return star_graph(params[0]);
    case FamilyKind::prism: want(1, 1); return prism_graph(params[0]);
    case FamilyKind::edgeless: want(1, 1); return edgeless(params[0]);
    }
    throw std::logic_error("unhandled family kind");
}

/// Members for size parameters lo, lo+step, ..., <= hi.
inline std::vector<Graph> standard_family(FamilyKind kind, std::size_t lo, std::size_t hi, std::size_t step = 1)
{
    if (lo > hi || step == 0)
        throw std::invalid_argument("empty family range");
    std::vector<Graph> out;
    for (std::size_t s = lo; s <= hi; s += step) {
        const std::size_t p[1] = {s};
        out.push_back(standard_graph(kind, p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Subdivided cliques and half-graphs

/// Id of the k-th (1-based, counted from branch i) subdivision vertex on the
/// branch path i--j of subdivided_clique(m, r), i < j.
inline Vertex subdivision_vertex(std::size_t m, std::size_t r, std::size_t i, std::size_t j, std::size_t k)
{
    const std::size_t pair = i * m - i * (i + 1) / 2 + (j - i - 1);
    return Vertex(m + pair * r + (k - 1));
}

/// K_m with every edge subdivided exactly r times. Branch vertices are
/// 0..m-1, then the r interior vertices of each pair (i<j) in lexicographic
/// pair order, listed from i towards j.
inline Graph subdivided_clique(std::size_t m, std::size_t r)
{
    if (m == 0)
        throw std::invalid_argument("subdivided_clique needs m >= 1");
    GraphBuilder b;
    for (std::size_t i = 0; i < m; ++i)
        b.add_vertex(tag("branch", i));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vertex prev = Vertex(i);
            for (std::size_t k = 1; k <= r; ++k) {
                const auto v = b.add_vertex("sub:" + std::to_string(i) + "-" + std::to_string(j) + ":"
                                            + std::to_string(k));
                b.add_edge(prev, v);
                prev = v;
            }
            b.add_edge(prev, Vertex(j));
        }
    return b.build();
}

/// a_0..a_{n-1} (ids 0..n-1), b_0..b_{n-1} (ids n..2n-1), a_i ~ b_j iff i < j.
inline Graph half_graph(std::size_t n)
{
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i)
        b.add_vertex(tag("a", i));
    for (std::size_t j = 0; j < n; ++j)
        b.add_vertex(tag("b", j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            b.add_edge(Vertex(i), Vertex(n + j));
    return b.build();
}

// ---------------------------------------------------------------------------
// Diameter-4 augmentation

struct AugmentedGraph {
    Graph graph;
    Vertex t = 0, t1 = 0, t2 = 0;
    std::size_t original_count = 0; ///< originals keep ids 0..original_count-1
};

/// Every edge {a,b} of A is replaced by a path a - e - b, and a triangle
/// t, t1, t2 is added with t joined to every original vertex. Vertex order:
/// originals, one vertex per edge of A (sorted edge order), then t, t1, t2.
inline AugmentedGraph augment_diameter4(const Graph& a)
{
    GraphBuilder b;
    const auto n = a.vertex_count();
    for (std::size_t v = 0; v < n; ++v)
        b.add_vertex(tag("orig", v));
    for (const auto& e : a.edges()) {
        const auto mid = b.add_vertex("edge:" + std::to_string(e.u) + "-" + std::to_string(e.v));
        b.add_edge(e.u, mid);
        b.add_edge(mid, e.v);
    }
    AugmentedGraph out;
    out.t = b.add_vertex("t");
    out.t1 = b.add_vertex("t1");
    out.t2 = b.add_vertex("t2");
    b.add_edge(out.t, out.t1);
    b.add_edge(out.t, out.t2);
    b.add_edge(out.t1, out.t2);
    for (std::size_t v = 0; v < n; ++v)
        b.add_edge(out.t, Vertex(v));
    out.graph = b.build();
    out.original_count = n;
    return out;
}

// ---------------------------------------------------------------------------
// Coloured digraph encoding

struct EncodedStructure {
    Graph graph;
    /// element_image[a] is the vertex standing for element a.
    std::vector<Vertex> element_image;
    Vertex d = 0; ///< anchor of the nullary gadget
};

/// Encodes a structure with relations of arity <= 2 as a simple graph.
///
/// Binary, unary and nullary symbols are numbered 1, 2, ... in signature
/// order; colour i is a pendant path of exactly i fresh vertices. Build order:
///  1. element images (ids 0..n-1), then a 4-clique a0..a3 per element with a ~ a0;
///  2. unary facts P_i(a): pendant path at a;
///  3. each unordered pair {a,b} carrying a binary fact: path a - c_ba - c_ab - b,
///     or for a loop pair a triangle a - c - c' - a;
///  4. binary facts R_i(a,b): pendant path at c_ab (at c' for loops);
///  5. nullary gadget d - d0 with chordless 4-cycle d0 d1 d2 d3;
///  6. true nullary A_i: pendant path at d.
inline EncodedStructure encode_digraph(const RelStructure& m)
{
    const auto& sig = m.signature();
    const auto n = m.universe_size();
    GraphBuilder b;
    EncodedStructure out;

    for (std::size_t a = 0; a < n; ++a)
        out.element_image.push_back(b.add_vertex(tag("elem", a)));
    for (std::size_t a = 0; a < n; ++a) {
        Vertex q[4];
        for (int k = 0; k < 4; ++k)
            q[k] = b.add_vertex("a" + std::to_string(k) + ":" + std::to_string(a));
        b.add_edge(Vertex(a), q[0]);
        for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
                b.add_edge(q[x], q[y]);
    }

    const auto pendant = [&](Vertex anchor, std::size_t length, const std::string& prefix) {
        Vertex prev = anchor;
        for (std::size_t k = 1; k <= length; ++k) {
            const auto v = b.add_vertex(prefix + ":" + std::to_string(k));
            b.add_edge(prev, v);
            prev = v;
        }
    };

    const auto unary = sig.of_arity(1);
    for (std::size_t i = 0; i < unary.size(); ++i)
        for (const auto& t : m.facts(unary[i]))
            pendant(t[0], i + 1, "unary:" + sig[unary[i]].name + ":" + std::to_string(t[0]));

    const auto binary = sig.of_arity(2);
    std::set<Edge> pairs;
    std::set<Vertex> loops;
    for (auto s : binary)
        for (const auto& t : m.facts(s)) {
            if (t[0] == t[1])
                loops.insert(t[0]);
            else
                pairs.emplace(t[0], t[1]);
        }
    // anchor[(x,y)] = c_xy, the pair-gadget vertex adjacent to y
    std::map<std::pair<Vertex, Vertex>, Vertex> anchor;
    {
        // Pairs and loops are processed together in order of their smaller element.
        std::set<std::pair<Vertex, Vertex>> all;
        for (const auto& e : pairs)
            all.emplace(e.u, e.v);
        for (auto a : loops)
            all.emplace(a, a);
        for (const auto& [x, y] : all) {
            if (x == y) {
                const auto c = b.add_vertex(tag("loop", x));
                const auto c2 = b.add_vertex(tag("loop'", x));
                b.add_edge(x, c);
                b.add_edge(c, c2);
                b.add_edge(c2, x);
                anchor[{x, x}] = c2;
            } else {
                const auto c_yx = b.add_vertex("c:" + std::to_string(y) + "," + std::to_string(x));
                const auto c_xy = b.add_vertex("c:" + std::to_string(x) + "," + std::to_string(y));
                b.add_edge(x, c_yx);
                b.add_edge(c_yx, c_xy);
                b.add_edge(c_xy, y);
                anchor[{y, x}] = c_yx;
                anchor[{x, y}] = c_xy;
            }
        }
    }
    for (std::size_t i = 0; i < binary.size(); ++i)
        for (const auto& t : m.facts(binary[i]))
            pendant(anchor.at({t[0], t[1]}), i + 1,
                    "binary:" + sig[binary[i]].name + ":" + std::to_string(t[0]) + "," + std::to_string(t[1]));

    out.d = b.add_vertex("d");
    Vertex ring[4];
    for (int k = 0; k < 4; ++k)
        ring[k] = b.add_vertex("d" + std::to_string(k));
    b.add_edge(out.d, ring[0]);
    for (int k = 0; k < 4; ++k)
        b.add_edge(ring[k], ring[(k + 1) % 4]);

    const auto nullary = sig.of_arity(0);
    for (std::size_t i = 0; i < nullary.size(); ++i)
        if (!m.facts(nullary[i]).empty())
            pendant(out.d, i + 1, "nullary:" + sig[nullary[i]].name);

    out.graph = b.build();
    return out;
}

// ---------------------------------------------------------------------------
// Independence witnesses

/// Id of b_J in independence_witness(m, r).
inline Vertex witness_b(std::size_t m, std::size_t mask) { return Vertex(m + mask); }

/// a_0..a_{m-1} (ids 0..m-1), b_J for every bitmask J (ids m + J), and for
/// each i in J a path of length r+1 from a_i to b_J whose r interior vertices
/// are fresh. Paths are added for i ascending, then J ascending.
inline Graph independence_witness(std::size_t m, std::size_t r)
{
    if (m == 0)
        throw std::invalid_argument("independence_witness needs m >= 1");
    if (m > 20)
        throw std::invalid_argument("independence_witness: m too large");
    const std::size_t subsets = std::size_t{1} << m;
    GraphBuilder b;
    for (std::size_t i = 0; i < m; ++i)
        b.add_vertex(tag("a", i));
    for (std::size_t mask = 0; mask < subsets; ++mask)
        b.add_vertex(tag("b", mask));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            if (!(mask >> i & 1))
                continue;
            Vertex prev = Vertex(i);
            for (std::size_t k = 1; k <= r; ++k) {
                const auto v = b.add_vertex("path:" + std::to_string(i) + ":" + std::to_string(mask) + ":"
                                            + std::to_string(k));
                b.add_edge(prev, v);
                prev = v;
            }
            b.add_edge(prev, witness_b(m, mask));
        }
    return b.build();
}

struct Embedding {
    Graph pattern;
    Graph host;
    std::vector<Vertex> map; ///< pattern vertex -> host vertex
};

/// True iff `map` is injective and sends every pattern edge to a host edge.
inline bool validate_embedding(const Graph& pattern, const Graph& host, std::span<const Vertex> map)
{
    if (map.size() != pattern.vertex_count())
        return false;
    std::vector<bool> used(host.vertex_count(), false);
    for (auto v : map) {
        if (v >= host.vertex_count() || used[v])
            return false;
        used[v] = true;
    }
    for (const auto& e : pattern.edges())
        if (!host.adjacent(map[e.u], map[e.v]))
            return false;
    return true;
}

/// Places A_m inside K_{m+2^m}^r: a_i on branch i, b_J on branch m+J, and the
/// a_i--b_J path onto the subdivided edge between those branches.
inline Embedding embed_witness_in_subdivided_clique(std::size_t m, std::size_t r)
{
    Embedding out;
    out.pattern = independence_witness(m, r);
    const std::size_t subsets = std::size_t{1} << m;
    const std::size_t branches = m + subsets;
    out.host = subdivided_clique(branches, r);
    out.map.resize(out.pattern.vertex_count());
    for (std::size_t v = 0; v < branches; ++v)
        out.map[v] = Vertex(v);
    std::size_t next = branches;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            if (!(mask >> i & 1))
                continue;
            for (std::size_t k = 1; k <= r; ++k)
                out.map[next++] = subdivision_vertex(branches, r, i, m + mask, k);
        }
    return out;
}

} // namespace flatkit
