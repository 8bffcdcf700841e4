#pragma once

// Finite simple undirected graphs and the basic exact algorithms the rest of
// the library is built on.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flatkit {

using Vertex = std::uint32_t;

/// Unordered pair stored with first < second.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    auto operator<=>(const Edge&) const = default;
};

/// Shortest-path length; std::nullopt stands for "infinite" (disconnected).
using Distance = std::optional<std::size_t>;

/// Thrown when an exhaustive search runs out of its decision-node budget.
/// Never used to report a negative answer.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what)
        : std::runtime_error("budget exceeded: " + what) {}
};

inline constexpr std::uint64_t default_budget = 10'000'000;

class GraphBuilder;

/// Immutable graph on vertices 0..n-1. Built through GraphBuilder or the
/// (n, edges) constructor; both reject loops, multi-edges and bad ids.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n), labels_(n) {}

    Graph(std::size_t n, std::span<const Edge> edges) : adj_(n), labels_(n)
    {
        for (const auto& e : edges)
            insert_edge(e.u, e.v);
        finish();
    }

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    std::span<const Vertex> neighbors(Vertex v) const
    {
        check_vertex(v);
        return adj_[v];
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    std::size_t max_degree() const
    {
        std::size_t best = 0;
        for (const auto& row : adj_)
            best = std::max(best, row.size());
        return best;
    }

    bool adjacent(Vertex u, Vertex v) const
    {
        check_vertex(u);
        check_vertex(v);
        if (!matrix_.empty())
            return matrix_[std::size_t(u) * adj_.size() + v] != 0;
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    /// All edges with u < v, lexicographically sorted.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < adj_.size(); ++u)
            for (Vertex v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    /// Empty string when the vertex carries no label.
    const std::string& label(Vertex v) const
    {
        check_vertex(v);
        return labels_[v];
    }

    bool has_labels() const
    {
        return std::any_of(labels_.begin(), labels_.end(), [](const auto& s) { return !s.empty(); });
    }

    /// First vertex carrying exactly this label.
    std::optional<Vertex> find_label(const std::string& tag) const
    {
        for (Vertex v = 0; v < labels_.size(); ++v)
            if (labels_[v] == tag)
                return v;
        return std::nullopt;
    }

    void check_vertex(Vertex v) const
    {
        if (v >= adj_.size())
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n = "
                                    + std::to_string(adj_.size()) + ")");
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.adj_ == b.adj_ && a.labels_ == b.labels_;
    }

private:
    friend class GraphBuilder;

    static constexpr std::size_t dense_limit = 4096;

    void insert_edge(Vertex u, Vertex v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    void finish()
    {
        edge_count_ = 0;
        for (Vertex u = 0; u < adj_.size(); ++u) {
            auto& row = adj_[u];
            std::sort(row.begin(), row.end());
            if (std::adjacent_find(row.begin(), row.end()) != row.end())
                throw std::invalid_argument("duplicate edge at vertex " + std::to_string(u));
            edge_count_ += row.size();
        }
        edge_count_ /= 2;
        matrix_.clear();
        const auto n = adj_.size();
        if (n <= dense_limit) {
            matrix_.assign(n * n, 0);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v : adj_[u])
                    matrix_[std::size_t(u) * n + v] = 1;
        }
    }

    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
    std::vector<std::uint8_t> matrix_;
    std::size_t edge_count_ = 0;
};

/// Incremental construction; vertex ids are handed out in call order.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(std::size_t n) : adj_(n), labels_(n) {}

    Vertex add_vertex(std::string label = {})
    {
        adj_.emplace_back();
        labels_.push_back(std::move(label));
        return Vertex(adj_.size() - 1);
    }

    void add_edge(Vertex u, Vertex v)
    {
        if (u >= adj_.size() || v >= adj_.size())
            throw std::out_of_range("edge {" + std::to_string(u) + "," + std::to_string(v)
                                    + "} has an endpoint >= " + std::to_string(adj_.size()));
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (has_edge(u, v))
            throw std::invalid_argument("duplicate edge {" + std::to_string(u) + ","
                                        + std::to_string(v) + "}");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    bool has_edge(Vertex u, Vertex v) const
    {
        const auto& row = adj_.at(u);
        return std::find(row.begin(), row.end(), v) != row.end();
    }

    void set_label(Vertex v, std::string label)
    {
        if (v >= adj_.size())
            throw std::out_of_range("label for missing vertex " + std::to_string(v));
        if (!labels_[v].empty())
            throw std::invalid_argument("vertex " + std::to_string(v) + " already labelled '"
                                        + labels_[v] + "'");
        labels_[v] = std::move(label);
    }

    std::size_t vertex_count() const { return adj_.size(); }

    Graph build() const
    {
        Graph g;
        g.adj_ = adj_;
        g.labels_ = labels_;
        g.finish();
        return g;
    }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
};

/// Same vertices and labels, with extra edges added.
inline Graph with_extra_edges(const Graph& g, std::span<const Edge> extra)
{
    GraphBuilder b;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        b.add_vertex(g.label(v));
    for (const auto& e : g.edges())
        b.add_edge(e.u, e.v);
    for (const auto& e : extra)
        b.add_edge(e.u, e.v);
    return b.build();
}

/// Induced subgraph on `keep` (in the given order); labels are carried over.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep)
{
    std::vector<std::int64_t> pos(g.vertex_count(), -1);
    GraphBuilder b;
    for (Vertex v : keep) {
        g.check_vertex(v);
        if (pos[v] >= 0)
            throw std::invalid_argument("vertex listed twice in induced_subgraph");
        pos[v] = b.add_vertex(g.label(v));
    }
    for (Vertex v : keep)
        for (Vertex w : g.neighbors(v))
            if (v < w && pos[w] >= 0)
                b.add_edge(Vertex(pos[v]), Vertex(pos[w]));
    return b.build();
}

// ---------------------------------------------------------------------------
// Distances

/// BFS distances from `source`; unreachable vertices get std::nullopt.
inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source)
{
    g.check_vertex(source);
    std::vector<Distance> dist(g.vertex_count());
    std::queue<Vertex> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(u))
            if (!dist[w]) {
                dist[w] = *dist[u] + 1;
                queue.push(w);
            }
    }
    return dist;
}

inline Distance distance(const Graph& g, Vertex u, Vertex v)
{
    g.check_vertex(v);
    return bfs_distances(g, u)[v];
}

/// Maximum pairwise distance, std::nullopt if disconnected.
inline Distance diameter(const Graph& g)
{
    if (g.empty())
        throw std::invalid_argument("diameter of the empty graph is undefined");
    std::size_t best = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        for (const auto& d : bfs_distances(g, s)) {
            if (!d)
                return std::nullopt;
            best = std::max(best, *d);
        }
    }
    return best;
}

/// Flattened all-pairs distance table, `unreachable` for infinite entries.
class DistanceTable {
public:
    static constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

    DistanceTable() = default;
    explicit DistanceTable(const Graph& g) : n_(g.vertex_count()), d_(n_ * n_, unreachable)
    {
        for (Vertex s = 0; s < n_; ++s) {
            const auto row = bfs_distances(g, s);
            for (Vertex t = 0; t < n_; ++t)
                if (row[t])
                    d_[s * n_ + t] = std::uint32_t(*row[t]);
        }
    }

    std::uint32_t operator()(Vertex u, Vertex v) const { return d_[std::size_t(u) * n_ + v]; }
    bool empty() const { return d_.empty(); }

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> d_;
};

/// Number of connected components.
inline std::size_t component_count(const Graph& g)
{
    std::vector<bool> seen(g.vertex_count(), false);
    std::size_t count = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s])
            continue;
        ++count;
        std::vector<Vertex> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

// ---------------------------------------------------------------------------
// Statistics

struct GraphStats {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t max_degree = 0;
    Distance diameter; ///< nullopt = infinite

    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

/// The empty graph reports diameter 0.
inline GraphStats compute_stats(const Graph& g)
{
    GraphStats s;
    s.vertices = g.vertex_count();
    s.edges = g.edge_count();
    s.max_degree = g.max_degree();
    s.diameter = g.empty() ? Distance{0} : diameter(g);
    return s;
}

// ---------------------------------------------------------------------------
// Exhaustive substructure enumeration

namespace detail {

class NodeCounter {
public:
    NodeCounter(std::uint64_t budget, std::string what) : budget_(budget), what_(std::move(what)) {}

    void tick()
    {
        if (++used_ > budget_)
            throw BudgetExceeded(what_ + " after " + std::to_string(budget_) + " nodes");
    }

    std::uint64_t used() const { return used_; }

private:
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
    std::string what_;
};

inline void extend_cliques(const Graph& g, std::size_t k, std::vector<Vertex>& current,
                           const std::vector<Vertex>& candidates, NodeCounter& counter,
                           std::vector<std::vector<Vertex>>& out)
{
    if (current.size() == k) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates.size() - i < k - current.size())
            break;
        counter.tick();
        const Vertex v = candidates[i];
        std::vector<Vertex> next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (g.adjacent(v, candidates[j]))
                next.push_back(candidates[j]);
        current.push_back(v);
        extend_cliques(g, k, current, next, counter, out);
        current.pop_back();
    }
}

inline void extend_induced_path(const Graph& g, std::size_t k, std::vector<Vertex>& path,
                                NodeCounter& counter, std::vector<std::vector<Vertex>>& out)
{
    const std::size_t t = path.size() - 1;
    const Vertex start = path.front();
    for (Vertex w : g.neighbors(path.back())) {
        if (w <= start || std::find(path.begin(), path.end(), w) != path.end())
            continue;
        counter.tick();
        bool chord = false;
        for (std::size_t s = 1; s < t && !chord; ++s)
            chord = g.adjacent(path[s], w);
        if (chord)
            continue;
        const bool closes = (t + 1 == k - 1);
        if (t >= 1 && g.adjacent(start, w) != closes)
            continue;
        path.push_back(w);
        if (closes) {
            if (path[1] < path.back())
                out.push_back(path);
        } else {
            extend_induced_path(g, k, path, counter, out);
        }
        path.pop_back();
    }
}

} // namespace detail

/// All k-cliques as sorted vertex lists, in lexicographic order.
inline std::vector<std::vector<Vertex>> cliques_of_size(const Graph& g, std::size_t k,
                                                        std::uint64_t budget = default_budget)
{
    if (k == 0)
        throw std::invalid_argument("clique size must be at least 1");
    detail::NodeCounter counter(budget, "clique enumeration");
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v)
        all[v] = v;
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> current;
    detail::extend_cliques(g, k, current, all, counter, out);
    return out;
}

/// All induced cycles of length k. Each cycle starts at its smallest vertex
/// and continues towards its smaller neighbour; the list is sorted.
inline std::vector<std::vector<Vertex>> chordless_cycles_of_length(const Graph& g, std::size_t k,
                                                                   std::uint64_t budget = default_budget)
{
    if (k < 3)
        throw std::invalid_argument("cycle length must be at least 3");
    detail::NodeCounter counter(budget, "chordless cycle enumeration");
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        std::vector<Vertex> path{s};
        detail::extend_induced_path(g, k, path, counter, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Disjoint union

struct DisjointUnion {
    Graph graph;
    /// offsets[i] is the id of member i's vertex 0; a trailing entry holds the total.
    std::vector<std::size_t> offsets;

    /// (member index, original vertex id) of a union vertex.
    std::pair<std::size_t, Vertex> origin(Vertex v) const
    {
        if (v >= offsets.back())
            throw std::out_of_range("vertex outside disjoint union");
        const auto it = std::upper_bound(offsets.begin(), offsets.end(), std::size_t(v));
        const auto member = std::size_t(it - offsets.begin()) - 1;
        return {member, Vertex(v - offsets[member])};
    }
};

inline DisjointUnion disjoint_union(std::span<const Graph> family)
{
    DisjointUnion result;
    GraphBuilder b;
    for (const auto& g : family) {
        const std::size_t offset = b.vertex_count();
        result.offsets.push_back(offset);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            b.add_vertex(g.label(v));
        for (const auto& e : g.edges())
            b.add_edge(Vertex(e.u + offset), Vertex(e.v + offset));
    }
    result.offsets.push_back(b.vertex_count());
    result.graph = b.build();
    return result;
}

} // namespace flatkit
