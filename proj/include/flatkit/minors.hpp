#pragma once

// Exact witness search for subdivided cliques, shallow clique minors,
// shallow topological clique minors and unbounded topological minors.
//
// Every positive answer carries a MinorModel certificate that
// verify_minor_model re-checks from scratch. Searches are deterministic
// backtracking with a decision-node budget; running out of budget is
// reported as its own outcome and never as "not contained".

#include "flatkit/graph.hpp"
#include "flatkit/io.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace flatkit {

enum class ModelKind { branch_set, topological };

/// Path realising pattern edge {from, to} (from < to), listed from the
/// image of `from` to the image of `to`.
struct BranchPath {
    std::size_t from = 0;
    std::size_t to = 0;
    std::vector<Vertex> vertices;

    friend bool operator==(const BranchPath&, const BranchPath&) = default;
};

struct MinorModel {
    ModelKind kind = ModelKind::topological;
    std::optional<std::size_t> depth; ///< nullopt = unbounded

    // branch-set kind
    std::vector<std::vector<Vertex>> branch_sets;
    std::vector<Vertex> centers;

    // topological kind
    std::vector<Vertex> branch_vertices;
    std::vector<BranchPath> paths;

    std::size_t size() const
    {
        return kind == ModelKind::branch_set ? branch_sets.size() : branch_vertices.size();
    }

    friend bool operator==(const MinorModel&, const MinorModel&) = default;
};

/// Result of verify_minor_model: `clause` names the first violated condition.
struct ModelCheck {
    bool ok = true;
    std::string clause;
    std::string detail;

    explicit operator bool() const { return ok; }
};

namespace detail {

inline ModelCheck fail(std::string clause, std::string detail)
{
    return {false, std::move(clause), std::move(detail)};
}

inline ModelCheck verify_branch_sets(const Graph& host, const MinorModel& model)
{
    const auto m = model.branch_sets.size();
    if (model.centers.size() != m)
        return fail("center-count", "expected one center per branch set");
    std::vector<std::int64_t> owner(host.vertex_count(), -1);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& set = model.branch_sets[i];
        if (set.empty())
            return fail("nonempty", "branch set " + std::to_string(i) + " is empty");
        for (auto v : set) {
            host.check_vertex(v);
            if (owner[v] >= 0)
                return fail("disjoint", "vertex " + std::to_string(v) + " lies in branch sets "
                                            + std::to_string(owner[v]) + " and " + std::to_string(i));
            owner[v] = std::int64_t(i);
        }
        host.check_vertex(model.centers[i]);
        if (owner[model.centers[i]] != std::int64_t(i))
            return fail("center-membership", "center of set " + std::to_string(i) + " is not in the set");
    }
    for (std::size_t i = 0; i < m; ++i) {
        const auto sub = induced_subgraph(host, model.branch_sets[i]);
        const auto c = Vertex(std::find(model.branch_sets[i].begin(), model.branch_sets[i].end(), model.centers[i])
                              - model.branch_sets[i].begin());
        const auto dist = bfs_distances(sub, c);
        for (std::size_t k = 0; k < dist.size(); ++k) {
            if (!dist[k])
                return fail("connected", "branch set " + std::to_string(i) + " is not connected");
            if (model.depth && *dist[k] > *model.depth)
                return fail("radius", "vertex " + std::to_string(model.branch_sets[i][k]) + " is at distance "
                                          + std::to_string(*dist[k]) + " from the center of set "
                                          + std::to_string(i));
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            bool touching = false;
            for (auto v : model.branch_sets[i]) {
                for (auto w : host.neighbors(v))
                    if (owner[w] == std::int64_t(j)) {
                        touching = true;
                        break;
                    }
                if (touching)
                    break;
            }
            if (!touching)
                return fail("adjacency", "branch sets " + std::to_string(i) + " and " + std::to_string(j)
                                             + " are not joined by an edge");
        }
    return {};
}

inline ModelCheck verify_topological(const Graph& host, const MinorModel& model, const Graph* pattern,
                                     std::optional<std::size_t> exact_length)
{
    const auto m = model.branch_vertices.size();
    std::vector<std::int64_t> role(host.vertex_count(), -1); // -2 = branch vertex
    for (auto v : model.branch_vertices) {
        host.check_vertex(v);
        if (role[v] != -1)
            return fail("distinct-branch", "vertex " + std::to_string(v) + " used twice as a branch vertex");
        role[v] = -2;
    }
    if (pattern && pattern->vertex_count() != m)
        return fail("pattern", "model has " + std::to_string(m) + " branch vertices, pattern has "
                                   + std::to_string(pattern->vertex_count()));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t p = 0; p < model.paths.size(); ++p) {
        const auto& path = model.paths[p];
        const auto name = "path " + std::to_string(path.from) + "-" + std::to_string(path.to);
        if (path.from >= m || path.to >= m || path.from >= path.to)
            return fail("path-endpoints", name + " does not name two branch vertices in order");
        if (!seen.emplace(path.from, path.to).second)
            return fail("pattern", name + " listed twice");
        const auto& vs = path.vertices;
        for (auto v : vs)
            host.check_vertex(v);
        if (vs.size() < 2 || vs.front() != model.branch_vertices[path.from]
            || vs.back() != model.branch_vertices[path.to])
            return fail("path-endpoints", name + " does not run between its branch vertices");
        const auto length = vs.size() - 1;
        if (model.depth && length > 2 * *model.depth + 1)
            return fail("path-length", name + " has " + std::to_string(length) + " edges, more than 2r+1 = "
                                           + std::to_string(2 * *model.depth + 1));
        if (exact_length && length != *exact_length)
            return fail("exact-length", name + " has " + std::to_string(length) + " edges, expected "
                                            + std::to_string(*exact_length));
        for (std::size_t k = 0; k + 1 < vs.size(); ++k)
            if (!host.adjacent(vs[k], vs[k + 1]))
                return fail("path-edge", name + ": " + std::to_string(vs[k]) + " and " + std::to_string(vs[k + 1])
                                             + " are not adjacent");
        for (std::size_t k = 1; k + 1 < vs.size(); ++k) {
            const auto v = vs[k];
            if (role[v] == -2)
                return fail("interior-disjoint", name + " passes through branch vertex " + std::to_string(v));
            if (role[v] >= 0)
                return fail("interior-disjoint", name + " shares interior vertex " + std::to_string(v)
                                                     + (role[v] == std::int64_t(p) ? " with itself" : " with another path"));
            role[v] = std::int64_t(p);
        }
    }
    if (pattern) {
        for (const auto& e : pattern->edges())
            if (!seen.count({e.u, e.v}))
                return fail("pattern", "no path for pattern edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        if (seen.size() != pattern->edge_count())
            return fail("pattern", "model has paths for non-edges of the pattern");
    } else if (seen.size() != m * (m - (m > 0)) / 2) {
        return fail("pattern", "clique model needs a path for each of the " + std::to_string(m * (m - (m > 0)) / 2)
                                   + " branch pairs");
    }
    return {};
}

} // namespace detail

/// Checks every clause of the model against `host`. Topological models are
/// checked against `pattern` (a complete graph on the branch vertices when
/// null); `exact_length` additionally pins every path length.
/// Throws std::out_of_range on vertex ids outside the host.
inline ModelCheck verify_minor_model(const Graph& host, const MinorModel& model, const Graph* pattern = nullptr,
                                     std::optional<std::size_t> exact_length = std::nullopt)
{
    if (model.kind == ModelKind::branch_set)
        return detail::verify_branch_sets(host, model);
    return detail::verify_topological(host, model, pattern, exact_length);
}

// ---------------------------------------------------------------------------
// Search results

enum class Outcome { found, exhausted, budget_exceeded };

inline const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::found: return "found";
    case Outcome::exhausted: return "exhausted";
    case Outcome::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

struct SearchBudget {
    std::uint64_t max_nodes = default_budget;
};

struct SearchResult {
    Outcome outcome = Outcome::exhausted;
    std::optional<MinorModel> model;
    std::uint64_t nodes = 0;

    bool found() const { return outcome == Outcome::found; }
};

namespace detail {

enum class Step { found, exhausted };

/// Host vertices by degree (descending), ties by id.
inline std::vector<Vertex> degree_order(const Graph& g)
{
    std::vector<Vertex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

/// Backtracking search for a subdivision of `pattern` whose paths have
/// between min_len and max_len edges.
class TopologicalSearch {
public:
    TopologicalSearch(const Graph& host, const Graph& pattern, std::size_t min_len, std::size_t max_len,
                      std::uint64_t budget)
        : host_(host), pattern_(pattern), min_len_(min_len), max_len_(max_len),
          counter_(budget, "topological search"), used_(host.vertex_count(), 0),
          image_(pattern.vertex_count(), 0)
    {
        host_order_ = degree_order(host);
        pattern_order_ = degree_order(pattern);
        const auto p = pattern.vertex_count();
        std::vector<std::size_t> position(p);
        for (std::size_t k = 0; k < p; ++k)
            position[pattern_order_[k]] = k;
        earlier_.resize(p);
        for (std::size_t k = 0; k < p; ++k) {
            for (auto w : pattern.neighbors(pattern_order_[k]))
                if (position[w] < k)
                    earlier_[k].push_back(position[w]);
            std::sort(earlier_[k].begin(), earlier_[k].end());
        }
        symmetric_ = pattern.edge_count() == p * (p - (p > 0)) / 2;
        if (host.vertex_count() <= 4096)
            dist_ = DistanceTable(host);
    }

    SearchResult run(std::optional<std::size_t> depth)
    {
        SearchResult result;
        try {
            if (place(0, 0) == Step::found) {
                result.outcome = Outcome::found;
                MinorModel model;
                model.kind = ModelKind::topological;
                model.depth = depth;
                model.branch_vertices = image_;
                model.paths = paths_;
                std::sort(model.paths.begin(), model.paths.end(), [](const auto& a, const auto& b) {
                    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
                });
                result.model = std::move(model);
            } else {
                result.outcome = Outcome::exhausted;
            }
        } catch (const BudgetExceeded&) {
            result.outcome = Outcome::budget_exceeded;
        }
        result.nodes = counter_.used();
        return result;
    }

private:
    bool reachable_within(Vertex a, Vertex b, std::size_t steps) const
    {
        return dist_.empty() || dist_(a, b) <= steps;
    }

    Step place(std::size_t k, std::size_t min_pos)
    {
        if (k == pattern_order_.size())
            return Step::found;
        const Vertex h = pattern_order_[k];
        const auto need = pattern_.degree(h);
        for (std::size_t pos = symmetric_ ? min_pos : 0; pos < host_order_.size(); ++pos) {
            const Vertex v = host_order_[pos];
            if (host_.degree(v) < need)
                break;
            if (used_[v])
                continue;
            counter_.tick();
            bool close_enough = true;
            for (auto j : earlier_[k])
                close_enough = close_enough && reachable_within(image_[pattern_order_[j]], v, max_len_);
            if (!close_enough)
                continue;
            used_[v] = 1;
            image_[h] = v;
            const auto step = route(k, 0, pos + 1);
            used_[v] = 0;
            if (step == Step::found)
                return step;
        }
        return Step::exhausted;
    }

    Step route(std::size_t k, std::size_t e, std::size_t next_pos)
    {
        if (e == earlier_[k].size())
            return place(k + 1, next_pos);
        const Vertex here = pattern_order_[k];
        const Vertex there = pattern_order_[earlier_[k][e]];
        const Vertex src = image_[there];
        const Vertex dst = image_[here];
        std::vector<Vertex> walk{src};
        for (std::size_t len = min_len_; len <= max_len_; ++len) {
            truncated_ = false;
            if (extend(walk, dst, len, [&] {
                    BranchPath bp;
                    bp.from = std::min(here, there);
                    bp.to = std::max(here, there);
                    bp.vertices = walk;
                    if (bp.from != there)
                        std::reverse(bp.vertices.begin(), bp.vertices.end());
                    paths_.push_back(std::move(bp));
                    const auto step = route(k, e + 1, next_pos);
                    if (step != Step::found)
                        paths_.pop_back();
                    return step;
                })
                == Step::found)
                return Step::found;
            if (!truncated_)
                break;
        }
        return Step::exhausted;
    }

    /// Enumerates simple paths walk.back() -> dst of exactly `steps` more
    /// edges through unused vertices, calling `done` on each completed walk.
    template <typename Done>
    Step extend(std::vector<Vertex>& walk, Vertex dst, std::size_t steps, Done&& done)
    {
        const Vertex cur = walk.back();
        if (steps == 1) {
            for (auto w : host_.neighbors(cur))
                if (!used_[w]) {
                    truncated_ = true;
                    break;
                }
            if (!host_.adjacent(cur, dst))
                return Step::exhausted;
            counter_.tick();
            walk.push_back(dst);
            const auto step = done();
            walk.pop_back();
            return step;
        }
        if (!dist_.empty() && dist_(cur, dst) > steps) {
            if (dist_(cur, dst) != DistanceTable::unreachable)
                truncated_ = true;
            return Step::exhausted;
        }
        for (auto w : host_.neighbors(cur)) {
            if (used_[w])
                continue;
            counter_.tick();
            used_[w] = 1;
            walk.push_back(w);
            const auto step = extend(walk, dst, steps - 1, done);
            walk.pop_back();
            used_[w] = 0;
            if (step == Step::found)
                return step;
        }
        return Step::exhausted;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::size_t min_len_;
    std::size_t max_len_;
    NodeCounter counter_;
    std::vector<std::uint8_t> used_;
    std::vector<Vertex> image_;
    std::vector<Vertex> host_order_;
    std::vector<Vertex> pattern_order_;
    std::vector<std::vector<std::size_t>> earlier_;
    std::vector<BranchPath> paths_;
    DistanceTable dist_;
    bool symmetric_ = false;
    bool truncated_ = false;
};

/// Packs m pairwise-adjacent connected sets of radius <= r around chosen
/// centers. Sets grow only along paths bridging a not-yet-adjacent pair, so
/// each set stays a tree of recorded depth <= r around its center.
class BranchSetSearch {
public:
    BranchSetSearch(const Graph& host, std::size_t m, std::size_t r, std::uint64_t budget)
        : host_(host), m_(m), r_(r), counter_(budget, "clique minor search"),
          owner_(host.vertex_count(), -1), depth_(host.vertex_count(), 0), sets_(m)
    {
        order_ = degree_order(host);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                pairs_.emplace_back(i, j);
    }

    SearchResult run()
    {
        SearchResult result;
        try {
            if (choose_center(0, 0) == Step::found) {
                result.outcome = Outcome::found;
                MinorModel model;
                model.kind = ModelKind::branch_set;
                model.depth = r_;
                model.branch_sets = sets_;
                for (const auto& s : sets_)
                    model.centers.push_back(s.front());
                result.model = std::move(model);
            } else {
                result.outcome = Outcome::exhausted;
            }
        } catch (const BudgetExceeded&) {
            result.outcome = Outcome::budget_exceeded;
        }
        result.nodes = counter_.used();
        return result;
    }

private:
    Step choose_center(std::size_t k, std::size_t min_pos)
    {
        if (k == m_)
            return connect(0);
        for (std::size_t pos = min_pos; pos + (m_ - k) <= order_.size(); ++pos) {
            const Vertex v = order_[pos];
            if (r_ == 0 && host_.degree(v) + 1 < m_)
                break;
            counter_.tick();
            assign(v, k, 0);
            const auto step = choose_center(k + 1, pos + 1);
            if (step == Step::found)
                return step;
            unassign(v);
        }
        return Step::exhausted;
    }

    bool sets_adjacent(std::size_t i, std::size_t j) const
    {
        for (auto v : sets_[i])
            for (auto w : host_.neighbors(v))
                if (owner_[w] == std::int64_t(j))
                    return true;
        return false;
    }

    /// Smallest recorded depth among v's neighbours in set i.
    std::optional<std::size_t> attach_depth(Vertex v, std::size_t i) const
    {
        std::optional<std::size_t> best;
        for (auto w : host_.neighbors(v))
            if (owner_[w] == std::int64_t(i) && (!best || depth_[w] < *best))
                best = depth_[w];
        return best;
    }

    Step connect(std::size_t p)
    {
        if (p == pairs_.size())
            return Step::found;
        const auto [i, j] = pairs_[p];
        if (sets_adjacent(i, j))
            return connect(p + 1);
        // Bridge i and j with a path of k >= 1 free vertices, shortest first.
        const std::size_t max_k = 2 * r_;
        std::vector<Vertex> walk;
        for (std::size_t k = 1; k <= max_k; ++k) {
            for (Vertex v = 0; v < host_.vertex_count(); ++v) {
                if (owner_[v] != -1)
                    continue;
                const auto di = attach_depth(v, i);
                if (!di || k > (r_ - *di) + r_)
                    continue;
                counter_.tick();
                owner_[v] = -2;
                walk.push_back(v);
                const auto step = bridge(p, *di, walk, k);
                walk.pop_back();
                owner_[v] = -1;
                if (step == Step::found)
                    return step;
            }
        }
        return Step::exhausted;
    }

    Step bridge(std::size_t p, std::size_t di, std::vector<Vertex>& walk, std::size_t k)
    {
        const auto [i, j] = pairs_[p];
        if (walk.size() == k) {
            const auto dj = attach_depth(walk.back(), j);
            if (!dj)
                return Step::exhausted;
            // split: first s vertices join set i, the rest join set j
            for (std::size_t s = 0; s <= k; ++s) {
                if (s > 0 && di + s > r_)
                    break;
                if (k - s > 0 && *dj + (k - s) > r_)
                    continue;
                counter_.tick();
                for (std::size_t t = 0; t < s; ++t)
                    assign(walk[t], i, di + 1 + t);
                for (std::size_t t = s; t < k; ++t)
                    assign(walk[t], j, *dj + (k - t));
                const auto step = connect(p + 1);
                if (step == Step::found)
                    return step;
                for (std::size_t t = k; t-- > 0;)
                    unassign(walk[t]);
                for (auto v : walk)
                    owner_[v] = -2;
            }
            return Step::exhausted;
        }
        for (auto w : host_.neighbors(walk.back())) {
            if (owner_[w] != -1)
                continue;
            counter_.tick();
            owner_[w] = -2;
            walk.push_back(w);
            const auto step = bridge(p, di, walk, k);
            walk.pop_back();
            owner_[w] = -1;
            if (step == Step::found)
                return step;
        }
        return Step::exhausted;
    }

    void assign(Vertex v, std::size_t set, std::size_t depth)
    {
        owner_[v] = std::int64_t(set);
        depth_[v] = depth;
        sets_[set].push_back(v);
    }

    void unassign(Vertex v)
    {
        auto& s = sets_[std::size_t(owner_[v])];
        s.erase(std::find(s.begin(), s.end(), v));
        owner_[v] = -1;
    }

    const Graph& host_;
    std::size_t m_;
    std::size_t r_;
    NodeCounter counter_;
    std::vector<std::int64_t> owner_; ///< set index, -1 free, -2 on the walk being built
    std::vector<std::size_t> depth_;
    std::vector<std::vector<Vertex>> sets_;
    std::vector<Vertex> order_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

} // namespace detail

/// K_m^r as a subgraph: m branch vertices joined pairwise by internally
/// disjoint paths of exactly r+1 edges.
inline SearchResult contains_subdivided_clique(const Graph& g, std::size_t m, std::size_t r,
                                               SearchBudget budget = {})
{
    if (m == 0)
        throw std::invalid_argument("clique size must be at least 1");
    const auto pattern = Graph(m, [&] {
        std::vector<Edge> e;
        for (Vertex i = 0; i < m; ++i)
            for (Vertex j = i + 1; j < m; ++j)
                e.emplace_back(i, j);
        return e;
    }());
    detail::TopologicalSearch search(g, pattern, r + 1, r + 1, budget.max_nodes);
    return search.run(r);
}

/// K_m as a topological r-minor: paths of 1..2r+1 edges.
inline SearchResult top_clique_minor(const Graph& g, std::size_t m, std::size_t r, SearchBudget budget = {})
{
    if (m == 0)
        throw std::invalid_argument("clique size must be at least 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i < m; ++i)
        for (Vertex j = i + 1; j < m; ++j)
            e.emplace_back(i, j);
    const Graph pattern(m, e);
    detail::TopologicalSearch search(g, pattern, 1, 2 * r + 1, budget.max_nodes);
    return search.run(r);
}

/// K_m as an r-minor: m disjoint, pairwise adjacent branch sets, each within
/// distance r of its center inside the set.
inline SearchResult clique_minor(const Graph& g, std::size_t m, std::size_t r, SearchBudget budget = {})
{
    if (m == 0)
        throw std::invalid_argument("clique size must be at least 1");
    detail::BranchSetSearch search(g, m, r, budget.max_nodes);
    return search.run();
}

/// Arbitrary H as a topological minor of G (unbounded path lengths). Branch
/// vertex i of the model is the image of H's vertex i.
inline SearchResult is_topological_minor(const Graph& g, const Graph& h, SearchBudget budget = {})
{
    detail::TopologicalSearch search(g, h, 1, std::max<std::size_t>(g.vertex_count(), 1), budget.max_nodes);
    return search.run(std::nullopt);
}

// ---------------------------------------------------------------------------
// Clique number profiles

enum class ProfileMode { minor, topological };

struct CliqueProfile {
    std::size_t value = 0; ///< largest m found (0 only for the empty graph)
    bool at_cap = false;   ///< value == cap was found, so the true number is >= cap
    Outcome outcome = Outcome::exhausted; ///< budget_exceeded if a search ran out
    std::optional<MinorModel> witness;    ///< model for `value`
};

/// Largest m <= cap such that K_m is an r-minor (or topological r-minor).
inline CliqueProfile clique_number_profile(const Graph& g, std::size_t r, std::size_t cap, ProfileMode mode,
                                           SearchBudget budget = {})
{
    if (cap == 0)
        throw std::invalid_argument("cap must be at least 1");
    CliqueProfile out;
    for (std::size_t m = 1; m <= cap; ++m) {
        const auto res = mode == ProfileMode::minor ? clique_minor(g, m, r, budget) : top_clique_minor(g, m, r, budget);
        if (res.outcome == Outcome::budget_exceeded) {
            out.outcome = Outcome::budget_exceeded;
            return out;
        }
        if (!res.found())
            return out;
        out.value = m;
        out.witness = res.model;
        out.outcome = Outcome::found;
    }
    out.at_cap = true;
    return out;
}

// ---------------------------------------------------------------------------
// Certificate text form
//
//   model topological r=<r|inf>        model minor r=<r|inf>
//   branch <v...>                      set <center> : <v...>
//   path <i> <j> : <v0> <v1> ...

inline void write_certificate(std::ostream& out, const MinorModel& model)
{
    out << "model " << (model.kind == ModelKind::topological ? "topological" : "minor")
        << " r=" << (model.depth ? std::to_string(*model.depth) : std::string("inf")) << '\n';
    if (model.kind == ModelKind::topological) {
        out << "branch";
        for (auto v : model.branch_vertices)
            out << ' ' << v;
        out << '\n';
        for (const auto& p : model.paths) {
            out << "path " << p.from << ' ' << p.to << " :";
            for (auto v : p.vertices)
                out << ' ' << v;
            out << '\n';
        }
    } else {
        for (std::size_t i = 0; i < model.branch_sets.size(); ++i) {
            out << "set " << model.centers[i] << " :";
            for (auto v : model.branch_sets[i])
                out << ' ' << v;
            out << '\n';
        }
    }
}

inline std::string to_text(const MinorModel& model)
{
    std::ostringstream out;
    write_certificate(out, model);
    return out.str();
}

inline MinorModel read_certificate(std::istream& in)
{
    MinorModel model;
    bool header = false;
    std::string raw;
    std::size_t number = 0;
    const auto bad = [&](const std::string& msg) { return ParseError(number, "certificate: " + msg); };
    bool branch_seen = false;
    const auto read_ids = [&](std::istringstream& ss) {
        std::vector<Vertex> ids;
        for (std::string tok; ss >> tok;) {
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(tok, &used);
            } catch (const std::exception&) {
                throw bad("expected a vertex id, got '" + tok + "'");
            }
            if (used != tok.size())
                throw bad("expected a vertex id, got '" + tok + "'");
            ids.push_back(Vertex(v));
        }
        return ids;
    };
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ss(raw);
        std::string word;
        if (!(ss >> word))
            continue;
        if (!header) {
            std::string kind, depth;
            ss >> kind >> depth;
            if (word != "model" || (kind != "topological" && kind != "minor") || depth.rfind("r=", 0) != 0)
                throw bad("expected 'model <topological|minor> r=<r|inf>'");
            model.kind = kind == "topological" ? ModelKind::topological : ModelKind::branch_set;
            const auto value = depth.substr(2);
            if (value != "inf") {
                try {
                    model.depth = std::stoul(value);
                } catch (const std::exception&) {
                    throw bad("bad depth '" + value + "'");
                }
            }
            header = true;
        } else if (word == "branch" && model.kind == ModelKind::topological) {
            if (branch_seen)
                throw bad("duplicate 'branch' line");
            model.branch_vertices = read_ids(ss);
            branch_seen = true;
        } else if (word == "path" && model.kind == ModelKind::topological) {
            BranchPath p;
            std::string colon;
            if (!branch_seen)
                throw bad("'path' before 'branch'");
            if (!(ss >> p.from >> p.to >> colon) || colon != ":")
                throw bad("expected 'path <i> <j> : <vertices>'");
            if (p.from >= model.branch_vertices.size() || p.to >= model.branch_vertices.size())
                throw bad("path index out of range");
            p.vertices = read_ids(ss);
            model.paths.push_back(std::move(p));
        } else if (word == "set" && model.kind == ModelKind::branch_set) {
            Vertex center = 0;
            std::string colon;
            if (!(ss >> center >> colon) || colon != ":")
                throw bad("expected 'set <center> : <vertices>'");
            model.centers.push_back(center);
            model.branch_sets.push_back(read_ids(ss));
        } else {
            throw bad("unexpected '" + word + "'");
        }
    }
    if (!header)
        throw ParseError(number, "certificate: empty");
    if (model.kind == ModelKind::topological && !branch_seen)
        throw ParseError(number, "certificate: missing 'branch' line");
    return model;
}

inline MinorModel parse_certificate(const std::string& text)
{
    std::istringstream in(text);
    return read_certificate(in);
}

} // namespace flatkit
