#pragma once

// Finite witnesses for the order property (ladders), the independence
// property (shattered sets) and the strong-dependence array, for formulas
// phi(x,y) in two single variables.
//
// Every search first tabulates phi over all pairs, then works purely
// combinatorially on the table. Sequences may repeat elements.

#include "flatkit/eval.hpp"
#include "flatkit/minors.hpp" // Outcome, SearchBudget

#include <boost/dynamic_bitset.hpp>

namespace flatkit {

/// phi(a, b) for all a, b, stored row-wise.
class BinaryRelation {
public:
    BinaryRelation() = default;
    explicit BinaryRelation(std::size_t n) : rows_(n, boost::dynamic_bitset<>(n)), cols_(n, boost::dynamic_bitset<>(n)) {}

    std::size_t size() const { return rows_.size(); }
    bool operator()(Vertex a, Vertex b) const { return rows_[a][b]; }

    void set(Vertex a, Vertex b, bool value = true)
    {
        rows_[a][b] = value;
        cols_[b][a] = value;
    }

    /// {b : phi(a, b)}
    const boost::dynamic_bitset<>& row(Vertex a) const { return rows_[a]; }
    /// {a : phi(a, b)}
    const boost::dynamic_bitset<>& column(Vertex b) const { return cols_[b]; }

    BinaryRelation transposed() const
    {
        BinaryRelation t;
        t.rows_ = cols_;
        t.cols_ = rows_;
        return t;
    }

private:
    std::vector<boost::dynamic_bitset<>> rows_;
    std::vector<boost::dynamic_bitset<>> cols_;
};

/// Tabulates phi(x, y); phi's free variables must be among x and y.
template <typename S>
BinaryRelation relation_table(const S& structure, const Formula& phi, std::uint64_t budget = default_eval_budget)
{
    for (const auto& v : phi.free_variables())
        if (v != "x" && v != "y")
            throw std::invalid_argument("formula has free variable '" + v + "' besides x and y");
    auto query = make_query(structure, phi, {"x", "y"}, budget);
    const auto n = model_of(structure).universe_size();
    BinaryRelation table(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (query({a, b}))
                table.set(a, b);
    return table;
}

// ---------------------------------------------------------------------------
// Ladders

enum class LadderMode { strict, reflexive };

struct LadderWitness {
    std::vector<Vertex> a;
    std::vector<Vertex> b;
};

/// phi(a_i, b_j) holds iff i < j (strict) or i <= j (reflexive), for all i, j.
inline bool check_ladder(const BinaryRelation& t, const LadderWitness& w, LadderMode mode)
{
    if (w.a.size() != w.b.size())
        return false;
    for (std::size_t i = 0; i < w.a.size(); ++i)
        for (std::size_t j = 0; j < w.b.size(); ++j) {
            const bool want = mode == LadderMode::strict ? i < j : i <= j;
            if (t(w.a[i], w.b[j]) != want)
                return false;
        }
    return true;
}

struct LadderResult {
    std::size_t value = 0; ///< longest ladder found (a lower bound when over budget)
    bool at_cap = false;
    Outcome outcome = Outcome::exhausted;
    LadderWitness witness;
};

namespace detail {

class LadderSearch {
public:
    LadderSearch(const BinaryRelation& t, LadderMode mode, NodeCounter& counter)
        : t_(t), mode_(mode), counter_(counter) {}

    std::optional<LadderWitness> find(std::size_t n)
    {
        n_ = n;
        w_ = {};
        if (n == 0)
            return w_;
        boost::dynamic_bitset<> all(t_.size());
        all.set();
        if (place_a(0, all, all))
            return w_;
        return std::nullopt;
    }

private:
    // cand_a: elements with phi(., b_j) false for all placed b_j.
    // cand_b: elements with phi(a_i, .) true for all placed a_i.
    bool place_a(std::size_t k, const boost::dynamic_bitset<>& cand_a, const boost::dynamic_bitset<>& cand_b)
    {
        for (auto a = cand_a.find_first(); a != boost::dynamic_bitset<>::npos; a = cand_a.find_next(a)) {
            counter_.tick();
            auto next_b = cand_b;
            if (mode_ == LadderMode::strict)
                next_b -= t_.row(Vertex(a));
            else
                next_b &= t_.row(Vertex(a));
            if (next_b.none())
                continue;
            w_.a.push_back(Vertex(a));
            if (place_b(k, cand_a, next_b, cand_b))
                return true;
            w_.a.pop_back();
        }
        return false;
    }

    bool place_b(std::size_t k, const boost::dynamic_bitset<>& cand_a, const boost::dynamic_bitset<>& cand_bk,
                 const boost::dynamic_bitset<>& cand_b)
    {
        for (auto b = cand_bk.find_first(); b != boost::dynamic_bitset<>::npos; b = cand_bk.find_next(b)) {
            counter_.tick();
            w_.b.push_back(Vertex(b));
            if (k + 1 == n_)
                return true;
            const auto next_a = cand_a - t_.column(Vertex(b));
            const auto next_b = cand_b & t_.row(w_.a.back());
            if (next_a.any() && next_b.any() && place_a(k + 1, next_a, next_b))
                return true;
            w_.b.pop_back();
        }
        return false;
    }

    const BinaryRelation& t_;
    LadderMode mode_;
    NodeCounter& counter_;
    std::size_t n_ = 0;
    LadderWitness w_;
};

} // namespace detail

/// Longest ladder of length <= cap in the tabulated relation.
inline LadderResult ladder_index(const BinaryRelation& t, std::size_t cap, LadderMode mode, SearchBudget budget = {})
{
    LadderResult out;
    detail::NodeCounter counter(budget.max_nodes, "ladder search");
    detail::LadderSearch search(t, mode, counter);
    try {
        for (std::size_t n = 1; n <= cap; ++n) {
            auto w = search.find(n);
            if (!w)
                return out;
            out.value = n;
            out.witness = std::move(*w);
        }
        out.at_cap = true;
    } catch (const BudgetExceeded&) {
        out.outcome = Outcome::budget_exceeded;
        return out;
    }
    out.outcome = Outcome::found;
    return out;
}

template <typename S>
LadderResult ladder_index(const S& structure, const Formula& phi, std::size_t cap, LadderMode mode,
                          SearchBudget budget = {})
{
    return ladder_index(relation_table(structure, phi), cap, mode, budget);
}

// ---------------------------------------------------------------------------
// Shattering

struct ShatterWitness {
    std::vector<Vertex> a;
    /// b[J] for every bitmask J over a: phi(a_i, b[J]) iff bit i of J is set.
    std::vector<Vertex> b;
};

inline bool check_shatter(const BinaryRelation& t, const ShatterWitness& w)
{
    const auto n = w.a.size();
    if (n >= 32 || w.b.size() != (std::size_t{1} << n))
        return false;
    for (std::size_t mask = 0; mask < w.b.size(); ++mask)
        for (std::size_t i = 0; i < n; ++i)
            if (t(w.a[i], w.b[mask]) != bool(mask >> i & 1))
                return false;
    return true;
}

struct IndependenceResult {
    std::size_t value = 0; ///< largest shattered set found (a lower bound when over budget)
    bool at_cap = false;
    Outcome outcome = Outcome::exhausted;
    ShatterWitness witness;
};

namespace detail {

class ShatterSearch {
public:
    ShatterSearch(const BinaryRelation& t, std::size_t cap, NodeCounter& counter) : t_(t), cap_(cap), counter_(counter)
    {
    }

    void run()
    {
        std::vector<Vertex> chosen;
        if (auto b = traces(chosen)) {
            best_ = {chosen, *b};
            extend(chosen, 0);
        }
    }

    const std::optional<ShatterWitness>& best() const { return best_; }

private:
    /// b_J for each trace J if `set` is shattered, lowest ids first.
    std::optional<std::vector<Vertex>> traces(const std::vector<Vertex>& set)
    {
        const std::size_t want = std::size_t{1} << set.size();
        std::vector<std::int64_t> first(want, -1);
        std::size_t seen = 0;
        for (Vertex b = 0; b < t_.size() && seen < want; ++b) {
            counter_.tick();
            std::size_t mask = 0;
            for (std::size_t i = 0; i < set.size(); ++i)
                if (t_(set[i], b))
                    mask |= std::size_t{1} << i;
            if (first[mask] < 0) {
                first[mask] = b;
                ++seen;
            }
        }
        if (seen < want)
            return std::nullopt;
        return std::vector<Vertex>(first.begin(), first.end());
    }

    void extend(std::vector<Vertex>& chosen, Vertex from)
    {
        if (chosen.size() == cap_ || best_->a.size() == cap_)
            return;
        for (Vertex v = from; v < t_.size(); ++v) {
            chosen.push_back(v);
            if (auto b = traces(chosen)) {
                if (chosen.size() > best_->a.size())
                    best_ = ShatterWitness{chosen, *b};
                extend(chosen, v + 1);
            }
            chosen.pop_back();
            if (best_->a.size() == cap_)
                return;
        }
    }

    const BinaryRelation& t_;
    std::size_t cap_;
    NodeCounter& counter_;
    std::optional<ShatterWitness> best_;
};

} // namespace detail

/// Largest n <= cap such that some a_0..a_{n-1} is shattered by the sets
/// {a : phi(a, b)}.
inline IndependenceResult independence_index(const BinaryRelation& t, std::size_t cap, SearchBudget budget = {})
{
    IndependenceResult out;
    detail::NodeCounter counter(budget.max_nodes, "shattering search");
    detail::ShatterSearch search(t, std::min<std::size_t>(cap, 30), counter);
    try {
        search.run();
    } catch (const BudgetExceeded&) {
        out.outcome = Outcome::budget_exceeded;
    }
    if (search.best()) {
        out.witness = *search.best();
        out.value = out.witness.a.size();
    }
    if (out.outcome != Outcome::budget_exceeded) {
        out.outcome = Outcome::found;
        out.at_cap = out.value == cap;
    }
    return out;
}

template <typename S>
IndependenceResult independence_index(const S& structure, const Formula& phi, std::size_t cap,
                                      SearchBudget budget = {})
{
    return independence_index(relation_table(structure, phi), cap, budget);
}

struct OppositeReport {
    IndependenceResult forward;  ///< phi(x, y)
    IndependenceResult opposite; ///< phi(y, x)
};

/// Independence index of phi and of phi with its variables swapped. No
/// relation between the two finite values is asserted.
template <typename S>
OppositeReport opposite_index_check(const S& structure, const Formula& phi, std::size_t cap, SearchBudget budget = {})
{
    const auto t = relation_table(structure, phi);
    return {independence_index(t, cap, budget), independence_index(t.transposed(), cap, budget)};
}

// ---------------------------------------------------------------------------
// Strong-dependence arrays

/// Rows i < m of elements b[i][j], and for every f : m -> m (encoded in base
/// m, f(i) = digit i) an element a[f] with phi^i(a[f], b[i][j]) iff j = f(i).
struct SDArrayWitness {
    std::size_t m = 0;
    std::vector<std::vector<Vertex>> b;
    std::vector<Vertex> a;
};

inline std::size_t function_count(std::size_t m)
{
    std::size_t count = 1;
    for (std::size_t i = 0; i < m; ++i)
        count *= m;
    return count;
}

inline std::size_t function_value(std::size_t f, std::size_t m, std::size_t i)
{
    for (std::size_t k = 0; k < i; ++k)
        f /= m;
    return f % m;
}

inline bool check_sd_array(std::span<const BinaryRelation> tables, const SDArrayWitness& w)
{
    const auto m = w.m;
    if (tables.size() != m || w.b.size() != m)
        throw std::invalid_argument("incomplete strong-dependence witness: need one row per formula");
    for (const auto& row : w.b)
        if (row.size() != m)
            throw std::invalid_argument("incomplete strong-dependence witness: each row needs m elements");
    if (m == 0)
        return true;
    if (w.a.size() != function_count(m))
        throw std::invalid_argument("incomplete strong-dependence witness: need m^m elements a_f");
    for (std::size_t f = 0; f < w.a.size(); ++f)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (tables[i](w.a[f], w.b[i][j]) != (j == function_value(f, m, i)))
                    return false;
    return true;
}

/// Checks the array pattern by direct evaluation of each formula.
template <typename S>
bool sd_array_check(const S& structure, std::span<const Formula> formulas, const SDArrayWitness& w)
{
    std::vector<BinaryRelation> tables;
    for (const auto& phi : formulas)
        tables.push_back(relation_table(structure, phi));
    return check_sd_array(tables, w);
}

struct SDArrayResult {
    Outcome outcome = Outcome::exhausted;
    std::optional<SDArrayWitness> witness;

    bool found() const { return outcome == Outcome::found; }
};

inline constexpr std::size_t max_sd_array_size = 3;

namespace detail {

class SDArraySearch {
public:
    SDArraySearch(std::span<const BinaryRelation> tables, NodeCounter& counter)
        : tables_(tables), m_(tables.size()), counter_(counter), n_(tables.empty() ? 0 : tables[0].size())
    {
        rows_.resize(m_);
        // code[a] = f restricted to the rows placed so far, or -1
        code_.assign(n_, 0);
    }

    std::optional<SDArrayWitness> run()
    {
        if (!choose_row(0))
            return std::nullopt;
        SDArrayWitness w;
        w.m = m_;
        w.b = rows_;
        w.a.assign(function_count(m_), 0);
        std::vector<bool> filled(w.a.size(), false);
        for (Vertex a = 0; a < n_; ++a)
            if (code_[a] >= 0 && !filled[std::size_t(code_[a])]) {
                filled[std::size_t(code_[a])] = true;
                w.a[std::size_t(code_[a])] = a;
            }
        return w;
    }

private:
    bool choose_row(std::size_t i)
    {
        if (i == m_)
            return true;
        std::vector<Vertex> row;
        return choose_entry(i, row, 0);
    }

    bool choose_entry(std::size_t i, std::vector<Vertex>& row, Vertex from)
    {
        if (row.size() == m_) {
            const auto saved = code_;
            std::size_t weight = 1;
            for (std::size_t k = 0; k < i; ++k)
                weight *= m_;
            const auto& t = tables_[i];
            for (Vertex a = 0; a < n_; ++a) {
                if (code_[a] < 0)
                    continue;
                std::int64_t hit = -1;
                for (std::size_t j = 0; j < m_; ++j)
                    if (t(a, row[j])) {
                        hit = hit < 0 ? std::int64_t(j) : -2;
                    }
                code_[a] = hit < 0 ? -1 : code_[a] + hit * std::int64_t(weight);
            }
            // every partial function on rows 0..i must be realised
            std::vector<bool> seen(weight * m_, false);
            std::size_t count = 0;
            for (Vertex a = 0; a < n_; ++a)
                if (code_[a] >= 0 && !seen[std::size_t(code_[a])]) {
                    seen[std::size_t(code_[a])] = true;
                    ++count;
                }
            if (count == seen.size()) {
                rows_[i] = row;
                if (choose_row(i + 1))
                    return true;
            }
            code_ = saved;
            return false;
        }
        for (Vertex b = from; b < n_; ++b) {
            counter_.tick();
            row.push_back(b);
            if (choose_entry(i, row, b + 1))
                return true;
            row.pop_back();
        }
        return false;
    }

    std::span<const BinaryRelation> tables_;
    std::size_t m_;
    NodeCounter& counter_;
    std::size_t n_;
    std::vector<std::vector<Vertex>> rows_;
    std::vector<std::int64_t> code_;
};

} // namespace detail

/// Exhaustive search for a strong-dependence array with m = tables.size() <= 3.
inline SDArrayResult sd_array_search(std::span<const BinaryRelation> tables, SearchBudget budget = {})
{
    if (tables.size() > max_sd_array_size)
        throw std::invalid_argument("strong-dependence search supports at most " + std::to_string(max_sd_array_size)
                                    + " formulas");
    SDArrayResult out;
    if (tables.empty()) {
        out.outcome = Outcome::found;
        out.witness = SDArrayWitness{};
        return out;
    }
    detail::NodeCounter counter(budget.max_nodes, "strong-dependence search");
    detail::SDArraySearch search(tables, counter);
    try {
        out.witness = search.run();
        out.outcome = out.witness ? Outcome::found : Outcome::exhausted;
    } catch (const BudgetExceeded&) {
        out.outcome = Outcome::budget_exceeded;
    }
    return out;
}

template <typename S>
SDArrayResult sd_array_search(const S& structure, std::span<const Formula> formulas, SearchBudget budget = {})
{
    if (formulas.size() > max_sd_array_size)
        throw std::invalid_argument("strong-dependence search supports at most " + std::to_string(max_sd_array_size)
                                    + " formulas");
    std::vector<BinaryRelation> tables;
    for (const auto& phi : formulas)
        tables.push_back(relation_table(structure, phi));
    return sd_array_search(tables, budget);
}

} // namespace flatkit
