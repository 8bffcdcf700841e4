#pragma once

// Brute-force Tarskian evaluation of first-order formulas over graphs and
// relational structures. Quantifiers expand over the whole universe;
// quantified subformulas are memoised on the values of their free variables.

#include "flatkit/formula.hpp"
#include "flatkit/graph.hpp"
#include "flatkit/structure.hpp"

#include <map>
#include <unordered_map>

namespace flatkit {

inline constexpr std::uint64_t default_eval_budget = 1'000'000'000;

/// A graph seen as an {E}-structure.
class GraphModel {
public:
    explicit GraphModel(const Graph& g) : g_(&g) {}

    std::size_t universe_size() const { return g_->vertex_count(); }

    int resolve(const std::string& name, std::size_t arity) const
    {
        if (name != "E")
            throw std::invalid_argument("unknown relation symbol '" + name + "' (graphs only have E)");
        if (arity != 2)
            throw std::invalid_argument("E is binary, used with " + std::to_string(arity) + " arguments");
        return 0;
    }

    bool holds(int, const Vertex* args) const { return g_->adjacent(args[0], args[1]); }

private:
    const Graph* g_;
};

class StructureModel {
public:
    explicit StructureModel(const RelStructure& m) : m_(&m) {}

    std::size_t universe_size() const { return m_->universe_size(); }

    int resolve(const std::string& name, std::size_t arity) const
    {
        const auto idx = m_->signature().find(name);
        if (!idx)
            throw std::invalid_argument("unknown relation symbol '" + name + "'");
        if (m_->signature()[*idx].arity != arity)
            throw std::invalid_argument("symbol " + name + " has arity " + std::to_string(m_->signature()[*idx].arity)
                                        + ", used with " + std::to_string(arity) + " arguments");
        return int(*idx);
    }

    bool holds(int symbol, const Vertex* args) const
    {
        const auto arity = m_->signature()[std::size_t(symbol)].arity;
        return m_->holds(std::size_t(symbol), std::span<const Vertex>(args, arity));
    }

private:
    const RelStructure* m_;
};

inline GraphModel model_of(const Graph& g) { return GraphModel(g); }
inline StructureModel model_of(const RelStructure& m) { return StructureModel(m); }

/// A formula compiled against one structure, with its free variables in a
/// fixed order. Evaluate with operator(); memo tables persist across calls.
template <typename Model>
class Query {
public:
    Query(Model model, const Formula& f, std::vector<std::string> free_order,
          std::uint64_t budget = default_eval_budget)
        : model_(std::move(model)), budget_(budget), free_count_(free_order.size())
    {
        std::vector<std::pair<std::string, int>> scope;
        for (std::size_t i = 0; i < free_order.size(); ++i)
            scope.emplace_back(free_order[i], int(i));
        slots_ = int(free_order.size());
        root_ = compile(f, scope);
        env_.assign(std::size_t(slots_), 0);
    }

    std::size_t arity() const { return free_count_; }

    bool operator()(std::span<const Vertex> values)
    {
        if (values.size() != free_count_)
            throw std::invalid_argument("query expects " + std::to_string(free_count_) + " values");
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] >= model_.universe_size())
                throw std::out_of_range("assigned element " + std::to_string(values[i]) + " outside the universe");
            env_[i] = values[i];
        }
        return eval(root_);
    }

    bool operator()(std::initializer_list<Vertex> values)
    {
        return (*this)(std::span<const Vertex>(values.begin(), values.size()));
    }

    std::uint64_t assignments() const { return used_; }

private:
    struct Op {
        Formula::Kind kind;
        int symbol = -1;
        std::array<int, 2> slots{-1, -1};
        std::vector<int> children;
        int bound = -1;
        std::vector<int> free_slots; ///< slots read inside, bound outside
        bool memo = false;
        std::unordered_map<std::uint64_t, bool> table;
    };

    int lookup(const std::vector<std::pair<std::string, int>>& scope, const std::string& name) const
    {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it)
            if (it->first == name)
                return it->second;
        throw std::invalid_argument("unbound variable '" + name + "'");
    }

    int compile(const Formula& f, std::vector<std::pair<std::string, int>>& scope)
    {
        using K = Formula::Kind;
        Op op;
        op.kind = f.kind();
        switch (f.kind()) {
        case K::truth:
        case K::falsity: break;
        case K::equal:
            op.slots = {lookup(scope, f.arguments()[0]), lookup(scope, f.arguments()[1])};
            op.free_slots = {op.slots[0], op.slots[1]};
            break;
        case K::atom: {
            const auto& args = f.arguments();
            if (args.size() > 2)
                throw std::invalid_argument("relation atoms have at most two arguments");
            op.symbol = model_.resolve(f.symbol(), args.size());
            for (std::size_t i = 0; i < args.size(); ++i) {
                op.slots[i] = lookup(scope, args[i]);
                op.free_slots.push_back(op.slots[i]);
            }
            break;
        }
        case K::forall:
        case K::exists: {
            op.bound = slots_++;
            scope.emplace_back(f.variable(), op.bound);
            op.children.push_back(compile(f.children()[0], scope));
            scope.pop_back();
            for (int s : ops_[std::size_t(op.children[0])].free_slots)
                if (s != op.bound)
                    op.free_slots.push_back(s);
            break;
        }
        default:
            for (const auto& c : f.children()) {
                const int idx = compile(c, scope);
                op.children.push_back(idx);
                for (int s : ops_[std::size_t(idx)].free_slots)
                    op.free_slots.push_back(s);
            }
        }
        std::sort(op.free_slots.begin(), op.free_slots.end());
        op.free_slots.erase(std::unique(op.free_slots.begin(), op.free_slots.end()), op.free_slots.end());
        op.memo = (op.kind == K::forall || op.kind == K::exists) && op.free_slots.size() <= 4
                  && model_.universe_size() < 65536;
        ops_.push_back(std::move(op));
        return int(ops_.size() - 1);
    }

    bool eval(int index)
    {
        using K = Formula::Kind;
        auto& op = ops_[std::size_t(index)];
        switch (op.kind) {
        case K::truth: return true;
        case K::falsity: return false;
        case K::equal: return env_[std::size_t(op.slots[0])] == env_[std::size_t(op.slots[1])];
        case K::atom: {
            Vertex args[2] = {0, 0};
            for (int i = 0; i < 2 && op.slots[std::size_t(i)] >= 0; ++i)
                args[i] = env_[std::size_t(op.slots[std::size_t(i)])];
            return model_.holds(op.symbol, args);
        }
        case K::negation: return !eval(op.children[0]);
        case K::conjunction:
            for (int c : op.children)
                if (!eval(c))
                    return false;
            return true;
        case K::disjunction:
            for (int c : op.children)
                if (eval(c))
                    return true;
            return false;
        case K::implication: return !eval(op.children[0]) || eval(op.children[1]);
        case K::forall:
        case K::exists: {
            std::uint64_t key = 0;
            if (op.memo) {
                for (int s : op.free_slots)
                    key = (key << 16) | env_[std::size_t(s)];
                if (const auto it = op.table.find(key); it != op.table.end())
                    return it->second;
            }
            const bool want = op.kind == K::exists;
            bool result = !want;
            const auto saved = env_[std::size_t(op.bound)];
            const auto n = model_.universe_size();
            const int body = op.children[0];
            for (Vertex v = 0; v < n; ++v) {
                if (++used_ > budget_)
                    throw BudgetExceeded("formula evaluation after " + std::to_string(budget_) + " assignments");
                env_[std::size_t(op.bound)] = v;
                if (eval(body) == want) {
                    result = want;
                    break;
                }
            }
            env_[std::size_t(op.bound)] = saved;
            // ops_ may not reallocate during eval, so `op` is still valid here
            if (op.memo)
                op.table.emplace(key, result);
            return result;
        }
        }
        return false;
    }

    Model model_;
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
    std::size_t free_count_;
    int slots_ = 0;
    int root_ = -1;
    std::vector<Op> ops_;
    std::vector<Vertex> env_;
};

template <typename S>
auto make_query(const S& structure, const Formula& f, std::vector<std::string> free_order,
                std::uint64_t budget = default_eval_budget)
{
    return Query<decltype(model_of(structure))>(model_of(structure), f, std::move(free_order), budget);
}

/// One-shot evaluation. `assignment` must bind every free variable.
template <typename S>
bool eval(const S& structure, const Formula& f, const std::map<std::string, Vertex>& assignment = {},
          std::uint64_t budget = default_eval_budget)
{
    std::vector<std::string> names;
    std::vector<Vertex> values;
    for (const auto& v : f.free_variables()) {
        const auto it = assignment.find(v);
        if (it == assignment.end())
            throw std::invalid_argument("free variable '" + v + "' has no value");
        names.push_back(v);
        values.push_back(it->second);
    }
    auto q = make_query(structure, f, names, budget);
    return q(values);
}

} // namespace flatkit
