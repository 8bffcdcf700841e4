#pragma once

// First-order formulas over relational signatures, with a small ASCII syntax:
//
//   E(x,y)   x=y   ~f   f & g   f | g   f -> g   forall x. f   exists x. f
//   dist<=d(x,y)   path=k(x,y)        (macros over the edge symbol E)
//
// Precedence from loosest: quantifiers (scope extends right), ->, |, &, ~.
// '->' associates to the right.

#include <cctype>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatkit {

class Formula {
public:
    enum class Kind { truth, falsity, equal, atom, negation, conjunction, disjunction, implication, forall, exists };

    Formula() : Formula(Kind::truth) {}

    Kind kind() const { return node_->kind; }
    /// Relation symbol (atoms only).
    const std::string& symbol() const { return node_->symbol; }
    /// Variables of an atom or equality.
    const std::vector<std::string>& arguments() const { return node_->args; }
    /// Bound variable of a quantifier.
    const std::string& variable() const { return node_->variable; }
    const std::vector<Formula>& children() const { return node_->children; }

    /// Stable identity of the underlying node (shared between copies).
    const void* id() const { return node_.get(); }

    static Formula truth() { return Formula(Kind::truth); }
    static Formula falsity() { return Formula(Kind::falsity); }

    static Formula equal(std::string a, std::string b)
    {
        Formula f(Kind::equal);
        f.mut().args = {std::move(a), std::move(b)};
        return f;
    }

    static Formula atom(std::string symbol, std::vector<std::string> args)
    {
        Formula f(Kind::atom);
        f.mut().symbol = std::move(symbol);
        f.mut().args = std::move(args);
        return f;
    }

    static Formula negation(Formula g)
    {
        Formula f(Kind::negation);
        f.mut().children = {std::move(g)};
        return f;
    }

    /// n-ary conjunction; the empty conjunction is true.
    static Formula conjunction(std::vector<Formula> parts) { return junction(Kind::conjunction, std::move(parts)); }
    /// n-ary disjunction; the empty disjunction is false.
    static Formula disjunction(std::vector<Formula> parts) { return junction(Kind::disjunction, std::move(parts)); }

    static Formula implication(Formula lhs, Formula rhs)
    {
        Formula f(Kind::implication);
        f.mut().children = {std::move(lhs), std::move(rhs)};
        return f;
    }

    static Formula forall(std::string var, Formula body) { return quantifier(Kind::forall, std::move(var), std::move(body)); }
    static Formula exists(std::string var, Formula body) { return quantifier(Kind::exists, std::move(var), std::move(body)); }

    std::set<std::string> free_variables() const
    {
        std::set<std::string> out;
        collect_free(*this, {}, out);
        return out;
    }

    std::string to_string() const
    {
        std::string out;
        print(*this, out, 0);
        return out;
    }

private:
    struct Node {
        Kind kind;
        std::string symbol;
        std::vector<std::string> args;
        std::string variable;
        std::vector<Formula> children;
    };

    explicit Formula(Kind k) : node_(std::make_shared<Node>(Node{k, {}, {}, {}, {}})) {}

    Node& mut() { return const_cast<Node&>(*node_); }

    static Formula junction(Kind k, std::vector<Formula> parts)
    {
        if (parts.empty())
            return Formula(k == Kind::conjunction ? Kind::truth : Kind::falsity);
        if (parts.size() == 1)
            return std::move(parts.front());
        Formula f(k);
        f.mut().children = std::move(parts);
        return f;
    }

    static Formula quantifier(Kind k, std::string var, Formula body)
    {
        Formula f(k);
        f.mut().variable = std::move(var);
        f.mut().children = {std::move(body)};
        return f;
    }

    static void collect_free(const Formula& f, std::set<std::string> bound, std::set<std::string>& out)
    {
        switch (f.kind()) {
        case Kind::equal:
        case Kind::atom:
            for (const auto& a : f.arguments())
                if (!bound.count(a))
                    out.insert(a);
            return;
        case Kind::forall:
        case Kind::exists:
            bound.insert(f.variable());
            collect_free(f.children().front(), std::move(bound), out);
            return;
        default:
            for (const auto& c : f.children())
                collect_free(c, bound, out);
        }
    }

    // precedence: 0 quantifier/implication context, 1 disjunction, 2 conjunction, 3 unary
    static void print(const Formula& f, std::string& out, int context)
    {
        const auto paren = [&](int mine, auto&& body) {
            const bool wrap = mine < context;
            if (wrap)
                out += '(';
            body();
            if (wrap)
                out += ')';
        };
        switch (f.kind()) {
        case Kind::truth: out += "(forall t. t=t)"; return;
        case Kind::falsity: out += "(exists t. ~t=t)"; return;
        case Kind::equal: out += f.arguments()[0] + "=" + f.arguments()[1]; return;
        case Kind::atom: {
            out += f.symbol();
            out += '(';
            for (std::size_t i = 0; i < f.arguments().size(); ++i) {
                if (i)
                    out += ',';
                out += f.arguments()[i];
            }
            out += ')';
            return;
        }
        case Kind::negation:
            out += '~';
            print(f.children()[0], out, 3);
            return;
        case Kind::conjunction:
        case Kind::disjunction: {
            const int mine = f.kind() == Kind::conjunction ? 2 : 1;
            paren(mine, [&] {
                for (std::size_t i = 0; i < f.children().size(); ++i) {
                    if (i)
                        out += mine == 2 ? " & " : " | ";
                    print(f.children()[i], out, mine + 1);
                }
            });
            return;
        }
        case Kind::implication:
            paren(0, [&] {
                print(f.children()[0], out, 1);
                out += " -> ";
                print(f.children()[1], out, 0);
            });
            return;
        case Kind::forall:
        case Kind::exists:
            paren(0, [&] {
                out += f.kind() == Kind::forall ? "forall " : "exists ";
                out += f.variable();
                out += ". ";
                print(f.children()[0], out, 0);
            });
            return;
        }
    }

    std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Generated formulas over the edge symbol E

namespace formulas {

inline Formula edge(const std::string& a, const std::string& b) { return Formula::atom("E", {a, b}); }
inline Formula neq(const std::string& a, const std::string& b) { return Formula::negation(Formula::equal(a, b)); }

/// Fresh variable names start with '_' and cannot clash with parsed input.
inline std::string fresh(const std::string& stem, std::size_t k) { return "_" + stem + std::to_string(k); }

/// Satisfied iff distance(x, y) <= d.
inline Formula dist_le(std::size_t d, const std::string& x = "x", const std::string& y = "y")
{
    if (d == 0)
        return Formula::equal(x, y);
    // x = y  |  exists z. E(x,z) & dist<=d-1(z,y)
    const auto z = fresh("d", d);
    return Formula::disjunction(
        {Formula::equal(x, y), Formula::exists(z, Formula::conjunction({edge(x, z), dist_le(d - 1, z, y)}))});
}

/// Satisfied iff some path with k edges on pairwise distinct vertices joins x and y.
inline Formula exact_path(std::size_t k, const std::string& x = "x", const std::string& y = "y")
{
    if (k == 0)
        throw std::invalid_argument("exact_path needs k >= 1");
    if (k == 1)
        return edge(x, y);
    std::vector<std::string> chain{x};
    for (std::size_t i = 1; i < k; ++i)
        chain.push_back(fresh("p", i));
    chain.push_back(y);
    // Innermost: the last interior vertex is adjacent to y. Each interior
    // vertex is distinct from every vertex placed before it and from y.
    Formula body = edge(chain[k - 1], y);
    for (std::size_t i = k - 1; i >= 1; --i) {
        std::vector<Formula> parts{edge(chain[i - 1], chain[i])};
        for (std::size_t j = 0; j < i; ++j)
            parts.push_back(neq(chain[i], chain[j]));
        parts.push_back(neq(chain[i], y));
        parts.push_back(std::move(body));
        body = Formula::exists(chain[i], Formula::conjunction(std::move(parts)));
    }
    return Formula::conjunction({neq(x, y), std::move(body)});
}

} // namespace formulas

// ---------------------------------------------------------------------------
// Parser

class FormulaParseError : public std::runtime_error {
public:
    FormulaParseError(std::size_t column, const std::string& message)
        : std::runtime_error("formula column " + std::to_string(column) + ": " + message), column_(column)
    {
    }

    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

namespace detail {

class FormulaParser {
public:
    explicit FormulaParser(const std::string& text) : s_(text) {}

    Formula parse()
    {
        auto f = implication();
        skip();
        if (i_ != s_.size())
            throw FormulaParseError(i_ + 1, "unexpected trailing input");
        return f;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    bool accept(const std::string& tok)
    {
        skip();
        if (s_.compare(i_, tok.size(), tok) == 0) {
            i_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(const std::string& tok)
    {
        if (!accept(tok))
            throw FormulaParseError(i_ + 1, "expected '" + tok + "'");
    }

    bool at_keyword(const std::string& word)
    {
        skip();
        if (s_.compare(i_, word.size(), word) != 0)
            return false;
        const auto j = i_ + word.size();
        return j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]));
    }

    std::string identifier()
    {
        skip();
        const auto start = i_;
        if (i_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[i_])))
            throw FormulaParseError(i_ + 1, "expected an identifier");
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
            ++i_;
        return s_.substr(start, i_ - start);
    }

    std::size_t number()
    {
        skip();
        const auto start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (start == i_)
            throw FormulaParseError(i_ + 1, "expected a number");
        return std::stoul(s_.substr(start, i_ - start));
    }

    std::vector<std::string> argument_list()
    {
        expect("(");
        std::vector<std::string> args;
        skip();
        if (accept(")"))
            return args;
        do
            args.push_back(identifier());
        while (accept(","));
        expect(")");
        return args;
    }

    Formula implication()
    {
        auto lhs = disjunction();
        if (accept("->"))
            return Formula::implication(std::move(lhs), implication());
        return lhs;
    }

    Formula disjunction()
    {
        std::vector<Formula> parts{conjunction()};
        while (accept("|"))
            parts.push_back(conjunction());
        return Formula::disjunction(std::move(parts));
    }

    Formula conjunction()
    {
        std::vector<Formula> parts{unary()};
        while (accept("&"))
            parts.push_back(unary());
        return Formula::conjunction(std::move(parts));
    }

    Formula unary()
    {
        skip();
        if (accept("~"))
            return Formula::negation(unary());
        for (const auto* q : {"forall", "exists"}) {
            if (at_keyword(q)) {
                i_ += std::string(q).size();
                const auto var = identifier();
                expect(".");
                auto body = implication();
                return std::string(q) == "forall" ? Formula::forall(var, std::move(body))
                                                  : Formula::exists(var, std::move(body));
            }
        }
        if (accept("(")) {
            auto f = implication();
            expect(")");
            return f;
        }
        const auto column = i_ + 1;
        const auto name = identifier();
        if (name == "dist" && accept("<=")) {
            const auto d = number();
            const auto args = argument_list();
            if (args.size() != 2)
                throw FormulaParseError(column, "dist<=d takes two variables");
            return formulas::dist_le(d, args[0], args[1]);
        }
        skip();
        if (name == "path" && i_ + 1 < s_.size() && s_[i_] == '='
            && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
            ++i_;
            const auto k = number();
            const auto args = argument_list();
            if (args.size() != 2)
                throw FormulaParseError(column, "path=k takes two variables");
            if (k == 0)
                throw FormulaParseError(column, "path=k needs k >= 1");
            return formulas::exact_path(k, args[0], args[1]);
        }
        if (i_ < s_.size() && s_[i_] == '(')
            return Formula::atom(name, argument_list());
        if (accept("="))
            return Formula::equal(name, identifier());
        return Formula::atom(name, {});
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

} // namespace detail

/// Parses `text`; every free variable must appear in `free_vars`.
inline Formula parse_formula(const std::string& text, const std::set<std::string>& free_vars = {"x", "y"})
{
    auto f = detail::FormulaParser(text).parse();
    for (const auto& v : f.free_variables())
        if (!free_vars.count(v))
            throw FormulaParseError(0, "unbound variable '" + v + "'");
    return f;
}

} // namespace flatkit
