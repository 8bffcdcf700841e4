// flatkit command-line front end.
//
// Exit status: 0 success, 1 usage or parse error, 2 negative verdict or
// violation, 3 only budget-limited outcomes.

#include "flatkit/flatkit.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <variant>

namespace {

using namespace flatkit;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_negative = 2;
constexpr int exit_budget = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::size_t parse_number(const std::string& s, const std::string& where)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError(where + ": '" + s + "' is not a non-negative integer");
    return std::stoull(s);
}

/// Builds one generated graph. `kind` uses the command-line spelling.
Graph generate(const std::string& kind, const std::vector<std::size_t>& p)
{
    const auto need = [&](std::size_t n) {
        if (p.size() != n)
            throw UsageError("generator " + kind + " takes " + std::to_string(n) + " parameter(s), got "
                             + std::to_string(p.size()));
    };
    try {
        if (kind == "subdivided-clique") {
            need(2);
            return subdivided_clique(p[0], p[1]);
        }
        if (kind == "half-graph") {
            need(1);
            return half_graph(p[0]);
        }
        if (kind == "independence-witness") {
            need(2);
            return independence_witness(p[0], p[1]);
        }
        if (kind == "petersen") {
            need(2);
            return generalized_petersen(p[0], p[1]);
        }
        if (kind == "circulant") {
            if (p.size() < 2)
                throw UsageError("generator circulant takes n and at least one jump");
            return circulant_graph(p[0], std::span<const std::size_t>(p).subspan(1));
        }
        if (kind == "augment-path") {
            need(1);
            return augment_diameter4(path_graph(p[0])).graph;
        }
        return standard_graph(family_kind_from_string(kind), p);
    } catch (const std::invalid_argument& e) {
        throw UsageError("generator " + kind + ": " + e.what());
    }
}

/// "kind:a,b" or "kind:a,lo..hi" (a range expands to one graph per value).
std::vector<std::pair<std::string, Graph>> generate_inline(const std::string& spec)
{
    const auto parts = split(spec, ':');
    if (parts.size() != 2)
        throw UsageError("generator spec '" + spec + "' must look like kind:p1,p2,...");
    const auto& kind = parts[0];
    std::vector<std::size_t> fixed;
    std::optional<std::pair<std::size_t, std::size_t>> range;
    std::size_t range_at = 0;
    if (!parts[1].empty()) {
        const auto params = split(parts[1], ',');
        for (std::size_t i = 0; i < params.size(); ++i) {
            const auto dots = params[i].find("..");
            if (dots == std::string::npos) {
                fixed.push_back(parse_number(params[i], "generator spec '" + spec + "'"));
                continue;
            }
            if (range)
                throw UsageError("generator spec '" + spec + "' may contain at most one range");
            range = std::pair{parse_number(params[i].substr(0, dots), "generator spec '" + spec + "'"),
                              parse_number(params[i].substr(dots + 2), "generator spec '" + spec + "'")};
            range_at = i;
            fixed.push_back(0);
        }
    }
    std::vector<std::pair<std::string, Graph>> out;
    if (!range) {
        out.emplace_back(kind + ":" + parts[1], generate(kind, fixed));
        return out;
    }
    if (range->first > range->second)
        throw UsageError("generator spec '" + spec + "' has an empty range");
    for (auto v = range->first; v <= range->second; ++v) {
        fixed[range_at] = v;
        std::string name = kind + ":";
        for (std::size_t i = 0; i < fixed.size(); ++i)
            name += (i ? "," : "") + std::to_string(fixed[i]);
        out.emplace_back(name, generate(kind, fixed));
    }
    return out;
}

using Input = std::variant<Graph, RelStructure>;

std::string read_all(const std::string& path)
{
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open input '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// First non-comment token decides between the graph and structure formats.
bool looks_like_structure(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream words(line);
        std::string first;
        if (!(words >> first) || first[0] == '#')
            continue;
        return first == "structure";
    }
    return false;
}

std::vector<std::pair<std::string, Input>> load(const std::string& source)
{
    std::vector<std::pair<std::string, Input>> out;
    if (source.rfind("gen:", 0) == 0) {
        for (auto& [name, g] : generate_inline(source.substr(4)))
            out.emplace_back(name, std::move(g));
        return out;
    }
    const auto text = read_all(source);
    try {
        if (looks_like_structure(text))
            out.emplace_back(source, parse_structure(text));
        else
            out.emplace_back(source, parse_graph(text));
    } catch (const ParseError& e) {
        throw UsageError(source + ":" + std::to_string(e.line()) + ": " + e.what());
    }
    return out;
}

Graph load_graph(const std::string& source)
{
    auto items = load(source);
    if (items.size() != 1)
        throw UsageError("'" + source + "' must name exactly one graph");
    if (!std::holds_alternative<Graph>(items[0].second))
        throw UsageError("'" + source + "' is a structure, a graph is required here");
    return std::get<Graph>(std::move(items[0].second));
}

RelStructure load_structure(const std::string& source)
{
    auto items = load(source);
    if (items.size() != 1 || !std::holds_alternative<RelStructure>(items[0].second))
        throw UsageError("'" + source + "' must name one structure file");
    return std::get<RelStructure>(std::move(items[0].second));
}

struct Output {
    std::ostringstream text;

    void flush(const std::string& path) const
    {
        if (path.empty()) {
            std::cout << text.str();
            return;
        }
        std::ofstream out(path);
        if (!out)
            throw UsageError("cannot write '" + path + "'");
        out << text.str();
    }
};

// ---------------------------------------------------------------------------
// Commands

struct Options {
    std::size_t r = 1;
    std::size_t m = 3;
    std::size_t cap = 5;
    std::uint64_t budget = default_budget;
    std::string mode;
    std::string format = "text";
    std::string out;
};

int run_gen(const std::string& kind, const std::vector<std::string>& params, const Options& o)
{
    std::vector<std::size_t> p;
    for (const auto& s : params)
        p.push_back(parse_number(s, "gen parameter"));
    Output out;
    write_graph(out.text, generate(kind, p));
    out.flush(o.out);
    return exit_ok;
}

int run_analyze(const std::vector<std::string>& inputs, const Options& o)
{
    std::vector<Graph> family;
    std::vector<std::string> names;
    for (const auto& src : inputs)
        for (auto& [name, item] : load(src)) {
            if (!std::holds_alternative<Graph>(item))
                throw UsageError("'" + name + "' is a structure; analyze takes graphs");
            names.push_back(name);
            family.push_back(std::get<Graph>(std::move(item)));
        }
    if (o.cap < 2)
        throw UsageError("--cap must be at least 2");
    ReportOptions ro;
    ro.r_max = o.r;
    ro.m_cap = o.cap;
    ro.budget = {o.budget};
    ro.tsv = o.format == "tsv";
    const auto rep = analyze_family(family, names, ro);
    Output out;
    write_report(out.text, rep);
    out.flush(o.out);

    if (rep.nowhere_dense.verdict == Verdict::no)
        return exit_negative;
    bool budget_hit = false;
    for (const auto& row : rep.superflat)
        budget_hit = budget_hit || row.outcome == Outcome::budget_exceeded;
    for (const auto& p : rep.minor_profiles)
        budget_hit = budget_hit || p.inconclusive;
    for (const auto& p : rep.topological_profiles)
        budget_hit = budget_hit || p.inconclusive;
    budget_hit = budget_hit || rep.ultraflat.verdict == Verdict::inconclusive;
    return budget_hit ? exit_budget : exit_ok;
}

int run_detect(const std::string& what, const std::string& input, const std::string& pattern_src, const Options& o)
{
    const auto g = load_graph(input);
    SearchResult res;
    std::optional<Graph> pattern;
    const SearchBudget budget{o.budget};
    if (what == "subdivided-clique")
        res = contains_subdivided_clique(g, o.m, o.r, budget);
    else if (what == "clique-minor")
        res = o.mode == "topological" ? top_clique_minor(g, o.m, o.r, budget) : clique_minor(g, o.m, o.r, budget);
    else if (what == "topological-minor") {
        if (pattern_src.empty())
            throw UsageError("detect topological-minor needs --pattern");
        pattern = load_graph(pattern_src);
        res = is_topological_minor(g, *pattern, budget);
    } else
        throw UsageError("unknown detect target '" + what
                         + "' (subdivided-clique, clique-minor, topological-minor)");

    Output out;
    out.text << "target = " << what << '\n';
    if (what != "topological-minor") {
        out.text << "m = " << o.m << '\n';
        out.text << "r = " << o.r << '\n';
    }
    if (what == "clique-minor")
        out.text << "mode = " << (o.mode == "topological" ? "topological" : "minor") << '\n';
    out.text << "budget = " << o.budget << '\n';
    out.text << "result = " << to_string(res.outcome) << '\n';
    if (res.model) {
        const auto check = verify_minor_model(g, *res.model, pattern ? &*pattern : nullptr);
        out.text << "certificate_check = " << (check.ok ? "ok" : "failed " + check.clause) << '\n';
        out.text << '\n';
        write_certificate(out.text, *res.model);
    }
    out.flush(o.out);
    switch (res.outcome) {
    case Outcome::found: return exit_ok;
    case Outcome::exhausted: return exit_negative;
    case Outcome::budget_exceeded: return exit_budget;
    }
    return exit_ok;
}

int run_encode(const std::string& input, const Options& o)
{
    const auto m = load_structure(input);
    Output out;
    write_graph(out.text, encode_digraph(m).graph);
    out.flush(o.out);
    return exit_ok;
}

std::string join(const std::vector<Vertex>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

template <typename S>
int run_mt_on(const std::string& task, const S& structure, const std::vector<std::string>& texts, const Options& o,
              Output& out)
{
    std::vector<Formula> fs;
    for (const auto& t : texts) {
        try {
            fs.push_back(parse_formula(t));
        } catch (const FormulaParseError& e) {
            throw UsageError("--formula '" + t + "' column " + std::to_string(e.column()) + ": " + e.what());
        }
    }
    const SearchBudget budget{o.budget};
    const auto single = [&] {
        if (fs.size() != 1)
            throw UsageError("mt " + task + " takes exactly one --formula");
        return fs[0];
    };
    try {
        if (task == "ladder") {
            const auto mode = o.mode == "reflexive" ? LadderMode::reflexive : LadderMode::strict;
            const auto res = ladder_index(relation_table(structure, single(), o.budget), o.cap, mode, budget);
            out.text << "mode = " << (mode == LadderMode::strict ? "strict" : "reflexive") << '\n';
            out.text << "index = " << res.value << '\n';
            out.text << "status = "
                     << (res.outcome == Outcome::budget_exceeded ? "budget-exceeded (lower bound)"
                                                                 : res.at_cap ? "at-cap" : "exact")
                     << '\n';
            out.text << "witness_a = " << join(res.witness.a) << '\n';
            out.text << "witness_b = " << join(res.witness.b) << '\n';
            return res.outcome == Outcome::budget_exceeded ? exit_budget : exit_ok;
        }
        if (task == "independence" || task == "opposite") {
            const auto t = relation_table(structure, single(), o.budget);
            const auto show = [&](const std::string& prefix, const IndependenceResult& res) {
                out.text << prefix << "index = " << res.value << '\n';
                out.text << prefix << "status = "
                         << (res.outcome == Outcome::budget_exceeded ? "budget-exceeded (lower bound)"
                                                                     : res.at_cap ? "at-cap" : "exact")
                         << '\n';
                out.text << prefix << "witness_a = " << join(res.witness.a) << '\n';
                out.text << prefix << "witness_b = " << join(res.witness.b) << '\n';
            };
            const auto fwd = independence_index(t, o.cap, budget);
            show(task == "opposite" ? "forward_" : "", fwd);
            bool over = fwd.outcome == Outcome::budget_exceeded;
            if (task == "opposite") {
                const auto opp = independence_index(t.transposed(), o.cap, budget);
                show("opposite_", opp);
                over = over || opp.outcome == Outcome::budget_exceeded;
            }
            return over ? exit_budget : exit_ok;
        }
        if (task == "sd") {
            std::vector<BinaryRelation> tables;
            if (fs.size() > max_sd_array_size)
                throw UsageError("mt sd takes at most " + std::to_string(max_sd_array_size) + " formulas");
            for (const auto& f : fs)
                tables.push_back(relation_table(structure, f, o.budget));
            const auto res = sd_array_search(tables, budget);
            out.text << "m = " << fs.size() << '\n';
            out.text << "result = " << to_string(res.outcome) << '\n';
            if (res.witness) {
                for (std::size_t i = 0; i < res.witness->b.size(); ++i)
                    out.text << "row_" << i << " = " << join(res.witness->b[i]) << '\n';
                out.text << "a = " << join(res.witness->a) << '\n';
            }
            if (res.outcome == Outcome::budget_exceeded)
                return exit_budget;
            return res.found() ? exit_ok : exit_negative;
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown mt task '" + task + "' (ladder, independence, opposite, sd)");
}

int run_mt(const std::string& task, const std::string& input, const std::vector<std::string>& formulas, const Options& o)
{
    auto items = load(input);
    if (items.size() != 1)
        throw UsageError("'" + input + "' must name exactly one graph or structure");
    Output out;
    out.text << "task = " << task << '\n';
    for (const auto& f : formulas)
        out.text << "formula = " << f << '\n';
    out.text << "cap = " << o.cap << '\n';
    out.text << "budget = " << o.budget << '\n';
    int code = 0;
    try {
        code = std::visit([&](const auto& s) { return run_mt_on(task, s, formulas, o, out); }, items[0].second);
    } catch (const BudgetExceeded& e) {
        out.text << "status = budget-exceeded (" << e.what() << ")\n";
        code = exit_budget;
    }
    out.flush(o.out);
    return code;
}

int run_verify(const std::string& input, const std::string& certificate, const std::string& pattern_src,
               const std::string& structure_src, const Options& o)
{
    Output out;
    int code = exit_ok;
    if (!structure_src.empty()) {
        const auto m = load_structure(structure_src);
        const auto target = input.empty() ? encode_digraph(m).graph : load_graph(input);
        const auto interp = encoding_interpretation(m.signature());
        InterpretationReport rep;
        try {
            rep = verify_interpretation(interp, m, target, o.budget);
        } catch (const std::invalid_argument& e) {
            out.text << "interpretation = violated\n";
            out.text << "reason = " << e.what() << '\n';
            out.flush(o.out);
            return exit_negative;
        }
        out.text << "interpretation = " << (rep.ok() ? "ok" : "violated") << '\n';
        out.text << "checks = " << rep.checks << '\n';
        out.text << "violations = " << rep.violations.size() << '\n';
        for (const auto& v : rep.violations)
            out.text << "violation = " << v << '\n';
        code = rep.ok() ? exit_ok : exit_negative;
    } else {
        if (input.empty() || certificate.empty())
            throw UsageError("verify needs a host graph and --certificate (or --structure)");
        const auto g = load_graph(input);
        std::optional<Graph> pattern;
        if (!pattern_src.empty())
            pattern = load_graph(pattern_src);
        MinorModel model;
        try {
            model = parse_certificate(read_all(certificate));
        } catch (const ParseError& e) {
            throw UsageError(certificate + ":" + std::to_string(e.line()) + ": " + e.what());
        }
        ModelCheck check;
        try {
            check = verify_minor_model(g, model, pattern ? &*pattern : nullptr);
        } catch (const std::out_of_range& e) {
            check = {false, "vertex-range", e.what()};
        }
        out.text << "certificate = " << (check.ok ? "ok" : "violated") << '\n';
        if (!check.ok) {
            out.text << "clause = " << check.clause << '\n';
            out.text << "detail = " << check.detail << '\n';
        }
        code = check.ok ? exit_ok : exit_negative;
    }
    out.flush(o.out);
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"flatkit: sparsity and first-order witness toolkit"};
    app.require_subcommand(1);
    Options o;
    const auto common = [&](CLI::App* sub, bool search) {
        sub->add_option("--out", o.out, "write the result to PATH instead of stdout");
        if (search)
            sub->add_option("--budget", o.budget, "node budget per search")->check(CLI::PositiveNumber);
    };

    std::string gen_kind;
    std::vector<std::string> gen_params;
    auto* gen = app.add_subcommand("gen", "emit a generated graph");
    gen->add_option("kind", gen_kind,
                    "clique, path, cycle, grid, star, prism, edgeless, circulant, petersen, subdivided-clique, "
                    "half-graph, independence-witness, augment-path")
        ->required();
    gen->add_option("params", gen_params, "numeric parameters");
    common(gen, false);

    std::vector<std::string> analyze_inputs;
    auto* analyze = app.add_subcommand("analyze", "family report: density fit, profiles, sample verdicts");
    analyze->add_option("inputs", analyze_inputs, "graph files, '-' or gen:kind:params (one range lo..hi allowed)")
        ->required();
    analyze->add_option("--r", o.r, "largest depth examined");
    analyze->add_option("--cap", o.cap, "clique size cap");
    analyze->add_option("--format", o.format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));
    common(analyze, true);

    std::string detect_what, detect_input, detect_pattern;
    auto* detect = app.add_subcommand("detect", "search for a minor and print its certificate");
    detect->add_option("target", detect_what, "subdivided-clique, clique-minor or topological-minor")->required();
    detect->add_option("input", detect_input, "host graph (file, '-' or gen:kind:params)")->default_val("-");
    detect->add_option("--m", o.m, "clique size");
    detect->add_option("--r", o.r, "depth");
    detect->add_option("--mode", o.mode, "minor or topological")->check(CLI::IsMember({"minor", "topological"}));
    detect->add_option("--pattern", detect_pattern, "pattern graph for topological-minor");
    common(detect, true);

    std::string encode_input;
    auto* encode = app.add_subcommand("encode", "encode a coloured digraph structure as a graph");
    encode->add_option("input", encode_input, "structure file or '-'")->default_val("-");
    common(encode, false);

    std::string mt_task, mt_input;
    std::vector<std::string> mt_formulas;
    auto* mt = app.add_subcommand("mt", "first-order witness searches");
    mt->add_option("task", mt_task, "ladder, independence, opposite or sd")->required();
    mt->add_option("input", mt_input, "graph or structure (file, '-' or gen:kind:params)")->default_val("-");
    mt->add_option("--formula", mt_formulas, "formula phi(x,y); repeat for sd")->required()->allow_extra_args(false);
    mt->add_option("--cap", o.cap, "largest index searched");
    mt->add_option("--mode", o.mode, "strict or reflexive")->check(CLI::IsMember({"strict", "reflexive"}));
    common(mt, true);

    std::string verify_input, verify_cert, verify_pattern, verify_structure;
    auto* verify = app.add_subcommand("verify", "re-check a certificate or the encoding interpretation");
    verify->add_option("input", verify_input, "host graph");
    verify->add_option("--certificate", verify_cert, "certificate file");
    verify->add_option("--pattern", verify_pattern, "pattern graph for topological certificates");
    verify->add_option("--structure", verify_structure, "structure whose encoding is checked");
    common(verify, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen)
            return run_gen(gen_kind, gen_params, o);
        if (*analyze)
            return run_analyze(analyze_inputs, o);
        if (*detect)
            return run_detect(detect_what, detect_input, detect_pattern, o);
        if (*encode)
            return run_encode(encode_input, o);
        if (*mt)
            return run_mt(mt_task, mt_input, mt_formulas, o);
        if (*verify)
            return run_verify(verify_input, verify_cert, verify_pattern, verify_structure, o);
    } catch (const UsageError& e) {
        std::cerr << "flatkit: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "flatkit: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
