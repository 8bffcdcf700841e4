#pragma once

// Family-level estimates over finite samples: an edge-density exponent fit,
// the superflat profile, and tri-state sample verdicts for nowhere density
// and ultraflatness. "yes" verdicts only ever describe the given sample.

#include "flatkit/generators.hpp"
#include "flatkit/minors.hpp"

#include <cmath>
#include <iomanip>

namespace flatkit {

enum class Verdict { yes, no, inconclusive };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::yes: return "yes (sample)";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Density exponent

struct FitOptions {
    double class_boundary = 1.5;
};

struct DensityFit {
    std::optional<double> slope; ///< absent when every member has the same edge count
    int trichotomy_class = 0;    ///< 0 bounded, 1 near-linear, 2 superlinear
    std::size_t fitted_members = 0;
    double class_boundary = 1.5;
};

/// Least-squares slope of log ||H|| against log |H| over members with
/// |H| >= 2 and ||H|| >= 1. Class 0 iff all members have the same edge count,
/// otherwise class 1 below the boundary and class 2 at or above it. Member
/// order does not matter.
inline DensityFit density_exponent_fit(std::span<const Graph> family, FitOptions options = {})
{
    std::vector<std::pair<double, double>> sizes;
    for (const auto& g : family)
        if (g.vertex_count() >= 2)
            sizes.emplace_back(double(g.vertex_count()), double(g.edge_count()));
    if (sizes.size() < 3)
        throw std::invalid_argument("density fit needs at least 3 members with 2 or more vertices");
    std::sort(sizes.begin(), sizes.end());
    if (sizes.front().first == sizes.back().first)
        throw std::invalid_argument("density fit is degenerate: all members have the same order");

    DensityFit out;
    out.class_boundary = options.class_boundary;
    const bool constant = std::all_of(sizes.begin(), sizes.end(), [&](const auto& s) { return s.second == sizes.front().second; });

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::set<double> orders;
    for (const auto& [n, e] : sizes) {
        if (e < 1)
            continue;
        const double x = std::log(n), y = std::log(e);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        orders.insert(n);
        ++out.fitted_members;
    }
    if (orders.size() >= 2) {
        const double k = double(out.fitted_members);
        out.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    }
    if (constant)
        out.trichotomy_class = 0;
    else if (!out.slope)
        throw std::invalid_argument("density fit is degenerate: fewer than two orders carry edges");
    else
        out.trichotomy_class = *out.slope < options.class_boundary ? 1 : 2;
    return out;
}

// ---------------------------------------------------------------------------
// Superflat profile

struct MemberWitness {
    std::size_t member = 0;
    MinorModel model;
};

struct SuperflatRow {
    std::size_t r = 0;
    Outcome outcome = Outcome::exhausted; ///< found: absent_m is set; exhausted: every m <= cap occurs
    std::optional<std::size_t> absent_m;  ///< least m with K_m^r in no member
    std::optional<MemberWitness> largest; ///< a K_{m-1}^r (or K_cap^r) occurrence
};

inline std::string describe(const SuperflatRow& row)
{
    if (row.outcome == Outcome::budget_exceeded)
        return "inconclusive";
    return row.absent_m ? std::to_string(*row.absent_m) : std::string(">cap");
}

inline SuperflatRow superflat_row(std::span<const Graph> family, std::size_t r, std::size_t m_cap, SearchBudget budget)
{
    SuperflatRow row;
    row.r = r;
    for (std::size_t m = 1; m <= m_cap; ++m) {
        bool present = false, unknown = false;
        for (std::size_t i = 0; i < family.size() && !present; ++i) {
            const auto res = contains_subdivided_clique(family[i], m, r, budget);
            if (res.found()) {
                present = true;
                row.largest = MemberWitness{i, *res.model};
            } else if (res.outcome == Outcome::budget_exceeded) {
                unknown = true;
            }
        }
        if (present)
            continue;
        row.outcome = unknown ? Outcome::budget_exceeded : Outcome::found;
        if (!unknown)
            row.absent_m = m;
        return row;
    }
    row.outcome = Outcome::exhausted;
    return row;
}

/// For each r <= r_max, the least m <= m_cap such that no member contains
/// K_m^r as a subgraph.
inline std::vector<SuperflatRow> superflat_profile(std::span<const Graph> family, std::size_t r_max, std::size_t m_cap,
                                                   SearchBudget budget = {})
{
    if (m_cap < 2)
        throw std::invalid_argument("m_cap must be at least 2");
    std::vector<SuperflatRow> rows;
    for (std::size_t r = 0; r <= r_max; ++r)
        rows.push_back(superflat_row(family, r, m_cap, budget));
    return rows;
}

inline Verdict superflat_flag(std::span<const SuperflatRow> rows)
{
    bool unknown = false;
    for (const auto& row : rows) {
        if (row.outcome == Outcome::exhausted)
            return Verdict::no;
        unknown = unknown || row.outcome == Outcome::budget_exceeded;
    }
    return unknown ? Verdict::inconclusive : Verdict::yes;
}

// ---------------------------------------------------------------------------
// Clique profiles across a family

struct FamilyProfile {
    std::size_t r = 0;
    std::vector<CliqueProfile> members;
    std::size_t max_value = 0;
    bool at_cap = false;
    bool inconclusive = false;
    std::optional<MemberWitness> witness; ///< a member attaining max_value
};

inline FamilyProfile family_clique_profile(std::span<const Graph> family, std::size_t r, std::size_t cap,
                                           ProfileMode mode, SearchBudget budget = {})
{
    FamilyProfile out;
    out.r = r;
    for (std::size_t i = 0; i < family.size(); ++i) {
        auto p = clique_number_profile(family[i], r, cap, mode, budget);
        if (p.outcome == Outcome::budget_exceeded)
            out.inconclusive = true;
        if (p.witness && (!out.witness || p.value > out.max_value))
            out.witness = MemberWitness{i, *p.witness};
        out.max_value = std::max(out.max_value, p.value);
        out.at_cap = out.at_cap || p.at_cap;
        out.members.push_back(std::move(p));
    }
    return out;
}

inline std::string describe(const FamilyProfile& p)
{
    if (p.at_cap)
        return ">=" + std::to_string(p.max_value);
    if (p.inconclusive)
        return "inconclusive (>=" + std::to_string(p.max_value) + ")";
    return std::to_string(p.max_value);
}

// ---------------------------------------------------------------------------
// Sample verdicts

struct NowhereDenseVerdict {
    Verdict verdict = Verdict::inconclusive;
    std::vector<FamilyProfile> topological; ///< one per r <= r_max
    std::vector<SuperflatRow> superflat;
    std::optional<std::size_t> witness_r; ///< depth at which the cap was reached
};

/// "no" when some topological r-minor clique profile reaches m_cap; "yes"
/// when every profile stays below m_cap and the superflat profile has an
/// absent m at every r; "inconclusive" otherwise.
inline NowhereDenseVerdict nowhere_dense_verdict(std::span<const Graph> family, std::size_t r_max, std::size_t m_cap,
                                                 SearchBudget budget = {})
{
    if (m_cap < 2)
        throw std::invalid_argument("m_cap must be at least 2");
    NowhereDenseVerdict out;
    bool unknown = false;
    for (std::size_t r = 0; r <= r_max; ++r) {
        out.topological.push_back(family_clique_profile(family, r, m_cap, ProfileMode::topological, budget));
        const auto& p = out.topological.back();
        if (p.at_cap) {
            out.verdict = Verdict::no;
            out.witness_r = r;
            return out;
        }
        unknown = unknown || p.inconclusive;
    }
    out.superflat = superflat_profile(family, r_max, m_cap, budget);
    if (!unknown && superflat_flag(out.superflat) == Verdict::yes)
        out.verdict = Verdict::yes;
    return out;
}

struct ExclusionResult {
    Verdict verdict = Verdict::inconclusive; ///< yes: absent from every member
    std::optional<MemberWitness> occurrence; ///< set when verdict is no
};

/// Whether `pattern` is a topological minor of no member.
inline ExclusionResult excluded_topological_minor(std::span<const Graph> family, const Graph& pattern,
                                                  SearchBudget budget = {})
{
    ExclusionResult out;
    bool unknown = false;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto res = is_topological_minor(family[i], pattern, budget);
        if (res.found()) {
            out.verdict = Verdict::no;
            out.occurrence = MemberWitness{i, *res.model};
            return out;
        }
        unknown = unknown || res.outcome == Outcome::budget_exceeded;
    }
    out.verdict = unknown ? Verdict::inconclusive : Verdict::yes;
    return out;
}

struct UltraflatVerdict {
    Verdict verdict = Verdict::inconclusive;
    std::optional<std::size_t> absent_m;  ///< least m <= cap with K_m a topological minor of no member
    std::optional<MemberWitness> largest; ///< occurrence of K_{m-1} (or K_cap)
};

inline UltraflatVerdict ultraflat_verdict(std::span<const Graph> family, std::size_t m_cap, SearchBudget budget = {})
{
    if (m_cap < 2)
        throw std::invalid_argument("m_cap must be at least 2");
    UltraflatVerdict out;
    for (std::size_t m = 1; m <= m_cap; ++m) {
        const auto res = excluded_topological_minor(family, clique(m), budget);
        if (res.verdict == Verdict::no) {
            out.largest = res.occurrence;
            continue;
        }
        out.verdict = res.verdict;
        if (res.verdict == Verdict::yes)
            out.absent_m = m;
        return out;
    }
    out.verdict = Verdict::no;
    return out;
}

// ---------------------------------------------------------------------------
// Family report

struct ReportOptions {
    std::size_t r_max = 1;
    std::size_t m_cap = 5;
    SearchBudget budget{};
    FitOptions fit{};
    bool tsv = false;
};

struct FamilyReport {
    ReportOptions options;
    std::vector<std::string> names;
    std::vector<GraphStats> stats;
    std::optional<DensityFit> fit;
    std::string fit_error;
    std::vector<SuperflatRow> superflat;
    std::vector<FamilyProfile> minor_profiles;       ///< one per r
    std::vector<FamilyProfile> topological_profiles; ///< one per r
    Verdict superflat_verdict = Verdict::inconclusive;
    NowhereDenseVerdict nowhere_dense;
    UltraflatVerdict ultraflat;
};

inline FamilyReport analyze_family(std::span<const Graph> family, std::vector<std::string> names,
                                   const ReportOptions& options)
{
    FamilyReport rep;
    rep.options = options;
    rep.names = std::move(names);
    rep.names.resize(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (rep.names[i].empty())
            rep.names[i] = "member" + std::to_string(i);
        rep.stats.push_back(compute_stats(family[i]));
    }
    try {
        rep.fit = density_exponent_fit(family, options.fit);
    } catch (const std::invalid_argument& e) {
        rep.fit_error = e.what();
    }
    rep.superflat = superflat_profile(family, options.r_max, options.m_cap, options.budget);
    rep.superflat_verdict = superflat_flag(rep.superflat);
    for (std::size_t r = 0; r <= options.r_max; ++r) {
        rep.minor_profiles.push_back(family_clique_profile(family, r, options.m_cap, ProfileMode::minor, options.budget));
        rep.topological_profiles.push_back(
            family_clique_profile(family, r, options.m_cap, ProfileMode::topological, options.budget));
    }
    // Same rule as nowhere_dense_verdict, reusing the profiles computed above.
    auto& nd = rep.nowhere_dense;
    nd.superflat = rep.superflat;
    bool unknown = false;
    for (const auto& p : rep.topological_profiles) {
        nd.topological.push_back(p);
        if (p.at_cap && !nd.witness_r)
            nd.witness_r = p.r;
        unknown = unknown || p.inconclusive;
    }
    if (nd.witness_r)
        nd.verdict = Verdict::no;
    else if (!unknown && rep.superflat_verdict == Verdict::yes)
        nd.verdict = Verdict::yes;
    else
        nd.verdict = Verdict::inconclusive;
    rep.ultraflat = ultraflat_verdict(family, options.m_cap, options.budget);
    return rep;
}

inline std::string format_distance(const Distance& d) { return d ? std::to_string(*d) : std::string("inf"); }

inline void write_certificate_block(std::ostream& out, const std::string& title, const FamilyReport& rep,
                                    const MemberWitness& w)
{
    out << "\n[certificate " << title << " member=" << rep.names[w.member] << "]\n";
    write_certificate(out, w.model);
}

inline void write_report(std::ostream& out, const FamilyReport& rep)
{
    const auto& o = rep.options;
    out << "[parameters]\n";
    out << "members = " << rep.names.size() << '\n';
    out << "r_max = " << o.r_max << '\n';
    out << "m_cap = " << o.m_cap << '\n';
    out << "budget = " << o.budget.max_nodes << " nodes per search\n";
    out << "class_boundary = " << o.fit.class_boundary << '\n';

    for (std::size_t i = 0; i < rep.names.size(); ++i) {
        const auto& s = rep.stats[i];
        out << "\n[member " << rep.names[i] << "]\n";
        out << "vertices = " << s.vertices << '\n';
        out << "edges = " << s.edges << '\n';
        out << "max_degree = " << s.max_degree << '\n';
        out << "diameter = " << format_distance(s.diameter) << '\n';
    }

    for (std::size_t r = 0; r <= o.r_max; ++r) {
        out << "\n[depth " << r << "]\n";
        out << "absent_subdivided_clique = " << describe(rep.superflat[r]) << '\n';
        out << "clique_minor_max = " << describe(rep.minor_profiles[r]) << '\n';
        out << "top_clique_minor_max = " << describe(rep.topological_profiles[r]) << '\n';
    }

    out << "\n[fit]\n";
    if (rep.fit) {
        out << "slope = ";
        if (rep.fit->slope)
            out << std::fixed << std::setprecision(4) << *rep.fit->slope << std::defaultfloat;
        else
            out << "none";
        out << '\n';
        out << "fitted_members = " << rep.fit->fitted_members << '\n';
        out << "class = " << rep.fit->trichotomy_class << '\n';
    } else {
        out << "class = unavailable\n";
        out << "reason = " << rep.fit_error << '\n';
    }
    out << "note = finite-sample slope estimate, not a limit\n";

    out << "\n[verdicts]\n";
    out << "superflat = " << to_string(rep.superflat_verdict) << '\n';
    out << "nowhere_dense = " << to_string(rep.nowhere_dense.verdict) << '\n';
    if (rep.nowhere_dense.witness_r)
        out << "nowhere_dense_witness_r = " << *rep.nowhere_dense.witness_r << '\n';
    out << "ultraflat = " << to_string(rep.ultraflat.verdict) << '\n';
    out << "ultraflat_absent_m = "
        << (rep.ultraflat.absent_m ? std::to_string(*rep.ultraflat.absent_m)
                                   : std::string(rep.ultraflat.verdict == Verdict::no ? ">cap" : "inconclusive"))
        << '\n';

    if (o.tsv) {
        out << "\ntsv:\n";
        out << "member\tr\tvertices\tedges\tclique_minor\ttop_clique_minor\n";
        for (std::size_t i = 0; i < rep.names.size(); ++i)
            for (std::size_t r = 0; r <= o.r_max; ++r) {
                const auto cell = [](const CliqueProfile& p) {
                    if (p.outcome == Outcome::budget_exceeded)
                        return std::string("?");
                    return std::to_string(p.value) + (p.at_cap ? "+" : "");
                };
                out << rep.names[i] << '\t' << r << '\t' << rep.stats[i].vertices << '\t' << rep.stats[i].edges << '\t'
                    << cell(rep.minor_profiles[r].members[i]) << '\t' << cell(rep.topological_profiles[r].members[i])
                    << '\n';
            }
    }

    if (rep.nowhere_dense.witness_r) {
        const auto& p = rep.topological_profiles[*rep.nowhere_dense.witness_r];
        if (p.witness)
            write_certificate_block(out, "nowhere_dense r=" + std::to_string(p.r), rep, *p.witness);
    }
    for (const auto& row : rep.superflat)
        if (row.largest)
            write_certificate_block(out, "subdivided_clique r=" + std::to_string(row.r), rep, *row.largest);
    if (rep.ultraflat.largest)
        write_certificate_block(out, "topological_clique", rep, *rep.ultraflat.largest);
}

} // namespace flatkit
