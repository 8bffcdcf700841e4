#include "flatkit/flatkit.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace flatkit;

namespace {

/// Ordinary least squares of log(edges) on log(vertices), computed from the
/// closed-form edge counts rather than from built graphs.
double closed_form_slope(std::size_t lo, std::size_t hi, std::size_t (*edges)(std::size_t))
{
    double sx = 0, sy = 0, sxx = 0, sxy = 0, k = 0;
    for (auto n = lo; n <= hi; ++n) {
        const double x = std::log(double(n)), y = std::log(double(edges(n)));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++k;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::size_t clique_edges(std::size_t n) { return n * (n - 1) / 2; }
std::size_t path_edges(std::size_t n) { return n - 1; }

} // namespace

TEST(DensityFit, OracleSlopes)
{
    // Reference values from the closed forms, frozen: 2.0619 and 1.0217.
    EXPECT_NEAR(closed_form_slope(10, 30, clique_edges), 2.0619, 1e-4);
    EXPECT_NEAR(closed_form_slope(10, 200, path_edges), 1.0217, 1e-4);
}

TEST(DensityFit, Cliques)
{
    const auto fit = density_exponent_fit(standard_family(FamilyKind::clique, 10, 30));
    ASSERT_TRUE(fit.slope);
    EXPECT_NEAR(*fit.slope, closed_form_slope(10, 30, clique_edges), 1e-9);
    EXPECT_EQ(fit.trichotomy_class, 2);
    EXPECT_EQ(fit.fitted_members, 21u);
}

TEST(DensityFit, Paths)
{
    const auto fit = density_exponent_fit(standard_family(FamilyKind::path, 10, 200));
    ASSERT_TRUE(fit.slope);
    EXPECT_NEAR(*fit.slope, closed_form_slope(10, 200, path_edges), 1e-9);
    EXPECT_EQ(fit.trichotomy_class, 1);
}

TEST(DensityFit, Edgeless)
{
    const auto fit = density_exponent_fit(standard_family(FamilyKind::edgeless, 10, 100));
    EXPECT_EQ(fit.trichotomy_class, 0);
    EXPECT_FALSE(fit.slope);
}

TEST(DensityFit, StarsAreConstantDegree)
{
    // Stars have n - 1 edges: linear, class 1 despite an unbounded degree.
    EXPECT_EQ(density_exponent_fit(standard_family(FamilyKind::star, 5, 50)).trichotomy_class, 1);
}

TEST(DensityFit, ErrorsAndOptions)
{
    EXPECT_THROW(density_exponent_fit(standard_family(FamilyKind::clique, 3, 4)), std::invalid_argument);
    const std::vector<Graph> same{clique(4), path_graph(4), cycle_graph(4)};
    EXPECT_THROW(density_exponent_fit(same), std::invalid_argument);
    const auto strict = density_exponent_fit(standard_family(FamilyKind::path, 10, 200), FitOptions{1.0});
    EXPECT_EQ(strict.trichotomy_class, 2);
}

TEST(DensityFit, OrderAndUnionInvariant)
{
    auto family = standard_family(FamilyKind::grid, 2, 8);
    const auto forward = density_exponent_fit(family);
    std::reverse(family.begin(), family.end());
    const auto backward = density_exponent_fit(family);
    ASSERT_TRUE(forward.slope && backward.slope);
    EXPECT_NEAR(*forward.slope, *backward.slope, 1e-12);

    // Stats of a disjoint union add up member by member.
    const auto u = disjoint_union(family);
    std::size_t v = 0, e = 0;
    for (const auto& g : family) {
        v += g.vertex_count();
        e += g.edge_count();
    }
    EXPECT_EQ(compute_stats(u.graph).vertices, v);
    EXPECT_EQ(compute_stats(u.graph).edges, e);

    // Doubling every member shifts each point by (log 2, log 2), which leaves
    // the slope unchanged.
    std::vector<Graph> doubled;
    for (const auto& g : family) {
        const Graph pair[] = {g, g};
        doubled.push_back(disjoint_union(pair).graph);
    }
    const auto fit2 = density_exponent_fit(doubled);
    ASSERT_TRUE(fit2.slope);
    EXPECT_NEAR(*fit2.slope, *forward.slope, 1e-9);
}

TEST(Superflat, Examples)
{
    std::vector<Graph> cliques;
    for (std::size_t n = 1; n <= 10; ++n)
        cliques.push_back(clique(n));
    const auto rows = superflat_profile(cliques, 0, 10);
    EXPECT_EQ(describe(rows[0]), ">cap");

    const auto paths = standard_family(FamilyKind::path, 2, 12);
    for (const auto& row : superflat_profile(paths, 3, 6))
        EXPECT_EQ(row.absent_m, std::optional<std::size_t>{3}) << row.r;

    const std::vector<Graph> c6{cycle_graph(6)};
    const auto c6_rows = superflat_profile(c6, 1, 6);
    EXPECT_EQ(c6_rows[1].absent_m, std::optional<std::size_t>{4});
    ASSERT_TRUE(c6_rows[1].largest);
    EXPECT_TRUE(verify_minor_model(c6[0], c6_rows[1].largest->model, nullptr, 2).ok);
    EXPECT_THROW(superflat_profile(c6, 1, 1), std::invalid_argument);
}

TEST(Superflat, BudgetIsInconclusive)
{
    const std::vector<Graph> fam{subdivided_clique(6, 1)};
    const auto rows = superflat_profile(fam, 1, 7, SearchBudget{3});
    EXPECT_EQ(describe(rows[1]), "inconclusive");
    EXPECT_EQ(superflat_flag(rows), Verdict::inconclusive);
}

TEST(NowhereDense, Examples)
{
    std::vector<Graph> cliques;
    for (std::size_t n = 1; n <= 12; ++n)
        cliques.push_back(clique(n));
    const auto k = nowhere_dense_verdict(cliques, 0, 12);
    EXPECT_EQ(k.verdict, Verdict::no);
    EXPECT_EQ(k.witness_r, std::optional<std::size_t>{0});
    ASSERT_TRUE(k.topological[0].witness);
    EXPECT_EQ(k.topological[0].witness->model.branch_vertices.size(), 12u);

    const auto paths = standard_family(FamilyKind::path, 2, 12);
    EXPECT_EQ(nowhere_dense_verdict(paths, 2, 5).verdict, Verdict::yes);

    std::vector<Graph> sub;
    for (std::size_t m = 1; m <= 8; ++m)
        sub.push_back(subdivided_clique(m, 2));
    const auto s = nowhere_dense_verdict(sub, 1, 8);
    EXPECT_EQ(s.verdict, Verdict::no);
    EXPECT_EQ(s.witness_r, std::optional<std::size_t>{1});
    const auto& w = *s.topological[1].witness;
    EXPECT_TRUE(verify_minor_model(sub[w.member], w.model).ok);
}

TEST(Ultraflat, Examples)
{
    const std::vector<Graph> trees{path_graph(6), star_graph(5), grid_graph(1, 7)};
    const auto t = ultraflat_verdict(trees, 5);
    EXPECT_EQ(t.verdict, Verdict::yes);
    EXPECT_EQ(t.absent_m, std::optional<std::size_t>{3});

    const std::vector<Graph> pk{prism_graph(3), clique(4)};
    const auto p = ultraflat_verdict(pk, 6);
    EXPECT_EQ(p.absent_m, std::optional<std::size_t>{5});

    std::vector<Graph> cliques;
    for (std::size_t n = 1; n <= 10; ++n)
        cliques.push_back(clique(n));
    const auto c = ultraflat_verdict(cliques, 10);
    EXPECT_EQ(c.verdict, Verdict::no);
    EXPECT_FALSE(c.absent_m);
}

TEST(Verdicts, CubicGraphsOmitTheFourStar)
{
    const std::size_t mk[] = {1, 4};
    const std::vector<Graph> cubic{prism_graph(3), prism_graph(5), generalized_petersen(8, 3), circulant_graph(8, mk)};
    EXPECT_EQ(excluded_topological_minor(cubic, star_graph(4)).verdict, Verdict::yes);
    bool some = false;
    for (const auto& g : cubic)
        for (std::size_t r = 0; r <= 2 && !some; ++r)
            some = clique_minor(g, 4, r).found();
    EXPECT_TRUE(some);
}

TEST(Verdicts, ImplicationsOnSparseFamilies)
{
    const std::vector<std::vector<Graph>> families{
        standard_family(FamilyKind::path, 2, 8), standard_family(FamilyKind::cycle, 3, 8),
        standard_family(FamilyKind::star, 1, 6), standard_family(FamilyKind::grid, 2, 3)};
    for (const auto& fam : families) {
        ReportOptions o;
        o.r_max = 1;
        o.m_cap = 5;
        const auto rep = analyze_family(fam, {}, o);
        if (rep.ultraflat.verdict == Verdict::yes)
            EXPECT_EQ(rep.superflat_verdict, Verdict::yes);
        if (rep.superflat_verdict == Verdict::yes)
            EXPECT_NE(rep.nowhere_dense.verdict, Verdict::no);
    }
}

TEST(Report, DeterministicAndSelfDescribing)
{
    const auto fam = standard_family(FamilyKind::cycle, 3, 7);
    ReportOptions o;
    o.r_max = 1;
    o.m_cap = 4;
    o.tsv = true;
    std::ostringstream a, b;
    write_report(a, analyze_family(fam, {}, o));
    write_report(b, analyze_family(fam, {}, o));
    EXPECT_EQ(a.str(), b.str());
    const auto text = a.str();
    EXPECT_NE(text.find("m_cap = 4"), std::string::npos);
    EXPECT_NE(text.find("budget = 10000000 nodes per search"), std::string::npos);
    EXPECT_NE(text.find("tsv:\nmember\tr\t"), std::string::npos);
    EXPECT_NE(text.find("model topological"), std::string::npos);
    EXPECT_NE(text.find("class = 1"), std::string::npos);
}
