#include "flatkit/flatkit.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

using namespace flatkit;

namespace {

RelStructure two_element_example()
{
    Signature sig{{"R1", 2}, {"P1", 1}, {"P2", 1}, {"A1", 0}};
    RelStructure m(sig, 2);
    m.add_fact("R1", {0, 1});
    m.add_fact("P2", {1});
    m.add_fact("A1", {});
    return m;
}

} // namespace

TEST(Recognisers, DegreeAndPendants)
{
    formulas::VarPool pool;
    const auto star = star_graph(3);
    EXPECT_EQ(satisfying_vertices(star, formulas::degree_exactly(3, "x", pool)), (std::vector<Vertex>{0}));
    EXPECT_EQ(satisfying_vertices(star, formulas::degree_exactly(1, "x", pool)), (std::vector<Vertex>{1, 2, 3}));
    EXPECT_EQ(satisfying_vertices(star, formulas::degree_at_least(2, "x", pool)), (std::vector<Vertex>{0}));

    // The path 4 - 0 - 1 - 2 - 3.
    const Edge e[] = {{0, 1}, {1, 2}, {2, 3}, {0, 4}};
    const Graph g(5, e);
    EXPECT_EQ(satisfying_vertices(g, formulas::pendant(1, "x", pool)), (std::vector<Vertex>{0, 2}));
    EXPECT_EQ(satisfying_vertices(g, formulas::pendant(2, "x", pool)), (std::vector<Vertex>{1}));
    EXPECT_EQ(satisfying_vertices(g, formulas::pendant(3, "x", pool)), (std::vector<Vertex>{0, 2}));
    EXPECT_EQ(satisfying_vertices(g, formulas::pendant(4, "x", pool)), (std::vector<Vertex>{3, 4}));
    EXPECT_TRUE(satisfying_vertices(g, formulas::pendant(5, "x", pool)).empty());
}

TEST(Recognisers, CliquesAndCycles)
{
    formulas::VarPool pool;
    EXPECT_EQ(satisfying_vertices(clique(4), formulas::in_four_clique("x", pool)).size(), 4u);
    EXPECT_TRUE(satisfying_vertices(cycle_graph(4), formulas::in_four_clique("x", pool)).size() == 0);
    EXPECT_EQ(satisfying_vertices(cycle_graph(4), formulas::on_chordless_four_cycle("x", pool)).size(), 4u);
    EXPECT_TRUE(satisfying_vertices(clique(4), formulas::on_chordless_four_cycle("x", pool)).empty());
    EXPECT_EQ(satisfying_vertices(grid_graph(2, 3), formulas::on_chordless_four_cycle("x", pool)).size(), 6u);
    EXPECT_TRUE(satisfying_vertices(cycle_graph(5), formulas::on_triangle("x", pool)).empty());
}

TEST(Interpretation, DomainFormulaSelectsElementImages)
{
    Signature sig{{"R1", 2}};
    RelStructure m(sig, 2);
    m.add_fact("R1", {0, 1});
    const auto e = encode_digraph(m);
    const auto interp = encoding_interpretation(sig);
    EXPECT_EQ(satisfying_vertices(e.graph, interp.domain), e.element_image);
}

TEST(Interpretation, BinaryTranslationCarriesDirection)
{
    Signature sig{{"R1", 2}};
    RelStructure m(sig, 2);
    m.add_fact("R1", {0, 1});
    const auto e = encode_digraph(m);
    const auto interp = encoding_interpretation(sig);
    const auto& r1 = interp.atoms.at("R1");
    EXPECT_TRUE(eval(e.graph, r1, {{"x", e.element_image[0]}, {"y", e.element_image[1]}}));
    EXPECT_FALSE(eval(e.graph, r1, {{"x", e.element_image[1]}, {"y", e.element_image[0]}}));
}

TEST(Interpretation, UnaryTranslationFalseWithoutFacts)
{
    Signature sig{{"R1", 2}, {"P1", 1}, {"P2", 1}};
    RelStructure m(sig, 3);
    m.add_fact("R1", {0, 2});
    m.add_fact("R1", {1, 1});
    const auto e = encode_digraph(m);
    const auto interp = encoding_interpretation(sig);
    for (const auto& name : {"P1", "P2"})
        for (auto v : e.element_image)
            EXPECT_FALSE(eval(e.graph, interp.atoms.at(name), {{"x", v}})) << name;
}

TEST(Interpretation, Examples)
{
    Signature sig{{"R1", 2}, {"P1", 1}, {"A1", 0}};
    const RelStructure single(sig, 1);
    const auto rep1 = verify_interpretation(encoding_interpretation(sig), single, encode_digraph(single).graph);
    EXPECT_TRUE(rep1.ok());

    const auto m = two_element_example();
    const auto interp = encoding_interpretation(m.signature());
    const auto rep2 = verify_interpretation(interp, m, encode_digraph(m).graph);
    EXPECT_TRUE(rep2.ok());
    // equality 4 + R1 4 + P1 2 + P2 2 + A1 1
    EXPECT_EQ(rep2.checks, 13u);
}

TEST(Interpretation, PerturbedTargetIsCaught)
{
    const auto m = two_element_example();
    const auto interp = encoding_interpretation(m.signature());
    const auto e = encode_digraph(m);
    const auto& g = e.graph;
    // Attach the P2 pendant's end to the loop-free pair gadget: the pendant
    // path loses its degree-1 end.
    const auto end = g.find_label("unary:P2:1:2");
    const auto c = g.find_label("c:0,1");
    ASSERT_TRUE(end && c);
    const Edge extra[] = {{*end, *c}};
    const auto bad = verify_interpretation(interp, m, with_extra_edges(g, extra));
    EXPECT_FALSE(bad.ok());

    // An extra edge between two element images adds a domain-shaped error
    // elsewhere: every mutation inside a gadget is flagged or rejected.
    std::size_t flagged = 0, total = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            if (g.adjacent(u, v))
                continue;
            ++total;
            const Edge one[] = {{u, v}};
            try {
                flagged += !verify_interpretation(interp, m, with_extra_edges(g, one)).ok();
            } catch (const std::invalid_argument&) {
                ++flagged;
            }
        }
    EXPECT_GT(flagged, 0u);
    EXPECT_LE(flagged, total);
}

TEST(Interpretation, DomainSizeMismatchThrows)
{
    const auto m = two_element_example();
    const auto interp = encoding_interpretation(m.signature());
    EXPECT_THROW(verify_interpretation(interp, m, clique(5)), std::invalid_argument);
}

TEST(Interpretation, RandomStructures)
{
    std::mt19937_64 rng(99);
    const auto sig = fixtures::digraph_signature();
    const auto interp = encoding_interpretation(sig);
    for (int trial = 0; trial < 10; ++trial) {
        const auto m = fixtures::random_structure(rng, sig, 4);
        const auto rep = verify_interpretation(interp, m, encode_digraph(m).graph);
        EXPECT_TRUE(rep.ok()) << to_text(m) << (rep.violations.empty() ? "" : rep.violations.front());
    }
}

TEST(Augmentation, RecognisersFindApexAndOriginals)
{
    std::mt19937_64 rng(41);
    const auto rec = augmentation_recognizers();
    for (int trial = 0; trial < 15; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 10);
        const auto a = fixtures::random_graph(rng, size(rng), 0.4);
        const auto aug = augment_diameter4(a);
        EXPECT_EQ(satisfying_vertices(aug.graph, rec.apex), (std::vector<Vertex>{aug.t}));
        std::vector<Vertex> originals(a.vertex_count());
        std::iota(originals.begin(), originals.end(), Vertex{0});
        EXPECT_EQ(satisfying_vertices(aug.graph, rec.original), originals);
    }
}
