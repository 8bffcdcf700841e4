#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run flatkit(const std::string& args)
{
    const std::string cmd = std::string(FLATKIT_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(FLATKIT_TEST_DATA) + "/" + name; }

} // namespace

TEST(Cli, GenSubdividedClique)
{
    const auto r = flatkit("gen subdivided-clique 3 1");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("graph 6 6\n", 0), 0u);
}

TEST(Cli, DetectOnCycle)
{
    const auto r = flatkit("detect subdivided-clique --m 3 --r 1 " + data("c6.graph"));
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("result = found"), std::string::npos);
    EXPECT_NE(r.out.find("certificate_check = ok"), std::string::npos);
    EXPECT_NE(r.out.find("model topological r=1\nbranch "), std::string::npos);

    const auto none = flatkit("detect subdivided-clique --m 4 --r 1 " + data("c6.graph"));
    EXPECT_EQ(none.status, 2);
    EXPECT_NE(none.out.find("result = exhausted"), std::string::npos);

    const auto tight = flatkit("detect subdivided-clique --m 6 --r 1 --budget 5 gen:subdivided-clique:6,1");
    EXPECT_EQ(tight.status, 3);
}

TEST(Cli, GenPipesIntoDetect)
{
    const auto r = flatkit("gen subdivided-clique 3 1 | " + std::string(FLATKIT_CLI) + " detect subdivided-clique --m 3 --r 1 -");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("result = found"), std::string::npos);
}

TEST(Cli, LadderOnHalfGraph)
{
    const auto r = flatkit("mt ladder --formula \"E(x,y)\" --cap 5 " + data("half3.graph"));
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("index = 3\n"), std::string::npos);
    EXPECT_NE(r.out.find("status = exact"), std::string::npos);
    const auto inline_spec = flatkit("mt ladder --formula \"E(x,y)\" --cap 5 gen:half-graph:3");
    EXPECT_NE(inline_spec.out.find("index = 3\n"), std::string::npos);
}

TEST(Cli, OtherWitnessTasks)
{
    const auto ind = flatkit("mt independence --formula \"path=1(x,y)\" --cap 4 gen:independence-witness:2,0");
    EXPECT_EQ(ind.status, 0);
    EXPECT_NE(ind.out.find("index = 2\n"), std::string::npos);
    const auto opp = flatkit("mt opposite --formula \"E(x,y)\" --cap 4 gen:edgeless:3");
    EXPECT_NE(opp.out.find("forward_index = 0\n"), std::string::npos);
    EXPECT_NE(opp.out.find("opposite_index = 0\n"), std::string::npos);
    const auto sd = flatkit("mt sd --formula \"x=y\" gen:path:3");
    EXPECT_EQ(sd.status, 0);
    EXPECT_NE(sd.out.find("result = found"), std::string::npos);
    const auto none = flatkit("mt sd --formula \"E(x,y)\" --formula \"E(x,y)\" gen:edgeless:4");
    EXPECT_EQ(none.status, 2);
}

TEST(Cli, EncodeAndVerify)
{
    const auto enc = flatkit("encode " + data("two.structure"));
    EXPECT_EQ(enc.status, 0);
    EXPECT_EQ(enc.out.rfind("graph ", 0), 0u);
    const auto ver = flatkit("verify --structure " + data("two.structure"));
    EXPECT_EQ(ver.status, 0);
    EXPECT_NE(ver.out.find("interpretation = ok"), std::string::npos);
    const auto bad = flatkit("verify --structure " + data("two.structure") + " " + data("c6.graph"));
    EXPECT_EQ(bad.status, 2);
}

TEST(Cli, VerifyCertificates)
{
    const std::string dir = std::string(FLATKIT_TEST_BINARY_DIR);
    ASSERT_EQ(flatkit("detect clique-minor --m 3 --r 1 gen:grid:3,3 --out " + dir + "/grid.report").status, 0);
    // Strip the key = value header, keeping the certificate.
    ASSERT_EQ(std::system(("sed -n '/^model/,$p' " + dir + "/grid.report > " + dir + "/grid.cert").c_str()), 0);
    EXPECT_EQ(flatkit("verify gen:grid:3,3 --certificate " + dir + "/grid.cert").status, 0);
    EXPECT_EQ(flatkit("verify gen:path:9 --certificate " + dir + "/grid.cert").status, 2);
}

TEST(Cli, AnalyzeReport)
{
    const auto r = flatkit("analyze gen:path:4..8 --r 1 --cap 4 --format tsv");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("nowhere_dense = yes (sample)"), std::string::npos);
    EXPECT_NE(r.out.find("m_cap = 4"), std::string::npos);
    EXPECT_NE(r.out.find("tsv:\n"), std::string::npos);
    EXPECT_EQ(flatkit("analyze gen:path:4..8 --r 1 --cap 4 --format tsv").out, r.out);

    const auto dense = flatkit("analyze gen:clique:2..5 --r 0 --cap 5");
    EXPECT_EQ(dense.status, 2);
    EXPECT_NE(dense.out.find("nowhere_dense = no"), std::string::npos);
}

TEST(Cli, UsageAndParseErrors)
{
    EXPECT_EQ(flatkit("").status, 1);
    EXPECT_EQ(flatkit("gen nosuch 3").status, 1);
    EXPECT_EQ(flatkit("detect subdivided-clique /nonexistent").status, 1);
    EXPECT_EQ(flatkit("mt ladder --formula \"E(x,\" gen:path:3").status, 1);
    EXPECT_EQ(flatkit("mt ladder --formula \"E(x,y)\" --mode sideways gen:path:3").status, 1);
    EXPECT_EQ(flatkit("detect subdivided-clique " + data("two.structure")).status, 1);
}
