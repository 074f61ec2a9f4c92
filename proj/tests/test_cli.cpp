#include <rectangularity/cli.hpp>
#include <rectangularity/fixtures.hpp>
#include <rectangularity/io.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using rectangularity::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result rectgrp(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string & name)
{
    return std::string(SAMPLES_DIR) + "/" + name;
}

std::string temp_file(const std::string & name, const std::string & body)
{
    auto path = std::filesystem::temp_directory_path() / ("rectgrp_test_" + name);
    std::ofstream(path) << body;
    return path.string();
}

} // namespace

TEST(Cli, CheckRectangular)
{
    auto r = rectgrp({"check", "--property", "rectangular", sample("x4.tbl")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "true\n");

    r = rectgrp({"check", "--property", "rectangular", sample("i3.tbl")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.rfind("false\nwitness: ", 0), 0U) << r.out;
}

TEST(Cli, CheckOtherInputKinds)
{
    EXPECT_EQ(rectgrp({"check", "--property", "p2", sample("market.gp")}).code, 0);
    EXPECT_EQ(rectgrp({"check", "--property", "blackburn", sample("b3.ptl")}).out, "true\n");
    EXPECT_EQ(rectgrp({"check", "--property", "partial-p1", sample("b3.ptl")}).code, 1);
    EXPECT_EQ(rectgrp({"check", "--property", "central", sample("x4.tbl")}).code, 1);
    EXPECT_EQ(rectgrp({"check", "--property", "matrix-symmetric", sample("x4.tbl")}).out, "true\n");
    EXPECT_EQ(rectgrp({"check", "--property", "maximal", sample("m4b.tbl")}).code, 0);
}

TEST(Cli, CentralCensusCount)
{
    auto r = rectgrp({"enumerate", "--class", "central", "--order", "9", "--up-to", "iso", "--emit", "count"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "6\n");
}

TEST(Cli, JobsDoNotChangeOutput)
{
    auto one = rectgrp({"--jobs", "1", "enumerate", "--class", "rectangular", "--order", "3", "--emit", "tables"});
    auto many = rectgrp({"--jobs", "6", "enumerate", "--class", "rectangular", "--order", "3", "--emit", "tables"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, many.out);
    EXPECT_FALSE(one.out.empty());
}

TEST(Cli, JsonCensus)
{
    auto r = rectgrp({"enumerate", "--class", "rectangular", "--order", "2", "--up-to", "iso", "--emit", "json"});
    ASSERT_EQ(r.code, 0);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["class"], "rectangular");
    EXPECT_EQ(doc["order"], 2);
    EXPECT_EQ(doc["mode"], "iso");
    EXPECT_EQ(doc["count"], 5);
    ASSERT_EQ(doc["tables"].size(), 5U);
    EXPECT_EQ(doc["tables"][0].size(), 4U);
}

TEST(Cli, BandBlowUps)
{
    auto r = rectgrp({"enumerate", "--class", "band-blowups", "--band", "2x3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "48\n");
    EXPECT_EQ(rectgrp({"enumerate", "--class", "band-blowups", "--band", "2x3", "--emit", "tables"}).code, 2);
    EXPECT_EQ(rectgrp({"enumerate", "--class", "band-blowups"}).code, 2);
}

TEST(Cli, Isotopy)
{
    auto r = rectgrp({"isotopy", sample("t5a.tbl"), sample("t5b.tbl")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("alpha: "), std::string::npos);
    EXPECT_NE(r.out.find("gamma: "), std::string::npos);

    r = rectgrp({"isotopy", "--isomorphism", sample("t5a.tbl"), sample("t5b.tbl")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "none\n");
}

TEST(Cli, Transversal)
{
    auto r = rectgrp({"transversal", sample("x4.tbl")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.front(), '(');
    r = rectgrp({"transversal", sample("c4.tbl")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "none\n");
}

TEST(Cli, ConstructAndOneBased)
{
    auto r = rectgrp({"construct", "constant", "--order", "2", "--symbol", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2\n1 1\n1 1\n");
    r = rectgrp({"--one-based", "construct", "constant", "--order", "2", "--symbol", "1"});
    EXPECT_EQ(r.out, "2\n2 2\n2 2\n");

    r = rectgrp({"construct", "band", "--rows", "2", "--cols", "2"});
    EXPECT_EQ(rectangularity::parse_table(r.out), rectangularity::rectangular_band(2, 2));

    r = rectgrp({"construct", "factorization", "--group", "cyclic:6", "--h", "0,3", "--k", "0,1,2"});
    EXPECT_EQ(r.code, 0);
    auto gp = rectangularity::parse_graph_pair(r.out);
    EXPECT_TRUE(rectangularity::satisfies_p2(gp));

    r = rectgrp({"construct", "partition", "--order", "4", "--base", "0,1|2,3", "--companion", "0,2|1,3",
                 "--companion", "0,3|1,2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(rectangularity::satisfies_p2(rectangularity::parse_graph_pair(r.out)));
}

TEST(Cli, ConvertRoundTrip)
{
    auto r = rectgrp({"convert", "--from", "groupoid", "--to", "graphpair", sample("x4.tbl")});
    ASSERT_EQ(r.code, 0);
    auto path = temp_file("x4.gp", r.out);
    auto back = rectgrp({"convert", "--from", "graphpair", "--to", "groupoid", path});
    ASSERT_EQ(back.code, 0);
    EXPECT_EQ(rectangularity::parse_table(back.out), rectangularity::fixtures::x4());
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(rectgrp({}).code, 2);
    EXPECT_EQ(rectgrp({"check", "--property", "nonsense", sample("x4.tbl")}).code, 2);
    EXPECT_EQ(rectgrp({"enumerate", "--class", "rectangular"}).code, 2);
    EXPECT_EQ(rectgrp({"enumerate", "--class", "central", "--order", "9", "--up-to", "labeled"}).code, 2);
    EXPECT_EQ(rectgrp({"--jobs", "0", "enumerate", "--class", "rectangular", "--order", "2"}).code, 2);

    EXPECT_EQ(rectgrp({"enumerate", "--class", "rectangular", "--order", "5"}).code, 3);
    EXPECT_EQ(rectgrp({"enumerate", "--class", "rectangular", "--order", "4", "--up-to", "labeled", "--emit", "tables"})
                  .code,
              3);
    EXPECT_EQ(rectgrp({"enumerate", "--class", "central", "--order", "16"}).code, 3);

    auto r = rectgrp({"enumerate", "--class", "central", "--order", "8"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "0\n");
    EXPECT_NE(r.err.find("perfect square"), std::string::npos);

    auto bad = temp_file("bad.tbl", "2\n0 0\n0 2\n");
    r = rectgrp({"check", "--property", "rectangular", bad});
    EXPECT_EQ(r.code, 4);
    EXPECT_NE(r.err.find("line 3, column 3"), std::string::npos) << r.err;
    EXPECT_EQ(rectgrp({"check", "--property", "rectangular", "/nonexistent/file.tbl"}).code, 4);
    EXPECT_EQ(rectgrp({"construct", "left-ext", sample("c4.tbl"), "--symbol", "1"}).code, 4);
}

TEST(Cli, Help)
{
    auto r = rectgrp({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("enumerate"), std::string::npos);
}
