#include "tideal/cli.hpp"

#include <gtest/gtest.h>

using namespace tideal;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    args.push_back("--quiet");
    int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DecomposeJson) {
    auto r = run({"decompose", "--n", "3", "--m", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    auto d = decomposition_from_json(j.at("decomposition"));
    EXPECT_EQ(d, Decomposition(4, {{Partition{4}, 1}, {Partition{3, 1}, 2}, {Partition{2, 2}, 1}, {Partition{2, 1, 1}, 1}}));
    EXPECT_EQ(j.at("decomposition").at("m"), 4);
    EXPECT_EQ(j.at("decomposition").at("terms")[0].at("partition"), Json({4}));
    EXPECT_EQ(j.at("decomposition").at("terms")[1].at("mult"), 2);
    EXPECT_EQ(to_json(d), j.at("decomposition"));
}

TEST(Cli, TextCommands) {
    auto d = run({"dprobe", "--n", "2"});
    EXPECT_EQ(d.code, 0);
    EXPECT_NE(d.out.find("d(2) = 3"), std::string::npos) << d.out;
    auto z = run({"zeta", "--order", "4", "--k", "1"});
    EXPECT_EQ(z.code, 0);
    EXPECT_NE(z.out.find("not invertible (gcd(2,4)=2)"), std::string::npos) << z.out;
    auto y = run({"young-rule", "--l", "2", "--shape", "(2,1)"});
    EXPECT_EQ(y.code, 0);
    EXPECT_NE(y.out.find("S^(4,1)"), std::string::npos) << y.out;
    auto b = run({"bounds", "--n", "2", "--m", "3", "--check"});
    EXPECT_EQ(b.code, 0) << b.out;
    auto u = run({"upper", "--K", "2", "--n", "6", "--check"});
    EXPECT_EQ(u.code, 0) << u.out;
    auto c = run({"coeffpoly", "--blocks", "y2,y1^2", "--word", "y1 y2 y1^7", "--s-max", "6"});
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("fit: s + 6"), std::string::npos) << c.out;
    auto dim = run({"dim", "--n", "3", "--m", "4", "--method", "both"});
    EXPECT_EQ(dim.code, 0);
    EXPECT_NE(dim.out.find("12"), std::string::npos) << dim.out;
}

TEST(Cli, JsonRoundTrips) {
    auto s = run({"stabilize", "--K", "1", "--n-min", "3", "--n-max", "5", "--format", "json"});
    ASSERT_EQ(s.code, 0) << s.err;
    auto j = Json::parse(s.out);
    auto rep = stabilization_report_from_json(j.contains("report") ? j.at("report") : j);
    EXPECT_EQ(rep.n_obs, 3);
    EXPECT_EQ(rep.decompositions.size(), 3u);
    EXPECT_EQ(to_json(rep), j.contains("report") ? j.at("report") : j);

    RationalPolynomial p({Rational(-1), Rational(3, 2), Rational(0), Rational(2)}, "n");
    EXPECT_EQ(polynomial_from_json(to_json(p)), p);
    auto o = OrderedPartition::parse("{[1 3],[2]}");
    EXPECT_EQ(ordered_partition_from_json(to_json(o)), o);
    EXPECT_THROW(decomposition_from_json(Json::parse(R"({"m": 2})")), parse_error);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"decompose", "--n", "5", "--m", "4"}).code, cli::bad_arguments);
    EXPECT_EQ(run({"decompose", "--n", "3"}).code, cli::bad_arguments);
    EXPECT_EQ(run({"nonsense"}).code, cli::bad_arguments);
    EXPECT_EQ(run({"zeta", "--order", "3", "--k", "3"}).code, cli::bad_arguments);
    EXPECT_EQ(run({"verify", "medium"}).code, cli::bad_arguments);
    EXPECT_EQ(run({"dim", "--n", "2", "--m", "10", "--method", "direct"}).code, cli::budget_exceeded);
    EXPECT_EQ(run({"stabilize", "--K", "1", "--n-min", "3", "--n-max", "6", "--budget", "-1"}).code,
              cli::budget_exceeded);
    EXPECT_EQ(run({"dprobe", "--n", "3", "--m-max", "4"}).code, cli::budget_exceeded);
}

TEST(Cli, VerifyFastIsDeterministic) {
    auto a = run({"verify", "fast", "--seed", "7"});
    auto b = run({"verify", "fast", "--seed", "7", "--workers", "1"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("checks passed"), std::string::npos);
    auto one = run({"verify", "fast", "--only", "zeta"});
    EXPECT_EQ(one.code, 0);
    EXPECT_NE(one.out.find("1/1 checks passed"), std::string::npos);
}
