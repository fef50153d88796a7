#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include <umbra/cli.hpp>
#include <umbra/json.hpp>
#include <umbra/render.hpp>

using namespace umbra;

namespace
{

struct result {
    int code;
    std::string out;
    std::string err;
};

result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

result batch(const std::string &text)
{
    std::istringstream in(text);
    std::ostringstream out, err;
    const int code = cli::run_batch(in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string &text)
{
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(nlohmann::json::parse(line));
    }
    return out;
}

} // namespace

TEST(Cli, ExpandPlain)
{
    auto r = run({"expand", "--family", "daehee", "--n", "1"});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_EQ(r.out, "2*x + 2/(1-lambda)\n");
    EXPECT_EQ(run({"expand", "--family", "bernoulli", "--order", "1", "--n", "0"}).out, "1\n");
    EXPECT_EQ(run({"expand", "--family", "bernoulli", "--n", "2"}).out, "x^2 - x + 1/6\n");
    EXPECT_EQ(run({"expand", "--family", "assoc-s", "--n", "2"}).out, "x^2 + (2/(1-lambda))*x\n");
}

TEST(Cli, OrderAliases)
{
    const auto a = run({"expand", "--family", "changhee", "--a", "3", "--n", "2"});
    const auto o = run({"expand", "--family", "changhee", "--order", "3", "--n", "2"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, o.out);
    EXPECT_EQ(run({"expand", "--family", "changhee", "--a", "3", "--order", "2", "--n", "2"}).code, cli::exit_usage);
    EXPECT_EQ(run({"expand", "--family", "changhee", "--a", "0", "--n", "2"}).code, cli::exit_usage);
    EXPECT_EQ(run({"expand", "--family", "daehee", "--order", "2", "--n", "2"}).code, cli::exit_usage);
}

TEST(Cli, LambdaSpecialization)
{
    EXPECT_EQ(run({"expand", "--family", "daehee", "--n", "2", "--lambda", "-1"}).out, "4*x^2 + 4*x + 2\n");
    EXPECT_EQ(run({"expand", "--family", "daehee", "--n", "1", "--lambda", "1/2"}).out, "2*x + 4\n");
    const auto one = run({"expand", "--family", "daehee", "--n", "1", "--lambda", "1"});
    EXPECT_EQ(one.code, cli::exit_usage);
    EXPECT_NE(one.err.find("--lambda must differ from 1"), std::string::npos);
    EXPECT_EQ(run({"expand", "--family", "daehee", "--n", "1", "--lambda", "abc"}).code, cli::exit_usage);
}

TEST(Cli, FormatsAgree)
{
    const auto plain = run({"expand", "--family", "frobenius-euler", "--order", "2", "--n", "4"});
    const auto json = run({"expand", "--family", "frobenius-euler", "--order", "2", "--n", "4", "--format", "json"});
    const auto latex = run({"expand", "--family", "frobenius-euler", "--order", "2", "--n", "4", "--format", "latex"});
    ASSERT_EQ(json.code, 0);
    const auto p = nlohmann::json::parse(json.out).get<poly<ratfunc>>();
    EXPECT_EQ(to_plain(p) + "\n", plain.out);
    EXPECT_EQ(to_latex(p) + "\n", latex.out);
    EXPECT_EQ(run({"expand", "--family", "daehee", "--n", "1", "--format", "xml"}).code, cli::exit_usage);
}

TEST(Cli, SeriesAndPair)
{
    const auto s = run({"series", "--family", "bernoulli", "--n", "2"});
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(s.out, "1 + (x - 1/2)*t + (x^2 - x + 1/6)*t^2/2! + O(t^3)\n");
    const auto p = run({"pair", "--family", "daehee", "--n", "3"});
    EXPECT_EQ(p.code, 0);
    EXPECT_NE(p.out.find("f = 1/2*t - 1/4*t^3/3! + O(t^4)\n"), std::string::npos);
    EXPECT_NE(p.out.find("fbar = 2*t + 4*t^3/3! + O(t^4)\n"), std::string::npos);
    const auto j = nlohmann::json::parse(run({"pair", "--family", "mittag-leffler", "--n", "3", "--format", "json"}).out);
    EXPECT_EQ(j.at("g").get<series<ratfunc>>(), series<ratfunc>::one(4));
}

TEST(Cli, VerifyReport)
{
    const auto r = run({"verify", "--id", "EQ30", "--n-max", "2"});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_EQ(r.out,
              "EQ30: pass\n"
              "  n=1 pass [matched: shifted-prefactor]\n"
              "  n=2 pass [matched: shifted-prefactor]\n"
              "  variant note: shifted-prefactor matches at every separating degree; failing: unshifted-prefactor\n");
    const auto j = nlohmann::json::parse(run({"verify", "--id", "THM5", "--n-max", "3", "--a", "2", "--b", "1", "--format", "json"}).out);
    const auto rep = j.get<identity_report>();
    EXPECT_EQ(rep.id, identity_id::thm5);
    EXPECT_EQ(rep.params.at("a"), 2);
    EXPECT_TRUE(rep.all_pass());
    EXPECT_EQ(rep, verify(identity_id::thm5, 3, {{"a", 2}, {"b", 1}}));
}

TEST(Cli, VerifyLambdaAddsSpotPoint)
{
    const auto j = nlohmann::json::parse(run({"verify", "--id", "THM1", "--n-max", "2", "--lambda", "5", "--format", "json"}).out);
    EXPECT_EQ(j.at("per_degree").size(), 3u);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, cli::exit_usage);
    EXPECT_EQ(run({"expand", "--family", "daehee"}).code, cli::exit_usage);
    EXPECT_EQ(run({"expand", "--family", "nope", "--n", "1"}).code, cli::exit_usage);
    EXPECT_EQ(run({"expand", "--family", "daehee", "--n", "-1"}).code, cli::exit_usage);
    EXPECT_EQ(run({"verify"}).code, cli::exit_usage);
    EXPECT_EQ(run({"verify", "--id", "THM9"}).code, cli::exit_usage);
    EXPECT_EQ(run({"verify", "--id", "THM1", "--a", "2"}).code, cli::exit_usage);
    EXPECT_EQ(run({"verify", "--id", "THM5", "--n-max", "0"}).code, cli::exit_usage);
    EXPECT_EQ(run({"verify", "--id", "THM4_EQ38", "--a", "-1"}).code, cli::exit_usage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::exit_usage);
    EXPECT_EQ(run({"expand", "--family", "assoc-t", "--n", "1", "--extra"}).code, cli::exit_usage);
}

TEST(Cli, HelpGoesToStdout)
{
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_NE(r.out.find("verify-all"), std::string::npos);
}

TEST(Cli, VerifyAllSmall)
{
    const auto r = run({"verify-all", "--n-max", "2"});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_NE(r.out.find("21/21 identities pass"), std::string::npos);
    const auto j = nlohmann::json::parse(run({"verify-all", "--n-max", "1", "--format", "json"}).out);
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j.size(), 21u);
}

TEST(Cli, Deterministic)
{
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"verify-all", "--n-max", "3", "--format", "json"},
             {"series", "--family", "changhee", "--a", "2", "--n", "5", "--format", "latex"},
             {"verify", "--id", "EQ21_24_CHAIN", "--n-max", "4"},
         }) {
        EXPECT_EQ(run(args).out, run(args).out);
    }
}

TEST(Batch, RunsJobsInOrder)
{
    const auto r = batch(R"({"command":"expand","family":"daehee","n":1}

{"command":"expand","family":"daehee","n":1,"format":"plain"}
{"command":"verify","id":"THM1","n_max":2}
)");
    EXPECT_EQ(r.code, cli::exit_ok);
    const auto recs = lines(r.out);
    ASSERT_EQ(recs.size(), 3u);
    EXPECT_EQ(recs[0].at("line"), 1);
    EXPECT_EQ(recs[1].at("line"), 3);
    EXPECT_EQ(recs[2].at("line"), 4);
    EXPECT_EQ(recs[1].at("output"), "2*x + 2/(1-lambda)\n");
    EXPECT_EQ(recs[0].at("output").get<poly<ratfunc>>(), parse_poly("2*x + 2/(1-lambda)"));
    EXPECT_EQ(recs[2].at("output").at("id"), "THM1");
    for (const auto &rec : recs) {
        EXPECT_EQ(rec.at("exit"), 0);
    }
}

TEST(Batch, ValidatesEveryLineFirst)
{
    const auto r = batch("{\"command\":\"expand\",\"family\":\"daehee\",\"n\":1}\n{\"command\":\"expand\",\"family\":\"daehee\"}\n");
    EXPECT_EQ(r.code, cli::exit_usage);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("error: line 2:"), std::string::npos);
    EXPECT_EQ(batch("not json\n").code, cli::exit_usage);
    EXPECT_EQ(batch("{\"command\":\"expand\",\"family\":\"daehee\",\"n\":1,\"colour\":1}\n").code, cli::exit_usage);
    EXPECT_EQ(batch("[1,2]\n").code, cli::exit_usage);
    EXPECT_EQ(batch("{\"command\":\"expand\",\"family\":\"daehee\",\"n\":\"1\"}\n").code, cli::exit_usage);
}

TEST(Batch, FromFileViaFlag)
{
    const auto path = std::filesystem::temp_directory_path() / "umbra_cli_batch_test.jsonl";
    {
        std::ofstream f(path);
        f << R"({"command":"expand","family":"mittag-leffler","n":2,"format":"plain"})" << "\n";
    }
    const auto r = run({"--batch", path.string()});
    std::filesystem::remove(path);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).at(0).at("output"), "4*x^2\n");
    EXPECT_EQ(run({"--batch", "/nonexistent/jobs.jsonl"}).code, cli::exit_usage);
}
