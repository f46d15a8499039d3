#include <doctest.h>

#include "blockcensus/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = blockcensus::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> parse_jsonl(const std::string& text) {
    std::vector<json> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) rows.push_back(json::parse(line));
    return rows;
}

}  // namespace

TEST_CASE("bounds subcommand emits a clean report") {
    RunResult r = run_cli({"bounds", "--max-n", "12"});
    CHECK(r.code == 0);
    auto rows = parse_jsonl(r.out);
    REQUIRE(!rows.empty());
    // every line is valid JSON; the last line is the summary
    const json& last = rows.back();
    REQUIRE(last.contains("summary"));
    CHECK(last["summary"]["violations"] == 0);
    CHECK(last["summary"]["rows"] == static_cast<long long>(rows.size()) - 1);
    bool saw_olsson = false, saw_wreath = false;
    for (const auto& row : rows) {
        if (row.contains("family") && row["family"] == "olsson") saw_olsson = true;
        if (row.contains("family") && row["family"] == "wreath") saw_wreath = true;
    }
    CHECK(saw_olsson);
    CHECK(saw_wreath);
}

TEST_CASE("symmetric sweep respects the size options") {
    RunResult r = run_cli({"sym", "--max-n", "10", "--primes", "2", "3"});
    CHECK(r.code == 0);
    auto rows = parse_jsonl(r.out);
    for (const auto& row : rows) {
        if (!row.contains("family")) continue;
        if (row["family"] == "sym-census") {
            CHECK(row["n"].get<int>() <= 10);
            int p = row["p"].get<int>();
            CHECK((p == 2 || p == 3));
            CHECK(row["ok"] == true);
        }
        if (row["family"] == "sym") CHECK(row["verdict"] != "violation");
    }
}

TEST_CASE("output is identical across worker counts") {
    RunResult a = run_cli({"sym", "--max-n", "12", "--jobs", "1"});
    RunResult b = run_cli({"sym", "--max-n", "12", "--jobs", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    RunResult c = run_cli({"classical", "--jobs", "1"});
    RunResult d = run_cli({"classical", "--jobs", "4"});
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({"no-such-subcommand"}).code == 2);
    CHECK(run_cli({"sym", "--max-n", "not-a-number"}).code == 2);
    CHECK(run_cli({"sym", "--no-such-flag"}).code == 2);
    // empty invocation: nothing to do, treated as usage
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("help returns success") {
    RunResult r = run_cli({"--help"});
    CHECK(r.code == 0);
}

TEST_CASE("csv output starts with a header row") {
    RunResult r = run_cli({"tables", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header.find("family") != std::string::npos);
}

TEST_CASE("reports can be written to a file") {
    std::string path = "cli_report_test.jsonl";
    RunResult r = run_cli({"tables", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    auto rows = parse_jsonl(buf.str());
    REQUIRE(!rows.empty());
    CHECK(rows.back().contains("summary"));
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("spin and tables subcommands verify cleanly") {
    CHECK(run_cli({"spin", "--max-n", "10"}).code == 0);
    CHECK(run_cli({"tables"}).code == 0);
    CHECK(run_cli({"classes", "--max-n", "12"}).code == 0);
}
