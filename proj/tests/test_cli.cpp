#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "wafom/f2.hpp"
#include "wafom/netio.hpp"

using namespace wafom;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string cmd =
        std::string(DIGNET_PATH) + " " + args + " > cli_stdout.tmp 2> cli_stderr.tmp";
    const int rc = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
    r.out = slurp("cli_stdout.tmp");
    r.err = slurp("cli_stderr.tmp");
    return r;
}

}  // namespace

TEST_CASE("wafom command prints the documented csv") {
    const Subspace p = canonicalize(1, 2, {F2Matrix::unit(1, 2, 1, 1)});
    write_net_file("cli_net12.net", p);

    const RunResult r = run("wafom --net cli_net12.net");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "id,s,n,m,method,wafom,wafom_log2,exact\n"
          "cli_net12.net,1,2,1,dual,0.25,-2,\n");

    const RunResult exact = run("wafom --net cli_net12.net --method exact");
    CHECK(exact.status == 0);
    CHECK(exact.out ==
          "id,s,n,m,method,wafom,wafom_log2,exact\n"
          "cli_net12.net,1,2,1,exact,0.25,-2,1/2^2\n");
}

TEST_CASE("full net reports wafom zero with the -inf sentinel") {
    write_net_file("cli_full.net", Subspace::full(1, 2));
    const RunResult r = run("wafom --net cli_full.net");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "id,s,n,m,method,wafom,wafom_log2,exact\n"
          "cli_full.net,1,2,2,dual,0,-inf,\n");
}

TEST_CASE("json output mirrors the csv fields") {
    const RunResult r = run("wafom --net cli_net12.net --method exact --format json");
    REQUIRE(r.status == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("schema") == "dignet/1");
    CHECK(doc.at("command") == "wafom");
    REQUIRE(doc.at("rows").size() == 1);
    const auto& row = doc.at("rows").at(0);
    CHECK(row.at("id") == "cli_net12.net");
    CHECK(row.at("s") == 1);
    CHECK(row.at("n") == 2);
    CHECK(row.at("m") == 1);
    CHECK(row.at("wafom") == 0.25);
    CHECK(row.at("wafom_log2") == -2.0);
    CHECK(row.at("exact") == "1/2^2");

    // -inf is a string sentinel in json too
    const RunResult full = run("wafom --net cli_full.net --format json");
    REQUIRE(full.status == 0);
    const nlohmann::json fdoc = nlohmann::json::parse(full.out);
    CHECK(fdoc.at("rows").at(0).at("wafom_log2") == "-inf");
}

TEST_CASE("failure exit codes are distinct and leave no partial output") {
    std::remove("cli_should_not_exist.csv");
    const RunResult missing =
        run("wafom --net cli_no_such_file.net --out cli_should_not_exist.csv");
    CHECK(missing.status == 3);
    CHECK(missing.err.find("cli_no_such_file.net") != std::string::npos);
    std::ifstream probe("cli_should_not_exist.csv");
    CHECK_FALSE(probe.good());

    std::ofstream("cli_malformed.net") << "not a net\n";
    CHECK(run("wafom --net cli_malformed.net").status == 3);

    CHECK(run("verify --gen 1,6,4,1 --cprime 0.5").status == 2);
    CHECK(run("verify --gen 1,6,4,1 --cprime 0.2").status == 2);
    CHECK(run("wafom").status == 2);                       // no inputs
    CHECK(run("wafom --gen 2,2,5").status == 2);           // m > s*n
    CHECK(run("wafom --gen 2,2").status == 2);             // short spec
    CHECK(run("wafom --gen 2,2,1,0").status == 2);         // zero count
    CHECK(run("nonsense").status == 2);                    // unknown subcommand
    CHECK(run("wafom --no-such-flag").status == 2);
    CHECK(run("integrate --gen 1,3,1,1 --function sine").status == 2);
    CHECK(run("integrate --gen 1,3,1,1").status == 2);     // function missing

    CHECK(run("wafom --gen 1,30,20,1 --cap-dim 5").status == 4);

    CHECK(run("--help").status == 0);
    CHECK(run("wafom --help").status == 0);
}

TEST_CASE("exhaustive verification walks every subspace of the shape") {
    const RunResult r = run("verify --gen 2,2,2 --exhaustive --cprime 1");
    CHECK(r.status == 0);
    std::size_t lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 36);  // header + the 35 two-dimensional subspaces
    CHECK(r.out.rfind("id,s,n,m,c_prime,", 0) == 0);
}

TEST_CASE("search writes its best net and reruns byte-identically") {
    const RunResult a =
        run("search --gen 1,8,4,40 --seed 11 --save-net cli_best_a.net");
    const RunResult b =
        run("search --gen 1,8,4,40 --seed 11 --save-net cli_best_b.net");
    CHECK(a.status == 0);
    CHECK(b.status == 0);
    // reports differ only in the save path; nets must be byte-identical
    CHECK(slurp("cli_best_a.net") == slurp("cli_best_b.net"));

    // the saved file re-parses to a net of the requested shape
    const Subspace best = read_net_file("cli_best_a.net");
    CHECK(best.rows() == 1);
    CHECK(best.cols() == 8);
    CHECK(best.dim() == 4);
    CHECK(net_to_string(best) == slurp("cli_best_a.net"));

    // a different seed finds a different best net at these odds
    const RunResult c =
        run("search --gen 1,8,4,40 --seed 12 --save-net cli_best_c.net");
    CHECK(c.status == 0);
    CHECK(slurp("cli_best_c.net") != slurp("cli_best_a.net"));
}

TEST_CASE("verify and integrate runs are deterministic for a fixed seed") {
    const std::string args = "verify --gen 2,5,5,8 --seed 99 --cprime 0.8";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    const std::string iargs =
        "integrate --gen 2,6,6,10 --seed 5 --function product --format json";
    const RunResult ia = run(iargs);
    const RunResult ib = run(iargs);
    CHECK(ia.status == 0);
    CHECK(ia.out == ib.out);
    const nlohmann::json doc = nlohmann::json::parse(ia.out);
    CHECK(doc.at("rows").size() == 10);
    CHECK(doc.contains("spearman"));
}

TEST_CASE("integrate reports zero error for the constant function") {
    const RunResult r = run("integrate --gen 2,4,3,4 --seed 1 --function const1");
    CHECK(r.status == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);  // header
    CHECK(line == "id,function,wafom,wafom_log2,abs_error");
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("#", 0) == 0) continue;
        CHECK(line.substr(line.rfind(',') + 1) == "0");
        ++rows;
    }
    CHECK(rows == 4);
}

TEST_CASE("output lands in the requested file") {
    std::remove("cli_report.csv");
    const RunResult r = run("wafom --net cli_net12.net --out cli_report.csv");
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    CHECK(slurp("cli_report.csv") ==
          "id,s,n,m,method,wafom,wafom_log2,exact\n"
          "cli_net12.net,1,2,1,dual,0.25,-2,\n");
}
