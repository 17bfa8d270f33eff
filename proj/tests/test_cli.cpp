#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(QCUBE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int rc = pclose(p);
  return {WEXITSTATUS(rc), out};
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("count subcommand") {
  RunResult r = run("count --d 2 --q 4 --method brute");
  CHECK(r.status == 0);
  CHECK(r.out == "84\n");
  CHECK(run("count --d 3 --q 4 --method product").out == "2652\n");
  CHECK(run("count --d 1 --q 2").out == "2\n");
}

TEST_CASE("infeasible instances get their own exit code") {
  CHECK(run("count --d 9 --q 4").status == 3);
  CHECK(run("isets --d 9").status == 3);
}

TEST_CASE("usage errors") {
  CHECK(run("no-such-command").status != 0);
  CHECK(run("count").status != 0);                      // missing --d
  CHECK(run("count --d 2 --method warp").status == 2);  // unknown method
  CHECK(run("count --d 0 --q 4").status == 2);          // bad dimension
}

TEST_CASE("isets subcommand") {
  CHECK(run("isets --d 2").out == "7\n");
  CHECK(run("isets --d 3 --method exhaustive").out == "35\n");
  CHECK(run("isets --d 4 --method product").out == "743\n");
}

TEST_CASE("phases subcommand") {
  RunResult r = run("phases --d 3 --coloring 12314324");
  CHECK(r.status == 0);
  CHECK(r.out.find("main phase 12|34") != std::string::npos);
  CHECK(r.out.find("in F*") != std::string::npos);
  RunResult census = run("phases --d 2 --census");
  CHECK(census.status == 0);
  CHECK(census.out.find("ideal colorings: 84") != std::string::npos);
  CHECK(census.out.find("F* colorings:   0") != std::string::npos);
}

TEST_CASE("template subcommand") {
  RunResult r = run("template --d 3 --coloring 12314324");
  CHECK(r.status == 0);
  CHECK(r.out.find("(exceptional)") != std::string::npos);
  // census index 0 is the same coloring
  RunResult ri = run("template --d 3 --index 0");
  CHECK(ri.status == 0);
  CHECK(ri.out.find("12314324") != std::string::npos);
  // an ideal coloring has no template
  CHECK(run("template --d 3 --coloring 13313113").status == 2);
}

TEST_CASE("audit and bounds subcommands") {
  RunResult audit = run("audit-entropy --d 2 --u 1,2");
  CHECK(audit.status == 0);
  CHECK(audit.out.find("[holds]") != std::string::npos);
  CHECK(run("bounds --lemma compositions --m 10").status == 0);
  CHECK(run("bounds --lemma connected --d 3 --n 3").status == 0);
  CHECK(run("bounds --lemma isoperimetry --d 3 --a 2").status == 0);
  CHECK(run("bounds --lemma nonsense").status == 2);
}

TEST_CASE("census-fstar subcommand") {
  RunResult r = run("census-fstar --d 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("72 F* coloring(s)") != std::string::npos);
  CHECK(r.out.find("12314324") != std::string::npos);
}

TEST_CASE("report files are byte-identical with --no-timestamp") {
  const std::string a = "/tmp/qcube_report_a.csv";
  const std::string b = "/tmp/qcube_report_b.csv";
  std::remove(a.c_str());
  std::remove(b.c_str());
  CHECK(run("report --d 1..3 --q 4 --no-timestamp --out " + a).status == 0);
  CHECK(run("report --d 1..3 --q 4 --no-timestamp --out " + b).status == 0);
  std::string ca = slurp(a), cb = slurp(b);
  CHECK(!ca.empty());
  CHECK(ca == cb);
  CHECK(ca.find("2652") != std::string::npos);
  // with the timestamp on, the header line is present
  const std::string c = "/tmp/qcube_report_c.csv";
  CHECK(run("report --d 1..2 --q 4 --out " + c).status == 0);
  CHECK(slurp(c).rfind("# generated ", 0) == 0);
}

TEST_CASE("config file and flag precedence") {
  const std::string cfgpath = "/tmp/qcube_test.cfg";
  {
    std::ofstream os(cfgpath);
    os << "# test configuration\nthreshold_base = 0.5\n";
  }
  // the config's sub-1 threshold rejects every flawed coloring
  RunResult r = run("phases --d 3 --coloring 12314324 --config " + cfgpath);
  CHECK(r.out.find("no main phase") != std::string::npos);
  // a flag overrides the file
  RunResult r2 = run("phases --d 3 --coloring 12314324 --config " + cfgpath +
                     " --threshold-base 1.9");
  CHECK(r2.out.find("main phase 12|34") != std::string::npos);
  // unknown keys are an error
  {
    std::ofstream os(cfgpath);
    os << "warp_factor = 9\n";
  }
  CHECK(run("count --d 2 --config " + cfgpath).status == 2);
}

TEST_CASE("output directory environment variable") {
  const char* dir = "/tmp/qcube_outdir";
  std::string mk = std::string("mkdir -p ") + dir;
  REQUIRE(std::system(mk.c_str()) == 0);
  std::remove("/tmp/qcube_outdir/env.json");
  std::string cmd = std::string("QCUBE_OUT_DIR=") + dir + " " + QCUBE_CLI_PATH +
                    " count --d 2 --q 4 --out env.json --no-timestamp" +
                    " > /dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp("/tmp/qcube_outdir/env.json").find("\"value\": \"84\"") !=
        std::string::npos);
}
