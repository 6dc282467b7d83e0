#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hassedeg/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hassedeg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kExample = "[7,9,5,2,3,8,4,1,6]";

}  // namespace

TEST_CASE("degrees") {
  CHECK(run({"degrees", "[3,2,1]"}).out == "down=2 up=0 total=2 inv=3\n");
  CHECK(run({"degrees", "[1,2,3]"}).out == "down=0 up=2 total=2 inv=0\n");
  CHECK(run({"degrees", "[2,1]"}).out == "down=1 up=0 total=1 inv=1\n");
  CHECK(run({"degrees", "3", "2", "1"}).out == "down=2 up=0 total=2 inv=3\n");
  CHECK(run({"degrees", "--list", "[2,3,1]"}).out ==
        "down=2 up=1 total=3 inv=2\ncovered_by: [1,3,2] [2,1,3]\ncovers: [3,2,1]\n");
  CHECK(run({"--format", "json", "degrees", "[2,1]"}).out ==
        "{\"perm\":[2,1],\"down\":1,\"up\":0,\"total\":1,\"inv\":1}\n");
}

TEST_CASE("parse errors exit with the usage code") {
  const auto bad = run({"degrees", "[1,1]"});
  CHECK(bad.code == hassedeg::cli::kUsageError);
  CHECK(bad.err.find("duplicate") != std::string::npos);
  CHECK(run({"descents", "--r", "9", kExample}).code == hassedeg::cli::kUsageError);
  CHECK(run({"nonsense"}).code == hassedeg::cli::kUsageError);
  CHECK(run({}).code == hassedeg::cli::kUsageError);
  CHECK(run({"--help"}).code == hassedeg::cli::kOk);
}

TEST_CASE("descents and graphs") {
  CHECK(run({"descents", kExample}).out ==
        "t(1,2) t(1,3) t(1,4) t(2,5) t(3,5) t(4,5) t(4,8) t(5,7) t(5,9) t(6,7) t(6,8) t(8,9)\n");
  const auto dot = run({"graph", "[3,4,1,2]", "--kind", "total", "--format", "dot"}).out;
  CHECK(std::count(dot.begin(), dot.end(), '-') == 12);
  CHECK(run({"graph", "[3,4,1,2]", "--kind", "rth", "--r", "3", "--format", "json"}).code == 0);
}

TEST_CASE("reconstruct reads JSON or text from a file") {
  const std::string path = "cli_reconstruct_input.txt";
  {
    std::ofstream f(path);
    f << run({"--format", "json", "descents", kExample}).out;
  }
  CHECK(run({"reconstruct", "9", path}).out == kExample + "\n");
  {
    std::ofstream f(path);
    f << "t(1,2) t(1,3) t(2,3)\n";
  }
  CHECK(run({"reconstruct", "3", path}).code == hassedeg::cli::kVerificationFailure);
  CHECK(run({"reconstruct", "3", "missing-file.json"}).code == hassedeg::cli::kUsageError);
  std::remove(path.c_str());
}

TEST_CASE("extremal, expect, distribution, sample") {
  const auto table = run({"extremal", "5", "--stat", "total"}).out;
  CHECK(std::count(table.begin(), table.end(), '\n') == 17);  // header plus 16 rows
  CHECK(run({"extremal", "5", "--stat", "total", "--brute-force"}).out == table);
  CHECK(run({"expect", "3", "--exact"}).out == "4/3\n");
  CHECK(run({"expect", "9"}).out == "2593/252\n");
  CHECK(run({"expect", "50", "--float"}).out.rfind("129.4594722548", 0) == 0);
  CHECK(run({"--format", "json", "distribution", "3"}).out ==
        "{\"n\":3,\"stat\":\"down\",\"counts\":{\"0\":1,\"1\":2,\"2\":3}}\n");
  const auto s1 = run({"--seed", "9", "--jobs", "1", "sample", "12", "--samples", "5000"});
  const auto s2 = run({"--seed", "9", "--jobs", "3", "sample", "12", "--samples", "5000"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  CHECK(s1.out.find("seed=9") != std::string::npos);
}

TEST_CASE("verify passes and catches an injected fault") {
  const std::vector<std::string> base{"verify",    "--max-n",   "4",  "--sampled-n",
                                      "12",        "--samples", "50", "--no-timing"};
  const auto ok = run(base);
  CHECK(ok.code == hassedeg::cli::kOk);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  auto faulty_args = base;
  faulty_args.insert(faulty_args.end(), {"--inject-fault", "descent-criterion"});
  const auto faulty = run(faulty_args);
  CHECK(faulty.code == hassedeg::cli::kVerificationFailure);
  CHECK(faulty.out.find("FAIL  descent-graph-triangle-free") != std::string::npos);
  CHECK(run({"verify", "--max-n", "2", "--sampled-n", "5", "--samples", "10"}).code == 0);
  CHECK(run({"verify", "--max-n", "12"}).code == hassedeg::cli::kUsageError);
}
