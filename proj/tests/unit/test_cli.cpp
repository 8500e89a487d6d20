#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ietrel/json_io.hpp"
#include "ietrel_cli.hpp"

namespace fs = std::filesystem;
using ietrel::io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = ietrel::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Workdir {
  fs::path dir;
  Workdir() {
    dir = fs::temp_directory_path() / ("ietrel_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Workdir() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

const char* kRot13 = R"({"lengths":[{"Q":"2/3"},{"Q":"1/3"}],"perm":[2,1]})";
const char* kRot15 = R"({"lengths":[{"Q":"4/5"},{"Q":"1/5"}],"perm":[2,1]})";
const char* kFig2 = R"({"lengths":[{"Q":"3/10"},{"Q":"1/5"},{"Q":"1/2"}],"perm":[2,1,3]})";

}  // namespace

TEST_CASE("iet subcommands") {
  Workdir w;
  const auto a = w.write("a.json", kRot13);
  const auto b = w.write("b.json", kRot15);
  auto r = run({"iet", "compose", a, b});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"lengths":[{"Q":"7/15"},{"Q":"8/15"}],"perm":[2,1]})"));
  r = run({"iet", "eval", a, "1/2"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"Q":"5/6"})"));
  r = run({"iet", "eval", a, "1"});
  CHECK(r.code == 2);
  r = run({"iet", "power", b, "5"});
  CHECK(json::parse(r.out) == json::parse(R"({"lengths":[{"Q":"1"}],"perm":[1]})"));
  r = run({"iet", "power", b, "-1"});
  CHECK(ietrel::io::iet_from_json(json::parse(r.out)) == ietrel::Iet::rotation(ietrel::Scalar(4, 5)));
  r = run({"iet", "info", w.write("f.json", kFig2), "--decimal"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["translations_decimal"][1] == "-0.3");
  r = run({"iet", "xq", w.path("f.json"), "--q", "5"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["alpha"] == json::parse(R"({"Q":"1/10"})"));
  r = run({"iet", "random", "--n", "4", "--seed", "11", "--cubic"});
  auto again = run({"iet", "random", "--n", "4", "--seed", "11", "--cubic"});
  CHECK(r.code == 0);
  CHECK(r.out == again.out);
  CHECK(ietrel::io::iet_from_json(json::parse(r.out)).size() <= 4);
}

TEST_CASE("certify, verify and tamper") {
  Workdir w;
  const auto s = w.write("s.json", kFig2);
  const auto t0 = w.write("t0.json", kRot15);
  const auto cert = w.path("cert.json");
  auto r = run({"relation", "certify", "--s", s, "--t0", t0, "--q", "5", "--out", cert});
  CHECK(r.code == 0);
  r = run({"relation", "verify", cert});
  CHECK(r.code == 0);
  CHECK(r.out.find("certificate verified") != std::string::npos);

  json c = ietrel::io::read_json_file(cert);
  for (const char* field : {"delta", "eps", "eta", "theta", "mu"}) {
    json bad = c;
    bad["params"][field] = json::parse(R"({"Q":"1/999999999"})");
    ietrel::io::write_json_file(w.path("bad.json"), bad);
    CHECK_MESSAGE(run({"relation", "verify", w.path("bad.json")}).code == 1, field);
  }
  json bad = c;
  bad["k"] = c["k"].get<long>() + 5;
  ietrel::io::write_json_file(w.path("bad.json"), bad);
  CHECK(run({"relation", "verify", w.path("bad.json")}).code == 1);
  bad = c;
  bad["q"] = 6;
  ietrel::io::write_json_file(w.path("bad.json"), bad);
  CHECK(run({"relation", "verify", w.path("bad.json")}).code == 1);
  bad = c;
  bad["word"] = json::parse(R"([["t", 1]])");
  ietrel::io::write_json_file(w.path("bad.json"), bad);
  CHECK(run({"relation", "verify", w.path("bad.json")}).code == 1);

  // Non-admissible T0 is a failed precondition, not malformed input.
  const auto bad_t0 = w.write("bad_t0.json", R"({"lengths":[{"Q":"1/5"},{"Q":"2/5"},{"Q":"2/5"}],"perm":[1,3,2]})");
  r = run({"relation", "certify", "--s", s, "--t0", bad_t0, "--q", "5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("not admissible") != std::string::npos);
}

TEST_CASE("certificate printed to stdout round-trips") {
  Workdir w;
  auto r = run({"relation", "certify", "--s", w.write("s.json", kRot13), "--t0", w.write("t0.json", kRot15), "--q", "5"});
  CHECK(r.code == 0);
  const auto cert = ietrel::io::certificate_from_json(json::parse(r.out));
  CHECK(ietrel::io::to_json(cert) == json::parse(r.out));
}

TEST_CASE("rational subcommands") {
  Workdir w;
  auto r = run({"rational", "nearest", w.write("a.json", kRot13), "--q", "5"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["delta"] == json::parse(R"({"Q":"2/15"})"));
  r = run({"rational", "order", w.write("f.json", kFig2), "--q", "10"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["order"] == "5");
  r = run({"rational", "order", w.path("f.json"), "--q", "5"});
  CHECK(r.code == 2);
}

TEST_CASE("ay sweep writes CSV and SVG") {
  Workdir w;
  auto r = run({"ay", "sweep", "--qmin", "20", "--qmax", "100", "--out", w.path("sweep.csv"), "--svg",
                w.path("plots"), "--threads", "2"});
  CHECK(r.code == 0);
  std::ifstream csv(w.path("sweep.csv"));
  std::string header;
  std::getline(csv, header);
  CHECK(header == "q,delta_exact,delta_decimal,order,bound_exact,bound_decimal,bound_lt_1");
  int rows = 0;
  for (std::string line; std::getline(csv, line);) {
    ++rows;
    std::stringstream ss(line);
    std::string q, delta;
    std::getline(ss, q, ',');
    std::getline(ss, delta, ',');
    CHECK(std::stol(q) == 19 + rows);
    CHECK(line.substr(line.rfind(',') + 1) == "false");
  }
  CHECK(rows == 81);
  for (const char* name : {"delta.svg", "order.svg", "bound.svg"}) CHECK(fs::exists(fs::path(w.path("plots")) / name));
  CHECK(run({"ay", "sweep", "--qmin", "3", "--qmax", "10"}).code == 2);
}

TEST_CASE("ping-pong subcommand") {
  Workdir w;
  auto r = run({"aiet", "pingpong", "--standard", "--print"});
  CHECK(r.code == 0);
  const auto printed = r.out.substr(0, r.out.rfind('}') + 1);
  const auto file = w.write("pp.json", printed);
  CHECK(run({"aiet", "pingpong", "--check", file}).code == 0);
  json j = json::parse(printed);
  j["X"] = json::parse(R"([["1/10", "1/2"]])");
  ietrel::io::write_json_file(w.path("pp_bad.json"), j);
  CHECK(run({"aiet", "pingpong", "--check", w.path("pp_bad.json")}).code == 1);
  CHECK(run({"aiet", "pingpong"}).code == 2);
  CHECK(run({"aiet", "pingpong", "--check", w.write("junk.json", "{")}).code == 2);
}

TEST_CASE("malformed invocations exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"iet"}).code == 2);
  CHECK(run({"iet", "compose", "only_one.json"}).code == 2);
  CHECK(run({"iet", "xq", "missing.json", "--q", "0"}).code == 2);
  CHECK(run({"relation", "verify", "does_not_exist.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
