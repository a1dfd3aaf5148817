#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "meshalg/report.hpp"

using namespace meshalg;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(MESHALG_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

ordered_json json_of(const Run& r) { return ordered_json::parse(r.out); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto e = s.find('\n', pos);
    if (e == std::string::npos) e = s.size();
    out.push_back(s.substr(pos, e - pos));
    pos = e + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("classify examples") {
  auto r = run("classify --family E --rank 7 --m 4 --t 1");
  REQUIRE(r.code == 0);
  auto j = json_of(r);
  CHECK(j["schema"] == kSchema);
  CHECK(j["command"] == "classify");
  CHECK(j["result"]["symmetric"] == true);
  CHECK(j["result"]["weakly_symmetric"] == true);

  auto d4 = json_of(run("classify --family D --rank 4 --m 1 --t 3"));
  CHECK(d4["result"]["period"] == 6);
  CHECK(d4["result"]["stably_cy"] == false);

  auto a3 = json_of(run("classify --family A --rank 3 --m 3 --t 1"));
  CHECK(a3["result"]["cy_dim"] == 14);
  CHECK(a3["result"]["n_cy_min"] == 5);

  auto c2 = json_of(run("classify --family A --rank 3 --m 1 --t 1 --char 2"));
  CHECK(c2["result"]["char"] == 2);
  CHECK(c2["result"]["period"] == 3 * c2["result"]["u"].get<int>());
}

TEST_CASE("classify output round-trips and is deterministic") {
  for (const std::string args : {"--family A --rank 3 --m 2 --t 1", "--family D --rank 5 --m 2 --t 2",
                                 "--family E --rank 6 --m 1 --t 2 --char 2", "--family A --rank 2 --m 3 --t 2"}) {
    auto r1 = run("classify " + args);
    auto r2 = run("classify " + args);
    INFO(args);
    REQUIRE(r1.code == 0);
    CHECK(r1.out == r2.out);
    auto j = json_of(r1);
    auto back = invariant_report_from(j["result"]);
    CHECK(to_json(back).dump(2) == j["result"].dump(2));
    CHECK(back == classify(back.group, back.characteristic));
  }
}

TEST_CASE("tsv format") {
  auto r = run("classify --family A --rank 2 --m 3 --t 2 --format tsv");
  REQUIRE(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == tsv_header());
  CHECK(ls[1].find("\t5\t") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("classify --family A --rank 1 --m 1 --t 1").code == 3);
  CHECK(run("classify --family D --rank 4 --m 1 --t 2").code == 2);
  CHECK(run("classify --family E --rank 9 --m 1 --t 1").code == 2);
  CHECK(run("classify --family A --rank 3 --m 1 --t 1 --char 4").code == 2);
  CHECK(run("classify --family A --rank 3 --m 0 --t 1").code == 2);
  CHECK(run("classify --family A --rank 3 --m 1 --t 1").code == 0);
}

TEST_CASE("verify reports all checks") {
  for (const std::string args : {"--family A --rank 3 --m 1 --t 1", "--family A --rank 2 --m 2 --t 1",
                                 "--family D --rank 4 --m 2 --t 3", "--family A --rank 4 --m 1 --t 2 --char 2"}) {
    auto r = run("verify " + args);
    INFO(args);
    CHECK(r.code == 0);
    auto j = json_of(r);
    CHECK(j["command"] == "verify");
    CHECK(j["result"]["all_match"] == true);
    CHECK(j["result"]["checks"].size() >= 8);
    CHECK(r.out == run("verify " + args).out);
  }
  auto a3 = json_of(run("verify --family A --rank 3 --m 1 --t 1"));
  CHECK(a3["result"]["oracle"]["period"] == 6);
  CHECK(a3["result"]["omega_dims"] == ordered_json::array({10, 24, 24, 10, 24, 24, 10}));
  CHECK(run("verify --family A --rank 1 --m 1 --t 1").code == 3);
}

TEST_CASE("table") {
  auto r = run("table --family A --rank-min 3 --rank-max 6 --m-max 6 --t 1 --t 2 --format tsv");
  REQUIRE(r.code == 0);
  auto ls = lines(r.out);
  CHECK(ls[0] == tsv_header());
  CHECK(ls.size() - 1 >= 40);
  auto v = run("table --family D --rank-min 4 --rank-max 4 --m-max 3 --t 3 --verify --format tsv");
  CHECK(v.code == 0);
  auto vl = lines(v.out);
  REQUIRE(vl.size() == 4);
  for (std::size_t i = 1; i < vl.size(); ++i) CHECK(vl[i].substr(vl[i].rfind('\t') + 1) == "match");
  auto j = json_of(run("table --family A --rank-min 2 --rank-max 3 --m-max 2 --t 1 --format json"));
  CHECK(j["command"] == "table");
  CHECK(j["result"]["rows"].size() == 4);
}

TEST_CASE("algebra structure") {
  auto r = run("algebra --family A --rank 3 --m 1 --t 1 --structure");
  REQUIRE(r.code == 0);
  auto j = json_of(r)["result"];
  CHECK(j["vertices"].size() == 3);
  CHECK(j["basis"].size() == 10);
  CHECK(j["arrows"].size() == 4);
  CHECK(r.out == run("algebra --family A --rank 3 --m 1 --t 1 --structure").out);
}
