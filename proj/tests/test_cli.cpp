#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "grinv/io.hpp"

namespace fs = std::filesystem;
using grinv::io::Json;

namespace {

const fs::path kData = GRINV_TEST_DATA;

struct Scratch {
  fs::path dir;
  Scratch() : dir(fs::temp_directory_path() / ("grinv_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  fs::path operator/(const std::string& name) const { return dir / name; }
};

int run(const std::string& args, std::string* out = nullptr) {
  static int counter = 0;
  const fs::path capture = fs::temp_directory_path() / ("grinv_cli_out_" + std::to_string(counter++));
  const std::string cmd = std::string("\"") + GRINV_CLI_PATH + "\" " + args + " > \"" + capture.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (out) {
    std::ifstream in(capture);
    std::stringstream ss;
    ss << in.rdbuf();
    *out = ss.str();
  }
  fs::remove(capture);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gen") {
    Scratch tmp;
    const auto a = tmp / "a.json", b = tmp / "b.json";
    CHECK(run("gen --n 4 --d 2 --s 5 --seed 1 --out " + a.string()) == 0);
    CHECK(run("gen --n 4 --d 2 --s 5 --seed 1 --out " + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) == slurp(kData / "config_4_2_5_seed1.json"));
    CHECK(run("gen --n 5 --d 3 --s 4 --out " + (tmp / "c.json").string()) == 2);
    CHECK_FALSE(fs::exists(tmp / "c.json"));
    CHECK(run("gen --n 4 --d 2") == 2);
    CHECK(run("gen --n 4 --d 2 --s 5 --bound 0") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("") == 2);
  }

  TEST_CASE("invariants") {
    Scratch tmp;
    const auto out = tmp / "inv.json";
    CHECK(run("invariants --in " + (kData / "cross_ratio.json").string() + " --out " + out.string()) == 0);
    const Json j = Json::parse(slurp(out));
    REQUIRE(j["invariants"].size() == 1);
    CHECK(j["invariants"][0]["value"] == "3/4");
    CHECK(j["invariants"][0]["word"] == Json::array({"G_2_2"}));

    const auto triv = tmp / "triv.json";
    CHECK(run("gen --n 4 --d 2 --s 3 --seed 4 --out " + triv.string()) == 0);
    CHECK(run("invariants --in " + triv.string() + " --out " + out.string()) == 0);
    const Json t = Json::parse(slurp(out));
    CHECK(t["invariants"].empty());
    CHECK(t.contains("note"));

    const auto none = tmp / "none.json";
    CHECK(run("invariants --in " + (kData / "degenerate_4_2_5.json").string() + " --out " + none.string()) == 4);
    CHECK_FALSE(fs::exists(none));
    CHECK(run("invariants --in " + (tmp / "missing.json").string()) == 2);

    std::string text;
    CHECK(run("invariants --in " + (kData / "config_4_2_5_seed1.json").string() + " --max-len 1", &text) == 0);
    CHECK(Json::parse(text)["invariants"].size() == 2);
  }

  TEST_CASE("orbit-test, rank and embed") {
    Scratch tmp;
    const auto a = tmp / "a.json", b = tmp / "b.json", inv = tmp / "inv.json", emb = tmp / "emb.json";
    const std::string cfg = (kData / "config_4_2_5_seed1.json").string();
    std::string text;
    CHECK(run("orbit-test --a " + cfg + " --b " + cfg, &text) == 0);
    CHECK(text == "Equivalent\n");
    CHECK(run("gen --n 4 --d 2 --s 5 --seed 2 --out " + b.string()) == 0);
    CHECK(run("orbit-test --a " + cfg + " --b " + b.string(), &text) == 3);
    CHECK(text == "Distinct\n");
    CHECK(run("orbit-test --a " + cfg + " --b " + (kData / "degenerate_4_2_5.json").string(), &text) == 5);
    CHECK(text == "Inconclusive\n");
    CHECK(run("gen --n 3 --d 2 --s 5 --out " + a.string()) == 0);
    CHECK(run("orbit-test --a " + cfg + " --b " + a.string()) == 2);

    CHECK(run("rank --in " + cfg, &text) == 0);
    CHECK(text == "rank 5 / expected 5\n");
    CHECK(run("rank --in " + (kData / "degenerate_4_2_5.json").string()) == 4);

    CHECK(run("invariants --in " + cfg + " --out " + inv.string()) == 0);
    CHECK(run("embed --in " + inv.string() + " --out " + emb.string()) == 0);
    CHECK(run("orbit-test --a " + cfg + " --b " + emb.string()) == 0);
    const auto inv2 = tmp / "inv2.json";
    CHECK(run("invariants --in " + emb.string() + " --out " + inv2.string()) == 0);
    CHECK(Json::parse(slurp(inv))["invariants"] == Json::parse(slurp(inv2))["invariants"]);
    CHECK(Json::parse(slurp(inv))["letter_matrices"] == Json::parse(slurp(inv2))["letter_matrices"]);

    CHECK(run("embed --in " + cfg) == 2);
    const auto odd_inv = tmp / "odd.json";
    CHECK(run("invariants --in " + a.string() + " --out " + odd_inv.string()) == 0);
    CHECK(run("embed --in " + odd_inv.string()) == 2);
  }
}
