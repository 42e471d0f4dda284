#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "grinv/error.hpp"
#include "grinv/io.hpp"
#include "grinv/orbit.hpp"
#include "support.hpp"

using namespace grinv;
using grinv::testing::random_invertible_mat;
using grinv::testing::random_mat;
using io::Json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a throw");
  return ErrorKind::Parse;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("rationals serialize as reduced strings") {
    CHECK(io::to_json(Rat(6, 4)) == "3/2");
    CHECK(io::to_json(Rat(-8, 4)) == "-2");
    CHECK(io::rat_from_json(Json("10/-4")) == Rat(-5, 2));
    CHECK(io::rat_from_json(Json(7)) == Rat(7));
    CHECK(kind_of([] { io::rat_from_json(Json(0.5)); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::rat_from_json(Json("x")); }) == ErrorKind::Parse);
  }

  TEST_CASE("property: rational text round trip is lossless") {
    SplitMix64 rng(101);
    for (int t = 0; t < 200; ++t) {
      const Rat x(rng.uniform(-1000000, 1000000), rng.uniform(1, 1000000));
      const Json j = io::to_json(x);
      CHECK(io::rat_from_json(j) == x);
      CHECK(j.get<std::string>() == x.str());
    }
  }

  TEST_CASE("configuration round trip") {
    SplitMix64 rng(102);
    std::vector<Subspace> subs;
    for (int i = 0; i < 4; ++i) subs.emplace_back(random_invertible_mat(rng, 4).cols_range(0, 2));
    const Config c(4, 2, subs);
    const Json j = io::config_to_json(c);
    CHECK(io::config_from_json(j) == c);
    CHECK(io::dump(j).back() == '\n');
    const std::string text = io::dump(j);
    CHECK(text.find("\"n\"") < text.find("\"d\""));
    CHECK(text.find("\"d\"") < text.find("\"subspaces\""));
  }

  TEST_CASE("malformed configurations") {
    const Json good = Json::parse(R"({"n": 2, "d": 1, "subspaces": [[["1"], ["0"]]]})");
    CHECK(io::config_from_json(good).s() == 1);
    CHECK(kind_of([] { io::config_from_json(Json::parse(R"({"d": 1, "subspaces": []})")); }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::config_from_json(Json::parse(R"({"n": 2, "d": 1, "subspaces": []})")); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { io::config_from_json(Json::parse(R"({"n": 2, "d": 1, "subspaces": [[["1"]]]})")); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] {
            io::config_from_json(Json::parse(R"({"n": 2, "d": 1, "subspaces": [[["1", "2"], ["0", "1"]]]})"));
          }) == ErrorKind::Parse);
    CHECK(kind_of([] { io::config_from_json(Json::parse(R"({"n": -2, "d": 1, "subspaces": []})")); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] {
            io::config_from_json(Json::parse(R"({"n": 2, "d": 2, "subspaces": [[["1", "2"], ["2", "4"]]]})"));
          }) == ErrorKind::RankDeficient);
  }

  TEST_CASE("invariant file layout") {
    const Config c = sample_config(4, 2, 5, 103, 10);
    const CaseTag tag = classify_case(4, 2);
    const auto letters = case_letters(c.stacked(), tag, 2, 5);
    const InvariantVector v = make_invariant_vector(tag, 2, std::nullopt, letters);
    const Json j = io::invariants_to_json(c, v, letters);
    CHECK(j["case"]["kind"] == "divisible");
    CHECK(j["case"]["k"] == 2);
    CHECK_FALSE(j["case"].contains("e"));
    CHECK(j["max_word_len"] == 3);
    CHECK(j["letters"] == Json::array({"G_2_2", "G_2_3"}));
    CHECK(j["invariants"].size() == v.size());
    CHECK(j["invariants"][2]["word"] == Json::array({"G_2_2", "G_2_2"}));
    CHECK(io::rat_from_json(j["invariants"][0]["value"]) == v.values[0]);
    CHECK_FALSE(j.contains("note"));

    const Config odd = sample_config(3, 2, 4, 103, 10);
    const CaseTag otag = classify_case(3, 2);
    const auto none = case_letters(odd.stacked(), otag, 2, 4);
    const Json empty = io::invariants_to_json(odd, make_invariant_vector(otag, 1, std::nullopt, none), none);
    CHECK(empty["case"]["kind"] == "odd");
    CHECK(empty["case"]["e"] == 1);
    CHECK(empty["invariants"].empty());
    CHECK(empty.contains("note"));
  }

  TEST_CASE("letter grid round trip through an invariant file") {
    const Config c = sample_config(6, 2, 6, 104, 10);
    const CaseTag tag = classify_case(6, 2);
    const auto letters = case_letters(c.stacked(), tag, 2, 6);
    const Json j = io::invariants_to_json(c, make_invariant_vector(tag, 2, 1, letters), letters);
    const auto grid = io::letter_grid_from_json(Json::parse(io::dump(j)));
    CHECK(grid.letters == letters.mats);
    CHECK(matrix_data(embed(grid)).letters == letters.mats);

    Json broken = j;
    broken["letters"][0] = "G_9_9";
    CHECK(kind_of([&] { io::letter_grid_from_json(broken); }) == ErrorKind::Parse);
    Json odd = j;
    odd["case"]["kind"] = "odd";
    CHECK(kind_of([&] { io::letter_grid_from_json(odd); }) == ErrorKind::UnsupportedCase);
    Json missing = j;
    missing.erase("letter_matrices");
    CHECK(kind_of([&] { io::letter_grid_from_json(missing); }) == ErrorKind::Parse);
  }

  TEST_CASE("files") {
    const auto dir = std::filesystem::temp_directory_path() / "grinv_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "c.json";
    const Config c = sample_config(3, 2, 5, 105, 10);
    io::write_text_atomic(path, io::dump(io::config_to_json(c)));
    CHECK(io::config_from_json(io::read_json(path)) == c);
    CHECK_FALSE(std::filesystem::exists(dir / "c.json.tmp"));
    {
      std::ofstream bad(dir / "bad.json");
      bad << "{not json";
    }
    CHECK(kind_of([&] { io::read_json(dir / "bad.json"); }) == ErrorKind::Parse);
    CHECK(kind_of([&] { io::read_json(dir / "missing.json"); }) == ErrorKind::Parse);
    CHECK_THROWS((void)io::write_text_atomic(dir / "no_such_dir" / "x.json", "{}\n"));
    std::filesystem::remove_all(dir);
  }
}
