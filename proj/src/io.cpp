#include "grinv/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "grinv/orbit.hpp"

namespace grinv::io {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t require_count(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw Error(ErrorKind::Parse, std::string("'") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string case_kind(const CaseTag& tag) {
  return tag.kind == CaseKind::Divisible ? "divisible" : "odd";
}

}  // namespace

Json to_json(const Rat& x) { return x.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw Error(ErrorKind::Parse, "rational entries must be strings \"p/q\"");
}

Json to_json(const MatQ& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatQ mat_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(rows) + " rows");
  }
  MatQ m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols) {
      throw Error(ErrorKind::Parse, "expected " + std::to_string(cols) + " entries in row " + std::to_string(i + 1));
    }
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rat_from_json(row[k]);
  }
  return m;
}

Json config_to_json(const Config& c) {
  Json j;
  j["n"] = c.n();
  j["d"] = c.d();
  Json subs = Json::array();
  for (const auto& v : c.subspaces()) subs.push_back(to_json(v.basis()));
  j["subspaces"] = std::move(subs);
  return j;
}

Config config_from_json(const Json& j) {
  const std::size_t n = require_count(j, "n");
  const std::size_t d = require_count(j, "d");
  const Json& subs = require(j, "subspaces");
  if (!subs.is_array() || subs.empty()) throw Error(ErrorKind::Parse, "'subspaces' must be a non-empty array");
  std::vector<Subspace> out;
  for (const auto& s : subs) out.emplace_back(mat_from_json(s, n, d));
  return Config(n, d, std::move(out));
}

Json invariants_to_json(const Config& c, const InvariantVector& v, const LetterSet<Rat>& letters) {
  Json j;
  j["n"] = c.n();
  j["d"] = c.d();
  j["s"] = c.s();
  Json kase;
  kase["kind"] = case_kind(v.tag);
  kase["r"] = v.tag.r;
  if (v.tag.kind == CaseKind::OddMultiple) kase["e"] = v.tag.e;
  kase["k"] = letters.size();
  j["case"] = std::move(kase);
  j["max_word_len"] = v.max_word_len;
  j["letters"] = letters.ids;
  Json mats = Json::array();
  for (const auto& m : letters.mats) mats.push_back(to_json(m));
  j["letter_matrices"] = std::move(mats);
  Json inv = Json::array();
  for (std::size_t w = 0; w < v.words.size(); ++w) {
    Json word = Json::array();
    for (auto idx : v.words[w]) word.push_back(v.letters.at(idx));
    Json entry;
    entry["word"] = std::move(word);
    entry["value"] = to_json(v.values[w]);
    inv.push_back(std::move(entry));
  }
  j["invariants"] = std::move(inv);
  if (letters.empty()) {
    j["note"] = "almost homogeneous range: every rational invariant is constant";
  }
  return j;
}

ReducedDivisible<Rat> letter_grid_from_json(const Json& j) {
  const std::size_t d = require_count(j, "d");
  const std::size_t s = require_count(j, "s");
  const Json& kase = require(j, "case");
  if (require(kase, "kind") != "divisible") {
    throw Error(ErrorKind::UnsupportedCase, "embedding is only available for the divisible case");
  }
  const std::size_t r = require_count(kase, "r");
  if (r < 2 || s <= r + 1) throw Error(ErrorKind::Parse, "letter grid needs r >= 2 and s > r + 1");
  const Json& ids = require(j, "letters");
  const Json& mats = require(j, "letter_matrices");
  const std::size_t count = (r - 1) * (s - r - 1);
  if (!ids.is_array() || !mats.is_array() || ids.size() != count || mats.size() != count) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(count) + " letters");
  }
  ReducedDivisible<Rat> rd{r, d, s, std::vector<MatQ>(count)};
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t i = 0, jj = 0;
    const std::string id = ids[k].is_string() ? ids[k].get<std::string>() : std::string{};
    if (std::sscanf(id.c_str(), "G_%zu_%zu", &i, &jj) != 2 || i < 2 || i > r || jj < 2 || jj > s - r) {
      throw Error(ErrorKind::Parse, "bad letter id '" + id + "'");
    }
    rd.at(i, jj) = mat_from_json(mats[k], d, d);
  }
  return rd;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, path.string() + ": " + ex.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + tmp.string());
    out << text;
    if (!out) throw Error(ErrorKind::Parse, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace grinv::io
