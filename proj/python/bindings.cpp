#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "grinv/divisible.hpp"
#include "grinv/error.hpp"
#include "grinv/io.hpp"
#include "grinv/orbit.hpp"

namespace py = pybind11;
using namespace grinv;

namespace {

io::Json parse(const std::string& text) {
  try {
    return io::Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

Config parse_config(const std::string& text) { return io::config_from_json(parse(text)); }

std::string invariants_json(const std::string& config, std::optional<std::size_t> max_len) {
  const Config c = parse_config(config);
  const CaseTag tag = classify_case(c.n(), c.d());
  if (!tag.supported()) throw Error(ErrorKind::UnsupportedCase, "unsupported (n, d)");
  if (!general_position(c, tag)) throw Error(ErrorKind::Degenerate, "configuration is not in general position");
  const LetterSet<Rat> letters = case_letters(c.stacked(), tag, c.d(), c.s());
  const InvariantVector v = make_invariant_vector(tag, tag.letter_size(c.d()), max_len, letters);
  return io::invariants_to_json(c, v, letters).dump();
}

py::dict case_dict(std::size_t n, std::size_t d) {
  const CaseTag tag = classify_case(n, d);
  py::dict out;
  switch (tag.kind) {
    case CaseKind::Divisible:
      out["kind"] = "divisible";
      out["r"] = tag.r;
      break;
    case CaseKind::OddMultiple:
      out["kind"] = "odd";
      out["r"] = tag.r;
      out["e"] = tag.e;
      break;
    default:
      out["kind"] = "unsupported";
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_grinv, m) {
  m.doc() = "Exact rational invariants of subspace configurations";

  py::register_exception<Error>(m, "GrinvError", PyExc_ValueError);

  m.def("classify_case", &case_dict, py::arg("n"), py::arg("d"));
  m.def("enumerate_words", &enumerate_words, py::arg("alphabet_size"), py::arg("max_len"));
  m.def("letter_count", &letter_count, py::arg("n"), py::arg("d"), py::arg("s"));
  m.def("expected_quotient_dim", &expected_quotient_dim, py::arg("n"), py::arg("d"), py::arg("s"));

  m.def(
      "sample_config_json",
      [](std::size_t n, std::size_t d, std::size_t s, std::uint64_t seed, std::int64_t bound) {
        return io::config_to_json(sample_config(n, d, s, seed, bound)).dump();
      },
      py::arg("n"), py::arg("d"), py::arg("s"), py::arg("seed") = 1, py::arg("bound") = 10);
  m.def(
      "general_position_json", [](const std::string& c) { return general_position(parse_config(c)); },
      py::arg("config"));
  m.def("invariants_json", &invariants_json, py::arg("config"), py::arg("max_len") = std::nullopt);
  m.def(
      "same_orbit_test_json",
      [](const std::string& a, const std::string& b, std::optional<std::size_t> max_len) {
        return std::string(to_string(same_orbit_test(parse_config(a), parse_config(b), max_len)));
      },
      py::arg("a"), py::arg("b"), py::arg("max_len") = std::nullopt);
  m.def(
      "jacobian_rank_json",
      [](const std::string& c, std::optional<std::size_t> max_len) {
        const Config cfg = parse_config(c);
        return py::make_tuple(jacobian_rank(cfg, max_len), expected_quotient_dim(cfg.n(), cfg.d(), cfg.s()));
      },
      py::arg("config"), py::arg("max_len") = std::nullopt);
  m.def(
      "embed_json",
      [](const std::string& inv) {
        return io::config_to_json(embed(io::letter_grid_from_json(parse(inv)))).dump();
      },
      py::arg("invariant_file"));
}
