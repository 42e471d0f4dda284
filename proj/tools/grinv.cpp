// Command-line front end. Exit codes: 0 ok or Equivalent, 2 input error,
// 3 Distinct, 4 degenerate input or sampling exhausted, 5 Inconclusive.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "grinv/divisible.hpp"
#include "grinv/grassmann.hpp"
#include "grinv/io.hpp"
#include "grinv/orbit.hpp"

namespace {

using namespace grinv;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDistinct = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitInconclusive = 5;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Degenerate:
    case ErrorKind::DegenerateSamplingExhausted:
    case ErrorKind::Singular:
    case ErrorKind::WrongKernelDimension:
    case ErrorKind::ZeroPatternViolation:
      return kExitDegenerate;
    default:
      return kExitInput;
  }
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    io::write_text_atomic(out, text);
  }
}

Config load_config(const std::string& path) { return io::config_from_json(io::read_json(path)); }

void require_supported(const Config& c) {
  if (!classify_case(c.n(), c.d()).supported()) {
    throw Error(ErrorKind::UnsupportedCase, "(n, d) = (" + std::to_string(c.n()) + ", " + std::to_string(c.d()) +
                                                ") is neither n = rd nor n = (2r+1)e with d = 2e");
  }
}

void require_general(const Config& c) {
  require_supported(c);
  if (!general_position(c)) throw Error(ErrorKind::Degenerate, "configuration is not in general position");
}

struct GenArgs {
  std::size_t n = 0, d = 0, s = 0;
  std::uint64_t seed = 1;
  std::int64_t bound = 10;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  if (!classify_case(a.n, a.d).supported()) {
    throw Error(ErrorKind::UnsupportedCase, "unsupported (n, d)");
  }
  if (a.bound < 1) throw Error(ErrorKind::Parse, "--bound must be positive");
  emit(a.out, io::dump(io::config_to_json(sample_config(a.n, a.d, a.s, a.seed, a.bound))));
  return kExitOk;
}

int cmd_invariants(const std::string& in, std::optional<std::size_t> max_len, const std::string& out) {
  const Config c = load_config(in);
  require_general(c);
  const CaseTag tag = classify_case(c.n(), c.d());
  const LetterSet<Rat> letters = case_letters(c.stacked(), tag, c.d(), c.s());
  const InvariantVector v = make_invariant_vector(tag, tag.letter_size(c.d()), max_len, letters);
  emit(out, io::dump(io::invariants_to_json(c, v, letters)));
  return kExitOk;
}

int cmd_orbit_test(const std::string& a_path, const std::string& b_path, std::optional<std::size_t> max_len) {
  const Config a = load_config(a_path);
  const Config b = load_config(b_path);
  require_supported(a);
  require_supported(b);
  if (a.n() != b.n() || a.d() != b.d() || a.s() != b.s()) {
    throw Error(ErrorKind::ShapeMismatch, "configurations have different (n, d, s)");
  }
  const Verdict v = same_orbit_test(a, b, max_len);
  std::cout << to_string(v) << "\n";
  switch (v) {
    case Verdict::Equivalent:
      return kExitOk;
    case Verdict::Distinct:
      return kExitDistinct;
    default:
      return kExitInconclusive;
  }
}

int cmd_rank(const std::string& in, std::optional<std::size_t> max_len) {
  const Config c = load_config(in);
  require_general(c);
  std::cout << "rank " << jacobian_rank(c, max_len) << " / expected " << expected_quotient_dim(c.n(), c.d(), c.s())
            << "\n";
  return kExitOk;
}

int cmd_embed(const std::string& in, const std::string& out) {
  const Config c = embed(io::letter_grid_from_json(io::read_json(in)));
  emit(out, io::dump(io::config_to_json(c)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational invariants of tuples of subspaces under GL_n"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Sample a general-position configuration");
  gen_cmd->add_option("--n", gen.n, "Ambient dimension")->required();
  gen_cmd->add_option("--d", gen.d, "Subspace dimension")->required();
  gen_cmd->add_option("--s", gen.s, "Number of subspaces")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--bound", gen.bound, "Entries are drawn from [-bound, bound]")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (stdout when omitted)");

  std::string in, out, a_path, b_path;
  std::optional<std::size_t> max_len;

  auto* inv_cmd = app.add_subcommand("invariants", "Evaluate the trace invariants of a configuration");
  inv_cmd->add_option("--in", in, "Configuration file")->required();
  inv_cmd->add_option("--max-len", max_len, "Longest word (capped at the generating bound)");
  inv_cmd->add_option("--out", out, "Output file (stdout when omitted)");

  auto* orbit_cmd = app.add_subcommand("orbit-test", "Compare the invariants of two configurations");
  orbit_cmd->add_option("--a", a_path, "First configuration file")->required();
  orbit_cmd->add_option("--b", b_path, "Second configuration file")->required();
  orbit_cmd->add_option("--max-len", max_len, "Longest word");

  auto* rank_cmd = app.add_subcommand("rank", "Exact Jacobian rank of the invariant map");
  rank_cmd->add_option("--in", in, "Configuration file")->required();
  rank_cmd->add_option("--max-len", max_len, "Longest word");

  auto* embed_cmd = app.add_subcommand("embed", "Build a configuration from divisible-case letters");
  embed_cmd->add_option("--in", in, "Invariant file with letter matrices")->required();
  embed_cmd->add_option("--out", out, "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*inv_cmd) return cmd_invariants(in, max_len, out);
    if (*orbit_cmd) return cmd_orbit_test(a_path, b_path, max_len);
    if (*rank_cmd) return cmd_rank(in, max_len);
    if (*embed_cmd) return cmd_embed(in, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
