#pragma once

#include <cstddef>
#include <optional>

#include "grinv/grassmann.hpp"
#include "grinv/invariants.hpp"

namespace grinv {

/// Letters of the pipeline matching `tag`, over any scalar type.
template <Scalar T>
LetterSet<T> case_letters(const Mat<T>& stacked, const CaseTag& tag, std::size_t d, std::size_t s);

/// Dispatches to the divisible or odd pipeline. Throws UnsupportedCase or
/// Degenerate.
InvariantVector invariant_vector(const Config& c, std::optional<std::size_t> max_len = std::nullopt);

enum class Verdict { Equivalent, Distinct, Inconclusive };

std::string_view to_string(Verdict v);

/// Distinct when some invariant differs (a certificate). Equivalent when all
/// agree and both configurations are in general position, which decides
/// orbit equality only for generic pairs. Inconclusive otherwise.
Verdict same_orbit_test(const Config& a, const Config& b, std::optional<std::size_t> max_len = std::nullopt);

/// The number k of letters: (r-1)(s-r-1), 2(s-4) or 2r-4+(4r-2)(s-r-2) in
/// the nontrivial ranges, 0 where the space is almost homogeneous.
std::size_t letter_count(std::size_t n, std::size_t d, std::size_t s);

/// k*m^2 - (m^2 - 1), the dimension of k m x m matrices modulo conjugation
/// when the generic stabilizer is the scalars (k >= 2).
long conjugation_quotient_formula(std::size_t k, std::size_t m);

/// s*d(n-d) - (n^2 - 1): dim Gr^s minus dim PGL_n.
long configuration_count_formula(std::size_t n, std::size_t d, std::size_t s);

/// Transcendence degree of the invariant field: 0 when k = 0, m when k = 1
/// (a single matrix up to conjugation is determined by its m characteristic
/// coefficients), k*m^2 - (m^2 - 1) when k >= 2.
std::size_t expected_quotient_dim(std::size_t n, std::size_t d, std::size_t s);

/// Exact rank of d(word values)/d(basis entries), one jet pass per entry.
std::size_t jacobian_rank(const Config& c, std::optional<std::size_t> max_len = std::nullopt);

}  // namespace grinv
