#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace crtkit {

/// Library-wide exception. `code()` is a stable machine-readable identifier
/// (snake_case, e.g. "not_pairwise_coprime") used verbatim by the CLI's
/// error JSON; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
// Input / hypothesis violations (CLI exit 2).
inline constexpr const char* bad_integer = "bad_integer";
inline constexpr const char* bad_arguments = "bad_arguments";
inline constexpr const char* bad_input = "bad_input";
inline constexpr const char* length_mismatch = "length_mismatch";
inline constexpr const char* non_positive_modulus = "non_positive_modulus";
inline constexpr const char* not_pairwise_coprime = "not_pairwise_coprime";
inline constexpr const char* not_coprime = "not_coprime";
inline constexpr const char* not_a_solution = "not_a_solution";
inline constexpr const char* not_a_partition = "not_a_partition";
inline constexpr const char* not_prime = "not_prime";
inline constexpr const char* division_by_zero = "division_by_zero";
inline constexpr const char* invalid_modulus = "invalid_modulus";
inline constexpr const char* ring_mismatch = "ring_mismatch";
inline constexpr const char* field_mismatch = "field_mismatch";
inline constexpr const char* base_mismatch = "base_mismatch";
inline constexpr const char* domain_mismatch = "domain_mismatch";
inline constexpr const char* out_of_range = "out_of_range";
inline constexpr const char* bound_exceeded = "bound_exceeded";
inline constexpr const char* search_bound_exceeded = "search_bound_exceeded";
inline constexpr const char* factor_bound_exceeded = "factor_bound_exceeded";
inline constexpr const char* hypothesis_violated = "hypothesis_violated";
// Internal invariant failures (CLI exit 3).
inline constexpr const char* internal_invariant = "internal_invariant";
inline constexpr const char* verification_mismatch = "verification_mismatch";
}  // namespace errc

}  // namespace crtkit
