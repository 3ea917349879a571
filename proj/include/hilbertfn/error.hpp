#pragma once

#include <stdexcept>
#include <string>

namespace hilbertfn {

enum class Errc {
    invalid_matrix,
    dimension_mismatch,
    degenerate_parametrization,
    unsupported_degree,
    improper_intersection,
    ambient_mismatch,
    empty_input,
    not_contained,
    unsupported_residual,
    bound_violation,
    invalid_field,
    unknown_suite,
    parse_error,
    overflow,
};

inline const char* errc_name(Errc code) {
    switch (code) {
    case Errc::invalid_matrix: return "invalid-matrix";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::degenerate_parametrization: return "degenerate-parametrization";
    case Errc::unsupported_degree: return "unsupported-degree";
    case Errc::improper_intersection: return "improper-intersection";
    case Errc::ambient_mismatch: return "ambient-mismatch";
    case Errc::empty_input: return "empty-input";
    case Errc::not_contained: return "not-contained";
    case Errc::unsupported_residual: return "unsupported-residual";
    case Errc::bound_violation: return "bound-violation";
    case Errc::invalid_field: return "invalid-field";
    case Errc::unknown_suite: return "unknown-suite";
    case Errc::parse_error: return "parse-error";
    case Errc::overflow: return "overflow";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace hilbertfn
