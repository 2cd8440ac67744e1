#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratint {

// Error taxonomy. The CLI maps these onto stable exit codes, so the set of
// kinds is part of the public contract.
enum class errc {
    parse_error,
    not_rational_in_var,
    mixed_radicand,
    division_by_zero,
    unsupported_algebraic_degree,
    unsupported_shape,
    not_representable,
    improper_integral,
    invalid_antiderivative,
    pole_at_point,
    no_convergence,
    domain_error,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::parse_error: return "ParseError";
        case errc::not_rational_in_var: return "NotRationalInVar";
        case errc::mixed_radicand: return "MixedRadicand";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::unsupported_algebraic_degree: return "UnsupportedAlgebraicDegree";
        case errc::unsupported_shape: return "UnsupportedShape";
        case errc::not_representable: return "NotRepresentable";
        case errc::improper_integral: return "ImproperIntegral";
        case errc::invalid_antiderivative: return "InvalidAntiderivative";
        case errc::pole_at_point: return "PoleAtPoint";
        case errc::no_convergence: return "NoConvergence";
        case errc::domain_error: return "DomainError";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

// Byte range into the input text; both offsets land on UTF-8 boundaries.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

class parse_error : public error {
  public:
    parse_error(SourceSpan span, const std::string& expected)
        : error(errc::parse_error,
                "error at " + std::to_string(span.begin) + ".." + std::to_string(span.end) +
                    ": expected " + expected),
          span_(span), expected_(expected) {}

    SourceSpan span() const { return span_; }
    const std::string& expected() const { return expected_; }

  private:
    SourceSpan span_;
    std::string expected_;
};

}  // namespace ratint
