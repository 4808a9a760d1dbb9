#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dblpt {

enum class errc {
    empty_input,
    non_positive_part,
    not_weakly_decreasing,
    invalid_multiplicity,
    malformed_scheme,
    step_out_of_range,
    parameter_collision,
    box_too_small,
    invalid_config,
};

constexpr std::string_view to_string(errc code) noexcept
{
    switch (code) {
    case errc::empty_input: return "EmptyInput";
    case errc::non_positive_part: return "NonPositivePart";
    case errc::not_weakly_decreasing: return "NotWeaklyDecreasing";
    case errc::invalid_multiplicity: return "InvalidMultiplicity";
    case errc::malformed_scheme: return "MalformedScheme";
    case errc::step_out_of_range: return "StepOutOfRange";
    case errc::parameter_collision: return "ParameterCollision";
    case errc::box_too_small: return "BoxTooSmall";
    case errc::invalid_config: return "InvalidConfig";
    }
    return "Unknown";
}

/// Invalid input to one of the library entry points.
class error : public std::invalid_argument {
public:
    error(errc code, const std::string& what)
        : std::invalid_argument(std::string(to_string(code)) + ": " + what), code_(code)
    { }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace dblpt
