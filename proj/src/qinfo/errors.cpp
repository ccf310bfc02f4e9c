#include "qinfo/errors.hpp"

namespace qinfo {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::ok: return "ok";
        case Errc::invalid_argument: return "invalid_argument";
        case Errc::invalid_distribution: return "invalid_distribution";
        case Errc::bits_mode_requires_power_of_two: return "bits_mode_requires_power_of_two";
        case Errc::not_binary: return "not_binary";
        case Errc::not_hermitian: return "not_hermitian";
        case Errc::not_projector: return "not_projector";
        case Errc::dimension_too_large: return "dimension_too_large";
        case Errc::wrong_dimension: return "wrong_dimension";
        case Errc::dimension_mismatch: return "dimension_mismatch";
        case Errc::unphysical_vector: return "unphysical_vector";
        case Errc::invalid_density: return "invalid_density";
        case Errc::zero_probability_outcome: return "zero_probability_outcome";
        case Errc::unsupported_dimension: return "unsupported_dimension";
        case Errc::zero_field: return "zero_field";
        case Errc::parse_error: return "parse_error";
    }
    return "unknown";
}

} // namespace qinfo
