#ifndef QINFO_ERRORS_HPP
#define QINFO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qinfo {

enum class Errc {
    ok = 0,
    invalid_argument,
    invalid_distribution,
    bits_mode_requires_power_of_two,
    not_binary,
    not_hermitian,
    not_projector,
    dimension_too_large,
    wrong_dimension,
    dimension_mismatch,
    unphysical_vector,
    invalid_density,
    zero_probability_outcome,
    unsupported_dimension,
    zero_field,
    parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace qinfo

#endif
