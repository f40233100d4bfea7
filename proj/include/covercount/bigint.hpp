#ifndef COVERCOUNT_BIGINT_HPP
#define COVERCOUNT_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace covercount {

// All counts (orientations, factors, permanents, factorial products) are
// exact; they exceed 64 bits already for modest inputs.
using BigCount = boost::multiprecision::cpp_int;

// Thrown when an input violates a documented resource cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed input files / infeasible arguments.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

inline BigCount big_pow(const BigCount& base, unsigned exp) {
    BigCount r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

inline std::string to_decimal(const BigCount& x) { return x.str(); }

} // namespace covercount

#endif
