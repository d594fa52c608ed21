#ifndef K3CYCLO_INT_TYPES_HPP
#define K3CYCLO_INT_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace k3cyclo {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when a computation reaches a state the underlying theorems rule
/// out. CLI maps this to exit code 2.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline Int pow_int(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Exact perfect-square test; true for 0.
inline bool is_square_int(const Int& a) {
    if (a < 0) return false;
    Int r = boost::multiprecision::sqrt(a);
    return r * r == a;
}

inline int mod2(const Int& a) { return static_cast<int>(((a % 2) + 2) % 2); }

inline std::string to_string(const Int& a) { return a.str(); }

} // namespace k3cyclo

#endif
