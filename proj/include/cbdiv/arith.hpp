/*
  arith.hpp

  Exact scalar types and error taxonomy used throughout the library.

  All quantities that enter divisor degrees are kept exact: arbitrary
  precision integers (boost cpp_int) and rationals (cpp_rational).
  Floating point appears only inside the Verlinde oracle, which rounds
  to an integer under a guard band and refuses to answer otherwise.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cbdiv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Invalid input at an API boundary (bad rank, inadmissible weight, ...).
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A mathematical identity the implementation is built on failed to hold.
/// Reaching this indicates a bug in a formula or a table, never bad input.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// The floating point oracle could not certify an integer value.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int out = 1;
    for (long i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

/// Exact floor division towards -infinity is never needed here; all
/// divisions below are asserted exact.
inline Int exact_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a) throw consistency_error("exact_div: remainder nonzero");
    return q;
}

inline long to_long(const Int& v) {
    return static_cast<long>(v);
}

/// Count of divisor degrees that passed the integrality/nonnegativity
/// guard since process start.  The verification suite reports it.
inline std::atomic<std::uint64_t>& degree_guard_counter() {
    static std::atomic<std::uint64_t> count{0};
    return count;
}

} // namespace cbdiv
