#pragma once

#include <cstdint>
#include <vector>

#include "covdepth/rational.hpp"

namespace covdepth {

/// C(n, k) as an exact integer; 0 whenever k < 0 or k > n.  The vanishing
/// convention matters: every alternating sum in the closed forms relies on
/// out-of-range binomials dropping out silently.
Int binomial(const Int& n, long k);
Int binomial(long n, long k);

/// Pascal triangle of C(n, k) for n <= 63 (the largest row that fits uint64).
/// Row pointers are valid for the lifetime of the process.
const uint64_t* pascal_row_u64(int n);

/// H_n = sum_{i=1}^{n} 1/i, H_0 = 0.
Rat harmonic(long n);

/// Harmonic numbers H_0..H_n as one table; cheaper than n calls when a
/// formula consumes every prefix.
std::vector<Rat> harmonic_table(long n);

}  // namespace covdepth
