#pragma once

#include <functional>
#include <string>

#include "covdepth/errors.hpp"
#include "covdepth/rational.hpp"

namespace testutil {

// The kind() of the covdepth::Error thrown by f, or "" when f returns.
inline std::string thrown_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const covdepth::Error& e) {
        return e.kind();
    }
    return "";
}

inline covdepth::Rat frac(long num, long den) {
    covdepth::Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace testutil
