#include "covdepth/combinat.hpp"

#include <array>
#include <mutex>

#include "covdepth/errors.hpp"

namespace covdepth {

Int binomial(const Int& n, long k) {
    if (k < 0 || n < k) return 0;
    Int r;
    if (!n.fits_ulong_p()) {
        // Falling-factorial product; n beyond ulong never happens in practice
        // but the closed forms should not silently truncate if it does.
        Int num = 1;
        for (long i = 0; i < k; ++i) num *= n - i;
        Int den = 1;
        for (long i = 2; i <= k; ++i) den *= i;
        return num / den;
    }
    mpz_bin_uiui(r.get_mpz_t(), n.get_ui(), static_cast<unsigned long>(k));
    return r;
}

Int binomial(long n, long k) {
    if (n < 0) throw bad_input("negative binomial top");
    return binomial(Int(n), k);
}

const uint64_t* pascal_row_u64(int n) {
    constexpr int kMaxRow = 63;
    if (n < 0 || n > kMaxRow) throw too_large("Pascal row " + std::to_string(n) + " beyond uint64 range");
    static std::array<std::vector<uint64_t>, kMaxRow + 1> rows;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int i = 0; i <= kMaxRow; ++i) {
            rows[i].assign(i + 1, 1);
            for (int j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
        }
    });
    return rows[n].data();
}

Rat harmonic(long n) {
    if (n < 0) throw bad_input("harmonic number of negative index");
    Rat h = 0;
    for (long i = 1; i <= n; ++i) h += Rat(1, i);
    return h;
}

std::vector<Rat> harmonic_table(long n) {
    if (n < 0) throw bad_input("harmonic number of negative index");
    std::vector<Rat> t(n + 1);
    t[0] = 0;
    for (long i = 1; i <= n; ++i) t[i] = t[i - 1] + Rat(1, i);
    return t;
}

}  // namespace covdepth
