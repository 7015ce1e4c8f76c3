#include "covdepth/rational.hpp"

#include <cctype>

#include "covdepth/errors.hpp"

namespace covdepth {

std::string decimal_string(const Rat& value, int sig_digits) {
    if (sig_digits < 1) throw bad_input("need at least one significant digit");
    if (value == 0) return "0";
    Int num = abs(value.get_num());
    Int den = value.get_den();
    bool negative = value < 0;

    // Integer-part digit count decides how many fractional digits are kept.
    Int ip = num / den;
    std::string int_digits = ip.get_str();
    int int_len = ip == 0 ? 0 : static_cast<int>(int_digits.size());

    int frac_digits;
    if (int_len >= sig_digits) {
        frac_digits = 0;
    } else if (int_len > 0) {
        frac_digits = sig_digits - int_len;
    } else {
        // Leading zeros after the point do not count as significant.
        Int scaled = num;
        int zeros = 0;
        while (scaled * 10 < den) {
            scaled *= 10;
            ++zeros;
        }
        frac_digits = zeros + sig_digits;
    }

    // Round half to even at the last kept digit.
    Int scale = 1;
    for (int i = 0; i < frac_digits; ++i) scale *= 10;
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), Int(num * scale).get_mpz_t(), den.get_mpz_t());
    Int twice = r * 2;
    if (twice > den || (twice == den && mpz_odd_p(q.get_mpz_t())))
        q += 1;

    std::string digits = q.get_str();
    std::string out;
    if (frac_digits == 0) {
        out = digits;
    } else {
        if (static_cast<int>(digits.size()) <= frac_digits)
            digits.insert(0, frac_digits + 1 - digits.size(), '0');
        out = digits.substr(0, digits.size() - frac_digits) + "." +
              digits.substr(digits.size() - frac_digits);
    }
    return negative ? "-" + out : out;
}

Rat rat_from_decimal(const std::string& text) {
    if (text.empty()) throw bad_input("empty decimal literal");
    size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    Int num = 0;
    Int den = 1;
    bool seen_digit = false, seen_point = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            num = num * 10 + (c - '0');
            if (seen_point) den *= 10;
            seen_digit = true;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            throw bad_input("malformed decimal literal '" + text + "'");
        }
    }
    if (!seen_digit) throw bad_input("malformed decimal literal '" + text + "'");
    Rat r(num, den);
    r.canonicalize();
    return negative ? Rat(-r) : r;
}

bool decimal_close(const Rat& a, const Rat& b, int digits) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rat diff = a - b;
    if (diff < 0) diff = -diff;
    return diff * scale <= 1;
}

}  // namespace covdepth
