#include "covdepth/codes.hpp"

#include <algorithm>
#include <string>

#include "covdepth/errors.hpp"
#include "covdepth/rational.hpp"

namespace covdepth {
namespace {

constexpr long kMaxSimplexLength = 200000;

// All normalized projective representatives of F_q^k in lexicographic order
// of the coordinate vector (row 1 most significant).  A vector whose first
// nonzero coordinate sits later is lexicographically smaller, so the blocks
// run from pivot position k-1 down to 0.
std::vector<std::vector<long>> projective_points_lex(long q, int k) {
    std::vector<std::vector<long>> pts;
    for (int pivot = k - 1; pivot >= 0; --pivot) {
        int free = k - 1 - pivot;
        std::vector<long> suffix(free, 0);
        while (true) {
            std::vector<long> v(k, 0);
            v[pivot] = 1;
            for (int i = 0; i < free; ++i) v[pivot + 1 + i] = suffix[i];
            pts.push_back(v);
            int i = free - 1;
            while (i >= 0 && suffix[i] == q - 1) suffix[i--] = 0;
            if (i < 0) break;
            ++suffix[i];
        }
    }
    return pts;
}

GenMatrix from_columns(const FieldPtr& f, const std::vector<std::vector<long>>& cols) {
    int k = static_cast<int>(cols.front().size());
    int n = static_cast<int>(cols.size());
    std::vector<long> e(static_cast<size_t>(k) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < k; ++i) e[static_cast<size_t>(i) * n + j] = cols[j][i];
    if (k >= 2 && k <= n) return GenMatrix::code_matrix(f, k, n, e);
    return GenMatrix::relaxed(f, k, n, e);
}

GenMatrix append_parity_column(const GenMatrix& g) {
    const auto& f = g.field();
    int k = g.rows(), n = g.cols();
    std::vector<long> e(static_cast<size_t>(k) * (n + 1));
    for (int i = 0; i < k; ++i) {
        long s = 0;
        for (int j = 0; j < n; ++j) {
            e[static_cast<size_t>(i) * (n + 1) + j] = g.entry(i, j);
            s = f->add(s, g.entry(i, j));
        }
        e[static_cast<size_t>(i) * (n + 1) + n] = f->neg(s);
    }
    return GenMatrix::code_matrix(f, k, n + 1, e);
}

}  // namespace

GenMatrix identity_code(long q, int k) {
    if (k < 2) throw bad_input("identity code needs k >= 2");
    auto f = Field::get(q);
    std::vector<long> e(static_cast<size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i) e[static_cast<size_t>(i) * k + i] = 1;
    return GenMatrix::code_matrix(f, k, k, e);
}

GenMatrix mds_rs(long q, int k, int n) {
    auto f = Field::get(q);
    if (k < 2 || k > n) throw bad_input("need 2 <= k <= n");
    if (n > q + 1)
        throw length_exceeds_field("length " + std::to_string(n) + " exceeds q + 1 = " +
                                   std::to_string(q + 1));
    std::vector<std::vector<long>> cols;
    int plain = std::min<long>(n, q);
    for (int j = 0; j < plain; ++j) {
        std::vector<long> c(k);
        for (int i = 0; i < k; ++i) c[i] = f->pow(j, i);
        cols.push_back(std::move(c));
    }
    if (n == q + 1) {
        std::vector<long> c(k, 0);
        c[k - 1] = 1;
        cols.push_back(std::move(c));
    }
    return systematic_form(from_columns(f, cols));
}

GenMatrix simplex(long q, int k) {
    if (k < 2) throw bad_input("simplex needs k >= 2");
    auto f = Field::get(q);
    long n = 0;
    {
        Int ln = 1;
        for (int i = 0; i < k; ++i) ln *= q;
        ln = (ln - 1) / (q - 1);
        if (ln > kMaxSimplexLength)
            throw too_large("simplex length " + ln.get_str() + " exceeds " +
                                std::to_string(kMaxSimplexLength),
                            ln.get_str() + " columns");
        n = ln.get_si();
    }
    auto pts = projective_points_lex(q, k);
    if (static_cast<long>(pts.size()) != n) throw invariant_violation("projective point count mismatch");
    // Pull the identity representatives to the front, e_1 first.
    std::vector<std::vector<long>> cols;
    cols.reserve(pts.size());
    for (int i = 0; i < k; ++i) {
        std::vector<long> e(k, 0);
        e[i] = 1;
        cols.push_back(std::move(e));
    }
    for (auto& p : pts) {
        long nz = 0;
        for (long c : p) nz += c != 0;
        bool is_identity = nz == 1;
        if (!is_identity) cols.push_back(std::move(p));
    }
    return from_columns(f, cols);
}

GenMatrix hamming(long q, int r) {
    if (r < 2) throw bad_input("hamming needs redundancy r >= 2");
    GenMatrix s = simplex(q, r);
    GenMatrix d = dual_generator(s);
    if (d.rows() < 2) return rref(d);
    return systematic_form(d);
}

GenMatrix extended_hamming_binary(int r) { return append_parity_column(hamming(2, r)); }

GenMatrix reed_muller_binary(int r, int m) {
    if (m < 1 || r < 0 || r > m) throw bad_input("need 0 <= r <= m, m >= 1");
    if (m > 20) throw too_large("RM length 2^" + std::to_string(m));
    auto f = Field::get(2);
    long n = 1L << m;
    // Variable subsets by (degree, lexicographic on the sorted index list).
    std::vector<std::vector<int>> monomials;
    for (int deg = 0; deg <= r; ++deg)
        for (long mask = 0; mask < (1L << m); ++mask) {
            if (__builtin_popcountl(mask) != deg) continue;
            std::vector<int> vars;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) vars.push_back(i);
            monomials.push_back(vars);
        }
    std::sort(monomials.begin(), monomials.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    int k = static_cast<int>(monomials.size());
    std::vector<long> e(static_cast<size_t>(k) * n);
    for (int i = 0; i < k; ++i)
        for (long pt = 0; pt < n; ++pt) {
            long val = 1;
            for (int v : monomials[i]) val &= pt >> v;
            e[static_cast<size_t>(i) * n + pt] = val & 1;
        }
    if (k >= 2) return GenMatrix::code_matrix(f, k, static_cast<int>(n), e);
    return GenMatrix::relaxed(f, k, static_cast<int>(n), e);
}

GenMatrix golay_binary(int n) {
    if (n != 23 && n != 24) throw bad_input("golay length must be 23 or 24");
    auto f = Field::get(2);
    // Quadratic-residue generator polynomial of the [23,12,7] code.
    const int gdeg[] = {0, 2, 4, 5, 6, 10, 11};
    std::vector<long> e(static_cast<size_t>(12) * 23, 0);
    for (int i = 0; i < 12; ++i)
        for (int d : gdeg) e[static_cast<size_t>(i) * 23 + i + d] = 1;
    GenMatrix g = systematic_form(GenMatrix::code_matrix(f, 12, 23, e));
    if (n == 23) return g;
    return append_parity_column(g);
}

GenMatrix lrc_example_f13() {
    auto f = Field::get(13);
    std::vector<long> e = {
        1, 1, 1, 1, 1, 1, 1, 1,  1,
        1, 3, 9, 2, 6, 5, 4, 12, 10,
        1, 1, 1, 8, 8, 8, 12, 12, 12,
        1, 3, 9, 3, 9, 1, 9, 1,  3,
    };
    return GenMatrix::code_matrix(f, 4, 9, e);
}

GenMatrix lrc_sum_code_f13() {
    auto f = Field::get(13);
    // Non-systematic Vandermonde generator of the dimension-4 Reed-Solomon
    // code on evaluation points 0..8; same row space as mds_rs(13, 4, 9).
    std::vector<long> e(static_cast<size_t>(4) * 9);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 9; ++j) e[static_cast<size_t>(i) * 9 + j] = f->pow(j, i);
    GenMatrix rs = GenMatrix::code_matrix(f, 4, 9, e);
    GenMatrix sum = row_space_sum(lrc_example_f13(), rs);
    std::vector<long> se;
    se.reserve(static_cast<size_t>(sum.rows()) * sum.cols());
    for (int i = 0; i < sum.rows(); ++i)
        for (int j = 0; j < sum.cols(); ++j) se.push_back(sum.entry(i, j));
    return GenMatrix::code_matrix(f, sum.rows(), sum.cols(), se);
}

long min_weight(const GenMatrix& g, long max_words) {
    long q = g.field()->order();
    Int words = 1;
    for (int i = 0; i < g.rows(); ++i) words *= q;
    if (words > max_words)
        throw too_large("weight scan over q^k = " + words.get_str() + " words", words.get_str());
    const auto& f = g.field();
    long total = words.get_si();
    long best = g.cols() + 1;
    std::vector<long> msg(g.rows(), 0);
    for (long w = 1; w < total; ++w) {
        long t = w;
        for (int i = 0; i < g.rows(); ++i) {
            msg[i] = t % q;
            t /= q;
        }
        long weight = 0;
        for (int j = 0; j < g.cols(); ++j) {
            long s = 0;
            for (int i = 0; i < g.rows(); ++i)
                if (msg[i] != 0 && g.entry(i, j) != 0) s = f->add(s, f->mul(msg[i], g.entry(i, j)));
            weight += s != 0;
        }
        if (weight > 0) best = std::min(best, weight);
    }
    return best;
}

}  // namespace covdepth
