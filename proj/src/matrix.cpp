#include "covdepth/matrix.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "covdepth/errors.hpp"

namespace covdepth {

GenMatrix::GenMatrix(FieldPtr field, int k, int n, const std::vector<long>& entries, bool checked)
    : field_(std::move(field)), k_(k), n_(n), full_rank_(checked) {
    if (static_cast<long>(entries.size()) != static_cast<long>(k) * n)
        throw bad_input("expected " + std::to_string(static_cast<long>(k) * n) + " entries, got " +
                        std::to_string(entries.size()));
    a_.reserve(entries.size());
    for (long e : entries) {
        if (e < 0 || e >= field_->order())
            throw index_out_of_range("entry " + std::to_string(e) + " is not an element of F_" +
                                     std::to_string(field_->order()));
        a_.push_back(static_cast<uint16_t>(e));
    }
}

GenMatrix GenMatrix::code_matrix(FieldPtr field, int k, int n, const std::vector<long>& entries) {
    if (k < 2 || k > n)
        throw bad_input("code matrix needs 2 <= k <= n, got k=" + std::to_string(k) +
                        " n=" + std::to_string(n));
    GenMatrix g(std::move(field), k, n, entries, true);
    if (rank(g) != k) throw rank_deficient("rows do not have rank " + std::to_string(k));
    return g;
}

GenMatrix GenMatrix::relaxed(FieldPtr field, int k, int n, const std::vector<long>& entries) {
    if (k < 0 || n < 0) throw bad_input("negative matrix dimension");
    return GenMatrix(std::move(field), k, n, entries, false);
}

void GenMatrix::set_entry(int r, int c, long v) {
    if (v < 0 || v >= field_->order()) throw index_out_of_range("entry out of field range");
    a_[static_cast<size_t>(r) * n_ + c] = static_cast<uint16_t>(v);
    full_rank_ = false;
}

std::vector<uint16_t> GenMatrix::column(int c) const {
    std::vector<uint16_t> v(k_);
    for (int r = 0; r < k_; ++r) v[r] = a_[static_cast<size_t>(r) * n_ + c];
    return v;
}

std::vector<uint16_t> GenMatrix::row(int r) const {
    return std::vector<uint16_t>(a_.begin() + static_cast<size_t>(r) * n_,
                                 a_.begin() + static_cast<size_t>(r + 1) * n_);
}

bool GenMatrix::column_is_zero(int c) const {
    for (int r = 0; r < k_; ++r)
        if (a_[static_cast<size_t>(r) * n_ + c] != 0) return false;
    return true;
}

bool GenMatrix::operator==(const GenMatrix& o) const {
    return field_->order() == o.field_->order() && k_ == o.k_ && n_ == o.n_ && a_ == o.a_;
}

ColumnSet::ColumnSet(std::vector<int> indices) : idx_(std::move(indices)) {
    std::sort(idx_.begin(), idx_.end());
    if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end())
        throw bad_input("duplicate column index in set");
    if (!idx_.empty() && idx_.front() < 0) throw index_out_of_range("negative column index");
}

ColumnSet ColumnSet::from_1based(const std::vector<long>& indices, int n) {
    std::vector<int> v;
    v.reserve(indices.size());
    for (long i : indices) {
        if (i < 1 || i > n)
            throw index_out_of_range("column index " + std::to_string(i) + " outside 1.." +
                                     std::to_string(n));
        v.push_back(static_cast<int>(i - 1));
    }
    return ColumnSet(std::move(v));
}

SpanBasis::SpanBasis(const Field* f, int dim) : f_(f), dim_(dim) {}

void SpanBasis::reduce(std::vector<uint16_t>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        long c = v[pivots_[r]];
        if (c == 0) continue;
        // rows are pivot-normalized, so the multiplier is c itself
        for (int j = 0; j < dim_; ++j)
            if (rows_[r][j] != 0) v[j] = static_cast<uint16_t>(f_->sub(v[j], f_->mul(c, rows_[r][j])));
    }
}

bool SpanBasis::contains(std::vector<uint16_t> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](uint16_t x) { return x == 0; });
}

int SpanBasis::insert(std::vector<uint16_t> v) {
    reduce(v);
    int pivot = -1;
    for (int j = 0; j < dim_; ++j)
        if (v[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot < 0) return -1;
    long inv = f_->inv(v[pivot]);
    for (int j = 0; j < dim_; ++j) v[j] = static_cast<uint16_t>(f_->mul(v[j], inv));
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return static_cast<int>(pos);
}

void SpanBasis::pop_inserted(int position) {
    rows_.erase(rows_.begin() + position);
    pivots_.erase(pivots_.begin() + position);
}

void SpanBasis::reduce_against_row(std::vector<uint16_t>& r, int position) const {
    long c = r[pivots_[position]];
    if (c == 0) return;
    const auto& row = rows_[position];
    for (int j = 0; j < dim_; ++j)
        if (row[j] != 0) r[j] = static_cast<uint16_t>(f_->sub(r[j], f_->mul(c, row[j])));
}

int rank(const GenMatrix& g) {
    SpanBasis basis(g.field().get(), g.cols());
    for (int r = 0; r < g.rows(); ++r) basis.insert(g.row(r));
    return basis.rank();
}

bool span_contains(const GenMatrix& g, const ColumnSet& cols, const std::vector<uint16_t>& v) {
    if (static_cast<int>(v.size()) != g.rows()) throw bad_input("target vector length != k");
    SpanBasis basis(g.field().get(), g.rows());
    for (int c : cols.indices()) {
        if (c >= g.cols()) throw index_out_of_range("column index beyond n");
        basis.insert(g.column(c));
    }
    return basis.contains(v);
}

namespace {

// In-place Gaussian elimination to reduced row echelon form.
// Returns the pivot column of each nonzero row, in order.
std::vector<int> rref_in_place(const Field& f, int k, int n, std::vector<uint16_t>& a) {
    auto at = [&](int r, int c) -> uint16_t& { return a[static_cast<size_t>(r) * n + c]; };
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < n && row < k; ++col) {
        int pr = -1;
        for (int r = row; r < k; ++r)
            if (at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = 0; c < n; ++c) std::swap(at(pr, c), at(row, c));
        long inv = f.inv(at(row, col));
        for (int c = 0; c < n; ++c) at(row, c) = static_cast<uint16_t>(f.mul(at(row, c), inv));
        for (int r = 0; r < k; ++r) {
            if (r == row) continue;
            long m = at(r, col);
            if (m == 0) continue;
            for (int c = 0; c < n; ++c)
                at(r, c) = static_cast<uint16_t>(f.sub(at(r, c), f.mul(m, at(row, c))));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

GenMatrix from_u16(const FieldPtr& f, int k, int n, const std::vector<uint16_t>& a) {
    std::vector<long> e(a.begin(), a.end());
    return GenMatrix::relaxed(f, k, n, e);
}

}  // namespace

GenMatrix rref(const GenMatrix& g) {
    std::vector<uint16_t> a;
    a.reserve(static_cast<size_t>(g.rows()) * g.cols());
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c) a.push_back(static_cast<uint16_t>(g.entry(r, c)));
    auto pivots = rref_in_place(*g.field(), g.rows(), g.cols(), a);
    int rk = static_cast<int>(pivots.size());
    a.resize(static_cast<size_t>(rk) * g.cols());
    return from_u16(g.field(), rk, g.cols(), a);
}

bool row_space_equal(const GenMatrix& a, const GenMatrix& b) {
    if (a.field()->order() != b.field()->order() || a.cols() != b.cols()) return false;
    return rref(a) == rref(b);
}

GenMatrix systematic_form(const GenMatrix& g) {
    GenMatrix r = rref(g);
    if (r.rows() != g.rows()) throw rank_deficient("matrix does not have full row rank");
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.rows(); ++j)
            if (r.entry(i, j) != (i == j ? 1 : 0))
                throw not_systematizable("first k columns are dependent; no column permutation is applied");
    return r;
}

GenMatrix dual_generator(const GenMatrix& g) {
    const auto& f = g.field();
    int n = g.cols();
    std::vector<uint16_t> a;
    a.reserve(static_cast<size_t>(g.rows()) * n);
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < n; ++c) a.push_back(static_cast<uint16_t>(g.entry(r, c)));
    auto pivots = rref_in_place(*f, g.rows(), n, a);
    int rk = static_cast<int>(pivots.size());

    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<long> h;
    h.reserve(static_cast<size_t>(n - rk) * n);
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        // kernel vector: 1 at the free column, -R entry at each pivot column
        std::vector<long> x(n, 0);
        x[free] = 1;
        for (int r = 0; r < rk; ++r) x[pivots[r]] = f->neg(a[static_cast<size_t>(r) * n + free]);
        h.insert(h.end(), x.begin(), x.end());
    }
    GenMatrix dual = GenMatrix::relaxed(f, n - rk, n, h);
    for (int r = 0; r < g.rows(); ++r)
        for (int d = 0; d < dual.rows(); ++d) {
            long s = 0;
            for (int c = 0; c < n; ++c) s = f->add(s, f->mul(g.entry(r, c), dual.entry(d, c)));
            if (s != 0) throw invariant_violation("dual generator fails annihilation check");
        }
    return dual;
}

GenMatrix append_identities(const GenMatrix& g, int x) {
    if (x < 1) throw bad_input("identity block count must be >= 1");
    int k = g.rows(), n = g.cols();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (g.entry(i, j) != (i == j ? 1 : 0))
                throw not_systematic("input is not in systematic form (I_k | R)");
    int nn = x * k + n - k;
    std::vector<long> e(static_cast<size_t>(k) * nn, 0);
    for (int i = 0; i < k; ++i) {
        for (int b = 0; b < x; ++b) e[static_cast<size_t>(i) * nn + b * k + i] = 1;
        for (int c = k; c < n; ++c) e[static_cast<size_t>(i) * nn + x * k + (c - k)] = g.entry(i, c);
    }
    return GenMatrix::code_matrix(g.field(), k, nn, e);
}

GenMatrix cartesian_product(const GenMatrix& a, const GenMatrix& b) {
    if (a.field().get() != b.field().get())
        throw field_mismatch("product factors live over different fields");
    int k = a.rows() + b.rows(), n = a.cols() + b.cols();
    std::vector<long> e(static_cast<size_t>(k) * n, 0);
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) e[static_cast<size_t>(r) * n + c] = a.entry(r, c);
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
            e[static_cast<size_t>(a.rows() + r) * n + a.cols() + c] = b.entry(r, c);
    if (a.rows() == 0 && a.cols() == 0) return b;
    if (b.rows() == 0 && b.cols() == 0) return a;
    if (a.full_rank_verified() && b.full_rank_verified() && k >= 2)
        return GenMatrix::code_matrix(a.field(), k, n, e);
    return GenMatrix::relaxed(a.field(), k, n, e);
}

GenMatrix row_space_sum(const GenMatrix& a, const GenMatrix& b) {
    if (a.field().get() != b.field().get()) throw field_mismatch("summands live over different fields");
    if (a.cols() != b.cols()) throw bad_input("summands have different lengths");
    std::vector<long> e;
    e.reserve(static_cast<size_t>(a.rows() + b.rows()) * a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) e.push_back(a.entry(r, c));
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) e.push_back(b.entry(r, c));
    return rref(GenMatrix::relaxed(a.field(), a.rows() + b.rows(), a.cols(), e));
}

}  // namespace covdepth
