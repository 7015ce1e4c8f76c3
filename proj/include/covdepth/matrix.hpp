#pragma once

#include <cstdint>
#include <vector>

#include "covdepth/field.hpp"

namespace covdepth {

/// k x n matrix over a shared Field, row-major, entries as element codes.
/// Rows index 0..k-1 and columns 0..n-1 internally; the CLI layer converts
/// from 1-based user indices.
///
/// Two construction paths:
///  - `code_matrix` enforces the code-matrix invariants 2 <= k <= n and
///    rank k (throws RankDeficient otherwise); `full_rank_verified()` is true.
///  - `relaxed` accepts any shape k >= 0, n >= 0 with no rank requirement,
///    including zero columns and zero rows (dual of the full space).
class GenMatrix {
public:
    static GenMatrix code_matrix(FieldPtr field, int k, int n, const std::vector<long>& entries);
    static GenMatrix relaxed(FieldPtr field, int k, int n, const std::vector<long>& entries);

    const FieldPtr& field() const noexcept { return field_; }
    int rows() const noexcept { return k_; }
    int cols() const noexcept { return n_; }
    bool full_rank_verified() const noexcept { return full_rank_; }

    long entry(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }
    void set_entry(int r, int c, long v);
    std::vector<uint16_t> column(int c) const;
    std::vector<uint16_t> row(int r) const;
    bool column_is_zero(int c) const;

    bool operator==(const GenMatrix& o) const;

private:
    GenMatrix(FieldPtr field, int k, int n, const std::vector<long>& entries, bool checked);

    FieldPtr field_;
    int k_ = 0, n_ = 0;
    bool full_rank_ = false;
    std::vector<uint16_t> a_;
};

/// Sorted duplicate-free 0-based column indices.  `from_1based` validates
/// user input against the column count and throws IndexOutOfRange.
class ColumnSet {
public:
    ColumnSet() = default;
    explicit ColumnSet(std::vector<int> indices);
    static ColumnSet from_1based(const std::vector<long>& indices, int n);

    const std::vector<int>& indices() const noexcept { return idx_; }
    int size() const noexcept { return static_cast<int>(idx_.size()); }

private:
    std::vector<int> idx_;
};

/// Incremental echelon basis of a set of vectors in F^dim.  `insert` performs
/// forward elimination only and never rewrites stored rows, so removing the
/// row it added (pop_inserted) restores the exact previous state; the subset
/// enumeration kernels depend on that undo property.
class SpanBasis {
public:
    SpanBasis(const Field* f, int dim);

    int rank() const noexcept { return static_cast<int>(rows_.size()); }
    /// Reduce v in place against the basis (v becomes the residual).
    void reduce(std::vector<uint16_t>& v) const;
    bool contains(std::vector<uint16_t> v) const;
    /// Insert v if independent; returns the stored-row position or -1.
    int insert(std::vector<uint16_t> v);
    void pop_inserted(int position);
    /// Reduce the residual r against only the row at `position` (the row
    /// insert just added); keeps externally tracked residuals in sync.
    void reduce_against_row(std::vector<uint16_t>& r, int position) const;

private:
    const Field* f_;
    int dim_;
    std::vector<std::vector<uint16_t>> rows_;  // pivot-normalized, ordered by pivot
    std::vector<int> pivots_;
};

int rank(const GenMatrix& g);

/// Is v in the span of the chosen columns?  Zero columns contribute nothing.
bool span_contains(const GenMatrix& g, const ColumnSet& cols, const std::vector<uint16_t>& v);

/// Row-reduced echelon form with zero rows dropped.
GenMatrix rref(const GenMatrix& g);

bool row_space_equal(const GenMatrix& a, const GenMatrix& b);

/// Row reduction to (I_k | R).  Throws NotSystematizable when the first k
/// columns are dependent; columns are never permuted.
GenMatrix systematic_form(const GenMatrix& g);

/// Generator of the dual code: (n - rank) x n matrix H with g H^T = 0,
/// rows in the standard free-column order of the reduced form.  The full
/// space has the zero code (0 x n) as its dual.
GenMatrix dual_generator(const GenMatrix& g);

/// (I_k | I_k | ... | I_k | R) with x identity blocks from a systematic
/// input (I_k | R); x >= 1.  Throws NotSystematic when the input's first k
/// columns are not exactly I_k.
GenMatrix append_identities(const GenMatrix& g, int x);

/// Block-diagonal generator of the direct product; fields must be the same
/// instance (FieldMismatch otherwise).  A 0 x 0 factor acts as identity.
GenMatrix cartesian_product(const GenMatrix& a, const GenMatrix& b);

/// Generator of the sum of the two row spaces (stack and reduce).
GenMatrix row_space_sum(const GenMatrix& a, const GenMatrix& b);

}  // namespace covdepth
