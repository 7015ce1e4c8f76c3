#pragma once

#include "covdepth/matrix.hpp"

namespace covdepth {

/// Canonical generator matrices for the code families used throughout.
/// Every constructor is deterministic: the same parameters always produce the
/// same matrix, entry for entry.

/// I_k over F_q; k >= 2.
GenMatrix identity_code(long q, int k);

/// Systematic generator (I_k | R) of a Reed-Solomon code of length n,
/// evaluation points 0, 1, ... in canonical element order, plus the extended
/// column (0,...,0,1)^T when n = q + 1.  Requires 2 <= k <= n <= q + 1
/// (LengthExceedsField beyond that).  Every k columns are independent.
GenMatrix mds_rs(long q, int k, int n);

/// Simplex code of dimension k over F_q: the columns are one representative
/// of every projective point, normalized so the first nonzero coordinate
/// is 1.  Column order: e_1, ..., e_k first (so the matrix is systematic),
/// then the remaining points in lexicographic order of their coordinate
/// vectors.  n = (q^k - 1)/(q - 1).
GenMatrix simplex(long q, int k);

/// Hamming code of redundancy r over F_q, i.e. the dual of simplex(q, r) on
/// the same coordinate order, row reduced to systematic form (I_k | R) with
/// k = n - r.  Works because the identity columns of the simplex generator
/// pin down the last r coordinates of every dual codeword.
GenMatrix hamming(long q, int r);

/// Binary extended Hamming code [2^r, 2^r - 1 - r]: hamming(2, r) plus an
/// overall parity column, systematic.  Self-dual for r = 3.
GenMatrix extended_hamming_binary(int r);

/// Binary Reed-Muller code RM(r, m).  Rows evaluate the monomials of degree
/// <= r (ordered by degree, then lexicographically by variable set) over all
/// points of F_2^m in counting order, x_1 the least significant bit.
GenMatrix reed_muller_binary(int r, int m);

/// Binary Golay code, n = 23 (cyclic, then row reduced to systematic form)
/// or n = 24 (extended by an overall parity column).
GenMatrix golay_binary(int n);

/// The 4 x 9 locally repairable example code over F_13 used in the balance
/// catalogue; systematic in no coordinate order, recovery balanced.
GenMatrix lrc_example_f13();

/// Sum of lrc_example_f13() and the 4-dimensional Reed-Solomon code with
/// evaluation points 0..8 over F_13, as a reduced 7 x 9 generator.
GenMatrix lrc_sum_code_f13();

/// Smallest weight of a nonzero codeword, by scanning all q^k messages.
/// Guard: q^k <= max_words (TooLarge otherwise).
long min_weight(const GenMatrix& g, long max_words = 1L << 22);

}  // namespace covdepth
