#pragma once

#include <memory>
#include <string>
#include <vector>

namespace covdepth {

/// Finite field F_q for a prime power q <= 2^16.
///
/// Elements are integer codes 0..q-1.  For a prime field the code is the
/// residue itself.  For an extension field F_{p^m} the code packs the
/// coefficient vector of the polynomial representation in base p: code
/// sum_i c_i p^i stands for the element sum_i c_i x^i.  In particular 0 and 1
/// are the additive and multiplicative identities in every field, and in
/// F_4 = F_2[x]/(x^2 + x + 1) the code 2 is x and 3 is x + 1.
///
/// Multiplication, inversion and powers run on log/antilog tables built over a
/// fixed generator: for extension fields the residue class of x (the canonical
/// modulus is chosen so x is primitive), for prime fields the smallest
/// primitive root mod p.  The canonical modulus is the first monic polynomial
/// of degree m, in packed-integer order of its coefficients, whose root
/// generates the multiplicative group; this makes element codes reproducible
/// across runs, platforms and versions.
///
/// Instances are interned: `Field::get(q)` returns a shared singleton, so
/// pointer equality decides whether two matrices live over the same field.
class Field {
    struct ConstructKey {};

public:
    static constexpr long kMaxOrder = 1L << 16;

    /// Shared instance for order q.  Throws NotPrimePower or TooLarge.
    static std::shared_ptr<const Field> get(long q);

    Field(long q, ConstructKey);
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    long order() const noexcept { return q_; }
    long characteristic() const noexcept { return p_; }
    int degree() const noexcept { return m_; }

    long add(long a, long b) const;
    long sub(long a, long b) const;
    long neg(long a) const;
    long mul(long a, long b) const;
    /// Throws DivisionByZero for a = 0.
    long inv(long a) const;
    long div(long a, long b) const;
    /// a^e for e >= 0, with pow(0, 0) = 1.
    long pow(long a, long e) const;

    /// Element code of the fixed multiplicative generator.
    long generator() const noexcept { return generator_; }

    /// Human-readable canonical modulus, e.g. "x^2 + x + 1" for F_4.
    std::string modulus_string() const;

private:
    void check_element(long a) const;
    std::vector<long> poly_mul_mod(const std::vector<long>& a, const std::vector<long>& b,
                                   const std::vector<long>& mod) const;
    long pack(const std::vector<long>& coeffs) const;
    std::vector<long> unpack(long v, int len) const;
    bool is_primitive_modulus(const std::vector<long>& f) const;
    std::vector<long> find_canonical_modulus() const;
    long smallest_prime_root() const;
    void build_prime_tables();
    void build_extension_tables();

    long q_ = 0;
    long p_ = 0;
    int m_ = 0;
    long generator_ = 0;
    std::vector<long> modulus_;  // little-endian coefficients, monic
    std::vector<long> exp_;      // exp_[i] = generator^i, i in [0, q-2]
    std::vector<long> log_;      // log_[a] for a != 0
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace covdepth
