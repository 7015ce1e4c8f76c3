#include "covdepth/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "covdepth/errors.hpp"

namespace covdepth {
namespace {

// Smallest prime factor, or 0 for n < 2.
long smallest_prime_factor(long n) {
    if (n < 2) return 0;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    while (n > 1) {
        long p = smallest_prime_factor(n);
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    return out;
}

}  // namespace

Field::Field(long q, ConstructKey) : q_(q) {
    if (q < 2) throw not_prime_power("order " + std::to_string(q) + " is below 2");
    if (q > kMaxOrder)
        throw too_large("field order " + std::to_string(q) + " exceeds " + std::to_string(kMaxOrder),
                        std::to_string(q) + " elements");
    p_ = smallest_prime_factor(q);
    m_ = 0;
    long t = q;
    while (t > 1) {
        if (t % p_ != 0) throw not_prime_power(std::to_string(q) + " is not a prime power");
        t /= p_;
        ++m_;
    }
    if (m_ == 1) {
        // Prime field: modulus polynomial is x - generator-free; represent as {0, 1}
        // meaning the polynomial x (degree 1, no lower coefficients beyond 0).
        modulus_ = {0, 1};
        build_prime_tables();
    } else {
        modulus_ = find_canonical_modulus();
        build_extension_tables();
    }
}

std::shared_ptr<const Field> Field::get(long q) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const Field>(q, ConstructKey{});
    cache.emplace(q, f);
    return f;
}

// --- polynomial helpers over F_p, coefficient vectors little-endian ---------

std::vector<long> Field::poly_mul_mod(const std::vector<long>& a, const std::vector<long>& b,
                                      const std::vector<long>& mod) const {
    int dm = static_cast<int>(mod.size()) - 1;
    std::vector<long> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
    // mod is monic of degree dm
    for (int d = static_cast<int>(prod.size()) - 1; d >= dm; --d) {
        long c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int j = 0; j < dm; ++j)
            prod[d - dm + j] = ((prod[d - dm + j] - c * mod[j]) % p_ + p_) % p_;
    }
    prod.resize(dm);
    return prod;
}

long Field::pack(const std::vector<long>& coeffs) const {
    long v = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) v = v * p_ + coeffs[i];
    return v;
}

std::vector<long> Field::unpack(long v, int len) const {
    std::vector<long> c(len, 0);
    for (int i = 0; i < len; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

// Multiplicative order of x modulo f equals q - 1 iff x generates the unit
// group, i.e. f is primitive (hence irreducible).  Checking x^((q-1)/r) != 1
// for every prime r | q - 1 after confirming x^(q-1) = 1 decides this.
bool Field::is_primitive_modulus(const std::vector<long>& f) const {
    long order = q_ - 1;
    std::vector<long> x(m_, 0);
    if (m_ >= 2) x[1] = 1;
    auto pow_mod = [&](std::vector<long> base, long e) {
        std::vector<long> acc(m_, 0);
        acc[0] = 1;
        while (e > 0) {
            if (e & 1) acc = poly_mul_mod(acc, base, f);
            base = poly_mul_mod(base, base, f);
            e >>= 1;
        }
        return acc;
    };
    std::vector<long> one(m_, 0);
    one[0] = 1;
    if (pow_mod(x, order) != one) return false;
    for (long r : prime_factors(order))
        if (pow_mod(x, order / r) == one) return false;
    return true;
}

// Canonical modulus: the first monic degree-m polynomial, in packed-integer
// order of its low coefficients, whose root x is a generator.  This is a fixed
// deterministic table choice, stable across runs and platforms.
std::vector<long> Field::find_canonical_modulus() const {
    long pm = 1;
    for (int i = 0; i < m_; ++i) pm *= p_;
    for (long t = 0; t < pm; ++t) {
        std::vector<long> f = unpack(t, m_);
        f.push_back(1);
        if (is_primitive_modulus(f)) return f;
    }
    throw invariant_violation("no primitive polynomial of degree " + std::to_string(m_) +
                              " over F_" + std::to_string(p_));
}

long Field::smallest_prime_root() const {
    // Smallest generator of (Z/p)^*; p = 2 uses 1.
    if (p_ == 2) return 1;
    long order = p_ - 1;
    auto factors = prime_factors(order);
    for (long g = 2; g < p_; ++g) {
        bool ok = true;
        for (long r : factors) {
            long e = order / r, acc = 1, base = g % p_;
            while (e > 0) {
                if (e & 1) acc = acc * base % p_;
                base = base * base % p_;
                e >>= 1;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 1;
}

void Field::build_prime_tables() {
    generator_ = smallest_prime_root();
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    long acc = 1;
    for (long i = 0; i < q_ - 1; ++i) {
        exp_[i] = acc;
        log_[acc] = i;
        acc = acc * generator_ % p_;
    }
    if (acc != 1) throw invariant_violation("generator order mismatch in F_" + std::to_string(p_));
}

void Field::build_extension_tables() {
    // x itself is primitive by choice of modulus.
    std::vector<long> x(m_, 0);
    x[1] = 1;
    generator_ = pack(x);
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::vector<long> acc(m_, 0);
    acc[0] = 1;
    for (long i = 0; i < q_ - 1; ++i) {
        long packed = pack(acc);
        exp_[i] = packed;
        log_[packed] = i;
        acc = poly_mul_mod(acc, x, modulus_);
    }
    if (pack(acc) != 1) throw invariant_violation("generator order mismatch in F_" + std::to_string(q_));
}

long Field::add(long a, long b) const {
    check_element(a);
    check_element(b);
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return (a + b) % p_;
    long r = 0, mul = 1;
    while (a > 0 || b > 0) {
        r += (a % p_ + b % p_) % p_ * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return r;
}

long Field::neg(long a) const {
    check_element(a);
    if (p_ == 2) return a;
    if (m_ == 1) return (p_ - a) % p_;
    long r = 0, mul = 1;
    while (a > 0) {
        r += (p_ - a % p_) % p_ * mul;
        a /= p_;
        mul *= p_;
    }
    return r;
}

long Field::sub(long a, long b) const { return add(a, neg(b)); }

long Field::mul(long a, long b) const {
    check_element(a);
    check_element(b);
    if (a == 0 || b == 0) return 0;
    long s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
}

long Field::inv(long a) const {
    check_element(a);
    if (a == 0) throw division_by_zero("inverse of 0 in F_" + std::to_string(q_));
    long e = (q_ - 1 - log_[a]) % (q_ - 1);
    return exp_[e];
}

long Field::div(long a, long b) const { return mul(a, inv(b)); }

long Field::pow(long a, long e) const {
    check_element(a);
    if (e < 0) throw bad_input("negative exponent");
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[(log_[a] * (e % (q_ - 1))) % (q_ - 1)];
}

void Field::check_element(long a) const {
    if (a < 0 || a >= q_)
        throw index_out_of_range(std::to_string(a) + " is not an element code of F_" + std::to_string(q_));
}

std::string Field::modulus_string() const {
    if (m_ == 1) return "x";
    std::string s;
    for (int d = m_; d >= 0; --d) {
        long c = d == m_ ? 1 : modulus_[d];
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (d == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c) + "*";
            s += d == 1 ? "x" : "x^" + std::to_string(d);
        }
    }
    return s;
}

}  // namespace covdepth
