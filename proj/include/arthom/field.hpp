// arthom: exact computations with bound quiver algebras.
//
// Coefficient fields. Two kinds are supported: the rationals (GMP-backed,
// arbitrary precision) and prime fields GF(p). All arithmetic is exact;
// elements are kept in canonical form (lowest terms over Q, residues
// 0..p-1 over GF(p)).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace arthom {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated caller contract (named precondition).
struct precondition_error : error {
    using error::error;
};

// Internal consistency failure: a certified property did not hold.
struct defect_error : error {
    using error::error;
};

/// Runtime descriptor of a coefficient field, as written in algebra files.
struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    long long p = 0;  // prime modulus when kind == prime

    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
    static FieldSpec prime(long long p) { return FieldSpec{Kind::prime, p}; }

    bool operator==(const FieldSpec&) const = default;

    std::string to_string() const
    {
        return kind == Kind::rationals ? "Q" : "GF(" + std::to_string(p) + ")";
    }
};

inline bool is_prime_number(long long n)
{
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// The field of rational numbers.
class Rationals {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long n) const { return Elem(static_cast<long>(n)); }
    Elem from_ratio(long long num, long long den) const
    {
        if (den == 0) throw error("division by zero in rational literal");
        Elem e(static_cast<long>(num), static_cast<long>(den));
        e.canonicalize();
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const
    {
        if (a == 0) throw error("division by zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    FieldSpec spec() const { return FieldSpec::rationals(); }
    long long characteristic() const { return 0; }

    bool operator==(const Rationals&) const = default;
};

/// A prime field GF(p). The modulus must be prime and fit comfortably in
/// 63 bits; products go through 128-bit intermediates.
class PrimeField {
public:
    using Elem = long long;

    PrimeField() : p_(2) {}
    explicit PrimeField(long long p) : p_(p)
    {
        if (!is_prime_number(p)) throw error("GF modulus " + std::to_string(p) + " is not prime");
    }

    long long modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return p_ == 1 ? 0 : 1; }
    Elem from_int(long long n) const
    {
        Elem r = n % p_;
        return r < 0 ? r + p_ : r;
    }
    Elem from_ratio(long long num, long long den) const { return mul(from_int(num), inv(from_int(den))); }

    Elem add(Elem a, Elem b) const
    {
        Elem r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    Elem sub(Elem a, Elem b) const
    {
        Elem r = a - b;
        return r < 0 ? r + p_ : r;
    }
    Elem mul(Elem a, Elem b) const
    {
        return static_cast<Elem>(static_cast<__int128>(a) * b % p_);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const
    {
        if (a == 0) throw error("division by zero in GF(" + std::to_string(p_) + ")");
        return pow(a, p_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const
    {
        Elem r = one(), base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::string to_string(Elem a) const { return std::to_string(a); }
    FieldSpec spec() const { return FieldSpec::prime(p_); }
    long long characteristic() const { return p_; }

    bool operator==(const PrimeField&) const = default;

private:
    long long p_;
};

}  // namespace arthom
