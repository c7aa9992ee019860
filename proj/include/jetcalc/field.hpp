#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "jetcalc/errors.hpp"

namespace jetcalc {

/// A field usable as a coefficient domain. Elements are plain values; all
/// arithmetic goes through the field object so that runtime-parameterized
/// fields (prime fields) and stateless ones (the rationals) share one
/// interface.
template <class F>
concept FieldType = requires(const F f, const typename F::Elem a, const typename F::Elem b) {
    typename F::Elem;
    { f.zero() } -> std::same_as<typename F::Elem>;
    { f.one() } -> std::same_as<typename F::Elem>;
    { f.add(a, b) } -> std::same_as<typename F::Elem>;
    { f.sub(a, b) } -> std::same_as<typename F::Elem>;
    { f.mul(a, b) } -> std::same_as<typename F::Elem>;
    { f.neg(a) } -> std::same_as<typename F::Elem>;
    { f.inv(a) } -> std::same_as<typename F::Elem>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.eq(a, b) } -> std::same_as<bool>;
    { f.from_int(std::int64_t{}) } -> std::same_as<typename F::Elem>;
    { f.to_string(a) } -> std::same_as<std::string>;
    { f == f } -> std::same_as<bool>;
};

/// The rational numbers with arbitrary-precision arithmetic. Elements are
/// always kept in lowest terms with positive denominator (GMP canonical form).
class Rationals {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw MalformedInput("division by zero in Q");
        return Elem(1) / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_int(std::int64_t v) const {
        return Elem(static_cast<long>(v));
    }

    /// Parses "a" or "a/b"; the result is canonicalized.
    Elem from_string(const std::string& s) const {
        try {
            Elem q(s);
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw MalformedInput("cannot parse rational scalar '" + s + "'");
        }
    }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }

    bool operator==(const Rationals&) const = default;
};

/// GF(p) for a prime p < 2^31, elements stored as canonical representatives
/// in [0, p). Multiplication uses Barrett reduction with a precomputed
/// 2^64 / p quotient so that elimination-heavy inner loops avoid hardware
/// division.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (std::uint64_t{1} << 31))
            throw MalformedInput("prime field modulus must satisfy 2 <= p < 2^31");
        if (!is_prime(p)) throw MalformedInput("modulus " + std::to_string(p) + " is not prime");
        mu_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return reduce(a * b); }
    Elem inv(Elem a) const {
        if (a == 0) throw MalformedInput("division by zero in GF(p)");
        // extended Euclid on (a, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Elem>(t);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem from_int(std::int64_t v) const {
        std::int64_t m = v % static_cast<std::int64_t>(p_);
        if (m < 0) m += static_cast<std::int64_t>(p_);
        return static_cast<Elem>(m);
    }
    Elem from_string(const std::string& s) const {
        try {
            return from_int(std::stoll(s));
        } catch (const std::exception&) {
            throw MalformedInput("cannot parse GF(p) scalar '" + s + "'");
        }
    }

    /// Reduces x < p^2 modulo p.
    Elem reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(x) * mu_) >> 64);
        std::uint64_t r = x - q * p_;
        while (r >= p_) r -= p_;
        return r;
    }

    std::string to_string(Elem a) const { return std::to_string(a); }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    static bool is_prime(std::uint64_t n) {
        if (n < 4) return n >= 2;
        if (n % 2 == 0) return false;
        std::uint64_t d = n - 1;
        int s = 0;
        while (d % 2 == 0) {
            d /= 2;
            ++s;
        }
        // deterministic Miller-Rabin witnesses for n < 3.2e9
        for (std::uint64_t w : {std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{5}, std::uint64_t{7}}) {
            if (w % n == 0) continue;
            std::uint64_t x = pow_mod(w, d, n);
            if (x == 1 || x == n - 1) continue;
            bool composite = true;
            for (int i = 1; i < s; ++i) {
                x = static_cast<std::uint64_t>(
                    (static_cast<unsigned __int128>(x) * x) % n);
                if (x == n - 1) {
                    composite = false;
                    break;
                }
            }
            if (composite) return false;
        }
        return true;
    }

    static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1 % m;
        b %= m;
        while (e) {
            if (e & 1)
                r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % m);
            b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % m);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t p_;
    std::uint64_t mu_;
};

static_assert(FieldType<Rationals>);
static_assert(FieldType<PrimeField>);

}  // namespace jetcalc
