#pragma once

/**
 * @file field.hpp
 * @brief Exact scalar fields: arbitrary-precision rationals and prime fields.
 *
 * A field type F is a small value object that knows how to build constants
 * (zero, one, integers) and parse/print scalars. Its value_type carries the
 * arithmetic operators. Everything downstream is templated on F.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "homyd/errors.hpp"

namespace homyd {

template <class F>
concept ExactField = std::equality_comparable<F> && requires(const F& f,
                                                             const typename F::value_type& a,
                                                             std::string_view text, long long n) {
    typename F::value_type;
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_int(n) } -> std::same_as<typename F::value_type>;
    { f.parse(text) } -> std::same_as<typename F::value_type>;
    { f.descriptor() } -> std::convertible_to<std::string>;
    { a + a } -> std::same_as<typename F::value_type>;
    { a - a } -> std::same_as<typename F::value_type>;
    { a * a } -> std::same_as<typename F::value_type>;
    { -a } -> std::same_as<typename F::value_type>;
    { a.inverse() } -> std::same_as<typename F::value_type>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
    { a == a } -> std::convertible_to<bool>;
};

// ---------------------------------------------------------------------------
// Rationals

class Rational {
   public:
    Rational() = default;
    explicit Rational(long long n) : v_(static_cast<long>(n)) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    Rational operator+(const Rational& o) const { return wrap(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return wrap(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return wrap(v_ * o.v_); }
    Rational operator-() const { return wrap(-v_); }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }

    Rational inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return wrap(1 / v_);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool operator==(const Rational& o) const { return v_ == o.v_; }

    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

   private:
    // GMP results are already canonical.
    static Rational wrap(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_{0};
};

struct RationalField {
    using value_type = Rational;

    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_int(long long n) const { return Rational(n); }

    /// Accepts "n", "-n", "n/d", "-n/d" with d != 0; the result is reduced.
    Rational parse(std::string_view text) const {
        std::string s(text);
        auto digits = [](std::string_view t) {
            if (t.empty()) return false;
            for (char c : t)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view body = text;
        if (!body.empty() && body.front() == '-') body.remove_prefix(1);
        auto slash = body.find('/');
        bool ok = slash == std::string_view::npos
                      ? digits(body)
                      : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
        if (!ok) throw DomainError("malformed rational scalar \"" + s + "\"");
        if (slash != std::string_view::npos) {
            auto den = body.substr(slash + 1);
            if (den.find_first_not_of('0') == std::string_view::npos)
                throw DomainError("zero denominator in \"" + s + "\"");
        }
        mpq_class q(s, 10);
        return Rational(std::move(q));
    }

    std::string descriptor() const { return "rational"; }
    bool operator==(const RationalField&) const = default;
};

// ---------------------------------------------------------------------------
// Prime fields Z/pZ, p < 2^32 so products fit in 64 bits.

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class ModP {
   public:
    ModP(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

    ModP operator+(const ModP& o) const {
        same(o);
        std::uint64_t s = v_ + o.v_;
        return {s >= p_ ? s - p_ : s, p_};
    }
    ModP operator-(const ModP& o) const {
        same(o);
        return {v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_};
    }
    ModP operator*(const ModP& o) const {
        same(o);
        return {(v_ * o.v_) % p_, p_};
    }
    ModP operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_}; }
    ModP& operator+=(const ModP& o) { return *this = *this + o; }

    /// Extended Euclid.
    ModP inverse() const {
        if (v_ == 0) throw DomainError("inverse of zero");
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
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
        return {static_cast<std::uint64_t>(t), p_};
    }

    bool is_zero() const { return v_ == 0; }
    bool operator==(const ModP& o) const { return v_ == o.v_ && p_ == o.p_; }

    std::string str() const { return std::to_string(v_); }
    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

   private:
    void same(const ModP& o) const {
        if (p_ != o.p_) throw DomainError("mixing residues of different characteristic");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

class PrimeField {
   public:
    using value_type = ModP;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (std::uint64_t{1} << 32)) throw DomainError("characteristic too large: " + std::to_string(p));
        if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    }

    ModP zero() const { return {0, p_}; }
    ModP one() const { return {1, p_}; }
    ModP from_int(long long n) const {
        auto p = static_cast<long long>(p_);
        long long r = n % p;
        if (r < 0) r += p;
        return {static_cast<std::uint64_t>(r), p_};
    }

    /// Accepts only reduced residues "0" .. "p-1".
    ModP parse(std::string_view text) const {
        if (text.empty() || text.size() > 19) throw DomainError("malformed residue \"" + std::string(text) + "\"");
        std::uint64_t v = 0;
        for (char c : text) {
            if (c < '0' || c > '9') throw DomainError("malformed residue \"" + std::string(text) + "\"");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        if (v >= p_)
            throw DomainError("residue " + std::string(text) + " is not reduced mod " + std::to_string(p_));
        return {v, p_};
    }

    std::string descriptor() const { return "prime:" + std::to_string(p_); }
    std::uint64_t characteristic() const { return p_; }
    bool operator==(const PrimeField&) const = default;

   private:
    std::uint64_t p_;
};

/// a^e by repeated squaring, e >= 0.
template <class S>
S power(S base, std::uint64_t e, S one) {
    S result = one;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

static_assert(ExactField<RationalField>);
static_assert(ExactField<PrimeField>);

}  // namespace homyd
