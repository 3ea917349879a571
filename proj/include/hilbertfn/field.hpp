#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "sampler.hpp"

namespace hilbertfn {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Scalar arithmetic policy. A field object is a small value (a modulus, or
/// nothing) and elements are plain values of `value_type`; matrices carry the
/// field they were built over so that arithmetic never mixes moduli.
template <class F>
concept ExactField = requires(const F& f, const typename F::value_type& a, std::int64_t k,
                              GenericSampler& s) {
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.add(a, a) } -> std::same_as<typename F::value_type>;
    { f.sub(a, a) } -> std::same_as<typename F::value_type>;
    { f.mul(a, a) } -> std::same_as<typename F::value_type>;
    { f.neg(a) } -> std::same_as<typename F::value_type>;
    { f.inv(a) } -> std::same_as<typename F::value_type>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.from_integer(k) } -> std::same_as<typename F::value_type>;
    { f.sample(s) } -> std::same_as<typename F::value_type>;
    { f.contains(a) } -> std::convertible_to<bool>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.mode_name() } -> std::convertible_to<std::string>;
    { f == f } -> std::convertible_to<bool>;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

/// F_p for a prime p < 2^32, so that a product of two residues fits in 64 bits.
class PrimeField {
public:
    using value_type = std::uint64_t;
    static constexpr std::uint64_t default_modulus = 2147483647ULL;

    explicit PrimeField(std::uint64_t p = default_modulus) : p_(p) {
        if (p >= (1ULL << 32)) throw Error(Errc::invalid_field, "modulus must be below 2^32");
        if (!is_prime(p)) throw Error(Errc::invalid_field, std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const noexcept { return p_; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }
    value_type add(value_type a, value_type b) const noexcept {
        const value_type s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    value_type mul(value_type a, value_type b) const noexcept { return (a * b) % p_; }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    value_type pow(value_type a, std::uint64_t e) const noexcept {
        value_type r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    value_type inv(value_type a) const {
        if (a == 0) throw Error(Errc::invalid_matrix, "inverse of zero");
        return pow(a, p_ - 2);
    }
    bool is_zero(value_type a) const noexcept { return a == 0; }
    bool contains(value_type a) const noexcept { return a < p_; }

    value_type from_integer(std::int64_t k) const noexcept {
        const auto p = static_cast<std::int64_t>(p_);
        const std::int64_t r = k % p;
        return static_cast<value_type>(r < 0 ? r + p : r);
    }
    value_type from_big(const BigInt& k) const {
        BigInt r = k % p_;
        if (r < 0) r += p_;
        return static_cast<value_type>(r);
    }
    value_type from_rational(const BigRational& q) const {
        return mul(from_big(boost::multiprecision::numerator(q)),
                   inv(from_big(boost::multiprecision::denominator(q))));
    }

    value_type sample(GenericSampler& s) const {
        if (s.bound()) return from_integer(s.uniform_int(-*s.bound(), *s.bound()));
        return s.uniform_below(p_);
    }

    std::string to_string(value_type a) const { return std::to_string(a); }
    std::string mode_name() const { return "prime-field"; }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

/// Q with arbitrary-precision numerators and denominators, always in lowest terms.
class RationalField {
public:
    using value_type = BigRational;
    /// Draw range [-B, B] used when the sampler carries no bound of its own.
    static constexpr std::int64_t default_sample_bound = 1 << 20;

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const {
        if (a == 0) throw Error(Errc::invalid_matrix, "inverse of zero");
        return value_type(1) / a;
    }
    bool is_zero(const value_type& a) const { return a == 0; }
    bool contains(const value_type& a) const { return boost::multiprecision::denominator(a) > 0; }

    value_type from_integer(std::int64_t k) const { return value_type(k); }

    value_type sample(GenericSampler& s) const {
        const std::int64_t b = s.bound().value_or(default_sample_bound);
        return value_type(s.uniform_int(-b, b));
    }

    std::string to_string(const value_type& a) const { return a.str(); }
    std::string mode_name() const { return "rational"; }

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

static_assert(ExactField<PrimeField>);
static_assert(ExactField<RationalField>);

} // namespace hilbertfn
