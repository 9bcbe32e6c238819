#pragma once

#include <cliqueval/error.hpp>

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace cliqueval {

/// Exact rational in lowest terms with a positive denominator.
/// Overflow of the 64-bit representation raises ErrorKind::limit.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num) : _num(num) {}
    Rational(std::int64_t num, std::int64_t den)
    {
        if (den == 0)
            throw Error(ErrorKind::invalid_argument, "rational with zero denominator");
        assign(num, den);
    }

    auto num() const noexcept -> std::int64_t { return _num; }
    auto den() const noexcept -> std::int64_t { return _den; }

    friend auto operator+(const Rational & a, const Rational & b) -> Rational
    {
        return from_wide(static_cast<__int128>(a._num) * b._den + static_cast<__int128>(b._num) * a._den,
                static_cast<__int128>(a._den) * b._den);
    }

    friend auto operator-(const Rational & a, const Rational & b) -> Rational
    {
        return from_wide(static_cast<__int128>(a._num) * b._den - static_cast<__int128>(b._num) * a._den,
                static_cast<__int128>(a._den) * b._den);
    }

    friend auto operator*(const Rational & a, const Rational & b) -> Rational
    {
        return from_wide(static_cast<__int128>(a._num) * b._num, static_cast<__int128>(a._den) * b._den);
    }

    friend auto operator/(const Rational & a, const Rational & b) -> Rational
    {
        if (b._num == 0)
            throw Error(ErrorKind::invalid_argument, "rational division by zero");
        return from_wide(static_cast<__int128>(a._num) * b._den, static_cast<__int128>(a._den) * b._num);
    }

    friend auto operator==(const Rational &, const Rational &) -> bool = default;

    friend auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering
    {
        auto lhs = static_cast<__int128>(a._num) * b._den;
        auto rhs = static_cast<__int128>(b._num) * a._den;
        return lhs < rhs ? std::strong_ordering::less : lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    auto to_string() const -> std::string
    {
        return _den == 1 ? std::to_string(_num) : std::to_string(_num) + "/" + std::to_string(_den);
    }

private:
    static auto from_wide(__int128 num, __int128 den) -> Rational
    {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        auto a = num < 0 ? -num : num, b = den;
        while (b != 0) {
            auto t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        if (num > INT64_MAX || num < -INT64_MAX || den > INT64_MAX)
            throw Error(ErrorKind::limit, "rational overflow");
        Rational r;
        r._num = static_cast<std::int64_t>(num);
        r._den = static_cast<std::int64_t>(den);
        return r;
    }

    void assign(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

    std::int64_t _num = 0;
    std::int64_t _den = 1;
};

}
