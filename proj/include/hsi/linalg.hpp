#pragma once

/**
 * @file linalg.hpp
 * @brief Exact matrix rank over Q (fraction-free elimination) or GF(p).
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hsi/error.hpp"

namespace hsi {

/// Coefficient field: characteristic 0 means the rationals.
class Field {
public:
    static constexpr Field rationals() { return Field(0); }

    static Field prime(std::uint64_t p)
    {
        if (!is_prime(p))
            throw input_error(std::to_string(p) + " is not prime");
        if (p > (std::uint64_t{1} << 31))
            throw input_error("prime fields are limited to p < 2^31");
        return Field(p);
    }

    constexpr std::uint64_t characteristic() const noexcept { return p_; }
    constexpr bool is_rationals() const noexcept { return p_ == 0; }

    std::string to_string() const { return p_ == 0 ? "q" : "p:" + std::to_string(p_); }

    friend constexpr bool operator==(Field, Field) = default;

    static constexpr bool is_prime(std::uint64_t p) noexcept
    {
        if (p < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                return false;
        return true;
    }

private:
    constexpr explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

/// Dense row-major integer matrix; boundary matrices only hold 0 and ±1.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<int> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    int& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    int operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

namespace detail {

/// Bareiss elimination; every intermediate entry is a minor, so divisions are exact.
inline std::size_t rank_rational(const IntMatrix& m)
{
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> a(m.rows, std::vector<cpp_int>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            a[i][j] = m(i, j);

    cpp_int prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            for (std::size_t j = col + 1; j < m.cols; ++j) {
                cpp_int num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                cpp_int q, r;
                boost::multiprecision::divide_qr(num, prev, q, r);
                if (r != 0)
                    throw invariant_error("fraction-free elimination produced an inexact division");
                a[i][j] = std::move(q);
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1U)
            r = r * b % p;
        b = b * b % p;
        e >>= 1U;
    }
    return r;
}

inline std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p)
{
    std::vector<std::vector<std::uint64_t>> a(m.rows, std::vector<std::uint64_t>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            const std::int64_t v = m(i, j) % static_cast<std::int64_t>(p);
            a[i][j] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
        }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == m.rows)
            continue;
        std::swap(a[pivot], a[rank]);
        const std::uint64_t inv = mod_pow(a[rank][col], p - 2, p);
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            if (a[i][col] == 0)
                continue;
            const std::uint64_t f = a[i][col] * inv % p;
            for (std::size_t j = col; j < m.cols; ++j)
                a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

inline std::size_t matrix_rank(const IntMatrix& m, Field field)
{
    if (m.rows == 0 || m.cols == 0)
        return 0;
    return field.is_rationals() ? detail::rank_rational(m) : detail::rank_mod_p(m, field.characteristic());
}

} // namespace hsi
