#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace kspoly {

/// Exact element m + n*alpha of the golden ring Z[alpha], alpha = (1 - sqrt5)/2,
/// so alpha^2 = alpha + 1 and beta = 1 - alpha is the golden ratio.
/// All arithmetic is overflow-checked and throws OverflowError.
struct GoldenInt {
    std::int64_t m = 0;
    std::int64_t n = 0;

    constexpr GoldenInt() = default;
    constexpr GoldenInt(std::int64_t m_, std::int64_t n_ = 0) : m(m_), n(n_) {}

    static constexpr GoldenInt alpha() { return {0, 1}; }
    static constexpr GoldenInt beta() { return {1, -1}; }

    bool is_zero() const { return m == 0 && n == 0; }
    double value() const;
    /// Exact sign of m + n*alpha: -1, 0 or +1.
    int sign() const;
    std::string text() const;

    friend bool operator==(const GoldenInt&, const GoldenInt&) = default;
    friend auto operator<=>(const GoldenInt&, const GoldenInt&) = default;
};

GoldenInt golden_add(GoldenInt a, GoldenInt b);
GoldenInt golden_sub(GoldenInt a, GoldenInt b);
GoldenInt golden_mul(GoldenInt a, GoldenInt b);
GoldenInt golden_neg(GoldenInt a);
double golden_value(GoldenInt g);

inline GoldenInt operator+(GoldenInt a, GoldenInt b) { return golden_add(a, b); }
inline GoldenInt operator-(GoldenInt a, GoldenInt b) { return golden_sub(a, b); }
inline GoldenInt operator*(GoldenInt a, GoldenInt b) { return golden_mul(a, b); }
inline GoldenInt operator-(GoldenInt a) { return golden_neg(a); }

using GoldenVector4 = std::array<GoldenInt, 4>;
using IntVector8 = std::array<std::int64_t, 8>;

GoldenInt inner_product(const GoldenVector4& u, const GoldenVector4& v);
std::int64_t inner_product(const IntVector8& u, const IntVector8& v);

GoldenVector4 negate(const GoldenVector4& v);
IntVector8 negate(const IntVector8& v);
GoldenVector4 scale(GoldenInt s, const GoldenVector4& v);

std::array<double, 4> to_real(const GoldenVector4& v);
std::array<double, 8> to_real(const IntVector8& v);

/// Sign of the first nonzero coordinate (0 for the zero vector).
int leading_sign(const GoldenVector4& v);
int leading_sign(const IntVector8& v);

std::string to_string(const GoldenVector4& v);
std::string to_string(const IntVector8& v);

}  // namespace kspoly
