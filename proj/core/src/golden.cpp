#include "kspoly/golden.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "kspoly/error.hpp"

namespace kspoly {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("golden-ring addition overflows");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("golden-ring subtraction overflows");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("golden-ring multiplication overflows");
    return r;
}

// Wide enough for a^2 with |a| <= 3 * 2^63.
using Wide = boost::multiprecision::int256_t;

const double kAlpha = (1.0 - std::sqrt(5.0)) / 2.0;

}  // namespace

double GoldenInt::value() const { return static_cast<double>(m) + static_cast<double>(n) * kAlpha; }

// m + n*alpha = (a - b*sqrt5)/2 with a = 2m + n, b = n.
int GoldenInt::sign() const {
    const Wide a = Wide(2) * m + n;
    const Wide b = Wide(n);
    const int sa = (a > 0) - (a < 0);
    const int sb = (b > 0) - (b < 0);
    if (sb == 0) return sa;
    if (sa == 0) return -sb;
    if (sa != sb) return sa;
    // Same sign: compare a^2 with 5 b^2.
    const Wide lhs = a * a;
    const Wide rhs = 5 * b * b;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : -sa;
}

std::string GoldenInt::text() const {
    if (n == 0) return std::to_string(m);
    std::string out;
    if (m != 0) out = std::to_string(m);
    const std::int64_t an = n < 0 ? -n : n;
    if (m != 0) out += n < 0 ? "-" : "+";
    else if (n < 0) out += "-";
    if (an != 1) out += std::to_string(an);
    return out + "a";
}

GoldenInt golden_add(GoldenInt a, GoldenInt b) { return {checked_add(a.m, b.m), checked_add(a.n, b.n)}; }
GoldenInt golden_sub(GoldenInt a, GoldenInt b) { return {checked_sub(a.m, b.m), checked_sub(a.n, b.n)}; }
GoldenInt golden_neg(GoldenInt a) { return golden_sub(GoldenInt{}, a); }

// (a + b x)(c + d x) with x^2 = x + 1.
GoldenInt golden_mul(GoldenInt a, GoldenInt b) {
    const std::int64_t bd = checked_mul(a.n, b.n);
    const std::int64_t m = checked_add(checked_mul(a.m, b.m), bd);
    const std::int64_t n = checked_add(checked_add(checked_mul(a.m, b.n), checked_mul(a.n, b.m)), bd);
    return {m, n};
}

double golden_value(GoldenInt g) { return g.value(); }

GoldenInt inner_product(const GoldenVector4& u, const GoldenVector4& v) {
    GoldenInt acc;
    for (std::size_t i = 0; i < 4; ++i) acc = acc + u[i] * v[i];
    return acc;
}

std::int64_t inner_product(const IntVector8& u, const IntVector8& v) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < 8; ++i) acc = checked_add(acc, checked_mul(u[i], v[i]));
    return acc;
}

GoldenVector4 negate(const GoldenVector4& v) {
    GoldenVector4 out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = -v[i];
    return out;
}

IntVector8 negate(const IntVector8& v) {
    IntVector8 out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = checked_sub(0, v[i]);
    return out;
}

GoldenVector4 scale(GoldenInt s, const GoldenVector4& v) {
    GoldenVector4 out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = s * v[i];
    return out;
}

std::array<double, 4> to_real(const GoldenVector4& v) {
    return {v[0].value(), v[1].value(), v[2].value(), v[3].value()};
}

std::array<double, 8> to_real(const IntVector8& v) {
    std::array<double, 8> out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = static_cast<double>(v[i]);
    return out;
}

int leading_sign(const GoldenVector4& v) {
    for (const auto& c : v)
        if (int s = c.sign(); s != 0) return s;
    return 0;
}

int leading_sign(const IntVector8& v) {
    for (auto c : v)
        if (c != 0) return c > 0 ? 1 : -1;
    return 0;
}

std::string to_string(const GoldenVector4& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < 4; ++i) out += (i ? ", " : "") + v[i].text();
    return out + ")";
}

std::string to_string(const IntVector8& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < 8; ++i) out += (i ? ", " : "") + std::to_string(v[i]);
    return out + ")";
}

}  // namespace kspoly
