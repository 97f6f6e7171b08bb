#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace ziegler {

enum class Var : std::uint8_t { x = 0, y = 1, z = 2 };

/// Monomial x^a y^b z^c in the three homogeneous coordinates of P^2.
class Monomial {
public:
    constexpr Monomial() = default;
    constexpr Monomial(unsigned ex, unsigned ey, unsigned ez)
        : e_{static_cast<std::uint16_t>(ex), static_cast<std::uint16_t>(ey),
             static_cast<std::uint16_t>(ez)},
          deg_(static_cast<std::uint16_t>(ex + ey + ez)) {}

    static constexpr Monomial one() { return {}; }
    static constexpr Monomial of(Var v) {
        return v == Var::x ? Monomial(1, 0, 0) : v == Var::y ? Monomial(0, 1, 0) : Monomial(0, 0, 1);
    }

    constexpr unsigned exponent(Var v) const { return e_[static_cast<int>(v)]; }
    constexpr unsigned operator[](int i) const { return e_[i]; }
    constexpr unsigned degree() const { return deg_; }
    constexpr bool is_one() const { return deg_ == 0; }

    /// Packed key whose unsigned integer order is the graded reverse-lexicographic order
    /// with x > y > z: total degree first, then the smaller z exponent, then the smaller y.
    constexpr std::uint64_t grevlex_key() const {
        return (std::uint64_t{deg_} << 32) | (std::uint64_t{0xFFFFu - e_[2]} << 16) |
               std::uint64_t{0xFFFFu - e_[1]};
    }

    constexpr bool divides(const Monomial& m) const {
        return e_[0] <= m.e_[0] && e_[1] <= m.e_[1] && e_[2] <= m.e_[2];
    }

    friend constexpr Monomial operator*(const Monomial& a, const Monomial& b) {
        return {unsigned(a.e_[0] + b.e_[0]), unsigned(a.e_[1] + b.e_[1]), unsigned(a.e_[2] + b.e_[2])};
    }
    /// Exact quotient; requires b | a.
    friend constexpr Monomial operator/(const Monomial& a, const Monomial& b) {
        return {unsigned(a.e_[0] - b.e_[0]), unsigned(a.e_[1] - b.e_[1]), unsigned(a.e_[2] - b.e_[2])};
    }

    friend constexpr Monomial lcm(const Monomial& a, const Monomial& b) {
        return {a.e_[0] > b.e_[0] ? a.e_[0] : b.e_[0], a.e_[1] > b.e_[1] ? a.e_[1] : b.e_[1],
                a.e_[2] > b.e_[2] ? a.e_[2] : b.e_[2]};
    }
    friend constexpr Monomial gcd(const Monomial& a, const Monomial& b) {
        return {a.e_[0] < b.e_[0] ? a.e_[0] : b.e_[0], a.e_[1] < b.e_[1] ? a.e_[1] : b.e_[1],
                a.e_[2] < b.e_[2] ? a.e_[2] : b.e_[2]};
    }

    friend constexpr bool operator==(const Monomial& a, const Monomial& b) {
        return a.e_[0] == b.e_[0] && a.e_[1] == b.e_[1] && a.e_[2] == b.e_[2];
    }

    /// "x^2*y*z", or "1" for the unit monomial.
    std::string to_string() const;

private:
    std::array<std::uint16_t, 3> e_{0, 0, 0};
    std::uint16_t deg_ = 0;
};

/// Graded reverse-lexicographic comparison.
constexpr std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) {
    return a.grevlex_key() <=> b.grevlex_key();
}

/// Number of monomials of degree t in three variables.
constexpr long monomial_count(long t) { return t < 0 ? 0 : (t + 1) * (t + 2) / 2; }

}  // namespace ziegler

template <>
struct std::hash<ziegler::Monomial> {
    std::size_t operator()(const ziegler::Monomial& m) const noexcept {
        return std::hash<std::uint64_t>{}(m.grevlex_key());
    }
};
