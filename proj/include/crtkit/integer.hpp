#pragma once

/// Arbitrary-precision signed integer.
///
/// Sign-magnitude over base-2^32 limbs (little-endian, no trailing zero
/// limbs, zero = empty limb vector). Exact at any magnitude; the decimal
/// string form is the interchange format used by the CLI JSON schema.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crtkit {

class Int {
public:
    Int() = default;
    Int(long long v);
    Int(unsigned long long v);
    Int(int v) : Int(static_cast<long long>(v)) {}
    Int(long v) : Int(static_cast<long long>(v)) {}
    Int(unsigned v) : Int(static_cast<unsigned long long>(v)) {}
    Int(unsigned long v) : Int(static_cast<unsigned long long>(v)) {}

    static Int from_string(std::string_view s);
    std::string to_string() const;

    /// 2^k
    static Int pow2(std::size_t k);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }
    bool is_even() const { return !is_odd(); }
    bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    Int abs() const;
    Int operator-() const;

    /// Number of bits in the magnitude; 0 for zero.
    std::size_t bit_length() const;
    /// Bit i of the magnitude (LSB = 0).
    bool bit(std::size_t i) const;

    /// Pre: 0 <= value < 2^64.
    std::uint64_t to_uint64() const;
    bool fits_uint64() const { return !negative_ && bit_length() <= 64; }

    friend Int operator+(const Int& a, const Int& b);
    friend Int operator-(const Int& a, const Int& b);
    friend Int operator*(const Int& a, const Int& b);
    Int& operator+=(const Int& o) { return *this = *this + o; }
    Int& operator-=(const Int& o) { return *this = *this - o; }
    Int& operator*=(const Int& o) { return *this = *this * o; }

    /// Truncated division (quotient rounds toward zero, remainder takes the
    /// sign of the dividend), as in C++ built-in integers.
    /// Throws Error(division_by_zero) when b = 0.
    static std::pair<Int, Int> divmod(const Int& a, const Int& b);
    Int operator/(const Int& b) const { return divmod(*this, b).first; }
    Int operator%(const Int& b) const { return divmod(*this, b).second; }

    /// Canonical residue in [0, m). Pre: m >= 1.
    Int mod(const Int& m) const;

    friend bool operator==(const Int& a, const Int& b);
    friend std::strong_ordering operator<=>(const Int& a, const Int& b);

    friend std::ostream& operator<<(std::ostream& os, const Int& v) {
        return os << v.to_string();
    }

private:
    // Magnitude helpers; inputs are limb vectors without trailing zeros.
    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Pre: a >= b.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Knuth algorithm D on magnitudes; returns (quotient, remainder).
    static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
    divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);

    static void trim(std::vector<std::uint32_t>& v);
    void canonicalize();

    // (quotient, remainder) of the magnitude by a single limb; d != 0.
    friend std::pair<Int, std::uint32_t> divmod_u32(const Int& a, std::uint32_t d);
    friend std::uint32_t mod_u32(const Int& a, std::uint32_t d);

    std::vector<std::uint32_t> limbs_;
    bool negative_ = false;
};

/// Division by a machine word, fast path for decimal conversion and trial
/// division. Pre: a >= 0, d != 0. Returns (a / d, a mod d).
std::pair<Int, std::uint32_t> divmod_u32(const Int& a, std::uint32_t d);

/// Remainder only; no quotient allocation. Pre: a >= 0, d != 0.
std::uint32_t mod_u32(const Int& a, std::uint32_t d);

}  // namespace crtkit
