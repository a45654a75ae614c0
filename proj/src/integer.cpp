#include "crtkit/integer.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "crtkit/error.hpp"

namespace crtkit {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

Int::Int(long long v) {
    if (v == 0) return;
    negative_ = v < 0;
    // Avoid overflow on LLONG_MIN by going through unsigned.
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(v) + 1
                                  : static_cast<std::uint64_t>(v);
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xFFFFFFFFu));
    if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

Int::Int(unsigned long long v) {
    if (v == 0) return;
    limbs_.push_back(static_cast<std::uint32_t>(v & 0xFFFFFFFFu));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void Int::trim(std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void Int::canonicalize() {
    trim(limbs_);
    if (limbs_.empty()) negative_ = false;
}

Int Int::abs() const {
    Int r = *this;
    r.negative_ = false;
    return r;
}

Int Int::operator-() const {
    Int r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

std::size_t Int::bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) +
           (32 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

bool Int::bit(std::size_t i) const {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

std::uint64_t Int::to_uint64() const {
    if (!fits_uint64())
        throw Error(errc::out_of_range, "integer does not fit in 64 bits: " + to_string());
    std::uint64_t r = 0;
    if (limbs_.size() > 1) r = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) r |= limbs_[0];
    return r;
}

Int Int::pow2(std::size_t k) {
    Int r;
    r.limbs_.assign(k / 32 + 1, 0);
    r.limbs_.back() = 1u << (k % 32);
    return r;
}

int Int::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> Int::add_mag(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
        r[i] = static_cast<std::uint32_t>(s & 0xFFFFFFFFu);
        carry = s >> 32;
    }
    r[big.size()] = static_cast<std::uint32_t>(carry);
    trim(r);
    return r;
}

std::vector<std::uint32_t> Int::sub_mag(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0) - borrow;
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(d);
    }
    trim(r);
    return r;
}

std::vector<std::uint32_t> Int::mul_mag(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFu);
            carry = cur >> 32;
        }
        r[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    trim(r);
    return r;
}

// Knuth TAOCP vol. 2, algorithm 4.3.1 D.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
Int::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (cmp_mag(a, b) < 0) return {{}, a};
    if (b.size() == 1) {
        std::vector<std::uint32_t> q(a.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<std::uint32_t>(cur / b[0]);
            rem = cur % b[0];
        }
        trim(q);
        std::vector<std::uint32_t> r;
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return {q, r};
    }

    const std::size_t n = b.size();
    const std::size_t m = a.size() - n;
    const unsigned shift = static_cast<unsigned>(std::countl_zero(b.back()));

    // Normalized copies: v.back() has its top bit set.
    std::vector<std::uint32_t> u(a.size() + 1, 0), v(n, 0);
    if (shift == 0) {
        std::copy(b.begin(), b.end(), v.begin());
        std::copy(a.begin(), a.end(), u.begin());
    } else {
        for (std::size_t i = n; i-- > 1;)
            v[i] = (b[i] << shift) | (b[i - 1] >> (32 - shift));
        v[0] = b[0] << shift;
        u[a.size()] = a.back() >> (32 - shift);
        for (std::size_t i = a.size(); i-- > 1;)
            u[i] = (a[i] << shift) | (a[i - 1] >> (32 - shift));
        u[0] = a[0] << shift;
    }

    std::vector<std::uint32_t> q(m + 1, 0);
    const std::uint64_t vtop = v[n - 1];
    const std::uint64_t vnext = v[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = num / vtop;
        std::uint64_t rhat = num % vtop;
        while (qhat >= kBase ||
               qhat * vnext > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= kBase) break;
        }

        // u[j .. j+n] -= qhat * v
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                             static_cast<std::int64_t>(p & 0xFFFFFFFFu) - borrow;
            if (t < 0) {
                t += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                         static_cast<std::int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large: add v back.
            t += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = c2 + u[i + j] + v[i];
                u[i + j] = static_cast<std::uint32_t>(s & 0xFFFFFFFFu);
                c2 = s >> 32;
            }
            t += static_cast<std::int64_t>(c2);
            t &= static_cast<std::int64_t>(kBase) - 1;
        }
        u[j + n] = static_cast<std::uint32_t>(t);
        q[j] = static_cast<std::uint32_t>(qhat);
    }

    // Denormalize remainder.
    std::vector<std::uint32_t> r(n, 0);
    if (shift == 0) {
        std::copy(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n), r.begin());
    } else {
        for (std::size_t i = 0; i + 1 < n; ++i)
            r[i] = (u[i] >> shift) | (u[i + 1] << (32 - shift));
        r[n - 1] = u[n - 1] >> shift;
    }
    trim(q);
    trim(r);
    return {q, r};
}

Int operator+(const Int& a, const Int& b) {
    Int r;
    if (a.negative_ == b.negative_) {
        r.limbs_ = Int::add_mag(a.limbs_, b.limbs_);
        r.negative_ = a.negative_;
    } else {
        int c = Int::cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return Int{};
        if (c > 0) {
            r.limbs_ = Int::sub_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_;
        } else {
            r.limbs_ = Int::sub_mag(b.limbs_, a.limbs_);
            r.negative_ = b.negative_;
        }
    }
    r.canonicalize();
    return r;
}

Int operator-(const Int& a, const Int& b) { return a + (-b); }

Int operator*(const Int& a, const Int& b) {
    Int r;
    r.limbs_ = Int::mul_mag(a.limbs_, b.limbs_);
    r.negative_ = !r.limbs_.empty() && (a.negative_ != b.negative_);
    return r;
}

std::pair<Int, Int> Int::divmod(const Int& a, const Int& b) {
    if (b.is_zero()) throw Error(errc::division_by_zero, "integer division by zero");
    auto [qm, rm] = divmod_mag(a.limbs_, b.limbs_);
    Int q, r;
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.negative_ = !q.limbs_.empty() && (a.negative_ != b.negative_);
    r.negative_ = !r.limbs_.empty() && a.negative_;
    return {q, r};
}

Int Int::mod(const Int& m) const {
    if (m.sign() <= 0)
        throw Error(errc::bad_arguments, "mod requires a positive modulus, got " + m.to_string());
    Int r = divmod(*this, m).second;
    if (r.is_negative()) r += m;
    return r;
}

bool operator==(const Int& a, const Int& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
}

std::strong_ordering operator<=>(const Int& a, const Int& b) {
    if (a.negative_ != b.negative_)
        return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = Int::cmp_mag(a.limbs_, b.limbs_);
    if (a.negative_) c = -c;
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
}

std::pair<Int, std::uint32_t> divmod_u32(const Int& a, std::uint32_t d) {
    Int q;
    q.limbs_.assign(a.limbs_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | a.limbs_[i];
        q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    q.canonicalize();
    return {q, static_cast<std::uint32_t>(rem)};
}

std::uint32_t mod_u32(const Int& a, std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        rem = (((rem << 32) | a.limbs_[i]) % d);
    return static_cast<std::uint32_t>(rem);
}

Int Int::from_string(std::string_view s) {
    if (s.empty()) throw Error(errc::bad_integer, "empty integer literal");
    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) throw Error(errc::bad_integer, "sign without digits");

    Int r;
    while (pos < s.size()) {
        // Consume up to 9 decimal digits at a time: r = r * 10^k + chunk.
        std::uint32_t chunk = 0;
        std::uint32_t scale = 1;
        std::size_t k = 0;
        for (; k < 9 && pos < s.size(); ++k, ++pos) {
            char c = s[pos];
            if (c < '0' || c > '9')
                throw Error(errc::bad_integer,
                            "invalid character in integer literal: " + std::string(s));
            chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
            scale *= 10;
        }
        r = r * Int(static_cast<unsigned long long>(scale)) +
            Int(static_cast<unsigned long long>(chunk));
    }
    if (neg && !r.is_zero()) r.negative_ = true;
    return r;
}

std::string Int::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    Int cur = abs();
    while (!cur.is_zero()) {
        auto [q, rem] = divmod_u32(cur, 1000000000u);
        cur = std::move(q);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace crtkit
