#pragma once

#include <array>
#include <cstdint>
#include <cmath>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace boolspec {

using u128 = unsigned __int128;
using i128 = __int128;

// Fixed-width unsigned integer of Limbs x 64 bits, little-endian limb order.
// Cross-multiplied inequality sides reach ~2^156 at n = 24, past what u128
// holds, so exact verdicts are carried in wide_uint<4> (256 bits) and
// products of two sides in wide_uint<6>.
template <int Limbs>
struct wide_uint {
    static_assert(Limbs >= 1);
    std::array<std::uint64_t, Limbs> w{};

    constexpr wide_uint() = default;

    static constexpr wide_uint from_u64(std::uint64_t v) {
        wide_uint r;
        r.w[0] = v;
        return r;
    }

    static constexpr wide_uint from_u128(u128 v) {
        wide_uint r;
        r.w[0] = static_cast<std::uint64_t>(v);
        if constexpr (Limbs >= 2) {
            r.w[1] = static_cast<std::uint64_t>(v >> 64);
        } else {
            if (v >> 64) throw std::overflow_error("wide_uint: value does not fit");
        }
        return r;
    }

    constexpr bool is_zero() const {
        for (auto v : w)
            if (v) return false;
        return true;
    }

    constexpr bool fits_u64() const {
        for (int i = 1; i < Limbs; ++i)
            if (w[i]) return false;
        return true;
    }

    constexpr std::uint64_t low_u64() const { return w[0]; }

    template <int To>
    constexpr wide_uint<To> resized() const {
        wide_uint<To> r;
        for (int i = 0; i < Limbs && i < To; ++i) r.w[i] = w[i];
        if constexpr (To < Limbs) {
            for (int i = To; i < Limbs; ++i)
                if (w[i]) throw std::overflow_error("wide_uint: narrowing overflow");
        }
        return r;
    }

    constexpr wide_uint& operator+=(const wide_uint& o) {
        unsigned carry = 0;
        for (int i = 0; i < Limbs; ++i) {
            u128 s = static_cast<u128>(w[i]) + o.w[i] + carry;
            w[i] = static_cast<std::uint64_t>(s);
            carry = static_cast<unsigned>(s >> 64);
        }
        if (carry) throw std::overflow_error("wide_uint: addition overflow");
        return *this;
    }

    // Requires *this >= o.
    constexpr wide_uint& operator-=(const wide_uint& o) {
        unsigned borrow = 0;
        for (int i = 0; i < Limbs; ++i) {
            u128 lhs = static_cast<u128>(w[i]);
            u128 rhs = static_cast<u128>(o.w[i]) + borrow;
            if (lhs >= rhs) {
                w[i] = static_cast<std::uint64_t>(lhs - rhs);
                borrow = 0;
            } else {
                w[i] = static_cast<std::uint64_t>((lhs + (static_cast<u128>(1) << 64)) - rhs);
                borrow = 1;
            }
        }
        if (borrow) throw std::underflow_error("wide_uint: subtraction underflow");
        return *this;
    }

    friend constexpr wide_uint operator+(wide_uint a, const wide_uint& b) { return a += b; }
    friend constexpr wide_uint operator-(wide_uint a, const wide_uint& b) { return a -= b; }

    template <int M>
    constexpr wide_uint<Limbs + M> times(const wide_uint<M>& o) const {
        wide_uint<Limbs + M> r;
        for (int i = 0; i < Limbs; ++i) {
            std::uint64_t carry = 0;
            for (int j = 0; j < M; ++j) {
                u128 cur = static_cast<u128>(w[i]) * o.w[j] + r.w[i + j] + carry;
                r.w[i + j] = static_cast<std::uint64_t>(cur);
                carry = static_cast<std::uint64_t>(cur >> 64);
            }
            int k = i + M;
            while (carry) {
                u128 cur = static_cast<u128>(r.w[k]) + carry;
                r.w[k] = static_cast<std::uint64_t>(cur);
                carry = static_cast<std::uint64_t>(cur >> 64);
                ++k;
            }
        }
        return r;
    }

    constexpr wide_uint<Limbs + 1> times_u64(std::uint64_t v) const {
        return times(wide_uint<1>::from_u64(v));
    }

    friend constexpr bool operator==(const wide_uint&, const wide_uint&) = default;

    friend constexpr std::strong_ordering operator<=>(const wide_uint& a, const wide_uint& b) {
        for (int i = Limbs - 1; i >= 0; --i) {
            if (a.w[i] != b.w[i]) return a.w[i] <=> b.w[i];
        }
        return std::strong_ordering::equal;
    }

    double to_double() const {
        double r = 0.0;
        for (int i = Limbs - 1; i >= 0; --i) r = r * 18446744073709551616.0 + static_cast<double>(w[i]);
        return r;
    }

    std::string to_decimal() const {
        if (is_zero()) return "0";
        constexpr std::uint64_t chunk = 10000000000000000000ull;  // 10^19
        wide_uint cur = *this;
        std::string out;
        while (!cur.is_zero()) {
            std::uint64_t rem = 0;
            for (int i = Limbs - 1; i >= 0; --i) {
                u128 v = (static_cast<u128>(rem) << 64) | cur.w[i];
                cur.w[i] = static_cast<std::uint64_t>(v / chunk);
                rem = static_cast<std::uint64_t>(v % chunk);
            }
            std::string part = std::to_string(rem);
            if (cur.is_zero()) {
                out.insert(0, part);
            } else {
                out.insert(0, std::string(19 - part.size(), '0') + part);
            }
        }
        return out;
    }

    static std::optional<wide_uint> parse_decimal(std::string_view s) {
        if (s.empty()) return std::nullopt;
        wide_uint r;
        for (char c : s) {
            if (c < '0' || c > '9') return std::nullopt;
            std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
            for (int i = 0; i < Limbs; ++i) {
                u128 cur = static_cast<u128>(r.w[i]) * 10 + carry;
                r.w[i] = static_cast<std::uint64_t>(cur);
                carry = static_cast<std::uint64_t>(cur >> 64);
            }
            if (carry) return std::nullopt;
        }
        return r;
    }
};

using u256 = wide_uint<4>;

inline double u128_to_double(u128 v) {
    return std::ldexp(static_cast<double>(static_cast<std::uint64_t>(v >> 64)), 64) +
           static_cast<double>(static_cast<std::uint64_t>(v));
}

inline std::string u128_to_decimal(u128 v) {
    return wide_uint<2>::from_u128(v).to_decimal();
}

inline std::optional<u128> u128_from_decimal(std::string_view s) {
    auto parsed = wide_uint<2>::parse_decimal(s);
    if (!parsed) return std::nullopt;
    return (static_cast<u128>(parsed->w[1]) << 64) | parsed->w[0];
}

// Compares a1/a2 with b1/b2 by cross multiplication; sides must satisfy
// num < 2^192 and den < 2^128 so the products stay inside 320 bits.
inline std::strong_ordering compare_ratios(const u256& a_num, u128 a_den,
                                           const u256& b_num, u128 b_den) {
    auto lhs = a_num.times(wide_uint<2>::from_u128(b_den));
    auto rhs = b_num.times(wide_uint<2>::from_u128(a_den));
    return lhs <=> rhs;
}

}  // namespace boolspec
