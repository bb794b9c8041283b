#pragma once

#include "detdisc/errors.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>

namespace detdisc {

/// Hard cap on ring size.  Everything in this artifact is desk scale; the
/// widest ring in use (uncharted pipeline with parameters) stays well below.
constexpr int kMaxVars = 24;

/// Exponent vector with cached total degree and support mask.  Exponents are
/// fixed-width; additions are overflow-checked and fail loudly rather than
/// wrap.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;
    std::uint32_t mask = 0;

    static Monomial unit() { return Monomial{}; }

    static Monomial var(int i, std::uint16_t k = 1) {
        Monomial m;
        m.e[i] = k;
        m.deg = k;
        if (k) m.mask = 1u << i;
        return m;
    }

    bool is_unit() const { return deg == 0; }

    std::uint16_t operator[](int i) const { return e[i]; }

    void set(int i, std::uint32_t k) {
        if (k > 0xFFFF) throw OverflowError("monomial exponent exceeds 65535");
        deg += k - e[i];
        e[i] = static_cast<std::uint16_t>(k);
        if (k)
            mask |= 1u << i;
        else
            mask &= ~(1u << i);
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            std::uint32_t s = std::uint32_t(a.e[i]) + b.e[i];
            if (s > 0xFFFF) throw OverflowError("monomial exponent exceeds 65535");
            r.e[i] = static_cast<std::uint16_t>(s);
            d += s;
        }
        r.deg = d;
        r.mask = a.mask | b.mask;
        return r;
    }

    bool divides(const Monomial& b) const {
        if (mask & ~b.mask) return false;
        if (deg > b.deg) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > b.e[i]) return false;
        return true;
    }

    /// this / b, assuming b.divides(*this)
    Monomial quotient_by(const Monomial& b) const {
        Monomial r;
        std::uint32_t mk = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = static_cast<std::uint16_t>(e[i] - b.e[i]);
            if (r.e[i]) mk |= 1u << i;
        }
        r.deg = deg - b.deg;
        r.mask = mk;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
            d += r.e[i];
        }
        r.deg = d;
        r.mask = a.mask | b.mask;
        return r;
    }

    bool coprime_with(const Monomial& b) const { return (mask & b.mask) == 0; }

    bool operator==(const Monomial& b) const {
        return deg == b.deg && std::memcmp(e.data(), b.e.data(), sizeof(e)) == 0;
    }
    bool operator!=(const Monomial& b) const { return !(*this == b); }

    /// Total degree restricted to the variables of `vmask`.
    std::uint32_t deg_in(std::uint32_t vmask) const {
        if ((mask & vmask) == mask) return deg;
        std::uint32_t d = 0;
        std::uint32_t mm = mask & vmask;
        while (mm) {
            int i = __builtin_ctz(mm);
            d += e[i];
            mm &= mm - 1;
        }
        return d;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (int i = 0; i < kMaxVars; ++i) {
            h ^= m.e[i];
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace detdisc
