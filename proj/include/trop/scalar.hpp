#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace trop {

// Raised when an integer result leaves the representable range.
class RangeError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Element of the max-plus semiring Z ∪ {bottom}.
// Addition is max, multiplication is integer sum, bottom is the additive unit
// and multiplicative absorber. Finite values are confined to
// [-INT64_MAX, INT64_MAX] so negation never overflows.
class Scalar {
public:
    constexpr Scalar() noexcept : v_(kBottomRep) {}
    constexpr Scalar(std::int64_t v) : v_(v) {
        if (v == kBottomRep) throw RangeError("tropical scalar out of range");
    }

    static constexpr Scalar bottom() noexcept { return Scalar(Raw{}, kBottomRep); }
    static constexpr Scalar one() noexcept { return Scalar(Raw{}, 0); }

    constexpr bool is_bottom() const noexcept { return v_ == kBottomRep; }
    constexpr bool is_finite() const noexcept { return v_ != kBottomRep; }
    // Precondition: is_finite().
    constexpr std::int64_t value() const {
        if (is_bottom()) throw std::logic_error("value() of bottom");
        return v_;
    }
    constexpr std::int64_t raw() const noexcept { return v_; }
    static constexpr Scalar from_raw(std::int64_t r) noexcept { return Scalar(Raw{}, r); }

    // Bottom sorts below every integer, so the raw ordering is the semiring order.
    friend constexpr bool operator==(Scalar, Scalar) noexcept = default;
    friend constexpr auto operator<=>(Scalar a, Scalar b) noexcept { return a.v_ <=> b.v_; }

    static constexpr std::int64_t kBottomRep = std::numeric_limits<std::int64_t>::min();

private:
    struct Raw {};
    constexpr Scalar(Raw, std::int64_t r) noexcept : v_(r) {}
    std::int64_t v_;
};

inline constexpr Scalar kBottom = Scalar::bottom();

constexpr Scalar oplus(Scalar a, Scalar b) noexcept { return a < b ? b : a; }

inline Scalar otimes(Scalar a, Scalar b) {
    if (a.is_bottom() || b.is_bottom()) return kBottom;
    std::int64_t r;
    if (__builtin_add_overflow(a.raw(), b.raw(), &r) || r == Scalar::kBottomRep)
        throw RangeError("tropical product overflow");
    return Scalar::from_raw(r);
}

// Tropical inverse of a finite element (integer negation). Bottom has no
// inverse inside the carrier.
inline Scalar neg(Scalar a) {
    if (a.is_bottom()) throw std::domain_error("negation of bottom is not in the carrier");
    return Scalar::from_raw(-a.raw());
}

// a ⩓ b = -((-a) ⊕ (-b)). The negation of bottom is a transient "top" that
// never escapes this function.
inline Scalar omin(Scalar a, Scalar b) noexcept {
    struct Ext {
        enum Kind { Bot, Fin, Top } kind;
        std::int64_t v;
    };
    auto negate = [](Ext e) -> Ext {
        switch (e.kind) {
            case Ext::Bot: return {Ext::Top, 0};
            case Ext::Top: return {Ext::Bot, 0};
            default: return {Ext::Fin, -e.v};
        }
    };
    auto lift = [](Scalar s) -> Ext {
        return s.is_bottom() ? Ext{Ext::Bot, 0} : Ext{Ext::Fin, s.raw()};
    };
    auto max = [](Ext x, Ext y) -> Ext {
        if (x.kind != y.kind) return x.kind > y.kind ? x : y;
        return x.v >= y.v ? x : y;
    };
    Ext r = negate(max(negate(lift(a)), negate(lift(b))));
    return r.kind == Ext::Bot ? kBottom : Scalar::from_raw(r.v);
}

std::string to_string(Scalar s);

}  // namespace trop
