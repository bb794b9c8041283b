#pragma once

#include "detdisc/errors.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace detdisc {

using Rat = mpq_class;

/// A field element: exact rational or residue mod p, depending on the owning
/// field.  Both alternatives are kept in canonical form (reduced fraction
/// with positive denominator resp. least nonnegative residue).
using Coeff = std::variant<Rat, std::uint64_t>;

inline bool coeff_is_zero(const Coeff& c) {
    if (const Rat* q = std::get_if<Rat>(&c)) return sgn(*q) == 0;
    return std::get<std::uint64_t>(c) == 0;
}

/// Coefficient field: the rationals or F_p for a configured odd prime p.
/// All arithmetic is exact; there is no floating point anywhere.
class Field {
public:
    enum class Kind { Q, Fp };

    Field() : kind_(Kind::Q), p_(0) {}
    static Field rationals() { return Field(); }
    static Field prime_field(std::uint64_t p);

    Kind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }
    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Coeff zero() const;
    Coeff one() const;
    Coeff from_int(long v) const;
    Coeff from_rat(const Rat& q) const;

    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff div(const Coeff& a, const Coeff& b) const;
    Coeff neg(const Coeff& a) const;
    Coeff inv(const Coeff& a) const;

    bool eq(const Coeff& a, const Coeff& b) const;
    bool is_one(const Coeff& a) const;

    /// Canonical text form: "n" or "n/d" over Q, least nonnegative residue
    /// over F_p.
    std::string to_string(const Coeff& a) const;

    std::string describe() const;

private:
    Kind kind_;
    std::uint64_t p_;
};

} // namespace detdisc
