#pragma once

#include "detdisc/ring.hpp"

#include <cstdint>
#include <vector>

namespace detdisc {

/// One term of a polynomial or free-module element.  Ring elements have
/// comp == 0 throughout; module elements use comp as the component index
/// of the enclosing free module.
struct Term {
    Coeff c;
    Monomial m;
    std::uint32_t comp = 0;
};

/// Sparse multivariate polynomial, canonically represented: terms strictly
/// descending under the ring's canonical order, no zero coefficients, no
/// duplicate (monomial, component) pairs.  Values are immutable after
/// construction and safe to share between threads.
///
/// The same type doubles as a free-module element (spec type
/// FreeModuleElement): absent components are zero, the rank is fixed by the
/// enclosing computation.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr r) : ring_(std::move(r)) {}

    /// Normalizes arbitrary term soup into canonical form.
    static Poly from_terms(RingPtr r, std::vector<Term> ts);
    /// Trusts the caller that `ts` is already canonical under the ring order.
    static Poly from_sorted_terms(RingPtr r, std::vector<Term> ts);

    static Poly zero(RingPtr r) { return Poly(std::move(r)); }
    static Poly constant(const RingPtr& r, const Coeff& c);
    static Poly constant(const RingPtr& r, long v);
    static Poly variable(const RingPtr& r, int i, std::uint16_t k = 1);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_unit() && terms_[0].comp == 0);
    }
    /// Nonzero constant (a unit of the polynomial ring).
    bool is_unit_constant() const {
        return terms_.size() == 1 && terms_[0].m.is_unit() && terms_[0].comp == 0;
    }

    /// Union of term supports.
    std::uint32_t support_mask() const;
    /// Max total degree over all terms (0 for the zero polynomial).
    std::uint32_t total_degree() const;
    /// Max degree restricted to the masked variables.
    std::uint32_t degree_in(std::uint32_t vmask) const;
    /// Largest component index occurring (+1); 1 for a plain polynomial.
    std::uint32_t rank_hint() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);

    Poly scaled(const Coeff& c) const;
    Poly mono_multiple(const Coeff& c, const Monomial& m) const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Minimum total degree of p's terms restricted to `local_vars` (indices).
/// Throws on the zero polynomial.
std::uint32_t order_of(const Poly& p, const std::vector<int>& local_vars);

Poly derivative(const Poly& p, int var);

/// Substitute ring variable `var` by `value` (value in the same ring).
Poly substitute(const Poly& p, int var, const Poly& value);

/// Re-read p in another ring, matching variables by name.  Throws if a
/// variable with nonzero exponent has no counterpart.  Coefficients are
/// carried over; the fields must agree unless `convert_field` is set, in
/// which case rationals are reduced into a prime field.
Poly map_to(const Poly& p, const RingPtr& target, bool convert_field = false);

/// Component of a module element as a plain polynomial.
Poly component(const Poly& p, std::uint32_t comp);
/// Plain polynomial placed into component `comp` of a free module.
Poly into_component(const Poly& p, std::uint32_t comp);

/// Divide by the rational content: the result has coprime integer
/// coefficients and positive leading coefficient.  Identity over F_p except
/// for the sign normalization (leading coefficient kept as is).
Poly primitive_part(const Poly& p);

/// Scale to leading coefficient one (under the canonical order).
Poly monic(const Poly& p);

/// Exact division a / b for plain polynomials; throws if not divisible.
Poly div_exact(const Poly& a, const Poly& b);

Poly pow(const Poly& a, unsigned k);

} // namespace detdisc
