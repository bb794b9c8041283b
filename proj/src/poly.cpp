#include "detdisc/poly.hpp"

#include <algorithm>
#include <map>

namespace detdisc {

namespace {

struct TermCmp {
    const TermOrder* ord;
    bool operator()(const Term& a, const Term& b) const {
        return ord->cmp(a.m, a.comp, b.m, b.comp) > 0; // descending
    }
};

void normalize_terms(const Ring& R, const TermOrder& O, std::vector<Term>& ts) {
    std::sort(ts.begin(), ts.end(), TermCmp{&O});
    std::size_t out = 0;
    const Field& F = R.field();
    for (std::size_t i = 0; i < ts.size();) {
        std::size_t j = i + 1;
        Coeff acc = ts[i].c;
        while (j < ts.size() && ts[j].m == ts[i].m && ts[j].comp == ts[i].comp) {
            acc = F.add(acc, ts[j].c);
            ++j;
        }
        if (!coeff_is_zero(acc)) {
            ts[out] = Term{std::move(acc), ts[i].m, ts[i].comp};
            ++out;
        }
        i = j;
    }
    ts.resize(out);
}

} // namespace

Poly Poly::from_terms(RingPtr r, std::vector<Term> ts) {
    Poly p(r);
    normalize_terms(*r, r->canonical_order(), ts);
    p.terms_ = std::move(ts);
    return p;
}

Poly Poly::from_sorted_terms(RingPtr r, std::vector<Term> ts) {
    Poly p(std::move(r));
    p.terms_ = std::move(ts);
    return p;
}

Poly Poly::constant(const RingPtr& r, const Coeff& c) {
    Poly p(r);
    if (!coeff_is_zero(c)) p.terms_.push_back(Term{c, Monomial::unit(), 0});
    return p;
}

Poly Poly::constant(const RingPtr& r, long v) { return constant(r, r->field().from_int(v)); }

Poly Poly::variable(const RingPtr& r, int i, std::uint16_t k) {
    if (i < 0 || i >= r->nvars()) throw PreconditionError("variable index out of range");
    Poly p(r);
    if (k) p.terms_.push_back(Term{r->field().one(), Monomial::var(i, k), 0});
    else p.terms_.push_back(Term{r->field().one(), Monomial::unit(), 0});
    return p;
}

std::uint32_t Poly::support_mask() const {
    std::uint32_t m = 0;
    for (const auto& t : terms_) m |= t.m.mask;
    return m;
}

std::uint32_t Poly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.deg);
    return d;
}

std::uint32_t Poly::degree_in(std::uint32_t vmask) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.deg_in(vmask));
    return d;
}

std::uint32_t Poly::rank_hint() const {
    std::uint32_t r = 1;
    for (const auto& t : terms_) r = std::max(r, t.comp + 1);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    if (terms_.size() != o.terms_.size()) return false;
    const Field& F = ring_->field();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].comp != o.terms_[i].comp || terms_[i].m != o.terms_[i].m ||
            !F.eq(terms_[i].c, o.terms_[i].c))
            return false;
    }
    return true;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_ring(a.ring(), b.ring());
    const Ring& R = *a.ring();
    const TermOrder& O = R.canonical_order();
    const Field& F = R.field();
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = O.cmp(a.terms_[i].m, a.terms_[i].comp, b.terms_[j].m, b.terms_[j].comp);
        if (c > 0) {
            out.push_back(a.terms_[i++]);
        } else if (c < 0) {
            out.push_back(b.terms_[j++]);
        } else {
            Coeff s = F.add(a.terms_[i].c, b.terms_[j].c);
            if (!coeff_is_zero(s)) out.push_back(Term{std::move(s), a.terms_[i].m, a.terms_[i].comp});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
    return Poly::from_sorted_terms(a.ring(), std::move(out));
}

Poly operator-(const Poly& a) {
    const Field& F = a.ring()->field();
    std::vector<Term> out = a.terms_;
    for (auto& t : out) t.c = F.neg(t.c);
    return Poly::from_sorted_terms(a.ring(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::scaled(const Coeff& c) const {
    if (coeff_is_zero(c)) return Poly::zero(ring_);
    const Field& F = ring_->field();
    std::vector<Term> out = terms_;
    for (auto& t : out) t.c = F.mul(t.c, c);
    return Poly::from_sorted_terms(ring_, std::move(out));
}

Poly Poly::mono_multiple(const Coeff& c, const Monomial& m) const {
    if (coeff_is_zero(c)) return Poly::zero(ring_);
    const Field& F = ring_->field();
    std::vector<Term> out = terms_;
    for (auto& t : out) {
        t.c = F.mul(t.c, c);
        t.m = t.m * m;
    }
    // multiplying by a fixed monomial preserves the relative order
    return Poly::from_sorted_terms(ring_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.ring());
    if (a.terms_[0].comp != 0 && b.terms_[0].comp != 0)
        throw PreconditionError("cannot multiply two module elements");
    const Field& F = a.ring()->field();
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            out.push_back(Term{F.mul(ta.c, tb.c), ta.m * tb.m, ta.comp + tb.comp});
    return Poly::from_terms(a.ring(), std::move(out));
}

std::uint32_t order_of(const Poly& p, const std::vector<int>& local_vars) {
    if (p.is_zero()) throw PreconditionError("order of the zero polynomial");
    std::uint32_t vmask = 0;
    for (int v : local_vars) vmask |= 1u << v;
    std::uint32_t best = ~0u;
    for (const auto& t : p.terms()) best = std::min(best, t.m.deg_in(vmask));
    return best;
}

Poly derivative(const Poly& p, int var) {
    const Field& F = p.ring()->field();
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        if (t.m.e[var] == 0) continue;
        Term nt = t;
        nt.c = F.mul(t.c, F.from_int(t.m.e[var]));
        nt.m.set(var, t.m.e[var] - 1);
        if (!coeff_is_zero(nt.c)) out.push_back(std::move(nt));
    }
    return Poly::from_terms(p.ring(), std::move(out));
}

Poly substitute(const Poly& p, int var, const Poly& value) {
    require_same_ring(p.ring(), value.ring());
    Poly acc = Poly::zero(p.ring());
    std::vector<Poly> powers{Poly::constant(p.ring(), 1L)};
    for (const auto& t : p.terms()) {
        unsigned k = t.m.e[var];
        while (powers.size() <= k) powers.push_back(powers.back() * value);
        Term base = t;
        base.m.set(var, 0);
        Poly tp = Poly::from_sorted_terms(p.ring(), {base});
        acc = acc + tp * powers[k];
    }
    return acc;
}

Poly map_to(const Poly& p, const RingPtr& target, bool convert_field) {
    const Ring& S = *p.ring();
    const Ring& T = *target;
    if (!convert_field && !(S.field() == T.field()))
        throw RingMismatchError("coefficient fields differ");
    std::vector<int> vmap(S.nvars());
    for (int i = 0; i < S.nvars(); ++i) vmap[i] = T.var_index(S.var_name(i));
    const Field& FT = T.field();
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Term nt;
        nt.comp = t.comp;
        for (int i = 0; i < S.nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (vmap[i] < 0)
                throw PreconditionError("variable " + S.var_name(i) + " has no image in the target ring");
            nt.m.set(vmap[i], t.m.e[i]);
        }
        if (convert_field && S.field().kind() == Field::Kind::Q && FT.kind() == Field::Kind::Fp)
            nt.c = FT.from_rat(std::get<Rat>(t.c));
        else
            nt.c = t.c;
        if (!coeff_is_zero(nt.c)) out.push_back(std::move(nt));
    }
    return Poly::from_terms(target, std::move(out));
}

Poly component(const Poly& p, std::uint32_t comp) {
    std::vector<Term> out;
    for (const auto& t : p.terms())
        if (t.comp == comp) {
            Term nt = t;
            nt.comp = 0;
            out.push_back(std::move(nt));
        }
    return Poly::from_sorted_terms(p.ring(), std::move(out));
}

Poly into_component(const Poly& p, std::uint32_t comp) {
    std::vector<Term> out = p.terms();
    for (auto& t : out) {
        if (t.comp != 0) throw PreconditionError("element already has module components");
        t.comp = comp;
    }
    return Poly::from_sorted_terms(p.ring(), std::move(out));
}

Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    const Field& F = p.ring()->field();
    if (F.kind() == Field::Kind::Fp) return monic(p);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : p.terms()) {
        const Rat& q = std::get<Rat>(t.c);
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(std::get<Rat>(p.terms()[0].c)) < 0) scale = -scale;
    return p.scaled(Coeff(scale));
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    const Field& F = p.ring()->field();
    return p.scaled(F.inv(p.terms()[0].c));
}

Poly div_exact(const Poly& a, const Poly& b) {
    require_same_ring(a.ring(), b.ring());
    if (b.is_zero()) throw PreconditionError("exact division by zero");
    const Field& F = a.ring()->field();
    Poly rem = a;
    std::vector<Term> quot;
    const Term& lb = b.terms()[0];
    while (!rem.is_zero()) {
        const Term& lr = rem.terms()[0];
        if (lr.comp != lb.comp || !lb.m.divides(lr.m))
            throw PreconditionError("polynomial division is not exact");
        Coeff c = F.div(lr.c, lb.c);
        Monomial q = lr.m.quotient_by(lb.m);
        quot.push_back(Term{c, q, 0});
        rem = rem - b.mono_multiple(c, q);
    }
    return Poly::from_terms(a.ring(), std::move(quot));
}

Poly pow(const Poly& a, unsigned k) {
    Poly r = Poly::constant(a.ring(), 1L);
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

} // namespace detdisc
