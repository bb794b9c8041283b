#include "detdisc/field.hpp"

namespace detdisc {

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on signed 64-bit; p < 2^31 so no overflow
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw PreconditionError("element not invertible mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

Field Field::prime_field(std::uint64_t p) {
    if (p <= 2 || p >= (1ull << 31) || !is_prime_u64(p))
        throw PreconditionError("prime field modulus must be an odd prime below 2^31");
    Field f;
    f.kind_ = Kind::Fp;
    f.p_ = p;
    return f;
}

Coeff Field::zero() const {
    if (kind_ == Kind::Q) return Rat(0);
    return std::uint64_t(0);
}

Coeff Field::one() const {
    if (kind_ == Kind::Q) return Rat(1);
    return std::uint64_t(1);
}

Coeff Field::from_int(long v) const {
    if (kind_ == Kind::Q) return Rat(v);
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r);
}

Coeff Field::from_rat(const Rat& q) const {
    if (kind_ == Kind::Q) return q;
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(static_cast<unsigned long>(p_));
    mpz_class nr = num % pz;
    if (nr < 0) nr += pz;
    mpz_class dr = den % pz;
    if (dr < 0) dr += pz;
    if (dr == 0) throw PreconditionError("denominator divisible by the field characteristic");
    std::uint64_t n = nr.get_ui(), d = dr.get_ui();
    return n * mod_inverse(d, p_) % p_;
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
    if (kind_ == Kind::Q) return Rat(std::get<Rat>(a) + std::get<Rat>(b));
    std::uint64_t s = std::get<std::uint64_t>(a) + std::get<std::uint64_t>(b);
    if (s >= p_) s -= p_;
    return s;
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
    if (kind_ == Kind::Q) return Rat(std::get<Rat>(a) - std::get<Rat>(b));
    std::uint64_t x = std::get<std::uint64_t>(a), y = std::get<std::uint64_t>(b);
    return x >= y ? x - y : x + p_ - y;
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
    if (kind_ == Kind::Q) return Rat(std::get<Rat>(a) * std::get<Rat>(b));
    return std::get<std::uint64_t>(a) * std::get<std::uint64_t>(b) % p_;
}

Coeff Field::div(const Coeff& a, const Coeff& b) const {
    if (kind_ == Kind::Q) {
        if (sgn(std::get<Rat>(b)) == 0) throw PreconditionError("division by zero coefficient");
        return Rat(std::get<Rat>(a) / std::get<Rat>(b));
    }
    return mul(a, inv(b));
}

Coeff Field::neg(const Coeff& a) const {
    if (kind_ == Kind::Q) return Rat(-std::get<Rat>(a));
    std::uint64_t x = std::get<std::uint64_t>(a);
    return x == 0 ? x : p_ - x;
}

Coeff Field::inv(const Coeff& a) const {
    if (kind_ == Kind::Q) {
        if (sgn(std::get<Rat>(a)) == 0) throw PreconditionError("inverting zero coefficient");
        return Rat(1 / std::get<Rat>(a));
    }
    std::uint64_t x = std::get<std::uint64_t>(a);
    if (x == 0) throw PreconditionError("inverting zero coefficient");
    return mod_inverse(x, p_);
}

bool Field::eq(const Coeff& a, const Coeff& b) const {
    if (kind_ == Kind::Q) return std::get<Rat>(a) == std::get<Rat>(b);
    return std::get<std::uint64_t>(a) == std::get<std::uint64_t>(b);
}

bool Field::is_one(const Coeff& a) const {
    if (kind_ == Kind::Q) return std::get<Rat>(a) == 1;
    return std::get<std::uint64_t>(a) == 1;
}

std::string Field::to_string(const Coeff& a) const {
    if (kind_ == Kind::Q) return std::get<Rat>(a).get_str();
    return std::to_string(std::get<std::uint64_t>(a));
}

std::string Field::describe() const {
    return kind_ == Kind::Q ? "Q" : "F" + std::to_string(p_);
}

} // namespace detdisc
