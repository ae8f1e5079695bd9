#include "cihom/field.hpp"

namespace cihom {

Field Field::prime(std::uint32_t p)
{
    if (p < 2 || p >= (1u << 31))
        throw InvalidInputError("field characteristic must be a prime in [2, 2^31)");
    if (p > 3) {
        if (p % 2 == 0 || p % 3 == 0)
            throw InvalidInputError("field characteristic " + std::to_string(p) + " is not prime");
        for (std::uint64_t d = 5; d * d <= p; d += 6)
            if (p % d == 0 || p % (d + 2) == 0)
                throw InvalidInputError("field characteristic " + std::to_string(p) + " is not prime");
    }
    return Field(Kind::Prime, p);
}

std::string Field::to_string() const
{
    return is_rationals() ? "Q" : "Fp " + std::to_string(p_);
}

namespace field_ops {

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t acc = 1;
    base %= p;
    while (exp) {
        if (exp & 1)
            acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

} // namespace

FElem zero(const Field&)
{
    return FElem{};
}

FElem one(const Field& f)
{
    FElem e;
    if (f.is_rationals())
        e.q = 1;
    else
        e.r = 1 % f.characteristic();
    return e;
}

FElem from_int(const Field& f, long long n)
{
    FElem e;
    if (f.is_rationals()) {
        e.q = mpq_class(static_cast<long>(n));
    } else {
        long long p = f.characteristic();
        long long m = n % p;
        if (m < 0)
            m += p;
        e.r = static_cast<std::uint32_t>(m);
    }
    return e;
}

FElem from_mpz(const Field& f, const mpz_class& n)
{
    FElem e;
    if (f.is_rationals()) {
        e.q = mpq_class(n);
    } else {
        mpz_class m = n % f.characteristic();
        if (m < 0)
            m += f.characteristic();
        e.r = static_cast<std::uint32_t>(m.get_ui());
    }
    return e;
}

bool is_zero(const Field& f, const FElem& a)
{
    return f.is_rationals() ? a.q == 0 : a.r == 0;
}

bool is_one(const Field& f, const FElem& a)
{
    return f.is_rationals() ? a.q == 1 : a.r == 1 % f.characteristic();
}

bool eq(const Field& f, const FElem& a, const FElem& b)
{
    return f.is_rationals() ? a.q == b.q : a.r == b.r;
}

FElem add(const Field& f, const FElem& a, const FElem& b)
{
    FElem e;
    if (f.is_rationals()) {
        e.q = a.q + b.q;
    } else {
        std::uint64_t s = std::uint64_t(a.r) + b.r;
        if (s >= f.characteristic())
            s -= f.characteristic();
        e.r = static_cast<std::uint32_t>(s);
    }
    return e;
}

FElem sub(const Field& f, const FElem& a, const FElem& b)
{
    FElem e;
    if (f.is_rationals()) {
        e.q = a.q - b.q;
    } else {
        std::uint64_t s = std::uint64_t(a.r) + f.characteristic() - b.r;
        if (s >= f.characteristic())
            s -= f.characteristic();
        e.r = static_cast<std::uint32_t>(s);
    }
    return e;
}

FElem mul(const Field& f, const FElem& a, const FElem& b)
{
    FElem e;
    if (f.is_rationals())
        e.q = a.q * b.q;
    else
        e.r = static_cast<std::uint32_t>(std::uint64_t(a.r) * b.r % f.characteristic());
    return e;
}

FElem neg(const Field& f, const FElem& a)
{
    FElem e;
    if (f.is_rationals())
        e.q = -a.q;
    else
        e.r = a.r == 0 ? 0 : f.characteristic() - a.r;
    return e;
}

FElem inv(const Field& f, const FElem& a)
{
    if (is_zero(f, a))
        throw Error("division by zero in coefficient field");
    FElem e;
    if (f.is_rationals())
        e.q = 1 / a.q;
    else
        e.r = mod_pow(a.r, f.characteristic() - 2, f.characteristic());
    return e;
}

FElem div(const Field& f, const FElem& a, const FElem& b)
{
    return mul(f, a, inv(f, b));
}

std::string to_string(const Field& f, const FElem& a)
{
    if (f.is_rationals())
        return a.q.get_str();
    return std::to_string(a.r);
}

} // namespace field_ops

} // namespace cihom
