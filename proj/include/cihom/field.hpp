#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cihom/errors.hpp"

namespace cihom {

// Exact coefficient field: the rationals or a prime field F_p, p < 2^31.
class Field {
public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    static Field prime(std::uint32_t p);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    std::uint32_t characteristic() const { return kind_ == Kind::Rationals ? 0 : p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

// A field element. For rationals the value is `q` (always canonical: reduced,
// positive denominator); for F_p it is `r` in [0, p).
struct FElem {
    mpq_class q;
    std::uint32_t r = 0;
};

namespace field_ops {

FElem zero(const Field& f);
FElem one(const Field& f);
FElem from_int(const Field& f, long long n);
FElem from_mpz(const Field& f, const mpz_class& n);

bool is_zero(const Field& f, const FElem& a);
bool is_one(const Field& f, const FElem& a);
bool eq(const Field& f, const FElem& a, const FElem& b);

FElem add(const Field& f, const FElem& a, const FElem& b);
FElem sub(const Field& f, const FElem& a, const FElem& b);
FElem mul(const Field& f, const FElem& a, const FElem& b);
FElem neg(const Field& f, const FElem& a);
FElem inv(const Field& f, const FElem& a); // throws on zero
FElem div(const Field& f, const FElem& a, const FElem& b);

std::string to_string(const Field& f, const FElem& a);

} // namespace field_ops

} // namespace cihom
