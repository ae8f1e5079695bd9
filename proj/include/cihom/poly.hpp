#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cihom/ring.hpp"

namespace cihom {

struct Term {
    Monomial mono;
    FElem coeff;
};

// Sparse multivariate polynomial: term list kept strictly descending in the
// ring's monomial order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const FElem& c);
    static Polynomial from_int(RingPtr ring, long long n);
    static Polynomial variable(RingPtr ring, int index);
    static Polynomial monomial(RingPtr ring, Monomial m, FElem c);
    // Builds from an arbitrary term list (merges, sorts, drops zeros).
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    const Term& lead() const; // throws on zero polynomial
    const Monomial& lead_mono() const { return lead().mono; }
    const FElem& lead_coeff() const { return lead().coeff; }

    // Weighted degree of the leading term; -1 for the zero polynomial.
    long long degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    Polynomial scaled(const FElem& c) const;
    Polynomial times_term(const Monomial& m, const FElem& c) const;
    Polynomial monic() const; // divide by the leading coefficient

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Substitute images[i] for variable i; images live in `target`.
    Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;

    // Re-express in another ring, matching variables by name. Fails if a
    // variable with a nonzero exponent is missing from the target, or if a
    // matched variable changes weight.
    Polynomial mapped_by_name(const RingPtr& target) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial poly_pow(const Polynomial& p, int e);

} // namespace cihom
