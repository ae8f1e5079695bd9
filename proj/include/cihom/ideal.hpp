#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "cihom/modgb.hpp"
#include "cihom/poly.hpp"

namespace cihom {

// An ideal generated by homogeneous polynomials of positive weighted degree.
// The reduced Groebner basis (unique for the ring's order) is computed on
// first use and memoized; the fill is thread-safe, everything else about the
// ideal is immutable.
class HomogeneousIdeal {
public:
    HomogeneousIdeal() = default;
    HomogeneousIdeal(RingPtr ring, std::vector<Polynomial> gens);

    static HomogeneousIdeal zero(RingPtr ring) { return HomogeneousIdeal(std::move(ring), {}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    // Reduced Groebner basis, sorted descending by leading monomial.
    const std::vector<Polynomial>& groebner_basis() const;

    // Canonical remainder under full reduction; zero iff f lies in the ideal.
    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const;

    // Cofactor expression of f over the *input generators*; nullopt when f is
    // not a member. Independent of the memoized basis (fresh tracked run).
    std::optional<std::vector<Polynomial>> express(const Polynomial& f) const;

    bool operator==(const HomogeneousIdeal& o) const; // compares reduced bases

private:
    struct Cache;
    const Cache& filled_cache() const;

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

HomogeneousIdeal ideal_sum(const HomogeneousIdeal& a, const HomogeneousIdeal& b);
HomogeneousIdeal ideal_product(const HomogeneousIdeal& a, const HomogeneousIdeal& b);

// Generators of I intersected with the subring on the variables NOT listed.
// Returns an ideal over a fresh ring on the kept variables (declared order and
// weights preserved). An empty list returns the ideal unchanged.
HomogeneousIdeal eliminate(const HomogeneousIdeal& ideal,
                           const std::vector<std::string>& vars_to_remove);

struct MinimalGenerators {
    std::vector<Polynomial> gens;
    int mu = 0;
};

// Minimal homogeneous generating set selected greedily by ascending degree
// (graded Nakayama); mu is independent of the input generating set.
MinimalGenerators minimalize_generators(const HomogeneousIdeal& ideal);

// Reduced Groebner basis of arbitrary homogeneous input, without the ideal
// wrapper or cache.
std::vector<Polynomial> reduced_groebner(const RingPtr& ring, const std::vector<Polynomial>& gens);

} // namespace cihom
