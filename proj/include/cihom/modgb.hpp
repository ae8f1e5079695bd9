#pragma once

#include <optional>
#include <vector>

#include "cihom/poly.hpp"

namespace cihom::modgb {

// A homogeneous element of a graded free module F = (+) S(-shift_i): one
// polynomial per position. All vectors in one computation share a length.
using Vec = std::vector<Polynomial>;

// Leading module term of a vector: position + monomial + coefficient.
// pos < 0 encodes the zero vector.
struct Lead {
    int pos = -1;
    Monomial mono;
    FElem coeff;
};

Vec vec_zero(const RingPtr& ring, int rank);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const FElem& c);
Vec vec_times_term(const Vec& a, const Monomial& m, const FElem& c);
Vec vec_times_poly(const Vec& a, const Polynomial& p);
// Degree of a homogeneous vector (-1 for zero).
long long vec_degree(const RingPtr& ring, const std::vector<long long>& shifts, const Vec& v);
bool vec_is_homogeneous(const RingPtr& ring, const std::vector<long long>& shifts, const Vec& v);

// Groebner engine for submodules of a graded free module over the polynomial
// ring. Supports incremental generator addition; optionally tracks, for every
// basis element, its expression over the input generators, and collects the
// syzygies arising from S-pairs that reduce to zero (these generate the full
// syzygy module of the input generators once `complete()` has run).
class Engine {
public:
    struct Options {
        bool track = false;        // cofactor tails + syzygy collection
        bool coprime_skip = false; // Buchberger's product criterion; rank-1 untracked only
    };

    Engine(RingPtr ring, std::vector<long long> shifts, Options opt = {});

    int rank() const { return static_cast<int>(shifts_.size()); }
    const RingPtr& ring() const { return ring_; }
    const std::vector<long long>& shifts() const { return shifts_; }
    int generator_count() const { return ngens_; }

    // Appends an input generator (zero vectors are recorded but inert).
    int add_generator(Vec v);
    // Processes all pending S-pairs.
    void complete();

    // Top-reduces v against the current basis: zero iff v lies in the
    // submodule generated so far (requires complete()).
    Vec reduce_top(Vec v) const;
    // Full normal form: every surviving term is irreducible.
    Vec normal_form(Vec v) const;
    bool is_member(const Vec& v) const;

    // Full normal form plus an expression of the reduced part over the input
    // generators: v = sum(cofactors[i] * gen_i) + remainder. Requires track.
    struct Expr {
        Vec remainder;
        std::vector<Polynomial> cofactors;
    };
    Expr express(Vec v) const;

    // Syzygies of the input generators collected so far (requires track and
    // complete()). Each has one polynomial per input generator.
    const std::vector<Vec>& syzygies() const { return syzygies_; }

    // Leading module terms (pos, monomial) of the basis.
    std::vector<std::pair<int, Monomial>> lead_terms() const;

    // Module-order comparison helper (shift-adjusted degree, ring order on the
    // monomial, then lower position wins ties).
    int cmp_modterm(int pos_a, const Monomial& a, int pos_b, const Monomial& b) const;

    Lead lead_of(const Vec& v) const;

private:
    struct BasisElem {
        Vec v;
        std::vector<Polynomial> tail; // expression over input generators
        Lead lead;
    };
    struct Pair {
        long long degree;
        int i, j;
        bool operator<(const Pair& o) const
        {
            if (degree != o.degree)
                return degree < o.degree;
            if (i != o.i)
                return i < o.i;
            return j < o.j;
        }
    };

    void insert_basis(Vec v, std::vector<Polynomial> tail);
    // Top-reduce with tail bookkeeping. Returns reduced vector.
    Vec reduce_top_tracked(Vec v, std::vector<Polynomial>* tail) const;

    RingPtr ring_;
    std::vector<long long> shifts_;
    Options opt_;
    int ngens_ = 0;
    std::vector<BasisElem> basis_;
    std::vector<Pair> pending_;
    std::vector<Vec> syzygies_;
    mutable std::uint64_t reductions_ = 0;
};

} // namespace cihom::modgb
