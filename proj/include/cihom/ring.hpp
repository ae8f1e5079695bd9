#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cihom/errors.hpp"
#include "cihom/field.hpp"

namespace cihom {

// Exponent vector; length equals the owning ring's variable count.
using Monomial = std::vector<int>;

// Monomial order tag. The default is weighted degree-reverse-lexicographic:
// compare weighted degrees, ties broken reverse-lexicographically against the
// declared variable order. Elimination orders compare the weighted degree of
// the first `elim_prefix` variables first; a monomial free of them is smaller
// than any monomial involving them.
struct MonomialOrder {
    enum class Type { WGrevlex, Elimination };
    Type type = Type::WGrevlex;
    int elim_prefix = 0;

    bool operator==(const MonomialOrder&) const = default;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// A weighted polynomial ring over an exact field. Immutable; shared by the
// polynomials living in it.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static RingPtr make(Field field, std::vector<std::string> vars,
                        std::vector<int> weights, MonomialOrder order = {});
    static RingPtr make(Field field, std::vector<std::string> vars)
    {
        return make(field, vars, std::vector<int>(vars.size(), 1));
    }

    const Field& field() const { return field_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::string& var_name(int i) const { return vars_[static_cast<size_t>(i)]; }
    const std::vector<int>& weights() const { return weights_; }
    int weight(int i) const { return weights_[static_cast<size_t>(i)]; }
    const MonomialOrder& order() const { return order_; }

    // Index of a variable by name, -1 if absent.
    int var_index(const std::string& name) const;

    long long weighted_degree(const Monomial& m) const;

    // Three-way comparison under the ring's order: negative if a < b,
    // zero if equal, positive if a > b.
    int cmp(const Monomial& a, const Monomial& b) const;

    // Structural equality: same field, variables, weights and order.
    bool same_presentation(const PolyRing& other) const;

    Monomial unit_monomial() const { return Monomial(vars_.size(), 0); }

private:
    PolyRing(Field field, std::vector<std::string> vars, std::vector<int> weights,
             MonomialOrder order)
        : field_(field), vars_(std::move(vars)), weights_(std::move(weights)), order_(order)
    {
    }

    int cmp_wgrevlex(const Monomial& a, const Monomial& b) const;

    Field field_;
    std::vector<std::string> vars_;
    std::vector<int> weights_;
    MonomialOrder order_;
};

namespace mono {

bool is_unit(const Monomial& m);
Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b); // a | b
Monomial div(const Monomial& b, const Monomial& a); // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

} // namespace mono

void require_compatible(const PolyRing& a, const PolyRing& b, const char* what);

} // namespace cihom
