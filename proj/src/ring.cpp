#include "cihom/ring.hpp"

#include <algorithm>
#include <set>

namespace cihom {

RingPtr PolyRing::make(Field field, std::vector<std::string> vars, std::vector<int> weights,
                       MonomialOrder order)
{
    if (vars.size() != weights.size())
        throw InvalidInputError("variable and weight lists differ in length");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty())
            throw InvalidInputError("empty variable name");
        if (!seen.insert(v).second)
            throw InvalidInputError("duplicate variable name '" + v + "'");
    }
    for (int w : weights)
        if (w < 1)
            throw InvalidInputError("variable weights must be >= 1");
    if (order.type == MonomialOrder::Type::Elimination &&
        (order.elim_prefix < 0 || order.elim_prefix > static_cast<int>(vars.size())))
        throw InvalidInputError("elimination prefix out of range");
    return RingPtr(new PolyRing(field, std::move(vars), std::move(weights), order));
}

int PolyRing::var_index(const std::string& name) const
{
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return static_cast<int>(i);
    return -1;
}

long long PolyRing::weighted_degree(const Monomial& m) const
{
    long long d = 0;
    for (size_t i = 0; i < m.size(); ++i)
        d += static_cast<long long>(m[i]) * weights_[i];
    return d;
}

int PolyRing::cmp_wgrevlex(const Monomial& a, const Monomial& b) const
{
    long long da = weighted_degree(a), db = weighted_degree(b);
    if (da != db)
        return da < db ? -1 : 1;
    // revlex tie-break: the last variable where they differ decides,
    // with the *smaller* exponent there winning.
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        size_t k = static_cast<size_t>(i);
        if (a[k] != b[k])
            return a[k] > b[k] ? -1 : 1;
    }
    return 0;
}

int PolyRing::cmp(const Monomial& a, const Monomial& b) const
{
    if (order_.type == MonomialOrder::Type::Elimination) {
        long long da = 0, db = 0;
        for (int i = 0; i < order_.elim_prefix; ++i) {
            da += static_cast<long long>(a[static_cast<size_t>(i)]) * weights_[static_cast<size_t>(i)];
            db += static_cast<long long>(b[static_cast<size_t>(i)]) * weights_[static_cast<size_t>(i)];
        }
        if (da != db)
            return da < db ? -1 : 1;
    }
    return cmp_wgrevlex(a, b);
}

bool PolyRing::same_presentation(const PolyRing& other) const
{
    return field_ == other.field_ && vars_ == other.vars_ && weights_ == other.weights_ &&
           order_ == other.order_;
}

namespace mono {

bool is_unit(const Monomial& m)
{
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Monomial mul(const Monomial& a, const Monomial& b)
{
    Monomial c(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] + b[i];
    return c;
}

bool divides(const Monomial& a, const Monomial& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Monomial div(const Monomial& b, const Monomial& a)
{
    Monomial c(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        c[i] = b[i] - a[i];
    return c;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    Monomial c(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        c[i] = std::max(a[i], b[i]);
    return c;
}

bool coprime(const Monomial& a, const Monomial& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0)
            return false;
    return true;
}

} // namespace mono

void require_compatible(const PolyRing& a, const PolyRing& b, const char* what)
{
    if (!a.same_presentation(b))
        throw InvalidInputError(std::string("ring mismatch in ") + what);
}

} // namespace cihom
