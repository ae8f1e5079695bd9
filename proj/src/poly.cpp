#include "cihom/poly.hpp"

#include <algorithm>

namespace cihom {

namespace fo = field_ops;

Polynomial Polynomial::constant(RingPtr ring, const FElem& c)
{
    Polynomial p(ring);
    if (!fo::is_zero(ring->field(), c))
        p.terms_.push_back(Term{ring->unit_monomial(), c});
    return p;
}

Polynomial Polynomial::from_int(RingPtr ring, long long n)
{
    FElem c = fo::from_int(ring->field(), n);
    return constant(std::move(ring), c);
}

Polynomial Polynomial::variable(RingPtr ring, int index)
{
    if (index < 0 || index >= ring->nvars())
        throw Error("variable index out of range");
    Monomial m = ring->unit_monomial();
    m[static_cast<size_t>(index)] = 1;
    FElem one = fo::one(ring->field());
    return monomial(std::move(ring), std::move(m), std::move(one));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, FElem c)
{
    Polynomial p(ring);
    if (!fo::is_zero(ring->field(), c))
        p.terms_.push_back(Term{std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms)
{
    const PolyRing& R = *ring;
    std::stable_sort(terms.begin(), terms.end(),
                     [&R](const Term& a, const Term& b) { return R.cmp(a.mono, b.mono) > 0; });
    Polynomial p(ring);
    for (auto& t : terms) {
        if (fo::is_zero(R.field(), t.coeff))
            continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = fo::add(R.field(), p.terms_.back().coeff, t.coeff);
            if (fo::is_zero(R.field(), p.terms_.back().coeff))
                p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Polynomial::lead() const
{
    if (terms_.empty())
        throw Error("leading term of zero polynomial");
    return terms_.front();
}

long long Polynomial::degree() const
{
    if (terms_.empty())
        return -1;
    return ring_->weighted_degree(terms_.front().mono);
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.size() <= 1)
        return true;
    long long d = ring_->weighted_degree(terms_.front().mono);
    for (size_t i = 1; i < terms_.size(); ++i)
        if (ring_->weighted_degree(terms_[i].mono) != d)
            return false;
    return true;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && mono::is_unit(terms_[0].mono));
}

Polynomial Polynomial::operator-() const
{
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        p.terms_.push_back(Term{t.mono, fo::neg(ring_->field(), t.coeff)});
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    require_compatible(*ring_, *o.ring_, "polynomial addition");
    const PolyRing& R = *ring_;
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = R.cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            p.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            p.terms_.push_back(o.terms_[j++]);
        } else {
            FElem s = fo::add(R.field(), terms_[i].coeff, o.terms_[j].coeff);
            if (!fo::is_zero(R.field(), s))
                p.terms_.push_back(Term{terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        p.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j)
        p.terms_.push_back(o.terms_[j]);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    require_compatible(*ring_, *o.ring_, "polynomial multiplication");
    Polynomial acc = Polynomial::zero(ring_);
    // Multiply by the shorter operand termwise.
    const Polynomial& big = terms_.size() >= o.terms_.size() ? *this : o;
    const Polynomial& small = terms_.size() >= o.terms_.size() ? o : *this;
    for (const auto& t : small.terms_)
        acc = acc + big.times_term(t.mono, t.coeff);
    return acc;
}

Polynomial Polynomial::scaled(const FElem& c) const
{
    const Field& F = ring_->field();
    if (fo::is_zero(F, c))
        return Polynomial::zero(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        p.terms_.push_back(Term{t.mono, fo::mul(F, t.coeff, c)});
    return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const FElem& c) const
{
    const Field& F = ring_->field();
    if (fo::is_zero(F, c))
        return Polynomial::zero(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        p.terms_.push_back(Term{mono::mul(t.mono, m), fo::mul(F, t.coeff, c)});
    return p;
}

Polynomial Polynomial::monic() const
{
    if (terms_.empty())
        return *this;
    return scaled(fo::inv(ring_->field(), terms_.front().coeff));
}

bool Polynomial::operator==(const Polynomial& o) const
{
    if (terms_.size() != o.terms_.size())
        return false;
    const Field& F = ring_->field();
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || !fo::eq(F, terms_[i].coeff, o.terms_[i].coeff))
            return false;
    return true;
}

Polynomial Polynomial::substitute(const RingPtr& target, const std::vector<Polynomial>& images) const
{
    if (static_cast<int>(images.size()) != ring_->nvars())
        throw Error("substitute: one image per variable required");
    if (ring_->field() != target->field())
        throw InvalidInputError("substitute: field mismatch");
    Polynomial acc = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (size_t i = 0; i < t.mono.size(); ++i)
            if (t.mono[i] > 0)
                prod = prod * poly_pow(images[i], t.mono[i]);
        acc = acc + prod;
    }
    return acc;
}

Polynomial Polynomial::mapped_by_name(const RingPtr& target) const
{
    if (ring_->field() != target->field())
        throw InvalidInputError("variable renaming: field mismatch");
    std::vector<int> where(static_cast<size_t>(ring_->nvars()), -1);
    for (int i = 0; i < ring_->nvars(); ++i)
        where[static_cast<size_t>(i)] = target->var_index(ring_->var_name(i));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = target->unit_monomial();
        for (size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0)
                continue;
            int j = where[i];
            if (j < 0)
                throw InvalidInputError("variable '" + ring_->var_name(static_cast<int>(i)) +
                                        "' not present in target ring");
            if (target->weight(j) != ring_->weight(static_cast<int>(i)))
                throw InvalidInputError("variable '" + ring_->var_name(static_cast<int>(i)) +
                                        "' changes weight across rings");
            m[static_cast<size_t>(j)] = t.mono[i];
        }
        out.push_back(Term{std::move(m), t.coeff});
    }
    return from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    const Field& F = ring_->field();
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = fo::to_string(F, t.coeff);
        bool negative = !c.empty() && c[0] == '-';
        std::string mag = negative ? c.substr(1) : c;
        if (first) {
            if (negative)
                s += "-";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        std::string monos;
        for (size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0)
                continue;
            if (!monos.empty())
                monos += "*";
            monos += ring_->var_name(static_cast<int>(i));
            if (t.mono[i] > 1)
                monos += "^" + std::to_string(t.mono[i]);
        }
        if (monos.empty()) {
            s += mag;
        } else if (mag == "1") {
            s += monos;
        } else {
            s += mag + "*" + monos;
        }
    }
    return s;
}

Polynomial poly_pow(const Polynomial& p, int e)
{
    if (e < 0)
        throw Error("negative polynomial power");
    Polynomial acc = Polynomial::from_int(p.ring(), 1);
    Polynomial base = p;
    while (e) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

} // namespace cihom
