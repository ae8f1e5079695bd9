#include "cihom/modgb.hpp"

#include <algorithm>
#include <set>

namespace cihom::modgb {

namespace fo = field_ops;

Vec vec_zero(const RingPtr& ring, int rank)
{
    return Vec(static_cast<size_t>(rank), Polynomial::zero(ring));
}

bool vec_is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Vec vec_add(const Vec& a, const Vec& b)
{
    Vec c;
    c.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        c.push_back(a[i] + b[i]);
    return c;
}

Vec vec_sub(const Vec& a, const Vec& b)
{
    Vec c;
    c.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        c.push_back(a[i] - b[i]);
    return c;
}

Vec vec_scaled(const Vec& a, const FElem& c)
{
    Vec r;
    r.reserve(a.size());
    for (const auto& p : a)
        r.push_back(p.scaled(c));
    return r;
}

Vec vec_times_term(const Vec& a, const Monomial& m, const FElem& c)
{
    Vec r;
    r.reserve(a.size());
    for (const auto& p : a)
        r.push_back(p.times_term(m, c));
    return r;
}

Vec vec_times_poly(const Vec& a, const Polynomial& p)
{
    Vec r;
    r.reserve(a.size());
    for (const auto& q : a)
        r.push_back(q * p);
    return r;
}

long long vec_degree(const RingPtr& ring, const std::vector<long long>& shifts, const Vec& v)
{
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            return ring->weighted_degree(v[i].lead_mono()) + shifts[i];
    return -1;
}

bool vec_is_homogeneous(const RingPtr& ring, const std::vector<long long>& shifts, const Vec& v)
{
    long long d = -1;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero())
            continue;
        if (!v[i].is_homogeneous())
            return false;
        long long di = ring->weighted_degree(v[i].lead_mono()) + shifts[i];
        if (d == -1)
            d = di;
        else if (d != di)
            return false;
    }
    return true;
}

Engine::Engine(RingPtr ring, std::vector<long long> shifts, Options opt)
    : ring_(std::move(ring)), shifts_(std::move(shifts)), opt_(opt)
{
    if (opt_.coprime_skip && (opt_.track || rank() != 1))
        throw Error("product criterion requires untracked rank-1 input");
}

int Engine::cmp_modterm(int pos_a, const Monomial& a, int pos_b, const Monomial& b) const
{
    long long da = ring_->weighted_degree(a) + shifts_[static_cast<size_t>(pos_a)];
    long long db = ring_->weighted_degree(b) + shifts_[static_cast<size_t>(pos_b)];
    if (da != db)
        return da < db ? -1 : 1;
    if (int c = ring_->cmp(a, b))
        return c;
    if (pos_a != pos_b)
        return pos_a < pos_b ? 1 : -1; // earlier position wins
    return 0;
}

Lead Engine::lead_of(const Vec& v) const
{
    Lead best;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero())
            continue;
        int pos = static_cast<int>(i);
        const Term& t = v[i].lead();
        if (best.pos < 0 || cmp_modterm(pos, t.mono, best.pos, best.mono) > 0) {
            best.pos = pos;
            best.mono = t.mono;
            best.coeff = t.coeff;
        }
    }
    return best;
}

int Engine::add_generator(Vec v)
{
    int idx = ngens_++;
    if (opt_.track)
        for (auto& b : basis_)
            b.tail.push_back(Polynomial::zero(ring_));
    if (vec_is_zero(v)) {
        if (opt_.track) {
            // A zero generator contributes the trivial syzygy e_idx.
            for (auto& s : syzygies_)
                s.push_back(Polynomial::zero(ring_));
            Vec e(static_cast<size_t>(ngens_), Polynomial::zero(ring_));
            e[static_cast<size_t>(idx)] = Polynomial::from_int(ring_, 1);
            syzygies_.push_back(std::move(e));
        }
        return idx;
    }
    if (opt_.track)
        for (auto& s : syzygies_)
            s.push_back(Polynomial::zero(ring_));
    std::vector<Polynomial> tail;
    if (opt_.track) {
        tail.assign(static_cast<size_t>(ngens_), Polynomial::zero(ring_));
        tail[static_cast<size_t>(idx)] = Polynomial::from_int(ring_, 1);
    }
    insert_basis(std::move(v), std::move(tail));
    return idx;
}

void Engine::insert_basis(Vec v, std::vector<Polynomial> tail)
{
    BasisElem e;
    e.lead = lead_of(v);
    e.v = std::move(v);
    e.tail = std::move(tail);
    int k = static_cast<int>(basis_.size());
    for (int i = 0; i < k; ++i) {
        const BasisElem& b = basis_[static_cast<size_t>(i)];
        if (b.lead.pos != e.lead.pos)
            continue;
        if (opt_.coprime_skip && mono::coprime(b.lead.mono, e.lead.mono))
            continue;
        Monomial l = mono::lcm(b.lead.mono, e.lead.mono);
        long long deg = ring_->weighted_degree(l) + shifts_[static_cast<size_t>(e.lead.pos)];
        pending_.push_back(Pair{deg, i, k});
    }
    basis_.push_back(std::move(e));
}

Vec Engine::reduce_top_tracked(Vec v, std::vector<Polynomial>* tail) const
{
    const auto& limits = ResourceLimits::get();
    for (;;) {
        Lead lv = lead_of(v);
        if (lv.pos < 0)
            return v;
        const BasisElem* red = nullptr;
        for (const auto& b : basis_) {
            if (b.lead.pos == lv.pos && mono::divides(b.lead.mono, lv.mono)) {
                red = &b;
                break;
            }
        }
        if (!red)
            return v;
        if (++reductions_ > limits.max_gb_pairs)
            throw ResourceGuardError("Groebner reduction budget exhausted (CIHOM_MAX_GB_PAIRS)");
        Monomial m = mono::div(lv.mono, red->lead.mono);
        FElem c = fo::div(ring_->field(), lv.coeff, red->lead.coeff);
        v = vec_sub(v, vec_times_term(red->v, m, c));
        if (tail)
            for (size_t i = 0; i < tail->size(); ++i)
                (*tail)[i] = (*tail)[i] - red->tail[i].times_term(m, c);
    }
}

void Engine::complete()
{
    std::sort(pending_.begin(), pending_.end());
    while (!pending_.empty()) {
        // Pending stays sorted; new pairs are merged in as they appear.
        Pair pr = pending_.front();
        pending_.erase(pending_.begin());
        const BasisElem& gi = basis_[static_cast<size_t>(pr.i)];
        const BasisElem& gj = basis_[static_cast<size_t>(pr.j)];
        Monomial l = mono::lcm(gi.lead.mono, gj.lead.mono);
        Monomial ui = mono::div(l, gi.lead.mono);
        Monomial uj = mono::div(l, gj.lead.mono);
        FElem ci = fo::inv(ring_->field(), gi.lead.coeff);
        FElem cj = fo::inv(ring_->field(), gj.lead.coeff);
        Vec sp = vec_sub(vec_times_term(gi.v, ui, ci), vec_times_term(gj.v, uj, cj));
        std::vector<Polynomial> tail;
        if (opt_.track) {
            tail.reserve(static_cast<size_t>(ngens_));
            for (size_t t = 0; t < static_cast<size_t>(ngens_); ++t)
                tail.push_back(gi.tail[t].times_term(ui, ci) - gj.tail[t].times_term(uj, cj));
        }
        sp = reduce_top_tracked(std::move(sp), opt_.track ? &tail : nullptr);
        if (vec_is_zero(sp)) {
            if (opt_.track && !std::all_of(tail.begin(), tail.end(),
                                           [](const Polynomial& p) { return p.is_zero(); }))
                syzygies_.push_back(std::move(tail));
            continue;
        }
        size_t before = pending_.size();
        insert_basis(std::move(sp), std::move(tail));
        std::sort(pending_.begin() + static_cast<long>(before), pending_.end());
        std::inplace_merge(pending_.begin(), pending_.begin() + static_cast<long>(before),
                           pending_.end());
    }
}

Vec Engine::reduce_top(Vec v) const
{
    return reduce_top_tracked(std::move(v), nullptr);
}

Vec Engine::normal_form(Vec v) const
{
    Vec result = vec_zero(ring_, rank());
    for (;;) {
        v = reduce_top_tracked(std::move(v), nullptr);
        Lead lv = lead_of(v);
        if (lv.pos < 0)
            break;
        // Move the irreducible lead term into the result and continue.
        Vec t = vec_zero(ring_, rank());
        t[static_cast<size_t>(lv.pos)] = Polynomial::monomial(ring_, lv.mono, lv.coeff);
        result = vec_add(result, t);
        v = vec_sub(v, t);
    }
    return result;
}

bool Engine::is_member(const Vec& v) const
{
    return vec_is_zero(reduce_top(v));
}

Engine::Expr Engine::express(Vec v) const
{
    if (!opt_.track)
        throw Error("express() requires a tracking engine");
    std::vector<Polynomial> tail(static_cast<size_t>(ngens_), Polynomial::zero(ring_));
    Vec result = vec_zero(ring_, rank());
    for (;;) {
        v = reduce_top_tracked(std::move(v), &tail);
        Lead lv = lead_of(v);
        if (lv.pos < 0)
            break;
        Vec t = vec_zero(ring_, rank());
        t[static_cast<size_t>(lv.pos)] = Polynomial::monomial(ring_, lv.mono, lv.coeff);
        result = vec_add(result, t);
        v = vec_sub(v, t);
    }
    Expr e;
    e.remainder = std::move(result);
    e.cofactors.reserve(tail.size());
    for (auto& p : tail)
        e.cofactors.push_back(-p);
    return e;
}

std::vector<std::pair<int, Monomial>> Engine::lead_terms() const
{
    std::vector<std::pair<int, Monomial>> out;
    out.reserve(basis_.size());
    for (const auto& b : basis_)
        out.emplace_back(b.lead.pos, b.lead.mono);
    return out;
}

} // namespace cihom::modgb
