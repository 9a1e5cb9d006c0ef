#ifndef HILCERT_GROEBNER_HPP
#define HILCERT_GROEBNER_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace hilcert {

// Reduced Groebner basis: monic, inter-reduced, unique for a fixed order.
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> elements;

    bool is_unit_ideal() const {
        return elements.size() == 1 && elements.front().is_one();
    }
    bool operator==(const GroebnerBasis& o) const { return elements == o.elements; }
    bool operator!=(const GroebnerBasis& o) const { return !(*this == o); }
};

// Remainder of f on division by G; no term of the result is divisible by any
// leading term of G.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
    Polynomial rem(f.ring(), g.order);
    Polynomial cur = f.order() == g.order ? f : f.reordered(g.order);
    while (!cur.is_zero()) {
        bool reduced = false;
        for (const Polynomial& b : g.elements) {
            if (b.leading_monomial().divides(cur.leading_monomial())) {
                Monomial qm = cur.leading_monomial() / b.leading_monomial();
                Scalar qc = cur.leading_coefficient() / b.leading_coefficient();
                cur = cur - b.times_monomial(qm, qc);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem = rem + Polynomial::monomial(f.ring(), cur.leading_monomial(),
                                             cur.leading_coefficient(), g.order);
            cur = cur - Polynomial::monomial(f.ring(), cur.leading_monomial(),
                                             cur.leading_coefficient(), g.order);
        }
    }
    return rem;
}

namespace detail {

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Monomial mf = l / f.leading_monomial();
    Monomial mg = l / g.leading_monomial();
    return f.times_monomial(mf, f.leading_coefficient().inverse()) -
           g.times_monomial(mg, g.leading_coefficient().inverse());
    (void)order;
}

} // namespace detail

// Buchberger with the normal selection strategy and both classical criteria,
// followed by minimalization and inter-reduction.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order) {
    std::vector<Polynomial> g;
    for (const Polynomial& p : generators)
        if (!p.is_zero()) g.push_back(p.reordered(order).monic());

    GroebnerBasis partial{order, {}};
    auto reduce_by = [&](const Polynomial& f) {
        partial.elements = g;
        return normal_form(f, partial);
    };

    struct Pair { std::size_t i, j; Monomial lcm; };
    auto pair_less = [&order](const Pair& a, const Pair& b) {
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            pending.push_back({i, j, Monomial::lcm(g[i].leading_monomial(), g[j].leading_monomial())});
            pending_keys.insert({i, j});
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j) push_pairs_for(j);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair p = *it;
        pending.erase(it);
        pending_keys.erase({p.i, p.j});

        // first criterion: coprime leading monomials
        if (Monomial::coprime(g[p.i].leading_monomial(), g[p.j].leading_monomial())) continue;
        // chain criterion: some k whose leading term divides the lcm, with both
        // mixed pairs already treated
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!g[k].leading_monomial().divides(p.lcm)) continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(p.j, k);
            if (!pending_keys.count({key1.first, key1.second}) &&
                !pending_keys.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial s = detail::s_polynomial(g[p.i], g[p.j], order);
        Polynomial r = reduce_by(s);
        if (!r.is_zero()) {
            g.push_back(r.monic());
            push_pairs_for(g.size() - 1);
        }
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            if (g[j].leading_monomial().divides(g[i].leading_monomial())) {
                if (g[j].leading_monomial() != g[i].leading_monomial() || j < i) redundant = true;
            }
        }
        if (!redundant) minimal.push_back(g[i]);
    }

    // inter-reduce tails
    GroebnerBasis out{order, {}};
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        GroebnerBasis others{order, {}};
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.elements.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], others);
        if (!r.is_zero()) out.elements.push_back(r.monic());
    }
    std::sort(out.elements.begin(), out.elements.end(),
              [&order](const Polynomial& a, const Polynomial& b) {
                  return order.less(a.leading_monomial(), b.leading_monomial());
              });
    return out;
}

// Handle to a finitely generated ideal with a per-order basis cache.
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(RingDescriptor ring) : ring_(std::move(ring)) {}
    Ideal(RingDescriptor ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
        for (Polynomial& p : gens)
            if (!p.is_zero()) gens_.push_back(std::move(p));
        for (const Polynomial& p : gens_)
            if (p.ring() != ring_) throw std::invalid_argument("ideal generator ring mismatch");
    }

    const RingDescriptor& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool has_generators() const { return !gens_.empty(); }

    const GroebnerBasis& basis(const MonomialOrder& order = MonomialOrder::grevlex()) const {
        auto key = order.key();
        auto it = cache_->find(key);
        if (it != cache_->end()) return it->second;
        auto res = cache_->emplace(key, buchberger(gens_, order));
        return res.first->second;
    }

    bool contains(const Polynomial& f, const MonomialOrder& order = MonomialOrder::grevlex()) const {
        return normal_form(f, basis(order)).is_zero();
    }
    bool contains_one() const { return basis().is_unit_ideal(); }
    bool is_zero_ideal() const { return basis().elements.empty(); }

    bool equals(const Ideal& o) const {
        if (ring_ != o.ring_) return false;
        return basis() == o.basis();
    }
    bool contains_ideal(const Ideal& o) const {
        for (const Polynomial& p : o.gens_)
            if (!contains(p)) return false;
        return true;
    }

    bool is_homogeneous() const {
        for (const Polynomial& p : gens_)
            if (!p.is_homogeneous()) return false;
        return true;
    }

private:
    RingDescriptor ring_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<std::map<std::string, GroebnerBasis>> cache_ =
        std::make_shared<std::map<std::string, GroebnerBasis>>();
};

// ---- ring extension helpers ----------------------------------------------

namespace detail {

inline Polynomial lift_prepend(const Polynomial& p, const RingDescriptor& ext) {
    std::vector<Polynomial::Term> terms;
    for (const auto& t : p.terms()) {
        Monomial m(ext.variable_count());
        for (std::size_t i = 0; i < p.ring().variable_count(); ++i)
            m.exponent(i + 1) = t.mono.exponent(i);
        terms.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(ext, MonomialOrder::grevlex(), std::move(terms));
}

inline Polynomial drop_first_var(const Polynomial& p, const RingDescriptor& base) {
    std::vector<Polynomial::Term> terms;
    for (const auto& t : p.terms()) {
        if (t.mono.exponent(0) != 0) throw std::logic_error("polynomial still involves auxiliary variable");
        Monomial m(base.variable_count());
        for (std::size_t i = 0; i < base.variable_count(); ++i) m.exponent(i) = t.mono.exponent(i + 1);
        terms.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(base, MonomialOrder::grevlex(), std::move(terms));
}

inline std::string fresh_aux_name(const RingDescriptor& ring) {
    std::string name = "t";
    while (ring.variable_index(name) >= 0) name += "_";
    return name;
}

} // namespace detail

// ---- ideal-theoretic operations ------------------------------------------

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("ideal ring mismatch");
    std::vector<Polynomial> gens = a.generators();
    for (const Polynomial& p : b.generators()) gens.push_back(p);
    return Ideal(a.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("ideal ring mismatch");
    std::vector<Polynomial> gens;
    for (const Polynomial& p : a.generators())
        for (const Polynomial& q : b.generators()) gens.push_back(p * q);
    return Ideal(a.ring(), std::move(gens));
}

// Generators of I with the eliminated variables removed: elements of a basis
// under an elimination order that avoid those variables.
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& vars) {
    if (vars.empty()) return ideal;
    MonomialOrder order = MonomialOrder::elimination(vars, ideal.ring().variable_count());
    const GroebnerBasis& gb = ideal.basis(order);
    std::vector<Polynomial> kept;
    for (const Polynomial& p : gb.elements) {
        bool involves = false;
        for (const auto& t : p.terms())
            for (std::size_t v : vars)
                if (t.mono.exponent(v) != 0) involves = true;
        if (!involves) kept.push_back(p.reordered(MonomialOrder::grevlex()));
    }
    return Ideal(ideal.ring(), std::move(kept));
}

// I intersect J via the auxiliary variable t and t*I + (1-t)*J.
inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("ideal ring mismatch");
    const RingDescriptor& base = a.ring();
    std::vector<std::string> names;
    names.push_back(detail::fresh_aux_name(base));
    for (const auto& n : base.variable_names) names.push_back(n);
    RingDescriptor ext = RingDescriptor::make(std::move(names), base.field, false);

    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const Polynomial& p : a.generators()) gens.push_back(t * detail::lift_prepend(p, ext));
    for (const Polynomial& q : b.generators()) gens.push_back(one_minus_t * detail::lift_prepend(q, ext));
    Ideal extended(ext, std::move(gens));
    Ideal eliminated = eliminate(extended, {0});

    std::vector<Polynomial> back;
    for (const Polynomial& p : eliminated.generators()) back.push_back(detail::drop_first_var(p, base));
    Ideal raw(base, std::move(back));
    // canonical homogeneous generators for graded work
    return Ideal(base, raw.basis().elements);
}

// (I : f), computed as (I intersect (f)) / f.
inline Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("quotient by zero polynomial");
    if (f.is_constant()) return Ideal(ideal.ring(), ideal.basis().elements);
    Ideal principal(ideal.ring(), {f});
    Ideal inter = ideal_intersection(ideal, principal);
    std::vector<Polynomial> gens;
    for (const Polynomial& p : inter.generators()) gens.push_back(p.exact_divide(f));
    return Ideal(ideal.ring(), std::move(gens));
}

// (I : f^inf): iterate the quotient until the reduced basis stabilizes.
inline Ideal saturate(const Ideal& ideal, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("saturation by zero polynomial");
    Ideal cur = ideal;
    while (true) {
        Ideal next = ideal_quotient(cur, f);
        if (next.basis() == cur.basis()) return cur;
        cur = next;
    }
}

// true iff (I : f) = I, the exact nonzerodivisor criterion.
inline bool is_nzd(const Polynomial& f, const Ideal& ideal) {
    if (f.is_zero()) throw std::invalid_argument("is_nzd: zero polynomial");
    if (ideal.basis().elements.empty()) return true; // any nonzero element is regular mod (0)
    return ideal_quotient(ideal, f).basis() == ideal.basis();
}

// Each f_i is a nonzerodivisor modulo its predecessors; a unit is only
// allowed to appear once the whole sequence is consumed.
inline bool is_weak_regular_sequence(const std::vector<Polynomial>& fs, const RingDescriptor& ring) {
    Ideal prefix(ring);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].is_zero()) return false;
        if (prefix.has_generators() && prefix.contains_one()) return false;
        if (!is_nzd(fs[i], prefix)) return false;
        std::vector<Polynomial> gens = prefix.generators();
        gens.push_back(fs[i]);
        prefix = Ideal(ring, std::move(gens));
    }
    return true;
}

// Weak-regular with a proper full ideal; graded inputs must be homogeneous.
inline bool is_regular_sequence(const std::vector<Polynomial>& fs, const RingDescriptor& ring) {
    if (ring.graded)
        for (const Polynomial& f : fs)
            if (!f.is_homogeneous())
                throw std::invalid_argument("regular-sequence test in a graded ring needs homogeneous input");
    for (const Polynomial& f : fs)
        if (f.is_zero()) return false;
    if (!is_weak_regular_sequence(fs, ring)) return false;
    return !Ideal(ring, fs).contains_one();
}

// The homogenization of the ideal (not merely of its generators): homogenize
// a basis under a graded order. Equivalently the x0-saturation of the naive
// generator homogenization.
inline Ideal projective_closure(const Ideal& affine, const RingDescriptor& graded_ring,
                                std::size_t hom_var = 0) {
    const GroebnerBasis& gb = affine.basis(MonomialOrder::grevlex());
    std::vector<Polynomial> gens;
    for (const Polynomial& p : gb.elements) gens.push_back(homogenize(p, graded_ring, hom_var));
    return Ideal(graded_ring, std::move(gens));
}

} // namespace hilcert

#endif
