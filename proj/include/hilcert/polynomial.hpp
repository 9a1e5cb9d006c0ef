#ifndef HILCERT_POLYNOMIAL_HPP
#define HILCERT_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "monomial.hpp"
#include "scalar.hpp"

namespace hilcert {

// Exact multivariate polynomial in canonical form: term list sorted
// descending under the polynomial's monomial order, no zero coefficients.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Scalar coeff;
    };

    Polynomial() = default;
    explicit Polynomial(RingDescriptor ring, MonomialOrder order = MonomialOrder::grevlex())
        : ring_(std::move(ring)), order_(std::move(order)) {}

    static Polynomial zero(const RingDescriptor& ring, const MonomialOrder& order = MonomialOrder::grevlex()) {
        return Polynomial(ring, order);
    }
    static Polynomial constant(const RingDescriptor& ring, const Scalar& c,
                               const MonomialOrder& order = MonomialOrder::grevlex()) {
        Polynomial p(ring, order);
        if (!c.is_zero()) p.terms_.push_back({Monomial(ring.variable_count()), c});
        return p;
    }
    static Polynomial constant(const RingDescriptor& ring, long c,
                               const MonomialOrder& order = MonomialOrder::grevlex()) {
        return constant(ring, Scalar::from_int(ring.field, c), order);
    }
    static Polynomial variable(const RingDescriptor& ring, std::size_t i,
                               const MonomialOrder& order = MonomialOrder::grevlex()) {
        Polynomial p(ring, order);
        Monomial m(ring.variable_count());
        m.exponent(i) = 1;
        p.terms_.push_back({m, Scalar::one(ring.field)});
        return p;
    }
    static Polynomial monomial(const RingDescriptor& ring, const Monomial& m, const Scalar& c,
                               const MonomialOrder& order = MonomialOrder::grevlex()) {
        Polynomial p(ring, order);
        if (!c.is_zero()) p.terms_.push_back({m, c});
        return p;
    }

    const RingDescriptor& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const {
        check_nonzero();
        return terms_.front().mono;
    }
    const Scalar& leading_coefficient() const {
        check_nonzero();
        return terms_.front().coeff;
    }

    int degree() const {
        int d = -1;
        for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.front().mono.total_degree();
        for (const Term& t : terms_)
            if (t.mono.total_degree() != d) return false;
        return true;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one()); }
    bool is_one() const { return terms_.size() == 1 && terms_.front().mono.is_one() && terms_.front().coeff.is_one(); }

    Scalar coefficient(const Monomial& m) const {
        for (const Term& t : terms_)
            if (t.mono == m) return t.coeff;
        return Scalar::zero(ring_.field);
    }

    // Same terms under a different ambient order.
    Polynomial reordered(const MonomialOrder& order) const {
        if (order == order_) return *this;
        Polynomial p(ring_, order);
        p.terms_ = terms_;
        p.sort_terms();
        return p;
    }

    Polynomial operator+(const Polynomial& o) const {
        check_ring(o);
        const Polynomial& rhs = o.order() == order_ ? o : o.reordered(order_);
        Polynomial out(ring_, order_);
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < rhs.terms_.size()) {
            if (j == rhs.terms_.size() ||
                (i < terms_.size() && order_.greater(terms_[i].mono, rhs.terms_[j].mono))) {
                out.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || order_.greater(rhs.terms_[j].mono, terms_[i].mono)) {
                out.terms_.push_back(rhs.terms_[j++]);
            } else {
                Scalar c = terms_[i].coeff + rhs.terms_[j].coeff;
                if (!c.is_zero()) out.terms_.push_back({terms_[i].mono, c});
                ++i; ++j;
            }
        }
        return out;
    }
    Polynomial operator-() const {
        Polynomial out(ring_, order_);
        out.terms_.reserve(terms_.size());
        for (const Term& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
        return out;
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        check_ring(o);
        auto cmp = [this](const Monomial& a, const Monomial& b) { return order_.greater(a, b); };
        std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
        for (const Term& a : terms_)
            for (const Term& b : o.terms_) {
                Monomial m = a.mono * b.mono;
                Scalar c = a.coeff * b.coeff;
                auto it = acc.find(m);
                if (it == acc.end()) acc.emplace(std::move(m), std::move(c));
                else {
                    it->second += c;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        Polynomial out(ring_, order_);
        out.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) out.terms_.push_back({m, c});
        return out;
    }

    Polynomial scaled(const Scalar& c) const {
        if (c.is_zero()) return Polynomial(ring_, order_);
        Polynomial out(ring_, order_);
        out.terms_.reserve(terms_.size());
        for (const Term& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
        return out;
    }
    Polynomial times_monomial(const Monomial& m, const Scalar& c) const {
        if (c.is_zero()) return Polynomial(ring_, order_);
        Polynomial out(ring_, order_);
        out.terms_.reserve(terms_.size());
        for (const Term& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
        out.sort_terms(); // multiplication by a monomial preserves relative order for our orders, but stay safe
        return out;
    }
    Polynomial monic() const {
        check_nonzero();
        return scaled(leading_coefficient().inverse());
    }

    // Equality is canonical-form equality, independent of the ambient order.
    bool operator==(const Polynomial& o) const {
        if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
        if (order_ == o.order_) {
            for (std::size_t i = 0; i < terms_.size(); ++i)
                if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
            return true;
        }
        return *this == o.reordered(order_);
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Substitute 1 for variable `var`.
    Polynomial substitute_one(std::size_t var) const {
        auto cmp = [this](const Monomial& a, const Monomial& b) { return order_.greater(a, b); };
        std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
        for (const Term& t : terms_) {
            Monomial m = t.mono;
            m.exponent(var) = 0;
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(std::move(m), t.coeff);
            else {
                it->second += t.coeff;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
        Polynomial out(ring_, order_);
        for (auto& [m, c] : acc) out.terms_.push_back({m, c});
        return out;
    }

    // Exact division by a nonzero polynomial; throws if the division leaves a remainder.
    Polynomial exact_divide(const Polynomial& divisor) const {
        check_ring(divisor);
        if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
        const Polynomial d = divisor.order() == order_ ? divisor : divisor.reordered(order_);
        Polynomial rem = *this;
        Polynomial quot(ring_, order_);
        while (!rem.is_zero()) {
            if (!d.leading_monomial().divides(rem.leading_monomial()))
                throw std::domain_error("polynomial division not exact");
            Monomial qm = rem.leading_monomial() / d.leading_monomial();
            Scalar qc = rem.leading_coefficient() / d.leading_coefficient();
            quot = quot + Polynomial::monomial(ring_, qm, qc, order_);
            rem = rem - d.times_monomial(qm, qc);
        }
        return quot;
    }

    bool divisible_by(const Polynomial& divisor) const {
        try {
            exact_divide(divisor);
            return true;
        } catch (const std::domain_error&) {
            return false;
        }
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const Term& t : terms_) {
            std::string c = t.coeff.to_string();
            bool negative = !c.empty() && c[0] == '-';
            if (first) {
                if (negative) { os << "-"; c = c.substr(1); }
            } else {
                os << (negative ? " - " : " + ");
                if (negative) c = c.substr(1);
            }
            first = false;
            bool unit_coeff = (c == "1");
            if (t.mono.is_one()) {
                os << c;
            } else {
                if (!unit_coeff) os << c << "*";
                bool firstvar = true;
                for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
                    int e = t.mono.exponent(i);
                    if (e == 0) continue;
                    if (!firstvar) os << "*";
                    firstvar = false;
                    os << ring_.variable_names[i];
                    if (e > 1) os << "^" << e;
                }
            }
        }
        return os.str();
    }

    // Internal: append terms assumed sorted/unique is NOT required; normalizes.
    static Polynomial from_terms(const RingDescriptor& ring, const MonomialOrder& order,
                                 std::vector<Term> raw) {
        auto cmp = [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); };
        std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
        for (Term& t : raw) {
            auto it = acc.find(t.mono);
            if (it == acc.end()) acc.emplace(std::move(t.mono), std::move(t.coeff));
            else it->second += t.coeff;
        }
        Polynomial out(ring, order);
        for (auto& [m, c] : acc)
            if (!c.is_zero()) out.terms_.push_back({m, c});
        return out;
    }

private:
    void check_nonzero() const {
        if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    }
    void check_ring(const Polynomial& o) const {
        if (ring_ != o.ring_) throw std::invalid_argument("polynomial ring mismatch");
    }
    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [this](const Term& a, const Term& b) { return order_.greater(a.mono, b.mono); });
    }

    RingDescriptor ring_;
    MonomialOrder order_ = MonomialOrder::grevlex();
    std::vector<Term> terms_;
};

// ---- homogenization / affinization -------------------------------------

// Pass an affine polynomial in n variables to a homogeneous one in n+1,
// inserting the grading variable at index hom_var of the graded ring.
inline Polynomial homogenize(const Polynomial& g, const RingDescriptor& graded_ring,
                             std::size_t hom_var) {
    if (g.is_zero()) throw std::invalid_argument("cannot homogenize the zero polynomial");
    if (graded_ring.variable_count() != g.ring().variable_count() + 1)
        throw std::invalid_argument("graded ring must have one extra variable");
    int d = g.degree();
    std::vector<Polynomial::Term> out;
    for (const auto& t : g.terms()) {
        Monomial m(graded_ring.variable_count());
        std::size_t k = 0;
        for (std::size_t i = 0; i < graded_ring.variable_count(); ++i) {
            if (i == hom_var) continue;
            m.exponent(i) = t.mono.exponent(k++);
        }
        m.exponent(hom_var) = d - t.mono.total_degree();
        out.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(graded_ring, MonomialOrder::grevlex(), std::move(out));
}

// Substitute hom_var := 1 and drop the variable.
inline Polynomial affinize(const Polynomial& f, const RingDescriptor& affine_ring,
                           std::size_t hom_var) {
    if (affine_ring.variable_count() + 1 != f.ring().variable_count())
        throw std::invalid_argument("affine ring must have one fewer variable");
    std::vector<Polynomial::Term> out;
    for (const auto& t : f.terms()) {
        Monomial m(affine_ring.variable_count());
        std::size_t k = 0;
        for (std::size_t i = 0; i < f.ring().variable_count(); ++i) {
            if (i == hom_var) continue;
            m.exponent(k++) = t.mono.exponent(i);
        }
        out.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(affine_ring, MonomialOrder::grevlex(), std::move(out));
}

// Make the graded companion ring of an affine one: x0 prepended, graded flag set.
inline RingDescriptor graded_companion(const RingDescriptor& affine, const std::string& hom_name = "x0") {
    std::vector<std::string> names;
    names.push_back(hom_name);
    for (const auto& n : affine.variable_names) names.push_back(n);
    return RingDescriptor::make(std::move(names), affine.field, true);
}

inline RingDescriptor affine_companion(const RingDescriptor& graded, std::size_t hom_var = 0) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < graded.variable_count(); ++i)
        if (i != hom_var) names.push_back(graded.variable_names[i]);
    return RingDescriptor::make(std::move(names), graded.field, false);
}

// ---- seeded random polynomials ------------------------------------------

struct RandomPolynomialOptions {
    double density = 1.0;      // probability a candidate monomial receives a nonzero coefficient
    long max_abs_numerator = 9; // rationals are drawn as small nonzero integers
};

namespace detail {
inline void enumerate_monomials_rec(std::size_t nvars, int degree, bool exact, std::size_t var,
                                    Monomial& cur, int used, std::vector<Monomial>& out) {
    if (var + 1 == nvars) {
        if (exact) {
            cur.exponent(var) = degree - used;
            out.push_back(cur);
        } else {
            for (int e = 0; e <= degree - used; ++e) {
                cur.exponent(var) = e;
                out.push_back(cur);
            }
        }
        cur.exponent(var) = 0;
        return;
    }
    for (int e = 0; e <= degree - used; ++e) {
        cur.exponent(var) = e;
        enumerate_monomials_rec(nvars, degree, exact, var + 1, cur, used + e, out);
    }
    cur.exponent(var) = 0;
}
} // namespace detail

// All monomials of total degree exactly `degree` (exact=true) or at most `degree`.
inline std::vector<Monomial> enumerate_monomials(std::size_t nvars, int degree, bool exact) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    if (nvars == 0) {
        if (!exact || degree == 0) out.push_back(Monomial(0));
        return out;
    }
    Monomial cur(nvars);
    detail::enumerate_monomials_rec(nvars, degree, exact, 0, cur, 0, out);
    return out;
}

inline Scalar random_nonzero_scalar(const Field& f, std::mt19937_64& rng,
                                    long max_abs = 9) {
    if (f.is_prime_field()) {
        std::uniform_int_distribution<std::int64_t> dist(1, f.modulus - 1);
        return Scalar::from_int(f, dist(rng));
    }
    std::uniform_int_distribution<long> dist(1, max_abs);
    std::uniform_int_distribution<int> sign(0, 1);
    long v = dist(rng);
    return Scalar::from_int(f, sign(rng) ? v : -v);
}

// Deterministic for a fixed seed. A degree-`degree` polynomial, homogeneous or
// dense up to the requested density; always returns a nonzero polynomial of
// the exact requested degree.
inline Polynomial random_polynomial(const RingDescriptor& ring, int degree, bool homogeneous,
                                    std::uint64_t seed, RandomPolynomialOptions opts = {}) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    std::vector<Monomial> monos = enumerate_monomials(ring.variable_count(), degree, homogeneous);
    std::vector<Polynomial::Term> terms;
    for (const Monomial& m : monos) {
        if (keep(rng) > opts.density) continue;
        terms.push_back({m, random_nonzero_scalar(ring.field, rng, opts.max_abs_numerator)});
    }
    Polynomial p = Polynomial::from_terms(ring, MonomialOrder::grevlex(), std::move(terms));
    if (p.is_zero() || p.degree() != degree) {
        // force the degree: add one random top-degree monomial
        std::vector<Monomial> top = enumerate_monomials(ring.variable_count(), degree, true);
        std::uniform_int_distribution<std::size_t> pick(0, top.size() - 1);
        Monomial m = top[pick(rng)];
        p = p + Polynomial::monomial(ring, m, random_nonzero_scalar(ring.field, rng, opts.max_abs_numerator));
    }
    return p;
}

} // namespace hilcert

#endif
