#ifndef HILCERT_HILBERT_HPP
#define HILCERT_HILBERT_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "groebner.hpp"
#include "linalg.hpp"
#include "macaulay.hpp"

namespace hilcert {

struct UnitIdealError : std::domain_error {
    UnitIdealError() : std::domain_error("dimension/degree undefined for the unit ideal") {}
};

// ---- integer univariate polynomials (numerators in t) ---------------------

using ZPoly = std::vector<mpz_class>; // coefficient of t^j at index j

namespace zpoly {

inline void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}
inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}
inline ZPoly shifted(const ZPoly& a, std::size_t k) {
    if (a.empty()) return {};
    ZPoly out(a.size() + k, 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i + k] = a[i];
    return out;
}
inline mpz_class eval_at_one(const ZPoly& a) {
    mpz_class v = 0;
    for (const auto& c : a) v += c;
    return v;
}
// divide by (1 - t); requires exactness
inline ZPoly divide_by_one_minus_t(const ZPoly& a) {
    if (a.empty()) return {};
    ZPoly out(a.size() - 1, 0);
    mpz_class carry = 0; // a(t) = (1-t) q(t); q_j = a_0 + ... + a_j partial-sum form
    mpz_class acc = 0;
    for (std::size_t j = 0; j + 1 < a.size(); ++j) {
        acc += a[j];
        out[j] = acc;
    }
    acc += a.back();
    if (acc != 0) throw std::logic_error("numerator not divisible by (1 - t)");
    trim(out);
    return out;
    (void)carry;
}

} // namespace zpoly

// ---- Hilbert numerator of a monomial ideal --------------------------------

namespace detail {

inline std::vector<Monomial> interreduce_monomials(std::vector<Monomial> gens) {
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && (gens[j] != gens[i] || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(gens[i]);
    }
    std::sort(minimal.begin(), minimal.end());
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    return minimal;
}

inline std::string monomials_key(const std::vector<Monomial>& gens) {
    std::ostringstream os;
    for (const Monomial& m : gens) {
        for (int e : m.exponents()) os << e << ',';
        os << ';';
    }
    return os.str();
}

inline ZPoly numerator_rec(std::vector<Monomial> gens, std::map<std::string, ZPoly>& memo) {
    gens = interreduce_monomials(std::move(gens));
    for (const Monomial& m : gens)
        if (m.is_one()) return {}; // unit ideal: zero numerator

    if (gens.empty()) return {mpz_class(1)};

    std::string key = monomials_key(gens);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    bool pairwise_coprime = true;
    for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && pairwise_coprime; ++j)
            if (!Monomial::coprime(gens[i], gens[j])) pairwise_coprime = false;
    if (pairwise_coprime) {
        // a monomial regular sequence: Koszul numerator
        ZPoly out{mpz_class(1)};
        for (const Monomial& m : gens) {
            ZPoly factor(static_cast<std::size_t>(m.total_degree()) + 1, 0);
            factor[0] = 1;
            factor[m.total_degree()] -= 1;
            out = zpoly::mul(out, factor);
        }
        memo.emplace(std::move(key), out);
        return out;
    }

    // pivot on the most shared variable
    const std::size_t nvars = gens.front().nvars();
    std::vector<int> freq(nvars, 0);
    for (const Monomial& m : gens)
        for (std::size_t v = 0; v < nvars; ++v)
            if (m.exponent(v) > 0) ++freq[v];
    std::size_t pivot = 0;
    for (std::size_t v = 1; v < nvars; ++v)
        if (freq[v] > freq[pivot]) pivot = v;

    // N(I) = N(I + (x)) + t * N(I : x)
    std::vector<Monomial> plus;   // I + (x_pivot)
    std::vector<Monomial> colon;  // I : x_pivot
    Monomial xv(nvars);
    xv.exponent(pivot) = 1;
    plus.push_back(xv);
    for (const Monomial& m : gens) {
        if (m.exponent(pivot) == 0) plus.push_back(m);
        Monomial q = m;
        if (q.exponent(pivot) > 0) --q.exponent(pivot);
        colon.push_back(q);
    }
    ZPoly out = zpoly::add(numerator_rec(std::move(plus), memo),
                           zpoly::shifted(numerator_rec(std::move(colon), memo), 1));
    memo.emplace(std::move(key), out);
    return out;
}

} // namespace detail

// Numerator N(t) with series N(t) / (1 - t)^nvars equal to the Hilbert series
// of the monomial ideal generated by the given leading terms.
inline ZPoly monomial_hilbert_numerator(const std::vector<Monomial>& leading_terms) {
    std::map<std::string, ZPoly> memo;
    return detail::numerator_rec(leading_terms, memo);
}

// ---- Hilbert series / data -------------------------------------------------

struct HilbertSeries {
    ZPoly numerator;              // N(t); series = N(t)/(1-t)^denominator_exponent
    std::size_t denominator_exponent = 0;

    // expansion coefficient h(m)
    mpz_class value(long m) const {
        if (m < 0) return 0;
        long n = static_cast<long>(denominator_exponent) - 1;
        mpz_class v = 0;
        for (std::size_t j = 0; j < numerator.size(); ++j)
            v += numerator[j] * binomial(m - static_cast<long>(j) + n, n);
        return v;
    }

    // factor out all (1-t) from the numerator: returns (reduced numerator, count)
    std::pair<ZPoly, std::size_t> reduced() const {
        ZPoly n = numerator;
        std::size_t count = 0;
        while (!n.empty() && zpoly::eval_at_one(n) == 0) {
            n = zpoly::divide_by_one_minus_t(n);
            ++count;
        }
        return {n, count};
    }
};

using QPoly = std::vector<mpq_class>; // Hilbert polynomial, coefficient of m^j at index j

inline mpq_class qpoly_eval(const QPoly& p, long m) {
    mpq_class v = 0;
    mpq_class pw = 1;
    for (const auto& c : p) {
        v += c * pw;
        pw *= m;
    }
    return v;
}

struct HilbertData {
    HilbertSeries series;
    QPoly hilbert_polynomial;     // zero polynomial for dimension -1
    long projective_dimension = 0; // Krull dimension minus 1; >= -1
    mpz_class degree;              // length when projective_dimension == -1
    long regularity_onset = 0;     // least m with h(m) = p(m) from there on
};

namespace detail {

// Lagrange interpolation through (xs[i], ys[i])
inline QPoly interpolate(const std::vector<long>& xs, const std::vector<mpz_class>& ys) {
    const std::size_t n = xs.size();
    QPoly acc; // running sum
    for (std::size_t i = 0; i < n; ++i) {
        QPoly basis{mpq_class(1)};
        mpq_class denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            // multiply by (x - xs[j])
            QPoly next(basis.size() + 1, mpq_class(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = std::move(next);
            denom *= mpq_class(xs[i] - xs[j]);
        }
        mpq_class scale = mpq_class(ys[i]) / denom;
        if (acc.size() < basis.size()) acc.resize(basis.size(), mpq_class(0));
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
    }
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    return acc;
}

} // namespace detail

// Full Hilbert data of a proper homogeneous ideal, computed through the
// initial ideal under a graded order.
inline HilbertData hilbert_data(const Ideal& ideal) {
    if (!ideal.is_homogeneous())
        throw std::invalid_argument("hilbert_data requires homogeneous generators");
    const GroebnerBasis& gb = ideal.basis(MonomialOrder::grevlex());
    if (gb.is_unit_ideal()) throw UnitIdealError();

    const std::size_t nv = ideal.ring().variable_count();
    std::vector<Monomial> lts;
    for (const Polynomial& p : gb.elements) lts.push_back(p.leading_monomial());

    HilbertData out;
    out.series.numerator = monomial_hilbert_numerator(lts);
    out.series.denominator_exponent = nv;

    auto [nred, cancelled] = out.series.reduced();
    long krull = static_cast<long>(nv) - static_cast<long>(cancelled);
    out.projective_dimension = krull - 1;
    out.degree = zpoly::eval_at_one(nred);

    long n = static_cast<long>(nv) - 1;
    long safe_onset = std::max<long>(0, static_cast<long>(out.series.numerator.size()) - 1 - n);

    if (out.projective_dimension >= 0) {
        long d = out.projective_dimension;
        std::vector<long> xs;
        std::vector<mpz_class> ys;
        for (long i = 0; i <= d; ++i) {
            xs.push_back(safe_onset + i);
            ys.push_back(out.series.value(safe_onset + i));
        }
        out.hilbert_polynomial = detail::interpolate(xs, ys);
        for (long m = safe_onset + d + 1; m <= safe_onset + d + 10; ++m)
            if (qpoly_eval(out.hilbert_polynomial, m) != out.series.value(m))
                throw std::logic_error("interpolated Hilbert polynomial failed verification");
    } // dimension -1: the Hilbert polynomial is 0

    long onset = safe_onset;
    while (onset > 0) {
        mpq_class pv = qpoly_eval(out.hilbert_polynomial, onset - 1);
        if (pv.get_den() != 1 || pv.get_num() != out.series.value(onset - 1)) break;
        --onset;
    }
    out.regularity_onset = onset;
    return out;
}

// h_I(m) through the initial ideal; h(m) = 0 for m < 0.
inline mpz_class hilbert_function(const Ideal& ideal, long m) {
    return hilbert_data(ideal).series.value(m);
}

// Projective dimension (Krull minus one); -1 for irrelevant-primary ideals.
inline long dimension(const Ideal& ideal) { return hilbert_data(ideal).projective_dimension; }

// Degree; the length of the quotient for dimension -1.
inline mpz_class degree(const Ideal& ideal) { return hilbert_data(ideal).degree; }

// ---- independent brute-force oracle ---------------------------------------

// C(m+n, n) minus the rank of the span of monomial multiples of the
// generators in degree m; no Groebner machinery involved.
inline mpz_class hilbert_brute_force(const Ideal& ideal, long m) {
    if (m < 0) throw std::invalid_argument("hilbert_brute_force: m >= 0 required");
    if (!ideal.is_homogeneous())
        throw std::invalid_argument("hilbert_brute_force requires homogeneous generators");
    const RingDescriptor& ring = ideal.ring();
    const std::size_t nv = ring.variable_count();
    std::vector<Monomial> cols = enumerate_monomials(nv, static_cast<int>(m), true);
    std::map<Monomial, std::size_t> col_of;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;

    std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
    for (const Polynomial& g : ideal.generators()) {
        int dg = g.degree();
        if (dg > m) continue;
        for (const Monomial& mu : enumerate_monomials(nv, static_cast<int>(m) - dg, true)) {
            std::vector<std::pair<std::size_t, Scalar>> row;
            for (const auto& t : g.terms()) row.push_back({col_of.at(t.mono * mu), t.coeff});
            rows.push_back(std::move(row));
        }
    }
    Matrix mat(rows.size(), cols.size(), ring.field);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) mat.at(r, c) = v;
    return binomial(m + static_cast<long>(nv) - 1, static_cast<long>(nv) - 1) -
           mpz_class(static_cast<long>(rank(std::move(mat))));
}

// Nonzerodivisor test for homogeneous data through Hilbert numerators:
// f of degree e is regular mod I iff N_{(I,f)}(t) = (1 - t^e) N_I(t).
// Much cheaper than the colon-ideal route; falls back to it otherwise.
inline bool is_nzd_fast(const Polynomial& f, const Ideal& ideal) {
    if (f.is_zero()) throw std::invalid_argument("is_nzd_fast: zero polynomial");
    if (!f.is_homogeneous() || !ideal.is_homogeneous() || f.degree() == 0)
        return is_nzd(f, ideal);
    auto numerator = [](const Ideal& i) {
        std::vector<Monomial> lts;
        for (const Polynomial& p : i.basis(MonomialOrder::grevlex()).elements)
            lts.push_back(p.leading_monomial());
        return monomial_hilbert_numerator(lts);
    };
    ZPoly n1 = numerator(ideal);
    std::vector<Polynomial> gens = ideal.generators();
    gens.push_back(f);
    ZPoly n2 = numerator(Ideal(ideal.ring(), std::move(gens)));
    ZPoly koszul(static_cast<std::size_t>(f.degree()) + 1, 0);
    koszul[0] = 1;
    koszul[f.degree()] = -1;
    return n2 == zpoly::mul(n1, koszul);
}

// ---- exact-sequence identity ----------------------------------------------

struct ExactSequenceCheck {
    bool holds = true;
    std::optional<long> failure_m;
};

// h_{I cap J}(m) = h_I(m) + h_J(m) - h_{I+J}(m) for 1 <= m <= cap.
inline ExactSequenceCheck exact_sequence_check(const Ideal& a, const Ideal& b, long cap = 10) {
    Ideal inter = ideal_intersection(a, b);
    Ideal sum = ideal_sum(a, b);
    HilbertData hi = hilbert_data(a);
    HilbertData hj = hilbert_data(b);
    HilbertData hin = hilbert_data(inter);
    // the sum may be the unit ideal; its h is then identically 0 in positive degrees
    bool sum_unit = sum.contains_one();
    std::optional<HilbertData> hs;
    if (!sum_unit) hs = hilbert_data(sum);
    ExactSequenceCheck out;
    for (long m = 1; m <= cap; ++m) {
        mpz_class rhs = hi.series.value(m) + hj.series.value(m) -
                        (sum_unit ? mpz_class(0) : hs->series.value(m));
        if (hin.series.value(m) != rhs) {
            out.holds = false;
            out.failure_m = m;
            return out;
        }
    }
    return out;
}

} // namespace hilcert

#endif
