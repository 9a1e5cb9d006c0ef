#ifndef HILCERT_BOUNDS_HPP
#define HILCERT_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hilbert.hpp"

namespace hilcert {

// ---- pure bound evaluators -------------------------------------------------

// h_I(m) >= C(m+d+1, d+1) - C(m-degI+d+1, d+1); holds for arbitrary
// homogeneous proper ideals of dimension d and degree degI.
inline mpz_class lower_bound_thm23(long m, long d, long deg_i) {
    if (d < 0 || deg_i < 1 || m < 1) throw std::invalid_argument("lower_bound_thm23: bad arguments");
    return binomial(m + d + 1, d + 1) - binomial(m - deg_i + d + 1, d + 1);
}

struct Dim0Bounds {
    mpz_class lower;       // m+1 below stabilization, degI at and after
    bool stabilized;       // m >= degI - 1: h equals degI exactly
};

inline Dim0Bounds dim0_bounds_lemma26(long m, long deg_i) {
    if (deg_i < 1) throw std::invalid_argument("dim0_bounds_lemma26: deg_i >= 1 required");
    if (m <= deg_i - 2) return {mpz_class(m + 1), false};
    return {mpz_class(deg_i), true};
}

// h_I(m) <= degI * m^d + irr(I) * d for unmixed radical I; irr(I), the number
// of irreducible components, is caller-supplied.
inline mpz_class upper_bound_thm21(long m, long d, long deg_i, long irr_i) {
    if (d < 0 || m < 1) throw std::invalid_argument("upper_bound_thm21: bad arguments");
    mpz_class md;
    mpz_ui_pow_ui(md.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(d));
    return deg_i * md + mpz_class(irr_i) * d;
}

// h_I(m) <= C(m+degI+d, d+1) - C(m+d, d+1)
inline mpz_class upper_bound_thm22(long m, long d, long deg_i) {
    if (d < 0 || deg_i < 1 || m < 1) throw std::invalid_argument("upper_bound_thm22: bad arguments");
    return binomial(m + deg_i + d, d + 1) - binomial(m + d, d + 1);
}

// h_I(m) <= degI * C(m+d, d)
inline mpz_class chardin_bound(long m, long d, long deg_i) {
    if (d < 0 || deg_i < 1 || m < 1) throw std::invalid_argument("chardin_bound: bad arguments");
    return deg_i * binomial(m + d, d);
}

// h_{(I,f)}(m) <= 3 degf degI C(m+d-1, d-1), valid only for m >= 5 d degI;
// in dimension 0 the quotient vanishes from m = degI + degf - 1.
struct SectionBound {
    bool applicable;
    mpz_class bound;
    long threshold;
};

inline SectionBound section_bound_thm24(long m, long d, long deg_i, long deg_f) {
    if (d < 0) throw std::invalid_argument("section_bound_thm24: d >= 0 required");
    if (d == 0) {
        long threshold = deg_i + deg_f - 1;
        if (m < threshold) return {false, 0, threshold};
        return {true, 0, threshold};
    }
    long threshold = 5 * d * deg_i;
    if (m < threshold) return {false, 0, threshold};
    return {true, mpz_class(3) * deg_f * deg_i * binomial(m + d - 1, d - 1), threshold};
}

// ---- reports ----------------------------------------------------------------

struct BoundRow {
    long m;
    std::optional<mpz_class> lower;
    mpz_class actual;
    std::optional<mpz_class> upper;
};

struct BoundReport {
    std::string bound_name;
    std::string ideal_description;
    long m_min = 1, m_max = 1;
    std::vector<BoundRow> rows;
    bool holds = true;
    std::optional<long> violated_at;
    bool extremal = false; // equality at every applicable row

    void finish() {
        holds = true;
        violated_at.reset();
        extremal = !rows.empty();
        for (const BoundRow& r : rows) {
            bool ok = (!r.lower || *r.lower <= r.actual) && (!r.upper || r.actual <= *r.upper);
            if (!ok && holds) {
                holds = false;
                violated_at = r.m;
            }
            bool tight = (r.lower && *r.lower == r.actual) || (r.upper && *r.upper == r.actual);
            if (!tight) extremal = false;
        }
        if (!holds) extremal = false;
    }
};

// Lower bound sweep over 1..m_max against the computed Hilbert function.
inline BoundReport sweep_thm23(const Ideal& ideal, long m_max, const std::string& description = "") {
    HilbertData h = hilbert_data(ideal);
    if (h.projective_dimension < 0)
        throw std::invalid_argument("sweep_thm23: dimension 0 or higher required");
    long d = h.projective_dimension;
    BoundReport rep{"thm23_lower", description, 1, m_max, {}, true, {}, false};
    for (long m = 1; m <= m_max; ++m)
        rep.rows.push_back({m, lower_bound_thm23(m, d, h.degree.get_si()), h.series.value(m), {}});
    rep.finish();
    return rep;
}

// lower(thm 2.3) <= h <= min(thm 2.1, thm 2.2, Chardin); for unmixed radical
// ideals with a caller-supplied component count.
inline BoundReport sweep_sandwich(const Ideal& ideal, long irr_i, long m_max,
                                  const std::string& description = "") {
    HilbertData h = hilbert_data(ideal);
    if (h.projective_dimension < 0)
        throw std::invalid_argument("sweep_sandwich: dimension 0 or higher required");
    long d = h.projective_dimension;
    long deg_i = h.degree.get_si();
    BoundReport rep{"sandwich", description, 1, m_max, {}, true, {}, false};
    for (long m = 1; m <= m_max; ++m) {
        mpz_class up = upper_bound_thm21(m, d, deg_i, irr_i);
        up = std::min(up, upper_bound_thm22(m, d, deg_i));
        up = std::min(up, chardin_bound(m, d, deg_i));
        rep.rows.push_back({m, lower_bound_thm23(m, d, deg_i), h.series.value(m), up});
    }
    rep.finish();
    return rep;
}

// ---- genericity with a posteriori certification -----------------------------

// Seeded random linear form certified as a nonzerodivisor modulo I; retries
// with fresh coefficients up to the limit.
inline std::optional<Polynomial> generic_linear_nzd(const Ideal& ideal, std::uint64_t seed,
                                                    int retries = 8) {
    for (int attempt = 0; attempt < retries; ++attempt) {
        Polynomial eta = random_polynomial(ideal.ring(), 1, true, seed + 7919 * attempt);
        if (is_nzd(eta, ideal)) return eta;
    }
    return std::nullopt;
}

inline std::optional<Polynomial> generic_form_nzd(const Ideal& ideal, int degree,
                                                  std::uint64_t seed, int retries = 8) {
    for (int attempt = 0; attempt < retries; ++attempt) {
        Polynomial f = random_polynomial(ideal.ring(), degree, true, seed + 7919 * attempt);
        if (is_nzd(f, ideal)) return f;
    }
    return std::nullopt;
}

// ---- witness for the section-degree drop ------------------------------------

struct SectionWitness {
    long m0;
    mpz_class h_value;   // h_{(I, eta)}(m0)
    mpz_class rhs;       // C(m0+d, d) - C(m0+d-3degI, d)
};

// Least m0 in [3 degI, 5 d degI] with h_{(I,eta)}(m0) <= C(m0+d,d) - C(m0+d-3degI,d).
// Absence signals that the input violates the unmixed-radical hypotheses.
inline std::optional<SectionWitness> lemma_2_7_witness(const Ideal& ideal, const Polynomial& eta) {
    if (!is_nzd(eta, ideal)) throw std::invalid_argument("lemma_2_7_witness: eta must be a nonzerodivisor");
    HilbertData h = hilbert_data(ideal);
    long d = h.projective_dimension;
    if (d < 1) throw std::invalid_argument("lemma_2_7_witness: dimension >= 1 required");
    long deg_i = h.degree.get_si();
    std::vector<Polynomial> gens = ideal.generators();
    gens.push_back(eta);
    Ideal section(ideal.ring(), std::move(gens));
    HilbertData hs = hilbert_data(section);
    for (long m0 = 3 * deg_i; m0 <= 5 * d * deg_i; ++m0) {
        mpz_class rhs = binomial(m0 + d, d) - binomial(m0 + d - 3 * deg_i, d);
        mpz_class val = hs.series.value(m0);
        if (val <= rhs) return SectionWitness{m0, val, rhs};
    }
    return std::nullopt;
}

// ---- extremal / structural detectors ----------------------------------------

// True iff h_I attains the theorem-2.3 lower bound everywhere; the extremal
// ideals are exactly (u_1..u_{n-d-1}, f) for independent linear forms u_i and
// f outside their span. Not applicable in dimension -1.
inline std::optional<bool> extremal_test_prop26(const Ideal& ideal) {
    HilbertData h = hilbert_data(ideal);
    if (h.projective_dimension < 0) return std::nullopt;
    long d = h.projective_dimension;
    long deg_i = h.degree.get_si();
    long window = std::max<long>(h.regularity_onset + deg_i, deg_i + 1);
    for (long m = 1; m <= window; ++m)
        if (h.series.value(m) != lower_bound_thm23(m, d, deg_i)) return false;
    return true;
}

struct LinearClosure {
    Ideal closure;       // ideal generated by the degree-1 part of I
    long linear_dim;     // dim L(V) = n - (independent linear forms)
    bool h1_consistent;  // h_I(1) = linear_dim + 1
};

inline LinearClosure linear_closure(const Ideal& ideal) {
    if (!ideal.is_homogeneous()) throw std::invalid_argument("linear_closure: homogeneous input required");
    const GroebnerBasis& gb = ideal.basis(MonomialOrder::grevlex());
    std::vector<Polynomial> linears;
    for (const Polynomial& p : gb.elements)
        if (p.degree() == 1) linears.push_back(p);
    long n = static_cast<long>(ideal.ring().variable_count()) - 1;
    long count = static_cast<long>(linears.size()); // reduced basis elements are independent
    LinearClosure out{Ideal(ideal.ring(), std::move(linears)), n - count, false};
    bool unit = ideal.contains_one();
    out.h1_consistent = !unit && hilbert_data(ideal).series.value(1) == out.linear_dim + 1;
    return out;
}

// The varieties lie in disjoint linear subspaces iff I + J contains every variable.
inline bool disjoint_subspaces_lemma23(const Ideal& a, const Ideal& b) {
    if (!a.is_homogeneous() || !b.is_homogeneous())
        throw std::invalid_argument("disjoint_subspaces_lemma23: homogeneous inputs required");
    Ideal sum = ideal_sum(a, b);
    for (std::size_t v = 0; v < a.ring().variable_count(); ++v)
        if (!sum.contains(Polynomial::variable(a.ring(), v))) return false;
    return true;
}

// ---- fixture constructors ----------------------------------------------------

inline RingDescriptor projective_ring(long n, Field f = Field::rationals()) {
    std::vector<std::string> names;
    for (long i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return RingDescriptor::make(std::move(names), f, true);
}

// (x_{d+2}, ..., x_n, f) with f a degree-e form in x_0..x_{d+1}: a degree-e
// hypersurface inside a (d+1)-dimensional coordinate subspace of P^n.
inline Ideal fixture_hypersurface_in_subspace(long n, long d, long e,
                                              std::uint64_t seed = 1,
                                              Field field = Field::rationals()) {
    if (e < 1 || d < 0 || d > n - 1)
        throw std::invalid_argument("fixture_hypersurface_in_subspace: need e >= 1, 0 <= d <= n-1");
    RingDescriptor r = projective_ring(n, field);
    std::vector<Polynomial> gens;
    for (long i = d + 2; i <= n; ++i) gens.push_back(Polynomial::variable(r, i));

    // a degree-e form in the surviving variables, outside the span of the linears
    RingDescriptor sub = projective_ring(d + 1, field);
    Polynomial fs = random_polynomial(sub, static_cast<int>(e), true, seed);
    std::vector<Polynomial::Term> lifted;
    for (const auto& t : fs.terms()) {
        Monomial m(r.variable_count());
        for (long i = 0; i <= d + 1; ++i) m.exponent(i) = t.mono.exponent(i);
        lifted.push_back({m, t.coeff});
    }
    gens.push_back(Polynomial::from_terms(r, MonomialOrder::grevlex(), std::move(lifted)));
    return Ideal(r, std::move(gens));
}

// 2x2 minors of the matrix of consecutive coordinates: the degree-n rational
// normal curve in P^n.
inline Ideal fixture_rational_normal_curve(long n, Field field = Field::rationals()) {
    if (n < 1) throw std::invalid_argument("fixture_rational_normal_curve: n >= 1 required");
    RingDescriptor r = projective_ring(n, field);
    std::vector<Polynomial> gens;
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            // x_i x_{j+1} - x_{i+1} x_j
            Polynomial p = Polynomial::variable(r, i) * Polynomial::variable(r, j + 1) -
                           Polynomial::variable(r, i + 1) * Polynomial::variable(r, j);
            gens.push_back(std::move(p));
        }
    return Ideal(r, std::move(gens));
}

struct CnDeltaFixture {
    Ideal ideal;                   // intersection of the component ideals
    std::vector<Ideal> components; // one rational normal curve per block
    long total_degree;             // |delta|
    long component_count;          // l
};

// Union of rational normal curves of degrees delta_j placed in pairwise
// disjoint coordinate blocks of P^n; requires |delta| + l <= n + 1.
inline CnDeltaFixture fixture_c_n_delta(long n, const std::vector<long>& delta,
                                        Field field = Field::rationals()) {
    long total = 0;
    for (long dj : delta) {
        if (dj < 1) throw std::invalid_argument("fixture_c_n_delta: degrees must be >= 1");
        total += dj;
    }
    long l = static_cast<long>(delta.size());
    if (l < 1 || total + l > n + 1)
        throw std::invalid_argument("fixture_c_n_delta: need |delta| + l <= n + 1");
    RingDescriptor r = projective_ring(n, field);

    CnDeltaFixture out{Ideal(r), {}, total, l};
    long offset = 0;
    for (long dj : delta) {
        // block occupies variables [offset, offset + dj]
        std::vector<Polynomial> gens;
        for (long i = 0; i <= n; ++i)
            if (i < offset || i > offset + dj) gens.push_back(Polynomial::variable(r, i));
        for (long i = 0; i < dj; ++i)
            for (long j = i + 1; j < dj; ++j)
                gens.push_back(Polynomial::variable(r, offset + i) * Polynomial::variable(r, offset + j + 1) -
                               Polynomial::variable(r, offset + i + 1) * Polynomial::variable(r, offset + j));
        out.components.push_back(Ideal(r, std::move(gens)));
        offset += dj + 1;
    }

    Ideal acc = out.components.front();
    for (std::size_t k = 1; k < out.components.size(); ++k)
        acc = ideal_intersection(acc, out.components[k]);
    out.ideal = acc;
    return out;
}

// deg(V cap W) <= deg V * deg W, reported on fixtures where the sum is known
// to be reduced.
inline BoundReport bezout_check(const Ideal& a, const Ideal& b, const std::string& description = "") {
    Ideal sum = ideal_sum(a, b);
    if (sum.contains_one()) throw std::invalid_argument("bezout_check: the sum must be proper");
    BoundReport rep{"bezout", description, 0, 0, {}, true, {}, false};
    rep.rows.push_back({0, {}, degree(sum), degree(a) * degree(b)});
    rep.finish();
    return rep;
}

} // namespace hilcert

#endif
