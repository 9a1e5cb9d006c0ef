#ifndef HILCERT_NULLSTELLENSATZ_HPP
#define HILCERT_NULLSTELLENSATZ_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "regseq.hpp"

namespace hilcert {

// ---- geometric degree of a system (sampled estimate) ---------------------

// Coefficients of the combinations g_i = sum_j lambda_ij * pool_j, where the
// pool is f_1..f_s over Q and {f_i} + {x_v f_i} over a prime field.
using LambdaMatrix = std::vector<std::vector<Scalar>>;

struct DegreeTrial {
    std::uint64_t seed = 0;
    LambdaMatrix lambda;
    std::size_t t = 0;                   // minimal unit prefix, or s
    std::vector<mpz_class> step_degrees; // deg of the closure of V(g_1..g_i), i <= min(t,n)-1
    bool generates_input = false;
    bool weak_regular = false;
    mpz_class delta = 0;                 // meaningful when the trial passed
    bool passed() const { return generates_input && weak_regular; }
};

struct GeometricDegreeReport {
    std::vector<DegreeTrial> trials;
    mpz_class delta_estimate = 0; // min over passing trials; an upper estimate
    bool char_p_mode = false;
    // radicality of the intermediate ideals is never certified, only the
    // weak-regularity and generation conditions are
    bool unverified_radicality = true;
};

namespace detail {

// Grading variable name that does not collide with the affine variables.
inline RingDescriptor nss_graded_ring(const RingDescriptor& affine) {
    std::string name = "x0";
    while (affine.variable_index(name) >= 0) name += "_";
    return graded_companion(affine, name);
}

inline std::vector<Polynomial> combination_pool(const std::vector<Polynomial>& fs) {
    const RingDescriptor& ring = fs.front().ring();
    std::vector<Polynomial> pool = fs;
    if (ring.field.is_prime_field())
        for (std::size_t v = 0; v < ring.variable_count(); ++v)
            for (const Polynomial& f : fs)
                pool.push_back(Polynomial::variable(ring, v) * f);
    return pool;
}

inline LambdaMatrix identity_lambda(std::size_t s, std::size_t cols, const Field& field) {
    LambdaMatrix m(s, std::vector<Scalar>(cols, Scalar::zero(field)));
    for (std::size_t i = 0; i < s; ++i) m[i][i] = Scalar::one(field);
    return m;
}

inline LambdaMatrix random_lambda(std::size_t rows, std::size_t cols, const Field& field,
                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> mag(1, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    LambdaMatrix m(rows);
    for (auto& row : m) {
        row.reserve(cols);
        for (std::size_t c = 0; c < cols; ++c)
            row.push_back(Scalar::from_int(field, sign(rng) ? mag(rng) : -mag(rng)));
    }
    return m;
}

// The two admissible shapes: the unit ideal, or a complete intersection of
// dimension n - s.
inline void check_system_shape(const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw std::invalid_argument("empty polynomial system");
    const RingDescriptor& ring = fs.front().ring();
    if (ring.graded) throw std::invalid_argument("the certificate pipeline works on affine input");
    for (const Polynomial& f : fs)
        if (f.is_zero()) throw std::invalid_argument("zero polynomial in the system");
    Ideal ideal(ring, fs);
    if (ideal.contains_one()) return;
    const long n = static_cast<long>(ring.variable_count());
    const long s = static_cast<long>(fs.size());
    long dim = hilbert_data(projective_closure(ideal, nss_graded_ring(ring))).projective_dimension;
    if (dim != n - s)
        throw std::invalid_argument("system is neither the unit ideal nor a complete intersection");
}

} // namespace detail

// One sampled combination: form the g_i, locate the minimal unit prefix,
// certify generation and weak-regularity, and record the intermediate
// projective degrees.
inline DegreeTrial run_degree_trial(const std::vector<Polynomial>& fs, const LambdaMatrix& lambda,
                                    std::uint64_t seed = 0) {
    const RingDescriptor& ring = fs.front().ring();
    std::vector<Polynomial> pool = detail::combination_pool(fs);
    DegreeTrial trial;
    trial.seed = seed;
    trial.lambda = lambda;
    std::vector<Polynomial> gs;
    for (const auto& row : lambda) {
        Polynomial g = Polynomial::zero(ring);
        for (std::size_t j = 0; j < pool.size() && j < row.size(); ++j)
            if (!row[j].is_zero()) g = g + pool[j].scaled(row[j]);
        gs.push_back(g);
    }
    for (const Polynomial& g : gs)
        if (g.is_zero()) return trial; // degenerate draw

    const std::size_t s = fs.size();
    std::size_t t = s;
    for (std::size_t i = 1; i <= gs.size(); ++i) {
        Ideal prefix(ring, std::vector<Polynomial>(gs.begin(), gs.begin() + i));
        if (prefix.contains_one()) {
            t = i;
            break;
        }
    }
    trial.t = t;

    std::vector<Polynomial> head(gs.begin(), gs.begin() + t);
    Ideal head_ideal(ring, head);
    Ideal input(ring, fs);
    trial.generates_input =
        head_ideal.contains_one() ? input.contains_one() : head_ideal.equals(input);
    if (!trial.generates_input) return trial;
    trial.weak_regular = is_weak_regular_sequence(head, ring);
    if (!trial.weak_regular) return trial;

    const long n = static_cast<long>(ring.variable_count());
    const long steps = std::min<long>(static_cast<long>(t), n) - 1;
    RingDescriptor graded = detail::nss_graded_ring(ring);
    mpz_class best = 1; // empty max: deg of the empty prefix chain is 1
    for (long i = 1; i <= steps; ++i) {
        Ideal prefix(ring, std::vector<Polynomial>(gs.begin(), gs.begin() + i));
        mpz_class deg = degree(projective_closure(prefix, graded));
        trial.step_degrees.push_back(deg);
        if (deg > best) best = deg;
    }
    trial.delta = best;
    return trial;
}

inline GeometricDegreeReport geometric_degree_estimate(const std::vector<Polynomial>& fs,
                                                       const std::vector<LambdaMatrix>& lambdas,
                                                       const std::vector<std::uint64_t>& seeds = {}) {
    detail::check_system_shape(fs);
    GeometricDegreeReport rep;
    rep.char_p_mode = fs.front().ring().field.is_prime_field();
    std::optional<mpz_class> best;
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        DegreeTrial t = run_degree_trial(fs, lambdas[k], k < seeds.size() ? seeds[k] : 0);
        if (t.passed() && (!best || t.delta < *best)) best = t.delta;
        rep.trials.push_back(std::move(t));
    }
    if (!best) {
        std::ostringstream msg;
        msg << "geometric degree estimate: none of " << lambdas.size()
            << " sampled combinations passed certification";
        throw RetryExhausted(msg.str());
    }
    rep.delta_estimate = *best;
    return rep;
}

// Seeded sampling. The identity combination is always included: whenever the
// input is itself an admissible chain it pins the estimate to the degrees of
// the actual prefix varieties, which generic draws can only overshoot.
inline GeometricDegreeReport geometric_degree_estimate(const std::vector<Polynomial>& fs,
                                                       int trials = 6, std::uint64_t seed = 1) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    const RingDescriptor& ring = fs.front().ring();
    const std::size_t cols = detail::combination_pool(fs).size();
    std::vector<LambdaMatrix> lambdas{detail::identity_lambda(fs.size(), cols, ring.field)};
    std::vector<std::uint64_t> seeds{0};
    for (int k = 1; k < trials; ++k) {
        std::uint64_t sk = seed + 7919u * static_cast<std::uint64_t>(k);
        lambdas.push_back(detail::random_lambda(fs.size(), cols, ring.field, sk));
        seeds.push_back(sk);
    }
    return geometric_degree_estimate(fs, lambdas, seeds);
}

// ---- gamma / D bookkeeping ------------------------------------------------

struct GammaD {
    std::vector<long> h_degrees;
    std::vector<mpz_class> ideal_degrees; // deg of the closure of each proper prefix; 0 marks unit
    std::vector<mpz_class> gamma;
    std::vector<mpz_class> c;
    std::vector<mpz_class> d_sequence;
    mpz_class cap = 0; // closed-form cap on the last D
    bool within_cap = false;
};

// Exact gamma_i, c_i and D_i for a weak regular affine sequence, plus the
// closed-form cap min(s,n)^2 (d-1+3n) max_i deg(prefix closure).
inline GammaD gamma_d_sequences(const std::vector<Polynomial>& hs) {
    if (hs.empty()) throw std::invalid_argument("empty sequence");
    const RingDescriptor& ring = hs.front().ring();
    if (ring.graded) throw std::invalid_argument("gamma/D bookkeeping works on affine input");
    if (!is_weak_regular_sequence(hs, ring))
        throw std::invalid_argument("gamma/D bookkeeping needs a weak regular sequence");

    const long n = static_cast<long>(ring.variable_count());
    const long s = static_cast<long>(hs.size());
    RingDescriptor graded = detail::nss_graded_ring(ring);
    GammaD out;
    mpz_class prev = 0; // degree of the previous proper prefix
    for (long i = 1; i <= s; ++i) {
        long hd = hs[i - 1].degree();
        out.h_degrees.push_back(hd);
        Ideal prefix(ring, std::vector<Polynomial>(hs.begin(), hs.begin() + i));
        bool unit = prefix.contains_one();
        mpz_class di = unit ? mpz_class(0) : degree(projective_closure(prefix, graded));
        out.ideal_degrees.push_back(di);
        if (i == 1)
            out.gamma.push_back(0);
        else if (!unit)
            out.gamma.push_back(hd * prev - di);
        else
            out.gamma.push_back(hd + prev - 1); // terminal step: x0 power killing the prefix
        if (i <= 2)
            out.c.push_back(0);
        else if (!unit)
            out.c.push_back(std::max(mpz_class(0), mpz_class(5 * (n + 1 - i) * prev - hd)));
        else
            out.c.push_back(std::max(mpz_class(0), mpz_class(prev - hd)));
        prev = di;
    }
    for (long i = 1; i <= s; ++i) {
        mpz_class d = 0;
        for (long j = 2; j <= i; ++j) d += (i + 1 - j) * out.gamma[j - 1];
        for (long j = 3; j <= i - 1; ++j) d += (i - j) * out.c[j - 1];
        out.d_sequence.push_back(d);
    }

    long dmax = *std::max_element(out.h_degrees.begin(), out.h_degrees.end());
    mpz_class delta_max = 1;
    for (long i = 1; i <= s - 1; ++i)
        if (out.ideal_degrees[i - 1] > delta_max) delta_max = out.ideal_degrees[i - 1];
    long m = std::min(s, n);
    out.cap = mpz_class(m) * m * (dmax - 1 + 3 * n) * delta_max;
    out.within_cap = out.d_sequence.back() <= out.cap;
    if (!out.within_cap)
        throw std::logic_error("D sequence exceeds its closed-form cap");
    return out;
}

// ---- degree-bounded certificates -------------------------------------------

struct Certificate {
    Polynomial g;
    std::vector<Polynomial> cofactors;
    long achieved_D = -1;
    mpz_class bound_D = 0;
    bool verified = false;
};

// Exact linear algebra at a fixed degree excess D: unknowns are the
// coefficients of each a_i over the monomials of degree at most
// max(deg g, 1) + D - deg f_i, equations match every monomial of
// sum a_i f_i - g to zero. A success is re-verified by expansion.
inline std::optional<Certificate> certificate_at_degree(const Polynomial& g,
                                                        const std::vector<Polynomial>& fs,
                                                        long D) {
    if (fs.empty()) throw std::invalid_argument("empty polynomial system");
    if (D < 0) throw std::invalid_argument("negative degree excess");
    const RingDescriptor& ring = fs.front().ring();
    const Field& field = ring.field;
    for (const Polynomial& f : fs)
        if (f.is_zero()) throw std::invalid_argument("zero polynomial in the system");

    if (g.is_zero()) {
        Certificate cert{g, std::vector<Polynomial>(fs.size(), Polynomial::zero(ring)), D,
                         mpz_class(D), true};
        return cert;
    }

    const std::size_t n = ring.variable_count();
    const long total = std::max(g.degree(), 1) + D;

    std::vector<Monomial> row_mons = enumerate_monomials(n, static_cast<int>(total), false);
    std::map<std::vector<int>, std::size_t> row_of;
    for (std::size_t r = 0; r < row_mons.size(); ++r) row_of[row_mons[r].exponents()] = r;

    struct Col {
        std::size_t gen;
        Monomial mono;
    };
    std::vector<Col> cols;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        long cap = total - fs[i].degree();
        if (cap < 0) continue;
        for (Monomial& m : enumerate_monomials(n, static_cast<int>(cap), false))
            cols.push_back({i, std::move(m)});
    }
    if (cols.empty()) return std::nullopt;

    Matrix a(row_mons.size(), cols.size(), field);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        Polynomial prod = fs[cols[c].gen].times_monomial(cols[c].mono, Scalar::one(field));
        for (const auto& term : prod.terms()) a.at(row_of.at(term.mono.exponents()), c) = term.coeff;
    }
    std::vector<Scalar> b(row_mons.size(), Scalar::zero(field));
    for (const auto& term : g.terms()) b[row_of.at(term.mono.exponents())] = term.coeff;

    auto sol = solve_linear(a, b);
    if (!sol) return std::nullopt;

    std::vector<Polynomial> as(fs.size(), Polynomial::zero(ring));
    for (std::size_t c = 0; c < cols.size(); ++c)
        if (!(*sol)[c].is_zero())
            as[cols[c].gen] = as[cols[c].gen] + Polynomial::monomial(ring, cols[c].mono, (*sol)[c]);

    Polynomial sum = Polynomial::zero(ring);
    for (std::size_t i = 0; i < fs.size(); ++i) sum = sum + as[i] * fs[i];
    bool ok = sum == g;
    for (std::size_t i = 0; i < fs.size() && ok; ++i)
        if (!as[i].is_zero() && as[i].degree() + fs[i].degree() > total) ok = false;
    if (!ok) throw std::logic_error("certificate re-expansion failed"); // solver soundness
    Certificate cert{g, std::move(as), D, mpz_class(D), true};
    return cert;
}

namespace detail {

// Least satisfiable D in [0, bound]; incremental by default, bisection uses
// the embedding monotonicity (a solution at D remains one at every D' > D).
inline std::optional<Certificate> minimal_certificate(const Polynomial& g,
                                                      const std::vector<Polynomial>& fs,
                                                      const mpz_class& bound, bool bisect) {
    if (bound < 0) return std::nullopt;
    long hi_cap = mpz_class(bound).get_si();
    if (!bisect) {
        for (long d = 0; d <= hi_cap; ++d)
            if (auto cert = certificate_at_degree(g, fs, d)) return cert;
        return std::nullopt;
    }
    // exponential ascent, then binary search for the least satisfiable D
    long hi = 0;
    std::optional<Certificate> found = certificate_at_degree(g, fs, 0);
    if (found) return found;
    long step = 1, last_unsat = 0;
    while (hi < hi_cap) {
        last_unsat = hi;
        hi = std::min(hi_cap, hi + step);
        step *= 2;
        found = certificate_at_degree(g, fs, hi);
        if (found) break;
    }
    if (!found) return std::nullopt;
    long lo = last_unsat + 1, best = hi;
    while (lo < best) {
        long mid = lo + (best - lo) / 2;
        if (auto cert = certificate_at_degree(g, fs, mid)) {
            best = mid;
            found = cert;
        } else {
            lo = mid + 1;
        }
    }
    return found;
}

} // namespace detail

struct CertifyResult {
    Certificate certificate;
    GeometricDegreeReport report;
};

// 1 = sum a_i f_i with the degree excess controlled by min(n,s)^2 (d+3n) delta.
inline CertifyResult certify_nss_thm44(const std::vector<Polynomial>& fs, int trials = 6,
                                       std::uint64_t seed = 1, bool bisect = false) {
    if (fs.empty()) throw std::invalid_argument("empty polynomial system");
    const RingDescriptor& ring = fs.front().ring();
    Ideal ideal(ring, fs);
    if (!ideal.contains_one())
        throw std::invalid_argument("certify_nss_thm44 expects the unit ideal");

    GeometricDegreeReport rep = geometric_degree_estimate(fs, trials, seed);
    const long n = static_cast<long>(ring.variable_count());
    const long s = static_cast<long>(fs.size());
    long d = 0;
    for (const Polynomial& f : fs) d = std::max(d, static_cast<long>(f.degree()));
    const long m = std::min(n, s);
    mpz_class bound = mpz_class(m) * m * (d + 3 * n) * rep.delta_estimate;

    Polynomial one = Polynomial::constant(ring, 1);
    auto cert = detail::minimal_certificate(one, fs, bound, bisect);
    if (!cert) {
        std::ostringstream msg;
        msg << "no certificate within the bound " << bound.get_str()
            << " (delta estimate " << rep.delta_estimate.get_str() << " from "
            << rep.trials.size() << " trials)";
        throw std::logic_error(msg.str());
    }
    cert->bound_D = bound;
    return {std::move(*cert), std::move(rep)};
}

// g = sum a_i f_i for a complete intersection, degree excess s^2 (d+3n) delta.
inline CertifyResult represent_ci_thm43(const Polynomial& g, const std::vector<Polynomial>& fs,
                                        int trials = 6, std::uint64_t seed = 1,
                                        bool bisect = false) {
    if (fs.empty()) throw std::invalid_argument("empty polynomial system");
    const RingDescriptor& ring = fs.front().ring();
    const long n = static_cast<long>(ring.variable_count());
    const long s = static_cast<long>(fs.size());
    if (s > n) throw std::invalid_argument("represent_ci_thm43 needs s <= n");
    Ideal ideal(ring, fs);
    if (ideal.contains_one())
        throw std::invalid_argument("represent_ci_thm43 expects a proper ideal");
    if (!ideal.contains(g)) throw std::invalid_argument("g is not in the ideal");

    GeometricDegreeReport rep = geometric_degree_estimate(fs, trials, seed);
    long d = 0;
    for (const Polynomial& f : fs) d = std::max(d, static_cast<long>(f.degree()));
    mpz_class bound = mpz_class(s) * s * (d + 3 * n) * rep.delta_estimate;

    auto cert = detail::minimal_certificate(g, fs, bound, bisect);
    if (!cert) {
        std::ostringstream msg;
        msg << "no representation within the bound " << bound.get_str();
        throw std::logic_error(msg.str());
    }
    cert->bound_D = bound;
    return {std::move(*cert), std::move(rep)};
}

// ---- degree-estimate conformance -------------------------------------------

struct Lemma45Verdict {
    mpz_class delta_estimate = 0;
    mpz_class bound = 0;
    bool char_p_mode = false;
    bool holds = false;
    int trials_used = 0;
};

// delta <= prod of the largest min(s,n)-1 degrees over Q, (d+1)^(min(s,n)-1)
// over a prime field. The estimate only overshoots the true minimum, so a
// failing round escalates the trial count before reporting.
inline Lemma45Verdict lemma_4_5_check(const std::vector<Polynomial>& fs, int trials = 6,
                                      std::uint64_t seed = 1) {
    if (fs.empty()) throw std::invalid_argument("empty polynomial system");
    const RingDescriptor& ring = fs.front().ring();
    const long n = static_cast<long>(ring.variable_count());
    const long s = static_cast<long>(fs.size());
    std::vector<long> degs;
    for (const Polynomial& f : fs) degs.push_back(f.degree());
    std::sort(degs.begin(), degs.end(), std::greater<long>());

    Lemma45Verdict v;
    v.char_p_mode = ring.field.is_prime_field();
    v.bound = 1;
    long take = std::min(s, n) - 1;
    for (long k = 0; k < take; ++k) v.bound *= v.char_p_mode ? degs[0] + 1 : degs[k];

    int t = std::max(1, trials);
    for (int round = 0; round < 3; ++round, t *= 2) {
        GeometricDegreeReport rep = geometric_degree_estimate(fs, t, seed + round);
        v.delta_estimate = rep.delta_estimate;
        v.trials_used = t;
        if (rep.delta_estimate <= v.bound) {
            v.holds = true;
            return v;
        }
    }
    v.holds = false;
    return v;
}

// ---- homogenized membership test --------------------------------------------

// Does x0^D * (homogenized g) lie in the ideal of the homogenized h_i?
inline bool membership_power_check_prop42(const Polynomial& g, const std::vector<Polynomial>& hs,
                                          const mpz_class& big_d) {
    if (hs.empty()) throw std::invalid_argument("empty sequence");
    if (big_d < 0) throw std::invalid_argument("negative power");
    const RingDescriptor& ring = hs.front().ring();
    if (g.is_zero()) return true;
    Ideal affine(ring, hs);
    if (!affine.contains(g))
        throw std::invalid_argument("membership_power_check_prop42: g is not in the ideal");

    RingDescriptor graded = detail::nss_graded_ring(ring);
    std::vector<Polynomial> hom;
    for (const Polynomial& h : hs) hom.push_back(homogenize(h, graded, 0));
    Ideal target(graded, std::move(hom));
    Polynomial lhs = homogenize(g, graded, 0);
    Polynomial x0 = Polynomial::variable(graded, 0);
    for (mpz_class k = 0; k < big_d; ++k) lhs = lhs * x0;
    return target.contains(lhs);
}

// ---- fixtures ----------------------------------------------------------------

// Seeded unit-ideal system built as a triangular regular chain capped by
// 1 - sum q_i f_i, so the identity combination is always an admissible chain.
inline std::vector<Polynomial> fixture_unit_system(long n, long s, std::uint64_t seed,
                                                   Field field = Field::rationals()) {
    if (n < 1 || s < 2 || s > n + 1) throw std::invalid_argument("need 1 <= s-1 <= n");
    std::vector<std::string> names;
    for (long i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    RingDescriptor ring = RingDescriptor::make(std::move(names), field, false);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> expo(1, 2);
    std::vector<Polynomial> fs;
    for (long i = 0; i < s - 1; ++i) {
        // monic power of x_{i+1} plus a tail in the later variables
        int e = expo(rng);
        Polynomial head = Polynomial::variable(ring, i);
        for (int k = 1; k < e; ++k) head = head * Polynomial::variable(ring, i);
        Polynomial tail = Polynomial::zero(ring);
        if (i + 1 < n) {
            Polynomial r = random_polynomial(ring, e, false, seed * 31 + i + 1, {0.6, 4});
            for (const auto& term : r.terms()) {
                bool later_only = true;
                for (long v = 0; v <= i; ++v)
                    if (term.mono.exponent(v) > 0) later_only = false;
                if (later_only && !term.mono.is_one())
                    tail = tail + Polynomial::monomial(ring, term.mono, term.coeff);
            }
        }
        fs.push_back(head + tail);
    }
    // cap: congruent to 1 modulo the chain, degrees stay at most 3
    Polynomial cap = Polynomial::constant(ring, 1);
    std::uniform_int_distribution<long> coef(1, 3);
    for (long i = 0; i < s - 1; ++i) {
        long room = 3 - fs[i].degree();
        Polynomial q = room >= 1
            ? Polynomial::variable(ring, rng() % n).scaled(Scalar::from_int(field, coef(rng)))
            : Polynomial::constant(ring, coef(rng));
        cap = cap + q * fs[i];
    }
    fs.push_back(cap);
    return fs;
}

// Low-degree weak regular unit chain h with high-degree corrections u_i drawn
// from the prefix ideals: f_i = h_i + u_i generates the same prefix chain.
struct Example41Fixture {
    RingDescriptor ring;
    std::vector<Polynomial> hs;
    std::vector<Polynomial> fs;
    long inner_degree = 0; // max deg h_i
    long input_degree = 0; // max deg f_i
};

inline Example41Fixture fixture_example_4_1(long input_degree, std::uint64_t seed,
                                            Field field = Field::rationals()) {
    if (input_degree < 3) throw std::invalid_argument("input degree must be at least 3");
    RingDescriptor ring = RingDescriptor::make({"x1", "x2", "x3"}, field, false);
    Polynomial x1 = Polynomial::variable(ring, 0);
    Polynomial x2 = Polynomial::variable(ring, 1);
    Polynomial x3 = Polynomial::variable(ring, 2);
    Polynomial one = Polynomial::constant(ring, 1);

    Example41Fixture fx;
    fx.ring = ring;
    fx.hs = {x1, x2, one - x1 * x3 - x2};
    // sparse corrections keep the certification Groebner bases tame
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(1, 4);
    auto sparse = [&](long degree) {
        Monomial top(ring.variable_count());
        top.exponent(2) = static_cast<int>(degree); // x3^degree fixes the exact degree
        Polynomial p = Polynomial::monomial(ring, top, Scalar::from_int(field, coef(rng)));
        Monomial extra(ring.variable_count());
        long split = static_cast<long>(rng() % (degree + 1));
        extra.exponent(1) = static_cast<int>(split);
        extra.exponent(2) = static_cast<int>(degree - split);
        return p + Polynomial::monomial(ring, extra, Scalar::from_int(field, coef(rng)));
    };
    Polynomial u2 = x1 * sparse(input_degree - 1);
    Polynomial u3 = x2 * sparse(input_degree - 1);
    fx.fs = {fx.hs[0], fx.hs[1] + u2, fx.hs[2] + u3};
    fx.inner_degree = 2;
    fx.input_degree = 0;
    for (const Polynomial& f : fx.fs) fx.input_degree = std::max<long>(fx.input_degree, f.degree());
    return fx;
}

struct Example41Comparison {
    mpz_class paper_bound;  // min(n,s)^2 (D+3n) d^(min(n,s)-1)
    mpz_class kollar_bound; // D^min(n,s)
    bool sharper = false;
    mpz_class delta_fs = 0;
    mpz_class delta_hs = 0;
    bool delta_invariant = false;
};

inline Example41Comparison example_4_1_comparison(const Example41Fixture& fx, int trials = 6,
                                                  std::uint64_t seed = 1) {
    const long n = static_cast<long>(fx.ring.variable_count());
    const long s = static_cast<long>(fx.fs.size());
    const long m = std::min(n, s);
    Example41Comparison out;
    out.paper_bound = mpz_class(m) * m * (fx.input_degree + 3 * n);
    for (long k = 0; k < m - 1; ++k) out.paper_bound *= fx.inner_degree;
    out.kollar_bound = 1;
    for (long k = 0; k < m; ++k) out.kollar_bound *= fx.input_degree;
    out.sharper = out.paper_bound < out.kollar_bound;
    out.delta_fs = geometric_degree_estimate(fx.fs, trials, seed).delta_estimate;
    out.delta_hs = geometric_degree_estimate(fx.hs, trials, seed).delta_estimate;
    out.delta_invariant = out.delta_fs == out.delta_hs;
    return out;
}

} // namespace hilcert

#endif
