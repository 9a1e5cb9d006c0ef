#ifndef HILCERT_REGSEQ_HPP
#define HILCERT_REGSEQ_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "hilbert.hpp"

namespace hilcert {

struct RetryExhausted : std::runtime_error {
    explicit RetryExhausted(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Seeded homogeneous element of the ideal of the exact target degree:
// a random combination of degree-shifted generators.
inline std::optional<Polynomial> random_ideal_element(const Ideal& ideal, int degree,
                                                      std::uint64_t seed, double density = 0.4) {
    Polynomial acc = Polynomial::zero(ideal.ring());
    std::uint64_t k = 0;
    for (const Polynomial& g : ideal.generators()) {
        ++k;
        if (g.degree() > degree) continue;
        Polynomial mult = random_polynomial(ideal.ring(), degree - g.degree(), true,
                                            seed * 131 + k, {density, 5});
        acc = acc + g * mult;
    }
    if (acc.is_zero() || acc.degree() != degree || !acc.is_homogeneous()) return std::nullopt;
    return acc;
}

// Multiply up to the exact target degree. Early attempts use a plain variable
// power (keeps candidates sparse); later ones a random linear form power.
inline Polynomial pad_to_degree(const Polynomial& b, int target, std::uint64_t seed, int attempt) {
    int gap = target - b.degree();
    if (gap < 0) throw std::logic_error("pad_to_degree: element exceeds the target degree");
    if (gap == 0) return b;
    const RingDescriptor& r = b.ring();
    Polynomial ell = attempt < 4
        ? Polynomial::variable(r, (seed + attempt) % r.variable_count())
        : random_polynomial(r, 1, true, seed * 977 + attempt, {0.5, 3});
    Polynomial out = b;
    for (int i = 0; i < gap; ++i) out = out * ell;
    return out;
}

} // namespace detail

// Homogeneous f in I of degree <= degree_cap with f outside P; degrees are
// swept upward, drawing seeded random combinations of the generators.
inline Polynomial find_avoiding_element(const Ideal& ideal, const Ideal& avoid, long degree_cap,
                                        std::uint64_t seed = 1, int retries = 8) {
    for (long target = 1; target <= degree_cap; ++target) {
        for (const Polynomial& g : ideal.generators())
            if (g.degree() == target && !avoid.contains(g)) return g;
        for (int attempt = 0; attempt < retries; ++attempt) {
            auto f = detail::random_ideal_element(ideal, static_cast<int>(target),
                                                 seed + 1009 * attempt + 31 * target);
            if (f && !avoid.contains(*f)) return *f;
        }
    }
    throw RetryExhausted("find_avoiding_element: no element found within the degree cap");
}

// floor((k! * deg_i)^(1/root))
inline long factorial_degree_cap(long k, const mpz_class& deg_i, long root) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_class base = fact * deg_i;
    mpz_class out;
    mpz_root(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(root));
    return out.get_si();
}

// dim J - dim I homogeneous elements of I whose images mod J form a regular
// sequence, the j-th within the cap ((d+j)! deg I)^(1/j). Hypotheses
// (I unmixed radical, J Cohen-Macaulay) are the caller's responsibility.
inline std::vector<Polynomial> extend_regular_sequence_prop31(const Ideal& ideal, const Ideal& ambient,
                                                              std::uint64_t seed = 1, int retries = 8) {
    if (ambient.contains_one())
        throw std::invalid_argument("extend_regular_sequence_prop31: ambient ideal is the unit ideal");
    long d = dimension(ideal);
    long e = dimension(ambient);
    if (e < d) throw std::invalid_argument("extend_regular_sequence_prop31: dim J >= dim I required");
    mpz_class deg_i = degree(ideal);

    // elements discovered while the ambient dimension shrinks from e to d+1;
    // the element found at dimension d+j carries the exponent-1/j cap and
    // lands at position j of the final sequence
    std::vector<Polynomial> discovered;
    Ideal cur = ambient;
    for (long ed = e; ed >= d + 1; --ed) {
        long j = ed - d;
        long cap = factorial_degree_cap(d + j, deg_i, j);
        bool found = false;
        for (long target = 1; target <= cap && !found; ++target) {
            for (const Polynomial& g : ideal.generators()) {
                if (g.degree() != target) continue;
                if (is_nzd_fast(g, cur)) { discovered.push_back(g); found = true; break; }
            }
            for (int attempt = 0; attempt < retries && !found; ++attempt) {
                auto f = detail::random_ideal_element(ideal, static_cast<int>(target),
                                                     seed + 4001 * attempt + 97 * target + ed);
                if (f && is_nzd_fast(*f, cur)) { discovered.push_back(*f); found = true; }
            }
        }
        if (!found)
            throw RetryExhausted("extend_regular_sequence_prop31: no regular element within the cap");
        std::vector<Polynomial> gens = cur.generators();
        gens.push_back(discovered.back());
        cur = Ideal(cur.ring(), std::move(gens));
    }
    std::reverse(discovered.begin(), discovered.end());
    return discovered;
}

// n - d homogeneous f_i in I such that F, f_1, ..., f_{n-d} is a certified
// regular sequence, all degrees within 5 d degF degI (or degI + degF - 1 in
// dimension 0).
inline std::vector<Polynomial> regseq_avoiding_hypersurface_thm31(const Ideal& ideal, const Polynomial& big_f,
                                                                  std::uint64_t seed = 1, int retries = 8) {
    if (!big_f.is_homogeneous() || big_f.degree() < 1)
        throw std::invalid_argument("regseq_avoiding_hypersurface_thm31: F must be homogeneous of positive degree");
    if (!is_nzd_fast(big_f, ideal))
        throw std::invalid_argument("regseq_avoiding_hypersurface_thm31: F is a zero divisor modulo I");
    long d = dimension(ideal);
    long n = static_cast<long>(ideal.ring().variable_count()) - 1;
    long deg_i = degree(ideal).get_si();
    long deg_f = big_f.degree();
    long cap = d == 0 ? deg_i + deg_f - 1 : 5 * d * deg_f * deg_i;

    std::vector<Polynomial> out;
    std::vector<Polynomial> partial{big_f};
    for (long i = 1; i <= n - d; ++i) {
        Ideal prefix(ideal.ring(), partial);
        bool found = false;
        for (long target = 1; target <= cap && !found; ++target) {
            for (const Polynomial& g : ideal.generators()) {
                if (g.degree() != target) continue;
                if (is_nzd_fast(g, prefix)) { out.push_back(g); found = true; break; }
            }
            for (int attempt = 0; attempt < retries && !found; ++attempt) {
                auto f = detail::random_ideal_element(ideal, static_cast<int>(target),
                                                     seed + 7673 * attempt + 13 * target + i);
                if (f && is_nzd_fast(*f, prefix)) { out.push_back(*f); found = true; }
            }
        }
        if (!found)
            throw RetryExhausted("regseq_avoiding_hypersurface_thm31: no regular element within the cap");
        partial.push_back(out.back());
    }
    return out;
}

// ---- straightening ----------------------------------------------------------

struct StraighteningStep {
    long c = 0;               // exponent of F (negative when powers were stripped)
    Polynomial u;             // correction term from the predecessor ideal
    mpz_class degree_bound;   // theorem cap for this position
    long achieved_degree = 0;
};

struct StraighteningResult {
    std::vector<Polynomial> input;
    std::vector<Polynomial> output;
    std::vector<StraighteningStep> steps;
    bool certified_regular = false;
    bool step_ideals_preserved = false;
};

namespace detail {

// f_i regular mod (f_1..f_{i-1}) in the F-localization, tested through the
// saturated contraction: (C : f_i) saturates back to C.
inline bool localized_nzd(const Ideal& contracted, const Polynomial& f, const Polynomial& big_f) {
    if (contracted.contains_one()) return true; // localization is the zero ring
    Ideal q = ideal_quotient(contracted, f);
    return saturate(q, big_f).equals(contracted);
}

inline Polynomial strip_powers(Polynomial f, const Polynomial& big_f, long& exponent) {
    exponent = 0;
    while (f.divisible_by(big_f)) {
        f = f.exact_divide(big_f);
        --exponent;
    }
    return f;
}

} // namespace detail

// Replace a weak regular sequence in the F-localization by a genuine regular
// sequence p_i = F^{c_i} f_i + u_i of controlled degrees, with u_i drawn as a
// random combination of regular-sequence elements of the contracted step
// ideal and every acceptance certified a posteriori.
inline StraighteningResult straighten_prop32(const Polynomial& big_f, const std::vector<Polynomial>& fs,
                                             std::uint64_t seed = 1, int retries = 8) {
    if (fs.empty()) throw std::invalid_argument("straighten_prop32: empty input");
    const RingDescriptor& ring = fs.front().ring();
    long n = static_cast<long>(ring.variable_count()) - 1;
    if (static_cast<long>(fs.size()) > n + 1)
        throw std::invalid_argument("straighten_prop32: at most n+1 polynomials");
    if (!big_f.is_homogeneous() || big_f.degree() < 1)
        throw std::invalid_argument("straighten_prop32: F must be homogeneous of positive degree");
    for (const Polynomial& f : fs)
        if (f.is_zero() || !f.is_homogeneous())
            throw std::invalid_argument("straighten_prop32: homogeneous nonzero input required");

    // weak regularity in the localization
    {
        Ideal contracted(ring);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (!detail::localized_nzd(contracted, fs[i], big_f))
                throw std::invalid_argument("straighten_prop32: input is not weak regular in the localization");
            std::vector<Polynomial> gens = contracted.generators();
            gens.push_back(fs[i]);
            contracted = saturate(Ideal(ring, std::move(gens)), big_f);
        }
    }

    StraighteningResult res;
    res.input = fs;
    long deg_f = big_f.degree();
    std::vector<Polynomial> ps;
    for (std::size_t idx = 0; idx < fs.size(); ++idx) {
        long i = static_cast<long>(idx) + 1;
        Ideal prefix(ring, ps);
        Ideal contracted = ps.empty() ? Ideal(ring) : saturate(prefix, big_f);
        mpz_class deg_ic = contracted.contains_one() ? mpz_class(1) : degree(contracted);
        mpz_class bound = i <= n
            ? std::max(mpz_class(fs[idx].degree()), mpz_class(mpz_class(5) * (n + 1 - i) * deg_f * deg_ic))
            : std::max(mpz_class(fs[idx].degree()), mpz_class(deg_ic + deg_f - 1));

        StraighteningStep step;
        step.u = Polynomial::zero(ring);
        step.degree_bound = bound;

        long stripped = 0;
        Polynomial q = detail::strip_powers(fs[idx], big_f, stripped);
        if (i <= 2 || is_nzd_fast(q, prefix)) {
            if (i <= 2 && !is_nzd_fast(q, prefix))
                throw std::invalid_argument("straighten_prop32: stripped leading pair is not regular");
            step.c = stripped;
            step.achieved_degree = q.degree();
            ps.push_back(q);
            res.steps.push_back(std::move(step));
            continue;
        }

        // correction: u_i = sum lambda_j b_j with F, b_1..b_{i-1} regular,
        // b_j in the contracted ideal, all padded to a common degree chosen
        // within the bound and congruent to deg f_i modulo deg F, so that
        // F^{c_i} f_i + u_i stays homogeneous
        long target = bound.get_si();
        target -= (target - fs[idx].degree()) % deg_f;
        std::vector<Polynomial> bs;
        if (contracted.contains_one()) {
            for (long j = 0; j < i - 1; ++j) bs.push_back(Polynomial::variable(ring, j % (n + 1)));
        } else {
            bs = regseq_avoiding_hypersurface_thm31(contracted, big_f, seed + 59 * i, retries);
        }
        for (const Polynomial& b : bs)
            while (b.degree() > target) target += deg_f; // padding must go upward

        bool accepted = false;
        for (int attempt = 0; attempt < retries && !accepted; ++attempt) {
            std::mt19937_64 rng(seed * 31337 + 101 * i + attempt);
            Polynomial u = Polynomial::zero(ring);
            for (std::size_t j = 0; j < bs.size(); ++j) {
                Polynomial padded = detail::pad_to_degree(bs[j], static_cast<int>(target),
                                                          seed + 17 * j + i, attempt);
                u = u + padded.scaled(random_nonzero_scalar(ring.field, rng, 5));
            }
            long c = (target - fs[idx].degree()) / deg_f;
            Polynomial fpow = Polynomial::constant(ring, 1);
            for (long k = 0; k < c; ++k) fpow = fpow * big_f;
            Polynomial cand = fpow * fs[idx] + u;
            if (cand.is_zero() || !is_nzd_fast(cand, prefix)) continue;
            step.c = c;
            step.u = u;
            step.achieved_degree = cand.degree();
            ps.push_back(cand);
            accepted = true;
        }
        if (!accepted)
            throw RetryExhausted("straighten_prop32: no accepted correction at position " + std::to_string(i));
        res.steps.push_back(std::move(step));
    }

    res.output = ps;
    res.certified_regular = is_regular_sequence(ps, ring);
    res.step_ideals_preserved = true;
    {
        std::vector<Polynomial> fpart, ppart;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            fpart.push_back(fs[i]);
            ppart.push_back(ps[i]);
            if (!saturate(Ideal(ring, fpart), big_f).equals(saturate(Ideal(ring, ppart), big_f)))
                res.step_ideals_preserved = false;
        }
    }
    return res;
}

// Affine version: homogenize, straighten against F = x0, then set x0 = 1.
inline StraighteningResult straighten_affine_cor32(const std::vector<Polynomial>& fs,
                                                   std::uint64_t seed = 1, int retries = 8) {
    if (fs.empty()) throw std::invalid_argument("straighten_affine_cor32: empty input");
    const RingDescriptor& aff = fs.front().ring();
    std::string hom = "x0";
    while (aff.variable_index(hom) >= 0) hom += "_";
    RingDescriptor grd = graded_companion(aff, hom);

    std::vector<Polynomial> lifted;
    for (const Polynomial& f : fs) lifted.push_back(homogenize(f, grd, 0));
    StraighteningResult graded = straighten_prop32(Polynomial::variable(grd, 0), lifted, seed, retries);

    StraighteningResult res;
    res.input = fs;
    res.steps = graded.steps;
    res.step_ideals_preserved = graded.step_ideals_preserved;
    std::vector<Polynomial> homogenized_outputs;
    for (std::size_t i = 0; i < graded.output.size(); ++i) {
        Polynomial p = affinize(graded.output[i], aff, 0);
        res.output.push_back(p);
        res.steps[i].achieved_degree = p.degree();
        res.steps[i].u = affinize(graded.steps[i].u, aff, 0);
        homogenized_outputs.push_back(homogenize(p, grd, 0));
    }
    res.certified_regular = is_regular_sequence(homogenized_outputs, grd);
    return res;
}

// ---- Bezout contraction ------------------------------------------------------

struct BezoutContraction {
    bool proper;           // the contracted ideal is not the unit ideal
    mpz_class deg_ic;      // degree of the contraction (0 when improper)
    mpz_class product;     // product of the generator degrees
    bool holds;
};

// deg(saturate((fs), F)) <= prod deg f_i for a weak regular sequence in the
// F-localization.
inline BezoutContraction bezout_contraction_lemma35(const Polynomial& big_f,
                                                    const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw std::invalid_argument("bezout_contraction_lemma35: empty input");
    const RingDescriptor& ring = fs.front().ring();
    mpz_class product = 1;
    for (const Polynomial& f : fs) product *= f.degree();
    Ideal contracted = saturate(Ideal(ring, fs), big_f);
    if (contracted.contains_one()) return {false, 0, product, true};
    mpz_class deg_ic = degree(contracted);
    return {true, deg_ic, product, deg_ic <= product};
}

// ---- fixture -----------------------------------------------------------------

struct Example31Fixture {
    RingDescriptor ring;    // graded Q[x0..x3]
    Polynomial big_f;       // x0^d, outside (x1, x2)
    std::vector<Polynomial> fs; // x1, x1^{d+1} + x2 F, x1^{d+1} + x3 F
};

// Weak regular sequence in the F-localization that is provably not regular in
// the full ring: the motivating straightening input.
inline Example31Fixture fixture_example_3_1(long d, Field field = Field::rationals()) {
    if (d < 1) throw std::invalid_argument("fixture_example_3_1: d >= 1 required");
    RingDescriptor r = projective_ring(3, field);
    Polynomial x0 = Polynomial::variable(r, 0);
    Polynomial big_f = Polynomial::constant(r, 1);
    for (long k = 0; k < d; ++k) big_f = big_f * x0;
    Polynomial x1 = Polynomial::variable(r, 1);
    Polynomial x1_pow = x1;
    for (long k = 0; k < d; ++k) x1_pow = x1_pow * x1;
    std::vector<Polynomial> fs{x1,
                               x1_pow + Polynomial::variable(r, 2) * big_f,
                               x1_pow + Polynomial::variable(r, 3) * big_f};
    return {r, big_f, fs};
}

} // namespace hilcert

#endif
