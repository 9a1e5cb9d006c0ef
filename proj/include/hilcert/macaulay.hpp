#ifndef HILCERT_MACAULAY_HPP
#define HILCERT_MACAULAY_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>
#include <gmpxx.h>

namespace hilcert {

// C(a, b) with the convention C(a, b) = 0 whenever a < b (negative a included),
// which makes every bound formula total without case splits.
inline mpz_class binomial(long a, long b) {
    if (b < 0) throw std::invalid_argument("binomial: negative lower index");
    if (a < b) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

// Unique greedy representation c = C(c_i, i) + C(c_{i-1}, i-1) + ... + C(c_j, j)
// with strictly decreasing tops c_i > c_{i-1} > ... > c_j >= j >= 1.
struct BinomialExpansion {
    long i = 0;
    std::vector<std::pair<long, long>> parts; // (top, bottom), bottoms descending from i

    mpz_class value() const {
        mpz_class v = 0;
        for (auto [t, b] : parts) v += binomial(t, b);
        return v;
    }
};

inline BinomialExpansion i_binomial_expansion(const mpz_class& c, long i) {
    if (c < 1 || i < 1) throw std::invalid_argument("i_binomial_expansion: need c >= 1 and i >= 1");
    BinomialExpansion out;
    out.i = i;
    mpz_class rest = c;
    long bottom = i;
    while (rest > 0 && bottom >= 1) {
        // largest top with C(top, bottom) <= rest, found by ascending search
        long top = bottom;
        while (binomial(top + 1, bottom) <= rest) ++top;
        out.parts.push_back({top, bottom});
        rest -= binomial(top, bottom);
        --bottom;
    }
    if (rest != 0) throw std::logic_error("binomial expansion failed to terminate");
    return out;
}

// Macaulay's growth operator c^<i>: shift every part (t, b) to (t+1, b+1).
inline mpz_class macaulay_step(const mpz_class& c, long i) {
    BinomialExpansion e = i_binomial_expansion(c, i);
    mpz_class out = 0;
    for (auto [t, b] : e.parts) out += binomial(t + 1, b + 1);
    return out;
}

struct OSequenceVerdict {
    bool ok = true;
    std::optional<std::size_t> failure_index; // index of the offending value
};

// c_0 = 1 and c_{i+1} <= c_i^<i> for i >= 1; a zero is absorbing.
inline OSequenceVerdict is_O_sequence(const std::vector<mpz_class>& seq) {
    OSequenceVerdict v;
    if (seq.empty() || seq[0] != 1) {
        v.ok = false;
        v.failure_index = 0;
        return v;
    }
    for (std::size_t i = 1; i + 1 <= seq.size(); ++i) {
        if (seq[i] < 0) { v.ok = false; v.failure_index = i; return v; }
        if (i + 1 == seq.size()) break;
        const mpz_class& cur = seq[i];
        const mpz_class& nxt = seq[i + 1];
        if (cur == 0) {
            if (nxt != 0) { v.ok = false; v.failure_index = i + 1; return v; }
            continue;
        }
        if (nxt > macaulay_step(cur, static_cast<long>(i))) {
            v.ok = false;
            v.failure_index = i + 1;
            return v;
        }
    }
    return v;
}

// C(m+d+1+D, d+1) - C(m+d+1, d+1) = sum_{i=1..D} C(m+d+i, d); asserts equality.
inline std::pair<mpz_class, mpz_class> lemma_1_4(long d, long D, long m) {
    if (d < 0 || D < 1) throw std::invalid_argument("lemma_1_4: need d >= 0 and D >= 1");
    mpz_class left = binomial(m + d + 1 + D, d + 1) - binomial(m + d + 1, d + 1);
    mpz_class right = 0;
    for (long i = 1; i <= D; ++i) right += binomial(m + d + i, d);
    if (left != right) throw std::logic_error("binomial identity violated");
    return {left, right};
}

} // namespace hilcert

#endif
