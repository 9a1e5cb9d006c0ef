#ifndef HILCERT_MONOMIAL_HPP
#define HILCERT_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace hilcert {

struct RingDescriptor {
    std::vector<std::string> variable_names;
    Field field;
    bool graded = false; // true when the ring carries the standard grading (projective work)

    std::size_t variable_count() const { return variable_names.size(); }

    int variable_index(const std::string& name) const {
        for (std::size_t i = 0; i < variable_names.size(); ++i)
            if (variable_names[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const RingDescriptor& o) const {
        return variable_names == o.variable_names && field == o.field && graded == o.graded;
    }
    bool operator!=(const RingDescriptor& o) const { return !(*this == o); }

    static RingDescriptor make(std::vector<std::string> names, Field f, bool graded) {
        RingDescriptor r{std::move(names), f, graded};
        for (std::size_t i = 0; i < r.variable_names.size(); ++i)
            for (std::size_t j = i + 1; j < r.variable_names.size(); ++j)
                if (r.variable_names[i] == r.variable_names[j])
                    throw std::invalid_argument("duplicate variable name: " + r.variable_names[i]);
        return r;
    }
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : exp_(std::move(exps)) {
        for (int e : exp_)
            if (e < 0) throw std::invalid_argument("negative exponent");
    }

    std::size_t nvars() const { return exp_.size(); }
    int exponent(std::size_t i) const { return exp_[i]; }
    int& exponent(std::size_t i) { return exp_[i]; }
    const std::vector<int>& exponents() const { return exp_; }

    int total_degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }
    bool is_one() const { return total_degree() == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial m(*this);
        for (std::size_t i = 0; i < exp_.size(); ++i) m.exp_[i] += o.exp_[i];
        return m;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] > o.exp_[i]) return false;
        return true;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial m(*this);
        for (std::size_t i = 0; i < exp_.size(); ++i) {
            m.exp_[i] -= o.exp_[i];
            if (m.exp_[i] < 0) throw std::domain_error("monomial division not exact");
        }
        return m;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m(a);
        for (std::size_t i = 0; i < m.exp_.size(); ++i) m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
        return m;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exp_.size(); ++i)
            if (a.exp_[i] > 0 && b.exp_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
    bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }
    bool operator<(const Monomial& o) const { return exp_ < o.exp_; } // container ordering only

private:
    std::vector<int> exp_;
};

// Total multiplicative monomial order with 1 minimal. The permutation lists
// variable indices from most to least significant; for the block kind the
// first `block_size` permuted variables form an eliminated block that
// dominates the comparison.
struct MonomialOrder {
    enum class Kind { lex, grlex, grevlex, block };
    Kind kind = Kind::grevlex;
    std::vector<std::size_t> permutation; // empty = identity
    std::size_t block_size = 0;           // only for Kind::block

    static MonomialOrder grevlex() { return MonomialOrder{}; }
    static MonomialOrder lex() { return MonomialOrder{Kind::lex, {}, 0}; }
    static MonomialOrder grlex() { return MonomialOrder{Kind::grlex, {}, 0}; }

    // Elimination order: monomials involving any of `eliminated` dominate.
    static MonomialOrder elimination(std::vector<std::size_t> eliminated, std::size_t nvars) {
        MonomialOrder o;
        o.kind = Kind::block;
        o.block_size = eliminated.size();
        o.permutation = eliminated;
        std::vector<bool> used(nvars, false);
        for (std::size_t v : eliminated) used[v] = true;
        for (std::size_t v = 0; v < nvars; ++v)
            if (!used[v]) o.permutation.push_back(v);
        return o;
    }

    bool is_graded() const { return kind == Kind::grlex || kind == Kind::grevlex; }

    std::size_t var_at(std::size_t pos, std::size_t nvars) const {
        return permutation.empty() ? pos : permutation[pos];
        (void)nvars;
    }

    // Returns +1 if a > b, 0 if equal, -1 if a < b.
    int compare(const Monomial& a, const Monomial& b) const {
        const std::size_t n = a.nvars();
        switch (kind) {
        case Kind::lex: {
            for (std::size_t p = 0; p < n; ++p) {
                std::size_t v = var_at(p, n);
                if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v) ? 1 : -1;
            }
            return 0;
        }
        case Kind::grlex: {
            int da = a.total_degree(), db = b.total_degree();
            if (da != db) return da > db ? 1 : -1;
            for (std::size_t p = 0; p < n; ++p) {
                std::size_t v = var_at(p, n);
                if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v) ? 1 : -1;
            }
            return 0;
        }
        case Kind::grevlex:
            return grevlex_compare(a, b, 0, n);
        case Kind::block: {
            int da = 0, db = 0;
            for (std::size_t p = 0; p < block_size; ++p) {
                da += a.exponent(permutation[p]);
                db += b.exponent(permutation[p]);
            }
            if (da != db) return da > db ? 1 : -1;
            if (int c = grevlex_compare(a, b, 0, block_size)) return c;
            return grevlex_compare(a, b, block_size, a.nvars());
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && permutation == o.permutation && block_size == o.block_size;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    std::string key() const {
        std::string k;
        switch (kind) {
        case Kind::lex: k = "lex"; break;
        case Kind::grlex: k = "grlex"; break;
        case Kind::grevlex: k = "grevlex"; break;
        case Kind::block: k = "block" + std::to_string(block_size); break;
        }
        for (std::size_t v : permutation) k += ":" + std::to_string(v);
        return k;
    }

private:
    // grevlex on the permuted positions [lo, hi)
    int grevlex_compare(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
        int da = 0, db = 0;
        const std::size_t n = a.nvars();
        for (std::size_t p = lo; p < hi; ++p) {
            da += a.exponent(var_at(p, n));
            db += b.exponent(var_at(p, n));
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t p = hi; p-- > lo;) {
            std::size_t v = var_at(p, n);
            if (a.exponent(v) != b.exponent(v)) return a.exponent(v) < b.exponent(v) ? 1 : -1;
        }
        return 0;
    }
};

} // namespace hilcert

#endif
