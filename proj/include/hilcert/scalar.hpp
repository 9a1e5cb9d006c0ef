#ifndef HILCERT_SCALAR_HPP
#define HILCERT_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace hilcert {

// Coefficient field: the rationals, or a prime field F_p for an odd prime p.
struct Field {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::int64_t modulus = 0; // only meaningful for Kind::prime

    static Field rationals() { return Field{Kind::rationals, 0}; }
    static Field prime(std::int64_t p) {
        if (p < 3 || p % 2 == 0) throw std::invalid_argument("field modulus must be an odd prime");
        return Field{Kind::prime, p};
    }
    bool is_prime_field() const { return kind == Kind::prime; }
    bool operator==(const Field& o) const { return kind == o.kind && modulus == o.modulus; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string to_string() const {
        return is_prime_field() ? "Fp:" + std::to_string(modulus) : "Q";
    }
};

// An exact field element: gcd-reduced rational with positive denominator,
// or a fully reduced residue in [0, p).
class Scalar {
public:
    Scalar() : field_(Field::rationals()), q_(0) {}

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f) { return from_int(f, 1); }

    static Scalar from_int(const Field& f, long v) {
        Scalar s(f);
        if (f.is_prime_field()) {
            s.r_ = v % f.modulus;
            if (s.r_ < 0) s.r_ += f.modulus;
        } else {
            s.q_ = v;
        }
        return s;
    }

    static Scalar from_mpz(const Field& f, const mpz_class& v) {
        Scalar s(f);
        if (f.is_prime_field()) {
            mpz_class m = v % f.modulus;
            if (m < 0) m += f.modulus;
            s.r_ = m.get_si();
        } else {
            s.q_ = v;
        }
        return s;
    }

    static Scalar rational(const mpq_class& v) {
        Scalar s(Field::rationals());
        s.q_ = v;
        s.q_.canonicalize();
        return s;
    }

    const Field& field() const { return field_; }
    bool is_zero() const { return field_.is_prime_field() ? r_ == 0 : q_ == 0; }
    bool is_one() const { return field_.is_prime_field() ? r_ == 1 : q_ == 1; }

    const mpq_class& rational_value() const {
        check_rational();
        return q_;
    }
    std::int64_t residue() const {
        if (!field_.is_prime_field()) throw std::logic_error("not a prime-field element");
        return r_;
    }

    Scalar operator+(const Scalar& o) const {
        check_same(o);
        Scalar s(field_);
        if (field_.is_prime_field()) s.r_ = (r_ + o.r_) % field_.modulus;
        else s.q_ = q_ + o.q_;
        return s;
    }
    Scalar operator-(const Scalar& o) const {
        check_same(o);
        Scalar s(field_);
        if (field_.is_prime_field()) s.r_ = ((r_ - o.r_) % field_.modulus + field_.modulus) % field_.modulus;
        else s.q_ = q_ - o.q_;
        return s;
    }
    Scalar operator*(const Scalar& o) const {
        check_same(o);
        Scalar s(field_);
        if (field_.is_prime_field()) {
            // p < 2^31 keeps the product inside int64
            s.r_ = (static_cast<std::int64_t>(r_) * o.r_) % field_.modulus;
        } else {
            s.q_ = q_ * o.q_;
        }
        return s;
    }
    Scalar operator-() const {
        Scalar s(field_);
        if (field_.is_prime_field()) s.r_ = r_ == 0 ? 0 : field_.modulus - r_;
        else s.q_ = -q_;
        return s;
    }
    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Scalar s(field_);
        if (field_.is_prime_field()) {
            s.r_ = mod_inverse(r_, field_.modulus);
        } else {
            s.q_ = 1 / q_;
        }
        return s;
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const {
        return field_ == o.field_ && (field_.is_prime_field() ? r_ == o.r_ : q_ == o.q_);
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const {
        if (field_.is_prime_field()) return std::to_string(r_);
        return q_.get_str();
    }

private:
    explicit Scalar(const Field& f) : field_(f), q_(0), r_(0) {}

    void check_same(const Scalar& o) const {
        if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
    }
    void check_rational() const {
        if (field_.is_prime_field()) throw std::logic_error("not a rational");
    }

    static std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            std::int64_t quo = r / nr;
            std::int64_t tmp = t - quo * nt; t = nt; nt = tmp;
            tmp = r - quo * nr; r = nr; nr = tmp;
        }
        if (r != 1) throw std::domain_error("element not invertible");
        return t < 0 ? t + p : t;
    }

    Field field_;
    mpq_class q_;
    std::int64_t r_ = 0;
};

} // namespace hilcert

#endif
