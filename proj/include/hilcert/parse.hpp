#ifndef HILCERT_PARSE_HPP
#define HILCERT_PARSE_HPP

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace hilcert {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

namespace detail {

class PolyLexer {
public:
    PolyLexer(const std::string& text, std::size_t line) : text_(text), line_(line) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char take() {
        skip_ws();
        return text_[pos_++];
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, pos_ + 1); }

    mpz_class integer() {
        skip_ws();
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (digits.empty()) fail("expected integer");
        return mpz_class(digits);
    }

    std::string identifier() {
        skip_ws();
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            name += text_[pos_++];
        if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0]))) fail("expected variable name");
        return name;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

} // namespace detail

// Grammar: terms joined by + / -; term = [coeff][*] monomial-factors;
// coeff = integer or a/b; monomial factor = var[^exp], factors joined by *.
inline Polynomial parse_polynomial(const std::string& text, const RingDescriptor& ring,
                                   const MonomialOrder& order = MonomialOrder::grevlex(),
                                   std::size_t line = 1) {
    detail::PolyLexer lx(text, line);
    std::vector<Polynomial::Term> terms;
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            lx.fail("expected '+' or '-' between terms");
        }
        first = false;

        mpz_class num = 1, den = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            num = lx.integer();
            have_coeff = true;
            if (lx.peek() == '/') {
                lx.take();
                den = lx.integer();
                if (den == 0) lx.fail("zero denominator");
            }
        }
        if (lx.peek() == '*') lx.take();

        Monomial mono(ring.variable_count());
        bool have_var = false;
        while (true) {
            char p = lx.peek();
            if (!(std::isalpha(static_cast<unsigned char>(p)) || p == '_')) break;
            std::string name = lx.identifier();
            int idx = ring.variable_index(name);
            if (idx < 0) lx.fail("unknown variable '" + name + "'");
            long exp = 1;
            if (lx.peek() == '^') {
                lx.take();
                exp = lx.integer().get_si();
                if (exp < 0) lx.fail("negative exponent");
            }
            mono.exponent(idx) += static_cast<int>(exp);
            have_var = true;
            if (lx.peek() == '*') lx.take();
            else break;
        }
        if (!have_coeff && !have_var) lx.fail("expected term");

        Scalar coeff = ring.field.is_prime_field()
            ? Scalar::from_mpz(ring.field, num) *
              Scalar::from_mpz(ring.field, den).inverse()
            : Scalar::rational(mpq_class(num, den));
        if (sign < 0) coeff = -coeff;
        if (!coeff.is_zero()) terms.push_back({mono, coeff});
    }
    return Polynomial::from_terms(ring, order, std::move(terms));
}

// ---- ideal file format ---------------------------------------------------
// Header: "ring: <names> over Q|Fp:<p>"; then one polynomial per line.
// '#' starts a comment line; blank lines are skipped.

struct IdealFile {
    RingDescriptor ring;
    std::vector<Polynomial> polynomials;
};

inline IdealFile read_ideal_stream(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    IdealFile out;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        auto hash = trimmed.find('#');
        if (hash != std::string::npos) trimmed = trimmed.substr(0, hash);
        std::size_t b = trimmed.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) continue;
        std::size_t e = trimmed.find_last_not_of(" \t\r\n");
        trimmed = trimmed.substr(b, e - b + 1);

        if (!have_header) {
            if (trimmed.rfind("ring:", 0) != 0) throw ParseError("expected 'ring:' header", lineno, 1);
            std::istringstream hs(trimmed.substr(5));
            std::vector<std::string> names;
            std::string tok;
            Field field = Field::rationals();
            bool saw_over = false;
            while (hs >> tok) {
                if (tok == "over") { saw_over = true; break; }
                names.push_back(tok);
            }
            if (!saw_over || !(hs >> tok)) throw ParseError("expected 'over Q' or 'over Fp:<p>'", lineno, 1);
            if (tok == "Q") field = Field::rationals();
            else if (tok.rfind("Fp:", 0) == 0) field = Field::prime(std::stoll(tok.substr(3)));
            else throw ParseError("unknown field '" + tok + "'", lineno, 1);
            if (names.empty()) throw ParseError("no variables declared", lineno, 1);
            out.ring = RingDescriptor::make(names, field, false);
            have_header = true;
            continue;
        }
        out.polynomials.push_back(parse_polynomial(trimmed, out.ring, MonomialOrder::grevlex(), lineno));
    }
    if (!have_header) throw ParseError("missing 'ring:' header", lineno == 0 ? 1 : lineno, 1);
    return out;
}

inline IdealFile read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_ideal_stream(in);
}

inline std::string ring_header(const RingDescriptor& ring) {
    std::string h = "ring:";
    for (const auto& n : ring.variable_names) h += " " + n;
    h += " over " + ring.field.to_string();
    return h;
}

inline std::string write_ideal_text(const RingDescriptor& ring, const std::vector<Polynomial>& polys) {
    std::string out = ring_header(ring) + "\n";
    for (const auto& p : polys) out += p.to_string() + "\n";
    return out;
}

} // namespace hilcert

#endif
