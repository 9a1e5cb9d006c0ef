#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hilcert/hilbert.hpp>
#include <hilcert/parse.hpp>

using namespace hilcert;

static RingDescriptor pring(std::size_t nvars, Field f = Field::rationals()) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return RingDescriptor::make(std::move(names), f, true);
}
static Polynomial pp(const RingDescriptor& r, const std::string& s) {
    return parse_polynomial(s, r);
}

TEST_CASE("numerator of small monomial ideals") {
    // (x0*x1, x1*x2) in 3 variables: N = 1 - 2t^2 + t^3
    std::vector<Monomial> gens{Monomial(std::vector<int>{1, 1, 0}),
                               Monomial(std::vector<int>{0, 1, 1})};
    ZPoly n = monomial_hilbert_numerator(gens);
    CHECK(n == ZPoly{mpz_class(1), mpz_class(0), mpz_class(-2), mpz_class(1)});

    // zero ideal
    CHECK(monomial_hilbert_numerator({}) == ZPoly{mpz_class(1)});
    // unit ideal
    CHECK(monomial_hilbert_numerator({Monomial(3)}).empty());
    // coprime generators: Koszul product (1 - t^2)(1 - t^3)
    std::vector<Monomial> ci{Monomial(std::vector<int>{2, 0, 0}), Monomial(std::vector<int>{0, 3, 0})};
    CHECK(monomial_hilbert_numerator(ci) ==
          ZPoly{mpz_class(1), mpz_class(0), mpz_class(-1), mpz_class(-1), mpz_class(0), mpz_class(1)});
}

TEST_CASE("numerator is insensitive to redundant generators") {
    std::vector<Monomial> gens{Monomial(std::vector<int>{1, 1, 0}),
                               Monomial(std::vector<int>{0, 1, 1})};
    std::vector<Monomial> redundant = gens;
    redundant.push_back(Monomial(std::vector<int>{1, 2, 1}));
    redundant.push_back(gens[0]);
    CHECK(monomial_hilbert_numerator(gens) == monomial_hilbert_numerator(redundant));
}

TEST_CASE("twisted cubic: h(m) = 3m + 1, dimension 1, degree 3") {
    RingDescriptor r = pring(4);
    Ideal I(r, {pp(r, "x0*x2 - x1^2"), pp(r, "x1*x3 - x2^2"), pp(r, "x0*x3 - x1*x2")});
    HilbertData h = hilbert_data(I);
    for (long m = 0; m <= 12; ++m) CHECK(h.series.value(m) == 3 * m + 1);
    CHECK(h.projective_dimension == 1);
    CHECK(h.degree == 3);
    CHECK(h.regularity_onset == 0);
    REQUIRE(h.hilbert_polynomial.size() == 2);
    CHECK(h.hilbert_polynomial[0] == 1);
    CHECK(h.hilbert_polynomial[1] == 3);
}

TEST_CASE("complete intersection in P^2") {
    RingDescriptor r = pring(3);
    Ideal I(r, {pp(r, "x0^2"), pp(r, "x1^3")});
    HilbertData h = hilbert_data(I);
    CHECK(h.projective_dimension == 0);
    CHECK(h.degree == 6);
    // stabilized value equals the degree in dimension 0
    CHECK(h.series.value(10) == 6);
    CHECK(h.series.value(0) == 1);
    CHECK(h.series.value(1) == 3);
}

TEST_CASE("zero ideal gives the full polynomial ring") {
    RingDescriptor r = pring(3);
    Ideal I(r);
    HilbertData h = hilbert_data(I);
    CHECK(h.projective_dimension == 2);
    CHECK(h.degree == 1);
    for (long m = 0; m <= 8; ++m) CHECK(h.series.value(m) == binomial(m + 2, 2));
}

TEST_CASE("irrelevant-primary ideal has dimension -1 and degree = length") {
    RingDescriptor r = pring(3);
    Ideal I(r, {pp(r, "x0"), pp(r, "x1"), pp(r, "x2^2")});
    HilbertData h = hilbert_data(I);
    CHECK(h.projective_dimension == -1);
    CHECK(h.degree == 2);  // 1 and x2 survive
    CHECK(h.hilbert_polynomial.empty());
    CHECK(h.series.value(0) == 1);
    CHECK(h.series.value(1) == 1);
    CHECK(h.series.value(2) == 0);
    CHECK(h.regularity_onset == 2);
}

TEST_CASE("unit ideal is rejected") {
    RingDescriptor r = pring(3);
    Ideal I(r, {pp(r, "x0"), pp(r, "x0 - x1"), pp(r, "x1 - x2"), pp(r, "x2^2 - x0^2")});
    CHECK(!I.contains_one());
    Ideal unit(r, {pp(r, "x0"), pp(r, "x1"), pp(r, "x2"), pp(r, "x0^2")});
    CHECK(!unit.contains_one());
    // a genuinely unit homogeneous ideal needs a degree-0 generator
    Ideal u2(r, {Polynomial::constant(r, 5)});
    CHECK_THROWS_AS(hilbert_data(u2), UnitIdealError);
    CHECK_THROWS_AS(dimension(u2), UnitIdealError);
    CHECK_THROWS_AS(degree(u2), UnitIdealError);
}

TEST_CASE("brute-force oracle agrees on random ideals over F_32003") {
    RingDescriptor r = pring(3, Field::prime(32003));
    for (std::uint64_t s = 300; s < 312; ++s) {
        Ideal I(r, {random_polynomial(r, 2, true, s), random_polynomial(r, 3, true, s + 1000)});
        if (I.contains_one()) continue;
        HilbertData h = hilbert_data(I);
        for (long m = 0; m <= 7; ++m) CHECK(h.series.value(m) == hilbert_brute_force(I, m));
    }
}

TEST_CASE("brute-force oracle agrees over Q") {
    RingDescriptor r = pring(4);
    for (std::uint64_t s = 500; s < 506; ++s) {
        Ideal I(r, {random_polynomial(r, 2, true, s, {0.6, 5}),
                    random_polynomial(r, 2, true, s + 777, {0.6, 5})});
        if (I.contains_one()) continue;
        HilbertData h = hilbert_data(I);
        for (long m = 0; m <= 6; ++m) CHECK(h.series.value(m) == hilbert_brute_force(I, m));
    }
}

TEST_CASE("hilbert function values form an O-sequence") {
    RingDescriptor r = pring(4);
    Ideal I(r, {pp(r, "x0*x1 - x2*x3"), pp(r, "x0^3 + x1^3 + x2^3")});
    HilbertData h = hilbert_data(I);
    std::vector<mpz_class> seq;
    for (long m = 0; m <= 12; ++m) seq.push_back(h.series.value(m));
    CHECK(is_O_sequence(seq).ok);
}

TEST_CASE("interpolated polynomial matches all stabilized values") {
    RingDescriptor r = pring(4);
    Ideal I(r, {pp(r, "x0*x3 - x1*x2")});  // quadric surface: degree 2, dimension 2
    HilbertData h = hilbert_data(I);
    CHECK(h.projective_dimension == 2);
    CHECK(h.degree == 2);
    for (long m = h.regularity_onset; m <= h.regularity_onset + 15; ++m) {
        mpq_class pv = qpoly_eval(h.hilbert_polynomial, m);
        CHECK(pv.get_den() == 1);
        CHECK(pv.get_num() == h.series.value(m));
    }
    // leading coefficient is degree / dim!
    REQUIRE(h.hilbert_polynomial.size() == 3);
    CHECK(h.hilbert_polynomial[2] == 1);  // 2 / 2!
}

TEST_CASE("regularity onset is minimal") {
    RingDescriptor r = pring(3);
    // three general points in P^2: h = 1, 3, 3, 3, ... polynomial is constant 3
    Ideal I(r, {pp(r, "x0*x1"), pp(r, "x0*x2"), pp(r, "x1*x2")});
    HilbertData h = hilbert_data(I);
    CHECK(h.projective_dimension == 0);
    CHECK(h.degree == 3);
    CHECK(h.series.value(0) == 1);
    CHECK(h.series.value(1) == 3);
    CHECK(h.regularity_onset == 1);
}

TEST_CASE("additivity across the exact sequence of a sum") {
    RingDescriptor r = pring(4);
    Ideal a(r, {pp(r, "x0"), pp(r, "x1")});
    Ideal b(r, {pp(r, "x2"), pp(r, "x3")});
    ExactSequenceCheck c = exact_sequence_check(a, b, 10);
    CHECK(c.holds);

    Ideal a2(r, {pp(r, "x0*x2 - x1^2")});
    Ideal b2(r, {pp(r, "x1*x3 - x2^2")});
    CHECK(exact_sequence_check(a2, b2, 8).holds);
}

TEST_CASE("degree is multiplicative for transverse hypersurfaces") {
    RingDescriptor r = pring(3);
    Ideal I(r, {pp(r, "x0^2 + x1*x2"), pp(r, "x1^3 + x2^3 + x0^3")});
    HilbertData h = hilbert_data(I);
    CHECK(h.projective_dimension == 0);
    CHECK(h.degree == 6);
}
