#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hilcert/parse.hpp>
#include <hilcert/regseq.hpp>

using namespace hilcert;

static Polynomial pp(const RingDescriptor& r, const std::string& s) {
    return parse_polynomial(s, r);
}

TEST_CASE("fast nonzerodivisor test agrees with the colon-ideal route") {
    RingDescriptor r = projective_ring(3);
    std::vector<std::pair<Ideal, Polynomial>> cases;
    cases.push_back({Ideal(r), pp(r, "x0 + x1")});
    cases.push_back({Ideal(r, {pp(r, "x1")}), pp(r, "x1*x2")});
    cases.push_back({Ideal(r, {pp(r, "x1")}), pp(r, "x0 + x2")});
    cases.push_back({Ideal(r, {pp(r, "x1"), pp(r, "x2*x0^2")}), pp(r, "x3*x0^2")});
    cases.push_back({Ideal(r, {pp(r, "x0*x1")}), pp(r, "x0")});
    cases.push_back({fixture_rational_normal_curve(3), pp(r, "x0 + x3")});
    for (auto& [ideal, f] : cases) CHECK(is_nzd_fast(f, ideal) == is_nzd(f, ideal));
}

TEST_CASE("find_avoiding_element basics") {
    RingDescriptor r = projective_ring(3);
    Ideal I(r, {pp(r, "x0")});
    Ideal P(r, {pp(r, "x1")});
    Polynomial f = find_avoiding_element(I, P, 6);
    CHECK(f == pp(r, "x0"));

    Ideal tc = fixture_rational_normal_curve(3);
    Polynomial g = find_avoiding_element(tc, Ideal(r, {pp(r, "x0")}), factorial_degree_cap(2, 3, 1));
    CHECK(g.degree() <= 6);
    CHECK(tc.contains(g));
    CHECK(!Ideal(r, {pp(r, "x0")}).contains(g));

    // containment: nothing to find
    CHECK_THROWS_AS(find_avoiding_element(Ideal(r, {pp(r, "x0*x1")}), Ideal(r, {pp(r, "x0")}), 4),
                    RetryExhausted);
}

TEST_CASE("degree cap helper") {
    CHECK(factorial_degree_cap(2, 1, 1) == 2);   // 2!*1
    CHECK(factorial_degree_cap(2, 3, 1) == 6);   // 2!*3
    CHECK(factorial_degree_cap(3, 1, 2) == 2);   // floor(sqrt(6))
    CHECK(factorial_degree_cap(4, 2, 3) == 3);   // floor((48)^(1/3))
}

TEST_CASE("regular sequence extension modulo an ambient ideal") {
    RingDescriptor r = projective_ring(3);
    Ideal I(r, {pp(r, "x0"), pp(r, "x1")});
    Ideal J(r);  // zero ideal, dimension 3
    std::vector<Polynomial> fs = extend_regular_sequence_prop31(I, J, 5);
    REQUIRE(fs.size() == 2);  // e - d = 3 - 1
    // caps: ((1+j)! * 1)^(1/j) -> 2 and floor(sqrt(6)) = 2
    CHECK(fs[0].degree() <= 2);
    CHECK(fs[1].degree() <= 2);
    for (const Polynomial& f : fs) CHECK(I.contains(f));
    CHECK(is_regular_sequence(fs, r));

    // dim J = dim I: nothing to do
    CHECK(extend_regular_sequence_prop31(I, I).empty());
    CHECK_THROWS(extend_regular_sequence_prop31(I, Ideal(r, {Polynomial::constant(r, 1)})));
}

TEST_CASE("sequence avoiding a hypersurface: point fixture") {
    RingDescriptor r = projective_ring(2);
    Ideal I(r, {pp(r, "x1"), pp(r, "x2")});  // a point, d = 0, deg 1
    Polynomial F = pp(r, "x0");
    std::vector<Polynomial> fs = regseq_avoiding_hypersurface_thm31(I, F, 3);
    REQUIRE(fs.size() == 2);  // n - d = 2
    for (const Polynomial& f : fs) {
        CHECK(f.degree() <= 1);  // deg I + deg F - 1
        CHECK(I.contains(f));
    }
    std::vector<Polynomial> full{F};
    for (const Polynomial& f : fs) full.push_back(f);
    CHECK(is_regular_sequence(full, r));
}

TEST_CASE("sequence avoiding a hypersurface: twisted cubic") {
    Ideal I = fixture_rational_normal_curve(3);
    auto F = generic_linear_nzd(I, 4242);
    REQUIRE(F.has_value());
    std::vector<Polynomial> fs = regseq_avoiding_hypersurface_thm31(I, *F, 7);
    REQUIRE(fs.size() == 2);
    for (const Polynomial& f : fs) {
        CHECK(f.degree() <= 15);  // 5 * 1 * 1 * 3
        CHECK(I.contains(f));
    }
    std::vector<Polynomial> full{*F};
    for (const Polynomial& f : fs) full.push_back(f);
    CHECK(is_regular_sequence(full, I.ring()));
}

TEST_CASE("F inside I is rejected") {
    RingDescriptor r = projective_ring(2);
    Ideal I(r, {pp(r, "x0")});
    CHECK_THROWS_AS(regseq_avoiding_hypersurface_thm31(I, pp(r, "x0"), 1), std::invalid_argument);
}

TEST_CASE("example fixture is weak regular but not regular") {
    for (long d : {1L, 2L}) {
        Example31Fixture fx = fixture_example_3_1(d);
        CHECK(!is_regular_sequence(fx.fs, fx.ring));
        // weak regularity in the localization is what straightening validates;
        // it must not throw
        StraighteningResult res = straighten_prop32(fx.big_f, fx.fs, 7);
        CHECK(res.certified_regular);
    }
}

TEST_CASE("straightening keeps already-good sequences untouched") {
    RingDescriptor r = projective_ring(3);
    Polynomial F = pp(r, "x0");
    std::vector<Polynomial> fs{pp(r, "x1"), pp(r, "x2"), pp(r, "x3")};
    StraighteningResult res = straighten_prop32(F, fs, 3);
    CHECK(res.output == fs);
    CHECK(res.certified_regular);
    CHECK(res.step_ideals_preserved);
    for (const StraighteningStep& s : res.steps) {
        CHECK(s.c == 0);
        CHECK(s.u.is_zero());
    }
}

TEST_CASE("leading pair strips F powers") {
    RingDescriptor r = projective_ring(3);
    Polynomial F = pp(r, "x0");
    std::vector<Polynomial> fs{pp(r, "x0^2*x1"), pp(r, "x0*x2")};
    StraighteningResult res = straighten_prop32(F, fs, 3);
    CHECK(res.output[0] == pp(r, "x1"));
    CHECK(res.output[1] == pp(r, "x2"));
    CHECK(res.steps[0].c == -2);
    CHECK(res.steps[1].c == -1);
    CHECK(res.certified_regular);
    CHECK(res.step_ideals_preserved);
}

TEST_CASE("straightening the motivating example") {
    for (long d : {1L, 2L}) {
        CAPTURE(d);
        Example31Fixture fx = fixture_example_3_1(d);
        StraighteningResult res = straighten_prop32(fx.big_f, fx.fs, 5);
        REQUIRE(res.output.size() == 3);
        CHECK(res.certified_regular);
        CHECK(res.step_ideals_preserved);
        CHECK(is_regular_sequence(res.output, fx.ring));
        // p_1, p_2 pass through; p_3 needed a correction
        CHECK(res.output[0] == fx.fs[0]);
        CHECK(res.output[1] == fx.fs[1]);
        CHECK(!res.steps[2].u.is_zero());
        CHECK(res.steps[2].achieved_degree <= res.steps[2].degree_bound);
        // p_i = F^{c_i} f_i + u_i with u_i in the predecessor ideal
        Polynomial fpow = Polynomial::constant(fx.ring, 1);
        for (long k = 0; k < res.steps[2].c; ++k) fpow = fpow * fx.big_f;
        CHECK(res.output[2] == fpow * fx.fs[2] + res.steps[2].u);
        CHECK(saturate(Ideal(fx.ring, {res.output[0], res.output[1]}), fx.big_f)
                  .contains(res.steps[2].u));
    }
}

TEST_CASE("rejects non weak regular input") {
    RingDescriptor r = projective_ring(3);
    Polynomial F = pp(r, "x0");
    std::vector<Polynomial> fs{pp(r, "x1"), pp(r, "x1*x2")};
    CHECK_THROWS_AS(straighten_prop32(F, fs, 1), std::invalid_argument);
}

TEST_CASE("affine straightening") {
    RingDescriptor aff = RingDescriptor::make({"x1", "x2", "x3"}, Field::rationals(), false);
    // already-fine input
    std::vector<Polynomial> easy{pp(aff, "x1"), pp(aff, "x2")};
    StraighteningResult res = straighten_affine_cor32(easy, 3);
    CHECK(res.output == easy);
    CHECK(res.certified_regular);

    // single polynomial
    std::vector<Polynomial> single{pp(aff, "x1^2 + x2")};
    CHECK(straighten_affine_cor32(single, 3).output == single);

    // affinized motivating family: x1, x1^2 + x2, x1^2 + x3 homogenize to the
    // d = 1 fixture with F = x0
    std::vector<Polynomial> family{pp(aff, "x1"), pp(aff, "x1^2 + x2"), pp(aff, "x1^2 + x3")};
    StraighteningResult res2 = straighten_affine_cor32(family, 11);
    REQUIRE(res2.output.size() == 3);
    CHECK(res2.certified_regular);
    CHECK(res2.output[0] == family[0]);
    CHECK(res2.output[1] == family[1]);
    CHECK(!res2.steps[2].u.is_zero());
}

TEST_CASE("bezout contraction bound") {
    RingDescriptor r = projective_ring(3);
    Polynomial F = pp(r, "x0");
    BezoutContraction b = bezout_contraction_lemma35(F, {pp(r, "x1"), pp(r, "x2")});
    CHECK(b.proper);
    CHECK(b.deg_ic == 1);
    CHECK(b.product == 1);
    CHECK(b.holds);

    // complete intersection of two quadrics: equality
    BezoutContraction ci = bezout_contraction_lemma35(
        F, {pp(r, "x1^2 + x2*x3"), pp(r, "x2^2 + x1*x3 + x3^2")});
    CHECK(ci.proper);
    CHECK(ci.deg_ic == 4);
    CHECK(ci.holds);

    // the motivating family: saturation strips the {F=0} components, strict drop
    Example31Fixture fx = fixture_example_3_1(2);
    BezoutContraction ex = bezout_contraction_lemma35(fx.big_f, fx.fs);
    CHECK(ex.holds);
    CHECK(ex.proper);
    CHECK(ex.deg_ic < ex.product);
}
