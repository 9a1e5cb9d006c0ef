// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every check is an exact integer comparison; randomness is seeded throughout.
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <hilcert/bounds.hpp>
#include <hilcert/nullstellensatz.hpp>
#include <hilcert/regseq.hpp>

using namespace hilcert;
using json = nlohmann::json;

static int g_failures = 0;

static void report(int idx, bool ok, const std::string& what, const std::string& detail = "") {
    std::ostringstream os;
    os << "criterion " << idx << (idx < 10 ? ":  " : ": ") << (ok ? "PASS" : "FAIL") << "  " << what;
    if (!ok && !detail.empty()) os << "  [" << detail << "]";
    std::cout << os.str() << "\n";
    if (!ok) ++g_failures;
}

template <typename F>
static void criterion(int idx, const std::string& what, F body) {
    try {
        std::string detail;
        bool ok = body(detail);
        report(idx, ok, what, detail);
    } catch (const std::exception& e) {
        report(idx, false, what, std::string("exception: ") + e.what());
    }
}

// seeded random homogeneous ideals shared by criteria 1, 2 and 6
struct RandomIdealCase {
    Ideal ideal;
    HilbertData data;
};

static std::vector<RandomIdealCase> make_random_ideals(int count, std::uint64_t base_seed) {
    Field fp = Field::prime(32003);
    std::vector<RandomIdealCase> out;
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(base_seed + i);
        long n = 1 + static_cast<long>(rng() % 3); // P^1..P^3, i.e. 2..4 variables
        RingDescriptor ring = projective_ring(n, fp);
        std::size_t gens = 1 + rng() % 4;
        std::vector<Polynomial> fs;
        for (std::size_t g = 0; g < gens; ++g) {
            int deg = 1 + static_cast<int>(rng() % 4);
            fs.push_back(random_polynomial(ring, deg, true, rng(), {0.7, 9}));
        }
        Ideal ideal(ring, std::move(fs));
        HilbertData data = hilbert_data(ideal);
        out.push_back({std::move(ideal), std::move(data)});
    }
    return out;
}

int main() {
    std::vector<std::vector<mpz_class>> all_sequences; // fed into criterion 6

    std::vector<RandomIdealCase> cases = make_random_ideals(100, 1000);
    for (const RandomIdealCase& c : cases) {
        std::vector<mpz_class> seq;
        for (long m = 0; m <= 10; ++m) seq.push_back(c.data.series.value(m));
        all_sequences.push_back(std::move(seq));
    }

    criterion(1, "hilbert_function = hilbert_brute_force on 100 random ideals, m <= 8",
              [&](std::string& detail) {
                  for (std::size_t i = 0; i < cases.size(); ++i)
                      for (long m = 0; m <= 8; ++m)
                          if (cases[i].data.series.value(m) != hilbert_brute_force(cases[i].ideal, m)) {
                              detail = "ideal " + std::to_string(i) + " at m=" + std::to_string(m);
                              return false;
                          }
                  return true;
              });

    criterion(2, "theorem 2.3 lower bound on the same ideals, 1 <= m <= 10",
              [&](std::string& detail) {
                  int applicable = 0;
                  for (std::size_t i = 0; i < cases.size(); ++i) {
                      long d = cases[i].data.projective_dimension;
                      if (d < 0) continue; // the bound presupposes a nonempty variety
                      ++applicable;
                      long deg_i = cases[i].data.degree.get_si();
                      for (long m = 1; m <= 10; ++m)
                          if (cases[i].data.series.value(m) < lower_bound_thm23(m, d, deg_i)) {
                              detail = "ideal " + std::to_string(i) + " at m=" + std::to_string(m);
                              return false;
                          }
                  }
                  if (applicable < 50) {
                      detail = "too few nonempty varieties: " + std::to_string(applicable);
                      return false;
                  }
                  return true;
              });

    criterion(3, "prop 2.6: extremal on 20 hypersurface fixtures, not on RNCs or C(n,delta) unions",
              [&](std::string& detail) {
                  for (int k = 0; k < 20; ++k) {
                      long n = 2 + k % 4;
                      long d = k % n;
                      long e = 1 + k % 3;
                      Ideal h = fixture_hypersurface_in_subspace(n, d, e, 300 + k);
                      auto v = extremal_test_prop26(h);
                      if (!v || !*v) {
                          detail = "hypersurface fixture " + std::to_string(k) + " not extremal";
                          return false;
                      }
                  }
                  // the degree-2 curve in P^2 is a plane conic, i.e. itself a
                  // hypersurface, so the biconditional forces true there; the
                  // nondegenerate non-hypersurface range starts at n = 3
                  auto conic = extremal_test_prop26(fixture_rational_normal_curve(2));
                  if (!conic || !*conic) {
                      detail = "plane conic must land in the extremal class";
                      return false;
                  }
                  for (long n = 3; n <= 5; ++n) {
                      auto v = extremal_test_prop26(fixture_rational_normal_curve(n));
                      if (!v || *v) {
                          detail = "rnc(" + std::to_string(n) + ") flagged extremal";
                          return false;
                      }
                  }
                  std::vector<std::pair<long, std::vector<long>>> cnd = {
                      {3, {1, 1}}, {4, {2, 1}}, {5, {2, 2}}};
                  for (const auto& [n, delta] : cnd) {
                      auto v = extremal_test_prop26(fixture_c_n_delta(n, delta).ideal);
                      if (!v || *v) {
                          detail = "C(" + std::to_string(n) + ", delta) flagged extremal";
                          return false;
                      }
                  }
                  return true;
              });

    std::vector<std::pair<long, std::vector<long>>> cnd_params = {
        {3, {1, 1}}, {4, {2, 1}}, {5, {2, 2}}};
    std::vector<CnDeltaFixture> cnd_fixtures;
    for (const auto& [n, delta] : cnd_params) cnd_fixtures.push_back(fixture_c_n_delta(n, delta));

    criterion(4, "prop 2.4 equality h(m) = |delta| m + l on three C(n,delta) fixtures, m <= 10",
              [&](std::string& detail) {
                  for (const CnDeltaFixture& fx : cnd_fixtures) {
                      HilbertData h = hilbert_data(fx.ideal);
                      std::vector<mpz_class> seq;
                      for (long m = 0; m <= 12; ++m) seq.push_back(h.series.value(m));
                      all_sequences.push_back(seq);
                      for (long m = 1; m <= 10; ++m)
                          if (seq[m] != fx.total_degree * m + fx.component_count) {
                              detail = "m=" + std::to_string(m);
                              return false;
                          }
                  }
                  return true;
              });

    criterion(5, "bound sandwich (m <= 12) and theorem 2.4 section bound on curve/point fixtures",
              [&](std::string& detail) {
                  struct Fx {
                      Ideal ideal;
                      long irr;
                      std::string name;
                  };
                  std::vector<Fx> fixtures;
                  for (long n = 2; n <= 4; ++n)
                      fixtures.push_back({fixture_rational_normal_curve(n), 1, "rnc" + std::to_string(n)});
                  for (std::size_t i = 0; i < cnd_fixtures.size(); ++i)
                      fixtures.push_back({cnd_fixtures[i].ideal, cnd_fixtures[i].component_count,
                                          "cnd" + std::to_string(i)});
                  fixtures.push_back({fixture_hypersurface_in_subspace(3, 1, 2, 7), 1, "curve-h1"});
                  fixtures.push_back({fixture_hypersurface_in_subspace(4, 1, 3, 8), 1, "curve-h2"});
                  fixtures.push_back({fixture_hypersurface_in_subspace(2, 0, 2, 9), 1, "points1"});
                  fixtures.push_back({fixture_hypersurface_in_subspace(3, 0, 3, 10), 1, "points2"});

                  for (const Fx& fx : fixtures) {
                      BoundReport rep = sweep_sandwich(fx.ideal, fx.irr, 12, fx.name);
                      if (!rep.holds) {
                          detail = fx.name + " sandwich violated at m=" + std::to_string(*rep.violated_at);
                          return false;
                      }
                      std::vector<mpz_class> seq;
                      for (long m = 0; m <= 12; ++m) seq.push_back(hilbert_data(fx.ideal).series.value(m));
                      all_sequences.push_back(seq);

                      // section bound: certified nonzerodivisor of degree <= 3
                      HilbertData h = hilbert_data(fx.ideal);
                      long d = h.projective_dimension;
                      long deg_i = h.degree.get_si();
                      std::optional<Polynomial> f = generic_linear_nzd(fx.ideal, 21);
                      for (int deg = 2; !f && deg <= 3; ++deg)
                          f = generic_form_nzd(fx.ideal, deg, 22);
                      if (!f) {
                          detail = fx.name + ": no certified section of degree <= 3";
                          return false;
                      }
                      std::vector<Polynomial> gens = fx.ideal.generators();
                      gens.push_back(*f);
                      Ideal section(fx.ideal.ring(), std::move(gens));
                      HilbertData hs = hilbert_data(section);
                      long start = section_bound_thm24(1, d, deg_i, f->degree()).threshold;
                      for (long m = start; m <= start + 5; ++m) {
                          SectionBound sb = section_bound_thm24(m, d, deg_i, f->degree());
                          if (!sb.applicable || hs.series.value(m) > sb.bound) {
                              detail = fx.name + " section bound at m=" + std::to_string(m);
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(6, "O-sequences everywhere; lemma 1.4 and Macaulay-step monotonicity on 1000 triples each",
              [&](std::string& detail) {
                  for (std::size_t i = 0; i < all_sequences.size(); ++i) {
                      OSequenceVerdict v = is_O_sequence(all_sequences[i]);
                      if (!v.ok) {
                          detail = "sequence " + std::to_string(i) + " fails at index " +
                                   std::to_string(*v.failure_index);
                          return false;
                      }
                  }
                  std::mt19937_64 rng(2026);
                  for (int k = 0; k < 1000; ++k) {
                      long d = static_cast<long>(rng() % 7);
                      long big_d = 1 + static_cast<long>(rng() % 10);
                      // m ranges over [-(d+1), 10]: the zero-below-the-diagonal
                      // convention matches the true binomials exactly there
                      long m = -(d + 1) + static_cast<long>(rng() % (12 + d));
                      auto [left, right] = lemma_1_4(d, big_d, m); // throws on violation
                      if (left != right) {
                          detail = "lemma 1.4 mismatch";
                          return false;
                      }
                  }
                  for (int k = 0; k < 1000; ++k) {
                      long i = 1 + static_cast<long>(rng() % 9);
                      mpz_class b = 1 + static_cast<long>(rng() % 2000);
                      mpz_class c = b + static_cast<long>(rng() % 2000);
                      if (macaulay_step(b, i) > macaulay_step(c, i)) {
                          detail = "monotonicity fails at b=" + b.get_str() + " c=" + c.get_str() +
                                   " i=" + std::to_string(i);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(7, "straightening on the example family d = 2, 3: caps, step ideals, certified output",
              [&](std::string& detail) {
                  for (long d = 2; d <= 3; ++d) {
                      Example31Fixture fx = fixture_example_3_1(d);
                      if (is_regular_sequence(fx.fs, fx.ring)) {
                          detail = "d=" + std::to_string(d) + ": input homogenization already regular";
                          return false;
                      }
                      RingDescriptor aff = RingDescriptor::make({"x1", "x2", "x3"}, Field::rationals(), false);
                      Polynomial x1 = Polynomial::variable(aff, 0);
                      Polynomial pw = x1;
                      for (long k = 0; k < d; ++k) pw = pw * x1;
                      std::vector<Polynomial> family = {x1, pw + Polynomial::variable(aff, 1),
                                                        pw + Polynomial::variable(aff, 2)};
                      StraighteningResult res = straighten_affine_cor32(family, 11);
                      if (!res.certified_regular) {
                          detail = "d=" + std::to_string(d) + ": output not certified regular";
                          return false;
                      }
                      if (!res.step_ideals_preserved) {
                          detail = "d=" + std::to_string(d) + ": step-ideal saturation drifted";
                          return false;
                      }
                      for (std::size_t i = 0; i < res.steps.size(); ++i)
                          if (mpz_class(res.steps[i].achieved_degree) > res.steps[i].degree_bound) {
                              detail = "d=" + std::to_string(d) + ": cap exceeded at step " +
                                       std::to_string(i);
                              return false;
                          }
                  }
                  return true;
              });

    criterion(8, "lemma 3.5 contraction bound on 20 weak-regular systems, equality on 5 CIs",
              [&](std::string& detail) {
                  RingDescriptor ring = projective_ring(3);
                  Polynomial x0 = Polynomial::variable(ring, 0);
                  int found = 0;
                  for (std::uint64_t seed = 500; found < 20 && seed < 800; ++seed) {
                      std::mt19937_64 rng(seed);
                      std::size_t s = 2 + rng() % 2;
                      std::vector<Polynomial> fs;
                      for (std::size_t i = 0; i < s; ++i) {
                          int deg = 1 + static_cast<int>(rng() % 3);
                          fs.push_back(random_polynomial(ring, deg, true, rng(), {0.6, 9}));
                      }
                      if (!is_weak_regular_sequence(fs, ring)) continue;
                      ++found;
                      BezoutContraction b = bezout_contraction_lemma35(x0, fs);
                      if (!b.holds) {
                          detail = "contraction degree " + b.deg_ic.get_str() + " exceeds " +
                                   b.product.get_str();
                          return false;
                      }
                  }
                  if (found < 20) {
                      detail = "only " + std::to_string(found) + " weak-regular systems found";
                      return false;
                  }
                  int equalities = 0;
                  for (std::uint64_t seed = 900; equalities < 5 && seed < 960; ++seed) {
                      Polynomial f1 = random_polynomial(ring, 2, true, seed, {1.0, 9});
                      Polynomial f2 = random_polynomial(ring, 2, true, seed + 10000, {1.0, 9});
                      std::vector<Polynomial> fs = {f1, f2};
                      Ideal ci(ring, fs);
                      if (!is_regular_sequence(fs, ring) || !is_nzd(x0, ci)) continue;
                      BezoutContraction b = bezout_contraction_lemma35(x0, fs);
                      if (!b.proper || b.deg_ic != b.product) {
                          detail = "CI contraction degree " + b.deg_ic.get_str() + " != " +
                                   b.product.get_str();
                          return false;
                      }
                      ++equalities;
                  }
                  if (equalities < 5) {
                      detail = "only " + std::to_string(equalities) + " certified CI instances";
                      return false;
                  }
                  return true;
              });

    std::vector<std::pair<long, long>> ns = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {3, 4}};
    std::vector<std::vector<Polynomial>> unit_systems;
    for (int k = 0; k < 20; ++k) {
        auto [n, s] = ns[k % ns.size()];
        unit_systems.push_back(fixture_unit_system(n, s, 400 + k));
    }

    criterion(9, "certified 1 = sum a_i f_i on 20 unit systems, minimal D; worked instance D = 3",
              [&](std::string& detail) {
                  for (std::size_t k = 0; k < unit_systems.size(); ++k) {
                      CertifyResult cr = certify_nss_thm44(unit_systems[k], 3, 400 + k);
                      const Certificate& cert = cr.certificate;
                      if (!cert.verified || mpz_class(cert.achieved_D) > cert.bound_D) {
                          detail = "system " + std::to_string(k) + " failed verification";
                          return false;
                      }
                      if (cert.achieved_D >= 1) {
                          Polynomial one = Polynomial::constant(unit_systems[k].front().ring(), 1);
                          if (certificate_at_degree(one, unit_systems[k], cert.achieved_D - 1)) {
                              detail = "system " + std::to_string(k) + ": achieved_D not minimal";
                              return false;
                          }
                      }
                  }
                  RingDescriptor r = RingDescriptor::make({"x", "y"}, Field::rationals(), false);
                  Polynomial x = Polynomial::variable(r, 0);
                  Polynomial y = Polynomial::variable(r, 1);
                  std::vector<Polynomial> worked = {x * x, Polynomial::constant(r, 1) - x * y};
                  CertifyResult wr = certify_nss_thm44(worked, 3, 1);
                  if (!wr.certificate.verified || wr.certificate.achieved_D != 3) {
                      detail = "worked instance achieved_D = " + std::to_string(wr.certificate.achieved_D);
                      return false;
                  }
                  return true;
              });

    criterion(10, "lemma 4.5 in char 0 on the same systems; example comparison strictly sharper",
              [&](std::string& detail) {
                  for (std::size_t k = 0; k < unit_systems.size(); ++k) {
                      Lemma45Verdict v = lemma_4_5_check(unit_systems[k], 3, 400 + k);
                      if (v.char_p_mode || !v.holds) {
                          detail = "system " + std::to_string(k) + ": delta estimate " +
                                   v.delta_estimate.get_str() + " above " + v.bound.get_str();
                          return false;
                      }
                  }
                  Example41Fixture fx = fixture_example_4_1(10, 3);
                  if (fx.input_degree < 8 || fx.inner_degree != 2) {
                      detail = "fixture degrees off";
                      return false;
                  }
                  Example41Comparison cmp = example_4_1_comparison(fx, 1, 1);
                  if (!cmp.sharper || cmp.paper_bound >= cmp.kollar_bound || !cmp.delta_invariant) {
                      detail = "bound " + cmp.paper_bound.get_str() + " vs " + cmp.kollar_bound.get_str();
                      return false;
                  }
                  return true;
              });

    criterion(11, "byte-identical JSON report for two runs with the same master seed",
              [&](std::string& detail) {
                  auto composite = [](std::uint64_t master) {
                      json rep;
                      std::vector<RandomIdealCase> cs = make_random_ideals(3, master);
                      for (const RandomIdealCase& c : cs) {
                          json vals = json::array();
                          for (long m = 0; m <= 6; ++m) vals.push_back(c.data.series.value(m).get_str());
                          rep["hilbert"].push_back(vals);
                      }
                      BoundReport sw = sweep_sandwich(fixture_rational_normal_curve(3), 1, 8, "rnc3");
                      for (const BoundRow& r : sw.rows)
                          rep["sandwich"].push_back({r.lower->get_str(), r.actual.get_str(),
                                                     r.upper->get_str()});
                      std::vector<Polynomial> fs = fixture_unit_system(2, 3, master);
                      CertifyResult cr = certify_nss_thm44(fs, 3, master);
                      rep["achieved_D"] = cr.certificate.achieved_D;
                      for (const Polynomial& a : cr.certificate.cofactors)
                          rep["cofactors"].push_back(a.to_string());
                      for (const DegreeTrial& t : cr.report.trials)
                          if (t.passed()) rep["deltas"].push_back(t.delta.get_str());
                      RingDescriptor aff = RingDescriptor::make({"x1", "x2", "x3"}, Field::rationals(), false);
                      Polynomial x1 = Polynomial::variable(aff, 0);
                      std::vector<Polynomial> family = {x1, x1 * x1 + Polynomial::variable(aff, 1),
                                                        x1 * x1 + Polynomial::variable(aff, 2)};
                      StraighteningResult st = straighten_affine_cor32(family, master);
                      for (const Polynomial& p : st.output) rep["straightened"].push_back(p.to_string());
                      return rep.dump(2);
                  };
                  std::string a = composite(12345);
                  std::string b = composite(12345);
                  if (a != b) {
                      detail = "reports differ";
                      return false;
                  }
                  if (a.empty()) {
                      detail = "empty report";
                      return false;
                  }
                  return true;
              });

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cerr << "acceptance: " << g_failures << " criterion(s) failed\n";
    return 1;
}
