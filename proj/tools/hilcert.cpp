// Command-line front end: Hilbert data, bound sweeps, straightening, and
// Nullstellensatz certificates over exact arithmetic, with deterministic
// seeded runs and machine-readable JSON reports.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <hilcert/nullstellensatz.hpp>
#include <hilcert/parse.hpp>

using namespace hilcert;
using json = nlohmann::ordered_json;

namespace {

// big integers travel as decimal strings so nothing truncates
json big(const mpz_class& v) { return v.get_str(); }

struct RunConfig {
    std::uint64_t seed = 1;
    int trials = 6;
    std::string order = "grevlex";
    long mmax = 10;
    bool bisect = false;

    json to_json() const {
        return json{{"seed", seed}, {"trials", trials}, {"order", order}, {"mmax", mmax}};
    }
};

MonomialOrder order_by_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::grevlex();
    if (name == "lex") return MonomialOrder::lex();
    if (name == "grlex") return MonomialOrder::grlex();
    throw std::invalid_argument("unknown order '" + name + "'");
}

// The file format is affine; homogeneous inputs are promoted to the graded
// companion ring so the projective machinery applies.
IdealFile promote_graded(const IdealFile& in) {
    IdealFile out;
    out.ring = RingDescriptor::make(in.ring.variable_names, in.ring.field, true);
    for (const Polynomial& p : in.polynomials) {
        if (!p.is_homogeneous())
            throw std::invalid_argument("'" + p.to_string() + "' is not homogeneous");
        out.polynomials.push_back(parse_polynomial(p.to_string(), out.ring));
    }
    return out;
}

Polynomial parse_g(const std::string& spec, const RingDescriptor& ring) {
    if (spec == "1") return Polynomial::constant(ring, 1);
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        auto hash = text.find('#');
        if (hash != std::string::npos) text = text.substr(0, hash);
        return parse_polynomial(text, ring);
    }
    return parse_polynomial(spec, ring);
}

json polys_json(const std::vector<Polynomial>& ps) {
    json out = json::array();
    for (const Polynomial& p : ps) out.push_back(p.to_string());
    return out;
}

json bound_report_json(const BoundReport& rep) {
    json rows = json::array();
    for (const BoundRow& r : rep.rows) {
        json row{{"m", r.m}, {"actual", big(r.actual)}};
        if (r.lower) row["lower"] = big(*r.lower);
        if (r.upper) row["upper"] = big(*r.upper);
        rows.push_back(row);
    }
    json out{{"bound", rep.bound_name}, {"holds", rep.holds}, {"extremal", rep.extremal},
             {"rows", rows}};
    if (!rep.ideal_description.empty()) out["ideal"] = rep.ideal_description;
    if (rep.violated_at) out["violated_at"] = *rep.violated_at;
    return out;
}

json degree_report_json(const GeometricDegreeReport& rep) {
    json trials = json::array();
    for (const DegreeTrial& t : rep.trials) {
        json lam = json::array();
        for (const auto& row : t.lambda) {
            json r = json::array();
            for (const Scalar& s : row) r.push_back(s.to_string());
            lam.push_back(r);
        }
        json degs = json::array();
        for (const mpz_class& d : t.step_degrees) degs.push_back(big(d));
        trials.push_back(json{{"seed", t.seed},
                              {"lambda", lam},
                              {"t", t.t},
                              {"step_degrees", degs},
                              {"generates_input", t.generates_input},
                              {"weak_regular", t.weak_regular},
                              {"passed", t.passed()},
                              {"delta", t.passed() ? big(t.delta) : json(nullptr)}});
    }
    return json{{"delta_estimate", big(rep.delta_estimate)},
                {"char_p_mode", rep.char_p_mode},
                {"unverified_radicality", rep.unverified_radicality},
                {"trials", trials}};
}

json certificate_json(const Certificate& cert) {
    return json{{"g", cert.g.to_string()},
                {"cofactors", polys_json(cert.cofactors)},
                {"achieved_D", cert.achieved_D},
                {"bound_D", big(cert.bound_D)},
                {"verified", cert.verified}};
}

json straightening_json(const StraighteningResult& res) {
    json steps = json::array();
    for (const StraighteningStep& s : res.steps)
        steps.push_back(json{{"c", s.c},
                             {"u", s.u.to_string()},
                             {"degree_bound", big(s.degree_bound)},
                             {"achieved_degree", s.achieved_degree}});
    return json{{"input", polys_json(res.input)},
                {"output", polys_json(res.output)},
                {"steps", steps},
                {"certified_regular", res.certified_regular},
                {"step_ideals_preserved", res.step_ideals_preserved}};
}

void emit(const json& report, const std::string& format) {
    if (format == "text") {
        for (const auto& [k, v] : report.items())
            std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
    return out;
}

std::string fixture_text(const std::string& spec, std::uint64_t seed) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.empty()) throw std::invalid_argument("empty fixture spec");
    const std::string& kind = parts[0];
    if (kind == "rnc") {
        if (parts.size() != 2) throw std::invalid_argument("usage: rnc:<n>");
        Ideal ideal = fixture_rational_normal_curve(std::stol(parts[1]));
        return write_ideal_text(ideal.ring(), ideal.generators());
    }
    if (kind == "cndelta") {
        if (parts.size() != 3) throw std::invalid_argument("usage: cndelta:<n>:<d1,d2,...>");
        CnDeltaFixture fx = fixture_c_n_delta(std::stol(parts[1]), parse_long_list(parts[2]));
        return write_ideal_text(fx.ideal.ring(), fx.ideal.generators());
    }
    if (kind == "hyp") {
        if (parts.size() != 4) throw std::invalid_argument("usage: hyp:<n>:<d>:<e>");
        Ideal ideal = fixture_hypersurface_in_subspace(std::stol(parts[1]), std::stol(parts[2]),
                                                       std::stol(parts[3]), seed);
        return write_ideal_text(ideal.ring(), ideal.generators());
    }
    if (kind == "example31") {
        long d = parts.size() > 1 ? std::stol(parts[1]) : 2;
        Example31Fixture fx = fixture_example_3_1(d);
        std::vector<Polynomial> all{fx.big_f};
        for (const Polynomial& f : fx.fs) all.push_back(f);
        return write_ideal_text(fx.ring, all);
    }
    if (kind == "example41") {
        std::uint64_t s = parts.size() > 1 ? std::stoull(parts[1]) : seed;
        Example41Fixture fx = fixture_example_4_1(10, s);
        return write_ideal_text(fx.ring, fx.fs);
    }
    throw std::invalid_argument("unknown fixture '" + kind + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hilbert functions, degree bounds, regular sequences, and "
                 "Nullstellensatz certificates"};
    app.require_subcommand(0, 1);
    app.fallthrough(); // global options may follow the subcommand

    RunConfig cfg;
    std::string format = "json";
    bool list_fixtures = false;
    app.add_option("--seed", cfg.seed, "master seed");
    app.add_option("--trials", cfg.trials, "trial count for sampled estimates");
    app.add_option("--order", cfg.order, "monomial order: grevlex | lex | grlex");
    app.add_option("--format", format, "output format: json | text");
    app.add_flag("--fixtures", list_fixtures, "list the built-in fixture generators");

    std::string input, g_spec = "1", thm = "2.3", mode = "thm44", fixture_spec;
    long irr = 1, power = 0;
    bool projective = false, char0 = false, charp = false;

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
    gb->add_option("input", input)->required();

    auto* hil = app.add_subcommand("hilbert", "Hilbert series, dimension, degree");
    hil->add_option("input", input)->required();
    hil->add_option("--mmax", cfg.mmax, "tabulate h(0..mmax)");

    auto* bounds = app.add_subcommand("bounds", "Hilbert-function bound sweeps");
    bounds->add_option("input", input)->required();
    bounds->add_option("--thm", thm, "2.3 | sandwich");
    bounds->add_option("--mmax", cfg.mmax);
    bounds->add_option("--irr", irr, "component count (sandwich upper bound)");

    auto* regseq = app.add_subcommand("regseq", "regular-sequence straightening");
    regseq->add_option("input", input)->required();
    regseq->add_flag("--projective", projective,
                     "first polynomial is the avoided hypersurface F");

    auto* certify = app.add_subcommand("certify", "degree-bounded membership certificate");
    certify->add_option("input", input)->required();
    certify->add_option("--g", g_spec, "target polynomial: inline, a file, or \"1\"");
    certify->add_option("--mode", mode, "thm44 | thm43");
    certify->add_flag("--bisect", cfg.bisect, "binary-search the minimal D");
    certify->add_flag("--char0", char0, "require characteristic-zero combination mode");
    certify->add_flag("--charp", charp, "require prime-characteristic combination mode");

    auto* delta = app.add_subcommand("delta", "geometric degree estimate");
    delta->add_option("input", input)->required();
    delta->add_flag("--char0", char0);
    delta->add_flag("--charp", charp);

    auto* membership = app.add_subcommand("membership", "x0^D-scaled homogenized membership");
    membership->add_option("input", input)->required();
    membership->add_option("--g", g_spec)->required();
    membership->add_option("--power", power, "exponent D")->required();

    auto* fixture = app.add_subcommand("fixture", "emit a built-in fixture as an ideal file");
    fixture->add_option("spec", fixture_spec)->required();

    CLI11_PARSE(app, argc, argv);

    if (list_fixtures) {
        std::cout << "rnc:<n>\ncndelta:<n>:<d1,d2,...>\nhyp:<n>:<d>:<e>\n"
                     "example31[:<d>]\nexample41[:<seed>]\n";
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cout << app.help();
        return 0;
    }

    try {
        if (fixture->parsed()) {
            std::cout << fixture_text(fixture_spec, cfg.seed);
            return 0;
        }

        IdealFile file = read_ideal_file(input);
        if (file.polynomials.empty()) throw std::invalid_argument("no polynomials in input");
        if ((char0 && file.ring.field.is_prime_field()) ||
            (charp && !file.ring.field.is_prime_field()))
            throw std::invalid_argument("requested characteristic mode does not match the field");

        json report{{"config", cfg.to_json()}};

        if (gb->parsed()) {
            MonomialOrder ord = order_by_name(cfg.order);
            Ideal ideal(file.ring, file.polynomials);
            const GroebnerBasis& basis = ideal.basis(ord);
            report["ring"] = ring_header(file.ring);
            report["basis"] = polys_json(basis.elements);
            emit(report, format);
            return 0;
        }

        if (hil->parsed()) {
            IdealFile graded = promote_graded(file);
            HilbertData h = hilbert_data(Ideal(graded.ring, graded.polynomials));
            json values = json::array();
            for (long m = 0; m <= cfg.mmax; ++m) values.push_back(big(h.series.value(m)));
            json numerator = json::array();
            for (const mpz_class& c : h.series.numerator) numerator.push_back(big(c));
            report["dimension"] = h.projective_dimension;
            report["degree"] = big(h.degree);
            report["values"] = values;
            report["numerator"] = numerator;
            report["regularity_onset"] = h.regularity_onset;
            emit(report, format);
            return 0;
        }

        if (bounds->parsed()) {
            IdealFile graded = promote_graded(file);
            Ideal ideal(graded.ring, graded.polynomials);
            BoundReport rep = thm == "sandwich" ? sweep_sandwich(ideal, irr, cfg.mmax)
                                                : sweep_thm23(ideal, cfg.mmax);
            report["report"] = bound_report_json(rep);
            emit(report, format);
            return rep.holds ? 0 : 1;
        }

        if (regseq->parsed()) {
            StraighteningResult res;
            if (projective) {
                IdealFile graded = promote_graded(file);
                std::vector<Polynomial> fs(graded.polynomials.begin() + 1,
                                           graded.polynomials.end());
                res = straighten_prop32(graded.polynomials.front(), fs, cfg.seed);
            } else {
                res = straighten_affine_cor32(file.polynomials, cfg.seed);
            }
            report["result"] = straightening_json(res);
            emit(report, format);
            return res.certified_regular ? 0 : 1;
        }

        if (delta->parsed()) {
            GeometricDegreeReport rep =
                geometric_degree_estimate(file.polynomials, cfg.trials, cfg.seed);
            report["report"] = degree_report_json(rep);
            emit(report, format);
            return 0;
        }

        if (certify->parsed()) {
            CertifyResult res;
            try {
                if (mode == "thm43") {
                    Polynomial g = parse_g(g_spec, file.ring);
                    res = represent_ci_thm43(g, file.polynomials, cfg.trials, cfg.seed,
                                             cfg.bisect);
                } else {
                    res = certify_nss_thm44(file.polynomials, cfg.trials, cfg.seed, cfg.bisect);
                }
            } catch (const std::invalid_argument&) {
                throw; // hypothesis violations are input errors, not search failures
            } catch (const std::logic_error& e) {
                // searched the whole bound without a certificate
                report["error"] = e.what();
                emit(report, format);
                return 1;
            }
            report["certificate"] = certificate_json(res.certificate);
            report["delta"] = degree_report_json(res.report);
            emit(report, format);
            return 0;
        }

        if (membership->parsed()) {
            Polynomial g = parse_g(g_spec, file.ring);
            bool ok = membership_power_check_prop42(g, file.polynomials, power);
            report["member"] = ok;
            report["power"] = power;
            emit(report, format);
            return ok ? 0 : 1;
        }
    } catch (const RetryExhausted& e) {
        std::cerr << "uncertifiable: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
