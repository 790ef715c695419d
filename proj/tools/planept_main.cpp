// Command line front end: every library operation over fixture files, plus a
// reproduction index of pinned results.
//
// Exit codes: 0 success; 2 when a predicate verb reports a negative
// mathematical verdict (not contained / check failed / golden mismatch);
// 1 on input errors.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "planept/io.hpp"
#include "planept/nslattice.hpp"
#include "planept/unexpected.hpp"
#include "tool_context.hpp"

using namespace planept;

namespace {

std::string join_degrees(const std::vector<unsigned>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

SchemeFixture load_scheme(Ctx& ctx, const std::string& path) {
    SchemeFixture fx = read_scheme_fixture(path);
    ctx.report.add("field", fx.scheme.field().spec().str());
    ctx.report.add("fixture", path);
    ctx.report.add("fixture-checksum", fx.checksum);
    return fx;
}

ArrangementFixture load_arrangement(Ctx& ctx, const std::string& path, const char* key = "lines") {
    ArrangementFixture fx = read_arrangement_fixture(path);
    ctx.report.add("field", fx.arrangement.field().spec().str());
    ctx.report.add(std::string(key) + "-fixture", path);
    ctx.report.add(std::string(key) + "-checksum", fx.checksum);
    return fx;
}

std::vector<Rational> parse_coeff_list(const std::string& text, size_t n) {
    std::vector<Rational> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) out.push_back(parse_rational(cur));
    require(out.size() == n, "BadFixture",
            "expected " + std::to_string(n) + " coefficients, got " + std::to_string(out.size()));
    return out;
}

// ---------------------------------------------------------------------------
// verb implementations

void run_hilbert(Ctx& ctx, const std::string& scheme, unsigned m, unsigned tmax, bool have_t,
                 unsigned t) {
    SchemeFixture fx = load_scheme(ctx, scheme);
    FatIdeal base(fx.scheme);
    FatIdeal& I = base.symbolic(m);
    ctx.report.add("m", (unsigned long)m);
    ctx.report.add("scheme-degree", I.scheme().degree());
    if (have_t) {
        ctx.report.add("dim." + std::to_string(t), (unsigned long)I.dim(t));
        return;
    }
    ctx.report.add("alpha", (unsigned long)I.alpha());
    ctx.report.add("regularity", (unsigned long)I.regularity());
    ctx.report.add("omega", (unsigned long)I.omega());
    for (unsigned d = 0; d <= tmax; ++d)
        ctx.report.add("dim." + std::to_string(d), (unsigned long)I.dim(d));
}

void run_alpha(Ctx& ctx, const std::string& scheme, unsigned m) {
    SchemeFixture fx = load_scheme(ctx, scheme);
    FatIdeal I(fx.scheme);
    ctx.report.add("m", (unsigned long)m);
    ctx.report.add("alpha", (unsigned long)I.alpha_symbolic(m));
}

void run_waldschmidt(Ctx& ctx, const std::string& scheme, unsigned mmax) {
    SchemeFixture fx = load_scheme(ctx, scheme);
    FatIdeal I(fx.scheme);
    WaldschmidtBounds wb = I.waldschmidt_bounds(mmax);
    for (const auto& [m, am] : wb.table)
        ctx.report.add("alpha." + std::to_string(m), (unsigned long)am);
    ctx.add_rat("lower", wb.lower);
    ctx.add_rat("upper", wb.upper);
}

void run_containment(Ctx& ctx, const std::string& scheme, unsigned m, unsigned r, bool hh) {
    SchemeFixture fx = load_scheme(ctx, scheme);
    FatIdeal I(fx.scheme);
    ctx.report.add("m", (unsigned long)m);
    ctx.report.add("r", (unsigned long)r);
    if (hh) {
        HHContainmentReport rep = I.hh_containment(r);
        ctx.report.add("check", "I((2r)Z) in M^r I(Z)^r");
        ctx.report.add("holds", rep.holds ? "yes" : "no");
        ctx.report.add("degrees-checked",
                       std::to_string(rep.checked_lo) + ".." + std::to_string(rep.checked_hi));
        if (rep.fail_degree) ctx.report.add("fail-degree", (unsigned long)*rep.fail_degree);
        if (!rep.holds) ctx.exit_code = 2;
        return;
    }
    ContainmentVerdict v = I.containment(m, r);
    ctx.report.add("contained", v.contained ? "CONTAINED" : "NOT CONTAINED");
    ctx.report.add("degrees-checked",
                   std::to_string(v.checked_lo) + ".." + std::to_string(v.checked_hi));
    if (v.witness_degree) ctx.report.add("witness-degree", (unsigned long)*v.witness_degree);
    if (v.witness) ctx.report.add("witness", v.witness->str());
    if (!v.contained) ctx.exit_code = 2;
}

void run_satdeg(Ctx& ctx, const std::string& scheme, unsigned r) {
    SchemeFixture fx = load_scheme(ctx, scheme);
    FatIdeal I(fx.scheme);
    ctx.report.add("r", (unsigned long)r);
    ctx.report.add("satdeg", (unsigned long)I.satdeg(r));
}

void run_resurgence(Ctx& ctx, const std::string& scheme, unsigned mmax, unsigned rmax,
                    const std::string& lines, const std::string& divisor,
                    const std::string& alphahat) {
    SchemeFixture fx = load_scheme(ctx, scheme);
    FatIdeal I(fx.scheme);
    ResurgenceOptions opts;
    opts.r_max = rmax;
    if (!alphahat.empty()) {
        opts.exact_alpha_hat = parse_rational(alphahat);
        opts.alpha_hat_certificate = "user-supplied";
    } else if (!lines.empty()) {
        require(!divisor.empty(), "BadFixture", "--lines needs --divisor for the certificate");
        ArrangementFixture arr = load_arrangement(ctx, lines);
        TransformSystem ts = proper_transform_system(arr.arrangement);
        DivisorClass D = DivisorClass::parse(ts.system.points(), divisor);
        Rational cert = waldschmidt_zariski(ts.system, express_effective(ts.system, D));
        opts.exact_alpha_hat = cert;
        opts.alpha_hat_certificate = "zariski-decomposition(" + divisor + ")";
    }
    ResurgenceReport rep = I.resurgence_bounds(mmax, opts);
    ctx.report.add("alpha", (unsigned long)rep.alpha);
    ctx.report.add("omega", (unsigned long)rep.omega);
    ctx.report.add("regularity", (unsigned long)rep.regularity);
    ctx.add_rat("alphahat-lower", rep.alpha_hat_lower);
    ctx.add_rat("alphahat-upper", rep.alpha_hat_upper);
    ctx.report.add("alphahat-certificate", rep.alpha_hat_certificate);
    ctx.add_rat("rho-lower", rep.rho_lower);
    ctx.report.add("rho-lower-certificate", rep.rho_lower_certificate);
    ctx.add_rat("rho-upper", rep.rho_upper);
    ctx.add_rat("rhohat-lower", rep.rhohat_lower);
    ctx.add_rat("rhohat-upper", rep.rhohat_upper);
    std::string fails;
    for (const auto& [fm, fr] : rep.failures)
        fails += (fails.empty() ? "" : ", ") + std::string("(") + std::to_string(fm) + "," +
                 std::to_string(fr) + ")";
    ctx.report.add("containment-failures", fails.empty() ? "none" : fails);
}

void run_chudnovsky(Ctx& ctx, const std::string& scheme, unsigned mmax) {
    SchemeFixture fx = load_scheme(ctx, scheme);
    FatIdeal I(fx.scheme);
    ChudnovskyResult res = I.chudnovsky_check(mmax);
    ctx.add_rat("needed", res.needed);
    ctx.add_rat("certified-lower", res.certified_lower);
    ctx.report.add("verdict", res.verdict == ChudnovskyVerdict::CertifiedHolds ? "CertifiedHolds"
                                                                               : "Undetermined");
    if (res.verdict != ChudnovskyVerdict::CertifiedHolds) ctx.exit_code = 2;
}

void run_arrangement_stats(Ctx& ctx, const std::string& lines) {
    ArrangementFixture fx = load_arrangement(ctx, lines);
    Diagnostics g = diagnostics(fx.arrangement);
    ctx.report.add("lines", (unsigned long)g.d);
    ctx.report.add("crossings", (unsigned long)g.s);
    IncidenceData inc = incidence(fx.arrangement);
    for (const auto& [k, t] : inc.tk) ctx.report.add("t." + std::to_string(k), (unsigned long)t);
    ctx.report.add("identity-pairs", g.identity_pairs_ok ? "ok" : "FAILED");
    ctx.report.add("identity-squares", g.identity_squares_ok ? "ok" : "FAILED");
    ctx.report.add("concurrent", g.concurrent ? "yes" : "no");
    ctx.report.add("debruijn", g.debruijn_ok ? "ok" : "FAILED");
    if (g.melchior_applicable)
        ctx.add_rat("melchior-slack", *g.melchior_slack);
    else
        ctx.report.add("melchior-slack", "not applicable");
    if (g.hirzebruch_applicable)
        ctx.add_rat("hirzebruch-slack", *g.hirzebruch_slack);
    else
        ctx.report.add("hirzebruch-slack", "not applicable");
    size_t pi = 0;
    for (const auto& [prof, count] : g.line_profiles) {
        std::string desc;
        for (const auto& [k, c] : prof)
            desc += (desc.empty() ? "" : ", ") + std::to_string(c) + " points of multiplicity " +
                    std::to_string(k);
        ctx.report.add("line-profile." + std::to_string(pi++),
                       std::to_string(count) + " lines with " + desc);
    }
    bool ok = g.identity_pairs_ok && g.identity_squares_ok && g.debruijn_ok;
    if (g.melchior_applicable && *g.melchior_slack < 0) ok = false;
    if (!ok) ctx.exit_code = 2;
}

void run_hconst(Ctx& ctx, const std::string& lines, bool minimize, size_t cap) {
    ArrangementFixture fx = load_arrangement(ctx, lines);
    IncidenceData inc = incidence(fx.arrangement);
    std::vector<ProjPoint> S;
    for (const auto& c : inc.crossings) S.push_back(c.p);
    ctx.report.add("singular-points", (unsigned long)S.size());
    ctx.add_rat("h-singular", h_constant(fx.arrangement, S));
    if (minimize) {
        HConstMin hm = h_constant_min(fx.arrangement, cap);
        ctx.add_rat("h-min", hm.value);
        switch (hm.kind) {
            case HConstMin::Kind::InfimumNotAttained:
                ctx.report.add("h-min-kind", "infimum, not attained");
                break;
            case HConstMin::Kind::Attained:
                ctx.report.add("h-min-kind", "attained");
                ctx.report.add("h-min-subset-size", (unsigned long)hm.subset.size());
                break;
            case HConstMin::Kind::UpperBoundOnly:
                ctx.report.add("h-min-kind", "upper bound only (subset cap exceeded)");
                break;
        }
    }
}

void run_dualize(Ctx& ctx, const std::string& points, const std::string& lines) {
    require(points.empty() != lines.empty(), "BadFixture",
            "dualize needs exactly one of --points or --lines");
    if (!points.empty()) {
        SchemeFixture fx = read_scheme_fixture(points);
        std::vector<ProjPoint> pts;
        for (const auto& fp : fx.scheme.points()) {
            require(fp.mult == 1, "BadFixture", "dualize expects a reduced point set");
            pts.push_back(fp.p);
        }
        LineArrangement A = dualize(fx.scheme.field_ptr(), pts);
        std::cout << "# dual of " << points << " (checksum " << fx.checksum << ")\n"
                  << arrangement_to_text(A);
    } else {
        ArrangementFixture fx = read_arrangement_fixture(lines);
        std::vector<ProjPoint> pts = dual_points(fx.arrangement);
        std::vector<FatPoint> fat;
        for (const auto& p : pts) fat.push_back({p, 1});
        FatPointScheme Z(fx.arrangement.field_ptr(), fat);
        std::cout << "# dual of " << lines << " (checksum " << fx.checksum << ")\n"
                  << scheme_to_text(Z);
    }
    ctx.json = false;  // the fixture text replaces the report
}

SystemFixture load_system(Ctx& ctx, const std::string& path) {
    SystemFixture fx = read_system_fixture(path);
    ctx.report.add("system-fixture", path);
    ctx.report.add("system-checksum", fx.checksum);
    return fx;
}

void report_zariski(Ctx& ctx, const CurveSystem& sys, const std::vector<Rational>& coeffs) {
    ZariskiResult zr = zariski_decompose(sys, coeffs);
    ctx.report.add("relative-to", std::to_string(sys.size()) + " declared curves");
    if (zr.P) {
        ctx.report.add("P", zr.P->str());
        ctx.report.add("N", zr.N->str());
    }
    std::string pc, nc;
    for (size_t i = 0; i < sys.size(); ++i) {
        if (zr.p_coeffs[i] != 0)
            pc += (pc.empty() ? "" : " + ") + rat_str(zr.p_coeffs[i]) + " " + sys.name(i);
        if (zr.n_coeffs[i] != 0)
            nc += (nc.empty() ? "" : " + ") + rat_str(zr.n_coeffs[i]) + " " + sys.name(i);
    }
    ctx.report.add("P-combination", pc.empty() ? "0" : pc);
    ctx.report.add("N-combination", nc.empty() ? "0" : nc);
    ctx.report.add("denominator", zr.denominator.get_str());
    std::vector<size_t> supp;
    for (size_t i = 0; i < sys.size(); ++i)
        if (zr.n_coeffs[i] != 0) supp.push_back(i);
    if (!supp.empty()) {
        bool negs = true;
        mpz_class bound(1);
        for (size_t i : supp) {
            const Rational& sq = sys.gram()[i][i];
            if (sq >= 0 || sq.get_den() != 1) negs = false;
            if (negs) bound *= -sq.get_num();
        }
        if (negs) ctx.report.add("denominator-bound", bound.get_str());
    }
}

void run_zariski(Ctx& ctx, const std::string& system, const std::string& divisor,
                 const std::string& coeffs) {
    SystemFixture fx = load_system(ctx, system);
    std::vector<Rational> c;
    if (!coeffs.empty()) {
        c = parse_coeff_list(coeffs, fx.system.size());
    } else {
        require(!divisor.empty(), "BadFixture", "zariski needs --divisor or --coeffs");
        DivisorClass D = DivisorClass::parse(fx.system.points(), divisor);
        ctx.report.add("divisor", D.str());
        c = express_effective(fx.system, D);
    }
    report_zariski(ctx, fx.system, c);
}

void run_waldschmidt_zariski(Ctx& ctx, const std::string& system, const std::string& lines,
                             const std::string& divisor) {
    require(system.empty() != lines.empty(), "BadFixture",
            "waldschmidt-zariski needs exactly one of --system or --lines");
    require(!divisor.empty(), "BadFixture", "waldschmidt-zariski needs --divisor");
    if (!lines.empty()) {
        ArrangementFixture arr = load_arrangement(ctx, lines);
        TransformSystem ts = proper_transform_system(arr.arrangement);
        ctx.report.add("points", (unsigned long)ts.system.points());
        DivisorClass D = DivisorClass::parse(ts.system.points(), divisor);
        ctx.report.add("divisor", D.str());
        std::vector<Rational> c = express_effective(ts.system, D);
        report_zariski(ctx, ts.system, c);
        ctx.add_rat("waldschmidt", waldschmidt_zariski(ts.system, c));
    } else {
        SystemFixture fx = load_system(ctx, system);
        DivisorClass D = DivisorClass::parse(fx.system.points(), divisor);
        ctx.report.add("divisor", D.str());
        std::vector<Rational> c = express_effective(fx.system, D);
        report_zariski(ctx, fx.system, c);
        ctx.add_rat("waldschmidt", waldschmidt_zariski(fx.system, c));
    }
}

void run_splitting(Ctx& ctx, const std::string& points, unsigned samples, std::uint64_t seed) {
    SchemeFixture fx = load_scheme(ctx, points);
    ctx.report.add("seed", (unsigned long)seed);
    SplittingType st = splitting_type(fx.scheme, samples, seed);
    ctx.report.add("a", (unsigned long)st.a);
    ctx.report.add("b", (unsigned long)st.b);
    ctx.report.add("samples", (unsigned long)st.samples_used);
    std::string sv;
    for (unsigned v : st.sample_values) sv += (sv.empty() ? "" : ",") + std::to_string(v);
    ctx.report.add("sample-values", sv);
}

void run_unexpected(Ctx& ctx, const std::string& points, bool verify, unsigned samples,
                    std::uint64_t seed) {
    SchemeFixture fx = load_scheme(ctx, points);
    ctx.report.add("seed", (unsigned long)seed);
    UnexpectedReport rep = detect_unexpected(fx.scheme, verify, samples, seed);
    ctx.report.add("a", (unsigned long)rep.split.a);
    ctx.report.add("b", (unsigned long)rep.split.b);
    ctx.report.add("t_Z", (unsigned long)rep.t_z);
    ctx.report.add("regularity", (unsigned long)rep.regularity);
    ctx.report.add("unexpected-degrees", join_degrees(rep.degrees));
    ctx.report.add("verified", rep.verified ? "yes" : "not requested");
    for (const auto& chk : rep.checks) {
        std::ostringstream os;
        os << "dim " << chk.actual << ", expected " << chk.expected
           << (chk.unexpected ? " (unexpected)" : "");
        ctx.report.add("check." + std::to_string(chk.t), os.str());
    }
    if (rep.verified) ctx.report.add("point-seed", (unsigned long)rep.point_seed);
}

void run_generate(Ctx& ctx, const std::string& kind, unsigned n, unsigned long q, unsigned d,
                  std::uint64_t seed, bool points, unsigned min_mult, const std::string& weights,
                  const std::string& out) {
    Rng rng(seed);
    LineArrangement A = [&]() -> LineArrangement {
        if (kind == "fermat") return fermat_arrangement(n);
        if (kind == "finite-field") return finite_field_arrangement(q);
        if (kind == "klein") return klein_arrangement();
        if (kind == "wiman") return wiman_arrangement();
        if (kind == "general") return general_arrangement(d, rng);
        if (kind == "concurrent") return concurrent_arrangement(d);
        if (kind == "near-pencil") return near_pencil_arrangement(n);
        fail("UnknownVerb", "unknown generator kind '" + kind + "'");
    }();
    std::string text;
    if (points) {
        std::map<unsigned, unsigned> w;
        if (!weights.empty()) {
            std::istringstream in(weights);
            std::string tok;
            while (std::getline(in, tok, ',')) {
                auto colon = tok.find(':');
                require(colon != std::string::npos, "BadFixture",
                        "weights read k:m pairs separated by commas");
                w[unsigned(std::stoul(tok.substr(0, colon)))] =
                    unsigned(std::stoul(tok.substr(colon + 1)));
            }
        }
        FatPointScheme Z = singular_scheme(A, std::max(2u, min_mult), w);
        text = "# " + kind + " singular points (seed " + std::to_string(seed) + ")\n" +
               scheme_to_text(Z);
    } else {
        text = "# " + kind + " arrangement (seed " + std::to_string(seed) + ")\n" +
               arrangement_to_text(A);
    }
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        require(bool(f), "BadFixture", "cannot write '" + out + "'");
        f << text;
        ctx.report.add("written", out);
        ctx.report.add("checksum", fnv1a_hex(text));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of fat point schemes and line arrangements in the plane"};
    app.require_subcommand(1);

    Ctx ctx;
    app.add_flag("--json", ctx.json, "emit one machine-readable JSON object");
    app.add_flag("--approx", ctx.approx,
                 "add decimal renderings of exact values (marked non-authoritative)");

    std::string scheme, lines, points, system, divisor, coeffs, alphahat, kind, weights, out, id;
    unsigned m = 1, r = 1, t = 0, tmax = 8, mmax = 2, rmax = 2, samples = 3, n = 3, d = 4;
    unsigned min_mult = 2;
    unsigned long q = 2;
    std::uint64_t seed = 1;
    bool hh = false, verify = false, do_min = false, gen_points = false, list = false;
    size_t cap = 22;

    auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of I(mZ)");
    hilbert->add_option("--scheme", scheme)->required();
    hilbert->add_option("--m", m);
    auto* topt = hilbert->add_option("--t", t);
    hilbert->add_option("--tmax", tmax);

    auto* alpha = app.add_subcommand("alpha", "least degree of a nonzero element of I(mZ)");
    alpha->add_option("--scheme", scheme)->required();
    alpha->add_option("--m", m);

    auto* wald = app.add_subcommand("waldschmidt", "two-sided Waldschmidt bounds");
    wald->add_option("--scheme", scheme)->required();
    wald->add_option("--mmax", mmax);

    auto* cont = app.add_subcommand("containment", "is I(mZ) inside I(Z)^r?");
    cont->add_option("--scheme", scheme)->required();
    cont->add_option("--m", m)->required();
    cont->add_option("--r", r)->required();
    cont->add_flag("--hh", hh, "check I((2r)Z) against M^r I(Z)^r instead");

    auto* sat = app.add_subcommand("satdeg", "saturation degree of I(Z)^r");
    sat->add_option("--scheme", scheme)->required();
    sat->add_option("--r", r)->required();

    auto* res = app.add_subcommand("resurgence", "certified resurgence bounds");
    res->add_option("--scheme", scheme)->required();
    res->add_option("--mmax", mmax);
    res->add_option("--rmax", rmax);
    res->add_option("--lines", lines,
                    "arrangement whose transforms certify the Waldschmidt constant");
    res->add_option("--divisor", divisor, "divisor to decompose for the certificate");
    res->add_option("--alphahat", alphahat, "externally certified Waldschmidt constant");

    auto* chud = app.add_subcommand("chudnovsky", "one-sided check of the (alpha+1)/2 bound");
    chud->add_option("--scheme", scheme)->required();
    chud->add_option("--mmax", mmax);

    auto* stats = app.add_subcommand("arrangement-stats", "incidence counts and identities");
    stats->add_option("--lines", lines)->required();

    auto* hc = app.add_subcommand("hconst", "H-constants of a line arrangement");
    hc->add_option("--lines", lines)->required();
    hc->add_flag("--min", do_min, "minimize over subsets of the singular points");
    hc->add_option("--subset-cap", cap);

    auto* dual = app.add_subcommand("dualize", "swap points and lines");
    dual->add_option("--points", points);
    dual->add_option("--lines", lines);

    auto* zar = app.add_subcommand("zariski", "decompose relative to declared curves");
    zar->add_option("--system", system)->required();
    zar->add_option("--divisor", divisor);
    zar->add_option("--coeffs", coeffs, "comma separated coefficients over the curves");

    auto* wz =
        app.add_subcommand("waldschmidt-zariski", "Waldschmidt constant from a decomposition");
    wz->add_option("--system", system);
    wz->add_option("--lines", lines);
    wz->add_option("--divisor", divisor)->required();

    auto* split = app.add_subcommand("splitting-type", "splitting type of a reduced point set");
    split->add_option("--points", points)->required();
    split->add_option("--samples", samples);
    split->add_option("--seed", seed);

    auto* unexp = app.add_subcommand("unexpected", "detect unexpected curves");
    unexp->add_option("--points", points)->required();
    unexp->add_flag("--verify", verify);
    unexp->add_option("--samples", samples);
    unexp->add_option("--seed", seed);

    auto* gen = app.add_subcommand("generate", "emit arrangement or point fixtures");
    gen->add_option("--kind", kind)->required();
    gen->add_option("--n", n);
    gen->add_option("--q", q);
    gen->add_option("--d", d);
    gen->add_option("--seed", seed);
    gen->add_flag("--points", gen_points, "emit the singular points instead of the lines");
    gen->add_option("--min-mult", min_mult);
    gen->add_option("--weights", weights, "k:m pairs, comma separated");
    gen->add_option("--out", out);

    auto* rep = app.add_subcommand("repro", "rerun pinned reproductions and diff them");
    rep->add_option("id", id, "reproduction identifier");
    rep->add_flag("--list", list);
    std::string tier = "default";
    rep->add_option("--tier", tier, "default or extended (includes the slow reproductions)")
        ->check(CLI::IsMember({"default", "extended"}));

    // let --json / --approx appear after the verb as well
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // unknown verbs and rejected flags are input errors
    }

    try {
        if (app.got_subcommand(hilbert))
            run_hilbert(ctx, scheme, m, tmax, topt->count() > 0, t);
        else if (app.got_subcommand(alpha))
            run_alpha(ctx, scheme, m);
        else if (app.got_subcommand(wald))
            run_waldschmidt(ctx, scheme, mmax);
        else if (app.got_subcommand(cont))
            run_containment(ctx, scheme, m, r, hh);
        else if (app.got_subcommand(sat))
            run_satdeg(ctx, scheme, r);
        else if (app.got_subcommand(res))
            run_resurgence(ctx, scheme, mmax, rmax, lines, divisor, alphahat);
        else if (app.got_subcommand(chud))
            run_chudnovsky(ctx, scheme, mmax);
        else if (app.got_subcommand(stats))
            run_arrangement_stats(ctx, lines);
        else if (app.got_subcommand(hc))
            run_hconst(ctx, lines, do_min, cap);
        else if (app.got_subcommand(dual)) {
            run_dualize(ctx, points, lines);
            return ctx.exit_code;
        } else if (app.got_subcommand(zar))
            run_zariski(ctx, system, divisor, coeffs);
        else if (app.got_subcommand(wz))
            run_waldschmidt_zariski(ctx, system, lines, divisor);
        else if (app.got_subcommand(split))
            run_splitting(ctx, points, samples, seed);
        else if (app.got_subcommand(unexp))
            run_unexpected(ctx, points, verify, samples, seed);
        else if (app.got_subcommand(gen)) {
            run_generate(ctx, kind, n, q, d, seed, gen_points, min_mult, weights, out);
            if (out.empty()) return 0;
        } else if (app.got_subcommand(rep)) {
            return run_repro(ctx, id, list, tier == "extended");
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    ctx.emit();
    return ctx.exit_code;
}
