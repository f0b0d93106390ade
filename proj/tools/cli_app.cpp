#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "asai/arch.hpp"
#include "asai/asai_nonarch.hpp"
#include "asai/config.hpp"
#include "asai/quadrature.hpp"
#include "asai/serialize.hpp"
#include "asai/tate.hpp"
#include "asai/verify.hpp"

namespace asai::cli {

namespace {

// Signals a failed comparison after the output has been produced.
struct VerificationFailure {
    std::string what;
};

struct Options {
    std::string field, ext, chr, chr2, twist, input, grid, out, xi_scale;
    std::string format = "json";
    std::string suite = "all";
    int psi_shift = 0;
    double tol = 0.0;
    bool has_psi = false, has_xi = false, has_tol = false;
};

std::string fmt_c(cplx z) {
    std::ostringstream os;
    os << std::setprecision(10) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

json read_json_arg(const std::string& text, const std::string& flag) {
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw InputError(flag, "cannot read file " + text.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_argument(ss.str(), flag);
    }
    return parse_argument(text, flag);
}

// Bundle pointers are reported relative to the flag that supplied them.
[[noreturn]] void rethrow_for_flags(const InputError& e, const std::map<std::string, std::string>& flags,
                                    bool from_input) {
    if (from_input) throw InputError("--input" + e.pointer, e.message);
    for (const auto& [prefix, flag] : flags) {
        if (e.pointer == prefix || e.pointer.rfind(prefix + "/", 0) == 0)
            throw InputError(flag + e.pointer.substr(prefix.size()), e.message);
    }
    throw e;
}

// The emitted JSON of a previous run, or just its input bundle.
json input_document(const Options& o) {
    if (o.input.empty()) return json::object();
    json doc = read_json_arg(o.input, "--input");
    if (!doc.is_object()) throw InputError("--input", "expected a JSON object");
    return doc;
}

std::vector<cplx> resolve_grid(const Options& o, const json& doc) {
    if (!o.grid.empty()) return grid_from_json(read_json_arg(o.grid, "--grid"), "--grid");
    if (doc.contains("grid")) return grid_from_json(doc["grid"], "--input/grid");
    return default_grid();
}

double resolve_tol(const Options& o, const json& doc, double fallback) {
    if (o.has_tol) {
        if (!(o.tol > 0.0)) throw InputError("--tol", "tolerance must be positive");
        return o.tol;
    }
    if (doc.contains("tol") && doc["tol"].is_number()) return doc["tol"].get<double>();
    return fallback;
}

json bundle_base(const json& doc) {
    if (doc.contains("input")) return doc["input"];
    return doc;
}

void set_common_bundle_flags(const Options& o, json& b, bool field_required) {
    if (!o.field.empty()) b["field"] = read_json_arg(o.field, "--field");
    if (!b.contains("field") && field_required) throw InputError("--field", "missing field descriptor");
    if (!o.ext.empty()) {
        if (!b.contains("field")) throw InputError("--field", "missing field descriptor");
        if (!b["field"].is_object()) throw InputError("--field", "field descriptor must be an object");
        b["field"]["ext"] = o.ext;
    }
    if (o.has_psi) b["psi_shift"] = o.psi_shift;
}

AsaiBundle asai_bundle(const Options& o, const json& doc, bool tau_twist) {
    json b = bundle_base(doc);
    const bool from_input = !o.input.empty() && o.field.empty() && o.chr.empty() && o.chr2.empty() &&
                            o.twist.empty() && o.ext.empty() && !o.has_psi && !o.has_xi;
    set_common_bundle_flags(o, b, true);
    if (!o.chr.empty()) b["mu"] = read_json_arg(o.chr, "--char");
    if (!o.chr2.empty()) b["nu"] = read_json_arg(o.chr2, "--char2");
    if (!b.contains("mu")) b["mu"] = "trivial";
    if (!b.contains("nu")) b["nu"] = "trivial";
    if (o.has_xi) b["xi_scale"] = o.xi_scale;
    if (!o.twist.empty()) b[tau_twist ? "tau" : "chi"] = read_json_arg(o.twist, "--twist");
    try {
        return asai_bundle_from_json(b, "");
    } catch (const InputError& e) {
        rethrow_for_flags(e,
                          {{"/field", "--field"},
                           {"/mu", "--char"},
                           {"/nu", "--char2"},
                           {"/psi_shift", "--psi-shift"},
                           {"/xi_scale", "--xi-scale"},
                           {"/chi", "--twist"},
                           {"/tau", "--twist"}},
                          from_input);
    }
}

json factor_block(const NonArchFactor& f, const std::vector<cplx>& grid) {
    return {{"form", to_string(f)}, {"factor", to_json(f)}, {"values", eval_table(f, grid)}};
}

json factor_block(const ArchFactor& f, const std::vector<cplx>& grid) {
    return {{"form", to_string(f)}, {"factor", to_json(f)}, {"values", eval_table(f, grid)}};
}

// Aligned evaluation table: one row per grid point, one column per named factor.
template <class Factor>
std::string value_table(const std::vector<std::pair<std::string, Factor>>& cols, const std::vector<cplx>& grid) {
    std::ostringstream os;
    os << std::left << std::setw(22) << "s";
    for (const auto& c : cols) os << std::setw(40) << c.first;
    os << "\n";
    for (cplx s : grid) {
        os << std::setw(22) << fmt_c(s);
        for (const auto& c : cols) os << std::setw(40) << fmt_c(c.second.eval(s));
        os << "\n";
    }
    return os.str();
}

struct Output {
    json doc;
    std::string table;
};

// ---- commands

Output cmd_tate(const Options& o) {
    const json doc = input_document(o);
    json b = bundle_base(doc);
    const bool from_input = !o.input.empty() && o.field.empty() && o.chr.empty() && o.ext.empty() &&
                            !o.has_psi;
    set_common_bundle_flags(o, b, true);
    if (!o.chr.empty()) b["char"] = read_json_arg(o.chr, "--char");
    if (!b.contains("char")) b["char"] = "trivial";
    TateBundle t;
    try {
        t = tate_bundle_from_json(b, "");
    } catch (const InputError& e) {
        rethrow_for_flags(e, {{"/field", "--field"}, {"/char", "--char"}, {"/psi_shift", "--psi-shift"}}, from_input);
    }
    const auto grid = resolve_grid(o, doc);
    const double tol = resolve_tol(o, doc, default_tolerances().phi_independence);
    TateResult r = tate_factors(t.chi, t.psi(), tol);

    Output out;
    out.doc = {{"command", "tate"},
               {"input", to_json(t)},
               {"grid", grid_to_json(grid)},
               {"tol", tol},
               {"L", factor_block(r.L, grid)},
               {"eps", factor_block(r.eps, grid)},
               {"gamma", factor_block(r.gamma, grid)},
               {"phi_deviation", r.phi_deviation},
               {"test_functions", r.test_functions_used}};
    std::ostringstream os;
    os << "field  " << t.K.describe() << ", psi shift " << t.psi_shift << ", conductor " << t.chi.conductor() << "\n"
       << "L      " << to_string(r.L) << "\n"
       << "eps    " << to_string(r.eps) << "\n"
       << "gamma  " << to_string(r.gamma) << "\n"
       << "Phi-independence deviation " << r.phi_deviation << " over " << r.test_functions_used
       << " test functions\n\n"
       << value_table<NonArchFactor>({{"L(s)", r.L}, {"eps(s)", r.eps}, {"gamma(s)", r.gamma}}, grid);
    out.table = os.str();
    return out;
}

Output cmd_asai(const Options& o) {
    const json doc = input_document(o);
    AsaiBundle b = asai_bundle(o, doc, false);
    if (b.tau) throw InputError("--twist", "a GL(2) twist belongs to twisted-asai");
    const auto grid = resolve_grid(o, doc);
    const double tol = resolve_tol(o, doc, default_tolerances().nonarch);
    const AsaiInput in = b.input();

    RSResult rs = asai_RS(in);
    const NonArchFactor direct = gamma_RS_direct(in);
    const Comparison assemblies = approx_equal(rs.gamma, direct, grid, tol);
    const NonArchFactor Lgal = L_gal_asai(in);
    const NonArchFactor egal = eps_gal(in);
    const NonArchFactor ggal = gamma_gal(in);
    EpsComparison ec = eps_gal_comparison(in, grid, tol);
    const Comparison Lcmp = approx_equal(rs.L, Lgal, grid, tol);

    json constituents = json::array();
    for (const auto& c : ec.constituents) constituents.push_back({{"name", c.name}, {"eps", factor_block(c.eps, grid)}});

    Output out;
    out.doc = {{"command", "asai"},
               {"normalization", kAsaiNormalization},
               {"input", to_json(b)},
               {"grid", grid_to_json(grid)},
               {"tol", tol},
               {"gamma_RS", factor_block(rs.gamma, grid)},
               {"eps_RS", factor_block(rs.eps, grid)},
               {"L_RS", factor_block(rs.L, grid)},
               {"L_RS_dual", factor_block(rs.L_dual, grid)},
               {"assemblies",
                {{"renormalized", factor_block(rs.gamma, grid)},
                 {"direct", factor_block(direct, grid)},
                 {"deviation", to_json(assemblies)}}},
               {"normalization_corrections", to_json(rs.norm)},
               {"galois",
                {{"L", factor_block(Lgal, grid)},
                 {"eps", factor_block(egal, grid)},
                 {"gamma", factor_block(ggal, grid)},
                 {"lambda", to_json(ec.lambda)},
                 {"constituents", constituents},
                 {"L_deviation", to_json(Lcmp)},
                 {"eps_relation", {{"rhs", factor_block(ec.rhs, grid)}, {"deviation", to_json(ec.cmp)}}}}}};
    std::ostringstream os;
    os << "field     " << b.E.describe() << ", normalization " << kAsaiNormalization << "\n"
       << "gamma_RS  " << to_string(rs.gamma) << "\n"
       << "eps_RS    " << to_string(rs.eps) << "\n"
       << "L_RS      " << to_string(rs.L) << "\n"
       << "L_Gal     " << to_string(Lgal) << "\n"
       << "eps_Gal   " << to_string(egal) << "\n"
       << "lambda    " << fmt_c(ec.lambda) << "\n"
       << "correction " << (rs.norm.applied() ? to_string(rs.norm.correction) : std::string("none")) << " (psi shift "
       << rs.norm.psi_shift << ", xi shift " << rs.norm.xi_shift << ")\n"
       << "renormalized vs direct gamma_RS: max deviation " << assemblies.max_deviation << "\n"
       << "eps_RS vs omega(xi)|xi^2|^(s-1/2) lambda^-1 eps_Gal: max deviation " << ec.cmp.max_deviation << "\n"
       << "L_RS vs L_Gal: max deviation " << Lcmp.max_deviation << "\n\n"
       << value_table<NonArchFactor>({{"gamma_RS(s)", rs.gamma}, {"eps_RS(s)", rs.eps}, {"L_Gal(s)", Lgal}}, grid);
    out.table = os.str();
    if (!assemblies.equal || !ec.cmp.equal || !Lcmp.equal)
        throw std::make_pair(out, VerificationFailure{"asai: assemblies disagree beyond the tolerance"});
    return out;
}

Output cmd_twisted(const Options& o) {
    const json doc = input_document(o);
    AsaiBundle b = asai_bundle(o, doc, true);
    if (!b.tau) throw InputError("--twist", "twisted-asai needs a GL(2) twist {\"mu2\", \"nu2\", \"v2\"}");
    const auto grid = resolve_grid(o, doc);
    const double tol = resolve_tol(o, doc, default_tolerances().nonarch);
    PSRResult r = gamma_PSR(b.input(), grid, tol, false);

    Output out;
    out.doc = {{"command", "twisted-asai"},
               {"normalization", kAsaiNormalization},
               {"input", to_json(b)},
               {"grid", grid_to_json(grid)},
               {"tol", tol},
               {"assembly1", factor_block(r.assembly1, grid)},
               {"assembly2", factor_block(r.assembly2, grid)},
               {"deviation", to_json(r.cmp)},
               {"normalization_corrections", {{"mu2", to_json(r.norm_mu2)}, {"nu2", to_json(r.norm_nu2)}}}};
    std::ostringstream os;
    os << "field       " << b.E.describe() << ", normalization " << kAsaiNormalization << "\n"
       << "assembly-1  " << to_string(r.assembly1) << "\n"
       << "assembly-2  " << to_string(r.assembly2) << "\n"
       << "max deviation " << r.cmp.max_deviation << " (tol " << tol << ")\n"
       << "corrections: mu2 " << (r.norm_mu2.applied() ? to_string(r.norm_mu2.correction) : std::string("none"))
       << ", nu2 " << (r.norm_nu2.applied() ? to_string(r.norm_nu2.correction) : std::string("none")) << "\n\n"
       << value_table<NonArchFactor>({{"assembly-1(s)", r.assembly1}, {"assembly-2(s)", r.assembly2}}, grid);
    out.table = os.str();
    if (!r.cmp.equal) throw std::make_pair(out, VerificationFailure{"twisted-asai: the two assemblies disagree"});
    return out;
}

Output cmd_dichotomy(const Options& o) {
    const json doc = input_document(o);
    AsaiBundle b = asai_bundle(o, doc, true);
    if (!b.tau) throw InputError("--twist", "dichotomy needs a GL(2) twist {\"mu2\", \"nu2\", \"v2\"}");
    const double tol = resolve_tol(o, doc, default_tolerances().sign);
    const AsaiInput in = b.input();
    if (!same_character(omega_F(in), MultChar::trivial(b.E.base()), 1e-12))
        throw InputError(o.input.empty() || !o.twist.empty() ? "--twist" : "--input/input/tau",
                         "dichotomy needs omega = omega_pi|_F omega_tau trivial");
    DichotomyResult d = dichotomy_sign(in, tol);
    const std::string sign = d.sign > 0 ? "+1" : "-1";
    Output out;
    out.doc = {{"command", "dichotomy"},
               {"normalization", kAsaiNormalization},
               {"input", to_json(b)},
               {"tol", tol},
               {"sign", sign},
               {"value", to_json(d.value)},
               {"constituents",
                {{"omega_EF(-1)", to_json(d.omega_EF_minus1)},
                 {"eps_Gal(1/2+v2, As pi x mu2)", to_json(d.eps_mu2)},
                 {"eps_Gal(1/2-v2, As pi x nu2)", to_json(d.eps_nu2)}}}};
    std::ostringstream os;
    os << sign << "\n"
       << "value                          " << fmt_c(d.value) << "\n"
       << "omega_E/F(-1)                  " << fmt_c(d.omega_EF_minus1) << "\n"
       << "eps_Gal(1/2+v2, As pi x mu2)   " << fmt_c(d.eps_mu2) << "\n"
       << "eps_Gal(1/2-v2, As pi x nu2)   " << fmt_c(d.eps_nu2) << "\n";
    out.table = os.str();
    return out;
}

Output cmd_arch_zeta(const Options& o) {
    const json doc = input_document(o);
    json b = bundle_base(doc);
    if (!o.chr.empty()) b["mu"] = read_json_arg(o.chr, "--char");
    if (!o.chr2.empty()) b["nu"] = read_json_arg(o.chr2, "--char2");
    if (!b.contains("mu")) throw InputError("--char", "missing {\"n\", \"lambda\"} for mu");
    if (!b.contains("nu")) b["nu"] = "trivial";
    const bool from_input = !o.input.empty() && o.chr.empty() && o.chr2.empty();
    CChar mu, nu;
    try {
        mu = cchar_from_json(b["mu"], "/mu");
        nu = cchar_from_json(b["nu"], "/nu");
    } catch (const InputError& e) {
        rethrow_for_flags(e, {{"/mu", "--char"}, {"/nu", "--char2"}}, from_input);
    }
    const auto grid = resolve_grid(o, doc);
    const double tol = resolve_tol(o, doc, default_tolerances().arch);
    CaseReport r = verify_case(mu, nu, grid);
    ArchGal gal = L_eps_gal_arch(mu, nu);

    double worst = std::max({r.dev_c, r.dev_c_dual, r.stddev_ratio, r.stddev_ratio_dual, r.eps_dev, r.relation_dev});
    json quad = json::array();
    for (cplx s : grid) {
        try {
            CaseZeta q = zeta_integral_case_quadrature(s, r.datum);
            const double dz = std::abs(q.ratio - r.datum.c) / std::abs(r.datum.c);
            const double dd = std::abs(q.ratio_dual - r.datum.c_dual) / std::abs(r.datum.c_dual);
            worst = std::max({worst, dz, dd});
            quad.push_back({{"s", to_json(s)}, {"ratio", to_json(q.ratio)}, {"ratio_dual", to_json(q.ratio_dual)},
                            {"deviation", std::max(dz, dd)}});
        } catch (const QuadratureError& e) {
            quad.push_back({{"s", to_json(s)}, {"skipped", e.what()}});
        } catch (const DomainError& e) {
            quad.push_back({{"s", to_json(s)}, {"skipped", e.what()}});
        }
    }

    Output out;
    out.doc = {{"command", "arch-zeta"},
               {"input", {{"mu", to_json(mu)}, {"nu", to_json(nu)}}},
               {"grid", grid_to_json(grid)},
               {"tol", tol},
               {"eps_convention", "eps(s, z^n |z|_C^(lambda-n/2), psi o tr) = i^|n| for psi(x) = exp(2 pi i x)"},
               {"case", r.datum.case_id},
               {"swapped", r.datum.swapped},
               {"pairing_vector", r.datum.pairing_vector},
               {"constants", {{"c", to_json(r.datum.c)}, {"c_dual", to_json(r.datum.c_dual)}}},
               {"eps_RS", {{"tabulated", to_json(r.datum.eps)}, {"computed", to_json(r.eps_RS)}}},
               {"mean_ratio", to_json(r.mean_ratio)},
               {"mean_ratio_dual", to_json(r.mean_ratio_dual)},
               {"L_Gal", factor_block(gal.L, grid)},
               {"eps_Gal", factor_block(gal.eps, grid)},
               {"deviations",
                {{"constant", r.dev_c},
                 {"constant_dual", r.dev_c_dual},
                 {"grid_spread", r.stddev_ratio},
                 {"grid_spread_dual", r.stddev_ratio_dual},
                 {"eps", r.eps_dev},
                 {"galois_relation", r.relation_dev},
                 {"max", worst}}},
               {"quadrature", quad}};
    std::ostringstream os;
    os << "case " << r.datum.case_id << (r.datum.swapped ? " (mu, nu swapped)" : "") << ", pairing "
       << r.datum.pairing_vector << "\n"
       << "c = " << fmt_c(r.datum.c) << ", c_dual = " << fmt_c(r.datum.c_dual) << "\n"
       << "eps_RS tabulated " << fmt_c(r.datum.eps) << ", computed " << fmt_c(r.eps_RS) << "\n"
       << "L_Gal   " << to_string(gal.L) << "\n"
       << "eps_Gal " << to_string(gal.eps) << "\n"
       << "deviations: constant " << r.dev_c << ", spread " << r.stddev_ratio << ", relation " << r.relation_dev
       << ", max incl. quadrature " << worst << "\n\n"
       << value_table<ArchFactor>({{"L_Gal(s)", gal.L}, {"eps_Gal(s)", gal.eps}}, grid);
    out.table = os.str();
    if (!(worst < tol)) throw std::make_pair(out, VerificationFailure{"arch-zeta: oracle deviation above tolerance"});
    return out;
}

Output cmd_verify(const Options& o) {
    RunConfig cfg;
    if (!o.grid.empty()) cfg.grid = grid_from_json(read_json_arg(o.grid, "--grid"), "--grid");
    if (o.has_tol) {
        if (!(o.tol > 0.0)) throw InputError("--tol", "tolerance must be positive");
        cfg.tol.nonarch = cfg.tol.arch = o.tol;
    }
    std::vector<std::string> suites = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
    for (const auto& s : suites) {
        const auto names = suite_names();
        if (std::find(names.begin(), names.end(), s) == names.end())
            throw InputError("--suite", "unknown suite '" + s + "' (arch, nonarch, tate or all)");
    }
    std::sort(suites.begin(), suites.end());
    const auto reports = run_suites(suites, cfg);
    bool ok = true;
    json arr = json::array();
    for (const auto& r : reports) {
        ok = ok && r.passed();
        arr.push_back(to_json(r));
    }
    Output out;
    out.doc = {{"command", "verify"}, {"grid", grid_to_json(cfg.grid)}, {"passed", ok}, {"suites", arr}};
    out.table = format_table(reports) + (ok ? "all checks passed\n" : "FAILED\n");
    if (!ok) throw std::make_pair(out, VerificationFailure{"verify: at least one check failed"});
    return out;
}

void emit(const Output& r, const Options& o, std::ostream& out) {
    if (o.format == "table") out << r.table;
    else out << r.doc.dump(2) << "\n";
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw InputError("--out", "cannot write " + o.out);
        f << r.doc.dump(2) << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Local L-, epsilon- and gamma-factors of Asai representations of GL(2)", "asai"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--grid", o.grid, "s-grid as a JSON array of numbers or [re, im] pairs");
        c->add_option("--out", o.out, "also write the JSON result to this file");
        c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
        c->add_option("--tol", o.tol, "comparison tolerance");
    };
    auto add_input = [&](CLI::App* c) {
        c->add_option("--input", o.input, "JSON emitted by a previous run (or its input bundle); @file reads a file");
    };
    auto add_field = [&](CLI::App* c) {
        c->add_option("--field", o.field, "field descriptor {\"p\", \"ext\", \"precision\"}");
        c->add_option("--ext", o.ext, "quadratic extension")
            ->check(CLI::IsMember({"unramified", "ramified-p", "ramified-up"}));
        c->add_option("--psi-shift", o.psi_shift, "psi(x) = psi_0(p^k x)");
    };

    CLI::App* tate = app.add_subcommand("tate", "Tate L, epsilon and gamma factors of a character");
    add_field(tate);
    tate->add_option("--char", o.chr, "character descriptor or 'trivial'");
    add_input(tate);
    add_common(tate);

    for (const auto& [name, help] :
         {std::pair<std::string, std::string>{"asai", "Asai gamma and epsilon factors of Ind(mu, nu)"},
          {"twisted-asai", "twisted Asai gamma factor against a principal series of GL(2, F)"},
          {"dichotomy", "sign omega_E/F(-1) eps_Gal(1/2, As pi x tau) for omega = 1"}}) {
        CLI::App* c = app.add_subcommand(name, help);
        add_field(c);
        c->add_option("--char", o.chr, "mu on E^x");
        c->add_option("--char2", o.chr2, "nu on E^x");
        c->add_option("--xi-scale", o.xi_scale, "xi = a * xi_0 for a rational a");
        c->add_option("--twist", o.twist,
                      name == "asai" ? "character chi of F^x" : "GL(2) twist {\"mu2\", \"nu2\", \"v2\"}");
        add_input(c);
        add_common(c);
    }

    CLI::App* arch = app.add_subcommand("arch-zeta", "archimedean case table and quadrature oracle");
    arch->add_option("--char", o.chr, "mu = {\"n\", \"lambda\"} on C^x");
    arch->add_option("--char2", o.chr2, "nu = {\"n\", \"lambda\"} on C^x");
    add_input(arch);
    add_common(arch);

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", o.suite, "arch, nonarch, tate or all");
    add_common(verify);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    }

    CLI::App* cmd = app.get_subcommands().front();
    auto given = [&](const char* flag) {
        const CLI::Option* opt = cmd->get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
    };
    o.has_psi = given("--psi-shift");
    o.has_xi = given("--xi-scale");
    o.has_tol = given("--tol");

    try {
        Output r;
        const std::string name = cmd->get_name();
        if (name == "tate") r = cmd_tate(o);
        else if (name == "asai") r = cmd_asai(o);
        else if (name == "twisted-asai") r = cmd_twisted(o);
        else if (name == "dichotomy") r = cmd_dichotomy(o);
        else if (name == "arch-zeta") r = cmd_arch_zeta(o);
        else r = cmd_verify(o);
        emit(r, o, out);
        return kOk;
    } catch (const std::pair<Output, VerificationFailure>& f) {
        try {
            emit(f.first, o, out);
        } catch (const InputError& e) {
            err << "input error: " << e.what() << "\n";
        }
        err << "verification failure: " << f.second.what << "\n";
        return kVerificationFailure;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const ConsistencyError& e) {
        err << "verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace asai::cli
