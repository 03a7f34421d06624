#include "ecmf/cli.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecmf/apcount.hpp"
#include "ecmf/classical.hpp"
#include "ecmf/emit.hpp"
#include "ecmf/errors.hpp"
#include "ecmf/galois.hpp"
#include "ecmf/halfplane.hpp"
#include "ecmf/lattice.hpp"
#include "ecmf/primes.hpp"
#include "ecmf/qseries.hpp"
#include "ecmf/reduction.hpp"
#include "ecmf/weierstrass.hpp"

namespace ecmf::cli {

namespace {

using nlohmann::json;

// Integers that fit 53 bits stay JSON numbers; anything bigger becomes a
// decimal string so downstream consumers never truncate silently.
json json_int(const BigInt& v) {
    static const BigInt lim = pow_int(BigInt(2), 53);
    if (v < lim && v > -lim) return v.convert_to<long long>();
    return v.str();
}

std::string format_complex(double re, double im) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", re, im);
    return buf;
}

json complex_json(const Cplx& z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

LatticeSummation method_of(const CliConfig& cfg) {
    if (cfg.method == "shells") return LatticeSummation::Shells;
    if (cfg.method == "rows") return LatticeSummation::Rows;
    throw DomainError("unknown lattice summation method: " + cfg.method);
}

void emit(const json& j, const std::string& format, std::ostream& out) {
    if (format == "text") out << render_text(j);
    else out << render_json(j);
}

// ---- subcommand bodies ----------------------------------------------------

void cmd_curve_analyze(const CliConfig& cfg, const std::string& model_text,
                       std::ostream& out) {
    const WeierstrassModel m = WeierstrassModel::parse(model_text);
    const CurveInvariants inv = m.invariants();

    json reduction = json::array();
    for (std::int64_t q : primes_up_to(cfg.pmax)) {
        json row{{"p", q}};
        try {
            row["type"] = reduction_type_name(reduction_type(m, BigInt(q)));
        } catch (const DomainError& e) {
            row["type"] = "unsupported";
        }
        reduction.push_back(row);
    }

    json j{{"model", m.str()},
           {"delta", json_of(inv.delta)},
           {"c4", json_of(inv.c4)},
           {"j", json_of(inv.j)},
           {"disc_weierstrass", json_of(m.disc_weierstrass())},
           {"reduction", reduction}};
    try {
        j["conductor"] = json_int(conductor(m));
        j["semistable"] = is_semistable(m);
    } catch (const DomainError& e) {
        j["conductor_error"] = e.what();
    }
    emit(j, cfg.format.empty() ? "json" : cfg.format, out);
}

void cmd_curve_ap(const CliConfig& cfg, const std::string& model_text, std::ostream& out) {
    const WeierstrassModel m = WeierstrassModel::parse(model_text);
    const ApTable table = build_ap_table(m, cfg.pmax);
    const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
    if (fmt == "csv") {
        out << ap_table_csv(table);
        return;
    }
    json a = json::object();
    for (const auto& [n, v] : table.a) a[std::to_string(n)] = v.str();
    json j{{"model", table.model}, {"nmax", table.nmax}, {"a", a},
           {"skipped", table.skipped}, {"warnings", table.warnings}};
    emit(j, fmt, out);
}

void cmd_frey(const CliConfig& cfg, long long a, long long b, long long c, unsigned P,
              std::ostream& out) {
    const FreyData f = frey_curve(BigInt(a), BigInt(b), BigInt(c), P);

    json cross = json::array();
    bool all_equal = true;
    for (std::int64_t q : primes_up_to(std::min<long>(cfg.pmax, 199))) {
        if (q < 5 || f.delta % q == 0) continue;
        const std::int64_t viaformula = frey_ap_formula(f, BigInt(q));
        const std::int64_t viacount = ap(f.model, BigInt(q));
        if (viaformula != viacount) all_equal = false;
        cross.push_back({{"p", q}, {"formula", viaformula}, {"count", viacount}});
    }

    json j{{"a", json_int(f.a)},
           {"b", json_int(f.b)},
           {"c", json_int(f.c)},
           {"P", f.P},
           {"model", f.model.str()},
           {"delta", f.delta.str()},
           {"conductor", f.conductor.str()},
           {"semistable", f.semistable},
           {"ap_crosscheck", cross},
           {"ap_crosscheck_ok", all_equal}};
    emit(j, cfg.format.empty() ? "json" : cfg.format, out);
}

void cmd_qexp(const CliConfig& cfg, const std::string& name, std::ostream& out) {
    QSeries s = [&]() {
        if (name == "E4") return eisenstein_series(4, cfg.prec);
        if (name == "E6") return eisenstein_series(6, cfg.prec);
        if (name == "delta") return delta_series(cfg.prec);
        if (name == "j") return j_series(cfg.prec);
        throw DomainError("qexp: unknown series '" + name + "' (E4, E6, delta, j)");
    }();
    const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
    if (fmt == "csv") {
        out << "n,coeff\n";
        for (long n = s.lowest(); n < s.prec(); ++n)
            out << n << "," << to_string(s.coeff(n)) << "\n";
        return;
    }
    emit(series_to_json(s), fmt, out);
}

void cmd_hecke(const CliConfig& cfg, long n, std::ostream& out) {
    const QSeries delta = delta_series(cfg.prec * n);
    const QSeries tn = hecke_Tn(delta, n);
    const BigInt eigen = num(delta.coeff(n));
    const QSeries scaled = delta.scaled(BigRat(eigen));
    json j{{"n", n},
           {"form", "delta"},
           {"eigenvalue", eigen.str()},
           {"is_eigenform", tn.agrees_with(scaled)},
           {"series", series_to_json(tn)}};
    emit(j, cfg.format.empty() ? "json" : cfg.format, out);
}

void cmd_dim(const CliConfig& cfg, long long N, std::ostream& out) {
    const DimFormulaParts parts = dim_S2_gamma0(BigInt(N));
    json j{{"N", json_int(parts.N)},
           {"mu0", json_int(parts.mu0)},
           {"mu02", json_int(parts.mu02)},
           {"mu03", json_int(parts.mu03)},
           {"c0", json_int(parts.c0)},
           {"g0", json_int(parts.g0)}};
    emit(j, cfg.format.empty() ? "json" : cfg.format, out);
}

void cmd_reduce(const CliConfig& cfg, double re, double im, std::ostream& out) {
    const FundamentalReduction red = fundamental_reduce(UpperHalfPoint(re, im));
    const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
    if (fmt == "text") {
        out << format_complex(red.point.re, red.point.im) << " word " << red.word << "\n";
        return;
    }
    json j{{"input", {{"re", re}, {"im", im}}},
           {"point", {{"re", red.point.re}, {"im", red.point.im}}},
           {"gamma",
            {{"a", json_int(red.gamma.a)},
             {"b", json_int(red.gamma.b)},
             {"c", json_int(red.gamma.c)},
             {"d", json_int(red.gamma.d)}}},
           {"word", red.word}};
    emit(j, fmt, out);
}

json lattice_report(const LatticeSpec& L, double tol) {
    const SumResult g4 = eisenstein_Gk_numeric(L, 4);
    const SumResult g6 = eisenstein_Gk_numeric(L, 6);

    // Deterministic sample points away from the lattice.
    double residual_max = 0.0;
    double even_dev = 0.0, periodic_dev = 0.0;
    for (int i = 1; i <= 5; ++i) {
        const Cplx z = (0.13 * i) * L.omega1 + (0.071 * i) * L.omega2;
        residual_max = std::max(residual_max, ode_residual(L, z));
        const WpValue plus = wp_eval(L, z);
        const WpValue minus = wp_eval(L, -z);
        even_dev = std::max(even_dev, std::abs(plus.wp - minus.wp));
        const WpValue shifted = wp_eval(L, z + L.omega1);
        periodic_dev = std::max(periodic_dev, std::abs(plus.wp - shifted.wp));
    }
    const WpValue half = wp_eval(L, 0.5 * L.omega1);

    return {{"G4", {{"value", complex_json(g4.value)}, {"error", g4.error_estimate}}},
            {"G6", {{"value", complex_json(g6.value)}, {"error", g6.error_estimate}}},
            {"ode_residual_max", residual_max},
            {"wp_even_deviation", even_dev},
            {"wp_periodic_deviation", periodic_dev},
            {"wp_prime_at_half_period", std::abs(half.wp_prime)},
            {"tolerance_met", residual_max < tol}};
}

void cmd_lattice_check(const CliConfig& cfg, std::ostream& out) {
    const LatticeSummation meth = method_of(cfg);
    const LatticeSpec square = LatticeSpec::square(cfg.radius, meth);
    const LatticeSpec hex = LatticeSpec::hexagonal(cfg.radius, meth);

    json torsion = json::object();
    for (long n = 2; n <= 4; ++n) {
        const TorusTorsion t = torus_torsion(n);
        torsion[std::to_string(n)] = {{"points", t.points.size()}, {"structure", t.structure}};
    }

    const TateReport tate = tate_truncation(2, 3);
    json transitions = json::array();
    for (const auto& t : tate.transitions)
        transitions.push_back(
            {{"level", t.level}, {"kernel", t.kernel_size}, {"surjective", t.surjective}});

    json j{{"radius", cfg.radius},
           {"method", cfg.method},
           {"square", lattice_report(square, cfg.tol)},
           {"hexagonal", lattice_report(hex, cfg.tol)},
           {"torsion", torsion},
           {"tate",
            {{"ell", tate.ell},
             {"depth", tate.depth},
             {"transitions", transitions},
             {"generators_compatible", tate.generators_compatible},
             {"rank2_free", tate.rank2_free}}}};
    emit(j, cfg.format.empty() ? "json" : cfg.format, out);
}

void cmd_galois_frob(const CliConfig& cfg, long p, int k, std::ostream& out) {
    const FqField f(p, k);
    json subfields = json::object();
    for (const auto& [d, size] : subfield_lattice(p, k))
        subfields[std::to_string(d)] = size;
    json j{{"p", p},
           {"k", k},
           {"modulus", f.modulus()},
           {"frobenius_order", frobenius_order(p, k)},
           {"subfields", subfields}};
    emit(j, cfg.format.empty() ? "json" : cfg.format, out);
}

void cmd_classical_pythag(const CliConfig& cfg, long long a, long long b, std::ostream& out) {
    const PythagTriple t = pythag_param(BigInt(a), BigInt(b));
    json j{{"x", json_int(t.x)}, {"y", json_int(t.y)}, {"z", json_int(t.z)},
           {"a", json_int(t.a)}, {"b", json_int(t.b)}};
    emit(j, cfg.format.empty() ? "json" : cfg.format, out);
}

void cmd_classical_reduce_exp(const CliConfig& cfg, long long n, std::ostream& out) {
    const ExponentReduction r = exponent_reduce(BigInt(n));
    json j{{"kind", r.kind == ExponentReduction::Kind::Four ? "four" : "odd-prime"},
           {"cofactor", json_int(r.cofactor)},
           {"witness", r.witness}};
    if (r.kind == ExponentReduction::Kind::OddPrime) j["p"] = json_int(r.p);
    emit(j, cfg.format.empty() ? "json" : cfg.format, out);
}

void cmd_classical_n4(const CliConfig& cfg, long bound, std::ostream& out) {
    const auto hits = n4_search(bound);
    json solutions = json::array();
    for (const auto& [x, y] : hits) solutions.push_back({{"x", x}, {"y", y}});
    json j{{"bound", bound}, {"solutions", solutions}, {"count", hits.size()}};
    emit(j, cfg.format.empty() ? "json" : cfg.format, out);
}

void cmd_classical_eisenstein(const CliConfig& cfg, long range, std::ostream& out) {
    const EisensteinLemmaReport r = eisenstein_lemma_check(range);
    json j{{"range", r.range},
           {"checked", r.checked},
           {"residues_ok", r.residues_ok},
           {"cubes_ok", r.cubes_ok},
           {"three_over_lambda2_unit", r.three_unit_ok}};
    emit(j, cfg.format.empty() ? "json" : cfg.format, out);
}

void cmd_classical_abc(const CliConfig& cfg, long long a, long long b, long long c,
                       bool scan, long cmax, std::ostream& out) {
    if (scan) {
        const auto rows = abc_quality_scan(cmax);
        const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
        if (fmt == "csv") {
            out << abc_scan_csv(rows);
            return;
        }
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"a", json_int(r.a)}, {"b", json_int(r.b)}, {"c", json_int(r.c)},
                           {"rad", json_int(r.rad)}, {"q", r.q}});
        emit(json{{"cmax", cmax}, {"rows", arr}}, fmt, out);
        return;
    }
    const AbcQuality q = abc_quality(BigInt(a), BigInt(b), BigInt(c));
    json j{{"rad", json_int(q.rad)},
           {"q", q.q},
           {"flt_exponent_bound", flt_exponent_bound(BigInt(a), BigInt(b), BigInt(c))},
           {"k_assumption", "K_0.5 = 1 (illustrative, not a theorem)"}};
    emit(j, cfg.format.empty() ? "json" : cfg.format, out);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ecmf: elliptic curves, modular forms and classical descent, desk scale"};
    app.fallthrough();
    app.set_config("--config");

    CliConfig cfg;
    app.add_option("--prec", cfg.prec, "q-series truncation order")->check(CLI::PositiveNumber);
    app.add_option("--pmax", cfg.pmax, "prime scan bound")->check(CLI::PositiveNumber);
    app.add_option("--radius", cfg.radius, "lattice truncation radius")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol", cfg.tol, "lattice comparison tolerance");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--method", cfg.method, "lattice summation method")
        ->check(CLI::IsMember({"rows", "shells"}));

    std::function<void()> action;

    // curve
    auto* curve = app.add_subcommand("curve", "elliptic curve analysis");
    std::string model_text;
    auto* analyze = curve->add_subcommand("analyze", "invariants, reduction table, conductor");
    analyze->add_option("model", model_text, "curve model")->required();
    analyze->callback([&] { action = [&] { cmd_curve_analyze(cfg, model_text, out); }; });
    auto* capn = curve->add_subcommand("ap", "A_n table as CSV");
    capn->add_option("model", model_text, "curve model")->required();
    capn->callback([&] { action = [&] { cmd_curve_ap(cfg, model_text, out); }; });
    curve->require_subcommand(1);

    // frey
    auto* frey = app.add_subcommand("frey", "Frey curve invariants and a_p cross-check");
    long long fa = 0, fb = 0, fc = 0;
    unsigned fP = 1;
    frey->add_option("a", fa)->required();
    frey->add_option("b", fb)->required();
    frey->add_option("c", fc)->required();
    frey->add_option("P", fP)->required();
    frey->callback([&] { action = [&] { cmd_frey(cfg, fa, fb, fc, fP, out); }; });

    // qexp
    auto* qexp = app.add_subcommand("qexp", "q-expansions: E4, E6, delta, j");
    std::string series_name;
    qexp->add_option("series", series_name, "E4|E6|delta|j")->required();
    qexp->callback([&] { action = [&] { cmd_qexp(cfg, series_name, out); }; });

    // hecke
    auto* hecke = app.add_subcommand("hecke", "Hecke operator T_n on delta");
    long hecke_n = 2;
    hecke->add_option("n", hecke_n, "operator index")->required()->check(CLI::PositiveNumber);
    hecke->callback([&] { action = [&] { cmd_hecke(cfg, hecke_n, out); }; });

    // dim
    auto* dim = app.add_subcommand("dim", "dim S_2(Gamma_0(N)) formula parts");
    long long dim_n = 1;
    dim->add_option("N", dim_n, "level")->required()->check(CLI::PositiveNumber);
    dim->callback([&] { action = [&] { cmd_dim(cfg, dim_n, out); }; });

    // reduce
    auto* reduce = app.add_subcommand("reduce", "fundamental domain reduction");
    double zre = 0, zim = 0;
    reduce->add_option("re", zre)->required();
    reduce->add_option("im", zim)->required();
    reduce->callback([&] { action = [&] { cmd_reduce(cfg, zre, zim, out); }; });

    // lattice
    auto* lattice = app.add_subcommand("lattice", "numeric lattice engine");
    auto* lcheck = lattice->add_subcommand("check", "uniformization checks as JSON");
    lcheck->callback([&] { action = [&] { cmd_lattice_check(cfg, out); }; });
    lattice->require_subcommand(1);

    // galois
    auto* galois = app.add_subcommand("galois", "finite field Galois machinery");
    auto* frob = galois->add_subcommand("frob", "Frobenius order and subfield lattice");
    long gp = 2;
    int gk = 1;
    frob->add_option("p", gp)->required()->check(CLI::PositiveNumber);
    frob->add_option("k", gk)->required()->check(CLI::PositiveNumber);
    frob->callback([&] { action = [&] { cmd_galois_frob(cfg, gp, gk, out); }; });
    galois->require_subcommand(1);

    // classical
    auto* classical = app.add_subcommand("classical", "exponent machinery");
    auto* pythag = classical->add_subcommand("pythag", "Pythagorean parametrization");
    long long pa = 0, pb = 0;
    pythag->add_option("a", pa)->required();
    pythag->add_option("b", pb)->required();
    pythag->callback([&] { action = [&] { cmd_classical_pythag(cfg, pa, pb, out); }; });

    auto* rexp = classical->add_subcommand("reduce-exp", "exponent reduction");
    long long rn = 3;
    rexp->add_option("n", rn)->required();
    rexp->callback([&] { action = [&] { cmd_classical_reduce_exp(cfg, rn, out); }; });

    auto* n4 = classical->add_subcommand("n4", "x^4 + y^4 = square search");
    long bound = 200;
    n4->add_option("bound", bound)->required()->check(CLI::PositiveNumber);
    n4->callback([&] { action = [&] { cmd_classical_n4(cfg, bound, out); }; });

    auto* eis = classical->add_subcommand("eisenstein", "Z[rho] lemma verification");
    long range = 10;
    eis->add_option("range", range)->required()->check(CLI::PositiveNumber);
    eis->callback([&] { action = [&] { cmd_classical_eisenstein(cfg, range, out); }; });

    auto* abc = classical->add_subcommand("abc", "radical and quality");
    long long aa = 1, ab = 1, ac = 2;
    bool scan = false;
    long cmax = 100;
    abc->add_option("a", aa);
    abc->add_option("b", ab);
    abc->add_option("c", ac);
    abc->add_flag("--scan", scan, "scan all coprime triples with c <= cmax");
    abc->add_option("--cmax", cmax, "scan bound")->check(CLI::PositiveNumber);
    abc->callback([&] { action = [&] { cmd_classical_abc(cfg, aa, ab, ac, scan, cmax, out); }; });
    classical->require_subcommand(1);

    app.require_subcommand(1);

    // CLI11 wants argv-style input.
    std::vector<const char*> argv;
    argv.push_back("ecmf");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (action) action();
        return 0;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace ecmf::cli
