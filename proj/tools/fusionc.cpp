// fusionc: fusion-ideal construction and verification CLI.
//
// Subcommands: generators, potential, quotient, verlinde, koszul.
// Exit codes: 0 success / all checks pass, 1 verification mismatch,
// 2 usage error. Output is deterministic and byte-identical across runs.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fusion/serialize.hpp"

using namespace fusion;

namespace {

struct Options {
    int rank = 0;
    std::string functor;    // "mu0,mu1,...,mud"
    std::string classical;  // "n,k"
    std::string grid;       // ';'-separated spec tokens
    std::string out;
    std::string format = "json";
    int degree_window = 0;  // 0 = pick a default
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, sep)) out.push_back(item);
    return out;
}

FunctorSpec parse_functor(int rank, const std::string& coeffs) {
    if (rank < 2) throw UsageError("--functor requires --rank n with n >= 2");
    std::vector<Rational> mu;
    for (const auto& tok : split(coeffs, ',')) {
        try {
            mu.emplace_back(tok);
        } catch (const std::exception&) {
            throw UsageError("bad coefficient '" + tok + "' in --functor");
        }
    }
    if (mu.empty()) throw UsageError("--functor needs at least one coefficient");
    try {
        return FunctorSpec(rank, UPoly(std::move(mu)), "functor");
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

FunctorSpec parse_classical(const std::string& nk, int* level_out = nullptr) {
    auto parts = split(nk, ',');
    if (parts.size() != 2) throw UsageError("--classical expects \"n,k\"");
    int n, k;
    try {
        n = std::stoi(parts[0]);
        k = std::stoi(parts[1]);
    } catch (const std::exception&) {
        throw UsageError("--classical expects integers \"n,k\"");
    }
    if (n < 2 || k < 0) throw UsageError("--classical needs n >= 2 and k >= 0");
    if (level_out) *level_out = k;
    return FunctorSpec::classical(n, k);
}

struct SpecEntry {
    FunctorSpec spec;
    std::optional<int> level;  // set for classical specs
};

SpecEntry parse_grid_token(const std::string& tok) {
    if (tok.rfind("classical:", 0) == 0) {
        int level = 0;
        FunctorSpec s = parse_classical(tok.substr(10), &level);
        return {s, level};
    }
    if (tok.rfind("functor:", 0) == 0) {
        auto rest = tok.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw UsageError("grid functor token is functor:n:mu0,mu1,...");
        int n;
        try {
            n = std::stoi(rest.substr(0, colon));
        } catch (const std::exception&) {
            throw UsageError("bad rank in grid token '" + tok + "'");
        }
        return {parse_functor(n, rest.substr(colon + 1)), std::nullopt};
    }
    throw UsageError("grid token must start with classical: or functor:");
}

std::vector<SpecEntry> resolve_specs(const Options& opt) {
    int given = (!opt.functor.empty()) + (!opt.classical.empty()) + (!opt.grid.empty());
    if (given != 1) throw UsageError("provide exactly one of --functor, --classical, --grid");
    std::vector<SpecEntry> specs;
    if (!opt.functor.empty()) {
        specs.push_back({parse_functor(opt.rank, opt.functor), std::nullopt});
    } else if (!opt.classical.empty()) {
        int level = 0;
        FunctorSpec s = parse_classical(opt.classical, &level);
        if (opt.rank != 0 && opt.rank != s.rank) throw UsageError("--rank conflicts with --classical");
        specs.push_back({s, level});
    } else {
        for (const auto& tok : split(opt.grid, ';'))
            if (!tok.empty()) specs.push_back(parse_grid_token(tok));
        if (specs.empty()) throw UsageError("--grid is empty");
    }
    return specs;
}

struct CommandResult {
    json doc;
    std::string text;
    int exit_code = 0;
};

std::string spec_header(const FunctorSpec& spec) {
    std::ostringstream os;
    os << "spec: rank=" << spec.rank << " F=[";
    for (std::size_t i = 0; i < spec.f.coeffs().size(); ++i) {
        if (i) os << ",";
        os << spec.f.coeffs()[i].str_short();
    }
    os << "]\n";
    return os.str();
}

json spec_json(const FunctorSpec& spec) {
    json coeffs = json::array();
    for (const auto& c : spec.f.coeffs()) coeffs.push_back(c.str());
    return json{{"rank", spec.rank}, {"functor_coefficients", std::move(coeffs)}};
}

CommandResult cmd_generators(const SpecEntry& entry) {
    const FunctorSpec& spec = entry.spec;
    IdealPresentation pres = ideal_presentation(spec);
    GroebnerBasis gb = buchberger(pres.elem_cn1, spec.rank - 1);

    CommandResult res;
    res.doc = presentation_json(pres);
    res.doc["spec"] = spec_json(spec);
    res.doc["unit_ideal"] = gb.is_unit_ideal();
    res.doc["groebner"] = groebner_json(gb);

    std::ostringstream os;
    os << spec_header(spec);
    for (std::size_t j = 0; j < pres.sym.size(); ++j) {
        os << "q_" << j << "      = " << poly_text(pres.antisym[j]) << "\n";
        os << "c_{F," << j << "} = " << poly_text(pres.sym[j]) << "\n";
        os << "  in c-basis (c_n=1): " << poly_text(pres.elem_cn1[j]) << "\n";
    }
    os << "ideal in c_1..c_" << spec.rank - 1 << ": " << (gb.is_unit_ideal() ? "unit" : "proper") << "\n";
    res.text = os.str();
    return res;
}

CommandResult cmd_potential(const SpecEntry& entry) {
    const FunctorSpec& spec = entry.spec;
    Potential pot = potential(spec);
    DerivativeCheck check = potential_derivative_check(spec);

    CommandResult res;
    res.doc = potential_json(pot, check);
    res.doc["spec"] = spec_json(spec);
    res.exit_code = check.all_pass() ? 0 : 1;

    std::ostringstream os;
    os << spec_header(spec);
    os << "G coefficients: ";
    for (std::size_t i = 0; i < pot.g.coeffs().size(); ++i)
        os << (i ? "," : "") << pot.g.coeffs()[i].str_short();
    os << "\nV       = " << poly_text(pot.v) << "\n";
    os << "V(c)    = " << poly_text(pot.v_elem.poly()) << "\n";
    for (const auto& e : check.entries)
        os << "dV identity j=" << e.j << ": " << (e.pass ? "pass" : "FAIL residual " + poly_text(e.residual)) << "\n";
    res.text = os.str();
    return res;
}

CommandResult cmd_quotient(const SpecEntry& entry) {
    const FunctorSpec& spec = entry.spec;
    IdealPresentation pres = ideal_presentation(spec);
    GroebnerBasis gb = buchberger(pres.elem_cn1, spec.rank - 1);

    CommandResult res;
    res.doc["spec"] = spec_json(spec);
    std::ostringstream os;
    os << spec_header(spec);
    try {
        QuotientAlgebra algebra = QuotientAlgebra::build(gb);
        res.doc["quotient"] = quotient_json(algebra);
        res.doc["dimension"] = algebra.dimension();
        res.doc["finite_dimensional"] = true;
        os << "dimension = " << algebra.dimension() << "\n";
        for (const auto& e : algebra.basis_monomials())
            os << "  basis " << monomial_text(e, algebra.nvars()) << "\n";
    } catch (const DimensionError& err) {
        res.doc["groebner"] = groebner_json(gb);
        res.doc["finite_dimensional"] = false;
        res.doc["witness_variable"] = err.witness;
        res.exit_code = 1;
        os << "quotient is not finite-dimensional (variable index " << err.witness << ")\n";
    }
    res.text = os.str();
    return res;
}

CommandResult cmd_verlinde(const SpecEntry& entry) {
    if (!entry.level) throw UsageError("verlinde requires a classical spec (--classical n,k)");
    QuotientComparison cmp = compare_with_quotient(entry.spec.rank, *entry.level);

    CommandResult res;
    res.doc = comparison_json(cmp);
    res.doc["spec"] = spec_json(entry.spec);
    res.exit_code = cmp.match ? 0 : 1;

    std::ostringstream os;
    os << spec_header(entry.spec);
    os << "level     = " << *entry.level << "\n";
    os << "dimension = " << cmp.dimension_actual << " (expected " << cmp.dimension_expected << ")\n";
    os << "match     = " << (cmp.match ? "true" : "false") << "\n";
    for (const auto& m : cmp.mismatches) os << "  mismatch: " << m << "\n";
    res.text = os.str();
    return res;
}

CommandResult cmd_koszul(const SpecEntry& entry, int degree_window) {
    const FunctorSpec& spec = entry.spec;
    int d = static_cast<int>(spec.f.degree());
    RegularityReport r1 = regseq1_check(spec.rank, d);
    RegularityReport r2 = regseq2_check(spec);

    CommandResult res;
    res.doc["spec"] = spec_json(spec);
    res.doc["regseq1"] = regularity_json(r1);
    res.doc["regseq2"] = regularity_json(r2);

    std::ostringstream os;
    os << spec_header(spec);
    auto render_reg = [&os](const RegularityReport& r) {
        os << r.sequence << ": " << (r.overall ? "regular" : "NOT regular") << "\n";
        for (const auto& s : r.steps)
            os << "  step " << s.index << ": " << (s.pass ? "pass" : "FAIL") << " (" << s.note << ")\n";
    };
    render_reg(r1);
    render_reg(r2);

    bool boundary = false;
    if (spec.rank >= 4 && degree_window <= 0) {
        // window sizes explode in >= 4 variables; require an explicit cap
        res.doc["cohomology"] = json{{"skipped", "rank >= 4: pass --degree-window to force"}};
        os << "koszul cohomology skipped for rank >= 4 (pass --degree-window to force)\n";
    } else
    try {
        KoszulReport rep = degree_window > 0 ? truncated_koszul_cohomology(spec, degree_window)
                                             : stable_koszul_cohomology(spec);
        res.doc["cohomology"] = koszul_json(rep);
        os << "koszul window [0," << rep.degree_cap << "], kernel degrees <= " << rep.kernel_cap
           << (degree_window > 0 ? "" : rep.stable ? ", stable" : ", NOT stable")
           << ", d^2=0: " << (rep.d_squared_zero ? "yes" : "NO") << "\n";
        for (const auto& g : rep.groups)
            os << "  H^" << g.k << ": raw " << g.raw_classes << ", localized " << g.localized_classes
               << (g.resolved ? "" : " (unresolved)") << "\n";
    } catch (const BoundaryWarning& w) {
        boundary = true;
        res.doc["cohomology"] = json{{"error", w.what()}};
        os << "koszul window: " << w.what() << "\n";
    }

    std::optional<int> ref = koszul_hilbert_reference(spec);
    if (ref) {
        res.doc["hilbert_reference"] = *ref;
        os << "groebner-side dim H^" << spec.rank - 1 << " reference = " << *ref << "\n";
    } else {
        res.doc["hilbert_reference"] = nullptr;
        os << "groebner-side reference unavailable (quotient not finite-dimensional)\n";
    }

    res.exit_code = (r1.overall && r2.overall && !boundary) ? 0 : 1;
    res.text = os.str();
    return res;
}

CommandResult run(const std::string& cmd, const SpecEntry& entry, const Options& opt) {
    if (cmd == "generators") return cmd_generators(entry);
    if (cmd == "potential") return cmd_potential(entry);
    if (cmd == "quotient") return cmd_quotient(entry);
    if (cmd == "verlinde") return cmd_verlinde(entry);
    if (cmd == "koszul") return cmd_koszul(entry, opt.degree_window);
    throw UsageError("unknown command '" + cmd + "'");
}

int emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "fusionc: cannot open output file " << out_path << "\n";
        return 2;
    }
    f << payload;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Higher fusion ideals of SU(n): construction and verification"};
    app.require_subcommand(1);

    Options opt;
    std::vector<CLI::App*> subs;
    for (const char* name : {"generators", "potential", "quotient", "verlinde", "koszul"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--rank", opt.rank, "Rank n of SU(n)");
        sub->add_option("--functor", opt.functor, "Character polynomial coefficients mu0,mu1,...,mud");
        sub->add_option("--classical", opt.classical, "Classical spec n,k expanding F(t)=(-t)^{n+k}");
        sub->add_option("--grid", opt.grid, "Batch: ';'-separated classical:n,k / functor:n:mu0,... tokens");
        sub->add_option("--out", opt.out, "Output file (default stdout)");
        sub->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--degree-window", opt.degree_window, "Upper degree D of the Koszul window [0,D]");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        std::vector<SpecEntry> specs = resolve_specs(opt);
        int worst = 0;
        std::string payload;
        if (specs.size() == 1) {
            CommandResult r = run(cmd, specs[0], opt);
            worst = r.exit_code;
            payload = opt.format == "json" ? dump_json(r.doc) : r.text;
        } else {
            json batch = json::array();
            std::ostringstream text;
            for (const auto& entry : specs) {
                CommandResult r = run(cmd, entry, opt);
                worst = std::max(worst, r.exit_code);
                batch.push_back(std::move(r.doc));
                text << r.text << "\n";
            }
            payload = opt.format == "json"
                          ? dump_json(json{{"schema", kSchemaVersion}, {"results", std::move(batch)}})
                          : text.str();
        }
        int io = emit(payload, opt.out);
        return io != 0 ? io : worst;
    } catch (const UsageError& e) {
        std::cerr << "fusionc: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fusionc: error: " << e.what() << "\n";
        return 1;
    }
}
