#include "csf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "csf/family.hpp"
#include "csf/formulas.hpp"
#include "csf/json_io.hpp"
#include "csf/verify.hpp"

namespace csf {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Settings {
    std::string target;
    std::string graph_json;
    std::string basis;
    std::string format = "text";
    int max_size = 8;
    std::size_t subset_cap = OracleOptions{}.edge_cap;
    std::string what;
    std::string arg;
};

std::vector<int> parse_ints(const std::string& text) {
    return FamilySpec::parse("kchain:" + text).params;
}

// Targets that are not graph families but name one of the auxiliary analogs.
std::optional<NSymPoly> auxiliary_analog(const std::string& target) {
    auto colon = target.find(':');
    if (colon == std::string::npos) return std::nullopt;
    const std::string name = target.substr(0, colon);
    const std::string rest = target.substr(colon + 1);
    auto need = [&](std::size_t count) {
        std::vector<int> p;
        try {
            p = parse_ints(rest);
        } catch (const std::invalid_argument&) {
        }
        if (p.size() != count)
            throw UsageError(name + " takes " + std::to_string(count) + " parameter(s)");
        return p;
    };
    if (name == "cycle-psi") return cycle_psi_analog(need(1)[0]);
    if (name == "cycle-ribbon") return cycle_ribbon_analog(need(1)[0]);
    if (name == "path-cycle") {
        auto p = need(2);
        return path_cycle_product(p[0], p[1]);
    }
    if (name == "conv-path-cycle") {
        auto p = need(2);
        return path_cycle_convolution(p[0], p[1]);
    }
    if (name == "conv-cycle-path") {
        auto p = need(2);
        return cycle_path_convolution(p[0], p[1]);
    }
    return std::nullopt;
}

void print_sym(const SymPoly& f, const Settings& s, std::ostream& out) {
    if (s.format == "json")
        out << to_json(f).dump() << '\n';
    else
        out << to_text(f) << '\n';
}

void print_nsym(const NSymPoly& f, const Settings& s, std::ostream& out) {
    if (s.format == "json")
        out << to_json(f).dump() << '\n';
    else
        out << to_text(f) << '\n';
}

Graph target_graph(const Settings& s) {
    if (!s.graph_json.empty() && !s.target.empty()) throw UsageError("give either a family spec or --graph, not both");
    if (!s.graph_json.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(s.graph_json);
        } catch (const nlohmann::json::parse_error& e) {
            throw UsageError(std::string("--graph is not valid JSON: ") + e.what());
        }
        return graph_from_json(j);
    }
    if (s.target.empty()) throw UsageError("missing family spec or --graph");
    return build(FamilySpec::parse(s.target));
}

int do_compute(const Settings& s, std::ostream& out) {
    if (s.target.empty()) throw UsageError("compute needs a target such as tadpole:4,1");
    NSymPoly analog(NSymBasis::Lambda);
    if (auto aux = auxiliary_analog(s.target))
        analog = *aux;
    else
        analog = elementary_expansion(FamilySpec::parse(s.target));
    const std::string basis = s.basis.empty() ? basis_name(analog.basis()) : s.basis;
    if (basis == "e" || basis == "p") {
        SymPoly e = project_to_e(analog);
        print_sym(basis == "e" ? e : e_to_p(e), s, out);
    } else {
        print_nsym(convert(analog, parse_nsym_basis(basis)), s, out);
    }
    return 0;
}

int do_oracle(const Settings& s, std::ostream& out) {
    const Graph g = target_graph(s);
    const SymPoly p = csf_oracle(g, OracleOptions{.edge_cap = s.subset_cap});
    const std::string basis = s.basis.empty() ? "e" : s.basis;
    if (basis != "e" && basis != "p") throw UsageError("oracle prints in basis e or p");
    print_sym(basis == "e" ? p_to_e(p) : p, s, out);
    return 0;
}

int do_positivity(const Settings& s, std::ostream& out) {
    const Graph g = target_graph(s);
    const SymPoly e = p_to_e(csf_oracle(g, OracleOptions{.edge_cap = s.subset_cap}));
    const auto report = check_nonnegative(e);
    if (report.positive) {
        out << "e-positive: yes\n";
    } else {
        out << "e-positive: no\n";
        out << "witness: e[" << report.witness->to_string() << "] = " << to_string(report.coefficient) << '\n';
    }
    if (!s.target.empty()) {
        const NSymPoly analog = elementary_expansion(FamilySpec::parse(s.target));
        const auto lambda = is_positive(analog);
        out << "Lambda-positive closed form: " << (lambda.positive ? "yes" : "no");
        if (!lambda.positive)
            out << " (Lambda[" << lambda.witness->to_string() << "] = " << to_string(lambda.coefficient) << ')';
        out << '\n';
    }
    return 0;
}

int do_verify(const Settings& s, std::ostream& out) {
    const auto& names = verification_names();
    if (std::find(names.begin(), names.end(), s.target) == names.end())
        throw UsageError("unknown theorem '" + s.target + "'");
    VerifyOptions options;
    options.max_size = s.max_size;
    options.oracle.edge_cap = std::max(options.oracle.edge_cap, s.subset_cap);
    int failed = 0, passed = 0;
    for (const auto& line : run_verification(s.target, options)) {
        out << (line.pass ? "PASS " : "FAIL ") << line.label;
        if (!line.pass) out << ": " << line.detail;
        out << '\n';
        ++(line.pass ? passed : failed);
    }
    out << "summary: " << passed << " passed, " << failed << " failed\n";
    return failed ? 1 : 0;
}

int do_enumerate(const Settings& s, std::ostream& out) {
    std::vector<Composition> items;
    if (s.what == "compositions") {
        int n = 0;
        try {
            n = std::stoi(s.arg);
        } catch (const std::exception&) {
            throw UsageError("compositions needs a size");
        }
        items = compositions_of(n);
    } else {
        const Composition c = Composition::parse(s.arg);
        if (s.what == "hooks")
            items = hooks_of(c);
        else if (s.what == "refinements")
            items = refinements(c);
        else if (s.what == "coarsenings")
            items = coarsenings(c);
        else
            throw UsageError("enumerate what? compositions, hooks, refinements or coarsenings");
    }
    for (const auto& c : items) out << c.to_string() << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chromatic symmetric functions of graph families"};
    app.require_subcommand(1);
    Settings s;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", s.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* compute = app.add_subcommand("compute", "closed-form expansion of a family member");
    compute->add_option("target", s.target, "family spec, e.g. tadpole:4,1, or cycle-ribbon:n, path-cycle:l,m, ...")
        ->required();
    compute->add_option("--basis", s.basis, "Lambda, S, Psi, R, e or p")
        ->check(CLI::IsMember({"Lambda", "S", "Psi", "R", "e", "p"}));
    add_format(compute);

    auto* oracle = app.add_subcommand("oracle", "brute-force expansion of a family member or JSON graph");
    oracle->add_option("target", s.target, "family spec");
    oracle->add_option("--graph", s.graph_json, "graph as JSON: {\"n\":3,\"edges\":[[0,1],[1,2]]}");
    oracle->add_option("--basis", s.basis, "e or p")->check(CLI::IsMember({"e", "p"}));
    oracle->add_option("--subset-cap", s.subset_cap, "maximum number of edges");
    add_format(oracle);

    auto* positivity = app.add_subcommand("positivity", "e-positivity verdict with witness");
    positivity->add_option("target", s.target, "family spec");
    positivity->add_option("--graph", s.graph_json, "graph as JSON");
    positivity->add_option("--subset-cap", s.subset_cap, "maximum number of edges");

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("theorem", s.target, "family name or one of cycle-ribbon, cycle-psi, path-cycle, "
                                            "convolution, triple-deletion, hat-recurrence, transitions")
        ->required();
    verify->add_option("--max-size", s.max_size, "largest size in the sweep")->check(CLI::Range(1, 12));
    verify->add_option("--subset-cap", s.subset_cap, "maximum number of edges for the oracle");

    auto* enumerate = app.add_subcommand("enumerate", "list compositions, hooks, refinements or coarsenings");
    enumerate->add_option("what", s.what, "compositions, hooks, refinements or coarsenings")->required();
    enumerate->add_option("arg", s.arg, "a size, or a composition such as 3,1")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return do_compute(s, out);
        if (oracle->parsed()) return do_oracle(s, out);
        if (positivity->parsed()) return do_positivity(s, out);
        if (verify->parsed()) return do_verify(s, out);
        if (enumerate->parsed()) return do_enumerate(s, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace csf
