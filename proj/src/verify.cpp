#include "csf/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "csf/family.hpp"
#include "csf/formulas.hpp"

namespace csf {

namespace {

CheckLine make_line(std::string label, bool pass, std::string detail = {}) {
    return {std::move(label), pass, pass ? std::string() : std::move(detail)};
}

SymPoly oracle_e(const Graph& g, const OracleOptions& options) { return p_to_e(csf_oracle(g, options)); }

std::vector<CheckLine> family_sweep(const std::string& family, const VerifyOptions& options) {
    std::vector<CheckLine> lines;
    for (const auto& spec : admissible_specs(family, options.max_size))
        lines.push_back(check_family_instance(spec.to_string(), options.oracle));
    return lines;
}

std::vector<CheckLine> cycle_ribbon_sweep(const VerifyOptions& options) {
    std::vector<CheckLine> lines;
    for (int n = 2; n <= options.max_size; ++n) {
        const NSymPoly f = cycle_ribbon_analog(n);
        std::string problem;
        if (!check_nonnegative(f).positive || !has_integer_coefficients(f)) problem = "not a nonnegative integer expansion";
        const Composition ones(std::vector<int>(n, 1));
        if (f.coefficient(ones) != Rational(mpz_class(1) << n) - 2) problem = "wrong coefficient at R[1^n]";
        for (const auto& [key, value] : f.terms()) {
            if (key == ones) continue;
            bool ok = key.first() == 1 && key.last() == 1;
            for (int p : key) ok = ok && p <= 2;
            if (!ok) problem = "unexpected support R[" + key.to_string() + "]";
        }
        const SymPoly projected = project_to_e(f);
        const SymPoly oracle = oracle_e(cycle_graph(n), options.oracle);
        if (projected != oracle) problem = "projection " + to_text(projected) + " != oracle " + to_text(oracle);
        lines.push_back(make_line("cycle-ribbon n=" + std::to_string(n), problem.empty(), problem));
    }
    return lines;
}

std::vector<CheckLine> cycle_psi_sweep(const VerifyOptions& options) {
    std::vector<CheckLine> lines;
    for (int n = 2; n <= options.max_size; ++n) {
        const NSymPoly lambda = psi_to_lambda(cycle_psi_analog(n));
        const NSymPoly expected = cycle_analog(n);
        lines.push_back(make_line("cycle-psi n=" + std::to_string(n), lambda == expected,
                                  to_text(lambda) + " != " + to_text(expected)));
    }
    return lines;
}

std::vector<CheckLine> path_cycle_sweep(const VerifyOptions& options) {
    std::vector<CheckLine> lines;
    for (int total = 3; total <= options.max_size; ++total)
        for (int l = 1; l + 2 <= total; ++l) {
            const int m = total - l;
            std::string label = "path-cycle l=" + std::to_string(l) + " m=" + std::to_string(m);
            std::string problem;
            try {
                const NSymPoly closed = path_cycle_product(l, m);
                if (closed != nsym_mul(path_analog(l), cycle_analog(m))) problem = "differs from the product of analogs";
                const SymPoly oracle =
                    sym_mul(oracle_e(path_graph(l), options.oracle), oracle_e(cycle_graph(m), options.oracle));
                if (project_to_e(closed) != oracle) problem = "projection differs from the oracle product";
            } catch (const std::logic_error& e) {
                problem = e.what();
            }
            lines.push_back(make_line(std::move(label), problem.empty(), problem));
        }
    return lines;
}

std::vector<CheckLine> convolution_sweep(const VerifyOptions& options) {
    std::vector<CheckLine> lines;
    for (int n = 2; n <= options.max_size; ++n) {
        for (int l = 0; l <= n - 2; ++l) {
            NSymPoly direct(NSymBasis::Lambda);
            for (int k = 0; k <= l; ++k) direct.add_scaled(nsym_mul(path_analog(k), cycle_analog(n - k)), 1);
            const NSymPoly closed = path_cycle_convolution(l, n);
            lines.push_back(make_line("convolution path*cycle n=" + std::to_string(n) + " l=" + std::to_string(l),
                                      closed == direct, to_text(closed) + " != " + to_text(direct)));
        }
        for (int m = 2; m <= n - 1; ++m) {
            NSymPoly path_first(NSymBasis::Lambda), cycle_first(NSymBasis::Lambda);
            for (int i = 2; i <= m; ++i) {
                path_first.add_scaled(nsym_mul(path_analog(n - i), cycle_analog(i)), 1);
                cycle_first.add_scaled(nsym_mul(cycle_analog(i), path_analog(n - i)), 1);
            }
            const NSymPoly closed = cycle_path_convolution(m, n);
            const bool ok = closed == path_first && project_to_e(closed) == project_to_e(cycle_first);
            lines.push_back(make_line("convolution cycle*path n=" + std::to_string(n) + " m=" + std::to_string(m), ok,
                                      to_text(closed) + " vs " + to_text(path_first)));
        }
        const NSymPoly average = Rational(1, n - 1) * path_cycle_convolution(n - 2, n);
        lines.push_back(make_line("convolution full n=" + std::to_string(n), average == path_analog(n),
                                  to_text(average) + " != " + to_text(path_analog(n))));
    }
    return lines;
}

std::vector<CheckLine> transitions_sweep(const VerifyOptions& options) {
    std::vector<CheckLine> lines;
    for (int n = 1; n <= options.max_size; ++n)
        for (const auto& i : compositions_of(n)) {
            const NSymPoly psi(NSymBasis::Psi, i);
            const NSymPoly lambda = psi_to_lambda(psi);
            std::string problem;
            if (project(lambda) != p_to_e(SymPoly(SymBasis::p, rho(i)))) problem = "projection mismatch";
            if (psi_to_ribbon(psi) != lambda_to_ribbon(lambda)) problem += " ribbon route mismatch";
            lines.push_back(make_line("transitions I=" + i.to_string(), problem.empty(), problem));
        }
    return lines;
}

std::vector<CheckLine> triple_deletion_sweep(const VerifyOptions& options) {
    std::vector<CheckLine> lines;
    std::mt19937 rng(options.seed);
    const int top = std::max(4, std::min(options.max_size, 8));
    std::uniform_int_distribution<int> order(4, top);
    std::bernoulli_distribution coin(0.4);
    while (static_cast<int>(lines.size()) < options.random_graphs) {
        const int n = order(rng);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
        const Graph g(n, edges);
        std::vector<std::array<int, 3>> stable;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                for (int z = y + 1; z < n; ++z)
                    if (!g.has_edge(x, y) && !g.has_edge(y, z) && !g.has_edge(x, z)) stable.push_back({x, y, z});
        if (stable.empty()) continue;
        auto t = stable[std::uniform_int_distribution<std::size_t>(0, stable.size() - 1)(rng)];
        std::shuffle(t.begin(), t.end(), rng);
        const auto result = triple_deletion_check(g, t, options.oracle);
        std::string label = "triple-deletion #" + std::to_string(lines.size() + 1) + " n=" + std::to_string(n) +
                            " |E|=" + std::to_string(g.edge_count()) + " T=(" + std::to_string(t[0]) + "," +
                            std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
        lines.push_back(make_line(std::move(label), result.holds(),
                                  result.first_identity ? "second identity fails" : "first identity fails"));
    }
    return lines;
}

std::vector<CheckLine> hat_recurrence_sweep(const VerifyOptions& options) {
    std::vector<CheckLine> lines;
    for (int total = 3; total <= options.max_size; ++total)
        for (int m = 3; m <= total; ++m)
            for (int a = 0; a + m <= total; ++a) {
                const int b = total - a - m;
                const Graph hat = hat_graph(a, m, b);
                const SymPoly lhs = oracle_e(hat, options.oracle);
                const SymPoly rhs = oracle_e(hat_graph(a + 1, m - 1, b), options.oracle) +
                                    oracle_e(spider_graph(a + 1, m - 2, b), options.oracle) -
                                    sym_mul(oracle_e(path_graph(a + 1), options.oracle),
                                            oracle_e(tadpole_graph(m - 1, b), options.oracle));
                // v_k is vertex k - 1; the triple is (v_{a+m}, v_{a+1}, v_{a+2}). For m = 3 the
                // edge e3 is a path edge, so the hat is G_123 rather than G_12.
                const std::array<int, 3> t{a + m - 1, a, a + 1};
                Graph base = hat;
                for (auto [x, y] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[0], t[2]}})
                    base = base.without_edge(x, y);
                const bool matches_hat = triple_graph(base, t, m == 3 ? 7u : 3u) == hat;
                const bool triple_ok = triple_deletion_check(base, t, options.oracle).holds();
                std::string label = "hat-recurrence hat:" + std::to_string(a) + "," + std::to_string(m) + "," +
                                    std::to_string(b);
                lines.push_back(make_line(std::move(label), lhs == rhs && matches_hat && triple_ok,
                                          lhs == rhs ? "triple deletion on the hat triangle fails"
                                                     : to_text(lhs) + " != " + to_text(rhs)));
            }
    return lines;
}

}  // namespace

const std::vector<std::string>& verification_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out = closed_form_families();
        for (const char* extra : {"cycle-ribbon", "cycle-psi", "path-cycle", "convolution", "triple-deletion",
                                  "hat-recurrence", "transitions"})
            out.emplace_back(extra);
        return out;
    }();
    return names;
}

CheckLine check_family_instance(const std::string& spec_text, const OracleOptions& oracle) {
    const FamilySpec spec = FamilySpec::parse(spec_text);
    const SymPoly closed = project_to_e(elementary_expansion(spec));
    const SymPoly brute = oracle_e(build(spec), oracle);
    return make_line(spec.to_string(), closed == brute, "closed form " + to_text(closed) + " != oracle " + to_text(brute));
}

std::vector<CheckLine> run_verification(const std::string& name, const VerifyOptions& options) {
    if (has_closed_form(name)) return family_sweep(name, options);
    if (name == "cycle-ribbon") return cycle_ribbon_sweep(options);
    if (name == "cycle-psi") return cycle_psi_sweep(options);
    if (name == "path-cycle") return path_cycle_sweep(options);
    if (name == "convolution") return convolution_sweep(options);
    if (name == "triple-deletion") return triple_deletion_sweep(options);
    if (name == "hat-recurrence") return hat_recurrence_sweep(options);
    if (name == "transitions") return transitions_sweep(options);
    throw std::invalid_argument("unknown verification '" + name + "'");
}

}  // namespace csf
