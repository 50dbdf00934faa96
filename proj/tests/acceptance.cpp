// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "csf/cli.hpp"
#include "csf/family.hpp"
#include "csf/formulas.hpp"

using namespace csf;

namespace {

const OracleOptions kOracle{.edge_cap = 40};

struct Outcome {
    bool pass = true;
    std::string detail;

    // Keeps the first failure message.
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

int failures = 0;

void report(int number, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(3);
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " [" << std::fixed
         << seconds << " s]";
    if (!o.detail.empty()) line << " -- " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failures;
}

std::string cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    run(args, out, err);
    return out.str();
}

std::int64_t w(const std::vector<int>& parts) {
    std::int64_t value = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) value *= parts[k] - 1;
    return value;
}

int sigma_plus_direct(const std::vector<int>& parts, int a) {
    int s = 0;
    for (std::size_t k = 0; s < a; ++k) s += parts[k];
    return s;
}

int sigma_minus_direct(const std::vector<int>& parts, int a) {
    int s = 0;
    for (int p : parts) {
        if (s + p > a) break;
        s += p;
    }
    return s;
}

struct SweepEntry {
    std::string spec;
    std::string family;
    NSymPoly closed;
    SymPoly oracle;
};

std::vector<SweepEntry> sweep_entries;

Outcome goldens() {
    Outcome o;
    const std::pair<std::vector<std::string>, std::string> cases[] = {
        {{"compute", "tadpole:4,1", "--basis", "e"}, "15*e[5] + 9*e[4,1] + 3*e[3,2] + 1*e[2,2,1]\n"},
        {{"compute", "ltadpole:4,1", "--basis", "e"}, "30*e[5] + 6*e[4,1] + 6*e[3,2]\n"},
        {{"compute", "barbell:3,2,2", "--basis", "e"},
         "28*e[7] + 20*e[6,1] + 12*e[5,2] + 68*e[4,3] + 16*e[3,3,1]\n"},
        {{"compute", "hat:1,4,1", "--basis", "e"},
         "18*e[6] + 22*e[5,1] + 6*e[4,2] + 6*e[4,1,1] + 2*e[3,2,1] + 2*e[2,2,2]\n"},
        {{"compute", "cycle-ribbon:5"}, "4*R[1,2,1,1] + 6*R[1,1,2,1] + 30*R[1,1,1,1,1]\n"},
    };
    for (const auto& [args, expected] : cases) {
        const std::string got = cli(args);
        if (got != expected) o.fail(args[1] + " printed " + got);
    }
    return o;
}

Outcome oracle_sweep() {
    Outcome o;
    int count = 0;
    for (const auto& family : closed_form_families())
        for (const auto& spec : admissible_specs(family, 9)) {
            SweepEntry entry{spec.to_string(), family, elementary_expansion(spec),
                             p_to_e(csf_oracle(build(spec), kOracle))};
            if (project_to_e(entry.closed) != entry.oracle) o.fail(entry.spec + " closed form differs from oracle");
            sweep_entries.push_back(std::move(entry));
            ++count;
        }
    o.detail = o.pass ? std::to_string(count) + " instances" : o.detail;
    return o;
}

Outcome positivity() {
    Outcome o;
    if (sweep_entries.empty()) o.fail("criterion 2 produced no instances");
    int closed_bad = 0, oracle_bad = 0;
    std::string closed_first, oracle_first;
    int other_total = 0, other_bad = 0;
    std::set<std::string> bad_families;
    for (const auto& entry : sweep_entries) {
        const int before = closed_bad + oracle_bad;
        const auto closed = is_positive(entry.closed);
        if (!closed.positive || !has_integer_coefficients(entry.closed)) {
            if (closed_bad++ == 0)
                closed_first = entry.spec + (closed.positive ? " non-integer"
                                                             : " Lambda[" + closed.witness->to_string() +
                                                                   "] = " + to_string(closed.coefficient));
            bad_families.insert(entry.family);
        }
        const auto oracle = is_e_positive(entry.oracle);
        if (!oracle.positive || !has_integer_coefficients(entry.oracle)) {
            if (oracle_bad++ == 0)
                oracle_first = entry.spec + (oracle.positive ? " non-integer"
                                                             : " e[" + oracle.witness->to_string() +
                                                                   "] = " + to_string(oracle.coefficient));
            bad_families.insert(entry.family);
        }
        if (entry.family != "spider") {
            ++other_total;
            if (closed_bad + oracle_bad != before) ++other_bad;
        }
    }
    for (int n = 2; n <= 9; ++n) {
        const NSymPoly f = cycle_ribbon_analog(n);
        if (!is_positive(f).positive || !has_integer_coefficients(f))
            o.fail("cycle-ribbon:" + std::to_string(n) + " is not a nonnegative integer R-expansion");
    }
    if (closed_bad || oracle_bad) {
        std::string families;
        for (const auto& f : bad_families) families += (families.empty() ? "" : ",") + f;
        o.fail(std::to_string(closed_bad) + " of " + std::to_string(sweep_entries.size()) +
               " closed forms not Lambda-positive (first " + closed_first + "); " + std::to_string(oracle_bad) +
               " oracle outputs not e-positive (first " + oracle_first + "); families: " + families + "; other families: " +
               std::to_string(other_total - other_bad) + " of " + std::to_string(other_total) + " positive");
    }
    return o;
}

Outcome transitions() {
    Outcome o;
    for (int n = 1; n <= 7; ++n)
        for (const auto& i : compositions_of(n)) {
            const NSymPoly psi(NSymBasis::Psi, i);
            const NSymPoly lambda = psi_to_lambda(psi);
            if (project(lambda) != p_to_e(SymPoly(SymBasis::p, rho(i)))) o.fail("projection of Psi[" + i.to_string() + "]");
            if (psi_to_ribbon(psi) != lambda_to_ribbon(lambda)) o.fail("ribbon route for Psi[" + i.to_string() + "]");
        }
    return o;
}

Outcome lemma_sweeps() {
    Outcome o;
    // w_I w_J = j1/(j1-1) w_K for every rearrangement K of IJ keeping i1 first.
    for (int total = 2; total <= 8; ++total)
        for (int a = 1; a < total; ++a)
            for (const auto& i : compositions_of(a))
                for (const auto& j : compositions_of(total - a)) {
                    if (j.first() == 1) continue;
                    if (stat_w(i) != w(i.vector()) || stat_w(j) != w(j.vector())) o.fail("stat_w mismatch");
                    std::vector<int> tail(i.begin() + 1, i.end());
                    tail.insert(tail.end(), j.begin(), j.end());
                    std::sort(tail.begin(), tail.end());
                    do {
                        std::vector<int> k{i.first()};
                        k.insert(k.end(), tail.begin(), tail.end());
                        const Rational lhs = Rational(stat_w(i)) * stat_w(j);
                        const Rational rhs = Rational(j.first(), j.first() - 1) * stat_w(Composition(k));
                        if (lhs != rhs) o.fail("w identity for I=" + i.to_string() + " J=" + j.to_string());
                    } while (std::next_permutation(tail.begin(), tail.end()));
                }
    for (int n = 1; n <= 8; ++n)
        for (const auto& i : compositions_of(n)) {
            const Composition bar = reversal(i);
            for (int a = 0; a <= n; ++a) {
                const PartialSums s = partial_sums(i, a);
                if (s.sigma_plus != sigma_plus_direct(i.vector(), a) ||
                    s.sigma_minus != sigma_minus_direct(i.vector(), a))
                    o.fail("partial sums of " + i.to_string() + " at " + std::to_string(a));
                if (s.theta_plus != s.sigma_plus - a || s.theta_minus != a - s.sigma_minus)
                    o.fail("theta of " + i.to_string());
                if (s.sigma_minus != n - sigma_plus(bar, n - a) || s.theta_minus != theta_plus(bar, n - a))
                    o.fail("duality for " + i.to_string() + " at " + std::to_string(a));
                for (int t = 0; t <= s.theta_plus && a + t <= n; ++t)
                    if (s.theta_plus != t + theta_plus(i, a + t))
                        o.fail("theta shift for " + i.to_string() + " a=" + std::to_string(a));
            }
        }
    for (int total = 3; total <= 8; ++total)
        for (int l = 1; l + 2 <= total; ++l) {
            const int m = total - l;
            const NSymPoly product = nsym_mul(path_analog(l), cycle_analog(m));
            if (path_cycle_product_concat_form(l, m) != product || path_cycle_product_theta_form(l, m) != product)
                o.fail("path*cycle forms at l=" + std::to_string(l) + " m=" + std::to_string(m));
        }
    for (int n = 2; n <= 8; ++n) {
        for (int l = 0; l <= n - 2; ++l) {
            NSymPoly direct(NSymBasis::Lambda);
            for (int k = 0; k <= l; ++k) direct = direct + nsym_mul(path_analog(k), cycle_analog(n - k));
            if (path_cycle_convolution(l, n) != direct)
                o.fail("path*cycle convolution n=" + std::to_string(n) + " l=" + std::to_string(l));
        }
        for (int m = 2; m <= n - 1; ++m) {
            NSymPoly path_first(NSymBasis::Lambda);
            SymPoly cycle_first(SymBasis::e);
            for (int i = 2; i <= m; ++i) {
                path_first = path_first + nsym_mul(path_analog(n - i), cycle_analog(i));
                cycle_first = cycle_first + sym_mul(p_to_e(csf_oracle(cycle_graph(i), kOracle)),
                                                    p_to_e(csf_oracle(path_graph(n - i), kOracle)));
            }
            const NSymPoly closed = cycle_path_convolution(m, n);
            if (closed != path_first || project_to_e(closed) != cycle_first)
                o.fail("cycle*path convolution n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
        const NSymPoly average = Rational(1, n - 1) * path_cycle_convolution(n - 2, n);
        if (average != path_analog(n) || project_to_e(average) != p_to_e(csf_oracle(path_graph(n), kOracle)))
            o.fail("full convolution average at n=" + std::to_string(n));
    }
    return o;
}

Outcome appendix_cycle() {
    Outcome o;
    for (int n = 2; n <= 8; ++n) {
        const NSymPoly lambda = psi_to_lambda(cycle_psi_analog(n));
        for (const auto& i : compositions_of(n))
            if (lambda.coefficient(i) != Rational((i.first() - 1) * w(i.vector())))
                o.fail("coefficient of Lambda[" + i.to_string() + "] for n=" + std::to_string(n));
        if (lambda.size() > compositions_of(n).size()) o.fail("stray terms at n=" + std::to_string(n));
    }
    return o;
}

Outcome triple_deletion() {
    Outcome o;
    std::mt19937 rng(90210);
    std::uniform_int_distribution<int> order(4, 8);
    std::bernoulli_distribution coin(0.35);
    int tested = 0;
    while (tested < 60) {
        const int n = order(rng);
        std::vector<Edge> edges;
        for (int u = 3; u < n; ++u)
            for (int v = 0; v < u; ++v)
                if (coin(rng)) edges.emplace_back(v, u);
        // Triple {0,1,2} is stable since no edge joins two of its vertices.
        std::vector<int> perm(n);
        for (int k = 0; k < n; ++k) perm[k] = k;
        std::shuffle(perm.begin(), perm.end(), rng);
        auto x = [&](std::vector<Edge> extra) {
            std::vector<Edge> all;
            for (auto [u, v] : edges) all.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
            for (auto [u, v] : extra) all.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
            return csf_oracle(Graph(n, all), kOracle);
        };
        const Edge e1{0, 1}, e2{1, 2}, e3{0, 2};
        const SymPoly g1 = x({e1}), g3 = x({e3}), g12 = x({e1, e2}), g13 = x({e1, e3}), g23 = x({e2, e3});
        const SymPoly g123 = x({e1, e2, e3});
        if (g12 != g1 + g23 - g3) o.fail("first identity on random graph #" + std::to_string(tested));
        if (g123 != g13 + g23 - g3) o.fail("second identity on random graph #" + std::to_string(tested));
        ++tested;
    }
    int hats = 0;
    for (int total = 3; total <= 8; ++total)
        for (int m = 3; m <= total; ++m)
            for (int a = 0; a + m <= total; ++a) {
                const int b = total - a - m;
                auto X = [](const Graph& g) { return p_to_e(csf_oracle(g, kOracle)); };
                const SymPoly lhs = X(hat_graph(a, m, b));
                const SymPoly rhs = X(hat_graph(a + 1, m - 1, b)) + X(spider_graph(a + 1, m - 2, b)) -
                                    sym_mul(X(path_graph(a + 1)), X(tadpole_graph(m - 1, b)));
                if (lhs != rhs) o.fail("hat recurrence at " + std::to_string(a) + "," + std::to_string(m) + "," +
                                       std::to_string(b));
                ++hats;
            }
    if (o.pass) o.detail = std::to_string(tested) + " random graphs, " + std::to_string(hats) + " hats";
    return o;
}

Outcome counts() {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        const auto all = compositions_of(n);
        if (all.size() != (std::size_t{1} << (n - 1))) o.fail("number of compositions of " + std::to_string(n));
        if (std::set<Composition>(all.begin(), all.end()).size() != all.size()) o.fail("duplicate compositions");
        for (const auto& i : all) {
            if (i.size() != n) o.fail("composition " + i.to_string() + " has the wrong size");
            std::size_t expected = std::size_t{1} << (i.length() - 1);
            for (int p : i) expected *= p;
            if (hooks_of(i).size() != expected) o.fail("|H_I| for I=" + i.to_string());
        }
    }
    return o;
}

}  // namespace

int main() {
    report(1, "printed expansions match byte-exactly", goldens);
    report(2, "closed forms agree with the brute-force oracle for n <= 9", oracle_sweep);
    report(3, "closed forms and oracle outputs are positive and integral", positivity);
    report(4, "basis transitions for n <= 7", transitions);
    report(5, "composition and product lemmas for sizes <= 8", lemma_sweeps);
    report(6, "power-sum cycle analog in the elementary basis for 2 <= n <= 8", appendix_cycle);
    report(7, "triple deletion on random graphs and the hat recurrence", triple_deletion);
    report(8, "composition and hook-set counts for n <= 8", counts);
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
    return failures ? 1 : 0;
}
