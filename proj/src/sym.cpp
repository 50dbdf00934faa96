#include "csf/sym.hpp"

#include <deque>
#include <mutex>

namespace csf {

const char* basis_name(SymBasis b) {
    switch (b) {
        case SymBasis::e: return "e";
        case SymBasis::h: return "h";
        case SymBasis::p: return "p";
    }
    return "?";
}

SymBasis parse_sym_basis(std::string_view name) {
    if (name == "e") return SymBasis::e;
    if (name == "h") return SymBasis::h;
    if (name == "p") return SymBasis::p;
    throw std::invalid_argument("unknown symmetric basis '" + std::string(name) + "'");
}

SymPoly sym_add(const SymPoly& f, const SymPoly& g) { return f + g; }

SymPoly sym_scale(const SymPoly& f, const Rational& c) { return c * f; }

SymPoly sym_mul(const SymPoly& f, const SymPoly& g) {
    f.require_same_basis(g);
    SymPoly out(f.basis());
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) {
            std::vector<int> parts = a.vector();
            parts.insert(parts.end(), b.begin(), b.end());
            out.add(Partition(std::move(parts)), ca * cb);
        }
    return out;
}

namespace {

void require_basis(const SymPoly& f, SymBasis b, const char* op) {
    if (f.basis() != b)
        throw std::invalid_argument(std::string(op) + ": expected basis " + basis_name(b) + ", got " +
                                    basis_name(f.basis()));
}

// Grows a table of single-index images on demand. Deque keeps references stable.
template <class Step>
const SymPoly& cached(std::deque<SymPoly>& table, std::mutex& mutex, int k, Step step) {
    if (k < 0) throw std::invalid_argument("negative degree");
    std::lock_guard lock(mutex);
    while (static_cast<int>(table.size()) <= k) table.push_back(step(table, static_cast<int>(table.size())));
    return table[k];
}

// Replaces every b_lambda by the product of the images of its parts.
template <class Image>
SymPoly substitute(const SymPoly& f, SymBasis target, Image image) {
    SymPoly out(target);
    for (const auto& [lambda, c] : f.terms()) {
        SymPoly term(target, Partition(), c);
        for (int part : lambda) term = sym_mul(term, image(part));
        out.add_scaled(term, 1);
    }
    return out;
}

}  // namespace

const SymPoly& power_sum_in_e(int k) {
    static std::deque<SymPoly> table;
    static std::mutex mutex;
    return cached(table, mutex, k, [](const std::deque<SymPoly>& t, int n) {
        if (n == 0) return SymPoly(SymBasis::e, Partition(), 1);
        // p_n = sum_{i<n} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n
        SymPoly out(SymBasis::e);
        for (int i = 1; i < n; ++i)
            out.add_scaled(sym_mul(SymPoly(SymBasis::e, Partition{i}), t[n - i]), i % 2 ? 1 : -1);
        out.add(Partition{n}, n % 2 ? n : -n);
        return out;
    });
}

const SymPoly& complete_in_p(int k) {
    static std::deque<SymPoly> table;
    static std::mutex mutex;
    return cached(table, mutex, k, [](const std::deque<SymPoly>& t, int n) {
        if (n == 0) return SymPoly(SymBasis::p, Partition(), 1);
        // n h_n = sum_{i=1}^n p_i h_{n-i}
        SymPoly out(SymBasis::p);
        for (int i = 1; i <= n; ++i)
            out.add_scaled(sym_mul(SymPoly(SymBasis::p, Partition{i}), t[n - i]), Rational(1, n));
        return out;
    });
}

namespace {

const SymPoly& elementary_in_p(int k) {
    static std::deque<SymPoly> table;
    static std::mutex mutex;
    return cached(table, mutex, k, [](const std::deque<SymPoly>& t, int n) {
        if (n == 0) return SymPoly(SymBasis::p, Partition(), 1);
        // n e_n = sum_{i=1}^n (-1)^{i-1} e_{n-i} p_i
        SymPoly out(SymBasis::p);
        for (int i = 1; i <= n; ++i)
            out.add_scaled(sym_mul(SymPoly(SymBasis::p, Partition{i}), t[n - i]), Rational(i % 2 ? 1 : -1, n));
        return out;
    });
}

}  // namespace

SymPoly p_to_e(const SymPoly& f) {
    require_basis(f, SymBasis::p, "p_to_e");
    return substitute(f, SymBasis::e, [](int k) { return power_sum_in_e(k); });
}

SymPoly h_to_p(const SymPoly& f) {
    require_basis(f, SymBasis::h, "h_to_p");
    return substitute(f, SymBasis::p, [](int k) { return complete_in_p(k); });
}

SymPoly h_to_e(const SymPoly& f) { return p_to_e(h_to_p(f)); }

SymPoly e_to_p(const SymPoly& f) {
    require_basis(f, SymBasis::e, "e_to_p");
    return substitute(f, SymBasis::p, [](int k) { return elementary_in_p(k); });
}

SymPoly to_e(const SymPoly& f) {
    switch (f.basis()) {
        case SymBasis::e: return f;
        case SymBasis::h: return h_to_e(f);
        case SymBasis::p: return p_to_e(f);
    }
    return f;
}

SymPositivity is_e_positive(const SymPoly& f) { return check_nonnegative(to_e(f)); }

}  // namespace csf
