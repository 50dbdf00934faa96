#include "csf/nsym.hpp"

#include <deque>
#include <functional>
#include <mutex>
#include <unordered_map>

namespace csf {

const char* basis_name(NSymBasis b) {
    switch (b) {
        case NSymBasis::Lambda: return "Lambda";
        case NSymBasis::S: return "S";
        case NSymBasis::Psi: return "Psi";
        case NSymBasis::R: return "R";
    }
    return "?";
}

NSymBasis parse_nsym_basis(std::string_view name) {
    if (name == "Lambda") return NSymBasis::Lambda;
    if (name == "S") return NSymBasis::S;
    if (name == "Psi") return NSymBasis::Psi;
    if (name == "R") return NSymBasis::R;
    throw std::invalid_argument("unknown noncommutative basis '" + std::string(name) + "'");
}

NSymPoly nsym_add(const NSymPoly& f, const NSymPoly& g) { return f + g; }

NSymPoly nsym_scale(const NSymPoly& f, const Rational& c) { return c * f; }

NSymPoly nsym_mul(const NSymPoly& f, const NSymPoly& g) {
    f.require_same_basis(g);
    if (f.basis() == NSymBasis::R) throw std::invalid_argument("nsym_mul: ribbon products are not supported");
    NSymPoly out(f.basis());
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) out.add(concat(a, b), ca * cb);
    return out;
}

namespace {

void require_basis(const NSymPoly& f, NSymBasis b, const char* op) {
    if (f.basis() != b)
        throw std::invalid_argument(std::string(op) + ": expected basis " + basis_name(b) + ", got " +
                                    basis_name(f.basis()));
}

struct CompositionHash {
    std::size_t operator()(const Composition& c) const {
        std::size_t h = 0;
        for (int p : c) h = h * 131 + static_cast<std::size_t>(p);
        return h;
    }
};

// Per-key images. Small degrees are recomputed; larger ones are kept.
class KeyMemo {
public:
    explicit KeyMemo(std::function<NSymPoly(const Composition&)> image) : image_(std::move(image)) {}

    NSymPoly operator()(const Composition& key) {
        if (key.size() < kMemoFrom) return image_(key);
        {
            std::lock_guard lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        NSymPoly value = image_(key);
        std::lock_guard lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

private:
    static constexpr int kMemoFrom = 6;
    std::function<NSymPoly(const Composition&)> image_;
    std::mutex mutex_;
    std::unordered_map<Composition, NSymPoly, CompositionHash> table_;
};

NSymPoly apply_linear(const NSymPoly& f, NSymBasis target, KeyMemo& memo) {
    NSymPoly out(target);
    for (const auto& [key, c] : f.terms()) out.add_scaled(memo(key), c);
    return out;
}

// Image of a multiplicative basis key as the product of single-part images.
NSymPoly product_of_parts(const Composition& key, NSymBasis target,
                          const std::function<const NSymPoly&(int)>& single) {
    NSymPoly out(target, Composition(), 1);
    for (int part : key) out = nsym_mul(out, single(part));
    return out;
}

// Both S^n in Lambda and Lambda^n in S are sum_{J |= n} eps^J B^J.
const NSymPoly& signed_sum_of_compositions(NSymBasis target, int n) {
    static std::mutex mutex;
    static std::deque<NSymPoly> lambda_table, s_table;
    auto& table = target == NSymBasis::Lambda ? lambda_table : s_table;
    std::lock_guard lock(mutex);
    while (static_cast<int>(table.size()) <= n) {
        NSymPoly entry(target);
        for (const auto& j : compositions_of(static_cast<int>(table.size()))) entry.add(j, sign(j));
        table.push_back(std::move(entry));
    }
    return table[n];
}

// Lambda^n in the Psi basis, from Psi^n = sum_{J |= n} eps^J j_1 Lambda^J.
const NSymPoly& lambda_single_in_psi(int n) {
    static std::mutex mutex;
    static std::deque<NSymPoly> table;
    std::lock_guard lock(mutex);
    while (static_cast<int>(table.size()) <= n) {
        const int k = static_cast<int>(table.size());
        if (k == 0) {
            table.emplace_back(NSymBasis::Psi, Composition(), 1);
            continue;
        }
        NSymPoly entry(NSymBasis::Psi, Composition{k}, 1);
        for (const auto& j : compositions_of(k)) {
            if (j.length() == 1) continue;
            NSymPoly lower(NSymBasis::Psi, Composition(), 1);
            for (int part : j) lower = nsym_mul(lower, table[part]);
            entry.add_scaled(lower, -sign(j) * j.first());
        }
        table.push_back(Rational(sign(Composition{k}), k) * entry);
    }
    return table[n];
}

}  // namespace

NSymPoly psi_to_lambda(const NSymPoly& f) {
    require_basis(f, NSymBasis::Psi, "psi_to_lambda");
    static KeyMemo memo([](const Composition& i) {
        NSymPoly out(NSymBasis::Lambda);
        for (const auto& j : refinements(i)) out.add(j, sign(j) * fp(j, i));
        return out;
    });
    return apply_linear(f, NSymBasis::Lambda, memo);
}

NSymPoly lambda_to_psi(const NSymPoly& f) {
    require_basis(f, NSymBasis::Lambda, "lambda_to_psi");
    static KeyMemo memo([](const Composition& i) {
        return product_of_parts(i, NSymBasis::Psi, [](int k) -> const NSymPoly& { return lambda_single_in_psi(k); });
    });
    return apply_linear(f, NSymBasis::Psi, memo);
}

NSymPoly lambda_to_ribbon(const NSymPoly& f) {
    require_basis(f, NSymBasis::Lambda, "lambda_to_ribbon");
    static KeyMemo memo([](const Composition& i) {
        NSymPoly out(NSymBasis::R);
        if (i.empty()) {
            out.add(i, 1);
            return out;
        }
        for (const auto& j : refinements(conjugate(reversal(i)))) out.add(j, 1);
        return out;
    });
    return apply_linear(f, NSymBasis::R, memo);
}

NSymPoly psi_to_ribbon(const NSymPoly& f) {
    require_basis(f, NSymBasis::Psi, "psi_to_ribbon");
    static KeyMemo memo([](const Composition& i) {
        NSymPoly out(NSymBasis::R);
        if (i.empty()) {
            out.add(i, 1);
            return out;
        }
        for (const auto& j : hooks_of(i)) {
            int s = sign(i);
            for (const auto& block : nabla_decompose(j, i).blocks) s *= sign(block);
            out.add(j, s);
        }
        return out;
    });
    return apply_linear(f, NSymBasis::R, memo);
}

NSymPoly ribbon_to_complete(const NSymPoly& f) {
    require_basis(f, NSymBasis::R, "ribbon_to_complete");
    static KeyMemo memo([](const Composition& i) {
        NSymPoly out(NSymBasis::S);
        for (const auto& j : coarsenings(i)) out.add(j, (i.length() - j.length()) % 2 ? -1 : 1);
        return out;
    });
    return apply_linear(f, NSymBasis::S, memo);
}

NSymPoly complete_to_lambda(const NSymPoly& f) {
    require_basis(f, NSymBasis::S, "complete_to_lambda");
    static KeyMemo memo([](const Composition& i) {
        return product_of_parts(i, NSymBasis::Lambda, [](int k) -> const NSymPoly& {
            return signed_sum_of_compositions(NSymBasis::Lambda, k);
        });
    });
    return apply_linear(f, NSymBasis::Lambda, memo);
}

NSymPoly lambda_to_complete(const NSymPoly& f) {
    require_basis(f, NSymBasis::Lambda, "lambda_to_complete");
    static KeyMemo memo([](const Composition& i) {
        return product_of_parts(i, NSymBasis::S, [](int k) -> const NSymPoly& {
            return signed_sum_of_compositions(NSymBasis::S, k);
        });
    });
    return apply_linear(f, NSymBasis::S, memo);
}

NSymPoly convert(const NSymPoly& f, NSymBasis target) {
    if (f.basis() == target) return f;
    if (f.basis() == NSymBasis::Psi && target == NSymBasis::R) return psi_to_ribbon(f);
    if (f.basis() == NSymBasis::R && target == NSymBasis::S) return ribbon_to_complete(f);

    NSymPoly lambda(NSymBasis::Lambda);
    switch (f.basis()) {
        case NSymBasis::Lambda: lambda = f; break;
        case NSymBasis::Psi: lambda = psi_to_lambda(f); break;
        case NSymBasis::S: lambda = complete_to_lambda(f); break;
        case NSymBasis::R: lambda = complete_to_lambda(ribbon_to_complete(f)); break;
    }
    switch (target) {
        case NSymBasis::Lambda: return lambda;
        case NSymBasis::Psi: return lambda_to_psi(lambda);
        case NSymBasis::S: return lambda_to_complete(lambda);
        case NSymBasis::R: return lambda_to_ribbon(lambda);
    }
    return lambda;
}

SymPoly project(const NSymPoly& f) {
    if (f.basis() == NSymBasis::R) return project(ribbon_to_complete(f));
    SymBasis target = f.basis() == NSymBasis::Lambda ? SymBasis::e
                      : f.basis() == NSymBasis::S    ? SymBasis::h
                                                     : SymBasis::p;
    SymPoly out(target);
    for (const auto& [key, c] : f.terms()) out.add(rho(key), c);
    return out;
}

SymPoly project_to_e(const NSymPoly& f) { return to_e(project(f)); }

NSymPositivity is_positive(const NSymPoly& f) { return check_nonnegative(f); }

}  // namespace csf
