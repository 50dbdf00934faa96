#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "csf/composition.hpp"
#include "csf/rational.hpp"

namespace csf {

/// A finite linear combination of basis elements indexed by Key, tagged with
/// the basis it is expressed in. Zero coefficients are never stored.
template <class Key, class Basis>
class Expansion {
public:
    using key_type = Key;
    using basis_type = Basis;
    using Terms = std::map<Key, Rational, DisplayOrder>;

    Expansion() = default;
    explicit Expansion(Basis basis) : basis_(basis) {}
    Expansion(Basis basis, const Key& key, const Rational& coefficient = 1) : basis_(basis) {
        add(key, coefficient);
    }

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Key& key, const Rational& coefficient) {
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Adds c * other; bases must match.
    void add_scaled(const Expansion& other, const Rational& c) {
        require_same_basis(other);
        for (const auto& [key, value] : other.terms_) add(key, c * value);
    }

    /// The common size of all keys; throws if the element is not homogeneous.
    /// The zero element has degree 0.
    int degree() const {
        if (terms_.empty()) return 0;
        int d = terms_.begin()->first.size();
        for (const auto& [key, value] : terms_)
            if (key.size() != d) throw std::domain_error("expansion is not homogeneous");
        return d;
    }

    void require_same_basis(const Expansion& other) const {
        if (basis_ != other.basis_)
            throw std::invalid_argument(std::string("basis mismatch: ") + basis_name(basis_) + " vs " +
                                        basis_name(other.basis_));
    }

    friend bool operator==(const Expansion& a, const Expansion& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

    friend Expansion operator+(Expansion a, const Expansion& b) {
        a.add_scaled(b, 1);
        return a;
    }
    friend Expansion operator-(Expansion a, const Expansion& b) {
        a.add_scaled(b, -1);
        return a;
    }
    friend Expansion operator*(const Rational& c, const Expansion& a) {
        Expansion out(a.basis_);
        if (c != 0)
            for (const auto& [key, value] : a.terms_) out.terms_.emplace(key, c * value);
        return out;
    }

private:
    Basis basis_{};
    Terms terms_;
};

template <class E>
struct PositivityReport {
    bool positive = true;
    std::optional<typename E::key_type> witness;
    Rational coefficient;
};

/// Checks that every stored coefficient is nonnegative; reports the first
/// offending term in display order otherwise.
template <class E>
PositivityReport<E> check_nonnegative(const E& f) {
    PositivityReport<E> report;
    for (const auto& [key, value] : f.terms())
        if (value < 0) {
            report.positive = false;
            report.witness = key;
            report.coefficient = value;
            break;
        }
    return report;
}

template <class E>
bool has_integer_coefficients(const E& f) {
    for (const auto& [key, value] : f.terms())
        if (!is_integer(value)) return false;
    return true;
}

/// "15*e[5] + 9*e[4,1] - 2*e[2,2]"; the zero element prints as "0".
template <class E>
std::string to_text(const E& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, value] : f.terms()) {
        if (first)
            out += value < 0 ? "-" : "";
        else
            out += value < 0 ? " - " : " + ";
        first = false;
        out += to_string(Rational(abs(value)));
        out += '*';
        out += basis_name(f.basis());
        out += '[' + key.to_string() + ']';
    }
    return out;
}

}  // namespace csf
