#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csf {

/// A finite sequence of positive integers. The empty sequence is the unique
/// composition of 0.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);

    /// Parses the comma form "2,3,1,3"; the empty string is the empty composition.
    static Composition parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vector() const { return parts_; }

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i_k for k = 1..length (one-based, as the formulas read).
    int part(int k) const;
    /// i_{-k}: the k-th last part.
    int part_from_end(int k) const;
    int first() const { return part(1); }
    int last() const { return part_from_end(1); }

    /// Number of parts equal to k.
    int multiplicity(int k) const;

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    /// Partial sums 0, i_1, i_1 + i_2, ..., |I|.
    std::vector<int> prefix_sums() const;

    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Sorts the given parts descending.
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vector() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Term order used for display and map keys: shorter keys first, then
/// lexicographically descending (e_5, e_41, e_32, e_221, ...).
struct DisplayOrder {
    bool operator()(std::span<const int> a, std::span<const int> b) const;
    bool operator()(const Composition& a, const Composition& b) const {
        return (*this)(a.parts(), b.parts());
    }
    bool operator()(const Partition& a, const Partition& b) const {
        return (*this)(a.parts(), b.parts());
    }
};

/// All compositions of n. Gaps 1..n-1 are read as a binary word (gap 1 most
/// significant, bit set = cut) and enumerated in increasing numeric order,
/// so compositions_of(3) = {3, 21, 12, 111}.
std::vector<Composition> compositions_of(int n);

Composition concat(const Composition& a, const Composition& b);
/// I |> J: the last part of I and the first part of J are added.
Composition near_concat(const Composition& a, const Composition& b);
Composition reversal(const Composition& c);
Partition rho(const Composition& c);

/// Ribbon conjugate: column lengths of the ribbon read right to left.
Composition conjugate(const Composition& c);

/// Composition of n whose partial sums (excluding 0 and n) are `cuts`.
Composition from_cuts(int n, std::span<const int> cuts);
/// Partial sums strictly between 0 and |I|.
std::vector<int> cut_set(const Composition& c);

/// True iff J is a refinement of I (I <= J in the reverse refinement order).
bool is_refinement(const Composition& fine, const Composition& coarse);
/// Every J with I <= J, in the order given by compositions_of on each part.
std::vector<Composition> refinements(const Composition& c);
/// Every J with J <= I (obtained by merging adjacent parts of I).
std::vector<Composition> coarsenings(const Composition& c);

/// Product of the first parts of the blocks of J relative to I.
std::int64_t fp(const Composition& fine, const Composition& coarse);
/// Product of the last parts of the blocks of J relative to I.
std::int64_t lp(const Composition& fine, const Composition& coarse);

/// (-1)^{|I| - l(I)}.
int sign(const Composition& c);

enum class Joint { concat, near_concat };

/// Decomposition of a ribbon J relative to I: blocks of sizes i_1, i_2, ...
/// joined by concatenation or near concatenation.
struct RibbonDecomposition {
    std::vector<Composition> blocks;
    std::vector<Joint> joints;
    Composition reassemble() const;
};

RibbonDecomposition nabla_decompose(const Composition& ribbon, const Composition& reference);

/// True for ribbons 1^s t (s >= 0, t >= 1).
bool is_hook(const Composition& c);
/// Hooks of the one-part composition n: n, 1(n-1), ..., 1^{n-2}2, 1^n.
std::vector<Composition> hooks_of_size(int n);
/// Ribbons J whose decomposition relative to I has only hook blocks, sorted.
std::vector<Composition> hooks_of(const Composition& c);

/// w_I = i_1 * prod_{j >= 2} (i_j - 1). Rejects the empty composition.
std::int64_t stat_w(const Composition& c);

/// Smallest partial sum >= a; requires a <= |I|.
int sigma_plus(const Composition& c, int a);
int theta_plus(const Composition& c, int a);
/// Largest partial sum <= a; requires a >= 0.
int sigma_minus(const Composition& c, int a);
int theta_minus(const Composition& c, int a);

struct PartialSums {
    int sigma_plus;
    int theta_plus;
    int sigma_minus;
    int theta_minus;
};

/// All four partial-sum statistics at a, for 0 <= a <= |I|.
PartialSums partial_sums(const Composition& c, int a);

/// Splits K = K1 K2 with |K1| = sigma_plus(K, b + 1). Requires |K| >= b + 1.
std::pair<Composition, Composition> bisect(const Composition& c, int b);

}  // namespace csf
