#include "csf/composition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <stdexcept>

namespace csf {

namespace {

int checked_sum(const std::vector<int>& parts) {
    int total = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive, got " + std::to_string(p));
        total += p;
    }
    return total;
}

std::string join(std::span<const int> parts) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(parts[k]);
    }
    return out;
}

void require_nonempty(const Composition& c, const char* what) {
    if (c.empty()) throw std::invalid_argument(std::string(what) + ": empty composition");
}

}  // namespace

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)), size_(checked_sum(parts_)) {}

Composition Composition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Composition();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto piece = text.substr(pos, comma - pos);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
            throw std::invalid_argument("bad composition text: '" + std::string(text) + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

int Composition::part(int k) const {
    if (k < 1 || k > length()) throw std::out_of_range("composition part index " + std::to_string(k));
    return parts_[k - 1];
}

int Composition::part_from_end(int k) const {
    if (k < 1 || k > length()) throw std::out_of_range("composition part index -" + std::to_string(k));
    return parts_[parts_.size() - k];
}

int Composition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::vector<int> Composition::prefix_sums() const {
    std::vector<int> sums{0};
    for (int p : parts_) sums.push_back(sums.back() + p);
    return sums;
}

std::string Composition::to_string() const { return join(parts_); }

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    size_ = checked_sum(parts_);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Partition::to_string() const { return join(parts_); }

bool DisplayOrder::operator()(std::span<const int> a, std::span<const int> b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: negative size");
    if (n == 0) return {Composition()};
    std::vector<Composition> out;
    const unsigned long gaps = static_cast<unsigned long>(n - 1);
    out.reserve(1ul << gaps);
    for (unsigned long mask = 0; mask < (1ul << gaps); ++mask) {
        std::vector<int> parts;
        int run = 0;
        for (int g = 1; g < n; ++g) {
            ++run;
            if (mask >> (n - 1 - g) & 1ul) {
                parts.push_back(run);
                run = 0;
            }
        }
        parts.push_back(run + 1);
        out.emplace_back(std::move(parts));
    }
    return out;
}

Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.vector();
    parts.insert(parts.end(), b.begin(), b.end());
    return Composition(std::move(parts));
}

Composition near_concat(const Composition& a, const Composition& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<int> parts = a.vector();
    parts.back() += b.first();
    parts.insert(parts.end(), b.begin() + 1, b.end());
    return Composition(std::move(parts));
}

Composition reversal(const Composition& c) {
    return Composition(std::vector<int>(c.vector().rbegin(), c.vector().rend()));
}

Partition rho(const Composition& c) { return Partition(c.vector()); }

std::vector<int> cut_set(const Composition& c) {
    auto sums = c.prefix_sums();
    if (sums.size() <= 2) return {};
    return std::vector<int>(sums.begin() + 1, sums.end() - 1);
}

Composition from_cuts(int n, std::span<const int> cuts) {
    std::vector<int> parts;
    int prev = 0;
    for (int x : cuts) {
        if (x <= prev || x >= n) throw std::invalid_argument("from_cuts: cuts must increase strictly inside (0, n)");
        parts.push_back(x - prev);
        prev = x;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Composition conjugate(const Composition& c) {
    require_nonempty(c, "conjugate");
    const int n = c.size();
    std::vector<bool> is_cut(n, false);
    for (int x : cut_set(c)) is_cut[x] = true;
    std::vector<int> cuts;
    for (int x = n - 1; x >= 1; --x)
        if (!is_cut[x]) cuts.push_back(n - x);
    return from_cuts(n, cuts);
}

bool is_refinement(const Composition& fine, const Composition& coarse) {
    if (fine.size() != coarse.size()) return false;
    auto fs = fine.prefix_sums();
    for (int x : coarse.prefix_sums())
        if (!std::binary_search(fs.begin(), fs.end(), x)) return false;
    return true;
}

std::vector<Composition> refinements(const Composition& c) {
    std::vector<Composition> out{Composition()};
    for (int p : c) {
        std::vector<Composition> next;
        auto pieces = compositions_of(p);
        next.reserve(out.size() * pieces.size());
        for (const auto& prefix : out)
            for (const auto& piece : pieces) next.push_back(concat(prefix, piece));
        out = std::move(next);
    }
    return out;
}

std::vector<Composition> coarsenings(const Composition& c) {
    if (c.empty()) return {c};
    const int gaps = c.length() - 1;
    std::vector<Composition> out;
    for (unsigned long mask = 0; mask < (1ul << gaps); ++mask) {
        std::vector<int> parts{c.first()};
        for (int g = 1; g <= gaps; ++g) {
            if (mask >> (gaps - g) & 1ul)
                parts.push_back(c.part(g + 1));
            else
                parts.back() += c.part(g + 1);
        }
        out.emplace_back(std::move(parts));
    }
    return out;
}

namespace {

// Splits `fine` into consecutive blocks with sizes given by `coarse`.
std::vector<std::vector<int>> blocks_of(const Composition& fine, const Composition& coarse) {
    if (!is_refinement(fine, coarse))
        throw std::invalid_argument(fine.to_string() + " is not a refinement of " + coarse.to_string());
    std::vector<std::vector<int>> blocks;
    auto it = fine.begin();
    for (int target : coarse) {
        std::vector<int> block;
        int acc = 0;
        while (acc < target) {
            acc += *it;
            block.push_back(*it++);
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace

std::int64_t fp(const Composition& fine, const Composition& coarse) {
    std::int64_t product = 1;
    for (const auto& block : blocks_of(fine, coarse)) product *= block.front();
    return product;
}

std::int64_t lp(const Composition& fine, const Composition& coarse) {
    std::int64_t product = 1;
    for (const auto& block : blocks_of(fine, coarse)) product *= block.back();
    return product;
}

int sign(const Composition& c) { return (c.size() - c.length()) % 2 == 0 ? 1 : -1; }

Composition RibbonDecomposition::reassemble() const {
    if (blocks.empty()) return Composition();
    Composition out = blocks.front();
    for (std::size_t k = 1; k < blocks.size(); ++k)
        out = joints[k - 1] == Joint::concat ? concat(out, blocks[k]) : near_concat(out, blocks[k]);
    return out;
}

RibbonDecomposition nabla_decompose(const Composition& ribbon, const Composition& reference) {
    require_nonempty(ribbon, "nabla_decompose");
    require_nonempty(reference, "nabla_decompose");
    if (ribbon.size() != reference.size())
        throw std::invalid_argument("nabla_decompose: sizes differ (" + std::to_string(ribbon.size()) + " vs " +
                                    std::to_string(reference.size()) + ")");
    RibbonDecomposition out;
    std::size_t idx = 0;
    int left_in_part = ribbon.first();
    for (int target : reference) {
        std::vector<int> block;
        int need = target;
        while (need > 0) {
            int take = std::min(need, left_in_part);
            block.push_back(take);
            need -= take;
            left_in_part -= take;
            if (left_in_part == 0 && ++idx < ribbon.vector().size()) {
                left_in_part = ribbon.vector()[idx];
                if (need == 0) out.joints.push_back(Joint::concat);
            } else if (need == 0 && idx < ribbon.vector().size()) {
                out.joints.push_back(Joint::near_concat);
            }
        }
        out.blocks.emplace_back(std::move(block));
    }
    return out;
}

bool is_hook(const Composition& c) {
    if (c.empty()) return false;
    for (int k = 1; k < c.length(); ++k)
        if (c.part(k) != 1) return false;
    return true;
}

std::vector<Composition> hooks_of_size(int n) {
    if (n < 1) throw std::invalid_argument("hooks_of_size: n must be positive");
    std::vector<Composition> out;
    for (int s = 0; s < n; ++s) {
        std::vector<int> parts(s, 1);
        parts.push_back(n - s);
        out.emplace_back(std::move(parts));
    }
    return out;
}

std::vector<Composition> hooks_of(const Composition& c) {
    require_nonempty(c, "hooks_of");
    std::vector<Composition> partial = hooks_of_size(c.first());
    for (int k = 2; k <= c.length(); ++k) {
        std::vector<Composition> next;
        for (const auto& prefix : partial)
            for (const auto& hook : hooks_of_size(c.part(k))) {
                next.push_back(concat(prefix, hook));
                next.push_back(near_concat(prefix, hook));
            }
        partial = std::move(next);
    }
    std::set<Composition> unique(partial.begin(), partial.end());
    return {unique.begin(), unique.end()};
}

std::int64_t stat_w(const Composition& c) {
    require_nonempty(c, "stat_w");
    std::int64_t w = c.first();
    for (int k = 2; k <= c.length(); ++k) w *= c.part(k) - 1;
    return w;
}

namespace {

void check_range(const Composition& c, int a, bool upper) {
    if (a < 0 || (upper && a > c.size()))
        throw std::out_of_range("partial sum argument " + std::to_string(a) + " outside [0, " +
                                std::to_string(c.size()) + "] for " + c.to_string());
}

}  // namespace

int sigma_plus(const Composition& c, int a) {
    check_range(c, a, true);
    for (int s : c.prefix_sums())
        if (s >= a) return s;
    return c.size();
}

int theta_plus(const Composition& c, int a) { return sigma_plus(c, a) - a; }

int sigma_minus(const Composition& c, int a) {
    check_range(c, a, false);
    int best = 0;
    for (int s : c.prefix_sums())
        if (s <= a) best = s;
    return best;
}

int theta_minus(const Composition& c, int a) { return a - sigma_minus(c, a); }

PartialSums partial_sums(const Composition& c, int a) {
    PartialSums r{};
    r.sigma_plus = sigma_plus(c, a);
    r.theta_plus = r.sigma_plus - a;
    r.sigma_minus = sigma_minus(c, a);
    r.theta_minus = a - r.sigma_minus;
    return r;
}

std::pair<Composition, Composition> bisect(const Composition& c, int b) {
    if (b < 0 || c.size() < b + 1)
        throw std::invalid_argument("bisect: need |K| >= b + 1, got |K| = " + std::to_string(c.size()) +
                                    ", b = " + std::to_string(b));
    const int head = sigma_plus(c, b + 1);
    std::vector<int> first, second;
    int acc = 0;
    for (int p : c) {
        (acc < head ? first : second).push_back(p);
        acc += p;
    }
    return {Composition(std::move(first)), Composition(std::move(second))};
}

}  // namespace csf
