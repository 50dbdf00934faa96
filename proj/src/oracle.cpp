#include <cstdint>
#include <unordered_map>

#include "csf/graph.hpp"

namespace csf {

namespace {

// Multiset of component orders encoded in mixed radix: digit k counts the
// components of order k and ranges over 0..n/k.
class OrderHistogram {
public:
    explicit OrderHistogram(int n) : weight_(n + 2, 0), radix_(n + 2, 1) {
        unsigned __int128 w = 1;
        for (int k = 1; k <= n; ++k) {
            weight_[k] = static_cast<std::uint64_t>(w);
            radix_[k] = n / k + 1;
            w *= radix_[k];
            if (w > (static_cast<unsigned __int128>(1) << 63)) throw ResourceError("too many vertices for oracle key");
        }
    }

    std::uint64_t weight(int k) const { return weight_[k]; }

    Partition decode(std::uint64_t key) const {
        std::vector<int> parts;
        for (int k = static_cast<int>(weight_.size()) - 2; k >= 1; --k) {
            auto count = (key / weight_[k]) % radix_[k];
            parts.insert(parts.end(), count, k);
        }
        return Partition(std::move(parts));
    }

private:
    std::vector<std::uint64_t> weight_;
    std::vector<std::uint64_t> radix_;
};

class SubsetWalker {
public:
    SubsetWalker(int n, std::vector<Edge> edges, bool prune)
        : edges_(std::move(edges)), parent_(n), size_(n, 1), histogram_(n), prune_(prune) {
        for (int v = 0; v < n; ++v) parent_[v] = v;
        key_ = static_cast<std::uint64_t>(n) * histogram_.weight(1);
    }

    std::unordered_map<std::uint64_t, std::int64_t> run() {
        counts_.reserve(1024);
        walk(0, 1);
        return std::move(counts_);
    }

    const OrderHistogram& histogram() const { return histogram_; }

private:
    int find(int v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    void walk(std::size_t k, int sign) {
        if (k == edges_.size()) {
            counts_[key_] += sign;
            return;
        }
        int u = find(edges_[k].first);
        int v = find(edges_[k].second);
        if (u == v) {
            // Including the edge leaves the components unchanged, so the two
            // branches cancel exactly.
            if (prune_) return;
            walk(k + 1, sign);
            walk(k + 1, -sign);
            return;
        }
        walk(k + 1, sign);
        if (size_[u] < size_[v]) std::swap(u, v);
        const std::uint64_t before = key_;
        key_ -= histogram_.weight(size_[u]) + histogram_.weight(size_[v]);
        key_ += histogram_.weight(size_[u] + size_[v]);
        parent_[v] = u;
        size_[u] += size_[v];
        walk(k + 1, -sign);
        size_[u] -= size_[v];
        parent_[v] = v;
        key_ = before;
    }

    std::vector<Edge> edges_;
    std::vector<int> parent_;
    std::vector<int> size_;
    OrderHistogram histogram_;
    bool prune_;
    std::uint64_t key_ = 0;
    std::unordered_map<std::uint64_t, std::int64_t> counts_;
};

}  // namespace

SymPoly csf_oracle(const Graph& g, const OracleOptions& options) {
    if (g.edge_count() > options.edge_cap)
        throw ResourceError("oracle edge cap exceeded: " + std::to_string(g.edge_count()) + " edges > cap " +
                            std::to_string(options.edge_cap));

    // Isolated vertices always contribute a part 1; the walk only sees the rest.
    std::vector<int> index(g.order(), -1);
    int active = 0;
    for (auto [u, v] : g.edges())
        for (int x : {u, v})
            if (index[x] < 0) index[x] = active++;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(index[u], index[v]);
    const int isolated = g.order() - active;

    SubsetWalker walker(active, std::move(edges), options.prune_cycles);
    auto counts = walker.run();

    SymPoly out(SymBasis::p);
    for (const auto& [key, count] : counts) {
        if (count == 0) continue;
        std::vector<int> parts = walker.histogram().decode(key).vector();
        parts.insert(parts.end(), isolated, 1);
        out.add(Partition(std::move(parts)), Rational(static_cast<long>(count)));
    }
    return out;
}

}  // namespace csf
