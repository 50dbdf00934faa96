#include "csf/family.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace csf {

namespace {

using Params = std::vector<int>;

struct FamilyInfo {
    int arity;  // -1 for variable length
    std::function<void(const Params&)> check;
    std::function<int(const Params&)> order;
    std::function<Graph(const Params&)> make;
};

void bound(bool ok, const std::string& family, const std::string& what) {
    if (!ok) throw std::invalid_argument(family + ": parameter bound violated: " + what);
}

Graph chain(std::vector<int> parts) {
    std::erase(parts, 0);
    return kchain_graph(Composition(std::move(parts)));
}

std::vector<int> ones(int k) { return std::vector<int>(std::max(k, 0), 1); }

std::vector<int> cat(std::initializer_list<std::vector<int>> pieces) {
    std::vector<int> out;
    for (const auto& p : pieces) out.insert(out.end(), p.begin(), p.end());
    return out;
}

const std::map<std::string, FamilyInfo>& registry() {
    static const std::map<std::string, FamilyInfo> table = [] {
        std::map<std::string, FamilyInfo> t;
        t["path"] = {1, [](const Params& p) { bound(p[0] >= 1, "path", "n >= 1"); },
                     [](const Params& p) { return p[0]; }, [](const Params& p) { return path_graph(p[0]); }};
        t["complete"] = {1, [](const Params& p) { bound(p[0] >= 1, "complete", "n >= 1"); },
                         [](const Params& p) { return p[0]; }, [](const Params& p) { return complete_graph(p[0]); }};
        t["cycle"] = {1, [](const Params& p) { bound(p[0] >= 2, "cycle", "m >= 2"); },
                      [](const Params& p) { return p[0]; }, [](const Params& p) { return cycle_graph(p[0]); }};
        t["tadpole"] = {2,
                        [](const Params& p) {
                            bound(p[0] >= 2, "tadpole", "m >= 2");
                            bound(p[1] >= 0, "tadpole", "l >= 0");
                        },
                        [](const Params& p) { return p[0] + p[1]; },
                        [](const Params& p) { return tadpole_graph(p[0], p[1]); }};
        t["ltadpole"] = {2,
                         [](const Params& p) {
                             bound(p[0] >= 2, "ltadpole", "m >= 2");
                             bound(p[1] >= 1, "ltadpole", "l >= 1");
                         },
                         [](const Params& p) { return p[0] + p[1]; },
                         [](const Params& p) {
                             // The doubled edge of T_{2,l} and its tail form a triangle with a path.
                             if (p[0] == 2) return tadpole_graph(3, p[1] - 1);
                             return line_graph(tadpole_graph(p[0], p[1]));
                         }};
        t["lariat"] = {1, [](const Params& p) { bound(p[0] >= 3, "lariat", "n >= 3"); },
                       [](const Params& p) { return p[0]; },
                       [](const Params& p) { return tadpole_graph(3, p[0] - 3); }};
        t["lollipop"] = {2,
                         [](const Params& p) {
                             bound(p[0] >= 1, "lollipop", "a >= 1");
                             bound(p[1] >= p[0], "lollipop", "n >= a");
                         },
                         [](const Params& p) { return p[1]; },
                         [](const Params& p) { return chain(cat({{p[0]}, ones(p[1] - p[0])})); }};
        t["barbell"] = {3,
                        [](const Params& p) {
                            bound(p[0] >= 1, "barbell", "a >= 1");
                            bound(p[1] >= 0 && p[2] >= 0, "barbell", "b, c >= 0");
                        },
                        [](const Params& p) { return p[0] + p[1] + p[2]; },
                        [](const Params& p) { return chain(cat({{p[0]}, ones(p[1]), {p[2]}})); }};
        t["dumbbell"] = {2,
                         [](const Params& p) {
                             bound(p[0] >= 1, "dumbbell", "a >= 1");
                             bound(p[1] >= 0 && p[1] <= p[0], "dumbbell", "0 <= b <= a");
                         },
                         [](const Params& p) { return p[0] + 1 + p[1]; },
                         [](const Params& p) { return chain({p[0], 1, p[1]}); }};
        t["kab"] = {2,
                    [](const Params& p) {
                        bound(p[0] >= 1, "kab", "a >= 1");
                        bound(p[1] >= 0 && p[1] <= p[0], "kab", "0 <= b <= a");
                    },
                    [](const Params& p) { return p[0] + p[1]; }, [](const Params& p) { return chain({p[0], p[1]}); }};
        t["hat"] = {3,
                    [](const Params& p) {
                        bound(p[1] >= 2, "hat", "m >= 2");
                        bound(p[0] >= 0 && p[2] >= 0, "hat", "a, b >= 0");
                    },
                    [](const Params& p) { return p[0] + p[1] + p[2]; },
                    [](const Params& p) { return hat_graph(p[0], p[1], p[2]); }};
        t["gbull"] = {2,
                      [](const Params& p) {
                          bound(p[0] >= 1, "gbull", "a >= 1");
                          bound(p[1] >= p[0] + 2, "gbull", "n >= a + 2");
                      },
                      [](const Params& p) { return p[1]; },
                      [](const Params& p) { return chain(cat({ones(p[0]), {2}, ones(p[1] - p[0] - 2)})); }};
        t["spider"] = {3,
                       [](const Params& p) {
                           bound(p[0] >= 0 && p[1] >= 0 && p[2] >= 0, "spider", "a, b, c >= 0");
                       },
                       [](const Params& p) { return p[0] + p[1] + p[2] + 1; },
                       [](const Params& p) { return spider_graph(p[0], p[1], p[2]); }};
        t["kchain"] = {-1,
                       [](const Params& p) {
                           bound(!p.empty(), "kchain", "at least one part");
                           for (int x : p) bound(x >= 1, "kchain", "parts >= 1");
                       },
                       [](const Params& p) {
                           int n = 0;
                           for (int x : p) n += x;
                           return n;
                       },
                       [](const Params& p) { return kchain_graph(Composition(p)); }};
        return t;
    }();
    return table;
}

const FamilyInfo& info(const std::string& family) {
    auto it = registry().find(family);
    if (it == registry().end()) throw std::invalid_argument("unknown family '" + family + "'");
    return it->second;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0)
        throw std::invalid_argument("family spec must look like name:p1,p2,... (got '" + std::string(text) + "')");
    FamilySpec spec;
    spec.family = std::string(text.substr(0, colon));
    // Parameters may be zero, which Composition rejects, so split by hand.
    std::string_view rest = text.substr(colon + 1);
    while (true) {
        auto comma = rest.find(',');
        std::string piece(rest.substr(0, comma));
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(piece, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (piece.empty() || used != piece.size())
            throw std::invalid_argument("bad parameter '" + piece + "' in family spec '" + std::string(text) + "'");
        spec.params.push_back(value);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    validate(spec);
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out = family + ':';
    for (std::size_t k = 0; k < params.size(); ++k) out += (k ? "," : "") + std::to_string(params[k]);
    return out;
}

void validate(const FamilySpec& spec) {
    const auto& fam = info(spec.family);
    if (fam.arity >= 0 && static_cast<int>(spec.params.size()) != fam.arity)
        throw std::invalid_argument(spec.family + ": expected " + std::to_string(fam.arity) + " parameter(s), got " +
                                    std::to_string(spec.params.size()));
    fam.check(spec.params);
}

int vertex_count(const FamilySpec& spec) {
    validate(spec);
    return info(spec.family).order(spec.params);
}

const std::vector<std::string>& closed_form_families() {
    static const std::vector<std::string> names{"path",     "cycle",    "complete", "tadpole", "ltadpole",
                                                "lariat",   "lollipop", "barbell",  "dumbbell", "kab",
                                                "hat",      "gbull",    "spider"};
    return names;
}

bool has_closed_form(const std::string& family) {
    const auto& names = closed_form_families();
    return std::find(names.begin(), names.end(), family) != names.end();
}

Graph build(const FamilySpec& spec) {
    validate(spec);
    return info(spec.family).make(spec.params).with_tag(spec.to_string());
}

std::vector<FamilySpec> admissible_specs(const std::string& family, int max_vertices) {
    const auto& fam = info(family);
    if (fam.arity < 0) throw std::invalid_argument(family + " has no finite parameter sweep");
    std::vector<std::pair<int, FamilySpec>> found;
    Params p(fam.arity, 0);
    while (true) {
        try {
            fam.check(p);
            int n = fam.order(p);
            if (n >= 1 && n <= max_vertices) found.push_back({n, FamilySpec{family, p}});
        } catch (const std::invalid_argument&) {
        }
        int k = fam.arity - 1;
        while (k >= 0 && p[k] == max_vertices) p[k--] = 0;
        if (k < 0) break;
        ++p[k];
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<FamilySpec> out;
    for (auto& [n, spec] : found) out.push_back(std::move(spec));
    return out;
}

}  // namespace csf
