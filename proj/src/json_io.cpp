#include "csf/json_io.hpp"

#include <stdexcept>

namespace csf {

namespace {

template <class E>
nlohmann::json terms_json(const E& f, const char* key_name) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, value] : f.terms())
        terms.push_back({{key_name, key.vector()},
                         {"num", value.get_num().get_str()},
                         {"den", value.get_den().get_str()}});
    return {{"basis", basis_name(f.basis())}, {"terms", terms}};
}

template <class E, class Key, class ParseBasis>
E terms_from_json(const nlohmann::json& j, const char* key_name, ParseBasis parse_basis) {
    try {
        E out(parse_basis(j.at("basis").get<std::string>()));
        for (const auto& term : j.at("terms")) {
            Rational c(mpz_class(term.at("num").get<std::string>()), mpz_class(term.at("den").get<std::string>()));
            c.canonicalize();
            out.add(Key(term.at(key_name).get<std::vector<int>>()), c);
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed expansion JSON: ") + e.what());
    }
}

}  // namespace

nlohmann::json to_json(const SymPoly& f) { return terms_json(f, "partition"); }

nlohmann::json to_json(const NSymPoly& f) { return terms_json(f, "composition"); }

nlohmann::json to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", edges}};
}

SymPoly sym_from_json(const nlohmann::json& j) {
    return terms_from_json<SymPoly, Partition>(j, "partition", parse_sym_basis);
}

NSymPoly nsym_from_json(const nlohmann::json& j) {
    return terms_from_json<NSymPoly, Composition>(j, "composition", parse_nsym_basis);
}

Graph graph_from_json(const nlohmann::json& j) {
    try {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument("each edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Graph(j.at("n").get<int>(), edges);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
    }
}

}  // namespace csf
