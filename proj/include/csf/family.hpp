#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "csf/graph.hpp"

namespace csf {

/// A named graph family with integer parameters, written "name:p1,p2,...".
///
///   path:n            complete:n          cycle:m (m >= 2)
///   tadpole:m,l       ltadpole:m,l        lariat:n
///   lollipop:a,n      K(a 1^{n-a})
///   barbell:a,b,c     K(a 1^b c), c may be 0
///   dumbbell:a,b      K(a 1 b)
///   kab:a,b           K(a b), 0 <= b <= a
///   hat:a,m,b         gbull:a,n = K(1^a 2 1^{n-a-2})
///   spider:a,b,c      kchain:i1,i2,...   (graph only)
struct FamilySpec {
    std::string family;
    std::vector<int> params;

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws std::invalid_argument naming the violated bound.
void validate(const FamilySpec& spec);

/// Number of vertices of the family member.
int vertex_count(const FamilySpec& spec);

/// True for families that have a closed-form expansion.
bool has_closed_form(const std::string& family);

/// Family names with closed forms, in sweep order.
const std::vector<std::string>& closed_form_families();

Graph build(const FamilySpec& spec);

/// Every admissible parameter tuple of `family` with at most max_vertices
/// vertices, ordered by vertex count and then parameters.
std::vector<FamilySpec> admissible_specs(const std::string& family, int max_vertices);

}  // namespace csf
