#pragma once

#include <string>
#include <vector>

#include "csf/graph.hpp"

namespace csf {

struct CheckLine {
    std::string label;
    bool pass = false;
    std::string detail;  // empty on success
};

struct VerifyOptions {
    int max_size = 8;
    /// The pruned walk visits only cycle-free edge sets, so sweeps can afford
    /// a much higher cap than the default.
    OracleOptions oracle{.edge_cap = 40};
    unsigned seed = 20231;
    int random_graphs = 60;
};

/// Names accepted by run_verification: every closed-form family plus
/// cycle-ribbon, cycle-psi, path-cycle, convolution, triple-deletion,
/// hat-recurrence and transitions.
const std::vector<std::string>& verification_names();

/// Runs a named sweep; one line per instance.
std::vector<CheckLine> run_verification(const std::string& name, const VerifyOptions& options);

/// Closed form of a family member projected to e against the oracle.
CheckLine check_family_instance(const std::string& spec_text, const OracleOptions& oracle);

}  // namespace csf
