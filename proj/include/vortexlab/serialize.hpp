#pragma once

// JSON schemas for field snapshots, solver configs/reports and the CLI
// subcommand payloads. Field snapshots follow the documented layout:
// row-major arrays with site (ix,iy) at index ix*n+iy.

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "vortexlab/lattice.hpp"
#include "vortexlab/solver.hpp"

namespace vortexlab {

nlohmann::json fields_to_json(const TorusLattice& L, const LinkField& A, const HiggsField& phi);

struct FieldSnapshot {
    TorusLattice lattice;
    LinkField link;
    HiggsField higgs;
};
FieldSnapshot fields_from_json(const nlohmann::json& j);

SolverConfig solver_config_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const SolveReport& rep);

// One result object per subcommand; throws std::invalid_argument /
// std::domain_error on malformed or domain-violating input.
nlohmann::json run_index(const nlohmann::json& in);
nlohmann::json run_weights(const nlohmann::json& in);
nlohmann::json run_stability(const nlohmann::json& in);
nlohmann::json run_example_s2(const nlohmann::json& in);
nlohmann::json run_solve(const nlohmann::json& in, std::string* csv_trace = nullptr);

// FNV-1a content hash of the canonical (compact) serialization.
std::string config_hash(const nlohmann::json& j);

// Manifest attached to every CLI result: identical manifest implies
// byte-identical numerical outputs.
nlohmann::json make_manifest(const std::string& subcommand, const nlohmann::json& input,
                             std::uint64_t seed, const std::vector<std::string>& outputs);

const char* tool_version();

}  // namespace vortexlab
