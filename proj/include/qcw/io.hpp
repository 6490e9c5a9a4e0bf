#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qcw/construction.hpp"
#include "qcw/graph.hpp"
#include "qcw/majorana.hpp"
#include "qcw/optimization.hpp"
#include "qcw/precision.hpp"
#include "qcw/verification.hpp"

namespace qcw {

using json = nlohmann::json;

/// Malformed or inconsistent input document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Amplitudes are [re, im] pairs. Doubles are written in shortest round-trip
// form, so reading a document back reproduces every value bit for bit.
json amplitudes_to_json(const ComplexVector& v);
ComplexVector amplitudes_from_json(const json& j);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json family_to_json(const Family& fam);
Family family_from_json(const json& j);

json report_to_json(const VerificationReport& r);
json classical_to_json(const ClassicalAnalysis& c);
json optimum_to_json(const EigenOptimum<double>& opt);

json constellation_to_json(const Constellation& c);
Constellation constellation_from_json(const json& j);

json onc_to_json(const OncThreshold& t);
json simulation_to_json(const SimulationResult& r);

/// CSV header of the sweep subcommand.
inline constexpr const char* kSweepCsvHeader = "n,eta,seed,shots,empirical_beta,epsilon_estimate,epsilon_bound";

std::string read_text_file(const std::filesystem::path& path);
/// Writes through a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace qcw
