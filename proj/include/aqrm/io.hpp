#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "aqrm/potential.hpp"
#include "aqrm/results.hpp"
#include "aqrm/spectral.hpp"
#include "json.hpp"

namespace aqrm {

/// Version tag written into every JSON document.
inline constexpr int kSchemaVersion = 1;

/// Locale-independent decimal with 17 significant digits (trailing zeros dropped).
std::string format_number(double value);

// Field-for-field JSON mappings (found by nlohmann via ADL).
void to_json(nlohmann::json& j, const SpectrumResult& r);
void from_json(const nlohmann::json& j, SpectrumResult& r);
void to_json(nlohmann::json& j, const WavefunctionGrid& w);
void from_json(const nlohmann::json& j, WavefunctionGrid& w);
void to_json(nlohmann::json& j, const TaylorCoefficients& c);
void from_json(const nlohmann::json& j, TaylorCoefficients& c);
void to_json(nlohmann::json& j, const StationaryPoint& p);
void from_json(const nlohmann::json& j, StationaryPoint& p);
void to_json(nlohmann::json& j, const WellReport& w);
void from_json(const nlohmann::json& j, WellReport& w);
void to_json(nlohmann::json& j, const PotentialProfile& p);
void from_json(const nlohmann::json& j, PotentialProfile& p);
void to_json(nlohmann::json& j, const ScanTable& t);
void from_json(const nlohmann::json& j, ScanTable& t);
void to_json(nlohmann::json& j, const DegeneracyReport& r);
void from_json(const nlohmann::json& j, DegeneracyReport& r);

/// Top-level document: {"schema_version": 1, "type": <type>, "data": <payload>}.
nlohmann::json make_document(const std::string& type, nlohmann::json payload);
/// Returns the payload after checking the version and type tags.
const nlohmann::json& document_payload(const nlohmann::json& doc, const std::string& type);

// CSV emitters. '\n' line endings, '.' decimal point, 17 significant digits.

/// method,branch,basis,converged,convergence_delta,level,energy
std::string spectrum_csv(const std::vector<SpectrumResult>& results);
/// axis,level_0,…,level_{k−1},method,basis; tables concatenated in order.
std::string scan_csv(const std::vector<ScanTable>& tables);
/// xi,up,down
std::string wavefunction_csv(const WavefunctionGrid& wf);
/// xi,v_eff
std::string potential_csv(const PotentialProfile& profile);
/// eta,g,g_over_gc,threshold,onset_level,predicted_onset,gap_0,… ("none" when absent)
std::string degeneracy_csv(const std::vector<DegeneracyReport>& reports);

/// Parses `key = value` lines; '#' starts a comment. Throws InvalidInputError
/// on malformed lines or duplicate keys.
std::map<std::string, std::string> parse_config(std::istream& in);

}  // namespace aqrm

// ModelParams has no default state, so it gets a non-default-constructible serializer.
template <>
struct nlohmann::adl_serializer<aqrm::ModelParams> {
    static aqrm::ModelParams from_json(const json& j) {
        return {j.at("delta").get<double>(), j.at("g").get<double>(), j.at("eta").get<double>()};
    }
    static void to_json(json& j, const aqrm::ModelParams& p) {
        j = json{{"delta", p.delta()}, {"g", p.g()}, {"eta", p.eta()}};
    }
};
