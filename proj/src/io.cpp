#include "aqrm/io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "aqrm/error.hpp"

namespace aqrm {

using nlohmann::json;

namespace {

template <typename T>
json optional_to_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

std::string_view to_string(WellShape s) { return s == WellShape::DoubleWell ? "double_well" : "single_well"; }

WellShape parse_shape(const std::string& s) {
    if (s == "double_well") return WellShape::DoubleWell;
    if (s == "single_well") return WellShape::SingleWell;
    throw InvalidInputError("unknown well shape '" + s + "'");
}

template <typename T>
std::string optional_cell(const std::optional<T>& v) {
    if (!v) return "none";
    if constexpr (std::is_floating_point_v<T>) {
        return format_number(*v);
    } else {
        return std::to_string(*v);
    }
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void to_json(json& j, const SpectrumResult& r) {
    j = json{{"method", to_string(r.method)},
             {"params", r.params},
             {"branch", r.branch ? json(std::string(to_string(*r.branch))) : json(nullptr)},
             {"basis_size", r.basis_size},
             {"energies", r.energies},
             {"converged", r.converged},
             {"convergence_delta", r.convergence_delta}};
}

void from_json(const json& j, SpectrumResult& r) {
    r.method = parse_method(j.at("method").get<std::string>());
    r.params = j.at("params").get<ModelParams>();
    const auto& b = j.at("branch");
    r.branch = b.is_null() ? std::nullopt : std::optional<Branch>(parse_branch(b.get<std::string>()));
    r.basis_size = j.at("basis_size").get<int>();
    r.energies = j.at("energies").get<std::vector<double>>();
    r.converged = j.at("converged").get<bool>();
    r.convergence_delta = j.at("convergence_delta").get<double>();
}

void to_json(json& j, const WavefunctionGrid& w) {
    j = json{{"method", to_string(w.method)}, {"level", w.level}, {"xi", w.xi}, {"up", w.up}, {"down", w.down}};
}

void from_json(const json& j, WavefunctionGrid& w) {
    w.method = parse_method(j.at("method").get<std::string>());
    w.level = j.at("level").get<int>();
    w.xi = j.at("xi").get<std::vector<double>>();
    w.up = j.at("up").get<std::vector<double>>();
    w.down = j.at("down").get<std::vector<double>>();
    if (w.up.size() != w.xi.size() || w.down.size() != w.xi.size()) {
        throw InvalidInputError("wavefunction arrays differ in length");
    }
}

void to_json(json& j, const TaylorCoefficients& c) {
    j = json{{"c0", c.c0}, {"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}, {"c4", c.c4}};
}

void from_json(const json& j, TaylorCoefficients& c) {
    c.c0 = j.at("c0").get<double>();
    c.c1 = j.at("c1").get<double>();
    c.c2 = j.at("c2").get<double>();
    c.c3 = j.at("c3").get<double>();
    c.c4 = j.at("c4").get<double>();
}

void to_json(json& j, const StationaryPoint& p) { j = json{{"xi", p.xi}, {"value", p.value}}; }

void from_json(const json& j, StationaryPoint& p) {
    p.xi = j.at("xi").get<double>();
    p.value = j.at("value").get<double>();
}

void to_json(json& j, const WellReport& w) {
    j = json{{"shape", to_string(w.shape)},
             {"minima", w.minima},
             {"barrier", optional_to_json(w.barrier)},
             {"offset", optional_to_json(w.offset)},
             {"matched_level", optional_to_json(w.matched_level)}};
}

void from_json(const json& j, WellReport& w) {
    w.shape = parse_shape(j.at("shape").get<std::string>());
    w.minima = j.at("minima").get<std::vector<StationaryPoint>>();
    w.barrier = optional_from_json<StationaryPoint>(j.at("barrier"));
    w.offset = optional_from_json<double>(j.at("offset"));
    w.matched_level = optional_from_json<int>(j.at("matched_level"));
}

void to_json(json& j, const PotentialProfile& p) {
    j = json{{"params", p.params},
             {"xi", p.xi},
             {"v_eff", p.value},
             {"taylor", optional_to_json(p.taylor)},
             {"wells", p.wells}};
}

void from_json(const json& j, PotentialProfile& p) {
    p.params = j.at("params").get<ModelParams>();
    p.xi = j.at("xi").get<std::vector<double>>();
    p.value = j.at("v_eff").get<std::vector<double>>();
    p.taylor = optional_from_json<TaylorCoefficients>(j.at("taylor"));
    p.wells = j.at("wells").get<WellReport>();
}

void to_json(json& j, const ScanTable& t) {
    json points = json::array();
    for (const auto& p : t.points) points.push_back(json{{"axis_value", p.axis_value}, {"result", p.result}});
    j = json{{"axis", to_string(t.axis)}, {"method", to_string(t.method)}, {"levels", t.levels}, {"points", points}};
}

void from_json(const json& j, ScanTable& t) {
    t.axis = parse_axis(j.at("axis").get<std::string>());
    t.method = parse_method(j.at("method").get<std::string>());
    t.levels = j.at("levels").get<int>();
    t.points.clear();
    for (const auto& p : j.at("points")) {
        t.points.push_back({p.at("axis_value").get<double>(), p.at("result").get<SpectrumResult>()});
    }
}

void to_json(json& j, const DegeneracyReport& r) {
    j = json{{"params", r.params},
             {"g_over_gc", r.g_over_gc},
             {"gaps", r.gaps},
             {"onset_level", optional_to_json(r.onset_level)},
             {"threshold", r.threshold},
             {"predicted_onset", optional_to_json(r.predicted_onset)}};
}

void from_json(const json& j, DegeneracyReport& r) {
    r.params = j.at("params").get<ModelParams>();
    r.g_over_gc = j.at("g_over_gc").get<double>();
    r.gaps = j.at("gaps").get<std::vector<double>>();
    r.onset_level = optional_from_json<int>(j.at("onset_level"));
    r.threshold = j.at("threshold").get<double>();
    r.predicted_onset = optional_from_json<int>(j.at("predicted_onset"));
}

json make_document(const std::string& type, json payload) {
    return json{{"schema_version", kSchemaVersion}, {"type", type}, {"data", std::move(payload)}};
}

const json& document_payload(const json& doc, const std::string& type) {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
        throw InvalidInputError("unsupported schema_version " + doc.at("schema_version").dump());
    }
    if (doc.at("type").get<std::string>() != type) {
        throw InvalidInputError("expected a '" + type + "' document, got '" + doc.at("type").get<std::string>() + "'");
    }
    return doc.at("data");
}

std::string spectrum_csv(const std::vector<SpectrumResult>& results) {
    std::string out = "method,branch,basis,converged,convergence_delta,level,energy\n";
    for (const auto& r : results) {
        for (std::size_t i = 0; i < r.energies.size(); ++i) {
            out += std::string(to_string(r.method)) + ',' + (r.branch ? std::string(to_string(*r.branch)) : "none") +
                   ',' + std::to_string(r.basis_size) + ',' + (r.converged ? "true" : "false") + ',' +
                   format_number(r.convergence_delta) + ',' + std::to_string(i) + ',' + format_number(r.energies[i]) +
                   '\n';
        }
    }
    return out;
}

std::string scan_csv(const std::vector<ScanTable>& tables) {
    int levels = 0;
    for (const auto& t : tables) levels = std::max(levels, t.levels);
    std::string out = "axis";
    for (int k = 0; k < levels; ++k) out += ",level_" + std::to_string(k);
    out += ",method,basis\n";
    for (const auto& t : tables) {
        for (const auto& p : t.points) {
            out += format_number(p.axis_value);
            for (int k = 0; k < levels; ++k) {
                out += ',';
                if (k < static_cast<int>(p.result.energies.size())) out += format_number(p.result.energies[k]);
            }
            out += ',' + std::string(to_string(t.method)) + ',' + std::to_string(p.result.basis_size) + '\n';
        }
    }
    return out;
}

std::string wavefunction_csv(const WavefunctionGrid& wf) {
    std::string out = "xi,up,down\n";
    for (std::size_t i = 0; i < wf.xi.size(); ++i) {
        out += format_number(wf.xi[i]) + ',' + format_number(wf.up[i]) + ',' + format_number(wf.down[i]) + '\n';
    }
    return out;
}

std::string potential_csv(const PotentialProfile& profile) {
    std::string out = "xi,v_eff\n";
    for (std::size_t i = 0; i < profile.xi.size(); ++i) {
        out += format_number(profile.xi[i]) + ',' + format_number(profile.value[i]) + '\n';
    }
    return out;
}

std::string degeneracy_csv(const std::vector<DegeneracyReport>& reports) {
    std::size_t n_gaps = 0;
    for (const auto& r : reports) n_gaps = std::max(n_gaps, r.gaps.size());
    std::string out = "eta,g,g_over_gc,threshold,onset_level,predicted_onset";
    for (std::size_t k = 0; k < n_gaps; ++k) out += ",gap_" + std::to_string(k);
    out += '\n';
    for (const auto& r : reports) {
        out += format_number(r.params.eta()) + ',' + format_number(r.params.g()) + ',' + format_number(r.g_over_gc) +
               ',' + format_number(r.threshold) + ',' + optional_cell(r.onset_level) + ',' +
               optional_cell(r.predicted_onset);
        for (std::size_t k = 0; k < n_gaps; ++k) {
            out += ',';
            if (k < r.gaps.size()) out += format_number(r.gaps[k]);
        }
        out += '\n';
    }
    return out;
}

std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidInputError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw InvalidInputError("config line " + std::to_string(line_no) + ": empty key or value");
        }
        if (!out.emplace(key, value).second) {
            throw InvalidInputError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
    }
    return out;
}

}  // namespace aqrm
