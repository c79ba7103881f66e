#include <doctest.h>

#include <clocale>
#include <sstream>

#include "aqrm/error.hpp"
#include "aqrm/io.hpp"
#include "test_support.hpp"

using namespace aqrm;
using nlohmann::json;

namespace {

template <class T>
T round_trip(const T& value) {
    const json doc = make_document("probe", json(value));
    const json parsed = json::parse(doc.dump());
    return document_payload(parsed, "probe").get<T>();
}

int count_lines(const std::string& s) {
    int n = 0;
    for (const char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-0.5) == "-0.5");
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(1e-20) == "9.9999999999999995e-21");
    CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("JSON round trips preserve every field") {
    const ModelParams p(10.0, 2.88, 0.5);

    SpectrumResult bo = solve_bo(p, Branch::Negative, 40, 3);
    CHECK(round_trip(bo) == bo);
    const SpectrumResult ed = solve_ed(p, 60, 3);
    CHECK(round_trip(ed) == ed);
    CHECK(!round_trip(ed).branch.has_value());

    const auto grid = aqrm::test::linspace(-13.0, 13.0, 41);
    const WavefunctionGrid wf = bo_wavefunction(p, Branch::Negative, 40, 1, grid);
    CHECK(round_trip(wf) == wf);

    const PotentialProfile prof = sample_potential(p, 6.0, 13);
    CHECK(round_trip(prof) == prof);
    const PotentialProfile free = sample_potential(ModelParams(10.0, 0.0, 0.5), 6.0, 5);
    CHECK(round_trip(free) == free);
    CHECK(round_trip(find_wells(ModelParams(10.0, 0.5, 0.0))) == find_wells(ModelParams(10.0, 0.5, 0.0)));

    const std::vector<double> values{0.5, 1.0};
    SolverSettings s;
    s.bo_basis = 40;
    s.n_fock = 60;
    for (const ScanTable& t : scan_coupling(10.0, 0.5, ScanAxis::GOverGc, values, MethodSelection::Both, 3, s)) {
        CHECK(round_trip(t) == t);
    }

    DegeneracyReport rep;
    rep.params = p;
    rep.g_over_gc = 1.5;
    rep.gaps = {0.9, 5e-5, 0.93};
    rep.onset_level = 1;
    rep.predicted_onset = 1;
    CHECK(round_trip(rep) == rep);
    rep.onset_level.reset();
    rep.predicted_onset.reset();
    CHECK(round_trip(rep) == rep);
}

TEST_CASE("document tags are checked") {
    const json doc = make_document("spectrum", json::array());
    CHECK(doc.at("schema_version") == kSchemaVersion);
    CHECK(doc.at("type") == "spectrum");
    CHECK_THROWS_AS(document_payload(doc, "scan"), InvalidInputError);
    json wrong = doc;
    wrong["schema_version"] = 99;
    CHECK_THROWS_AS(document_payload(wrong, "spectrum"), InvalidInputError);
}

TEST_CASE("spectrum CSV") {
    SpectrumResult r;
    r.method = Method::BO;
    r.branch = Branch::Negative;
    r.basis_size = 60;
    r.energies = {-4.5, -3.5};
    r.converged = true;
    r.convergence_delta = 0.0;
    CHECK(spectrum_csv({r}) ==
          "method,branch,basis,converged,convergence_delta,level,energy\n"
          "bo,negative,60,true,0,0,-4.5\n"
          "bo,negative,60,true,0,1,-3.5\n");
}

TEST_CASE("scan CSV layout") {
    const std::vector<double> values{0.0, 1.0};
    SolverSettings s;
    s.n_fock = 30;
    const auto tables = scan_coupling(10.0, 0.0, ScanAxis::G, values, MethodSelection::ED, 2, s);
    const std::string csv = scan_csv(tables);
    CHECK(csv.rfind("axis,level_0,level_1,method,basis\n0,", 0) == 0);
    const auto second = csv.find('\n') + 1;
    const std::string row = csv.substr(second, csv.find('\n', second) - second);
    CHECK(row.substr(row.size() - 6) == ",ed,30");
    CHECK(std::stod(row.substr(2)) == tables[0].points[0].result.energies[0]);
    CHECK(count_lines(csv) == 3);
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("wavefunction, potential and degeneracy CSV") {
    WavefunctionGrid wf;
    wf.xi = {-1.0, 0.0, 1.0};
    wf.up = {0.25, 0.5, 0.25};
    wf.down = {0.0, -0.125, 0.0};
    CHECK(wavefunction_csv(wf) == "xi,up,down\n-1,0.25,0\n0,0.5,-0.125\n1,0.25,0\n");

    const PotentialProfile prof = sample_potential(ModelParams(10.0, 0.0, 0.0), 2.0, 2);
    CHECK(potential_csv(prof) == "xi,v_eff\n-2,-3\n2,-3\n");

    DegeneracyReport rep;
    rep.params = ModelParams(10.0, 2.0, 0.25);
    rep.g_over_gc = 1.25;
    rep.threshold = 0.001;
    rep.gaps = {0.5, 0.75};
    rep.onset_level = 1;
    CHECK(degeneracy_csv({rep}) ==
          "eta,g,g_over_gc,threshold,onset_level,predicted_onset,gap_0,gap_1\n"
          "0.25,2,1.25,0.001,1,none,0.5,0.75\n");
}

TEST_CASE("CSV ignores the global C locale") {
    const char* previous = std::setlocale(LC_NUMERIC, nullptr);
    const std::string saved = previous ? previous : "C";
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) CHECK(format_number(0.5) == "0.5");
    std::setlocale(LC_NUMERIC, saved.c_str());
    CHECK(format_number(0.5) == "0.5");
}

TEST_CASE("config parsing") {
    std::istringstream in("# defaults\nbasis = 80\n\n  fock=300  # inline\nthreshold = 1e-4\n");
    const auto cfg = parse_config(in);
    CHECK(cfg.size() == 3);
    CHECK(cfg.at("basis") == "80");
    CHECK(cfg.at("fock") == "300");
    CHECK(cfg.at("threshold") == "1e-4");

    std::istringstream dup("basis = 1\nbasis = 2\n");
    CHECK_THROWS_AS(parse_config(dup), InvalidInputError);
    std::istringstream bad("basis 80\n");
    CHECK_THROWS_AS(parse_config(bad), InvalidInputError);
    std::istringstream empty_key("= 3\n");
    CHECK_THROWS_AS(parse_config(empty_key), InvalidInputError);
}
