//---------------------------------------------------------------------------//
//! \file config.hpp
//! Scenario files, figure presets and run output for the command-line tool.
//!
//! All physical inputs are laboratory units; build_scenario is the single
//! place where they are converted to natural units.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pipeline.hpp"
#include "units.hpp"

namespace qcompton
{
//---------------------------------------------------------------------------//
struct ElectronConfig
{
    // Exactly one of these is set
    std::optional<double> gamma;
    std::optional<double> kinetic_energy_eV;
    std::optional<double> beta;
    std::array<double, 3> direction{0, 0, 1};
};

struct DriveConfig
{
    double photon_energy_eV{2.25};
    double intensity_W_cm2{0};
    double relative_bandwidth{8e-3};
    //! coherent, thermal, bsv, fock, cat, mixed_diagonal or custom(<path>)
    std::string state{"coherent"};
};

struct ScanConfig
{
    std::string mode{"spectrum"};  //!< spectrum | angular
    double theta_prime_deg{180};
    std::array<double, 2> theta_range_deg{90, 180};
    double phi_prime_deg{0};
    std::array<double, 2> omega_prime_range_eV{0.1, 10};
    int samples{200};
    std::string grid{"linear"};  //!< linear | log
    std::optional<std::array<double, 2>> band_eV;
    bool sin_jacobian{false};
};

struct NumericsConfig
{
    Broadening broadening{Broadening::literal};
    double rel_tol{1e-10};
    int s_max{100000};
};

struct OutputConfig
{
    std::string format{"csv"};  //!< csv | json
    std::string path;  //!< empty: standard output
};

struct ScenarioConfig
{
    ElectronConfig electron;
    DriveConfig drive;
    ScanConfig scan;
    NumericsConfig numerics;
    OutputConfig output;
    std::vector<std::string> notes;  //!< free text carried into outputs
};

//---------------------------------------------------------------------------//
// Parse and validate; throws ConfigError naming the offending path.
ScenarioConfig parse_config(nlohmann::json const& doc);
ScenarioConfig load_config(std::string const& path);

nlohmann::json to_json(ScenarioConfig const& config);

// Figure presets: fig1, fig2, fig3. intensity_index is 1-based.
ScenarioConfig preset(std::string_view name,
                      std::optional<std::string> state = {},
                      std::optional<int> intensity_index = {});

// Intensities shared by the fig2 and fig3 presets [W/cm^2]
inline constexpr std::array<double, 4> figure_intensities{
    9e14, 9e15, 9e16, 9e17};

//---------------------------------------------------------------------------//
struct BuiltScenario
{
    Scenario scenario;
    NaturalDrive drive;
};

BuiltScenario build_scenario(ScenarioConfig const& config);

//! Curve produced by a run plus what is needed to document it
struct RunResult
{
    std::string x_name;  //!< omega_prime_eV or theta_prime_deg
    std::vector<double> x;
    std::vector<double> value;
    std::vector<std::pair<std::string, std::string>> header;
    nlohmann::json diagnostics;
};

RunResult execute(ScenarioConfig const& config);

void write_csv(std::ostream& os, RunResult const& result);
nlohmann::json result_to_json(RunResult const& result);

// Parse either output format back into a result (header and values only).
RunResult read_csv(std::istream& is);
RunResult result_from_json(nlohmann::json const& doc);

//---------------------------------------------------------------------------//
}  // namespace qcompton
