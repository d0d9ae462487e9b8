//---------------------------------------------------------------------------//
//! \file config.cpp
//---------------------------------------------------------------------------//
#include "qcompton/config.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qcompton/constants.hpp"
#include "qcompton/errors.hpp"
#include "qcompton/photon_statistics.hpp"

namespace qcompton
{
namespace
{
using nlohmann::json;

constexpr double deg = constants::pi / 180;

// Preset constants. Peak angles are maxima of the coherent
// sin(theta')-weighted angular distribution as computed by this code; fig3
// bands run from the coherent 1e-6 cutoff at that angle to twice it.
constexpr double fig1_intensity = 9e16;  // guess
constexpr std::array<double, 2> fig1_band{1000, 2000};  // guess
constexpr std::array<double, 2> fig1_omega_range{10, 3000};
constexpr std::array<double, 4> fig2_peak_deg{54.5, 55.0, 55.5, 60.0};
constexpr std::array<std::array<double, 2>, 4> fig2_omega_range{
    {{0.05, 20}, {0.05, 30}, {0.05, 60}, {0.05, 150}}};
constexpr std::array<double, 4> fig3_peak_deg{177.2, 177.2, 177.2, 176.7};
constexpr std::array<std::array<double, 2>, 4> fig3_band{
    {{800, 1600}, {1200, 2400}, {1590, 3180}, {2480, 4960}}};
constexpr std::array<double, 4> fig3_omega_max{3000, 3000, 4000, 6000};

constexpr std::string_view known_states[] = {
    "coherent", "thermal", "bsv", "fock", "cat", "mixed_diagonal"};

//---------------------------------------------------------------------------//
// Schema helpers. Each takes the dotted path of the object being read.

std::string join(std::string const& path, std::string_view key)
{
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void require_object(json const& j, std::string const& path)
{
    if (!j.is_object())
        throw ConfigError(path.empty() ? "<root>" : path, "expected an object");
}

void reject_unknown(json const& obj,
                    std::string const& path,
                    std::initializer_list<std::string_view> allowed)
{
    for (auto it = obj.begin(); it != obj.end(); ++it)
    {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw ConfigError(join(path, it.key()), "unknown key");
    }
}

double number_at(json const& j, std::string const& path)
{
    if (!j.is_number())
        throw ConfigError(path, "expected a number");
    double const v = j.get<double>();
    if (!std::isfinite(v))
        throw ConfigError(path, "expected a finite number");
    return v;
}

std::optional<double>
opt_number(json const& obj, std::string const& path, char const* key)
{
    if (!obj.contains(key))
        return std::nullopt;
    return number_at(obj.at(key), join(path, key));
}

double get_number(json const& obj,
                  std::string const& path,
                  char const* key,
                  std::optional<double> fallback = {})
{
    if (auto v = opt_number(obj, path, key))
        return *v;
    if (fallback)
        return *fallback;
    throw ConfigError(join(path, key), "required");
}

int get_int(json const& obj, std::string const& path, char const* key, int fallback)
{
    if (!obj.contains(key))
        return fallback;
    auto const& j = obj.at(key);
    if (!j.is_number_integer())
        throw ConfigError(join(path, key), "expected an integer");
    auto const v = j.get<long long>();
    if (v < 1 || v > 100'000'000)
        throw ConfigError(join(path, key), "out of range");
    return static_cast<int>(v);
}

std::string get_string(json const& obj,
                       std::string const& path,
                       char const* key,
                       std::string fallback)
{
    if (!obj.contains(key))
        return fallback;
    auto const& j = obj.at(key);
    if (!j.is_string())
        throw ConfigError(join(path, key), "expected a string");
    return j.get<std::string>();
}

template<std::size_t N>
std::array<double, N> get_array(json const& j, std::string const& path)
{
    if (!j.is_array() || j.size() != N)
        throw ConfigError(path,
                          "expected an array of " + std::to_string(N)
                              + " numbers");
    std::array<double, N> result{};
    for (std::size_t i = 0; i < N; ++i)
        result[i] = number_at(j[i], path + "[" + std::to_string(i) + "]");
    return result;
}

void check(bool ok, std::string const& path, char const* message)
{
    if (!ok)
        throw ConfigError(path, message);
}

std::string format_number(double v)
{
    char buf[64];
    auto const r
        = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

bool is_custom_state(std::string const& state)
{
    return state.size() > 8 && state.rfind("custom(", 0) == 0
           && state.back() == ')';
}

//---------------------------------------------------------------------------//
ElectronConfig parse_electron(json const& j)
{
    std::string const path = "electron";
    require_object(j, path);
    reject_unknown(j, path, {"gamma", "kinetic_energy_eV", "beta", "direction"});
    ElectronConfig e;
    e.gamma = opt_number(j, path, "gamma");
    e.kinetic_energy_eV = opt_number(j, path, "kinetic_energy_eV");
    e.beta = opt_number(j, path, "beta");
    int const given = e.gamma.has_value() + e.kinetic_energy_eV.has_value()
                      + e.beta.has_value();
    check(given == 1,
          path,
          "exactly one of gamma, kinetic_energy_eV, beta is required");
    if (e.gamma)
        check(*e.gamma >= 1, "electron.gamma", "must be >= 1");
    if (e.kinetic_energy_eV)
        check(*e.kinetic_energy_eV >= 0,
              "electron.kinetic_energy_eV",
              "must be >= 0");
    if (e.beta)
        check(*e.beta >= 0 && *e.beta < 1, "electron.beta", "must be in [0, 1)");
    if (j.contains("direction"))
    {
        e.direction = get_array<3>(j.at("direction"), "electron.direction");
        double const n = std::hypot(
            e.direction[0], e.direction[1], e.direction[2]);
        check(n > 0, "electron.direction", "must be nonzero");
    }
    return e;
}

DriveConfig parse_drive(json const& j)
{
    std::string const path = "drive";
    require_object(j, path);
    reject_unknown(
        j,
        path,
        {"photon_energy_eV", "intensity_W_cm2", "relative_bandwidth", "state"});
    DriveConfig d;
    d.photon_energy_eV = get_number(j, path, "photon_energy_eV");
    check(d.photon_energy_eV > 0, "drive.photon_energy_eV", "must be positive");
    d.intensity_W_cm2 = get_number(j, path, "intensity_W_cm2");
    check(d.intensity_W_cm2 >= 0, "drive.intensity_W_cm2", "must be >= 0");
    d.relative_bandwidth
        = get_number(j, path, "relative_bandwidth", d.relative_bandwidth);
    check(d.relative_bandwidth > 0,
          "drive.relative_bandwidth",
          "must be positive");
    d.state = get_string(j, path, "state", d.state);
    bool const known = std::find(std::begin(known_states),
                                 std::end(known_states),
                                 d.state)
                       != std::end(known_states);
    if (!known && !is_custom_state(d.state))
        throw ConfigError("drive.state", "unknown state '" + d.state + "'");
    return d;
}

ScanConfig parse_scan(json const& j)
{
    std::string const path = "scan";
    require_object(j, path);
    reject_unknown(j,
                   path,
                   {"mode",
                    "theta_prime_deg",
                    "theta_range_deg",
                    "phi_prime_deg",
                    "omega_prime_range_eV",
                    "samples",
                    "grid",
                    "band_eV",
                    "sin_jacobian"});
    ScanConfig s;
    s.mode = get_string(j, path, "mode", s.mode);
    check(s.mode == "spectrum" || s.mode == "angular",
          "scan.mode",
          "must be 'spectrum' or 'angular'");
    s.theta_prime_deg
        = get_number(j, path, "theta_prime_deg", s.theta_prime_deg);
    check(s.theta_prime_deg >= 0 && s.theta_prime_deg <= 180,
          "scan.theta_prime_deg",
          "must be in [0, 180]");
    if (j.contains("theta_range_deg"))
        s.theta_range_deg
            = get_array<2>(j.at("theta_range_deg"), "scan.theta_range_deg");
    check(s.theta_range_deg[0] >= 0 && s.theta_range_deg[1] <= 180
              && s.theta_range_deg[0] < s.theta_range_deg[1],
          "scan.theta_range_deg",
          "must satisfy 0 <= lo < hi <= 180");
    s.phi_prime_deg = get_number(j, path, "phi_prime_deg", s.phi_prime_deg);
    if (j.contains("omega_prime_range_eV"))
        s.omega_prime_range_eV = get_array<2>(j.at("omega_prime_range_eV"),
                                              "scan.omega_prime_range_eV");
    check(s.omega_prime_range_eV[0] > 0
              && s.omega_prime_range_eV[0] < s.omega_prime_range_eV[1],
          "scan.omega_prime_range_eV",
          "must satisfy 0 < lo < hi");
    s.samples = get_int(j, path, "samples", s.samples);
    check(s.samples >= 2, "scan.samples", "must be >= 2");
    s.grid = get_string(j, path, "grid", s.grid);
    check(s.grid == "linear" || s.grid == "log",
          "scan.grid",
          "must be 'linear' or 'log'");
    if (j.contains("band_eV"))
    {
        s.band_eV = get_array<2>(j.at("band_eV"), "scan.band_eV");
        check((*s.band_eV)[0] >= 0 && (*s.band_eV)[0] < (*s.band_eV)[1],
              "scan.band_eV",
              "must satisfy 0 <= lo < hi");
    }
    if (j.contains("sin_jacobian"))
    {
        check(j.at("sin_jacobian").is_boolean(),
              "scan.sin_jacobian",
              "expected a boolean");
        s.sin_jacobian = j.at("sin_jacobian").get<bool>();
    }
    if (s.mode == "angular")
        check(s.band_eV.has_value(), "scan.band_eV", "required for angular scans");
    return s;
}

NumericsConfig parse_numerics(json const& j)
{
    std::string const path = "numerics";
    require_object(j, path);
    reject_unknown(j, path, {"broadening", "rel_tol", "s_max"});
    NumericsConfig n;
    auto const mode = get_string(j, path, "broadening", "literal");
    try
    {
        n.broadening = broadening_from_string(mode);
    }
    catch (std::invalid_argument const&)
    {
        throw ConfigError("numerics.broadening",
                          "must be 'literal' or 'drive_average'");
    }
    n.rel_tol = get_number(j, path, "rel_tol", n.rel_tol);
    check(n.rel_tol > 0 && n.rel_tol < 1, "numerics.rel_tol", "must be in (0, 1)");
    n.s_max = get_int(j, path, "s_max", n.s_max);
    return n;
}

OutputConfig parse_output(json const& j)
{
    std::string const path = "output";
    require_object(j, path);
    reject_unknown(j, path, {"format", "path"});
    OutputConfig o;
    o.format = get_string(j, path, "format", o.format);
    check(o.format == "csv" || o.format == "json",
          "output.format",
          "must be 'csv' or 'json'");
    o.path = get_string(j, path, "path", o.path);
    return o;
}

PhaseAveragedStatistics
make_stats(std::string const& state, double omega, double density)
{
    if (state == "coherent")
        return coherent_stats(omega, density);
    if (state == "thermal")
        return thermal_stats(omega, density);
    if (state == "bsv")
        return bsv_stats(omega, density);
    if (state == "fock")
        return fock_limit_stats(omega, density);
    if (state == "cat")
        return cat_limit_stats(omega, density);
    if (state == "mixed_diagonal")
        return mixed_diagonal_stats(omega, density);
    if (is_custom_state(state))
    {
        auto const path = state.substr(7, state.size() - 8);
        auto const samples = read_table_samples(path);
        return custom_tabulated_stats(omega, density, samples);
    }
    throw ConfigError("drive.state", "unknown state '" + state + "'");
}

double electron_gamma(ElectronConfig const& e)
{
    if (e.gamma)
        return *e.gamma;
    if (e.kinetic_energy_eV)
        return 1 + *e.kinetic_energy_eV / constants::electron_mass;
    double const b = *e.beta;
    return 1 / std::sqrt((1 - b) * (1 + b));
}

}  // namespace

//---------------------------------------------------------------------------//
ScenarioConfig parse_config(json const& doc)
{
    require_object(doc, "");
    reject_unknown(
        doc, "", {"electron", "drive", "scan", "numerics", "output", "notes"});
    if (!doc.contains("electron"))
        throw ConfigError("electron", "required");
    if (!doc.contains("drive"))
        throw ConfigError("drive", "required");

    ScenarioConfig c;
    c.electron = parse_electron(doc.at("electron"));
    c.drive = parse_drive(doc.at("drive"));
    if (doc.contains("scan"))
        c.scan = parse_scan(doc.at("scan"));
    if (doc.contains("numerics"))
        c.numerics = parse_numerics(doc.at("numerics"));
    if (doc.contains("output"))
        c.output = parse_output(doc.at("output"));
    if (doc.contains("notes"))
    {
        auto const& notes = doc.at("notes");
        check(notes.is_array(), "notes", "expected an array of strings");
        for (std::size_t i = 0; i < notes.size(); ++i)
        {
            check(notes[i].is_string(),
                  "notes[" + std::to_string(i) + "]",
                  "expected a string");
            c.notes.push_back(notes[i].get<std::string>());
        }
    }
    return c;
}

ScenarioConfig load_config(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("<file>", "cannot open '" + path + "'");
    json doc;
    try
    {
        doc = json::parse(in);
    }
    catch (json::parse_error const& e)
    {
        throw ConfigError("<file>", e.what());
    }
    return parse_config(doc);
}

json to_json(ScenarioConfig const& c)
{
    json electron;
    if (c.electron.gamma)
        electron["gamma"] = *c.electron.gamma;
    if (c.electron.kinetic_energy_eV)
        electron["kinetic_energy_eV"] = *c.electron.kinetic_energy_eV;
    if (c.electron.beta)
        electron["beta"] = *c.electron.beta;
    electron["direction"] = c.electron.direction;

    json scan{{"mode", c.scan.mode},
              {"theta_prime_deg", c.scan.theta_prime_deg},
              {"theta_range_deg", c.scan.theta_range_deg},
              {"phi_prime_deg", c.scan.phi_prime_deg},
              {"omega_prime_range_eV", c.scan.omega_prime_range_eV},
              {"samples", c.scan.samples},
              {"grid", c.scan.grid},
              {"sin_jacobian", c.scan.sin_jacobian}};
    if (c.scan.band_eV)
        scan["band_eV"] = *c.scan.band_eV;

    json doc{{"electron", electron},
             {"drive",
              {{"photon_energy_eV", c.drive.photon_energy_eV},
               {"intensity_W_cm2", c.drive.intensity_W_cm2},
               {"relative_bandwidth", c.drive.relative_bandwidth},
               {"state", c.drive.state}}},
             {"scan", scan},
             {"numerics",
              {{"broadening", std::string(to_string(c.numerics.broadening))},
               {"rel_tol", c.numerics.rel_tol},
               {"s_max", c.numerics.s_max}}},
             {"output", {{"format", c.output.format}, {"path", c.output.path}}}};
    if (!c.notes.empty())
        doc["notes"] = c.notes;
    return doc;
}

//---------------------------------------------------------------------------//
ScenarioConfig preset(std::string_view name,
                      std::optional<std::string> state,
                      std::optional<int> intensity_index)
{
    ScenarioConfig c;
    c.drive.photon_energy_eV = 2.25;
    c.drive.relative_bandwidth = 8e-3;

    auto pick_intensity = [&](int fallback) {
        int const i = intensity_index.value_or(fallback);
        if (i < 1 || i > static_cast<int>(figure_intensities.size()))
            throw ConfigError("intensity_index", "must be in 1..4");
        return i;
    };

    if (name == "fig1")
    {
        if (intensity_index && *intensity_index != 1)
            throw ConfigError("intensity_index", "fig1 has a single intensity");
        c.electron.beta = 0.99;
        c.electron.direction = {0, 0, -1};
        c.drive.intensity_W_cm2 = fig1_intensity;
        c.scan.theta_prime_deg = 159.9;
        c.scan.theta_range_deg = {140, 180};
        c.scan.omega_prime_range_eV = fig1_omega_range;
        c.scan.samples = 1000;
        c.scan.band_eV = fig1_band;
        c.notes.push_back(
            "fig1: intensity and band_eV are guesses (unverified); the "
            "source gives neither value");
    }
    else if (name == "fig2")
    {
        int const i = pick_intensity(4);
        c.electron.gamma = 1;
        c.electron.direction = {0, 0, 1};
        c.drive.intensity_W_cm2 = figure_intensities[i - 1];
        c.scan.theta_prime_deg = fig2_peak_deg[i - 1];
        c.scan.theta_range_deg = {0, 180};
        c.scan.omega_prime_range_eV = fig2_omega_range[i - 1];
        c.scan.samples = 4000;
        c.scan.band_eV = std::array<double, 2>{0.01, 400};
        c.scan.sin_jacobian = true;
        c.notes.push_back(
            "fig2: theta_prime_deg is the maximum of the coherent "
            "sin(theta')-weighted angular distribution, computed by this code");
    }
    else if (name == "fig3")
    {
        int const i = pick_intensity(3);
        c.electron.gamma = 7.09;
        c.electron.direction = {0, 0, -1};
        c.drive.intensity_W_cm2 = figure_intensities[i - 1];
        c.scan.theta_prime_deg = fig3_peak_deg[i - 1];
        c.scan.theta_range_deg = {150, 180};
        c.scan.omega_prime_range_eV = {10, fig3_omega_max[i - 1]};
        c.scan.samples = 6000;
        c.scan.band_eV = fig3_band[i - 1];
        c.scan.sin_jacobian = true;
        c.notes.push_back(
            "fig3: theta_prime_deg is the maximum of the coherent "
            "sin(theta')-weighted angular distribution; band_eV spans one "
            "to two times the coherent cutoff there");
    }
    else
    {
        throw ConfigError("preset", "unknown preset '" + std::string(name) + "'");
    }

    if (state)
    {
        json probe = to_json(c);
        probe["drive"]["state"] = *state;
        c.drive = parse_drive(probe.at("drive"));
    }
    return c;
}

//---------------------------------------------------------------------------//
BuiltScenario build_scenario(ScenarioConfig const& c)
{
    auto const& d = c.drive;
    NaturalDrive const drive
        = to_natural({d.intensity_W_cm2, d.photon_energy_eV, d.relative_bandwidth});

    auto const& dir = c.electron.direction;
    double const n = std::hypot(dir[0], dir[1], dir[2]);
    Vec3 const unit{dir[0] / n, dir[1] / n, dir[2] / n};

    BuiltScenario result{
        Scenario{electron_momentum(electron_gamma(c.electron), unit),
                 make_stats(d.state, drive.omega, drive.photon_density),
                 drive.bandwidth,
                 c.numerics.broadening,
                 TruncationPolicy{c.numerics.rel_tol, 5, c.numerics.s_max}},
        drive};
    return result;
}

RunResult execute(ScenarioConfig const& c)
{
    auto const start = std::chrono::steady_clock::now();
    auto const built = build_scenario(c);
    auto const& sc = built.scenario;

    RunResult r;
    r.header = {
        {"code", std::string("qcompton ") + QCOMPTON_VERSION},
        {"state", sc.stats.label},
        {"intensity_W_cm2", format_number(c.drive.intensity_W_cm2)},
        {"photon_energy_eV", format_number(c.drive.photon_energy_eV)},
        {"relative_bandwidth", format_number(c.drive.relative_bandwidth)},
        {"electron_gamma", format_number(sc.electron.gamma)},
        {"broadening", std::string(to_string(sc.broadening))},
    };

    json truncation{{"rel_tol", sc.truncation.rel_tol},
                    {"patience", sc.truncation.patience},
                    {"max_terms", sc.truncation.max_terms}};
    double const phi = c.scan.phi_prime_deg * deg;

    if (c.scan.mode == "spectrum")
    {
        EmissionGeometry const geometry{c.scan.theta_prime_deg * deg, phi};
        FrequencyGrid const grid{c.scan.omega_prime_range_eV[0],
                                 c.scan.omega_prime_range_eV[1],
                                 c.scan.samples,
                                 c.scan.grid == "log"};
        auto const curve = energy_spectrum(sc, geometry, grid);
        r.x_name = "omega_prime_eV";
        r.x = curve.omega;
        r.value = curve.values();
        r.header.emplace_back(
            "geometry",
            "theta_prime_deg=" + format_number(c.scan.theta_prime_deg)
                + " phi_prime_deg=" + format_number(c.scan.phi_prime_deg));
        r.header.emplace_back("units", curve.meta.units);
        truncation["highest_order"] = curve.meta.highest_order;
        truncation["coherent_lines"] = curve.lines.size();
        r.diagnostics["cutoff_1e-6_eV"] = spectrum_cutoff(curve, 1e-6);
    }
    else
    {
        auto const& band = *c.scan.band_eV;
        std::vector<double> thetas(c.scan.samples);
        r.x.resize(c.scan.samples);
        for (int i = 0; i < c.scan.samples; ++i)
        {
            double const t = static_cast<double>(i) / (c.scan.samples - 1);
            r.x[i] = c.scan.theta_range_deg[0]
                     + t * (c.scan.theta_range_deg[1] - c.scan.theta_range_deg[0]);
            thetas[i] = r.x[i] * deg;
        }
        r.x_name = "theta_prime_deg";
        r.value = angular_distribution(
            sc, thetas, phi, {band[0], band[1]}, c.scan.sin_jacobian);
        r.header.emplace_back(
            "geometry",
            "phi_prime_deg=" + format_number(c.scan.phi_prime_deg)
                + " band_eV=" + format_number(band[0]) + ".."
                + format_number(band[1]));
        r.header.emplace_back("units",
                              c.scan.sin_jacobian ? "eV/rad" : "eV/sr");
    }
    for (auto const& note : c.notes)
        r.header.emplace_back("note", note);

    auto const m = moments(sc.stats);
    double const expected = 2 * built.drive.omega * built.drive.photon_density;
    double const second_error
        = expected > 0 ? std::abs(m.second / expected - 1) : std::abs(m.second);
    r.diagnostics["truncation"] = truncation;
    r.diagnostics["moments"] = {{"normalization", m.normalization},
                                {"second", m.second},
                                {"expected_second", expected},
                                {"normalization_error", std::abs(m.normalization - 1)},
                                {"second_rel_error", second_error},
                                {"pass", std::abs(m.normalization - 1) < 1e-8
                                             && second_error < 1e-8}};
    r.diagnostics["threads"] = worker_threads();
    r.diagnostics["wall_time_s"] = std::chrono::duration<double>(
                                       std::chrono::steady_clock::now() - start)
                                       .count();
    return r;
}

//---------------------------------------------------------------------------//
void write_csv(std::ostream& os, RunResult const& r)
{
    for (auto const& [key, value] : r.header)
        os << "# " << key << ": " << value << '\n';
    os << r.x_name << ",value\n";
    for (std::size_t i = 0; i < r.x.size(); ++i)
        os << format_number(r.x[i]) << ',' << format_number(r.value[i]) << '\n';
}

json result_to_json(RunResult const& r)
{
    json header = json::array();
    for (auto const& [key, value] : r.header)
        header.push_back({key, value});
    return json{{"header", header},
                {"columns", {r.x_name, "value"}},
                {r.x_name, r.x},
                {"value", r.value},
                {"diagnostics", r.diagnostics}};
}

RunResult read_csv(std::istream& is)
{
    RunResult r;
    std::string line;
    auto parse = [](std::string_view text) {
        double v = 0;
        auto const res = std::from_chars(text.data(), text.data() + text.size(), v);
        if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
            throw std::runtime_error("malformed number '" + std::string(text)
                                     + "'");
        return v;
    };
    while (std::getline(is, line))
    {
        if (line.empty())
            continue;
        if (line[0] == '#')
        {
            auto const colon = line.find(": ");
            if (colon != std::string::npos && line.size() > 2)
                r.header.emplace_back(line.substr(2, colon - 2),
                                      line.substr(colon + 2));
            continue;
        }
        auto const comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("malformed CSV line '" + line + "'");
        if (r.x_name.empty())
        {
            r.x_name = line.substr(0, comma);
            continue;
        }
        r.x.push_back(parse(std::string_view(line).substr(0, comma)));
        r.value.push_back(parse(std::string_view(line).substr(comma + 1)));
    }
    return r;
}

RunResult result_from_json(json const& doc)
{
    RunResult r;
    for (auto const& kv : doc.at("header"))
        r.header.emplace_back(kv.at(0).get<std::string>(),
                              kv.at(1).get<std::string>());
    r.x_name = doc.at("columns").at(0).get<std::string>();
    r.x = doc.at(r.x_name).get<std::vector<double>>();
    r.value = doc.at("value").get<std::vector<double>>();
    if (doc.contains("diagnostics"))
        r.diagnostics = doc.at("diagnostics");
    return r;
}

}  // namespace qcompton
