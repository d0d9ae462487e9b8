//---------------------------------------------------------------------------//
//! \file qcompton_cli.cpp
//! Command-line driver: run scenario files or figure presets.
//!
//! Exit codes: 0 success, 1 invalid configuration, 2 physics error (for
//! example kinematically forbidden input), 3 series or quadrature did not
//! converge.
//---------------------------------------------------------------------------//
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qcompton/config.hpp"
#include "qcompton/errors.hpp"

namespace
{
using namespace qcompton;

struct OutputChoice
{
    std::string path;
    std::string format;
};

void write_outputs(ScenarioConfig const& config,
                   RunResult const& result,
                   OutputChoice const& out)
{
    std::string const format = out.format.empty() ? config.output.format
                                                  : out.format;
    std::string const path = out.path.empty() ? config.output.path : out.path;

    auto emit = [&](std::ostream& os) {
        if (format == "json")
            os << result_to_json(result).dump(1) << '\n';
        else
            write_csv(os, result);
    };

    nlohmann::json report{{"code", std::string("qcompton ") + QCOMPTON_VERSION},
                          {"config", to_json(config)},
                          {"diagnostics", result.diagnostics}};
    if (path.empty() || path == "-")
    {
        emit(std::cout);
        std::cerr << report.dump(1) << '\n';
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot write '" + path + "'");
    emit(os);
    std::ofstream rep(path + ".report.json", std::ios::binary);
    rep << report.dump(1) << '\n';
}

int run_guarded(auto&& body)
{
    try
    {
        body();
        return 0;
    }
    catch (ConfigError const& e)
    {
        std::cerr << "configuration error at " << e.what() << '\n';
        return 1;
    }
    catch (TruncationNotConverged const& e)
    {
        std::cerr << "not converged: " << e.what() << '\n';
        return 3;
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Nonlinear Compton spectra for quantum light drives"};
    app.set_version_flag("--version", std::string(QCOMPTON_VERSION));
    app.require_subcommand(1);

    std::string config_path;
    OutputChoice out;
    auto* run = app.add_subcommand("run", "Evaluate a scenario file");
    run->add_option("--config", config_path, "Scenario file (JSON)")
        ->required();
    run->add_option("--out", out.path, "Output path ('-' for stdout)");
    run->add_option("--format", out.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string preset_name;
    std::optional<std::string> state;
    std::optional<int> intensity_index;
    std::string emit_config;
    auto* pre = app.add_subcommand("preset", "Evaluate or emit a figure preset");
    pre->add_option("name", preset_name, "fig1, fig2 or fig3")->required();
    pre->add_option("--state", state, "Override the drive state");
    pre->add_option("--intensity-index", intensity_index, "1-based intensity");
    pre->add_option("--emit-config", emit_config, "Write the config and exit");
    pre->add_option("--out", out.path, "Output path ('-' for stdout)");
    pre->add_option("--format", out.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    if (*run)
    {
        return run_guarded([&] {
            auto const config = load_config(config_path);
            write_outputs(config, execute(config), out);
        });
    }
    return run_guarded([&] {
        auto const config = preset(preset_name, state, intensity_index);
        if (!emit_config.empty())
        {
            auto const text = to_json(config).dump(2) + "\n";
            if (emit_config == "-")
            {
                std::cout << text;
                return;
            }
            std::ofstream os(emit_config, std::ios::binary);
            if (!os)
                throw std::runtime_error("cannot write '" + emit_config + "'");
            os << text;
            return;
        }
        write_outputs(config, execute(config), out);
    });
}
