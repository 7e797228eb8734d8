#pragma once

#include <iostream>
#include <span>
#include <string>
#include <vector>

#include "plateau/experiment/experiment.hpp"

namespace plateau::cli {

/// Inclusive integer range "a", "a,b,c" or "a:b:step" (b included when
/// step divides b - a). Throws std::invalid_argument on malformed input.
std::vector<int> parse_int_range(const std::string& text);

enum class PlotKind { VsQubits, VsLayers };

PlotKind plot_kind_from_name(const std::string& name);

/// Self-contained semi-log SVG: variance points plus the analytic
/// prediction line. Throws std::invalid_argument when nothing is plottable.
std::string render_svg(std::span<const experiment::VarianceReport> reports,
                       PlotKind kind);

/// gnuplot script reproducing the same figure from the CSV, for external
/// tooling.
std::string render_gnuplot(const std::string& csv_path,
                           const std::string& svg_path, PlotKind kind);

/// Full command-line entry point. Exit codes: 0 success, 1 tolerance
/// failure (check commands), 2 flag/validation errors, 3 resource guard.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace plateau::cli
