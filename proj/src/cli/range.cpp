#include <stdexcept>
#include <string>

#include "plateau/cli/cli.hpp"

namespace plateau::cli {

namespace {

int parse_int_strict(const std::string& s) {
    std::size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid integer '" + s + "'");
    }
    if (pos != s.size()) {
        throw std::invalid_argument("invalid integer '" + s + "'");
    }
    return v;
}

}  // namespace

std::vector<int> parse_int_range(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty range");
    }
    std::vector<int> out;
    if (text.find(':') != std::string::npos) {
        // a:b:step (step optional, default 1)
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (;;) {
            const std::size_t colon = text.find(':', start);
            parts.push_back(text.substr(start, colon - start));
            if (colon == std::string::npos) {
                break;
            }
            start = colon + 1;
        }
        if (parts.size() < 2 || parts.size() > 3) {
            throw std::invalid_argument("range must be a:b or a:b:step, got '" +
                                        text + "'");
        }
        const int a = parse_int_strict(parts[0]);
        const int b = parse_int_strict(parts[1]);
        const int step = parts.size() == 3 ? parse_int_strict(parts[2]) : 1;
        if (step < 1) {
            throw std::invalid_argument("range step must be >= 1");
        }
        if (b < a) {
            throw std::invalid_argument("range end must be >= start");
        }
        for (int v = a; v <= b; v += step) {
            out.push_back(v);
        }
        return out;
    }
    // comma list or single value
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_int_strict(text.substr(start, comma - start)));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

PlotKind plot_kind_from_name(const std::string& name) {
    if (name == "vs-qubits") return PlotKind::VsQubits;
    if (name == "vs-layers") return PlotKind::VsLayers;
    throw std::invalid_argument("unknown plot kind '" + name +
                                "' (expected vs-qubits or vs-layers)");
}

}  // namespace plateau::cli
