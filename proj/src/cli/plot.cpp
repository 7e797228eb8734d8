#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "plateau/cli/cli.hpp"

namespace plateau::cli {

namespace {

struct Pt {
    double x, y;
};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string tick_label(int decade) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "1e%d", decade);
    return buf;
}

}  // namespace

std::string render_svg(std::span<const experiment::VarianceReport> reports,
                       PlotKind kind) {
    std::vector<Pt> data, pred;
    for (const auto& r : reports) {
        const double x =
            kind == PlotKind::VsQubits ? double(r.n_qubits) : double(r.n_layers);
        if (r.grad_var > 0.0) {
            data.push_back({x, r.grad_var});
        }
        if (r.predicted_var_2design > 0.0) {
            pred.push_back({x, r.predicted_var_2design});
        }
    }
    if (data.empty()) {
        throw std::invalid_argument("plot: no positive variance points");
    }
    auto by_x = [](const Pt& a, const Pt& b) { return a.x < b.x; };
    std::sort(data.begin(), data.end(), by_x);
    std::sort(pred.begin(), pred.end(), by_x);

    double xmin = data.front().x, xmax = data.back().x;
    for (const auto& p : pred) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
    }
    if (xmin == xmax) {
        xmin -= 1.0;
        xmax += 1.0;
    }
    double ymin = data.front().y, ymax = data.front().y;
    for (const auto& p : data) {
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    for (const auto& p : pred) {
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    int dlo = int(std::floor(std::log10(ymin)));
    int dhi = int(std::ceil(std::log10(ymax)));
    if (dlo == dhi) {
        --dlo;
        ++dhi;
    }

    constexpr double W = 720, H = 480, ML = 84, MR = 24, MT = 24, MB = 64;
    const auto mapx = [&](double x) {
        return ML + (x - xmin) / (xmax - xmin) * (W - ML - MR);
    };
    const auto mapy = [&](double y) {
        return MT + (double(dhi) - std::log10(y)) / double(dhi - dlo) *
                        (H - MT - MB);
    };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H
      << "\">\n";
    s << "<rect width=\"" << W << "\" height=\"" << H
      << "\" fill=\"white\"/>\n";

    // decade gridlines + labels
    for (int d = dlo; d <= dhi; ++d) {
        const double y = mapy(std::pow(10.0, d));
        s << "<line x1=\"" << fmt(ML) << "\" y1=\"" << fmt(y) << "\" x2=\""
          << fmt(W - MR) << "\" y2=\"" << fmt(y)
          << "\" stroke=\"#dddddd\"/>\n";
        s << "<text x=\"" << fmt(ML - 8) << "\" y=\"" << fmt(y + 4)
          << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">"
          << tick_label(d) << "</text>\n";
    }
    // x ticks
    const int span = int(std::lround(xmax - xmin));
    const int step = std::max(1, (span + 7) / 8);
    for (int x = int(std::ceil(xmin)); x <= int(std::floor(xmax)); x += step) {
        const double px = mapx(double(x));
        s << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(H - MB) << "\" x2=\""
          << fmt(px) << "\" y2=\"" << fmt(H - MB + 6)
          << "\" stroke=\"black\"/>\n";
        s << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(H - MB + 22)
          << "\" text-anchor=\"middle\" font-size=\"12\" "
             "font-family=\"sans-serif\">"
          << x << "</text>\n";
    }
    // frame
    s << "<rect x=\"" << fmt(ML) << "\" y=\"" << fmt(MT) << "\" width=\""
      << fmt(W - ML - MR) << "\" height=\"" << fmt(H - MT - MB)
      << "\" fill=\"none\" stroke=\"black\"/>\n";

    // prediction line
    if (pred.size() >= 2) {
        s << "<polyline fill=\"none\" stroke=\"#4477aa\" stroke-width=\"2\" "
             "stroke-dasharray=\"6 4\" points=\"";
        for (const auto& p : pred) {
            s << fmt(mapx(p.x)) << ',' << fmt(mapy(p.y)) << ' ';
        }
        s << "\"/>\n";
    }
    // data points
    for (const auto& p : data) {
        s << "<circle cx=\"" << fmt(mapx(p.x)) << "\" cy=\"" << fmt(mapy(p.y))
          << "\" r=\"4\" fill=\"#ee6677\" stroke=\"black\" "
             "stroke-width=\"0.8\"/>\n";
    }

    // axis titles and legend
    const char* xlabel = kind == PlotKind::VsQubits ? "qubits" : "layers";
    s << "<text x=\"" << fmt(ML + (W - ML - MR) / 2) << "\" y=\""
      << fmt(H - 16)
      << "\" text-anchor=\"middle\" font-size=\"14\" "
         "font-family=\"sans-serif\">"
      << xlabel << "</text>\n";
    s << "<text x=\"18\" y=\"" << fmt(MT + (H - MT - MB) / 2)
      << "\" text-anchor=\"middle\" font-size=\"14\" "
         "font-family=\"sans-serif\" transform=\"rotate(-90 18 "
      << fmt(MT + (H - MT - MB) / 2)
      << ")\">gradient variance</text>\n";
    s << "<circle cx=\"" << fmt(W - MR - 190) << "\" cy=\"" << fmt(MT + 14)
      << "\" r=\"4\" fill=\"#ee6677\" stroke=\"black\" "
         "stroke-width=\"0.8\"/>\n";
    s << "<text x=\"" << fmt(W - MR - 180) << "\" y=\"" << fmt(MT + 18)
      << "\" font-size=\"12\" font-family=\"sans-serif\">sample "
         "variance</text>\n";
    s << "<line x1=\"" << fmt(W - MR - 196) << "\" y1=\"" << fmt(MT + 32)
      << "\" x2=\"" << fmt(W - MR - 184) << "\" y2=\"" << fmt(MT + 32)
      << "\" stroke=\"#4477aa\" stroke-width=\"2\" "
         "stroke-dasharray=\"6 4\"/>\n";
    s << "<text x=\"" << fmt(W - MR - 180) << "\" y=\"" << fmt(MT + 36)
      << "\" font-size=\"12\" font-family=\"sans-serif\">2-design "
         "prediction</text>\n";

    s << "</svg>\n";
    return s.str();
}

std::string render_gnuplot(const std::string& csv_path,
                           const std::string& svg_path, PlotKind kind) {
    const int xcol = kind == PlotKind::VsQubits ? 1 : 2;
    const char* xlabel = kind == PlotKind::VsQubits ? "qubits" : "layers";
    std::ostringstream s;
    s << "# gnuplot script generated alongside " << svg_path << "\n";
    s << "set datafile separator \",\"\n";
    s << "set terminal svg size 720,480\n";
    s << "set output \"" << svg_path << "\"\n";
    s << "set logscale y\n";
    s << "set xlabel \"" << xlabel << "\"\n";
    s << "set ylabel \"gradient variance\"\n";
    s << "plot \"" << csv_path << "\" skip 1 using " << xcol
      << ":5 with points pt 7 title \"sample variance\", \\\n";
    s << "     \"" << csv_path << "\" skip 1 using " << xcol
      << ":8 with lines dt 2 title \"2-design prediction\"\n";
    return s.str();
}

}  // namespace plateau::cli
