#include "hypalg/svg.hpp"

#include <cmath>
#include <cstdio>

namespace hypalg {

namespace {

constexpr int kCell = 240;
constexpr int kRadius = 90;
constexpr int kPerRow = 3;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void append_point(std::string& out, double cx, double cy,
                  const Rational& bracket_value, const char* color,
                  int radius) {
    // exp(2 pi i <v>) with the angle measured counterclockwise from 1.
    double frac = static_cast<double>(num(bracket_value).convert_to<double>()) /
                  static_cast<double>(den(bracket_value).convert_to<double>());
    double angle = 2.0 * 3.14159265358979323846 * frac;
    double x = cx + kRadius * std::cos(angle);
    double y = cy - kRadius * std::sin(angle);
    out += "  <circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"" +
           std::to_string(radius) + "\" fill=\"" + color + "\"/>\n";
}

} // namespace

std::string interlacing_svg(const CriterionReport& report) {
    std::size_t count = report.per_lambda.size();
    std::size_t cols = count < kPerRow ? (count == 0 ? 1 : count) : kPerRow;
    std::size_t rows = count == 0 ? 1 : (count + kPerRow - 1) / kPerRow;
    std::size_t width = cols * kCell, height = rows * kCell;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" viewBox=\"0 0 " + std::to_string(width) + " " +
           std::to_string(height) + "\">\n";
    out += "  <!-- interlacing diagram, modulus N = " +
           std::to_string(report.modulus) + " -->\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t idx = 0; idx < report.per_lambda.size(); ++idx) {
        const LambdaReport& lr = report.per_lambda[idx];
        double cx = static_cast<double>((idx % kPerRow) * kCell + kCell / 2);
        double cy = static_cast<double>((idx / kPerRow) * kCell + kCell / 2);
        out += "  <circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
               "\" r=\"" + std::to_string(kRadius) +
               "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
        // tick at angle 0 (the class of the integers)
        out += "  <line x1=\"" + fmt(cx + kRadius - 4) + "\" y1=\"" + fmt(cy) +
               "\" x2=\"" + fmt(cx + kRadius + 4) + "\" y2=\"" + fmt(cy) +
               "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
        for (const auto& [value, br] : lr.sorted_top)
            append_point(out, cx, cy, br.value, "#cc2222", 6);
        for (const auto& [value, br] : lr.sorted_bottom)
            append_point(out, cx, cy, br.value, "#2244cc", 4);
        out += "  <text x=\"" + fmt(cx - kCell / 2 + 10) + "\" y=\"" +
               fmt(cy - kCell / 2 + 20) +
               "\" font-family=\"sans-serif\" font-size=\"14\">\xCE\xBB = " +
               std::to_string(lr.lambda) + "</text>\n";
        if (!lr.satisfied)
            out += "  <text x=\"" + fmt(cx - kCell / 2 + 10) + "\" y=\"" +
                   fmt(cy + kCell / 2 - 10) +
                   "\" font-family=\"sans-serif\" font-size=\"12\" "
                   "fill=\"#cc2222\">no interlacing</text>\n";
    }
    if (report.per_lambda.empty())
        out += "  <circle cx=\"" + fmt(kCell / 2.0) + "\" cy=\"" +
               fmt(kCell / 2.0) + "\" r=\"" + std::to_string(kRadius) +
               "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    out += "</svg>\n";
    return out;
}

void emit_interlacing_svg(const CriterionReport& report,
                          const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw Error("cannot open '" + path + "' for writing");
    std::string svg = interlacing_svg(report);
    std::size_t written = std::fwrite(svg.data(), 1, svg.size(), f);
    std::fclose(f);
    if (written != svg.size())
        throw Error("short write to '" + path + "'");
}

} // namespace hypalg
