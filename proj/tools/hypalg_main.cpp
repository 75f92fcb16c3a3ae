// hypalg: exact algebraicity classification of generalized hypergeometric
// series. Exit codes: 0 classified, 2 parse/validation error, 3 the series
// is not well defined.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hypalg/json_io.hpp"
#include "hypalg/svg.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hypalg::Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

hypalg::InputDocument load_input(const std::string& arg, bool recurrence) {
    std::string text = arg;
    if (std::filesystem::exists(arg) &&
        std::filesystem::is_regular_file(arg))
        text = read_file(arg);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return hypalg::load_input_json(text);
    if (recurrence && text.rfind("rec", first) != first)
        throw hypalg::ParseError("--recurrence expects 'rec:' input", 1, 1);
    return hypalg::parse_expression(text);
}

// F-form parameter lists (a | b) of a spec whose pair splits over Q, for
// the Christol check: the script-form top gains the extra 1, the bottom is
// used as-is.
std::optional<std::pair<std::vector<hypalg::Rational>,
                        std::vector<hypalg::Rational>>>
f_form_rational_parameters(const hypalg::HypergeomSpec& spec) {
    auto canon = hypalg::cancel_common(spec);
    auto params = hypalg::has_rational_parameters(canon.pair());
    if (!params) return std::nullopt;
    auto [top, bottom] = *params;
    top.push_back(hypalg::Rational(1));
    return std::make_pair(top, bottom);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact algebraicity classifier for generalized "
                 "hypergeometric series"};
    app.require_subcommand(0, 1);

    std::string input;
    std::string trace_path, diagram_path;
    std::string guess_spec;
    unsigned long terms = 0;
    bool globally_bounded = false, recurrence = false, parallel = false;

    CLI::App* cls = app.add_subcommand("classify", "decide algebraicity");
    cls->add_option("input", input,
                    "expression, recurrence, or input file (text or JSON)")
        ->required();
    cls->add_option("--trace", trace_path, "write a JSON trace document");
    cls->add_option("--diagram", diagram_path,
                    "write the interlacing diagram as SVG");
    cls->add_flag("--globally-bounded", globally_bounded,
                  "also run the almost-integrality counting criterion");
    cls->add_option("--terms", terms, "print the first n coefficients");
    cls->add_option("--guess", guess_spec,
                    "run the annihilator guesser at bidegree dx,dy");
    cls->add_flag("--recurrence", recurrence,
                  "treat the input as a first-order recurrence");
    cls->add_flag("--parallel", parallel,
                  "evaluate the lambda sweep concurrently");

    CLI11_PARSE(app, argc, argv);
    if (!*cls) {
        std::cerr << app.help() << "\n";
        return 2;
    }

    try {
        hypalg::InputDocument doc = load_input(input, recurrence);
        hypalg::HypergeomSpec spec = hypalg::to_spec(doc);
        hypalg::ClassifyOptions opts;
        opts.parallel_lambda = parallel;
        hypalg::ClassificationTrace trace = hypalg::classify(spec, opts);

        std::cout << hypalg::to_string(trace.verdict) << "\n";

        hypalg::OracleAttachments oracle;

        if (terms > 0) {
            auto prefix = hypalg::coefficients(spec, terms);
            for (std::size_t n = 0; n < prefix.coefficients.size(); ++n)
                std::cout << "u[" << n << "] = "
                          << hypalg::to_pretty_string(prefix.coefficients[n])
                          << "\n";
            oracle.prefix = std::move(prefix);
        }

        if (globally_bounded) {
            auto fparams = f_form_rational_parameters(spec);
            if (!fparams) {
                std::cout << "almost-integral: not applicable "
                             "(irrational parameters)\n";
            } else {
                hypalg::CriteriaOptions copt;
                copt.parallel = parallel;
                auto report = hypalg::christol_globally_bounded(
                    fparams->first, fparams->second, copt);
                std::cout << "almost-integral: "
                          << (report.satisfied ? "yes" : "no");
                if (report.witness) std::cout << " (" << *report.witness << ")";
                std::cout << "\n";
                oracle.globally_bounded = std::move(report);
            }
        }

        if (!guess_spec.empty()) {
            unsigned long dx = 0, dy = 0;
            if (std::sscanf(guess_spec.c_str(), "%lu,%lu", &dx, &dy) != 2)
                throw hypalg::ParseError("--guess expects dx,dy", 1, 1);
            unsigned long need = (dx + 1) * (dy + 1) + 10;
            auto prefix = hypalg::coefficients(spec, std::max(need, terms));
            auto ann = hypalg::guess_annihilator(prefix, dx, dy);
            oracle.annihilator_searched = true;
            oracle.guess_dx = dx;
            oracle.guess_dy = dy;
            if (ann) {
                std::cout << "annihilator (evidence, not proof): "
                          << ann->to_string() << "\n";
                oracle.annihilator = std::move(ann);
            } else {
                std::cout << "no annihilator at bidegree (" << dx << "," << dy
                          << "): evidence of transcendence, not proof\n";
            }
            if (!oracle.prefix) oracle.prefix = std::move(prefix);
        }

        if (!trace_path.empty()) {
            std::ofstream out(trace_path, std::ios::binary);
            if (!out)
                throw hypalg::Error("cannot write '" + trace_path + "'");
            out << hypalg::emit_trace_json(trace, oracle).dump(2) << "\n";
        }

        if (!diagram_path.empty()) {
            if (trace.ic_report) {
                hypalg::emit_interlacing_svg(*trace.ic_report, diagram_path);
            } else {
                std::cerr << "note: classification ended before the "
                             "interlacing check; no diagram written\n";
            }
        }
        return 0;
    } catch (const hypalg::IllDefinedError& e) {
        std::cerr << "ill-defined: " << e.what() << "\n";
        return 3;
    } catch (const hypalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
