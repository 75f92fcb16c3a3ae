#include "hypalg/json_io.hpp"

namespace hypalg {

namespace {

Json rational_json(const Rational& q) { return to_fraction_string(q); }

Json poly_json(const PolyQ& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(rational_json(c));
    return arr;
}

PolyQ poly_from_json(const Json& arr) {
    std::vector<Rational> coeff;
    for (const auto& c : arr)
        coeff.push_back(parse_rational_text(c.get<std::string>()));
    return PolyQ(std::move(coeff));
}

Json lambda_report_json(const LambdaReport& lr) {
    Json j;
    j["lambda"] = lr.lambda;
    auto points = [](const auto& pts) {
        Json arr = Json::array();
        for (const auto& [value, br] : pts) {
            Json p;
            p["value"] = rational_json(value);
            p["bracket"] = rational_json(br.value);
            arr.push_back(std::move(p));
        }
        return arr;
    };
    j["top"] = points(lr.sorted_top);
    j["bottom"] = points(lr.sorted_bottom);
    j["satisfied"] = lr.satisfied;
    if (lr.failure_witness) j["witness"] = *lr.failure_witness;
    return j;
}

Json criterion_report_json(const CriterionReport& report) {
    Json j;
    j["modulus"] = report.modulus;
    j["satisfied"] = report.satisfied;
    if (report.witness) j["witness"] = *report.witness;
    Json arr = Json::array();
    for (const auto& lr : report.per_lambda)
        arr.push_back(lambda_report_json(lr));
    j["per_lambda"] = std::move(arr);
    return j;
}

Json verdict_json(const Verdict& v) {
    Json j;
    switch (v.kind) {
    case Verdict::Kind::Polynomial:
        j["kind"] = "polynomial";
        j["degree_bound"] = v.degree_bound;
        j["algebraic"] = true;
        break;
    case Verdict::Kind::Algebraic:
        j["kind"] = "algebraic";
        j["algebraic"] = true;
        break;
    case Verdict::Kind::Transcendental:
        j["kind"] = "transcendental";
        j["algebraic"] = false;
        break;
    }
    return j;
}

} // namespace

Json emit_trace_json(const ClassificationTrace& trace,
                     const OracleAttachments& oracle) {
    Json j;
    j["schema_version"] = kTraceSchemaVersion;
    j["tool"] = "hypalg";
    j["tool_version"] = kToolVersion;
    j["verdict"] = verdict_json(trace.verdict);

    Json canonical;
    canonical["c_poly"] = poly_json(trace.canonical.c);
    canonical["d_poly"] = poly_json(trace.canonical.d);
    canonical["scale"] = rational_json(trace.scale);
    canonical["leading_value"] = rational_json(trace.leading_value);
    j["canonical"] = std::move(canonical);

    j["raw_contracted"] = trace.raw_contracted;
    j["raw_reduced"] = trace.raw_reduced;
    if (trace.truncation_shields_denominator_zero)
        j["truncation_shields_denominator_zero"] = true;

    Json nodes = Json::array();
    for (const auto& node : trace.nodes) {
        Json n;
        n["name"] = to_string(node.name);
        n["outcome"] = node.outcome;
        n["detail"] = node.detail;
        nodes.push_back(std::move(n));
    }
    j["nodes"] = std::move(nodes);

    Json steps = Json::array();
    for (const auto& s : trace.contraction_steps) {
        Json st;
        st["direction"] =
            s.direction == RemovalStep::Direction::top_minus_bottom
                ? "top_minus_bottom"
                : "bottom_minus_top";
        st["difference"] = s.difference;
        st["removed_factor"] = poly_json(s.removed_factor);
        st["pairs_removed"] = s.pairs_removed;
        steps.push_back(std::move(st));
    }
    j["contraction_steps"] = std::move(steps);

    Json contracted;
    contracted["c_poly"] = poly_json(trace.contracted.c);
    contracted["d_poly"] = poly_json(trace.contracted.d);
    j["contracted"] = std::move(contracted);

    if (trace.contracted_params) {
        Json params;
        Json top = Json::array(), bottom = Json::array();
        for (const auto& r : trace.contracted_params->first)
            top.push_back(rational_json(r));
        for (const auto& r : trace.contracted_params->second)
            bottom.push_back(rational_json(r));
        params["top"] = std::move(top);
        params["bottom"] = std::move(bottom);
        j["contracted_parameters"] = std::move(params);
    }

    if (trace.ic_report)
        j["ic_report"] = criterion_report_json(*trace.ic_report);

    if (oracle.prefix) {
        Json arr = Json::array();
        for (const auto& u : oracle.prefix->coefficients)
            arr.push_back(rational_json(u));
        j["coefficients"] = std::move(arr);
    }
    if (oracle.globally_bounded)
        j["globally_bounded"] =
            criterion_report_json(*oracle.globally_bounded);
    if (oracle.annihilator_searched) {
        Json g;
        g["bidegree"] = Json::array({oracle.guess_dx, oracle.guess_dy});
        g["found"] = oracle.annihilator.has_value();
        g["note"] = "guessed annihilators are evidence, not proof";
        if (oracle.annihilator) {
            Json rows = Json::array();
            for (unsigned long i = 0; i <= oracle.annihilator->dx; ++i) {
                Json row = Json::array();
                for (unsigned long jj = 0; jj <= oracle.annihilator->dy; ++jj)
                    row.push_back(rational_json(oracle.annihilator->at(i, jj)));
                rows.push_back(std::move(row));
            }
            g["coefficients"] = std::move(rows);
            g["pretty"] = oracle.annihilator->to_string();
        }
        j["annihilator_guess"] = std::move(g);
    }
    return j;
}

HypergeomSpec spec_from_trace_json(const Json& doc) {
    const Json& canonical = doc.at("canonical");
    return from_factor_pair(
        poly_from_json(canonical.at("c_poly")),
        poly_from_json(canonical.at("d_poly")),
        parse_rational_text(canonical.at("scale").get<std::string>()),
        parse_rational_text(
            canonical.at("leading_value").get<std::string>()));
}

Json input_document_to_json(const InputDocument& doc) {
    Json j;
    switch (doc.kind) {
    case InputDocument::Kind::pFq: j["kind"] = "pFq"; break;
    case InputDocument::Kind::scriptF: j["kind"] = "scriptF"; break;
    case InputDocument::Kind::recurrence: j["kind"] = "recurrence"; break;
    }
    if (doc.kind == InputDocument::Kind::recurrence) {
        j["u0"] = rational_json(doc.u0);
        j["A"] = poly_json(doc.rec_a);
        j["B"] = poly_json(doc.rec_b);
        return j;
    }
    Json top = Json::array(), bottom = Json::array();
    for (const auto& p : doc.top) top.push_back(print_parameter(p));
    for (const auto& p : doc.bottom) bottom.push_back(print_parameter(p));
    j["top"] = std::move(top);
    j["bottom"] = std::move(bottom);
    j["scale"] = rational_json(doc.scale);
    j["u0"] = rational_json(doc.u0);
    return j;
}

InputDocument input_document_from_json(const Json& j) {
    InputDocument doc;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "recurrence") {
        doc.kind = InputDocument::Kind::recurrence;
        doc.u0 = parse_rational_text(j.at("u0").get<std::string>());
        doc.rec_a = poly_from_json(j.at("A"));
        doc.rec_b = poly_from_json(j.at("B"));
        return doc;
    }
    if (kind == "pFq")
        doc.kind = InputDocument::Kind::pFq;
    else if (kind == "scriptF")
        doc.kind = InputDocument::Kind::scriptF;
    else
        throw Error("unknown input kind '" + kind + "'");
    for (const auto& p : j.at("top"))
        doc.top.push_back(parse_parameter_text(p.get<std::string>()));
    for (const auto& p : j.at("bottom"))
        doc.bottom.push_back(parse_parameter_text(p.get<std::string>()));
    if (j.contains("scale"))
        doc.scale = parse_rational_text(j.at("scale").get<std::string>());
    if (j.contains("u0"))
        doc.u0 = parse_rational_text(j.at("u0").get<std::string>());
    return doc;
}

InputDocument load_input_json(const std::string& text) {
    Json j = Json::parse(text);
    if (j.contains("expression"))
        return parse_expression(j.at("expression").get<std::string>());
    return input_document_from_json(j);
}

} // namespace hypalg
