#include "gkz/io.hpp"

#include <charconv>
#include <cstdlib>

namespace gkz {

namespace {

void check_header(const Json& j, const char* kind) {
    if (!j.contains("schema") || j["schema"] != "v1")
        throw ValidationError("BadSchema", "expected schema v1");
    if (!j.contains("kind") || j["kind"] != kind)
        throw ValidationError("BadSchema", std::string("expected kind ") + kind);
}

const char* method_name(CoefficientMethod m) {
    switch (m) {
        case CoefficientMethod::Quadrature: return "quadrature";
        case CoefficientMethod::ClosedForm: return "closed_form";
        case CoefficientMethod::RegularizedClosed: return "regularized_closed";
    }
    return "quadrature";
}

CoefficientMethod method_from_name(const std::string& s) {
    if (s == "quadrature") return CoefficientMethod::Quadrature;
    if (s == "closed_form") return CoefficientMethod::ClosedForm;
    if (s == "regularized_closed") return CoefficientMethod::RegularizedClosed;
    throw ValidationError("BadSchema", "unknown coefficient method " + s);
}

} // namespace

Json complex_to_json(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

Json sector_point_to_json(const SectorPoint& p) {
    return Json{{"modulus", p.modulus}, {"argument", p.argument}};
}

SectorPoint sector_point_from_json(const Json& j) {
    return {j.at("modulus").get<double>(), j.at("argument").get<double>()};
}

std::string variant_name(SeriesVariant v) {
    switch (v) {
        case SeriesVariant::psi2: return "psi2";
        case SeriesVariant::phiGeneral: return "phiGeneral";
        case SeriesVariant::phiRestricted: return "phiRestricted";
    }
    return "psi2";
}

SeriesVariant variant_from_name(const std::string& name) {
    if (name == "psi2") return SeriesVariant::psi2;
    if (name == "phiGeneral") return SeriesVariant::phiGeneral;
    if (name == "phiRestricted") return SeriesVariant::phiRestricted;
    throw ValidationError("BadSchema", "unknown series variant " + name);
}

Json series_to_json(const FractionalSeries& s, const SeriesLabel& label) {
    Json j;
    j["schema"] = "v1";
    j["kind"] = "series";
    j["label"] = {{"A", label.A},
                  {"beta", complex_to_json(label.beta)},
                  {"j", label.j},
                  {"variant", variant_name(label.variant)}};
    j["base_exponents"] = Json::array();
    for (const auto& b : s.base_exponents) j["base_exponents"].push_back(complex_to_json(b));
    j["terms"] = Json::array();
    for (const auto& [off, c] : s.terms)
        j["terms"].push_back(Json{{"offsets", off}, {"re", c.real()}, {"im", c.imag()}});
    j["truncation"] = s.truncation;
    j["grading_weights"] = s.grading_weights;
    j["grading_shift"] = s.grading_shift;
    j["polynomial"] = s.polynomial;
    j["zero"] = s.is_zero();
    return j;
}

FractionalSeries series_from_json(const Json& j, SeriesLabel* label) {
    check_header(j, "series");
    FractionalSeries s;
    for (const auto& b : j.at("base_exponents")) s.base_exponents.push_back(complex_from_json(b));
    s.nvars = static_cast<int>(s.base_exponents.size());
    s.truncation = j.at("truncation").get<long long>();
    s.grading_weights = j.at("grading_weights").get<std::vector<int>>();
    s.grading_shift = j.at("grading_shift").get<long long>();
    s.polynomial = j.at("polynomial").get<bool>();
    for (const auto& t : j.at("terms")) {
        s.insert_term(t.at("offsets").get<std::vector<int>>(),
                      {t.at("re").get<double>(), t.at("im").get<double>()});
    }
    if (label) {
        const Json& l = j.at("label");
        label->A = l.at("A").get<std::vector<long long>>();
        label->beta = complex_from_json(l.at("beta"));
        label->j = l.at("j").get<int>();
        label->variant = variant_from_name(l.at("variant").get<std::string>());
    }
    return s;
}

Json cycle_to_json(const Cycle& c) {
    Json j;
    j["schema"] = "v1";
    j["kind"] = "cycle";
    j["terms"] = Json::array();
    for (const auto& term : c.terms) {
        Json segs = Json::array();
        for (const auto& s : term.segments) {
            switch (s.kind) {
                case PathSegment::Kind::RayOut:
                    segs.push_back({{"type", "ray_out"}, {"radius", s.radius}, {"arg", s.arg}});
                    break;
                case PathSegment::Kind::RayIn:
                    segs.push_back({{"type", "ray_in"}, {"radius", s.radius}, {"arg", s.arg}});
                    break;
                case PathSegment::Kind::Arc:
                    segs.push_back({{"type", "arc"},
                                    {"radius", s.radius},
                                    {"arg_from", s.arg_from},
                                    {"arg_to", s.arg_to}});
                    break;
                case PathSegment::Kind::HalfLineFromZero:
                    segs.push_back({{"type", "half_line"}, {"arg", s.arg}});
                    break;
            }
        }
        j["terms"].push_back(Json{{"weight", complex_to_json(term.weight)}, {"segments", segs}});
    }
    return j;
}

Cycle cycle_from_json(const Json& j) {
    check_header(j, "cycle");
    Cycle c;
    for (const auto& term : j.at("terms")) {
        CycleTerm t;
        t.weight = complex_from_json(term.at("weight"));
        for (const auto& seg : term.at("segments")) {
            std::string type = seg.at("type").get<std::string>();
            if (type == "ray_out")
                t.segments.push_back(PathSegment::ray_out(seg.at("radius").get<double>(),
                                                          seg.at("arg").get<double>()));
            else if (type == "ray_in")
                t.segments.push_back(PathSegment::ray_in(seg.at("radius").get<double>(),
                                                         seg.at("arg").get<double>()));
            else if (type == "arc")
                t.segments.push_back(PathSegment::arc(seg.at("radius").get<double>(),
                                                      seg.at("arg_from").get<double>(),
                                                      seg.at("arg_to").get<double>()));
            else if (type == "half_line")
                t.segments.push_back(PathSegment::half_line(seg.at("arg").get<double>()));
            else
                throw ValidationError("BadSchema", "unknown segment type " + type);
        }
        c.terms.push_back(std::move(t));
    }
    return c;
}

Json table_to_json(const CoefficientTable& t) {
    Json j;
    j["schema"] = "v1";
    j["kind"] = "coefficient_table";
    Json xs = Json::array();
    for (const auto& x : t.x_head) xs.push_back(sector_point_to_json(x));
    j["context"] = {{"A", t.A},
                    {"beta", complex_to_json(t.beta)},
                    {"p", t.p},
                    {"theta", t.theta},
                    {"x_head", xs}};
    auto disc = t.discrepancies();
    j["entries"] = Json::array();
    for (const auto& e : t.entries) {
        Json je{{"k", e.k},
                {"re", e.value.real()},
                {"im", e.value.imag()},
                {"method", method_name(e.method)},
                {"error", e.error},
                {"scale", e.scale}};
        if (e.cutoff_dependent) je["cutoff_dependent"] = true;
        if (e.method != CoefficientMethod::Quadrature && disc.count(e.k))
            je["discrepancy"] = disc[e.k];
        j["entries"].push_back(je);
    }
    Json diag = Json::object();
    if (t.gevrey_s) diag["gevrey_s"] = *t.gevrey_s;
    if (t.remainder_slope_value) diag["remainder_slope"] = *t.remainder_slope_value;
    j["diagnostics"] = diag;
    return j;
}

CoefficientTable table_from_json(const Json& j) {
    check_header(j, "coefficient_table");
    CoefficientTable t;
    const Json& ctx = j.at("context");
    t.A = ctx.at("A").get<std::vector<long long>>();
    t.beta = complex_from_json(ctx.at("beta"));
    t.p = ctx.at("p").get<long long>();
    t.theta = ctx.at("theta").get<double>();
    for (const auto& x : ctx.at("x_head")) t.x_head.push_back(sector_point_from_json(x));
    for (const auto& e : j.at("entries")) {
        CoefficientEntry ce;
        ce.k = e.at("k").get<long long>();
        ce.value = {e.at("re").get<double>(), e.at("im").get<double>()};
        ce.method = method_from_name(e.at("method").get<std::string>());
        ce.error = e.at("error").get<double>();
        ce.scale = e.at("scale").get<double>();
        ce.cutoff_dependent = e.value("cutoff_dependent", false);
        t.entries.push_back(ce);
    }
    const Json& diag = j.at("diagnostics");
    if (diag.contains("gevrey_s")) t.gevrey_s = diag["gevrey_s"].get<double>();
    if (diag.contains("remainder_slope"))
        t.remainder_slope_value = diag["remainder_slope"].get<double>();
    return t;
}

Json integral_to_json(const IntegralResult& r) {
    return Json{{"schema", "v1"},
                {"kind", "integral"},
                {"value", complex_to_json(r.value)},
                {"error_estimate", r.error}};
}

Complex parse_complex(const std::string& text) {
    // forms: "1.5", "-0.7+0.2i", "0.3-1i", "2i"
    std::string s = text;
    if (s.empty()) throw ValidationError("BadNumber", "empty complex literal");
    if (s.back() == 'i') {
        s.pop_back();
        // split at the last +/- that is not an exponent sign or leading sign
        size_t split = std::string::npos;
        for (size_t i = s.size(); i-- > 1;) {
            if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            if (s.empty() || s == "+" || s == "-") s += "1";
            return {0.0, std::strtod(s.c_str(), nullptr)};
        }
        std::string re = s.substr(0, split);
        std::string im = s.substr(split);
        if (im == "+" || im == "-") im += "1";
        return {std::strtod(re.c_str(), nullptr), std::strtod(im.c_str(), nullptr)};
    }
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw ValidationError("BadNumber", "cannot parse complex literal " + text);
    return {v, 0.0};
}

SectorPoint parse_sector_point(const std::string& text) {
    size_t at = text.find('@');
    if (at == std::string::npos)
        throw ValidationError("BadNumber", "points use mod@arg, got " + text);
    double mod = std::strtod(text.substr(0, at).c_str(), nullptr);
    std::string arg = text.substr(at + 1);
    double a;
    if (arg == "pi")
        a = 3.14159265358979323846;
    else if (arg == "-pi")
        a = -3.14159265358979323846;
    else
        a = std::strtod(arg.c_str(), nullptr);
    return {mod, a};
}

} // namespace gkz
