#include "stabdyn/instance.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace stabdyn {

using nlohmann::json;

namespace {

// Coefficients are emitted as JSON integers when possible and as decimal
// strings otherwise; accept both plus the degenerate float-integer case.
BigInt coefficient_from_json(const json& j) {
    if (j.is_number_unsigned()) {
        return BigInt(j.get<std::uint64_t>());
    }
    if (j.is_number_integer()) {
        return BigInt(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
            throw ValidationError("coefficient string is not an integer");
        }
    }
    throw ValidationError("coefficient must be an integer or decimal string");
}

json coefficient_to_json(const BigInt& c) {
    static const BigInt max_plain = BigInt(1) << 62;
    if (c <= max_plain) {
        return json(c.convert_to<std::uint64_t>());
    }
    return json(c.str());
}

std::int64_t integer_from_json(const json& j, const char* what) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) {
        throw ValidationError(std::string(what) + " must be an integer");
    }
    return j.get<std::int64_t>();
}

double real_from_json(const json& j, const char* what) {
    if (!j.is_number()) {
        throw ValidationError(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

}  // namespace

json poly_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [degree, c] : p.terms()) {
        terms.push_back(json::array({json(degree), coefficient_to_json(c)}));
    }
    return terms;
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_array()) {
        throw ValidationError("polynomial must be a list of [degree, coeff]");
    }
    LaurentPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) {
            throw ValidationError(
                "polynomial term must be a [degree, coeff] pair");
        }
        const std::int64_t degree = integer_from_json(term[0], "degree");
        const BigInt c = coefficient_from_json(term[1]);
        if (c < 0) {
            throw ValidationError("coefficient must be nonnegative");
        }
        p.add_term(degree, c);
    }
    return p;
}

json matrix_to_json(const LaurentMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) {
            row.push_back(poly_to_json(m.at(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

LaurentMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw ValidationError("matrix must be a nonempty list of rows");
    }
    const int n = static_cast<int>(j.size());
    LaurentMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) {
            throw ValidationError("matrix rows must all have the same size");
        }
        for (int k = 0; k < n; ++k) {
            m.at(i, k) = poly_from_json(j[i][k]);
        }
    }
    return m;
}

json stability_to_json(const StabilityCondition& sigma) {
    return json{{"masses", sigma.masses}, {"phases", sigma.phases}};
}

StabilityCondition stability_from_json(const json& j) {
    if (!j.is_object() || !j.contains("masses") || !j.contains("phases")) {
        throw ValidationError(
            "stability condition must be {\"masses\": [...], \"phases\": "
            "[...]}");
    }
    StabilityCondition sigma;
    for (const auto& v : j.at("masses")) {
        sigma.masses.push_back(real_from_json(v, "mass"));
    }
    for (const auto& v : j.at("phases")) {
        sigma.phases.push_back(real_from_json(v, "phase"));
    }
    try {
        validate(sigma);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    return sigma;
}

json graded_object_to_json(const GradedObject& e) {
    json slots = json::array();
    for (int i = 0; i < e.simple_count(); ++i) {
        slots.push_back(poly_to_json(e.slot(i)));
    }
    return slots;
}

GradedObject graded_object_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw ValidationError(
            "graded object must be a nonempty list of slot polynomials");
    }
    GradedObject e(static_cast<int>(j.size()));
    for (int i = 0; i < static_cast<int>(j.size()); ++i) {
        e.slot(i) = poly_from_json(j[i]);
    }
    return e;
}

json auto_equivalence_to_json(const AutoEquivalence& alpha) {
    return json{{"permutation", alpha.permutation()},
                {"shifts", alpha.shifts()}};
}

AutoEquivalence auto_equivalence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("permutation") || !j.contains("shifts")) {
        throw ValidationError(
            "auto-equivalence must be {\"permutation\": [...], \"shifts\": "
            "[...]}");
    }
    std::vector<int> perm;
    std::vector<std::int64_t> shifts;
    for (const auto& v : j.at("permutation")) {
        perm.push_back(static_cast<int>(integer_from_json(v, "permutation")));
    }
    for (const auto& v : j.at("shifts")) {
        shifts.push_back(integer_from_json(v, "shift"));
    }
    try {
        return AutoEquivalence(std::move(perm), std::move(shifts));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
}

json rational_to_json(const Rational& r) {
    return json{{"num", r.num()}, {"den", r.den()}};
}

json isometry_report_to_json(const IsometryReport& report) {
    json orbits = json::array();
    json orbit_totals = json::array();
    for (const OrbitData& orbit : report.orbits) {
        orbit_totals.push_back(orbit.shift_total);
        orbits.push_back(json{{"members", orbit.members},
                              {"length", orbit.length},
                              {"shift_total", orbit.shift_total},
                              {"power_exponent", orbit.power_exponent},
                              {"rate", rational_to_json(orbit.rate)}});
    }
    return json{
        {"order_k", report.order},
        {"orbit_totals", orbit_totals},
        {"orbits", orbits},
        {"eventual_displacement",
         rational_to_json(report.eventual_displacement)},
        {"translation_length", rational_to_json(report.translation_length)},
        {"witness", stability_to_json(report.witness)},
        {"witness_displacement", report.witness_displacement},
        {"witness_attains", report.witness_attains},
        {"classification", report.classification},
        {"classification_by_definition", report.classification_by_definition},
    };
}

std::vector<double> parse_grid_spec(const std::string& spec) {
    double lo = 0.0, hi = 0.0;
    int n = 0;
    char trailing = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d%c", &lo, &hi, &n, &trailing) !=
        3) {
        throw ValidationError("grid must have the form lo:hi:n");
    }
    try {
        return uniform_grid(lo, hi, n);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
}

Instance parse_instance(const json& j) {
    if (!j.is_object()) {
        throw ValidationError("instance file must be a JSON object");
    }
    if (!j.contains("version") ||
        integer_from_json(j.at("version"), "version") != kInstanceVersion) {
        throw ValidationError("instance file must declare \"version\": 1");
    }
    Instance instance;
    if (j.contains("matrix")) {
        instance.matrix = matrix_from_json(j.at("matrix"));
    }
    if (j.contains("auto_equivalence")) {
        instance.functor = auto_equivalence_from_json(j.at("auto_equivalence"));
    }
    if (j.contains("stability")) {
        instance.stability = stability_from_json(j.at("stability"));
    }
    if (j.contains("stability_other")) {
        instance.stability_other =
            stability_from_json(j.at("stability_other"));
    }
    if (j.contains("grid")) {
        const json& g = j.at("grid");
        if (g.is_string()) {
            instance.grid = parse_grid_spec(g.get<std::string>());
        } else if (g.is_array()) {
            std::vector<double> grid;
            for (const auto& v : g) {
                grid.push_back(real_from_json(v, "grid point"));
            }
            instance.grid = std::move(grid);
        } else {
            throw ValidationError(
                "grid must be a list of reals or a \"lo:hi:n\" string");
        }
    }
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() &&
            !j.at("seed").is_number_integer()) {
            throw ValidationError("seed must be an integer");
        }
        instance.seed = j.at("seed").get<std::uint64_t>();
    }
    if (!instance.matrix && !instance.functor && !instance.stability) {
        throw ValidationError(
            "instance file must contain at least one of matrix, "
            "auto_equivalence, stability");
    }
    // Cross-field size consistency.
    int size = 0;
    auto check_size = [&size](int other, const char* what) {
        if (size == 0) {
            size = other;
        } else if (other != size) {
            throw ValidationError(std::string("inconsistent sizes: ") + what);
        }
    };
    if (instance.matrix) {
        check_size(instance.matrix->size(), "matrix");
    }
    if (instance.functor) {
        check_size(instance.functor->simple_count(), "auto_equivalence");
    }
    if (instance.stability) {
        check_size(instance.stability->simple_count(), "stability");
    }
    if (instance.stability_other) {
        check_size(instance.stability_other->simple_count(),
                   "stability_other");
    }
    return instance;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open instance file: " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    return parse_instance(j);
}

json instance_to_json(const Instance& instance) {
    json j{{"version", kInstanceVersion}};
    if (instance.matrix) {
        j["matrix"] = matrix_to_json(*instance.matrix);
    }
    if (instance.functor) {
        j["auto_equivalence"] = auto_equivalence_to_json(*instance.functor);
    }
    if (instance.stability) {
        j["stability"] = stability_to_json(*instance.stability);
    }
    if (instance.stability_other) {
        j["stability_other"] = stability_to_json(*instance.stability_other);
    }
    if (instance.grid) {
        j["grid"] = *instance.grid;
    }
    if (instance.seed) {
        j["seed"] = *instance.seed;
    }
    return j;
}

std::string format_double(double value) {
    char buffer[64];
    // Negative zero would leak a sign-dependent byte into otherwise
    // deterministic output.
    std::snprintf(buffer, sizeof(buffer), "%.17g", value + 0.0);
    return buffer;
}

namespace {

void append_csv_row(std::string& out, const EntropySample& s) {
    out += format_double(s.t);
    out += ',';
    out += format_double(s.value);
    out += ',';
    out += format_double(lower_basic(s));
    out += ',';
    out += format_double(upper_basic(s));
    out += ',';
    out += format_double(lower_sharp(s));
    out += '\n';
}

}  // namespace

std::string curve_to_csv(const EntropyCurve& curve) {
    std::string out = "t,h,lower_basic,upper_basic,lower_sharp\n";
    for (const EntropySample& s : curve.samples) {
        append_csv_row(out, s);
    }
    return out;
}

std::string closed_form_curve_to_csv(const ClosedForm& form,
                                     const std::vector<double>& grid) {
    const double h_zero = closed_form_h_zero(form);
    const ClosedFormSlopes slopes = closed_form_slopes(form);
    std::string out = "t,h,lower_basic,upper_basic,lower_sharp\n";
    for (double t : grid) {
        append_csv_row(out,
                       EntropySample{t, closed_form_mass_growth(form, t),
                                     slopes.phi_minus, slopes.phi_plus,
                                     h_zero});
    }
    return out;
}

}  // namespace stabdyn
