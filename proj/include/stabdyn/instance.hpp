#pragma once

// On-disk formats.  Instance files are JSON with a version field:
//
// {
//   "version": 1,
//   "matrix": [[[[0, 1], [2, 3]], ...], ...],   // rows of Laurent polys
//   "auto_equivalence": {"permutation": [1, 0], "shifts": [1, 0]},
//   "stability": {"masses": [...], "phases": [...]},
//   "stability_other": {"masses": [...], "phases": [...]},
//   "grid": [t0, t1, ...] or "lo:hi:n",
//   "seed": 42
// }
//
// Every section is optional, but at least one of matrix / auto_equivalence /
// stability must be present.  A Laurent polynomial is a list of
// [degree, coefficient] pairs sorted by degree; coefficients are emitted as
// JSON integers when they fit in 64 bits and as decimal strings otherwise
// (both are accepted on input).  Entropy curves serialize to CSV with header
// "t,h,lower_basic,upper_basic,lower_sharp", '.' decimal separator, LF line
// endings, 17 significant digits.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabdyn/catalog.hpp"
#include "stabdyn/dynamics.hpp"
#include "stabdyn/laurent.hpp"
#include "stabdyn/perron.hpp"
#include "stabdyn/rational.hpp"
#include "stabdyn/semisimple.hpp"

namespace stabdyn {

inline constexpr int kInstanceVersion = 1;

// Malformed input of any kind; the CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Instance {
    std::optional<LaurentMatrix> matrix;
    std::optional<AutoEquivalence> functor;
    std::optional<StabilityCondition> stability;
    std::optional<StabilityCondition> stability_other;
    std::optional<std::vector<double>> grid;
    std::optional<std::uint64_t> seed;
};

nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const LaurentMatrix& m);
LaurentMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json stability_to_json(const StabilityCondition& sigma);
StabilityCondition stability_from_json(const nlohmann::json& j);

nlohmann::json graded_object_to_json(const GradedObject& e);
GradedObject graded_object_from_json(const nlohmann::json& j);

nlohmann::json auto_equivalence_to_json(const AutoEquivalence& alpha);
AutoEquivalence auto_equivalence_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rational& r);  // {"num": ..., "den": ...}

nlohmann::json isometry_report_to_json(const IsometryReport& report);

// "lo:hi:n" -> uniform grid.  Throws ValidationError on malformed input.
std::vector<double> parse_grid_spec(const std::string& spec);

Instance parse_instance(const nlohmann::json& j);
Instance load_instance(const std::string& path);
nlohmann::json instance_to_json(const Instance& instance);

// 17 significant digits, C locale.
std::string format_double(double value);

std::string curve_to_csv(const EntropyCurve& curve);

// Closed-form catalog curve in the same CSV shape.  Throws
// std::domain_error for entries without a curve (serre-dim).
std::string closed_form_curve_to_csv(const ClosedForm& form,
                                     const std::vector<double>& grid);

}  // namespace stabdyn
