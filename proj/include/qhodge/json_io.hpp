#pragma once

#include "json.hpp"

#include "qhodge/scalar_field.hpp"

namespace qhodge {

class AlgebraElement;
struct Monomial;
class UEAElement;
struct UEAMonomial;
class KForm;
template <class T>
class Matrix;
class ComplexQ;
class ParamPoly;
class ParamForm;

using Json = nlohmann::json;

// QRational: {"num": [[power, "p/r"], ...], "den": [...]}, powers of q
// ascending; half-integer powers (from q^{1/2}) are written as x.5.
Json to_json(const QRational& x);
QRational qrational_from_json(const Json& j);

Json to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);
Json to_json(const AlgebraElement& x);
AlgebraElement algebra_element_from_json(const Json& j);

Json to_json(const UEAMonomial& m);
UEAMonomial uea_monomial_from_json(const Json& j);
Json to_json(const UEAElement& x);
UEAElement uea_element_from_json(const Json& j);

/// {"degree": k, "coeffs": {"wm": ..., "wp": ..., "wz": ...}} with keys
/// named after the degree-k basis ("wm^wp", ..., "theta", "1").
Json to_json(const KForm& f);
KForm kform_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [[...], ...]}.
Json to_json(const Matrix<QRational>& m);
Matrix<QRational> qmatrix_from_json(const Json& j);

/// {"re": QRational, "im": QRational}.
Json to_json(const ComplexQ& z);
ComplexQ complexq_from_json(const Json& j);
/// {"terms": [{"powers": {"alpha": 1, ...}, "coeff": ComplexQ}], "text": "..."}.
Json to_json(const ParamPoly& p);
ParamPoly param_poly_from_json(const Json& j);
Json to_json(const Matrix<ParamPoly>& m);
/// Output only: {"degree", "coeffs": {basis name: [{"mono", "coeff"}]}, "text"}.
Json to_json(const ParamForm& f);

}  // namespace qhodge
