#ifndef HIGGS_SERIALIZE_HPP
#define HIGGS_SERIALIZE_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "higgs/forms.hpp"
#include "higgs/matrix.hpp"
#include "higgs/poly.hpp"

namespace higgs {

using Json = nlohmann::ordered_json;

// Text grammar: sums and products of rationals, variables and
// parenthesized groups, with non-negative integer powers. Variables are
// x1..x4; x, y, z, w alias x1..x4.
Poly parse_poly(std::string_view text, std::size_t nvars);

// Tree form {nvars, terms: [{exps, num, den}]} with num/den as decimal
// strings; terms are emitted leading monomial first.
Json to_json(const Poly& p);
Json to_json(const Rational& q);
Json to_json(const OneForm& f);
Json to_json(const SymDiff& s);
Json to_json(const PolyMatrix& m);

// Readers accept either the tree form or a text string. `path` names the
// location in the enclosing document for error messages.
Poly poly_from_json(const Json& j, std::size_t nvars, const std::string& path);
Rational rational_from_json(const Json& j, const std::string& path);
OneForm oneform_from_json(const Json& j, std::size_t nvars, const std::string& path);
SymDiff symdiff_from_json(const Json& j, std::size_t nvars, const std::string& path);
PolyMatrix matrix_from_json(const Json& j, std::size_t nvars, const std::string& path);

}  // namespace higgs

#endif
