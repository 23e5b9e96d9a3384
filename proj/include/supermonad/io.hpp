#pragma once

#include "supermonad/bwb.hpp"
#include "supermonad/decomp.hpp"
#include "supermonad/ktheory.hpp"
#include "supermonad/monad.hpp"
#include "supermonad/sheaves.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace supermonad::io {

using Json = nlohmann::ordered_json;

/// Rationals are always "p/q" strings (or "p"); integers in the library's
/// arbitrary precision also go out as JSON numbers when they fit.
Json rational_json(const Rational& q);
Json integer_json(const Integer& z);
Rational parse_rational_json(const Json& j, const char* field);

Json weight_json(const std::vector<std::int64_t>& parts);

/// {"n":2,"summands":[{"weight":[2,0],"twist":1,"mult":1}]}
Json bundle_json(const BundleExpr& b);
BundleExpr parse_bundle(const Json& j, std::size_t n);

/// "O(1) + (Sym^2Q*)(1)"
std::string describe(const BundleExpr& b);

/// {"n":int,"window":[a,b],"rows":{"i":{"j":"p/q"}}}, zeros omitted.
Json table_json(const CohomologyTable& t);
CohomologyTable parse_table(const Json& j);

/// Degree rows n..0 top-down, twist columns left to right, "." for zero.
std::string render_table(const CohomologyTable& t);

/// Sheaf expressions:
///   {"n":2,"terms":[{"coeff":"1/3","bundle":{...}},
///                   {"linear":{"m":1,"d":0}},
///                   {"supernatural":{"roots":[0,-2],"scale":"2"}},
///                   {"table":{...}}]}
/// A bare bundle object ({"n":..,"summands":[..]}) is accepted as well.
SheafExpr parse_sheaf(const Json& j);
Json sheaf_json(const SheafExpr& f);

/// Text that is either inline JSON or "@path".
Json load_json_arg(const std::string& text, const char* field);

Json page_json(const SpectralPage& page);
std::string render_page(const SpectralPage& page);

Json filtration_json(const Filtration& f);
Json resolution_json(const Resolution& r);
Json strands_json(const TwoStrandReport& r, const MonadData& m);
Json convergence_json(const Convergence& c, const MonadData& m);
std::string render_convergence(const Convergence& c, const MonadData& m);

/// [{"roots":[ints],"coeff":"p/q"}]
Json decomposition_json(const BSDecomposition& d);
BSDecomposition parse_decomposition(const Json& j, std::size_t n);

Json coordinates_json(const std::vector<Rational>& v);

} // namespace supermonad::io
