#ifndef CQ_IO_HPP
#define CQ_IO_HPP

#include "cq/artin.hpp"
#include "cq/compat.hpp"
#include "cq/completed.hpp"
#include "cq/iarlimit.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

// JSON documents, schema "cq/1". Rationals are strings "p/q" in lowest terms,
// objects use sorted keys, so dump() is canonical.
namespace cq::io {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "cq/1";

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Rational& x);
Json to_json(const QVector& v);
Json to_json(const QMatrix& m);
Json to_json(const QPoly& p);
Json to_json(const QPolyMatrix& m);
Json to_json(const MPoly& p);
Json to_json(const QSubspace& s);
Json to_json(const BrokenQuadric& bq);
Json to_json(const ExteriorTuple& t);
Json to_json(const TyrrellCoords& c);
Json to_json(const ArtinAlgebra& a);
Json to_json(const SymDecomp& sd);
Json to_json(const PolySystem& sys);
Json to_json(const OperatorSpace& sp);

Rational rational_from(const Json& j);
QVector vector_from(const Json& j);
QMatrix matrix_from(const Json& j);
QPoly upoly_from(const Json& j);
QPolyMatrix poly_matrix_from(const Json& j);
MPoly mpoly_from(const Json& j);
QSubspace subspace_from(const Json& j, std::size_t ambient);
BrokenQuadric broken_quadric_from(const Json& j);
ExteriorTuple exterior_from(const Json& j);
TyrrellCoords tyrrell_from(const Json& j);
ArtinAlgebra algebra_from(const Json& j);
SymDecomp decomposition_from(const Json& j);
PolySystem system_from(const Json& j);

// Required member access with a ParseError naming the missing key.
const Json& member(const Json& j, const std::string& key);

} // namespace cq::io

#endif
