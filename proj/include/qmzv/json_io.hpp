#ifndef QMZV_JSON_IO_HPP
#define QMZV_JSON_IO_HPP

#include <map>
#include <string>

#include <json.hpp>

#include <qmzv/families.hpp>
#include <qmzv/lincomb.hpp>
#include <qmzv/series.hpp>

namespace qmzv
{

// {"basis": str, "constant": "p/q", "terms": [{"index": [..], "coeff": "p/q"}, ...]}
// Terms in canonical order (weight, length, lex); rationals as strings.
nlohmann::json lincomb_to_json(const LinComb &c);
LinComb lincomb_from_json(const nlohmann::json &j);

// {"lhs": {"d": bool, "lincomb": LinComb}, "rhs": LinComb, "conjectural": bool?}
struct IdentitySpec
{
    LinComb lhs;
    bool lhs_derived = false;
    LinComb rhs;
    bool conjectural = false;
};

IdentitySpec identity_from_json(const nlohmann::json &j);
nlohmann::json identity_to_json(const IdentitySpec &spec);

// {"2": ["0", "1"], "3": ["0", "1", "1"]} -> family; constant term must be "0".
PolyFamily family_from_json(const std::string &name, const nlohmann::json &j);

nlohmann::json series_to_json(const QSeries &a);

} // namespace qmzv

#endif
