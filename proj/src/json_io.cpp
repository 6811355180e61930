#include <qmzv/json_io.hpp>

#include <qmzv/errors.hpp>

namespace qmzv
{

using nlohmann::json;

namespace
{

std::string canonical_basis(const std::string &basis)
{
    if (basis == "brackets" || basis == "eulerian-brackets")
        return "eulerian";
    return basis;
}

Rational rational_field(const json &j, const char *what)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(std::to_string(j.get<long long>())));
    throw ParseError(std::string(what) + " must be a rational string \"p/q\"");
}

} // namespace

json lincomb_to_json(const LinComb &c)
{
    json terms = json::array();
    for (const auto &[idx, coeff] : c.terms())
        terms.push_back({{"index", idx.entries()}, {"coeff", to_string(coeff)}});
    return {{"basis", c.basis()}, {"constant", to_string(c.constant())}, {"terms", terms}};
}

LinComb lincomb_from_json(const json &j)
{
    try {
        if (!j.is_object())
            throw ParseError("combination must be a JSON object");
        if (!j.contains("basis") || !j.at("basis").is_string())
            throw ParseError("combination needs a \"basis\" string");
        LinComb out(canonical_basis(j.at("basis").get<std::string>()));
        if (j.contains("constant"))
            out.add_constant(rational_field(j.at("constant"), "constant"));
        if (j.contains("terms")) {
            for (const auto &term : j.at("terms")) {
                std::vector<int> entries;
                for (const auto &e : term.at("index")) {
                    if (!e.is_number_integer() || e.get<long long>() < 1)
                        throw ParseError("index entries must be positive integers");
                    entries.push_back(e.get<int>());
                }
                out.add_term(Index(std::move(entries)), rational_field(term.at("coeff"), "coeff"));
            }
        }
        return out;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed combination: ") + e.what());
    }
}

IdentitySpec identity_from_json(const json &j)
{
    try {
        IdentitySpec spec;
        const json &lhs = j.at("lhs");
        spec.lhs_derived = lhs.value("d", false);
        spec.lhs = lincomb_from_json(lhs.at("lincomb"));
        spec.rhs = lincomb_from_json(j.at("rhs"));
        spec.conjectural = j.value("conjectural", false);
        return spec;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed identity: ") + e.what());
    }
}

json identity_to_json(const IdentitySpec &spec)
{
    json j = {{"lhs", {{"d", spec.lhs_derived}, {"lincomb", lincomb_to_json(spec.lhs)}}},
              {"rhs", lincomb_to_json(spec.rhs)}};
    if (spec.conjectural)
        j["conjectural"] = true;
    return j;
}

PolyFamily family_from_json(const std::string &name, const json &j)
{
    if (!j.is_object())
        throw ParseError("family file must map \"s\" to a coefficient list");
    std::map<int, Poly> polys;
    for (const auto &[key, value] : j.items()) {
        int s = 0;
        try {
            std::size_t used = 0;
            s = std::stoi(key, &used);
            if (used != key.size())
                throw ParseError("");
        } catch (const std::exception &) {
            throw ParseError("family key \"" + key + "\" is not a decimal integer");
        }
        if (!value.is_array() || value.empty())
            throw ParseError("family entry " + key + " must be a nonempty coefficient list");
        std::vector<Rational> coeffs;
        for (const auto &c : value)
            coeffs.push_back(rational_field(c, "coefficient"));
        if (sgn(coeffs.front()) != 0)
            throw InvalidFamilyError("family entry " + key + ": constant term must be \"0\"");
        polys.emplace(s, Poly(std::move(coeffs)));
    }
    return family_custom(name, polys);
}

json series_to_json(const QSeries &a)
{
    json coeffs = json::array();
    for (const auto &c : a.coefficients())
        coeffs.push_back(to_string(c));
    return {{"precision", a.precision()}, {"coefficients", coeffs}};
}

} // namespace qmzv
