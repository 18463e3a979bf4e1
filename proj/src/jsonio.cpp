#include "cremona/jsonio.hpp"

#include <algorithm>
#include <set>

namespace cremona {

Json poly_to_json(const MPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["coef"] = c.str();
        terms.push_back(std::move(t));
    }
    Json j;
    j["vars"] = p.vars();
    j["terms"] = std::move(terms);
    return j;
}

MPoly poly_from_json(const Json& j) {
    if (!j.is_object()) throw StructuralError("polynomial JSON must be an object");
    reject_unknown_keys(j, {"vars", "terms"}, "polynomial");
    if (!j.contains("vars") || !j.contains("terms"))
        throw StructuralError("polynomial JSON needs 'vars' and 'terms'");
    if (!j["vars"].is_array()) throw StructuralError("'vars' must be an array");
    std::vector<std::string> vars;
    for (const auto& v : j["vars"]) {
        if (!v.is_string()) throw StructuralError("variable names must be strings");
        vars.push_back(v.get<std::string>());
    }
    if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size())
        throw StructuralError("duplicate variable name");
    MPoly p(vars);
    if (!j["terms"].is_array()) throw StructuralError("'terms' must be an array");
    for (const auto& t : j["terms"]) {
        if (!t.is_object()) throw StructuralError("term must be an object");
        reject_unknown_keys(t, {"exp", "coef"}, "term");
        if (!t.contains("exp") || !t.contains("coef"))
            throw StructuralError("term needs 'exp' and 'coef'");
        if (!t["exp"].is_array() || t["exp"].size() != vars.size())
            throw StructuralError("term exponent arity mismatch");
        Exponents e;
        for (const auto& x : t["exp"]) {
            if (!x.is_number_integer()) throw StructuralError("exponents must be integers");
            const int k = x.get<int>();
            if (k < 0) throw StructuralError("negative exponent");
            e.push_back(k);
        }
        if (!t["coef"].is_string()) throw StructuralError("coefficient must be a string");
        const Rat c = Rat::parse(t["coef"].get<std::string>());
        if (c.is_zero()) throw StructuralError("zero coefficient stored in term");
        if (!p.coeff(e).is_zero()) throw StructuralError("duplicate exponent vector");
        p.set_coeff(e, c);
    }
    return p;
}

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) throw StructuralError("rational must be a 'p/q' string");
    return Rat::parse(j.get<std::string>());
}

void reject_unknown_keys(const Json& j, const std::vector<std::string>& allowed,
                         const std::string& context) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw StructuralError("unknown key '" + it.key() + "' in " + context);
    }
}

}  // namespace cremona
