#pragma once

#include <string>
#include <vector>

#include "cremona/mpoly.hpp"

namespace testutil {

using cremona::MPoly;
using cremona::Rat;

inline std::vector<std::string> vars(std::initializer_list<const char*> names) {
    return {names.begin(), names.end()};
}

inline MPoly V(const std::vector<std::string>& vs, const std::string& name) {
    MPoly p(vs);
    return MPoly::variable(vs, p.var_index(name));
}

inline MPoly C(const std::vector<std::string>& vs, const Rat& c) {
    return MPoly::constant(vs, c);
}

inline MPoly C(const std::vector<std::string>& vs, long c) {
    return MPoly::constant(vs, Rat(c));
}

}  // namespace testutil
