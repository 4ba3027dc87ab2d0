#pragma once

#include "clusterwp/toolkit.hpp"

#include <stdexcept>
#include <string>

namespace fixtures {

using namespace clusterwp;

inline Seed sl2() { return catalog("sl2").seed; }
inline Seed a3() { return catalog("a3").seed; }
inline Seed affine() { return catalog("affine-a11").seed; }
inline Seed markov() { return catalog("markov").seed; }

inline LaurentPoly poly(const std::string& s, const VarTablePtr& v) {
    auto l = as_laurent(parse_expression(s, v));
    if (!l) throw std::logic_error("not Laurent: " + s);
    return *l;
}

inline RationalFn expr(const std::string& s, const VarTablePtr& v) { return parse_expression(s, v); }

inline SymbolicForm form(const std::string& text, const Seed& chart) { return parse_form(text, chart, "test"); }

inline std::size_t index_of(const Seed& s, const std::string& name) {
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s.names()[k] == name) return k;
    throw std::logic_error("no variable " + name);
}

}  // namespace fixtures
