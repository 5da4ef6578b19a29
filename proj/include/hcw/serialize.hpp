#pragma once

#include <sstream>
#include <string>

#include "linfty.hpp"

namespace hcw {

// Deterministic text form: monomial factors in canonical order, exponents
// collapsed, terms in canonical monomial order.
inline std::string to_string(const Monomial& m, const GradedAlgebra& A) {
    if (m.empty()) return "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < m.size()) {
        size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (!first) os << "*";
        os << A.gen(m[i]).name;
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

inline std::string to_string(const Element& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        Rat a = c;
        if (first) {
            if (a < Rat(0)) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < Rat(0) ? " - " : " + ");
            if (a < Rat(0)) a = -a;
        }
        if (a != Rat(1) || m.empty()) {
            os << to_string(a);
            if (!m.empty()) os << "*";
        }
        if (!m.empty()) os << to_string(m, *e.algebra());
        first = false;
    }
    return os.str();
}

// Presentation dump: generator table then one relation per generator.
inline std::string dump_presentation(const DGCA& A, const std::string& title) {
    std::ostringstream os;
    os << "algebra " << title << " [" << provenance_name(A.tag) << "]\n";
    os << "generators:\n";
    for (const auto& g : A.alg->gens())
        os << "  " << g.name << " : degree " << g.degree << (g.shifted ? " (shifted)" : "")
           << "\n";
    os << "relations:\n";
    for (GenId g = 0; g < A.alg->size(); ++g)
        os << "  d " << A.alg->gen(g).name << " = " << to_string(A.d.value(g)) << "\n";
    return os.str();
}

}  // namespace hcw
