#include "fkf/poly.hpp"

namespace fkf {

namespace {

void append_pow(std::string& s, const std::string& var, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
}

} // namespace

std::string monomial_to_string(const Monomial& m, bool balanced) {
    std::string s;
    append_pow(s, "gamma", m.e_gamma);
    if (!balanced) append_pow(s, "q", m.e_q);
    append_pow(s, balanced ? "r2" : "hb3", m.e_hbar3);
    for (auto& [j, e] : m.e_h) append_pow(s, (balanced ? "z" : "h") + std::to_string(j), e);
    return s.empty() ? "1" : s;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string cs = c.to_string();
        if (cs.find('+') != std::string::npos ||
            (cs.rfind('-') != std::string::npos && cs.rfind('-') > 0))
            cs = "(" + cs + ")";
        if (m.is_unit())
            s += cs;
        else if (c == Gaussian(1))
            s += monomial_to_string(m);
        else
            s += cs + "*" + monomial_to_string(m);
    }
    return s;
}

} // namespace fkf
