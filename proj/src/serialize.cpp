#include "fkf/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fkf/verifier.hpp"

namespace fkf {

namespace {

using nlohmann::json;

json balanced_terms_to_json(const BalancedPoly& bp) {
    json terms = json::array();
    for (const auto& [m, c] : bp.body.terms()) {
        json t;
        t["re"] = rational_to_string(c.re);
        t["im"] = rational_to_string(c.im);
        t["gamma"] = m.e_gamma;
        json mono = json::object();
        if (m.e_hbar3 != 0) mono["r2"] = m.e_hbar3;
        for (auto& [j, e] : m.e_h) mono[std::to_string(j)] = e;
        t["monomial"] = std::move(mono);
        terms.push_back(std::move(t));
    }
    return terms;
}

BalancedPoly balanced_from_json(int prefactor, const json& terms) {
    std::vector<Poly::Term> ts;
    for (const auto& t : terms) {
        Monomial m;
        m.e_gamma = t.at("gamma").get<int>();
        for (auto& [key, val] : t.at("monomial").items()) {
            if (key == "r2")
                m.e_hbar3 = val.get<int>();
            else
                m.set_h_exp(std::stoi(key), val.get<int>());
        }
        Gaussian c(rational_from_string(t.at("re").get<std::string>()),
                   rational_from_string(t.at("im").get<std::string>()));
        ts.emplace_back(std::move(m), std::move(c));
    }
    return BalancedPoly{prefactor, Poly::from_terms(std::move(ts))};
}

struct NamedCoeff {
    Component comp;
    int lambda_degree;
    const Poly* value;
};

std::vector<NamedCoeff> sorted_coeffs(const KillingState& st) {
    std::vector<NamedCoeff> out;
    for (Component k : all_components)
        for (auto& [d, p] : st.comps.get(k).entries()) out.push_back({k, d, &p});
    std::sort(out.begin(), out.end(), [](const NamedCoeff& a, const NamedCoeff& b) {
        if (a.lambda_degree != b.lambda_degree) return a.lambda_degree < b.lambda_degree;
        return component_name(a.comp) < component_name(b.comp);
    });
    return out;
}

std::string rational_latex(const Rational& r, bool times_i) {
    std::string num = mpz_class(r.get_num()).get_str();
    bool neg = false;
    if (!num.empty() && num[0] == '-') {
        neg = true;
        num = num.substr(1);
    }
    std::string body;
    if (r.get_den() == 1)
        body = (num == "1" && times_i) ? "" : num;
    else
        body = "\\frac{" + num + "}{" + mpz_class(r.get_den()).get_str() + "}";
    if (times_i) body += "i";
    return (neg ? "-" : "") + body;
}

std::string gamma_latex(int e) {
    if (e == 0) return "";
    std::string s = "\\gamma";
    if (e != 1) s += "^{" + std::to_string(e) + "}";
    return s;
}

// descending lexicographic scan from the highest z-index: z10, z9 z4,
// z8 z5, z8 z4^2, ..., z4^7 — the tower display order
bool display_before(const Monomial& a, const Monomial& b) {
    int top = std::max(a.max_h_index(), b.max_h_index());
    for (int j = top; j >= 4; --j) {
        if (a.h_exp(j) != b.h_exp(j)) return a.h_exp(j) > b.h_exp(j);
    }
    return a.e_hbar3 > b.e_hbar3;
}

// prefactor scalar * h3-power * (monic z-polynomial), mirroring the tower
// displays; the scalar is the coefficient of the top-order term.
std::string coeff_latex(Component k, int lambda_degree, const Poly& value) {
    std::string lhs = std::string(1, component_name(k)) + "^{" +
                      std::to_string(coeff_index(lambda_degree)) + "}";
    if (value.is_zero()) return lhs + " &= 0";

    BalancedPoly bp = to_balanced(value);
    std::vector<Poly::Term> terms(bp.body.terms().begin(), bp.body.terms().end());
    std::sort(terms.begin(), terms.end(), [](const Poly::Term& x, const Poly::Term& y) {
        return display_before(x.first, y.first);
    });

    Gaussian lead_c = terms.front().second;
    int lead_gamma = terms.front().first.e_gamma;
    Monomial strip;
    strip.e_gamma = lead_gamma;
    Poly monic = bp.body.divided_by_monomial(strip, lead_c);
    std::vector<Poly::Term> mterms(monic.terms().begin(), monic.terms().end());
    std::sort(mterms.begin(), mterms.end(), [](const Poly::Term& x, const Poly::Term& y) {
        return display_before(x.first, y.first);
    });

    std::string scalar;
    if (lead_c == Gaussian(1))
        scalar = "";
    else if (lead_c == Gaussian(-1))
        scalar = "-";
    else if (lead_c.is_real())
        scalar = rational_latex(lead_c.re, false);
    else if (lead_c.re == 0)
        scalar = rational_latex(lead_c.im, true);
    else
        scalar = "(" + lead_c.to_string() + ")";
    scalar += gamma_latex(lead_gamma);

    std::string h3;
    if (bp.prefactor_thirds != 0) {
        int p = bp.prefactor_thirds;
        std::string expo;
        if (p % 3 == 0)
            expo = std::to_string(p / 3);
        else
            expo = (p < 0 ? "-" : "") + std::string("\\frac{") + std::to_string(std::abs(p)) +
                   "}{3}";
        h3 = "h_3^{" + expo + "}";
    }

    std::string body;
    bool first = true;
    for (const auto& [m, c] : mterms) {
        std::string term;
        Rational r = c.re; // monic tower bodies are real
        bool neg = r < 0;
        Rational mag = neg ? Rational(-r) : r;
        if (!(mag == 1) || m.is_unit()) term += rational_latex(mag, false);
        for (auto jt = m.e_h.rbegin(); jt != m.e_h.rend(); ++jt) {
            term += "z_{" + std::to_string(jt->first) + "}";
            if (jt->second != 1) term += "^{" + std::to_string(jt->second) + "}";
        }
        if (m.e_hbar3 != 0) term += "r^{" + std::to_string(2 * m.e_hbar3) + "}";
        if (m.e_gamma != 0) term += gamma_latex(m.e_gamma);
        body += first ? (neg ? "-" : "") + term : (neg ? " - " : " + ") + term;
        first = false;
    }

    std::string prefix = scalar;
    if (!h3.empty()) prefix += (prefix.empty() || prefix == "-" ? "" : " ") + h3;
    if (prefix.empty() || prefix == "-") return lhs + " &= " + prefix + body;
    if (mterms.size() == 1 && mterms.front().first.is_unit()) return lhs + " &= " + prefix;
    if (mterms.size() == 1) return lhs + " &= " + prefix + body;
    return lhs + " &= " + prefix + "\\Big(" + body + "\\Big)";
}

} // namespace

json state_to_json(const KillingState& st) {
    json root;
    root["schema_version"] = schema_version;
    root["ansatz"] = ansatz_name(st.comps.ansatz);
    root["cycles"] = st.cycles_done;
    json coeffs = json::array();
    for (const auto& nc : sorted_coeffs(st)) {
        json c;
        c["name"] = std::string(1, component_name(nc.comp));
        c["index"] = coeff_index(nc.lambda_degree);
        c["lambda_degree"] = nc.lambda_degree;
        BalancedPoly bp = nc.value->is_zero() ? BalancedPoly{prefactor_thirds(nc.comp), Poly()}
                                              : to_balanced(*nc.value);
        c["prefactor_h3_thirds"] = bp.prefactor_thirds;
        c["terms"] = balanced_terms_to_json(bp);
        coeffs.push_back(std::move(c));
    }
    root["coefficients"] = std::move(coeffs);
    return root;
}

KillingState state_from_json(const json& root) {
    if (root.at("schema_version").get<int>() != schema_version)
        throw ParseError("unsupported schema_version");
    std::string an = root.at("ansatz").get<std::string>();
    KillingState st;
    if (an == "p4")
        st.comps.ansatz = Ansatz::P4;
    else if (an == "a5")
        st.comps.ansatz = Ansatz::A5;
    else
        throw ParseError("unknown ansatz '" + an + "'");
    st.cycles_done = root.at("cycles").get<int>();
    for (const auto& c : root.at("coefficients")) {
        std::string name = c.at("name").get<std::string>();
        if (name.size() != 1) throw ParseError("bad component name '" + name + "'");
        Component comp;
        switch (name[0]) {
            case 'p': comp = Component::p; break;
            case 'b': comp = Component::b; break;
            case 'c': comp = Component::c; break;
            case 'f': comp = Component::f; break;
            case 'a': comp = Component::a; break;
            case 'g': comp = Component::g; break;
            case 's': comp = Component::s; break;
            case 't': comp = Component::t; break;
            default: throw ParseError("bad component name '" + name + "'");
        }
        int deg = c.at("lambda_degree").get<int>();
        if (c.at("index").get<int>() != coeff_index(deg))
            throw ParseError("index/lambda_degree mismatch");
        BalancedPoly bp =
            balanced_from_json(c.at("prefactor_h3_thirds").get<int>(), c.at("terms"));
        Poly value = from_balanced(bp);
        st.tower_high_water = std::max(st.tower_high_water, value.max_h_index());
        st.comps.get(comp).set(deg, std::move(value));
    }
    return st;
}

std::string state_to_latex(const KillingState& st) {
    std::string out = "\\begin{align*}\n";
    for (const auto& nc : sorted_coeffs(st))
        out += coeff_latex(nc.comp, nc.lambda_degree, *nc.value) + ", \\\\\n";
    out += "\\end{align*}\n";
    return out;
}

std::string state_to_text(const KillingState& st) {
    std::string out;
    out += std::string("ansatz ") + ansatz_name(st.comps.ansatz) + ", cycles " +
           std::to_string(st.cycles_done) + "\n";
    for (const auto& nc : sorted_coeffs(st)) {
        BalancedPoly bp = nc.value->is_zero() ? BalancedPoly{} : to_balanced(*nc.value);
        std::string body;
        for (const auto& [m, c] : bp.body.terms()) {
            if (!body.empty()) body += " + ";
            std::string cs = c.to_string();
            if (cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
            body += cs;
            std::string ms = monomial_to_string(m, /*balanced=*/true);
            if (ms != "1") body += "*" + ms;
        }
        if (body.empty()) body = "0";
        out += std::string(1, component_name(nc.comp)) + "^" +
               std::to_string(coeff_index(nc.lambda_degree)) + " = h3^(" +
               std::to_string(bp.prefactor_thirds) + "/3) * [" + body + "]\n";
    }
    return out;
}

std::string report_to_json_line(const CheckReport& r) {
    json j;
    j["check"] = r.name;
    j["status"] = r.pass ? "pass" : "fail";
    j["detail"] = r.detail;
    if (r.witness) j["witness"] = r.witness->to_string();
    return j.dump();
}

void atomic_write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open " + tmp.string() + " for writing");
        f << content;
        if (!f.good()) throw Error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

} // namespace fkf
