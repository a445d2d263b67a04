#include "qfin/report.hpp"

#include <cstdio>
#include <sstream>

namespace qfin {

using nlohmann::json;

std::string render_rational(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

std::string render_weight(const Weight& w) {
    std::string out;
    for (size_t i = 0; i < w.fund.size(); ++i) {
        if (i) out += ",";
        out += render_rational(w.fund[i]);
    }
    return out;
}

json render_cyclotomic(const Cyclotomic& x) {
    json coeffs = json::array();
    for (const auto& c : x.coefficients()) coeffs.push_back(render_rational(c));
    auto a = x.approx();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g%+.9gi", a.real(), a.imag());
    return json{{"conductor", x.conductor()}, {"coeffs", coeffs}, {"approx", buf}};
}

json render_spec(const RootSystem& rs, const RootOfUnitySpec& spec) {
    json mi = json::array();
    for (long v : spec.M_simple) mi.push_back(v);
    json malpha = json::array();
    for (size_t a = 0; a < rs.positive_roots.size(); ++a) {
        json root = json::array();
        for (long c : rs.positive_roots[a]) root.push_back(c);
        malpha.push_back(json{{"root", root},
                              {"d_alpha", rs.d_alpha[a]},
                              {"M_alpha", spec.M_per_root[a]}});
    }
    json at = json::array();
    for (const auto& row : spec.dual_cartan) {
        json r = json::array();
        for (long v : row) r.push_back(v);
        at.push_back(r);
    }
    return json{{"M", spec.M},
                {"parity", spec.even ? "even" : "odd"},
                {"M_i", mi},
                {"M_alpha", malpha},
                {"dual_type", spec.dual_type},
                {"role_swapped", spec.role_swapped},
                {"A_tilde", at}};
}

json render_gram_block(const GramBlock& blk) {
    json words = json::array();
    for (const auto& w : blk.words) {
        json jw = json::array();
        for (uint8_t letter : w) jw.push_back(letter + 1);  // 1-based in reports
        words.push_back(jw);
    }
    json matrix = json::array();
    for (const auto& row : blk.matrix) {
        json jr = json::array();
        for (const auto& v : row) jr.push_back(render_cyclotomic(v));
        matrix.push_back(jr);
    }
    return json{{"weight", render_weight(blk.weight)},
                {"words", words},
                {"matrix", matrix},
                {"rank", blk.rank},
                {"signature",
                 json{{"plus", blk.signature.n_plus},
                      {"zero", blk.signature.n_zero},
                      {"minus", blk.signature.n_minus}}}};
}

json render_module_report(const ModuleReport& rep) {
    json dims = json::object();
    for (const auto& [w, r] : rep.dims) dims[render_weight(w)] = r;
    return json{{"lambda", render_weight(rep.lambda)},
                {"form", rep.form.to_string()},
                {"dims", dims},
                {"total_dim", rep.total_dim},
                {"unitary", rep.unitary},
                {"classical_character", rep.classical_character},
                {"truncated", rep.truncated}};
}

json render_reality_algebra(const RealityAlgebra& ra) {
    json comps = json::array();
    for (const auto& c : ra.components) comps.push_back(c);
    json roots = json::array();
    for (size_t a : ra.passing_roots) roots.push_back(a);
    return json{{"label", ra.label},
                {"full", ra.full},
                {"components", comps},
                {"passing_root_indices", roots}};
}

std::string module_reports_csv(const std::vector<ModuleReport>& reports) {
    std::ostringstream os;
    os << "lambda,form,total_dim,unitary,classical_character,truncated,dims\n";
    for (const auto& rep : reports) {
        os << "\"" << render_weight(rep.lambda) << "\",\"" << rep.form.to_string() << "\","
           << rep.total_dim << "," << (rep.unitary ? "true" : "false") << ","
           << (rep.classical_character ? "true" : "false") << ","
           << (rep.truncated ? "true" : "false") << ",\"";
        bool first = true;
        for (const auto& [w, r] : rep.dims) {
            if (!first) os << ";";
            first = false;
            os << render_weight(w) << ":" << r;
        }
        os << "\"\n";
    }
    return os.str();
}

}  // namespace qfin
