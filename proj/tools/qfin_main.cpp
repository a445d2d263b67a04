// Batch front-end: deterministic JSON/CSV reports for unitarity tables,
// spectral data, classification tables, and verification suites.

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <iostream>
#include <json.hpp>

#include "qfin/report.hpp"

using namespace qfin;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string algebra;
    std::string q = "1/4";
    long height_budget = 40;
    std::string format = "json";
    std::string output;
};

RootSystem parse_algebra(const std::string& text) {
    if (text.size() < 2)
        throw std::invalid_argument("algebra must look like A2, B3, ...: got \"" + text + "\"");
    char series = static_cast<char>(std::toupper(text[0]));
    long rank = std::stol(text.substr(1));
    return build_root_system(series, rank);
}

Weight parse_weight(const std::string& text, long rank) {
    std::vector<Rational> coords;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        Rational r(cur);
        r.canonicalize();
        coords.push_back(r);
    }
    if (static_cast<long>(coords.size()) != rank)
        throw std::invalid_argument("weight \"" + text + "\" has wrong rank");
    return Weight(std::move(coords));
}

std::vector<long> parse_longs(const std::string& text, long rank, const char* what) {
    std::vector<long> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) out.push_back(std::stol(cur));
    if (static_cast<long>(out.size()) != rank)
        throw std::invalid_argument(std::string(what) + " \"" + text + "\" has wrong rank");
    return out;
}

// Either an explicit sign vector ("+,-") or a shift vector p resolving
// through the one-dimensional modules; both paths land in the report.
struct FormChoice {
    RealForm form;
    bool via_shift = false;
    std::vector<long> p;
    Weight lambda_r;
};

FormChoice resolve_form(const std::string& form_text, const std::string& shift_text,
                        const RootSystem& rs, const RootOfUnitySpec& spec) {
    FormChoice out;
    if (!shift_text.empty()) {
        out.via_shift = true;
        out.p = parse_longs(shift_text, rs.rank, "shift");
        SingletData sd = singlet_weights(rs, spec, out.p);
        out.form = sd.form;
        out.lambda_r = sd.lambda_r;
        return out;
    }
    if (form_text.empty() || form_text == "compact") {
        out.form = RealForm::compact(rs.rank);
        return out;
    }
    std::string cur;
    std::istringstream is(form_text);
    while (std::getline(is, cur, ',')) {
        if (cur == "+" || cur == "+1" || cur == "1")
            out.form.s.push_back(1);
        else if (cur == "-" || cur == "-1")
            out.form.s.push_back(-1);
        else
            throw std::invalid_argument("form entries must be + or -: got \"" + cur + "\"");
    }
    if (static_cast<long>(out.form.s.size()) != rs.rank)
        throw std::invalid_argument("form \"" + form_text + "\" has wrong rank");
    return out;
}

json config_json(const CommonOpts& opts, const json& extra) {
    json cfg{{"algebra", opts.algebra},
             {"q", opts.q},
             {"height_budget", opts.height_budget},
             {"format", opts.format},
             {"output", opts.output.empty() ? "-" : opts.output}};
    for (auto it = extra.begin(); it != extra.end(); ++it) cfg[it.key()] = it.value();
    return cfg;
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(opts.output, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file " + opts.output);
    os << text;
}

void emit_json(const CommonOpts& opts, json doc) {
    doc["version"] = kVersion;
    emit(opts, doc.dump(2) + "\n");
}

// Flat key=value config file; '#' starts a comment. Keys use the long flag
// names without the leading dashes. Explicit command-line flags win.
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open config file " + path);
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) out[key] = val;
    }
    return out;
}

json form_choice_json(const FormChoice& fc) {
    json j{{"s", fc.form.to_string()}, {"via_shift", fc.via_shift}};
    if (fc.via_shift) {
        json p = json::array();
        for (long v : fc.p) p.push_back(v);
        j["p"] = p;
        j["lambda_r"] = render_weight(fc.lambda_r);
    }
    return j;
}

// Dominant integral weights with coordinates <= cap, sorted.
std::vector<Weight> dominant_box(const RootSystem& rs, long cap) {
    std::vector<Weight> out;
    std::vector<long> coords(rs.rank, 0);
    while (true) {
        std::vector<Rational> c(coords.begin(), coords.end());
        out.push_back(Weight(std::move(c)));
        long pos = rs.rank - 1;
        while (pos >= 0 && coords[pos] == cap) coords[pos--] = 0;
        if (pos < 0) break;
        ++coords[pos];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact unitary representation tables for finite quantum groups at roots of unity"};
    app.set_config("--config", "", "key=value config file (same names as the long flags)");
    app.require_subcommand(1);

    CommonOpts opts;
    std::string lambda_text, lambda0_text, form_text = "compact", shift_text, target_text;
    std::string z_text, p_text, config_path;
    long max_weight = 4, kmax = 4, node = 1, zmax = 1, height = 8;

    auto add_common = [&](CLI::App* cmd, bool needs_q = true) {
        cmd->add_option("--config", config_path,
                        "key=value config file (same names as the long flags)");
        cmd->add_option("--algebra", opts.algebra, "series and rank, e.g. A2");
        if (needs_q) cmd->add_option("--q", opts.q, "root of unity n/m, q = e^{2 pi i n/m}");
        cmd->add_option("--height-budget", opts.height_budget, "descent budget")
            ->envname("QFIN_HEIGHT_BUDGET");
        cmd->add_option("--format", opts.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--output", opts.output, "output path (default stdout)");
    };

    CLI::App* c_spec = app.add_subcommand("spec", "root-of-unity spectral data");
    add_common(c_spec);

    CLI::App* c_dual = app.add_subcommand("dual", "dual Cartan matrix and algebra type");
    add_common(c_dual);

    CLI::App* c_points = app.add_subcommand("special-points", "special points of the rescaled lattice");
    add_common(c_points);
    c_points->add_option("--zmax", zmax, "coordinate range |z_i| <= zmax");

    CLI::App* c_table = app.add_subcommand("unitary-table", "unitarity verdicts over a weight box");
    add_common(c_table);
    c_table->add_option("--form", form_text, "compact or sign list like +,-");
    c_table->add_option("--shift", shift_text, "integer shift vector p resolving the form");
    c_table->add_option("--max-weight", max_weight, "coordinate bound of the table box");

    CLI::App* c_gram = app.add_subcommand("gram", "one Gram block with rank and signature");
    add_common(c_gram);
    c_gram->add_option("--lambda", lambda_text, "highest weight, rational coords");
    c_gram->add_option("--form", form_text, "compact or sign list");
    c_gram->add_option("--shift", shift_text,
                       "shift vector p; lambda_r is added to --lambda and the form "
                       "comes from the one-dimensional module");
    c_gram->add_option("--target", target_text, "descent vector n_1,...,n_r");

    CLI::App* c_shift = app.add_subcommand("shift-check", "shift equivalence of Gram blocks");
    add_common(c_shift);
    c_shift->add_option("--lambda0", lambda0_text, "compact highest weight in the box");
    c_shift->add_option("--p", p_text, "integer shift vector");
    c_shift->add_option("--height", height, "compare blocks up to this height");

    CLI::App* c_limit = app.add_subcommand("limit-scan", "unitarity along q_k -> 1");
    add_common(c_limit);
    c_limit->add_option("--lambda", lambda_text, "fixed highest weight");
    c_limit->add_option("--node", node, "hermitian node i0 (1-based)");
    c_limit->add_option("--kmax", kmax, "number of stages");

    CLI::App* c_frob = app.add_subcommand("frobenius-check", "tilde data and factorisation checks");
    add_common(c_frob);
    c_frob->add_option("--z", z_text, "special point coordinates");
    c_frob->add_option("--lambda0", lambda0_text, "box weight for the tensor check");

    CLI::App* c_real = app.add_subcommand("reality-algebra", "reality-preserving subalgebra");
    add_common(c_real);

    CLI::App* c_forms = app.add_subcommand("classify-forms", "hermitian nodes and form names");
    add_common(c_forms, /*needs_q=*/false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            CLI::App* active = app.get_subcommands().at(0);
            auto cfg = read_config_file(config_path);
            auto take_string = [&](const char* key, std::string& slot) {
                auto it = cfg.find(key);
                auto* opt = active->get_option_no_throw(std::string("--") + key);
                if (it != cfg.end() && opt && opt->count() == 0) slot = it->second;
            };
            auto take_long = [&](const char* key, long& slot) {
                auto it = cfg.find(key);
                auto* opt = active->get_option_no_throw(std::string("--") + key);
                if (it != cfg.end() && opt && opt->count() == 0) slot = std::stol(it->second);
            };
            take_string("algebra", opts.algebra);
            take_string("q", opts.q);
            take_string("format", opts.format);
            take_string("output", opts.output);
            take_string("lambda", lambda_text);
            take_string("lambda0", lambda0_text);
            take_string("form", form_text);
            take_string("shift", shift_text);
            take_string("target", target_text);
            take_string("z", z_text);
            take_string("p", p_text);
            take_long("height-budget", opts.height_budget);
            take_long("max-weight", max_weight);
            take_long("kmax", kmax);
            take_long("node", node);
            take_long("zmax", zmax);
            take_long("height", height);
        }
        if (opts.algebra.empty()) throw std::invalid_argument("--algebra is required");
        RootSystem rs = parse_algebra(opts.algebra);
        if (opts.format == "csv" && !c_table->parsed())
            throw std::invalid_argument("csv output is only defined for unitary-table");

        if (c_forms->parsed()) {
            json nodes = json::array();
            for (const auto& h : hermitian_nodes(rs))
                nodes.push_back(json{{"node", h.node}, {"form", h.form_name}});
            json labels = json::array();
            for (long a : rs.coxeter_labels) labels.push_back(a);
            emit_json(opts, json{{"command", "classify-forms"},
                                 {"config", config_json(opts, {})},
                                 {"coxeter_labels", labels},
                                 {"hermitian_nodes", nodes}});
            return 0;
        }

        QRoot q = QRoot::parse(opts.q);
        RootOfUnitySpec spec = compute_spec(rs, q);

        if (c_spec->parsed()) {
            emit_json(opts, json{{"command", "spec"},
                                 {"config", config_json(opts, {})},
                                 {"spec", render_spec(rs, spec)}});
        } else if (c_dual->parsed()) {
            auto [at, label] = dual_algebra(spec);
            json atj = json::array();
            for (const auto& row : at) {
                json r = json::array();
                for (long v : row) r.push_back(v);
                atj.push_back(r);
            }
            emit_json(opts, json{{"command", "dual"},
                                 {"config", config_json(opts, {})},
                                 {"dual_type", label},
                                 {"role_swapped", spec.role_swapped},
                                 {"A_tilde", atj}});
        } else if (c_points->parsed()) {
            json points = json::array();
            std::vector<long> z(rs.rank, -zmax);
            while (true) {
                Weight lz = Weight::zero(rs.rank);
                for (long i = 0; i < rs.rank; ++i)
                    lz.fund[i] = Rational(z[i] * spec.M_simple[i]);
                json zj = json::array();
                for (long v : z) zj.push_back(v);
                points.push_back(json{{"z", zj},
                                      {"lambda_z", render_weight(lz)},
                                      {"special", is_special_point(lz, spec)},
                                      {"on_all_hyperplanes", hyperplane_check(lz, rs, spec)}});
                long pos = rs.rank - 1;
                while (pos >= 0 && z[pos] == zmax) z[pos--] = -zmax;
                if (pos < 0) break;
                ++z[pos];
            }
            emit_json(opts, json{{"command", "special-points"},
                                 {"config", config_json(opts, {{"zmax", zmax}})},
                                 {"spec", render_spec(rs, spec)},
                                 {"points", points}});
        } else if (c_table->parsed()) {
            FormChoice fc = resolve_form(form_text, shift_text, rs, spec);
            std::vector<ModuleReport> reports;
            json rows = json::array();
            for (const Weight& lambda0 : dominant_box(rs, max_weight)) {
                Weight lambda = fc.via_shift ? lambda0 + fc.lambda_r : lambda0;
                ModuleReport rep = module_report(rs, spec, lambda, fc.form,
                                                 opts.height_budget);
                json row = render_module_report(rep);
                row["certified_by_bound"] = compact_bound_check(lambda0, rs, spec);
                rows.push_back(row);
                reports.push_back(std::move(rep));
            }
            if (opts.format == "csv") {
                emit(opts, module_reports_csv(reports));
            } else {
                emit_json(opts,
                          json{{"command", "unitary-table"},
                               {"config", config_json(opts, {{"max_weight", max_weight},
                                                             {"form", form_choice_json(fc)}})},
                               {"spec", render_spec(rs, spec)},
                               {"results", rows}});
            }
        } else if (c_gram->parsed()) {
            Weight lambda = parse_weight(lambda_text, rs.rank);
            FormChoice fc = resolve_form(form_text, shift_text, rs, spec);
            if (fc.via_shift) lambda = lambda + fc.lambda_r;
            std::vector<long> target = parse_longs(target_text, rs.rank, "target");
            GramBlock blk = gram_block(rs, spec, lambda, fc.form, target);
            emit_json(opts, json{{"command", "gram"},
                                 {"config", config_json(opts, {{"lambda", lambda_text},
                                                               {"target", target_text},
                                                               {"form", form_choice_json(fc)}})},
                                 {"spec", render_spec(rs, spec)},
                                 {"block", render_gram_block(blk)}});
        } else if (c_shift->parsed()) {
            Weight lambda0 = parse_weight(lambda0_text, rs.rank);
            std::vector<long> p = parse_longs(p_text, rs.rank, "p");
            SingletData sd = singlet_weights(rs, spec, p);
            bool equal = verify_shift_equivalence(rs, spec, lambda0, p, height);
            emit_json(opts, json{{"command", "shift-check"},
                                 {"config", config_json(opts, {{"lambda0", lambda0_text},
                                                               {"p", p_text},
                                                               {"height", height}})},
                                 {"s", sd.form.to_string()},
                                 {"lambda_r", render_weight(sd.lambda_r)},
                                 {"blocks_equal", equal}});
        } else if (c_limit->parsed()) {
            Weight lambda = parse_weight(lambda_text, rs.rank);
            auto stages = classical_limit_scan(rs, lambda, node, q, kmax, opts.height_budget);
            json rows = json::array();
            for (const auto& st : stages) {
                rows.push_back(json{{"k", st.k},
                                    {"q_k", std::to_string(st.q_k.n) + "/" +
                                                std::to_string(st.q_k.m)},
                                    {"lambda0", render_weight(st.lambda0)},
                                    {"lambda0_dominant_integral", st.lambda0_ok},
                                    {"unitary", st.unitary},
                                    {"truncated", st.truncated},
                                    {"total_dim", st.total_dim}});
            }
            emit_json(opts, json{{"command", "limit-scan"},
                                 {"config", config_json(opts, {{"lambda", lambda_text},
                                                               {"node", node},
                                                               {"kmax", kmax}})},
                                 {"stages", rows}});
        } else if (c_frob->parsed()) {
            TildeData td = tilde_data(rs, spec);
            json smat = json::array();
            for (const auto& row : td.s_matrix) {
                json r = json::array();
                for (int v : row) r.push_back(v);
                smat.push_back(r);
            }
            json bip = json::array();
            for (int v : td.bipartition) bip.push_back(v);
            json doc{{"command", "frobenius-check"},
                     {"config", config_json(opts, {{"z", z_text}, {"lambda0", lambda0_text}})},
                     {"s_matrix", smat},
                     {"bipartition", bip}};
            if (!z_text.empty()) {
                std::vector<long> z = parse_longs(z_text, rs.rank, "z");
                json kt = json::array();
                for (int v : k_tilde_eval(rs, spec, z)) kt.push_back(v);
                doc["k_tilde"] = kt;
                if (rs.rank == 1) {
                    DividedPowerModule mod = rank1_res_module(z[0], spec);
                    TildeRelationReport rep = verify_tilde_relations_rank1(mod, spec);
                    json items = json::array();
                    for (const auto& item : rep.items)
                        items.push_back(json{{"relation", item.relation},
                                             {"ok", item.ok},
                                             {"witness", item.witness}});
                    doc["tilde_relations"] = json{{"all_ok", rep.all_ok}, {"items", items}};
                }
                if (!lambda0_text.empty()) {
                    Weight lambda0 = parse_weight(lambda0_text, rs.rank);
                    doc["tensor_character_ok"] = tensor_character_check(rs, spec, lambda0, z);
                }
            }
            emit_json(opts, doc);
        } else if (c_real->parsed()) {
            emit_json(opts, json{{"command", "reality-algebra"},
                                 {"config", config_json(opts, {})},
                                 {"spec", render_spec(rs, spec)},
                                 {"algebra", render_reality_algebra(
                                                 reality_preserving_algebra(rs, spec))}});
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
