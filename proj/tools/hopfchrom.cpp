#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hopfchrom/serialize.hpp"
#include "hopfchrom/verify.hpp"

using namespace hopfchrom;

namespace {

constexpr const char* kSchema = "hopfchrom/1";

void apply_env_caps(Caps& caps) {
    auto read = [](const char* name, auto& field) {
        if (const char* v = std::getenv(name))
            field = static_cast<std::remove_reference_t<decltype(field)>>(std::atoll(v));
    };
    read("HOPFCHROM_VERTEX_CAP", caps.vertex_cap);
    read("HOPFCHROM_GROUP_CAP", caps.group_cap);
    read("HOPFCHROM_DEGREE_CAP", caps.degree_cap);
    read("HOPFCHROM_ORACLE_CAP", caps.oracle_cap);
    read("HOPFCHROM_SYMFUNC_DEGREE_CAP", caps.symfunc_degree_cap);
}

void apply_config_file(Caps& caps, std::string& format, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open config file '" + path + "'");
    Json j = Json::parse(in, nullptr, true, true);
    if (j.contains("vertex_cap")) caps.vertex_cap = j["vertex_cap"].get<int>();
    if (j.contains("group_cap")) caps.group_cap = j["group_cap"].get<long long>();
    if (j.contains("degree_cap")) caps.degree_cap = j["degree_cap"].get<int>();
    if (j.contains("oracle_cap")) caps.oracle_cap = j["oracle_cap"].get<long long>();
    if (j.contains("format")) format = j["format"].get<std::string>();
    if (caps.vertex_cap <= 0 || caps.group_cap <= 0 || caps.degree_cap <= 0 ||
        caps.oracle_cap <= 0)
        throw parse_error("config: caps must be positive");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(std::string s) {
    while (!s.empty() && std::isspace((unsigned char)s.back())) s.pop_back();
    size_t i = 0;
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    return s.substr(i);
}

// Accepts named graphs, K<n>/Kbar<n>/P<n>/C<n>, @file (json or graph6),
// inline edge-list json, or a graph6 record.
Graph parse_graph_arg(const std::string& arg, const Caps& caps) {
    if (arg == "butterfly") return Graph::butterfly();
    if (arg == "lambda" || arg == "kite_pendant") return Graph::kite_with_pendant();
    auto family = [&](const std::string& prefix) -> int {
        if (arg.size() <= prefix.size() || arg.compare(0, prefix.size(), prefix) != 0) return -1;
        for (size_t i = prefix.size(); i < arg.size(); ++i)
            if (!std::isdigit((unsigned char)arg[i])) return -1;
        return std::atoi(arg.c_str() + prefix.size());
    };
    if (int n = family("Kbar"); n >= 0) return Graph::empty_graph(n);
    if (int n = family("K"); n >= 0) return Graph::complete(n);
    if (int n = family("P"); n >= 0) return Graph::path(n);
    if (int n = family("C"); n >= 0) return Graph::cycle(n);
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') text = trim(slurp(arg.substr(1)));
    if (!text.empty() && (text[0] == '{')) return graph_from_json(Json::parse(text), caps.vertex_cap);
    if (!arg.empty() && arg.compare(0, 3, "g6:") == 0) text = arg.substr(3);
    return parse_graph6(text, caps.vertex_cap);
}

std::string poly_text(const IntPolynomial& p) { return p.str(); }

void emit(const Json& payload, const std::string& format) {
    if (format == "json") {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    // Aligned-text rendering of the same payload.
    std::function<void(const Json&, int)> render = [&](const Json& j, int indent) {
        std::string pad(indent, ' ');
        if (j.is_object()) {
            for (const auto& [k, v] : j.items()) {
                if (v.is_object() || (v.is_array() && !v.empty() && v[0].is_object()) ||
                    (v.is_array() && !v.empty() && v[0].is_array())) {
                    std::cout << pad << k << ":\n";
                    render(v, indent + 2);
                } else {
                    std::cout << pad << k << ": " << (v.is_string() ? v.get<std::string>()
                                                                    : v.dump())
                              << "\n";
                }
            }
        } else if (j.is_array()) {
            for (const auto& v : j) {
                if (v.is_object() || v.is_array()) {
                    render(v, indent);
                    std::cout << pad << "-\n";
                } else {
                    std::cout << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
                }
            }
        } else {
            std::cout << pad << j.dump() << "\n";
        }
    };
    render(payload, 0);
}

Json table_with_text(const GraphAlgebra& alg, int id) {
    const CharacterTable& t = alg.table_of(id);
    Json j = character_table_to_json(t);
    Json rows_text = Json::array();
    for (const auto& row : t.rows) {
        std::string line;
        for (size_t c = 0; c < row.values.size(); ++c) {
            if (c) line += " ";
            line += row.values[c].str();
        }
        rows_text.push_back(line);
    }
    j["rows_text"] = std::move(rows_text);
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"hopfchrom: Hopf algebras of graph-automorphism representations and refined "
                 "chromatic symmetric functions"};
    app.require_subcommand(1);
    std::string format = "text";
    std::string config_path;
    app.add_option("--format", format, "Output format: json or text")->check(
        CLI::IsMember({"json", "text"}));
    app.add_option("--config", config_path, "JSON config file with cap overrides");

    Caps caps = global_caps();
    apply_env_caps(caps);

    // aut
    auto* aut_cmd = app.add_subcommand("aut", "Automorphism group of a graph");
    aut_cmd->fallthrough();
    std::string aut_graph, aut_relabel;
    aut_cmd->add_option("graph", aut_graph, "graph6 string, @file, named graph, or edge-list json")
        ->required();
    aut_cmd->add_option("--relabel", aut_relabel,
                        "Apply a permutation in cycle notation, e.g. \"(0 4)(1 2)\"");

    // chartab
    auto* chartab_cmd = app.add_subcommand("chartab", "Character table of Aut(graph)");
    chartab_cmd->fallthrough();
    std::string chartab_graph;
    chartab_cmd->add_option("graph", chartab_graph)->required();

    // chromsym
    auto* chrom_cmd = app.add_subcommand("chromsym",
                                         "Refined chromatic symmetric functions X_(Gamma,gamma)");
    chrom_cmd->fallthrough();
    std::string chrom_graph;
    int chrom_irrep = -1;
    bool chrom_all = false, chrom_stanley = false, chrom_orbital = false;
    std::string chrom_method = "wreath";
    chrom_cmd->add_option("graph", chrom_graph)->required();
    chrom_cmd->add_option("--irrep", chrom_irrep, "Irrep index into the canonical table");
    chrom_cmd->add_flag("--all", chrom_all, "All irreps");
    chrom_cmd->add_flag("--stanley", chrom_stanley, "Stanley's X_Gamma");
    chrom_cmd->add_flag("--orbital", chrom_orbital, "Orbital chromatic polynomial (gamma = triv)");
    chrom_cmd->add_option("--method", chrom_method, "wreath or direct")
        ->check(CLI::IsMember({"wreath", "direct"}));

    // hopf
    auto* hopf_cmd = app.add_subcommand("hopf", "Hopf operations on basis elements");
    hopf_cmd->fallthrough();
    std::string hopf_op, hopf_instance = "young=subsets:2,H=Z2";
    std::string hopf_elem1, hopf_elem2;
    hopf_cmd->add_option("op", hopf_op, "product, Delta, or delta")
        ->required()
        ->check(CLI::IsMember({"product", "Delta", "delta"}));
    hopf_cmd->add_option("--instance", hopf_instance, "e.g. young=subsets:2,H=Z2");
    hopf_cmd->add_option("element", hopf_elem1, "HopfElement JSON (inline or @file)");
    hopf_cmd->add_option("element2", hopf_elem2, "Second element (product only)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->fallthrough();
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite,
                           "hopf|psh|psi|clifford|youngsets|all (oracle = clifford)")
        ->check(CLI::IsMember({"hopf", "psh", "psi", "clifford", "oracle", "youngsets", "all"}));

    CLI11_PARSE(app, argc, argv);
    if (!config_path.empty()) apply_config_file(caps, format, config_path);
    global_caps() = caps;

    if (aut_cmd->parsed()) {
        Graph g = parse_graph_arg(aut_graph, caps);
        if (!aut_relabel.empty())
            g = relabel_graph(g, Perm::from_cycles(aut_relabel, g.vertex_count()));
        GraphAlgebra alg(caps);
        int id = alg.key_of(g);
        const auto* pg = dynamic_cast<const PermGroup*>(alg.aut_of(id)->group.get());
        const auto& cls = alg.aut_of(id)->classes;
        Json gens = Json::array();
        for (const auto& p : small_generating_set(*pg)) gens.push_back(p.cycle_str());
        Json classes = Json::array();
        for (int c = 0; c < cls.count(); ++c)
            classes.push_back(Json{{"representative", pg->element(cls.reps[c]).cycle_str()},
                                   {"size", cls.sizes[c]},
                                   {"element_order", cls.rep_order[c]}});
        emit(Json{{"schema", kSchema},
                  {"command", "aut"},
                  {"graph", graph_to_json(alg.graph_of(id))},
                  {"graph6", write_graph6(alg.graph_of(id))},
                  {"order", pg->order()},
                  {"generators", std::move(gens)},
                  {"classes", std::move(classes)}},
             format);
        return 0;
    }

    if (chartab_cmd->parsed()) {
        Graph g = parse_graph_arg(chartab_graph, caps);
        GraphAlgebra alg(caps);
        int id = alg.key_of(g);
        emit(Json{{"schema", kSchema},
                  {"command", "chartab"},
                  {"graph", graph_to_json(alg.graph_of(id))},
                  {"table", table_with_text(alg, id)}},
             format);
        return 0;
    }

    if (chrom_cmd->parsed()) {
        Graph g = parse_graph_arg(chrom_graph, caps);
        GraphAlgebra alg(caps);
        int id = alg.key_of(g);
        const CharacterTable& table = alg.table_of(id);
        XMethod method = chrom_method == "direct" ? XMethod::direct : XMethod::wreath;
        Json out{{"schema", kSchema},
                 {"command", "chromsym"},
                 {"graph", graph_to_json(alg.graph_of(id))},
                 {"method", chrom_method},
                 {"table", table_with_text(alg, id)}};
        if (chrom_orbital) {
            IntPolynomial p = alg.chi_poly(alg.graph_of(id), 0, method);
            out["orbital_chromatic"] =
                Json{{"polynomial", polynomial_to_json(p)}, {"text", poly_text(p)}};
        } else if (chrom_stanley) {
            SymFunc x = alg.X_chromatic(alg.graph_of(id));
            IntPolynomial p = specialize_polynomial(x);
            out["X"] = Json{{"symfunc", symfunc_to_json(x)},
                            {"text", x.str()},
                            {"chromatic_polynomial", polynomial_to_json(p)},
                            {"chromatic_polynomial_text", poly_text(p)}};
        } else if (chrom_irrep >= 0) {
            SymFunc x = alg.X_gamma(alg.graph_of(id), chrom_irrep, method);
            IntPolynomial p = specialize_polynomial(x);
            out["X_gamma"] = Json{{"irrep", chrom_irrep},
                                  {"symfunc", symfunc_to_json(x)},
                                  {"text", x.str()},
                                  {"chi_polynomial", polynomial_to_json(p)},
                                  {"chi_polynomial_text", poly_text(p)}};
        } else {
            // default: all irreps
            Json rows = Json::array();
            for (int r = 0; r < table.count(); ++r) {
                SymFunc x = alg.X_gamma(alg.graph_of(id), r, method);
                IntPolynomial p = specialize_polynomial(x);
                rows.push_back(Json{{"irrep", r},
                                    {"degree", table.degrees[r]},
                                    {"symfunc", symfunc_to_json(x)},
                                    {"text", x.str()},
                                    {"chi_polynomial", polynomial_to_json(p)},
                                    {"chi_polynomial_text", poly_text(p)}});
            }
            out["X_gamma_all"] = std::move(rows);
            SymFunc x = alg.X_chromatic(alg.graph_of(id));
            out["X_stanley"] = Json{{"symfunc", symfunc_to_json(x)}, {"text", x.str()}};
        }
        emit(out, format);
        return 0;
    }

    if (hopf_cmd->parsed()) {
        auto [young, h] = parse_instance_selector(hopf_instance);
        HopfInstance inst(young, h, caps);
        auto load_element = [&](const std::string& arg) {
            std::string text = arg;
            if (!arg.empty() && arg[0] == '@') text = slurp(arg.substr(1));
            Json parsed;
            try {
                parsed = Json::parse(text);
            } catch (const std::exception& err) {
                throw parse_error(std::string("element is not valid json: ") + err.what());
            }
            return hopf_element_from_json(inst, parsed);
        };
        if (hopf_op == "product") {
            if (hopf_elem1.empty() || hopf_elem2.empty())
                throw parse_error("hopf product needs exactly two elements");
            HopfElement result =
                hopf_product(inst, load_element(hopf_elem1), load_element(hopf_elem2));
            emit(Json{{"schema", kSchema},
                      {"command", "hopf"},
                      {"op", "product"},
                      {"instance", inst.selector()},
                      {"result", hopf_element_to_json(inst, result)}},
                 format);
        } else {
            if (hopf_elem1.empty() || !hopf_elem2.empty())
                throw parse_error("hopf " + hopf_op + " needs exactly one element");
            HopfElement a = load_element(hopf_elem1);
            TensorElement result =
                hopf_op == "Delta" ? coproduct_Delta(inst, a) : coproduct_delta(inst, a);
            emit(Json{{"schema", kSchema},
                      {"command", "hopf"},
                      {"op", hopf_op},
                      {"instance", inst.selector()},
                      {"result", tensor_element_to_json(inst, result)}},
                 format);
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        GraphAlgebra alg(caps);
        auto reports = run_suites(suite, alg);
        bool all_pass = true;
        Json jreports = Json::array();
        for (const auto& r : reports) {
            Json checks = Json::array();
            for (const auto& c : r.checks) {
                checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                all_pass = all_pass && c.pass;
            }
            jreports.push_back(
                Json{{"suite", r.suite}, {"pass", r.all_pass()}, {"checks", std::move(checks)}});
        }
        emit(Json{{"schema", kSchema},
                  {"command", "verify"},
                  {"pass", all_pass},
                  {"suites", std::move(jreports)}},
             format);
        return all_pass ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& err) {
        std::cerr << Json{{"schema", kSchema},
                          {"error", {{"type", "parse_error"}, {"message", err.what()}}}}
                         .dump(2)
                  << "\n";
        return 2;
    } catch (const resource_error& err) {
        std::cerr << Json{{"schema", kSchema},
                          {"error", {{"type", "resource_error"}, {"message", err.what()}}}}
                         .dump(2)
                  << "\n";
        return 3;
    } catch (const hopf_error& err) {
        std::cerr << Json{{"schema", kSchema},
                          {"error", {{"type", "internal_error"}, {"message", err.what()}}}}
                         .dump(2)
                  << "\n";
        return 4;
    } catch (const std::exception& err) {
        std::cerr << Json{{"schema", kSchema},
                          {"error", {{"type", "error"}, {"message", err.what()}}}}
                         .dump(2)
                  << "\n";
        return 4;
    }
}
