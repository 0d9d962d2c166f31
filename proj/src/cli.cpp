#include "griesskit/cli.hpp"

#include "griesskit/gram.hpp"
#include "griesskit/griess.hpp"
#include "griesskit/json_io.hpp"
#include "griesskit/lattice.hpp"
#include "griesskit/minimal_model.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace griesskit::cli {

namespace {

struct Outcome {
    Json doc;
    int exit_code = 0;
};

std::string class_text(const ModuleClass& cls) {
    return std::to_string(cls.canonical().r) + "," + std::to_string(cls.canonical().s);
}

std::string pair_text(const PairIndex& p) {
    return std::to_string(p.i) + "," + std::to_string(p.j);
}

Outcome run_kac(int m) {
    Outcome o;
    o.doc["m"] = m;
    o.doc["central_charge"] = central_charge(m).str();
    Json classes = Json::array();
    for (const auto& [cls, w] : kac_table(m))
        classes.push_back(
            {{"r", cls.canonical().r}, {"s", cls.canonical().s}, {"weight", w.str()}});
    o.doc["classes"] = std::move(classes);
    return o;
}

Outcome run_fusion(int m) {
    Outcome o;
    const auto table = kac_table(m);
    o.doc["m"] = m;
    Json classes = Json::array();
    for (const auto& [cls, w] : table) classes.push_back(class_text(cls));
    o.doc["classes"] = std::move(classes);
    Json products = Json::array();
    for (std::size_t a = 0; a < table.size(); ++a)
        for (std::size_t b = a; b < table.size(); ++b) {
            Json channels = Json::array();
            for (const auto& [cls, w] : table)
                if (fusion_dim(table[a].first, table[b].first, cls) == 1)
                    channels.push_back(class_text(cls));
            products.push_back({{"a", class_text(table[a].first)},
                                {"b", class_text(table[b].first)},
                                {"channels", std::move(channels)}});
        }
    o.doc["products"] = std::move(products);
    return o;
}

Outcome run_griess(int n, int m) {
    Outcome o;
    const GriessAlgebra algebra = GriessAlgebra::build(n, m);
    o.doc["n"] = n;
    o.doc["m"] = m;
    o.doc["dim"] = algebra.dim();
    o.doc["alpha"] = algebra.params().alpha.str();
    o.doc["beta"] = algebra.params().beta.str();
    o.doc["conformal_vector"] = element_to_json(algebra, algebra.conformal_vector());
    Json products = Json::array();
    Json form = Json::array();
    for (std::size_t p = 0; p < algebra.dim(); ++p)
        for (std::size_t q = p; q < algebra.dim(); ++q) {
            const PairIndex& a = algebra.pair_at(p);
            const PairIndex& b = algebra.pair_at(q);
            GriessElement value(algebra.dim());
            for (const auto& term : algebra.basis_product(a, b)) value[term.index] += term.coeff;
            products.push_back({{"a", pair_text(a)},
                                {"b", pair_text(b)},
                                {"value", element_to_json(algebra, value)}});
            form.push_back(
                {{"a", pair_text(a)}, {"b", pair_text(b)}, {"value", algebra.basis_form(a, b).str()}});
        }
    o.doc["products"] = std::move(products);
    o.doc["form"] = std::move(form);
    return o;
}

Outcome run_spectrum(int n, int m) {
    Outcome o;
    const GriessAlgebra algebra = GriessAlgebra::build(n, m);
    const auto reference = algebra.spectrum(algebra.pair_at(0));
    bool uniform = true;
    for (std::size_t idx = 1; idx < algebra.dim(); ++idx)
        if (algebra.spectrum(algebra.pair_at(idx)) != reference) uniform = false;
    o.doc["n"] = n;
    o.doc["m"] = m;
    o.doc["alpha"] = algebra.params().alpha.str();
    Json eigenvalues = Json::array();
    for (const auto& [value, mult] : reference)
        eigenvalues.push_back({{"value", value.str()}, {"multiplicity", mult}});
    o.doc["eigenvalues"] = std::move(eigenvalues);
    o.doc["pairs_checked"] = algebra.dim();
    o.doc["uniform"] = uniform;
    o.exit_code = uniform ? 0 : 1;
    return o;
}

Outcome run_autos(int n, int m) {
    Outcome o;
    const GriessAlgebra algebra = GriessAlgebra::build(n, m);
    const RationalMatrix id = RationalMatrix::identity(algebra.dim());
    bool involutions = true, automorphisms = true, relations = true;
    std::vector<RationalMatrix> sigma;
    std::vector<PairIndex> pairs;
    for (std::size_t idx = 0; idx < algebra.dim(); ++idx) {
        pairs.push_back(algebra.pair_at(idx));
        sigma.push_back(algebra.miyamoto(pairs.back()));
        if (sigma.back() * sigma.back() != id) involutions = false;
        if (!algebra.is_automorphism(sigma.back())) automorphisms = false;
    }
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (a == b) continue;
            const PairIndex &p = pairs[a], &q = pairs[b];
            const bool disjoint =
                p.i != q.i && p.i != q.j && p.j != q.i && p.j != q.j;
            if (disjoint && sigma[a] * sigma[b] != sigma[b] * sigma[a]) relations = false;
        }
    for (int i = 1; i <= n && relations; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                const auto s = [&](int x, int y) {
                    return algebra.miyamoto(PairIndex::of(x, y));
                };
                if (s(i, j) * s(j, k) * s(i, j) != s(i, k)) {
                    relations = false;
                    break;
                }
            }
    std::uint64_t expected = 1;
    for (int t = 2; t <= n; ++t) expected *= static_cast<std::uint64_t>(t);
    const std::uint64_t order = algebra.generated_group_order(pairs);
    const bool pass = involutions && automorphisms && relations && order == expected;
    o.doc["n"] = n;
    o.doc["m"] = m;
    o.doc["involutions"] = involutions;
    o.doc["automorphisms"] = automorphisms;
    o.doc["relations"] = relations;
    o.doc["group_order"] = order;
    o.doc["expected"] = expected;
    o.doc["pass"] = pass;
    o.exit_code = pass ? 0 : 1;
    return o;
}

Outcome run_positivity(int n, std::optional<int> m, std::optional<int> m_max) {
    Outcome o;
    if (m) {
        o.doc = gram_report_to_json(gram_report(n, *m));
        return o;
    }
    o.doc["n"] = n;
    Json rows = Json::array();
    for (const auto& [mm, pd] : classify(n, *m_max))
        rows.push_back(
            {{"m", mm}, {"positive_definite", pd}, {"within_hypothesis", mm >= 2}});
    o.doc["rows"] = std::move(rows);
    return o;
}

Outcome run_scan(int n, int m_max) {
    Outcome o;
    Json rows = Json::array();
    for (int np = 3; np <= n; ++np)
        for (int m = 1; m <= m_max; ++m) {
            const GriessAlgebra algebra = GriessAlgebra::build(np, m);
            rows.push_back({{"n", np},
                            {"m", m},
                            {"dim", algebra.dim()},
                            {"alpha", algebra.params().alpha.str()},
                            {"beta", algebra.params().beta.str()},
                            {"positive_definite", is_positive_definite(gram_matrix(np, m))}});
        }
    o.doc["rows"] = std::move(rows);
    return o;
}

Outcome run_lattice_verify(int n, int m, int weight_cap) {
    Outcome o;
    const lattice::VectorFamily family =
        (m == 1) ? lattice::ising_family(n) : lattice::tilde_family();
    const lattice::RelationReport report =
        lattice::verify_relations(family, m, {weight_cap});
    o.doc = relation_report_to_json(report);
    o.exit_code = report.all_pass() ? 0 : 1;
    return o;
}

std::string csv_quote(const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += "\"\"";
        q += c;
    }
    q += "\"";
    return q;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string join_channels(const Json& channels) {
    std::string out;
    for (const auto& c : channels) {
        if (!out.empty()) out += ";";
        out += c.get<std::string>();
    }
    return out;
}

std::string render_csv(const std::string& sub, const Json& doc) {
    std::ostringstream os;
    if (sub == "kac") {
        os << "r,s,weight\n";
        for (const auto& row : doc["classes"])
            os << row["r"] << "," << row["s"] << ","
               << csv_quote(row["weight"].get<std::string>()) << "\n";
    } else if (sub == "fusion") {
        os << "a,b,channels\n";
        for (const auto& row : doc["products"])
            os << csv_quote(row["a"].get<std::string>()) << ","
               << csv_quote(row["b"].get<std::string>()) << ","
               << csv_quote(join_channels(row["channels"])) << "\n";
    } else if (sub == "griess") {
        os << "table,a,b,pair,value\n";
        for (const auto& row : doc["products"]) {
            if (row["value"].empty())
                os << "product," << csv_quote(row["a"].get<std::string>()) << ","
                   << csv_quote(row["b"].get<std::string>()) << ",," << csv_quote("0") << "\n";
            for (const auto& entry : row["value"])
                os << "product," << csv_quote(row["a"].get<std::string>()) << ","
                   << csv_quote(row["b"].get<std::string>()) << ","
                   << csv_quote(entry["pair"].get<std::string>()) << ","
                   << csv_quote(entry["coeff"].get<std::string>()) << "\n";
        }
        for (const auto& row : doc["form"])
            os << "form," << csv_quote(row["a"].get<std::string>()) << ","
               << csv_quote(row["b"].get<std::string>()) << ",,"
               << csv_quote(row["value"].get<std::string>()) << "\n";
    } else if (sub == "spectrum") {
        os << "eigenvalue,multiplicity\n";
        for (const auto& row : doc["eigenvalues"])
            os << csv_quote(row["value"].get<std::string>()) << "," << row["multiplicity"]
               << "\n";
    } else if (sub == "autos") {
        os << "n,m,group_order,expected,involutions,automorphisms,relations,pass\n";
        os << doc["n"] << "," << doc["m"] << "," << doc["group_order"] << ","
           << doc["expected"] << "," << bool_text(doc["involutions"]) << ","
           << bool_text(doc["automorphisms"]) << "," << bool_text(doc["relations"]) << ","
           << bool_text(doc["pass"]) << "\n";
    } else if (sub == "positivity") {
        if (doc.contains("rows")) {
            os << "m,positive_definite,within_hypothesis\n";
            for (const auto& row : doc["rows"])
                os << row["m"] << "," << bool_text(row["positive_definite"]) << ","
                   << bool_text(row["within_hypothesis"]) << "\n";
        } else {
            os << "field,index,value\n";
            os << "n,," << doc["n"] << "\n";
            os << "m,," << doc["m"] << "\n";
            os << "positive_definite,," << bool_text(doc["positive_definite"]) << "\n";
            const auto list_rows = [&](const char* name, const Json& values, int base) {
                int idx = base;
                for (const auto& v : values)
                    os << name << "," << idx++ << "," << csv_quote(v.get<std::string>()) << "\n";
            };
            list_rows("leading_minor", doc["leading_minors"], 1);
            list_rows("det_b_closed", doc["det_b_closed"], 3);
            list_rows("det_b_direct", doc["det_b_direct"], 3);
            list_rows("det_c_closed", doc["det_c_closed"], 3);
            list_rows("det_c_direct", doc["det_c_direct"], 3);
        }
    } else if (sub == "scan") {
        os << "n,m,dim,alpha,beta,positive_definite\n";
        for (const auto& row : doc["rows"])
            os << row["n"] << "," << row["m"] << "," << row["dim"] << ","
               << csv_quote(row["alpha"].get<std::string>()) << ","
               << csv_quote(row["beta"].get<std::string>()) << ","
               << bool_text(row["positive_definite"]) << "\n";
    } else if (sub == "lattice-verify") {
        os << "check,pairs,mode,pass\n";
        for (const auto& row : doc["checks"]) {
            std::string pairs;
            for (const auto& p : row["pairs"]) {
                if (!pairs.empty()) pairs += ";";
                pairs += std::to_string(p[0].get<int>()) + "," + std::to_string(p[1].get<int>());
            }
            os << row["check"].get<std::string>() << "," << csv_quote(pairs) << ","
               << row["mode"] << "," << bool_text(row["pass"]) << "\n";
        }
    }
    return os.str();
}

std::string render_element_text(const Json& element) {
    if (element.empty()) return "0";
    std::string out;
    for (const auto& entry : element) {
        if (!out.empty()) out += " + ";
        out += "(" + entry["coeff"].get<std::string>() + ") w[" +
               entry["pair"].get<std::string>() + "]";
    }
    return out;
}

std::string render_text(const std::string& sub, const Json& doc) {
    std::ostringstream os;
    if (sub == "kac") {
        os << "m = " << doc["m"] << "\n";
        os << "central charge = " << doc["central_charge"].get<std::string>() << "\n";
        for (const auto& row : doc["classes"])
            os << "h(" << row["r"] << "," << row["s"] << ") = "
               << row["weight"].get<std::string>() << "\n";
    } else if (sub == "fusion") {
        os << "m = " << doc["m"] << "\n";
        for (const auto& row : doc["products"]) {
            os << "(" << row["a"].get<std::string>() << ") x (" << row["b"].get<std::string>()
               << ") ->";
            if (row["channels"].empty()) os << " (none)";
            for (const auto& c : row["channels"]) os << " (" << c.get<std::string>() << ")";
            os << "\n";
        }
    } else if (sub == "griess") {
        os << "n = " << doc["n"] << "  m = " << doc["m"] << "\n";
        os << "dim = " << doc["dim"] << "  alpha = " << doc["alpha"].get<std::string>()
           << "  beta = " << doc["beta"].get<std::string>() << "\n";
        os << "conformal vector = " << render_element_text(doc["conformal_vector"]) << "\n";
        for (const auto& row : doc["products"])
            os << "w[" << row["a"].get<std::string>() << "] . w[" << row["b"].get<std::string>()
               << "] = " << render_element_text(row["value"]) << "\n";
        for (const auto& row : doc["form"])
            os << "(w[" << row["a"].get<std::string>() << "] | w[" << row["b"].get<std::string>()
               << "]) = " << row["value"].get<std::string>() << "\n";
    } else if (sub == "spectrum") {
        os << "n = " << doc["n"] << "  m = " << doc["m"]
           << "  alpha = " << doc["alpha"].get<std::string>() << "\n";
        for (const auto& row : doc["eigenvalues"])
            os << "eigenvalue " << row["value"].get<std::string>() << ": multiplicity "
               << row["multiplicity"] << "\n";
        os << "pairs checked: " << doc["pairs_checked"]
           << (doc["uniform"].get<bool>() ? " (uniform)" : " (NOT uniform)") << "\n";
    } else if (sub == "autos") {
        os << "n = " << doc["n"] << "  m = " << doc["m"] << "\n";
        os << "involutions: " << bool_text(doc["involutions"]) << "\n";
        os << "automorphisms: " << bool_text(doc["automorphisms"]) << "\n";
        os << "relations: " << bool_text(doc["relations"]) << "\n";
        os << "group order = " << doc["group_order"] << " (expected " << doc["expected"]
           << ")\n";
        os << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    } else if (sub == "positivity") {
        if (doc.contains("rows")) {
            os << "n = " << doc["n"] << "\n";
            for (const auto& row : doc["rows"]) {
                os << "m = " << row["m"] << ": "
                   << (row["positive_definite"].get<bool>() ? "positive definite"
                                                            : "not positive definite");
                if (!row["within_hypothesis"].get<bool>()) os << " (outside stated hypothesis)";
                os << "\n";
            }
        } else {
            os << "n = " << doc["n"] << "  m = " << doc["m"] << "\n";
            os << "positive definite: " << bool_text(doc["positive_definite"]) << "\n";
            const auto list = [&](const char* name, const Json& values, int base) {
                int idx = base;
                for (const auto& v : values)
                    os << name << "[" << idx++ << "] = " << v.get<std::string>() << "\n";
            };
            list("minor", doc["leading_minors"], 1);
            list("det_b_closed", doc["det_b_closed"], 3);
            list("det_b_direct", doc["det_b_direct"], 3);
            list("det_c_closed", doc["det_c_closed"], 3);
            list("det_c_direct", doc["det_c_direct"], 3);
        }
    } else if (sub == "scan") {
        for (const auto& row : doc["rows"])
            os << "n=" << row["n"] << " m=" << row["m"] << " dim=" << row["dim"]
               << " alpha=" << row["alpha"].get<std::string>()
               << " beta=" << row["beta"].get<std::string>() << " positive_definite="
               << bool_text(row["positive_definite"]) << "\n";
    } else if (sub == "lattice-verify") {
        os << "n = " << doc["n"] << "  m = " << doc["m"] << "  weight cap = "
           << doc["weight_cap"] << "\n";
        std::size_t failures = 0;
        for (const auto& row : doc["checks"]) {
            if (row["pass"].get<bool>()) continue;
            ++failures;
            os << "FAIL " << row["check"].get<std::string>() << " pairs=";
            for (const auto& p : row["pairs"]) os << "(" << p[0] << "," << p[1] << ")";
            os << " mode=" << row["mode"] << "\n";
        }
        os << "checks: " << doc["checks"].size() << "  failures: " << failures << "\n";
        os << (doc["all_pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    }
    return os.str();
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

void check_m_range(std::optional<int> m, const char* flag) {
    if (m) require(*m >= 1 && *m <= 12, std::string(flag) + " must lie in [1, 12]");
}

Outcome dispatch(const RunConfig& config) {
    const std::string& sub = config.subcommand;
    static const std::array<const char*, 8> known = {
        "kac", "fusion", "griess", "spectrum", "autos", "positivity", "scan", "lattice-verify"};
    require(std::find(known.begin(), known.end(), sub) != known.end(),
            "unknown subcommand '" + sub + "'");
    check_m_range(config.m, "--m");
    check_m_range(config.m_max, "--m-max");
    if (config.n) require(*config.n >= 3, "--n must be >= 3");

    if (sub == "kac" || sub == "fusion") {
        require(config.m.has_value(), sub + " requires --m");
        return sub == "kac" ? run_kac(*config.m) : run_fusion(*config.m);
    }

    require(config.n.has_value(), sub + " requires --n");
    const int n = *config.n;
    if (sub == "lattice-verify") {
        require(config.m.has_value(), "lattice-verify requires --m");
        require(*config.m == 1 || *config.m == 2,
                "lattice-verify supports only m = 1 and m = 2");
        if (*config.m == 1)
            require(n <= 6, "lattice-verify with m = 1 supports n <= 6");
        else
            require(n == 3, "lattice-verify with m = 2 supports only n = 3");
        require(config.weight_cap >= 0, "--weight-cap must be >= 0");
        return run_lattice_verify(n, *config.m, config.weight_cap);
    }

    require(n <= max_rank_bound(),
            "--n exceeds the rank bound (" + std::to_string(max_rank_bound()) +
                "); set GRIESSKIT_MAX_N to raise it");
    if (sub == "griess" || sub == "spectrum") {
        require(config.m.has_value(), sub + " requires --m");
        return sub == "griess" ? run_griess(n, *config.m) : run_spectrum(n, *config.m);
    }
    if (sub == "autos") return run_autos(n, config.m.value_or(1));
    if (sub == "positivity") {
        require(config.m.has_value() != config.m_max.has_value(),
                "positivity requires exactly one of --m and --m-max");
        return run_positivity(n, config.m, config.m_max);
    }
    require(config.m_max.has_value(), "scan requires --m-max");
    return run_scan(n, *config.m_max);
}

}  // namespace

int max_rank_bound() {
    const char* env = std::getenv("GRIESSKIT_MAX_N");
    if (env == nullptr || *env == '\0') return 8;
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(env, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("GRIESSKIT_MAX_N must be an integer");
    }
    if (used != std::string(env).size())
        throw std::invalid_argument("GRIESSKIT_MAX_N must be an integer");
    return value > 8 ? value : 8;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const Outcome outcome = dispatch(config);
        std::string text;
        switch (config.format) {
            case Format::json:
                text = outcome.doc.dump(2) + "\n";
                break;
            case Format::csv:
                text = render_csv(config.subcommand, outcome.doc);
                break;
            case Format::text:
                text = render_text(config.subcommand, outcome.doc);
                break;
        }
        if (config.out_path) {
            std::ofstream file(*config.out_path);
            if (!file) {
                err << "error: cannot open output file " << *config.out_path << "\n";
                return 2;
            }
            file << text;
        } else {
            out << text;
        }
        return outcome.exit_code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact structure data for pair-generated Griess algebras"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_path, "write the report to this file instead of stdout");

    int n = 0, m = 0, m_max = 0, weight_cap = 4;

    CLI::App* kac = app.add_subcommand("kac", "central charge and module weights");
    kac->add_option("--m", m, "series parameter")->required();

    CLI::App* fusion = app.add_subcommand("fusion", "fusion channels of the module classes");
    fusion->add_option("--m", m, "series parameter")->required();

    CLI::App* griess = app.add_subcommand("griess", "product and form tables of the pair algebra");
    griess->add_option("--n", n, "rank")->required();
    griess->add_option("--m", m, "series parameter")->required();

    CLI::App* spectrum = app.add_subcommand("spectrum", "adjoint eigenvalue multiplicities");
    spectrum->add_option("--n", n, "rank")->required();
    spectrum->add_option("--m", m, "series parameter")->required();

    CLI::App* autos = app.add_subcommand("autos", "involutions and the group they generate");
    autos->add_option("--n", n, "rank")->required();
    autos->add_option("--m", m, "series parameter (default 1)");

    CLI::App* positivity = app.add_subcommand("positivity", "positive-definiteness of the form");
    positivity->add_option("--n", n, "rank")->required();
    positivity->add_option("--m", m, "single-parameter report");
    positivity->add_option("--m-max", m_max, "classify m = 1..m_max");

    CLI::App* scan = app.add_subcommand("scan", "classification grid over n and m");
    scan->add_option("--n", n, "largest rank")->required();
    scan->add_option("--m-max", m_max, "largest series parameter")->required();

    CLI::App* lattice_verify =
        app.add_subcommand("lattice-verify", "structure identities in the lattice model");
    lattice_verify->add_option("--n", n, "rank")->required();
    lattice_verify->add_option("--m", m, "series parameter (1 or 2)")->required();
    lattice_verify->add_option("--weight-cap", weight_cap, "truncation weight (default 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    const auto given = [&](const std::string& name) {
        const CLI::Option* option = sub->get_option_no_throw(name);
        return option != nullptr && option->count() > 0;
    };
    RunConfig config;
    config.subcommand = sub->get_name();
    if (given("--n")) config.n = n;
    if (given("--m")) config.m = m;
    if (given("--m-max")) config.m_max = m_max;
    config.weight_cap = weight_cap;
    if (format == "json")
        config.format = Format::json;
    else if (format == "csv")
        config.format = Format::csv;
    else
        config.format = Format::text;
    if (!out_path.empty()) config.out_path = out_path;
    return run(config, out, err);
}

}  // namespace griesskit::cli
