// Command-line front end: reproduces the snake-number tables, Betti-number
// formulas and summations, Mobius values, torsion audits, shelling
// certificates and the type-C counterexample from the library, with
// self-checking exit codes (0 ok, 1 check failure, 2 usage, 3 budget).

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chamber/betti.hpp"
#include "chamber/homology.hpp"
#include "chamber/poset.hpp"
#include "chamber/scx.hpp"
#include "chamber/shelling.hpp"
#include "chamber/snakes.hpp"
#include "chamber/weyl.hpp"

namespace {

using namespace chamber;

struct RunConfig {
    int threads = 1;
    std::string format = "table";  // table | records
    std::string output;            // empty = stdout
    HomologyBudget homology_budget;
    WeylBudget weyl_budget;
};

int resolve_threads(int flag_value) {
    if (const char* env = std::getenv("CHAMBER_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return flag_value > 0 ? flag_value : 1;
}

class Output {
public:
    explicit Output(const RunConfig& config) {
        if (!config.output.empty()) {
            file_.open(config.output);
            if (!file_) throw std::runtime_error("cannot open " + config.output);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string subset_name(std::uint32_t mask, int n) {
    std::string out = "{";
    bool first = true;
    for (int i = 1; i <= n; ++i) {
        if (!(mask & (1u << (i - 1)))) continue;
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

SnakeFamily parse_family(const std::string& name) {
    if (name == "A" || name == "a") return SnakeFamily::A;
    if (name == "B" || name == "b") return SnakeFamily::B;
    throw CLI::ValidationError("--family", "must be A or B");
}

Coefficient parse_field(const std::string& name) {
    if (name == "q" || name == "Q") return Coefficient::rational();
    int p = std::atoi(name.c_str());
    bool prime = p >= 2;
    for (int d = 2; d * d <= p && prime; ++d)
        if (p % d == 0) prime = false;
    if (!prime) throw CLI::ValidationError("--field", "must be q or a prime");
    return Coefficient::prime(p);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

int cmd_snakes(const RunConfig& config, SnakeFamily family, int max_n,
               const std::string& method) {
    Output output(config);
    std::ostream& out = output.stream();
    int bound = snake_enumeration_bound(family);
    bool do_enum = method != "series";
    bool do_series = method != "enumerate";
    if (method == "enumerate" && max_n > bound) {
        std::cerr << "enumeration is capped at n = " << bound << "; use --method series\n";
        return 2;
    }
    std::vector<Int> series;
    if (do_series) series = snake_counts_series(family, max_n);
    bool mismatch = false;
    const char* letter = family == SnakeFamily::A ? "a" : "b";
    if (config.format == "records") {
        out << "n\tenumerate\tseries\n";
    } else {
        out << "  n  " << std::setw(14) << (std::string(letter) + "_n (enum)") << "  "
            << std::setw(14) << (std::string(letter) + "_n (series)") << '\n';
    }
    for (int n = 0; n <= max_n; ++n) {
        std::string enum_s = "-", series_s = "-";
        Int enum_v = -1;
        if (do_enum && n <= bound) {
            enum_v = snake_count(family, n);
            enum_s = enum_v.str();
        }
        if (do_series) series_s = series[static_cast<size_t>(n)].str();
        if (do_enum && do_series && n <= bound && enum_v != series[static_cast<size_t>(n)])
            mismatch = true;
        if (config.format == "records")
            out << n << '\t' << enum_s << '\t' << series_s << '\n';
        else
            out << std::setw(3) << n << "  " << std::setw(14) << enum_s << "  " << std::setw(14)
                << series_s << '\n';
    }
    if (method == "both") {
        out << (mismatch ? "MISMATCH between enumeration and series\n"
                         : "enumeration and series agree\n");
    }
    return mismatch ? 1 : 0;
}

void print_betti(std::ostream& out, const RunConfig& config, const std::string& tag,
                 const BettiTable& table) {
    if (config.format == "records") {
        out << "k\tbeta\n";
        for (size_t i = 0; i < table.beta.size(); ++i) out << i << '\t' << table.beta[i] << '\n';
    } else {
        out << tag << " beta = (";
        for (size_t i = 0; i < table.beta.size(); ++i)
            out << (i ? ", " : "") << table.beta[i];
        out << ")\n";
    }
}

void print_per_s(std::ostream& out, const BettiTable& table) {
    out << "S\treduced_betti\n";
    for (const auto& [mask, betti] : table.per_s) {
        out << subset_name(mask, table.n) << '\t';
        bool first = true;
        if (betti.empty()) out << "0";
        for (const auto& [degree, rank] : betti) {
            if (!first) out << ',';
            out << "H~" << degree << ":" << rank;
            first = false;
        }
        out << '\n';
    }
}

int cmd_betti(const RunConfig& config, SnakeFamily family, int n, const std::string& method,
              const std::string& field, bool per_s) {
    Output output(config);
    std::ostream& out = output.stream();
    Coefficient coeff = parse_field(field);
    bool do_formula = method != "sum";
    bool do_sum = method != "formula";
    BettiTable formula, sum;
    if (do_formula)
        formula = family == SnakeFamily::B ? betti_formula_B(n) : betti_formula_A(n);
    if (do_sum) {
        Complex k = family == SnakeFamily::B ? complex_B(n, config.weyl_budget)
                                             : complex_A(n, config.weyl_budget);
        CharacteristicMap cm = family == SnakeFamily::B ? char_map_B(n, config.weyl_budget)
                                                        : char_map_A(n, config.weyl_budget);
        sum = betti_sum(cm, k, coeff, per_s, config.threads, config.homology_budget);
    }
    if (do_formula) print_betti(out, config, "formula", formula);
    if (do_sum) print_betti(out, config, "sum(" + coeff.name() + ")", sum);
    if (per_s && do_sum) print_per_s(out, sum);
    if (do_formula && do_sum) {
        bool agree = formula.beta == sum.beta;
        out << (agree ? "formula and summation agree\n" : "MISMATCH: formula != summation\n");
        return agree ? 0 : 1;
    }
    return 0;
}

int cmd_mobius(const RunConfig& config, int n) {
    Output output(config);
    std::ostream& out = output.stream();
    std::vector<Int> series = mobius_sequence_series(n);          // -mu values
    std::vector<Int> b = snake_counts_series(SnakeFamily::B, n);  // |mu| targets
    if (config.format == "records")
        out << "n\tmu_recursion\tmu_series\tb_n\tok\n";
    else
        out << "  n  mu(recursion)  mu(series)        b_n  |mu|=b_n\n";
    bool all_ok = true;
    for (int k = 1; k <= n; ++k) {
        BoundedPoset tilde = odd_poset_B_bounded(k, config.weyl_budget);
        Int mu_rec = tilde.poset.mobius(tilde.bottom, tilde.top);
        Int mu_ser = -series[static_cast<size_t>(k)];
        bool ok = mu_rec == mu_ser && abs(mu_rec) == b[static_cast<size_t>(k)];
        all_ok = all_ok && ok;
        if (config.format == "records")
            out << k << '\t' << mu_rec << '\t' << mu_ser << '\t' << b[static_cast<size_t>(k)]
                << '\t' << (ok ? "yes" : "NO") << '\n';
        else
            out << std::setw(3) << k << "  " << std::setw(13) << mu_rec.str() << "  "
                << std::setw(10) << mu_ser.str() << "  " << std::setw(9)
                << b[static_cast<size_t>(k)].str() << "  " << (ok ? "yes" : "NO") << '\n';
    }
    return all_ok ? 0 : 1;
}

int cmd_torsion(const RunConfig& config, SnakeFamily family, int n) {
    Output output(config);
    std::ostream& out = output.stream();
    Complex k = family == SnakeFamily::B ? complex_B(n, config.weyl_budget)
                                         : complex_A(n, config.weyl_budget);
    CharacteristicMap cm = family == SnakeFamily::B ? char_map_B(n, config.weyl_budget)
                                                    : char_map_A(n, config.weyl_budget);
    TorsionReport report = torsion_audit(cm, k, config.threads, config.homology_budget);
    out << "verdict: " << report.verdict_name() << '\n';
    for (const auto& [mask, by_degree] : report.per_s) {
        out << subset_name(mask, n) << ":";
        for (const auto& [degree, factors] : by_degree) {
            out << " H~" << degree << " = [";
            for (size_t i = 0; i < factors.size(); ++i) out << (i ? "," : "") << factors[i];
            out << "]";
        }
        out << '\n';
    }
    if (report.odd_witness) {
        out << "odd torsion at S = " << subset_name(report.odd_witness->s_mask, n)
            << ", degree " << report.odd_witness->degree << ", factor "
            << report.odd_witness->factor << '\n';
    }
    return 0;
}

Complex load_complex(const RunConfig& config, const std::string& scx_path, int n, bool odd) {
    if (!scx_path.empty()) return read_scx_file(scx_path);
    if (n < 1) throw CLI::ValidationError("--n", "a complex source is required");
    return odd ? odd_complex_B(n, config.weyl_budget) : complex_B(n, config.weyl_budget);
}

FacetOrdering load_ordering(const std::string& path, const std::string& inline_ids) {
    FacetOrdering ordering;
    auto parse_stream = [&](std::istream& in) {
        int id;
        while (in >> id) ordering.order.push_back(id);
    };
    if (!inline_ids.empty()) {
        std::istringstream in(inline_ids);
        parse_stream(in);
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open ordering file " + path);
        parse_stream(in);
    }
    return ordering;
}

void print_ordering(std::ostream& out, const FacetOrdering& ordering) {
    for (size_t i = 0; i < ordering.order.size(); ++i)
        out << (i ? " " : "") << ordering.order[i];
    out << '\n';
}

int report_verify(std::ostream& out, const Complex& k, const FacetOrdering& ordering,
                  const VerifyOutcome& outcome, const std::string& witness_path) {
    if (outcome.accepted) {
        out << "accepted: shelling of " << ordering.order.size() << " facets\n";
        if (!witness_path.empty()) {
            std::ofstream w(witness_path);
            if (!w) throw std::runtime_error("cannot open " + witness_path);
            for (const auto& [i, kk, j] : outcome.witness.all_triples(k, ordering))
                w << i << ' ' << kk << ' ' << j << '\n';
        }
        return 0;
    }
    out << "rejected at pair (i, k) = (" << outcome.failing.first << ", "
        << outcome.failing.second << ")\n";
    return 1;
}

int cmd_counterexample(const RunConfig& config, int n) {
    Output output(config);
    std::ostream& out = output.stream();
    BoundedPoset interval = c_interval(n, config.weyl_budget);
    Poset open = interval.poset.open_interval(interval.bottom, interval.top);
    Complex oc = open.order_complex();
    int components = oc.connected_components();
    out << "open interval ({" << interval.poset.label(interval.bottom) << "}, [pm" << n
        << "]): " << open.size() << " elements, order complex with " << oc.facet_count()
        << " facets\n";
    auto certificate = nonshellable_certificate(oc);
    bool bad_structure = components != 4 || !certificate;
    out << components << " components; "
        << (certificate ? "not shellable" : "certificate inconclusive") << '\n';
    if (certificate) out << "certificate: " << certificate->description() << '\n';
    SearchResult search = search_shelling(oc, 10'000'000);
    switch (search.status) {
        case SearchStatus::found:
            out << "search_shelling: found a shelling (contradiction)\n";
            return 1;
        case SearchStatus::exhausted:
            out << "search_shelling: budget exhausted after " << search.nodes << " nodes\n";
            break;
        case SearchStatus::none_exists:
            out << "search_shelling: none exists (exhaustive, " << search.nodes << " nodes)\n";
            break;
    }
    return bad_structure ? 1 : 0;
}

int cmd_export(const RunConfig& config, SnakeFamily family, int n, bool odd,
               const std::string& restrict_s) {
    if (config.output.empty()) throw CLI::ValidationError("--output", "export needs a path");
    Complex k;
    if (!restrict_s.empty()) {
        if (family != SnakeFamily::B)
            throw CLI::ValidationError("--restrict", "restrictions are defined for family B");
        k = restriction_S(n, parse_int_list(restrict_s), config.weyl_budget);
    } else if (family == SnakeFamily::B) {
        k = odd ? odd_complex_B(n, config.weyl_budget) : complex_B(n, config.weyl_budget);
    } else {
        k = odd ? odd_complex_A(n, config.weyl_budget) : complex_A(n, config.weyl_budget);
    }
    write_scx_file(k, config.output);
    std::cout << "wrote " << config.output << " (" << k.vertex_count() << " vertices, "
              << k.facet_count() << " facets)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simplicial complexes and Z2-characteristic maps of real toric manifolds "
                 "of Weyl-chamber types A and B"};
    app.require_subcommand(1);

    RunConfig config;
    int threads_flag = 1;
    app.add_option("--threads", threads_flag, "worker threads (CHAMBER_THREADS overrides)");
    app.add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"table", "records"}));
    app.add_option("--output", config.output, "write output to a file instead of stdout");
    app.add_option("--max-faces", config.homology_budget.max_faces, "homology face budget");
    app.add_option("--max-snf", config.homology_budget.max_snf_entries, "SNF entry budget");
    app.add_option("--max-n-vertices", config.weyl_budget.max_n_vertices,
                   "vertex enumeration budget");
    app.add_option("--max-n-full", config.weyl_budget.max_n_full_b, "full K_B budget");

    std::string family_s = "B", method = "both", field = "q", scx_path, order_path, order_ids,
                witness_path, restrict_s;
    int n = 0, max_n = 8;
    bool per_s = false, odd = false, print_order = false;
    long long node_budget = 1'000'000;

    auto* snakes = app.add_subcommand("snakes", "snake-number tables");
    snakes->add_option("--family", family_s)->required();
    snakes->add_option("--max-n", max_n)->required();
    snakes->add_option("--method", method)->check(CLI::IsMember({"enumerate", "series", "both"}));

    auto* betti = app.add_subcommand("betti", "Betti numbers by formula and/or subset summation");
    betti->add_option("--family", family_s)->required();
    betti->add_option("--n", n)->required();
    betti->add_option("--method", method)->check(CLI::IsMember({"formula", "sum", "both"}));
    betti->add_option("--field", field, "q or an odd prime");
    betti->add_flag("--per-s", per_s, "print the reduced Betti numbers of every K_S");

    auto* mobius = app.add_subcommand("mobius", "Mobius values mu(empty, [pm k]) for k <= n");
    mobius->add_option("--n", n)->required();

    auto* torsion = app.add_subcommand("torsion", "integral torsion audit over all K_S");
    torsion->add_option("--family", family_s)->required();
    torsion->add_option("--n", n)->required();

    auto* shelling = app.add_subcommand("shelling", "shelling verification and construction");
    shelling->require_subcommand(1);
    auto* sh_lex = shelling->add_subcommand("lex", "lexicographic shelling of K_B^odd(n)");
    sh_lex->add_option("--n", n)->required();
    sh_lex->add_flag("--print", print_order, "print the facet ordering");
    auto* sh_verify = shelling->add_subcommand("verify", "check an ordering");
    sh_verify->add_option("--scx", scx_path, "complex file");
    sh_verify->add_option("--n", n, "use K_B(n) (with --odd: K_B^odd(n))");
    sh_verify->add_flag("--odd", odd);
    sh_verify->add_option("--order", order_path, "whitespace-separated facet ids file");
    sh_verify->add_option("--order-ids", order_ids, "inline facet ids");
    sh_verify->add_option("--witness", witness_path, "write accepted (i, k, j) triples here");
    auto* sh_search = shelling->add_subcommand("search", "backtracking shelling search");
    sh_search->add_option("--scx", scx_path);
    sh_search->add_option("--n", n);
    sh_search->add_flag("--odd", odd);
    sh_search->add_option("--node-budget", node_budget);
    auto* sh_induce = shelling->add_subcommand(
        "induce", "search a shelling of K_B(n), induce it on the odd subcomplex");
    sh_induce->add_option("--n", n)->required();
    sh_induce->add_option("--node-budget", node_budget);

    auto* counter = app.add_subcommand("counterexample", "type-C non-shellable interval");
    counter->add_option("--n", n)->required();

    auto* exporter = app.add_subcommand("export", "write a complex as SCX v1");
    exporter->add_option("--family", family_s)->required();
    exporter->add_option("--n", n)->required();
    exporter->add_flag("--odd", odd);
    exporter->add_option("--restrict", restrict_s, "comma-separated S for (K_B)_S");

    // let --threads/--format/--output/budget flags appear after a subcommand
    for (CLI::App* sub : {snakes, betti, mobius, torsion, shelling, sh_lex, sh_verify, sh_search,
                          sh_induce, counter, exporter})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    config.threads = resolve_threads(threads_flag);
    try {
        if (*snakes) return cmd_snakes(config, parse_family(family_s), max_n, method);
        if (*betti) return cmd_betti(config, parse_family(family_s), n, method, field, per_s);
        if (*mobius) return cmd_mobius(config, n);
        if (*torsion) return cmd_torsion(config, parse_family(family_s), n);
        if (*sh_lex) {
            Output output(config);
            Complex k = odd_complex_B(n, config.weyl_budget);
            FacetOrdering ordering = lex_chain_ordering(n, config.weyl_budget);
            VerifyOutcome outcome = verify_shelling(k, ordering, config.threads);
            if (print_order) print_ordering(output.stream(), ordering);
            return report_verify(output.stream(), k, ordering, outcome, witness_path);
        }
        if (*sh_verify) {
            Output output(config);
            Complex k = load_complex(config, scx_path, n, odd);
            FacetOrdering ordering = load_ordering(order_path, order_ids);
            VerifyOutcome outcome = verify_shelling(k, ordering, config.threads);
            return report_verify(output.stream(), k, ordering, outcome, witness_path);
        }
        if (*sh_search) {
            Output output(config);
            Complex k = load_complex(config, scx_path, n, odd);
            SearchResult res = search_shelling(k, node_budget);
            switch (res.status) {
                case SearchStatus::found:
                    output.stream() << "found (" << res.nodes << " nodes)\n";
                    print_ordering(output.stream(), res.ordering);
                    return 0;
                case SearchStatus::exhausted:
                    output.stream() << "exhausted node budget (" << res.nodes << " nodes)\n";
                    return 3;
                case SearchStatus::none_exists:
                    output.stream() << "none exists (exhaustive, " << res.nodes << " nodes)\n";
                    return 0;
            }
        }
        if (*sh_induce) {
            Output output(config);
            std::ostream& out = output.stream();
            Complex k = complex_B(n, config.weyl_budget);
            SearchResult res = search_shelling(k, node_budget);
            if (res.status != SearchStatus::found) {
                out << "no shelling of K_B(" << n << ") found within budget\n";
                return 3;
            }
            std::vector<int> odd_vertices;
            for (int v = 0; v < k.vertex_count(); ++v)
                if (SignedSet::parse(n, k.label(v)).size() % 2 == 1) odd_vertices.push_back(v);
            InduceResult induced = induce_shelling(k, res.ordering, odd_vertices, config.threads);
            VerifyOutcome outcome =
                verify_shelling(induced.induced, induced.ordering, config.threads);
            out << "induced ordering of " << induced.ordering.order.size() << " facets ("
                << induced.dropped.size() << " dropped)\n";
            return report_verify(out, induced.induced, induced.ordering, outcome, witness_path);
        }
        if (*counter) return cmd_counterexample(config, n);
        if (*exporter) return cmd_export(config, parse_family(family_s), n, odd, restrict_s);
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
