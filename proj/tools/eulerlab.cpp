// Command-line front end: exact number tables, identity verification
// reports, involution traces, poset and complex pipelines, and exporters.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerlab/barred.hpp"
#include "eulerlab/delta.hpp"
#include "eulerlab/poset.hpp"
#include "eulerlab/set_composition.hpp"
#include "eulerlab/simplicial.hpp"
#include "eulerlab/tables.hpp"

namespace {

using namespace eulerlab;
using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::vector<std::string> to_strings(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    for (const BigInt& x : v) out.push_back(x.str());
    return out;
}

// --- numbers ---------------------------------------------------------------

int run_numbers(const std::string& kind_name, int n_max,
                const std::string& format) {
    TableKind kind;
    if (kind_name == "eulerian") kind = TableKind::eulerian;
    else if (kind_name == "stirling") kind = TableKind::stirling2;
    else if (kind_name == "binomial") kind = TableKind::binomial;
    else throw CLI::ValidationError("kind must be eulerian|stirling|binomial");

    NumberTable t = build_table(kind, n_max);
    const int n_lo = kind == TableKind::binomial ? 0 : 1;
    if (format == "text") {
        for (int n = n_lo; n <= n_max; ++n) {
            auto row = t.row(n);
            for (size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? " " : "") << row[i];
            std::cout << "\n";
        }
    } else if (format == "json") {
        json j;
        j["kind"] = kind_name;
        j["n_max"] = n_max;
        j["rows"] = json::array();
        for (int n = n_lo; n <= n_max; ++n) j["rows"].push_back(to_strings(t.row(n)));
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,k,value\n";
        for (int n = n_lo; n <= n_max; ++n) {
            auto [lo, hi] = t.column_range(n);
            for (int k = lo; k <= hi; ++k)
                std::cout << n << "," << k << "," << t.rows.at({n, k}) << "\n";
        }
    } else {
        throw CLI::ValidationError("numbers: format must be text|json|csv");
    }
    return 0;
}

// --- verify ------------------------------------------------------------

struct Verdict {
    std::string label;
    bool pass;
    std::string detail;
};

int report_verdicts(const std::string& identity, std::vector<Verdict> verdicts,
                    double seconds, const std::string& format) {
    bool all = true;
    std::string first_fail;
    for (const auto& v : verdicts)
        if (!v.pass && all) { all = false; first_fail = v.label; }
    if (format == "json") {
        json j;
        j["identity"] = identity;
        j["pass"] = all;
        j["seconds"] = seconds;
        j["cases"] = json::array();
        for (const auto& v : verdicts)
            j["cases"].push_back({{"case", v.label}, {"pass", v.pass}, {"detail", v.detail}});
        if (!all) j["first_counterexample"] = first_fail;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "identity,case,pass,detail\n";
        for (const auto& v : verdicts)
            std::cout << identity << "," << v.label << "," << (v.pass ? "1" : "0")
                      << ",\"" << v.detail << "\"\n";
    } else {
        for (const auto& v : verdicts)
            std::cout << (v.pass ? "pass" : "FAIL") << "  " << v.label
                      << (v.detail.empty() ? "" : "  " + v.detail) << "\n";
        std::cout << identity << ": " << (all ? "PASS" : "FAIL")
                  << "  (" << seconds << " s)\n";
    }
    return all ? 0 : 1;
}

int run_verify(const std::string& identity, std::optional<int> n_opt,
               std::optional<int> k_opt, int n_max,
               const std::string& poset_file, const std::string& complex_file,
               const std::string& partition_file, std::optional<int> delta_arg,
               bool boundary, const std::string& format) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Verdict> verdicts;

    auto sum_for = [&](int n, int k) -> BigInt {
        if (identity == "eq1") return eulerian_sum_powers(n, k);
        if (identity == "eq2") return eulerian_sum_stirling(n, k);
        return eulerian_sum_stirling_shifted(n, k);
    };

    auto cases = [&](auto&& fn) {
        if (n_opt && k_opt) {
            fn(*n_opt, *k_opt);
        } else {
            for (int n = 1; n <= n_max; ++n)
                for (int k = 0; k < n; ++k) fn(n, k);
        }
    };

    if (identity == "eq1" || identity == "eq2" || identity == "eq3") {
        cases([&](int n, int k) {
            BigInt got = sum_for(n, k);
            BigInt want = eulerian(n, k);
            verdicts.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k),
                                got == want, "value " + got.str()});
        });
    } else if (identity == "worpitzky") {
        cases([&](int n, int k) {
            auto c = verify_worpitzky(n, k);
            verdicts.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k),
                                c.ok, c.lhs.str() + " = " + c.rhs.str()});
        });
    } else if (identity == "ordered-stirling") {
        auto one = [&](int n, int k) {
            auto c = verify_ordered_stirling(n, k);
            verdicts.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k),
                                c.ok, c.lhs.str() + " = " + c.rhs.str()});
        };
        if (n_opt && k_opt) one(*n_opt, *k_opt);
        else
            for (int n = 1; n <= n_max; ++n)
                for (int k = 1; k <= n; ++k) one(n, k);
    } else if (identity == "die1" || identity == "die2") {
        if (!n_opt || !k_opt) throw CLI::ValidationError("verify: need --n and --k");
        try {
            if (identity == "die1") {
                Die1Report rep = verify_die_eq1(*n_opt, *k_opt);
                verdicts.push_back({"n=" + std::to_string(*n_opt) + " k=" + std::to_string(*k_opt),
                                    rep.fixed_points == eulerian(*n_opt, *k_opt),
                                    "fixed points " + rep.fixed_points.str() +
                                        ", signed sum " + rep.signed_sum.str()});
            } else {
                Die2Report rep = verify_die_eq2(*n_opt, *k_opt);
                verdicts.push_back({"n=" + std::to_string(*n_opt) + " k=" + std::to_string(*k_opt),
                                    rep.fixed_points == eulerian(*n_opt, *k_opt),
                                    "fixed points " + rep.fixed_points.str() +
                                        ", signed sum " + rep.signed_sum.str()});
            }
        } catch (const involution_error& e) {
            verdicts.push_back({"involution law", false, e.what()});
        }
    } else if (identity == "peul") {
        if (poset_file.empty() || !k_opt)
            throw CLI::ValidationError("verify peul: need --poset and --k");
        Poset p = parse_poset(read_file(poset_file));
        try {
            PeulReport rep = verify_die_peul(p, *k_opt);
            verdicts.push_back({"k=" + std::to_string(*k_opt), true,
                                "value " + rep.signed_sum.str()});
        } catch (const involution_error& e) {
            verdicts.push_back({"k=" + std::to_string(*k_opt), false, e.what()});
        }
    } else if (identity == "die3") {
        SimplicialComplex s;
        IntervalPartition p;
        if (delta_arg) {
            DeltaComplex d = delta_n(*delta_arg, boundary);
            s = d.complex;
            p = d.partition;
        } else if (!complex_file.empty()) {
            s = parse_complex(read_file(complex_file));
            if (!partition_file.empty())
                p = partition_from_json(s, json::parse(read_file(partition_file)));
            else {
                auto found = find_partition(s);
                if (!found) {
                    verdicts.push_back({"partition", false, "no interval partition exists"});
                    auto t1 = std::chrono::steady_clock::now();
                    return report_verdicts(identity, verdicts,
                                           std::chrono::duration<double>(t1 - t0).count(),
                                           format);
                }
                p = *found;
            }
        } else {
            throw CLI::ValidationError("verify die3: need --complex or --delta");
        }
        auto run_k = [&](int k) {
            try {
                Die3Report rep = verify_die_simplicial(s, p, k);
                verdicts.push_back({"k=" + std::to_string(k), true,
                                    "signed sum " + rep.signed_sum.str()});
            } catch (const involution_error& e) {
                verdicts.push_back({"k=" + std::to_string(k), false, e.what()});
            }
        };
        if (k_opt) run_k(*k_opt);
        else
            for (int k = 0; k <= s.d(); ++k) run_k(k);
    } else {
        throw CLI::ValidationError(
            "identity must be eq1|eq2|eq3|worpitzky|ordered-stirling|die1|die2|die3|peul");
    }

    auto t1 = std::chrono::steady_clock::now();
    return report_verdicts(identity, std::move(verdicts),
                           std::chrono::duration<double>(t1 - t0).count(), format);
}

// --- poset -------------------------------------------------------------

int run_poset(const std::string& action, const std::string& file, int k,
              const std::string& format) {
    Poset p = parse_poset(read_file(file));
    if (action == "linext") {
        auto exts = linear_extensions(p);
        if (format == "json") {
            json j = json::array();
            for (const auto& pi : exts) j.push_back(pi);
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& pi : exts) std::cout << permutation_word(pi) << "\n";
        }
    } else if (action == "p-eulerian") {
        if (format == "json") {
            json j;
            for (int kk = 0; kk < p.n; ++kk)
                j[std::to_string(kk)] = p_eulerian(p, kk).str();
            std::cout << j.dump() << "\n";
        } else {
            for (int kk = 0; kk < p.n; ++kk)
                std::cout << kk << " " << p_eulerian(p, kk) << "\n";
        }
    } else if (action == "omega") {
        std::cout << omega(p, k) << "\n";
    } else if (action == "hasse-dot") {
        std::cout << hasse_dot(p);
    } else {
        throw CLI::ValidationError("poset: action must be linext|p-eulerian|omega|hasse-dot");
    }
    return 0;
}

// --- complex -----------------------------------------------------------

void print_vector(const std::vector<BigInt>& v) {
    for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
    std::cout << "\n";
}

int run_complex(const std::string& action, const std::string& file,
                std::optional<int> n, bool boundary,
                const std::string& partition_file, const std::string& format) {
    auto load = [&]() -> SimplicialComplex {
        if (file.empty()) throw CLI::ValidationError("complex: input file required");
        return parse_complex(read_file(file));
    };
    if (action == "fvector") {
        print_vector(f_vector(load()).counts);
    } else if (action == "hvector") {
        print_vector(h_vector(f_vector(load())).h);
    } else if (action == "partition") {
        SimplicialComplex s = load();
        auto p = find_partition(s);
        if (!p) {
            std::cout << "no interval partition exists\n";
            return 1;
        }
        std::cout << partition_to_json(s, *p).dump(2) << "\n";
    } else if (action == "verify-partition") {
        SimplicialComplex s = load();
        if (partition_file.empty())
            throw CLI::ValidationError("complex verify-partition: need --partition");
        IntervalPartition p = partition_from_json(s, json::parse(read_file(partition_file)));
        PartitionReport rep = verify_partition(s, p);
        if (rep.ok) {
            std::cout << "valid, census ";
            print_vector(rep.census);
            return 0;
        }
        std::cout << "invalid: " << rep.issue << "\n";
        return 1;
    } else if (action == "barycentric") {
        std::cout << complex_to_json(barycentric(load())).dump(2) << "\n";
    } else if (action == "delta") {
        if (!n) throw CLI::ValidationError("complex delta: need --n");
        DeltaComplex d = delta_n(*n, boundary);
        if (format == "json") {
            json j = complex_to_json(d.complex);
            j["partition"] = partition_to_json(d.complex, d.partition);
            std::cout << j.dump(2) << "\n";
        } else {
            FVector f = f_vector(d.complex);
            std::cout << "f=";
            print_vector(f.counts);
            std::cout << "h=";
            print_vector(h_vector(f).h);
            std::cout << "blocks=" << d.partition.blocks.size() << "\n";
        }
    } else if (action == "facedot") {
        SimplicialComplex s = load();
        if (!partition_file.empty()) {
            IntervalPartition p =
                partition_from_json(s, json::parse(read_file(partition_file)));
            std::cout << face_poset_dot(s, &p);
        } else {
            std::cout << face_poset_dot(s);
        }
    } else {
        throw CLI::ValidationError(
            "complex: action must be fvector|hvector|partition|verify-partition|barycentric|delta|facedot");
    }
    return 0;
}

// --- fixtures ------------------------------------------------------------

void seed_corpus(const std::string& dir) {
    write_file(dir + "/fig1.json", R"({"n":3,"covers":[[1,2],[3,2]]})" "\n");
    write_file(dir + "/fig2.json",
               R"({"n":5,"covers":[[1,2],[2,5],[1,4],[4,3]]})" "\n");
    write_file(dir + "/fig3.json",
               R"({"vertices":["a","b","c","d","e"],)"
               R"("facets":[["a","b","c"],["b","d"],["c","e"],["d","e"]]})" "\n");
    write_file(dir + "/fig4.json",
               R"({"vertices":["a","b","c","d","e"],)"
               R"("facets":[["a","b","c"],["b","c","d"],["c","d","e"]]})" "\n");
    write_file(dir + "/fig4_partition.json",
               R"([{"anchor":[],"facet":["a","b","c"]},)"
               R"({"anchor":["d"],"facet":["b","c","d"]},)"
               R"({"anchor":["e"],"facet":["c","d","e"]}])" "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Eulerian-number identities, sign-reversing involution "
                 "verification, posets, and partitionable simplicial complexes"};
    app.require_subcommand(0, 1);

    std::string seed_dir;
    app.add_option("--seed-corpus", seed_dir,
                   "write the bundled poset/complex fixtures into a directory");

    std::string format = "text";

    auto* numbers = app.add_subcommand("numbers", "print a number triangle");
    std::string kind;
    int n_max = 8;
    numbers->add_option("kind", kind, "eulerian|stirling|binomial")->required();
    numbers->add_option("n_max", n_max, "largest row")->required();
    numbers->add_option("--format", format, "text|json|csv");

    auto* verify = app.add_subcommand("verify", "machine-check an identity");
    std::string identity;
    std::optional<int> n_opt, k_opt, delta_arg;
    int sweep_max = 8;
    std::string poset_file, complex_file, partition_file;
    bool boundary = false;
    verify->add_option("identity", identity,
                       "eq1|eq2|eq3|worpitzky|ordered-stirling|die1|die2|die3|peul")
        ->required();
    verify->add_option("--n", n_opt, "size parameter");
    verify->add_option("--k", k_opt, "descent/bar parameter");
    verify->add_option("--n-max", sweep_max, "sweep bound when --n/--k omitted");
    verify->add_option("--poset", poset_file, "poset JSON file");
    verify->add_option("--complex", complex_file, "complex JSON file");
    verify->add_option("--partition", partition_file, "partition JSON file");
    verify->add_option("--delta", delta_arg, "use the subdivided simplex of this size");
    verify->add_flag("--boundary", boundary, "boundary variant for --delta");
    verify->add_option("--format", format, "text|json|csv");

    auto* poset = app.add_subcommand("poset", "poset pipelines");
    std::string poset_action, poset_input;
    int poset_k = 0;
    poset->add_option("action", poset_action, "linext|p-eulerian|omega|hasse-dot")
        ->required();
    poset->add_option("input", poset_input, "poset JSON file")->required();
    poset->add_option("--k", poset_k, "bound for omega");
    poset->add_option("--format", format, "text|json|dot");

    auto* cplx = app.add_subcommand("complex", "simplicial complex pipelines");
    std::string cplx_action, cplx_input;
    std::optional<int> cplx_n;
    bool cplx_boundary = false;
    std::string cplx_partition;
    cplx->add_option("action", cplx_action,
                     "fvector|hvector|partition|verify-partition|barycentric|delta|facedot")
        ->required();
    cplx->add_option("input", cplx_input, "complex JSON file");
    cplx->add_option("--n", cplx_n, "size for delta");
    cplx->add_flag("--boundary", cplx_boundary, "boundary variant for delta");
    cplx->add_option("--partition", cplx_partition, "partition JSON file");
    cplx->add_option("--format", format, "text|json|dot");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!seed_dir.empty()) {
            seed_corpus(seed_dir);
            if (app.get_subcommands().empty()) return 0;
        }
        if (numbers->parsed()) return run_numbers(kind, n_max, format);
        if (verify->parsed())
            return run_verify(identity, n_opt, k_opt, sweep_max, poset_file,
                              complex_file, partition_file, delta_arg, boundary,
                              format);
        if (poset->parsed()) return run_poset(poset_action, poset_input, poset_k, format);
        if (cplx->parsed())
            return run_complex(cplx_action, cplx_input, cplx_n, cplx_boundary,
                               cplx_partition, format);
        if (seed_dir.empty()) std::cout << app.help();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
