// Command-line driver: generate instances, solve them, verify the polyhedral
// results on small graphs and summarize runs.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tecs/copar.hpp"
#include "tecs/corpus.hpp"
#include "tecs/instances.hpp"
#include "tecs/oracle.hpp"
#include "tecs/report.hpp"
#include "tecs/solver.hpp"

namespace fs = std::filesystem;
using namespace tecs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitTimeLimit = 3;
constexpr int kExitMismatch = 4;

struct GenerateArgs {
    std::string kind;
    int n = 0;
    int k = 4;
    double alpha = 0.7;
    int ell = 10;
    std::int64_t weight_lo = -10;
    std::int64_t weight_hi = 3;
    int count = 1;
    std::uint64_t seed = 1;
    std::string out = "instances";
    bool reject_trivial = false;
};

// Optimum is 0, the whole graph, or spans every vertex.
bool trivial(const Instance& inst) {
    ModelConfig cfg;
    cfg.separation_mode = SeparationMode::Fractional;
    const SolveReport r = solve(inst.graph, inst.weights, cfg);
    if (r.objective == 0) return true;
    if (static_cast<int>(r.incumbent.edges.size()) == inst.graph.edge_count()) return true;
    return static_cast<int>(r.incumbent.vertices(inst.graph).size()) == inst.graph.vertex_count();
}

int cmd_generate(const GenerateArgs& a) {
    fs::create_directories(a.out);
    std::ofstream manifest(fs::path(a.out) / "manifest.csv");
    manifest << "file,kind,n,k,alpha,ell,weight_lo,weight_hi,seed,vertices,edges\n";
    int written = 0;
    std::uint64_t seed = a.seed;
    const int attempts = a.reject_trivial ? 20 * a.count : a.count;
    for (int attempt = 0; attempt < attempts && written < a.count; ++attempt, ++seed) {
        InstanceSpec spec;
        spec.seed = seed;
        if (a.kind == "knn") spec.kind = SparsifiedKnn{a.n == 0 ? 150 : a.n, a.k, a.alpha};
        else if (a.kind == "kncycles") spec.kind = KnCycles{a.ell};
        else spec.kind = Complete{a.n == 0 ? 15 : a.n, a.weight_lo, a.weight_hi};
        const Instance inst = generate(spec);
        if (a.reject_trivial && trivial(inst)) continue;
        const std::string file = spec.name() + ".tecs";
        write_instance(fs::path(a.out) / file, inst.graph, inst.weights, spec.name());
        manifest << file << ',' << a.kind << ',' << a.n << ',' << a.k << ',' << a.alpha << ',' << a.ell << ','
                 << a.weight_lo << ',' << a.weight_hi << ',' << seed << ',' << inst.graph.vertex_count() << ','
                 << inst.graph.edge_count() << '\n';
        ++written;
    }
    std::cout << "wrote " << written << " instance(s) to " << a.out << "\n";
    if (written < a.count) {
        std::cerr << "only " << written << " of " << a.count << " non-trivial instances found\n";
        return kExitError;
    }
    return kExitOk;
}

struct SolveArgs {
    std::vector<std::string> files;
    std::string model = "basic";
    std::string separation = "integer";
    bool all_variants = false;
    double time_limit = 600.0;
    std::uint64_t seed = 0;
    int cut_cap = 20;
    std::string csv;
    bool print_solution = false;
};

int cmd_solve(const SolveArgs& a) {
    std::vector<std::pair<Model, SeparationMode>> variants;
    if (a.all_variants) {
        for (Model m : {Model::Basic, Model::Strengthened})
            for (SeparationMode s : {SeparationMode::IntegerOnly, SeparationMode::Fractional}) variants.emplace_back(m, s);
    } else {
        variants.emplace_back(a.model == "basic" ? Model::Basic : Model::Strengthened,
                              a.separation == "integer" ? SeparationMode::IntegerOnly : SeparationMode::Fractional);
    }

    std::vector<std::pair<std::string, std::string>> inputs;
    for (const auto& f : a.files) inputs.emplace_back(fs::path(f).stem().string(), f);
    std::sort(inputs.begin(), inputs.end());

    std::optional<std::ofstream> csv;
    if (!a.csv.empty()) {
        csv.emplace(a.csv);
        if (!*csv) throw std::runtime_error("cannot write " + a.csv);
        *csv << kCsvHeader << "\n";
    }
    std::cout << kCsvHeader << "\n";
    bool timed_out = false;
    for (const auto& [id, path] : inputs) {
        const Instance inst = read_instance(path);
        const int dim = dimension(inst.graph);
        for (const auto& [model, sep] : variants) {
            ModelConfig cfg;
            cfg.model = model;
            cfg.separation_mode = sep;
            cfg.time_limit = a.time_limit;
            cfg.seed = a.seed;
            cfg.cut_cap_per_round = a.cut_cap;
            const SolveReport rep = solve(inst.graph, inst.weights, cfg);
            RunRecord rec{id,
                          inst.graph.vertex_count(),
                          inst.graph.edge_count(),
                          dim,
                          to_string(model),
                          to_string(sep),
                          rep.objective,
                          rep.dual_bound,
                          to_string(rep.status),
                          rep.stats.seconds,
                          rep.stats.nodes,
                          rep.stats.cuts_asymmetric,
                          rep.stats.cuts_connectivity,
                          rep.stats.cuts_coparallel,
                          rep.stats.cuts_odd_star};
            const std::string row = to_csv_row(rec);
            std::cout << row << std::endl;
            if (csv) *csv << row << std::endl;
            if (a.print_solution) {
                std::cout << "c edges";
                for (EdgeId e : rep.incumbent.edges)
                    std::cout << ' ' << inst.graph.edge(e).u + 1 << '-' << inst.graph.edge(e).v + 1;
                std::cout << "\n";
            }
            timed_out = timed_out || rep.status == SolveStatus::TimeLimit;
        }
    }
    return timed_out ? kExitTimeLimit : kExitOk;
}

struct VerifyArgs {
    std::string only = "all";
    int random = 20;
    std::uint64_t seed = 1;
    std::vector<std::string> files;
    bool skip_large = false;
};

bool run_suites(const std::string& name, const Graph& g, const std::string& only) {
    bool ok = true;
    auto line = [&](const std::string& suite, bool pass, const std::string& detail) {
        std::cout << (pass ? "PASS " : "FAIL ") << suite << ' ' << name << " " << detail << "\n";
        ok = ok && pass;
    };
    if (only == "all" || only == "dimension") {
        const VertexSet2EC set = enumerate_2ec(g);
        const int dim = affine_dimension(set);
        const int classes = coparallel_partition(g).size();
        std::ostringstream d;
        d << "(" << set.vectors.size() << " vertices, dim " << dim << ", |CP| " << classes << ")";
        line("dimension", dim == classes, d.str());
    }
    if (only == "all" || only == "lattice") {
        if (g.edge_count() > kLatticeEdgeBudget) {
            std::cout << "SKIP lattice " << name << " (more than " << kLatticeEdgeBudget << " edges)\n";
        } else {
            line("lattice", check_lattice_points(g), "");
        }
    }
    if (only == "all" || only == "facets") {
        const TheoremReport rep = check_theorems(g);
        for (const TheoremCheck& c : rep.checks) {
            std::ostringstream d;
            d << "[" << c.name << "] checked " << c.checked << ", skipped " << c.skipped << ", mismatches "
              << c.mismatches;
            line("facets", c.passed(), d.str());
            for (const auto& w : c.witnesses) std::cout << "  mismatch: " << w << "\n";
        }
    }
    return ok;
}

int cmd_verify(const VerifyArgs& a) {
    std::vector<NamedGraph> corpus = verification_corpus(a.random, a.seed);
    for (const auto& f : a.files) {
        try {
            Instance inst = read_instance(f);
            corpus.push_back({fs::path(f).stem().string(), std::move(inst.graph)});
        } catch (const std::exception& e) {
            std::cout << "SKIP " << f << " (" << e.what() << ")\n";
        }
    }
    bool ok = true;
    for (const NamedGraph& ng : corpus) {
        if (a.skip_large && ng.graph.edge_count() > 15) continue;
        try {
            if (!is_two_edge_connected(ng.graph)) {
                std::cout << "SKIP " << ng.name << " (not 2-edge-connected)\n";
                continue;
            }
            ok = run_suites(ng.name, ng.graph, a.only) && ok;
        } catch (const BudgetExceeded& e) {
            std::cout << "SKIP " << ng.name << " (" << e.what() << ")\n";
        }
    }
    std::cout << (ok ? "all checks passed" : "mismatches found") << "\n";
    return ok ? kExitOk : kExitMismatch;
}

struct ReportArgs {
    std::vector<std::string> csvs;
    std::string out = "report";
    std::string group_by = "auto";
};

int cmd_report(const ReportArgs& a) {
    std::vector<RunRecord> all;
    for (const auto& path : a.csvs) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        auto recs = read_csv(in);
        all.insert(all.end(), recs.begin(), recs.end());
    }
    const GroupBy by = a.group_by == "dim" ? GroupBy::Dimension : a.group_by == "n" ? GroupBy::Vertices : GroupBy::Auto;
    const auto rows = aggregate(all, by);
    {
        std::ofstream out(a.out + ".csv");
        write_aggregate_csv(out, rows);
    }
    {
        std::ofstream out(a.out + ".svg");
        out << render_svg(rows);
    }
    write_aggregate_csv(std::cout, rows);
    std::cout << "wrote " << a.out << ".csv and " << a.out << ".svg\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum-weight 2-edge-connected subgraphs: solver and polyhedral verifier"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Write a batch of instance files and a manifest");
    g->add_option("kind", gen.kind, "knn, kncycles or complete")->required()->check(CLI::IsMember({"knn", "kncycles", "complete"}));
    g->add_option("--n", gen.n, "Number of vertices (knn, complete)");
    g->add_option("--k", gen.k, "Nearest neighbours (knn)");
    g->add_option("--alpha", gen.alpha, "Fraction of edges offered for deletion (knn)")->check(CLI::Range(0.0, 1.0));
    g->add_option("--ell", gen.ell, "Number of complete graphs (kncycles)");
    g->add_option("--weight-lo", gen.weight_lo, "Lowest weight (complete)");
    g->add_option("--weight-hi", gen.weight_hi, "Highest weight (complete)");
    g->add_option("--count", gen.count, "Number of instances")->check(CLI::PositiveNumber);
    g->add_option("--seed", gen.seed, "First seed; instance i uses seed + i");
    g->add_option("--out", gen.out, "Output directory");
    g->add_flag("--reject-trivial", gen.reject_trivial, "Skip instances whose optimum is empty, everything or spanning");

    SolveArgs sol;
    auto* s = app.add_subcommand("solve", "Solve instance files, one CSV row per instance and variant");
    s->add_option("files", sol.files, "Instance files")->required()->check(CLI::ExistingFile);
    s->add_option("--model", sol.model, "basic or strengthened")->check(CLI::IsMember({"basic", "strengthened"}));
    s->add_option("--separation", sol.separation, "integer or fractional")->check(CLI::IsMember({"integer", "fractional"}));
    s->add_flag("--all-variants", sol.all_variants, "Run all four model/separation combinations");
    s->add_option("--time-limit", sol.time_limit, "Seconds per solve")->check(CLI::PositiveNumber);
    s->add_option("--seed", sol.seed, "Seed for randomized separation choices");
    s->add_option("--cut-cap", sol.cut_cap, "Rows added per family and round")->check(CLI::PositiveNumber);
    s->add_option("--csv", sol.csv, "Also write the rows to this file");
    s->add_flag("--print-solution", sol.print_solution, "Print the chosen edges after each row");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Check dimension, lattice-point and facet results on a corpus");
    v->add_option("--only", ver.only, "dimension, lattice, facets or all")
        ->check(CLI::IsMember({"all", "dimension", "lattice", "facets"}));
    v->add_option("--random", ver.random, "Number of random corpus graphs");
    v->add_option("--seed", ver.seed, "Seed for the random corpus graphs");
    v->add_flag("--skip-large", ver.skip_large, "Skip corpus graphs with more than 15 edges");
    v->add_option("files", ver.files, "Extra instance files");

    ReportArgs rep;
    auto* r = app.add_subcommand("report", "Aggregate CSV runs into a table and an SVG plot");
    r->add_option("csv", rep.csvs, "CSV files written by solve")->required()->check(CLI::ExistingFile);
    r->add_option("--out", rep.out, "Output prefix for <prefix>.csv and <prefix>.svg");
    r->add_option("--group-by", rep.group_by, "auto, dim or n")->check(CLI::IsMember({"auto", "dim", "n"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*g) return cmd_generate(gen);
        if (*s) return cmd_solve(sol);
        if (*v) return cmd_verify(ver);
        if (*r) return cmd_report(rep);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
