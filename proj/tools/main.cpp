// Command-line driver: kernelize streams, solve instances exactly, generate
// the lower-bound families, and verify kernels and constructions against the
// brute-force oracles.
//
// Exit codes: 0 success, 1 verification found a mismatch or violation,
// 2 parse/configuration errors, 3 pass budget violations.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "strkern/accounting.hpp"
#include "strkern/eds.hpp"
#include "strkern/hitting_set.hpp"
#include "strkern/instance_gen.hpp"
#include "strkern/obstructions.hpp"
#include "strkern/oracles.hpp"
#include "strkern/set_matching.hpp"
#include "strkern/stream.hpp"

using namespace strkern;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

Problem problem_from_flag(const std::string& flag) {
    if (flag == "hs") return Problem::HittingSet;
    if (flag == "sm") return Problem::SetMatching;
    if (flag == "eds") return Problem::EdgeDominatingSet;
    throw std::invalid_argument("unknown problem '" + flag + "'");
}

std::vector<ElementId> parse_csv_ids(const std::string& csv) {
    std::vector<ElementId> ids;
    if (csv.empty()) return ids;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string token = csv.substr(pos, comma == std::string::npos ? csv.size() - pos : comma - pos);
        if (token.empty()) throw std::invalid_argument("empty id in list '" + csv + "'");
        ids.push_back(static_cast<ElementId>(std::stoul(token)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return ids;
}

std::string yes_no(bool value) { return value ? "YES" : "NO"; }

// ---------------------------------------------------------------------------

struct KernelizeOptions {
    std::string problem;
    std::string input = "-";
    bool stats = false;
    bool dump_trie = false;
    unsigned max_passes = 0;  // 0 = problem default
};

int run_kernelize(const KernelizeOptions& opt) {
    Problem problem = problem_from_flag(opt.problem);
    ParsedInstance inst = parse_instance(read_input(opt.input));
    if (inst.header.problem != problem)
        throw std::invalid_argument("input header does not match --problem");

    if (problem == Problem::EdgeDominatingSet) {
        auto source = make_edge_source(inst, opt.max_passes ? opt.max_passes : 2);
        EdsKernelizer kernelizer(source.header());
        source.open_pass();
        while (auto e = source.next()) {
            if (kernelizer.pass1_step(*e) == EdsKernelizer::Pass1Decision::EarlyNo) break;
        }
        if (!kernelizer.no_verdict() &&
            kernelizer.between_passes() == EdsKernelizer::BetweenDecision::Proceed) {
            source.open_pass();
            while (auto e = source.next()) kernelizer.pass2_step(*e);
        }
        auto result = kernelizer.finalize();
        std::cout << serialize_kernel(result);
        if (opt.stats) std::cout << stats_comment_lines(snapshot(kernelizer));
        return 0;
    }

    auto source = make_set_source(inst, opt.max_passes ? opt.max_passes : 1);
    auto dump = [&](const SubsetTrie* trie) {
        if (!opt.dump_trie || !trie) return;
        trie->visit_nodes([](std::span<const ElementId> path, std::uint64_t count) {
            std::cout << "c trie";
            for (ElementId id : path) std::cout << ' ' << id;
            std::cout << " count=" << count << '\n';
        });
    };
    if (problem == Problem::HittingSet) {
        HittingSetKernelizer kernelizer(source.header());
        source.open_pass();
        while (auto f = source.next()) kernelizer.step(*f);
        std::cout << serialize_kernel(kernelizer.finalize());
        if (opt.stats) std::cout << stats_comment_lines(snapshot(kernelizer));
        dump(&kernelizer.trie());
    } else {
        SetMatchingKernelizer kernelizer(source.header());
        source.open_pass();
        while (auto f = source.next()) kernelizer.step(*f);
        std::cout << serialize_kernel(kernelizer.finalize());
        if (opt.stats) std::cout << stats_comment_lines(snapshot(kernelizer));
        dump(kernelizer.trie());
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct SolveOptions {
    std::string problem;
    std::string input = "-";
    unsigned star_arms = 2;
    std::string chordal = "both";
};

int run_solve(const SolveOptions& opt) {
    const std::string text = read_input(opt.input);

    if (opt.problem.rfind("predicate:", 0) == 0) {
        const std::string name = opt.problem.substr(10);
        if (name == "has_colorful_neighborhood") {
            auto inst = parse_bipartite_instance(text);
            std::cout << yes_no(has_colorful_neighborhood(inst.graph, inst.left_side)) << '\n';
            return 0;
        }
        GraphInstance g = to_graph_instance(parse_instance(text));
        if (name == "is_chordal") {
            bool literal = is_chordal(g, ChordalSemantics::InducedC4Only);
            bool standard = is_chordal(g, ChordalSemantics::AllInducedCycles);
            if (opt.chordal == "c4") {
                std::cout << yes_no(literal) << '\n';
            } else if (opt.chordal == "standard") {
                std::cout << yes_no(standard) << '\n';
            } else if (literal == standard) {
                std::cout << yes_no(literal) << '\n';
            } else {
                std::cout << "c4=" << yes_no(literal) << " standard=" << yes_no(standard) << '\n';
                return 1;
            }
            return 0;
        }
        bool value = false;
        if (name == "is_cluster_graph") value = is_cluster_graph(g);
        else if (name == "is_p4_free") value = is_p4_free(g);
        else if (name == "is_triangle_free") value = is_triangle_free(g);
        else if (name == "has_triangle") value = has_triangle(g);
        else if (name == "is_forest") value = is_forest(g);
        else if (name == "is_bipartite") value = is_bipartite(g);
        else if (name == "has_star") value = has_star(g, opt.star_arms);
        else throw std::invalid_argument("unknown predicate '" + name + "'");
        std::cout << yes_no(value) << '\n';
        return 0;
    }

    Problem problem = problem_from_flag(opt.problem);
    ParsedInstance inst = parse_instance(text);
    if (inst.header.problem != problem)
        throw std::invalid_argument("input header does not match --problem");
    bool answer = false;
    switch (problem) {
    case Problem::HittingSet: answer = oracle_hitting_set(to_family_instance(inst), inst.header.k); break;
    case Problem::SetMatching: answer = oracle_set_matching(to_family_instance(inst), inst.header.k); break;
    case Problem::EdgeDominatingSet:
        answer = oracle_edge_dominating_set(to_graph_instance(inst), inst.header.k);
        break;
    }
    std::cout << yes_no(answer) << '\n';
    return 0;
}

// ---------------------------------------------------------------------------

struct GenOptions {
    std::string family;
    ElementId n_leaves = 4;
    std::string leaves;
    bool leaves_given = false;
    std::string probe = "none";
    std::size_t m = 1;
    unsigned star_arms = 2;
    unsigned n_prime = 3;
    std::string v1, v2;
};

int run_gen(const GenOptions& opt) {
    if (opt.family == "eds-star") {
        std::vector<ElementId> leaves;
        if (opt.leaves_given) {
            leaves = parse_csv_ids(opt.leaves);
        } else {
            for (ElementId i = 0; i < opt.n_leaves; ++i) leaves.push_back(i);
        }
        auto stream = eds_star_stream(leaves, opt.n_leaves);
        std::uint64_t n = opt.n_leaves + 2;
        std::optional<Edge> probe;
        if (opt.probe == "fresh") {
            probe = Edge(eds_star_anchor(opt.n_leaves), static_cast<ElementId>(opt.n_leaves + 2));
            n = opt.n_leaves + 3;
        } else if (opt.probe != "none") {
            ElementId leaf = static_cast<ElementId>(std::stoul(opt.probe));
            if (leaf >= opt.n_leaves) throw std::invalid_argument("probe leaf out of range");
            probe = Edge(eds_star_anchor(opt.n_leaves), leaf);
        }
        InstanceHeader header{Problem::EdgeDominatingSet, 2, 1, n};
        std::cout << serialize_header(header);
        for (const Edge& e : stream) std::cout << "e " << e.u << ' ' << e.v << '\n';
        if (probe) std::cout << "e " << probe->u << ' ' << probe->v << '\n';
        return 0;
    }

    if (opt.family.rfind("obstruction:", 0) == 0) {
        auto problem = obstruction_problem_from_name(opt.family.substr(12));
        if (!problem) throw std::invalid_argument("unknown obstruction problem");
        ObstructionSpec spec = make_obstruction(*problem, opt.m, opt.star_arms);
        std::cout << "c obstruction problem=" << obstruction_problem_name(spec.problem)
                  << " m=" << spec.base.edges.size() << " c=" << spec.c << " k=" << spec.k
                  << " polarity=" << (spec.polarity == Polarity::InF ? "inf" : "notinf") << '\n';
        InstanceHeader header{Problem::EdgeDominatingSet, 2, spec.k, spec.base.n};
        std::cout << serialize_header(header);
        for (const Edge& e : spec.base.edges) std::cout << "e " << e.u << ' ' << e.v << '\n';
        for (std::size_t i = 0; i < spec.remainders.size(); ++i) {
            std::cout << "c remainder " << i;
            for (const Edge& e : spec.remainders[i]) std::cout << ' ' << e.u << ' ' << e.v;
            std::cout << '\n';
        }
        return 0;
    }

    if (opt.family.rfind("fooling:", 0) == 0) {
        const std::string game_name = opt.family.substr(8);
        FoolingGame game;
        if (game_name == "ce") game = FoolingGame::ClusterEditing;
        else if (game_name == "mfi") game = FoolingGame::MinFillIn;
        else throw std::invalid_argument("unknown fooling game '" + game_name + "'");
        auto g = fooling_game_graph(game, opt.n_prime, parse_csv_ids(opt.v1), parse_csv_ids(opt.v2));
        std::cout << "c fooling game=" << game_name << " nprime=" << opt.n_prime << '\n';
        InstanceHeader header{Problem::EdgeDominatingSet, 2, 0, g.n};
        std::cout << serialize_header(header);
        for (const Edge& e : g.edges) std::cout << "e " << e.u << ' ' << e.v << '\n';
        return 0;
    }

    throw std::invalid_argument("unknown family '" + opt.family + "'");
}

// ---------------------------------------------------------------------------

struct VerifyKernelOptions {
    std::string problem;
    std::uint64_t trials = 500;
    std::uint64_t seed = 1;
};

int run_verify_kernel(const VerifyKernelOptions& opt) {
    Problem problem = problem_from_flag(opt.problem);
    SplitMix64 rng(opt.seed);
    for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
        bool full_answer = false;
        bool kernel_answer = false;
        ParsedInstance replay;
        if (problem == Problem::EdgeDominatingSet) {
            auto graph = random_graph_stream(rng);
            full_answer = oracle_edge_dominating_set(graph_instance_of(graph), graph.header.k);
            StreamSource<Edge> source(graph.header, graph.stream, 2);
            auto result = kernelize_edge_dominating_set(source);
            kernel_answer = result.verdict == Verdict::TrivialNo
                                ? false
                                : oracle_edge_dominating_set(
                                      GraphInstance(result.instance->header.n, result.instance->edges),
                                      graph.header.k);
            replay = {graph.header, {}, graph.stream};
        } else {
            auto fam = random_family_stream(rng, problem);
            FamilyInstance full = family_instance_of(fam);
            StreamSource<HyperEdge> source(fam.header, fam.stream, 1);
            KernelResult result = problem == Problem::HittingSet ? kernelize_hitting_set(source)
                                                                 : kernelize_set_matching(source);
            if (problem == Problem::HittingSet) {
                full_answer = oracle_hitting_set(full, fam.header.k);
                kernel_answer = oracle_hitting_set(
                    {result.instance->header.n, fam.header.d, result.instance->sets}, fam.header.k);
            } else {
                full_answer = oracle_set_matching(full, fam.header.k);
                kernel_answer =
                    result.verdict == Verdict::TrivialYes
                        ? true
                        : oracle_set_matching(
                              {result.instance->header.n, fam.header.d, result.instance->sets},
                              fam.header.k);
            }
            replay = {fam.header, fam.stream, {}};
        }
        if (full_answer != kernel_answer) {
            std::cout << "mismatch trial=" << trial << " full=" << yes_no(full_answer)
                      << " kernel=" << yes_no(kernel_answer) << '\n';
            std::cout << serialize_instance(replay);
            return 1;
        }
    }
    std::cout << "verify-kernel problem=" << opt.problem << " trials=" << opt.trials
              << " seed=" << opt.seed << " mismatches=0\n";
    return 0;
}

struct VerifyObstructionOptions {
    std::string problem;
    std::size_t m = 4;
    unsigned star_arms = 2;
};

int run_verify_obstruction(const VerifyObstructionOptions& opt) {
    auto problem = obstruction_problem_from_name(opt.problem);
    if (!problem) throw std::invalid_argument("unknown obstruction problem '" + opt.problem + "'");
    auto spec = make_obstruction(*problem, opt.m, opt.star_arms);
    auto report = verify_obstruction(spec);
    std::cout << "verify-obstruction problem=" << opt.problem << " m=" << opt.m << " c=" << spec.c
              << " k=" << spec.k << " checks=" << report.checks
              << (report.ok ? " ok" : " FAILED") << '\n';
    if (!report.ok && report.counterexample) {
        std::cout << "counterexample f_mask=" << report.counterexample->f_mask
                  << " edge=" << report.counterexample->edge_index << " "
                  << report.counterexample->message << '\n';
    }
    return report.ok ? 0 : 1;
}

struct VerifyFoolingOptions {
    std::string game;
    unsigned n_prime = 3;
};

int run_verify_fooling(const VerifyFoolingOptions& opt) {
    FoolingGame game;
    if (opt.game == "ce") game = FoolingGame::ClusterEditing;
    else if (opt.game == "mfi") game = FoolingGame::MinFillIn;
    else throw std::invalid_argument("unknown fooling game '" + opt.game + "'");
    auto report = verify_fooling_set(game, opt.n_prime);
    std::cout << "verify-fooling game=" << opt.game << " nprime=" << opt.n_prime
              << " members=" << report.members_checked << " pairs=" << report.pairs_checked
              << (report.ok ? " ok" : " FAILED") << '\n';
    for (const auto& v : report.violations)
        std::cout << "violation kind=" << static_cast<int>(v.kind) << " x=" << v.x << " y=" << v.y
                  << " x2=" << v.x2 << " y2=" << v.y2 << '\n';
    return report.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"streaming kernelization toolkit"};
    app.require_subcommand(1);

    KernelizeOptions kernelize_opt;
    auto* kernelize = app.add_subcommand("kernelize", "run a streaming kernelizer over an instance");
    kernelize->add_option("--problem", kernelize_opt.problem, "hs, sm or eds")->required();
    kernelize->add_option("input", kernelize_opt.input, "input path or - for stdin");
    kernelize->add_flag("--stats", kernelize_opt.stats, "append a memory report as comment lines");
    kernelize->add_flag("--dump-trie", kernelize_opt.dump_trie, "append the subset trie as comment lines");
    kernelize->add_option("--max-passes", kernelize_opt.max_passes,
                          "override the stream pass budget (diagnostics)");

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "decide an instance exactly by brute force");
    solve->add_option("--problem", solve_opt.problem, "hs, sm, eds or predicate:NAME")->required();
    solve->add_option("input", solve_opt.input, "input path or - for stdin");
    solve->add_option("--s", solve_opt.star_arms, "star size for predicate:has_star");
    solve->add_option("--chordal", solve_opt.chordal, "c4, standard or both (default both)");

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate a lower-bound instance family");
    gen->add_option("--family", gen_opt.family, "eds-star, obstruction:NAME or fooling:<ce|mfi>")
        ->required();
    gen->add_option("--n", gen_opt.n_leaves, "number of star leaves");
    auto* leaves_option = gen->add_option("--leaves", gen_opt.leaves, "chosen leaves, e.g. 0,2,3");
    gen->add_option("--probe", gen_opt.probe, "none, fresh or a leaf id");
    gen->add_option("--m", gen_opt.m, "number of base edges");
    gen->add_option("--s", gen_opt.star_arms, "star size for star packing");
    gen->add_option("--nprime", gen_opt.n_prime, "fooling ground set size");
    gen->add_option("--v1", gen_opt.v1, "first player input, e.g. 0,2");
    gen->add_option("--v2", gen_opt.v2, "second player input");

    VerifyKernelOptions vk_opt;
    auto* verify_kernel = app.add_subcommand("verify-kernel", "compare kernels against the oracle");
    verify_kernel->add_option("--problem", vk_opt.problem, "hs, sm or eds")->required();
    verify_kernel->add_option("--trials", vk_opt.trials, "number of random trials");
    verify_kernel->add_option("--seed", vk_opt.seed, "random seed");

    VerifyObstructionOptions vo_opt;
    auto* verify_obstruction_cmd =
        app.add_subcommand("verify-obstruction", "check a critical-edge construction exhaustively");
    verify_obstruction_cmd->add_option("--problem", vo_opt.problem, "construction name")->required();
    verify_obstruction_cmd->add_option("--m", vo_opt.m, "number of base edges");
    verify_obstruction_cmd->add_option("--s", vo_opt.star_arms, "star size for star packing");

    VerifyFoolingOptions vf_opt;
    auto* verify_fooling_cmd =
        app.add_subcommand("verify-fooling", "check the fooling-set conditions exhaustively");
    verify_fooling_cmd->add_option("--game", vf_opt.game, "ce or mfi")->required();
    verify_fooling_cmd->add_option("--nprime", vf_opt.n_prime, "ground set size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    gen_opt.leaves_given = leaves_option->count() > 0;

    try {
        if (kernelize->parsed()) return run_kernelize(kernelize_opt);
        if (solve->parsed()) return run_solve(solve_opt);
        if (gen->parsed()) return run_gen(gen_opt);
        if (verify_kernel->parsed()) return run_verify_kernel(vk_opt);
        if (verify_obstruction_cmd->parsed()) return run_verify_obstruction(vo_opt);
        if (verify_fooling_cmd->parsed()) return run_verify_fooling(vf_opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const PassBudgetError& e) {
        std::cerr << "pass budget error: " << e.what() << '\n';
        return 3;
    } catch (const StreamMismatchError& e) {
        std::cerr << "stream error: " << e.what() << '\n';
        return 2;
    } catch (const OracleGuardError& e) {
        std::cerr << "guard error: " << e.what() << '\n';
        return 2;
    } catch (const ThresholdOverflowError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
