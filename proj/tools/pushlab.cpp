// pushlab: decisions, generators and verification runs over small graphs and their orientations.

#include <pushlab/canonical.hpp>
#include <pushlab/census.hpp>
#include <pushlab/chromatic.hpp>
#include <pushlab/decide.hpp>
#include <pushlab/enumerate.hpp>
#include <pushlab/error.hpp>
#include <pushlab/formats.hpp>
#include <pushlab/orientation.hpp>
#include <pushlab/parallel.hpp>
#include <pushlab/planarity.hpp>
#include <pushlab/properties.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace pushlab;
using nlohmann::json;

namespace
{
    enum Exit
    {
        yes = 0,
        no = 1,
        usage = 2
    };

    struct Options
    {
        bool json = false;
        int threads = 0;
    };

    /// The argument itself, or one input per non-empty line of standard input for "-".
    auto inputs(const std::string & argument) -> std::vector<std::string>
    {
        if (argument != "-")
            return { argument };
        std::vector<std::string> lines;
        for (std::string line; std::getline(std::cin, line);) {
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (! line.empty())
                lines.push_back(line);
        }
        if (lines.empty())
            throw FormatError{ "no input on standard input" };
        return lines;
    }

    auto pair_json(const std::optional<Edge> & e) -> json
    {
        return e ? json::array({ e->u, e->v }) : json{};
    }

    auto pair_text(const Edge & e) -> std::string
    {
        return std::to_string(e.u) + " " + std::to_string(e.v);
    }

    auto emit(const Options & opt, const json & j, const std::string & text) -> void
    {
        if (opt.json)
            std::cout << j.dump(2) << '\n';
        else
            std::cout << text;
    }

    auto run_check(const Options & opt, const std::string & property, const std::string & argument) -> int
    {
        bool all = true;
        json out = json::array();
        std::string text;
        for (const auto & line : inputs(argument)) {
            auto d = parse_digraph6(line);
            auto result = property == "oriented-clique" ? is_oriented_clique(d) : is_push_clique(d);
            all = all && result.holds;
            out.push_back({ { "digraph", line }, { "property", property }, { "holds", result.holds }, { "failing_pair", pair_json(result.failing_pair) } });
            text += result.holds ? "yes\n" : "no: pair " + pair_text(*result.failing_pair) + "\n";
        }
        emit(opt, out.size() == 1 ? out[0] : out, text);
        return all ? yes : no;
    }

    auto run_decide(const Options & opt, bool push, const std::string & argument) -> int
    {
        bool all = true;
        json out = json::array();
        std::string text;
        for (const auto & line : inputs(argument)) {
            auto g = parse_graph6(line);
            auto d = push ? is_underlying_push_clique(g) : is_underlying_oriented_clique(g);
            std::string property = push ? "underlying-push-clique" : "underlying-oriented-clique";
            all = all && d.yes;
            out.push_back({ { "graph", write_graph6(g) }, { "order", g.order() }, { "property", property }, { "space", d.space },
                { "searched", d.searched }, { "decision", d.yes }, { "prefilter_pair", pair_json(d.prefilter_pair) },
                { "witness", d.witness ? json(write_digraph6(*d.witness)) : json{} } });
            text += format_decision(g, d, property);
        }
        emit(opt, out.size() == 1 ? out[0] : out, text);
        return all ? yes : no;
    }

    auto run_chromatic(const Options & opt, bool pushable, const std::string & argument) -> int
    {
        json out = json::array();
        std::string text;
        for (const auto & line : inputs(argument)) {
            auto d = parse_digraph6(line);
            json entry{ { "digraph", line } };
            if (pushable) {
                int k = pushable_chromatic_number(d);
                entry["pushable_chromatic_number"] = k;
                text += std::to_string(k) + "\n";
            }
            else {
                auto result = oriented_chromatic_number(d);
                entry["oriented_chromatic_number"] = result.number;
                entry["colouring"] = result.certificate.colours;
                text += std::to_string(result.number) + " colouring";
                for (int c : result.certificate.colours)
                    text += " " + std::to_string(c);
                text += "\n";
            }
            out.push_back(entry);
        }
        emit(opt, out.size() == 1 ? out[0] : out, text);
        return yes;
    }

    auto run_reduce_star(const Options & opt, const std::string & argument) -> int
    {
        json out = json::array();
        std::string text;
        for (const auto & line : inputs(argument)) {
            auto star = write_graph6(star_augment(parse_graph6(line)));
            out.push_back({ { "graph", line }, { "star", star } });
            text += star + "\n";
        }
        emit(opt, out.size() == 1 ? out[0] : out, text);
        return yes;
    }

    auto run_planarity(const Options & opt, bool outer, const std::string & argument) -> int
    {
        bool all = true;
        json out = json::array();
        std::string text;
        for (const auto & line : inputs(argument)) {
            auto g = parse_graph6(line);
            bool holds = outer ? is_outerplanar(g) : is_planar(g);
            all = all && holds;
            out.push_back({ { "graph", line }, { outer ? "outerplanar" : "planar", holds } });
            text += holds ? "yes\n" : "no\n";
        }
        emit(opt, out.size() == 1 ? out[0] : out, text);
        return all ? yes : no;
    }

    auto run_gen(const Options & opt, const std::string & kind, int n) -> int
    {
        auto graphs = kind == "graphs" ? enumerate_graphs(n) : generate_triangulations(n);
        json out = json::array();
        std::string text;
        for (const auto & g : graphs) {
            auto line = write_graph6(g);
            out.push_back(line);
            text += line + "\n";
        }
        emit(opt, out, text);
        return yes;
    }

    auto run_census(const Options & opt, int max_order, bool minimal_only) -> int
    {
        auto records = planar_upc_census(max_order);
        if (opt.json) {
            std::cout << census_summary(records, nullptr, nullptr, nullptr).dump(2) << '\n';
            return yes;
        }
        std::cout << write_census_tsv(minimal_only ? minimal_filter(records) : records);
        return yes;
    }

    auto run_verify(const Options & opt, const std::string & which) -> int
    {
        json out{ { "check", which } };
        std::string text;
        bool pass = false;
        if (which == "characterization") {
            long checked = 0, mismatches = 0;
            for (int n = 1; n <= 5; ++n)
                for (const auto & g : enumerate_graphs(n))
                    for (std::uint64_t i = 0; i < (std::uint64_t{ 1 } << g.edge_count()); ++i) {
                        auto d = orientation_from_index(g, i);
                        ++checked;
                        mismatches += is_push_clique(d).holds != is_push_clique_bruteforce(d);
                    }
            pass = mismatches == 0;
            out["orientations"] = checked;
            out["mismatches"] = mismatches;
            text = "orientations checked: " + std::to_string(checked) + "\nmismatches: " + std::to_string(mismatches) + "\n";
        }
        else if (which == "star-lemma") {
            auto report = verify_star_augmentation(5);
            pass = report.holds();
            json rows = json::array();
            for (const auto & o : report.orders) {
                rows.push_back({ { "order", o.order }, { "classes", o.classes }, { "both_yes", o.both_yes }, { "both_no", o.both_no } });
                text += "order " + std::to_string(o.order) + ": " + std::to_string(o.classes) + " classes, " + std::to_string(o.both_yes)
                    + " both yes, " + std::to_string(o.both_no) + " both no\n";
            }
            json mismatches = json::array();
            for (const auto & g : report.mismatches) {
                mismatches.push_back(write_graph6(g));
                text += "mismatch: " + write_graph6(g) + "\n";
            }
            out["orders"] = rows;
            out["mismatches"] = mismatches;
        }
        else if (which == "theorem2") {
            auto census = planar_upc_census(max_census_order);
            auto report = verify_no_planar_push_clique_on_9();
            int order8 = count_by_order(census)[8];
            pass = report.holds() && order8 > 0;
            out["planar_push_cliques_on_8"] = order8;
            out["triangulations_on_9"] = report.triangulations.size();
            out["push_cliques_on_9"] = report.push_clique_count();
            text = "planar push cliques on 8 vertices: " + std::to_string(order8) + "\ntriangulations on 9 vertices: "
                + std::to_string(report.triangulations.size()) + "\nunderlying push cliques among them: "
                + std::to_string(report.push_clique_count()) + "\n";
        }
        else if (which == "theorem3") {
            auto census = planar_upc_census(max_census_order);
            auto report = verify_minimal_cover(census);
            pass = report.holds();
            out["minimal_per_order"] = std::vector<int>(report.minimal_per_order.begin() + 1, report.minimal_per_order.end());
            out["minimal_total"] = report.minimal_total;
            out["biconditional_checked"] = report.biconditional_checked;
            out["cover_checked"] = report.cover_checked;
            out["failures"] = report.biconditional_failures.size() + report.cover_failures.size();
            text = "minimal per order:";
            for (int n = 1; n <= max_census_order; ++n)
                text += " " + std::to_string(report.minimal_per_order[n]);
            text += "\nminimal total: " + std::to_string(report.minimal_total) + "\nbiconditional checked to order "
                + std::to_string(report.exhaustive_max) + ": " + std::to_string(report.biconditional_checked) + "\ncover checked above: "
                + std::to_string(report.cover_checked) + "\nfailures: "
                + std::to_string(report.biconditional_failures.size() + report.cover_failures.size()) + "\n";
        }
        else {
            auto census = planar_upc_census(max_census_order);
            auto report = verify_structure(census);
            pass = report.holds();
            auto codes = [] (const std::vector<Graph> & graphs) {
                std::vector<std::string> result;
                for (const auto & g : graphs)
                    result.push_back(write_graph6(g));
                return result;
            };
            out["four_cycle"] = { { "checked", report.four_cycle_checked }, { "failures", codes(report.four_cycle_failures) } };
            out["hamiltonian_edges"] = { { "checked", report.hamiltonian_checked }, { "failures", codes(report.hamiltonian_failures) } };
            out["min_degree_two"] = { { "all", codes(report.min_degree_two_all) }, { "minimal", codes(report.min_degree_two_minimal) },
                { "holds", report.min_degree_two_holds() } };
            out["cover"] = { { "checked", report.cover_checked }, { "failures", codes(report.cover_failures) } };
            auto list = [] (const std::vector<std::string> & v) {
                std::string s;
                for (const auto & x : v)
                    s += " " + x;
                return s;
            };
            text = "4-cycle in non-complete push cliques: " + std::to_string(report.four_cycle_checked) + " checked, failures:"
                + list(codes(report.four_cycle_failures)) + "\nHamiltonian edges in minimal graphs: "
                + std::to_string(report.hamiltonian_checked) + " checked, failures:" + list(codes(report.hamiltonian_failures))
                + "\nminimum degree 2:" + list(codes(report.min_degree_two_all)) + " (minimal:" + list(codes(report.min_degree_two_minimal))
                + ") " + (report.min_degree_two_holds() ? "holds" : "fails") + "\nspanning cover: " + std::to_string(report.cover_checked)
                + " checked, failures:" + list(codes(report.cover_failures)) + "\n";
        }
        out["pass"] = pass;
        text += pass ? "pass\n" : "fail\n";
        emit(opt, out, text);
        return pass ? yes : no;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Push cliques, oriented cliques and planar graphs on at most 12 vertices" };
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "Machine-readable output");
    app.add_option("--threads", opt.threads, "Worker threads (default: PUSHLAB_THREADS, else all cores)")->check(CLI::Range(1, 1024));

    std::string property, argument, kind, which;
    bool oriented = false, pushed = false, pushable = false, minimal_only = false;
    int n = 0, max_order = max_census_order;

    auto check = app.add_subcommand("check", "Test an orientation (digraph6) for a clique property");
    check->add_option("property", property)->required()->check(CLI::IsMember({ "oriented-clique", "push-clique" }));
    check->add_option("digraph6", argument, "digraph6 line, or - for standard input")->required();

    auto decide = app.add_subcommand("decide", "Decide whether some orientation of a graph (graph6) is a clique");
    auto decide_kind = decide->add_option_group("kind")->require_option(1);
    decide_kind->add_flag("--oriented", oriented, "Underlying oriented clique");
    decide_kind->add_flag("--push", pushed, "Underlying push clique");
    decide->add_option("graph6", argument)->required();

    auto chromatic = app.add_subcommand("chromatic", "Oriented or pushable chromatic number of a digraph6 orientation");
    auto chromatic_kind = chromatic->add_option_group("kind")->require_option(1);
    chromatic_kind->add_flag("--oriented", oriented);
    chromatic_kind->add_flag("--pushable", pushable);
    chromatic->add_option("digraph6", argument)->required();

    auto reduce = app.add_subcommand("reduce-star", "Add a vertex adjacent to every vertex");
    reduce->add_option("graph6", argument)->required();

    auto planar = app.add_subcommand("planar", "Planarity test");
    planar->add_option("graph6", argument)->required();
    auto outer = app.add_subcommand("outerplanar", "Outerplanarity test");
    outer->add_option("graph6", argument)->required();

    auto gen = app.add_subcommand("gen", "List graphs or triangulations of an order, one graph6 line each");
    gen->add_option("kind", kind)->required()->check(CLI::IsMember({ "graphs", "triangulations" }));
    gen->add_option("n", n)->required();

    auto census = app.add_subcommand("census", "Planar underlying push cliques, tab separated");
    census->add_option("--max-order", max_order)->check(CLI::Range(1, max_census_order));
    census->add_flag("--minimal", minimal_only, "Only edge-minimal graphs");

    auto verify = app.add_subcommand("verify", "Run a verification sweep");
    verify->add_option("which", which)->required()->check(
        CLI::IsMember({ "characterization", "star-lemma", "theorem2", "theorem3", "observations" }));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        std::cerr << "pushlab: " << e.what() << '\n';
        return usage;
    }

    try {
        if (opt.threads > 0)
            set_worker_count(opt.threads);
        if (check->parsed())
            return run_check(opt, property, argument);
        if (decide->parsed())
            return run_decide(opt, pushed, argument);
        if (chromatic->parsed())
            return run_chromatic(opt, pushable, argument);
        if (reduce->parsed())
            return run_reduce_star(opt, argument);
        if (planar->parsed())
            return run_planarity(opt, false, argument);
        if (outer->parsed())
            return run_planarity(opt, true, argument);
        if (gen->parsed())
            return run_gen(opt, kind, n);
        if (census->parsed())
            return run_census(opt, max_order, minimal_only);
        return run_verify(opt, which);
    }
    catch (const Error & e) {
        std::cerr << "pushlab: " << e.what() << '\n';
        return usage;
    }
}
