#include <loose_ramsey/coloring_io.hh>
#include <loose_ramsey/constructions.hh>
#include <loose_ramsey/extractor.hh>
#include <loose_ramsey/oracle.hh>
#include <loose_ramsey/random_coloring.hh>
#include <loose_ramsey/stress.hh>

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace loose_ramsey;
using std::string;

namespace
{
    struct PairArgs
    {
        string kind;
        unsigned n = 0, m = 0;

        void add_to(CLI::App * app)
        {
            app->add_option("--pair", kind, "pp, cc, pncm or pmcn")->required();
            app->add_option("-n", n, "longer length")->required();
            app->add_option("-m", m, "shorter length")->required();
        }

        auto get() const -> PairKind
        {
            PairKind p{parse_pair_kind(kind), n, m};
            validate(p);
            return p;
        }
    };

    void emit(const string & text, const string & out)
    {
        if (out.empty())
            std::cout << text;
        else
            write_text_file(out, text);
    }

    auto format_coloring(const Coloring & c, const string & format) -> string
    {
        if (format == "lrc1") return to_lrc1(c);
        if (format == "lre1") return to_lre1(c);
        throw ParameterError("unknown format '" + format + "', expected lrc1 or lre1");
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Loose path and cycle Ramsey numbers of 3-uniform hypergraphs"};
    app.require_subcommand(1);
    int status = 0;

    auto construct = app.add_subcommand("construct", "emit the split colouring one vertex below the threshold");
    PairArgs construct_pair;
    construct_pair.add_to(construct);
    std::optional<unsigned> split_a, split_b;
    string touching, construct_format = "lrc1", construct_out;
    construct->add_option("--a", split_a, "override the size of part A");
    construct->add_option("--b", split_b, "override the size of part B");
    construct->add_option("--touching", touching, "colour of triples meeting B");
    construct->add_option("--format", construct_format, "lrc1 or lre1");
    construct->add_option("--out", construct_out, "output file (default stdout)");
    construct->callback([&]() {
        auto spec = lower_bound_params(construct_pair.get());
        if (split_a) spec.a = *split_a;
        if (split_b) spec.b = *split_b;
        if (! touching.empty()) spec.touching_color = parse_color(touching);
        emit(format_coloring(build_split_coloring(spec), construct_format), construct_out);
    });

    auto random = app.add_subcommand("random", "emit a seeded random colouring");
    unsigned random_vertices = 0;
    std::uint64_t random_seed = 0;
    string random_format = "lrc1", random_out;
    random->add_option("--vertices", random_vertices, "vertex count")->required();
    random->add_option("--seed", random_seed, "generator seed")->required();
    random->add_option("--format", random_format, "lrc1 or lre1");
    random->add_option("--out", random_out, "output file (default stdout)");
    random->callback([&]() {
        emit(format_coloring(random_coloring(random_vertices, random_seed), random_format), random_out);
    });

    auto extract = app.add_subcommand("extract", "run the constructive proof on a colouring");
    PairArgs extract_pair;
    extract_pair.add_to(extract);
    string extract_file;
    bool extract_trace = false;
    extract->add_option("--file", extract_file, "colouring file")->required();
    extract->add_flag("--trace", extract_trace, "print the step log");
    extract->callback([&]() {
        auto c = read_coloring_file(extract_file);
        auto result = solve(extract_pair.get(), c, extract_trace);
        if (extract_trace)
            for (auto & line : result.trace)
                std::cout << "# " << line << "\n";
        std::cout << to_string(result.witness) << "\n";
    });

    auto search = app.add_subcommand("search", "backtracking search for a monochromatic target");
    string search_file, search_color, search_target;
    search->add_option("--file", search_file, "colouring file")->required();
    search->add_option("--color", search_color, "red or blue")->required();
    search->add_option("--target", search_target, "path:L or cycle:L")->required();
    search->callback([&]() {
        auto c = read_coloring_file(search_file);
        auto w = find_mono(c, parse_color(search_color), parse_target(search_target));
        std::cout << (w ? to_string(*w) : string("none")) << "\n";
    });

    auto enumerate = app.add_subcommand("enumerate", "walk every colouring of a small complete hypergraph");
    unsigned enum_vertices = 0;
    string enum_red, enum_blue;
    bool enum_count = false;
    enumerate->add_option("--vertices", enum_vertices, "vertex count")->required();
    enumerate->add_option("--red", enum_red, "red target, e.g. cycle:3")->required();
    enumerate->add_option("--blue", enum_blue, "blue target, e.g. cycle:3")->required();
    enumerate->add_flag("--count", enum_count, "count every avoiding colouring");
    enumerate->callback([&]() {
        auto r = exhaustive_avoidance_search(enum_vertices, parse_target(enum_red), parse_target(enum_blue),
                enum_count ? EnumerationMode::count : EnumerationMode::find_one);
        std::cout << "examined " << r.examined << "\n";
        if (enum_count)
            std::cout << "avoiding " << r.count << "\n";
        if (r.avoiding)
            std::cout << to_lrc1(*r.avoiding);
        else
            std::cout << "none\n";
    });

    auto verify = app.add_subcommand("verify", "check a witness against a colouring");
    string verify_file, verify_witness_text;
    verify->add_option("--file", verify_file, "colouring file")->required();
    verify->add_option("--witness", verify_witness_text, "\"colour shape v1 v2 ...\"")->required();
    verify->callback([&]() {
        auto c = read_coloring_file(verify_file);
        auto v = verify_witness(c, parse_witness(verify_witness_text));
        std::cout << (v ? string("accepted") : "rejected: " + v.reason) << "\n";
        if (! v) status = 1;
    });

    auto ramsey = app.add_subcommand("ramsey", "print the Ramsey number of a pair");
    PairArgs ramsey_pair;
    ramsey_pair.add_to(ramsey);
    ramsey->callback([&]() { std::cout << ramsey_number(ramsey_pair.get()) << "\n"; });

    auto stress_cmd = app.add_subcommand("stress", "solve and verify seeded random colourings at the threshold");
    PairArgs stress_pair;
    stress_pair.add_to(stress_cmd);
    std::uint64_t stress_trials = 0, stress_seed = 0;
    bool stress_json = false;
    stress_cmd->add_option("--trials", stress_trials, "number of colourings")->required();
    stress_cmd->add_option("--seed", stress_seed, "seed of trial 0")->required();
    stress_cmd->add_flag("--json", stress_json, "machine-readable report");
    stress_cmd->callback([&]() {
        auto r = stress(stress_pair.get(), stress_trials, stress_seed);
        std::cout << (stress_json ? to_json(r) : to_text(r));
        if (! r.failures.empty()) status = 1;
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}
