#pragma once

// Command-line driver. run() is the whole program; tools/rectgrp.cpp only forwards argv.
//
// Exit codes: 0 success / property true, 1 property false or nothing found, 2 usage,
// 3 capacity exceeded, 4 unreadable or invalid input.

#include "construct.hpp"
#include "conversions.hpp"
#include "core.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "isotopy.hpp"
#include "properties.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace rectangularity::cli {

enum ExitCode : int { success = 0, negative = 1, usage = 2, capacity = 3, bad_input = 4 };

namespace detail {

    /// Raised for argument values CLI11 cannot validate on its own.
    class UsageError : public Error {
    public:
        using Error::Error;
    };

    inline std::string read_file(const std::string & path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ValidationError("cannot read " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    /// Wraps parse errors with the file name.
    template <typename Parse>
    auto load(const std::string & path, Parse && parse)
    {
        auto text = read_file(path);
        try {
            return parse(text);
        }
        catch (const Error & e) {
            throw ValidationError(path + ": " + e.what());
        }
    }

    inline std::vector<Symbol> parse_list(const std::string & text, const std::string & what)
    {
        std::vector<Symbol> out;
        std::stringstream ss(text);
        for (std::string item; std::getline(ss, item, ',');) {
            if (item.empty())
                continue;
            std::size_t pos = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(item, &pos);
            }
            catch (const std::exception &) {
                pos = 0;
            }
            if (pos != item.size() || item.front() == '-')
                throw UsageError(what + ": \"" + item + "\" is not a non-negative integer");
            out.push_back(static_cast<Symbol>(v));
        }
        return out;
    }

    /// "0,1|2,3" over 0..n-1.
    inline Partition parse_partition(const std::string & text, std::size_t n, const std::string & what)
    {
        std::vector<std::vector<Symbol>> blocks;
        std::stringstream ss(text);
        for (std::string block; std::getline(ss, block, '|');)
            blocks.push_back(parse_list(block, what));
        return Partition(n, std::move(blocks));
    }

    /// cyclic:N, product:N1,N2,... or symmetric:K.
    inline FiniteGroup parse_group(const std::string & text)
    {
        auto colon = text.find(':');
        if (colon == std::string::npos)
            throw UsageError("group must be cyclic:N, product:N1,N2,... or symmetric:K");
        auto kind = text.substr(0, colon);
        auto args = parse_list(text.substr(colon + 1), "group");
        if (kind == "cyclic" && args.size() == 1 && args[0] >= 1)
            return FiniteGroup::cyclic(args[0]);
        if (kind == "product" && !args.empty()) {
            std::vector<std::size_t> moduli(args.begin(), args.end());
            return FiniteGroup::cyclic_product(moduli);
        }
        if (kind == "symmetric" && args.size() == 1 && args[0] >= 1)
            return FiniteGroup::symmetric(args[0]);
        throw UsageError("group must be cyclic:N, product:N1,N2,... or symmetric:K");
    }

    inline std::string join(std::span<const Symbol> v, std::size_t shift)
    {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out += (i ? " " : "") + std::to_string(v[i] + shift);
        return out;
    }

    inline std::string witness_line(const Violation & v, bool one_based)
    {
        // The last coordinate of these two is a count or a direction, not an element.
        const bool plain_tail = v.condition == "exactly one red-green path" || v.condition == "symbol repeated in a line";
        std::string out = "witness: " + v.condition + " at (";
        for (std::size_t i = 0; i < v.at.size(); ++i) {
            const bool shift = one_based && !(plain_tail && i + 1 == v.at.size());
            out += (i ? ", " : "") + std::to_string(v.at[i] + (shift ? 1 : 0));
        }
        return out + ")";
    }

    struct Globals {
        bool one_based = false;
        unsigned jobs = 1;
    };

} // namespace detail

/// Parses `args` (without the program name), runs the command and returns the exit code.
inline int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    using detail::Globals;
    Globals globals;

    CLI::App app{"Rectangular groupoids: property checks, conversions, constructions, isotopy and census",
                 "rectgrp"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--one-based", globals.one_based, "Display symbols from 1 (files stay 0-based)");
    app.add_option("--jobs", globals.jobs, "Worker threads for enumeration (output is identical for every value)")
        ->check(CLI::Range(1U, 256U));

    // check
    auto * check = app.add_subcommand("check", "Test a property of a table, graph pair, matrices or partial array");
    std::string property, check_file;
    const std::vector<std::string> properties{"rectangular",      "p1",          "p2",          "p4",
                                              "central",          "idempotent",  "associative", "matrix-symmetric",
                                              "undirected-eq",    "partitioned", "dually-partitioned",
                                              "full",             "maximal",     "partial-p1",  "partial-latin",
                                              "blackburn"};
    check->add_option("--property", property, "Property name")->required()->check(CLI::IsMember(properties));
    check->add_option("file", check_file, "Input file (graph pair for p2, matrix pair for p4, partial array for "
                                          "partial-p1/partial-latin/blackburn, table otherwise)")
        ->required();

    // convert
    auto * convert = app.add_subcommand("convert", "Convert between tables, graph pairs and matrix pairs");
    std::string from, to, convert_file;
    const std::vector<std::string> kinds{"groupoid", "graphpair", "matrices"};
    convert->add_option("--from", from)->required()->check(CLI::IsMember(kinds));
    convert->add_option("--to", to)->required()->check(CLI::IsMember(kinds));
    convert->add_option("file", convert_file)->required();

    // construct
    auto * construct = app.add_subcommand("construct", "Build a groupoid or graph pair");
    construct->require_subcommand(1);
    std::size_t order = 0, symbol = 0, rows = 0, cols = 0;
    std::string file_a, file_b, map_f, map_g, base, group, h_set, k_set, t_set;
    std::vector<std::string> companions;

    auto * c_constant = construct->add_subcommand("constant", "Every product equals one symbol");
    c_constant->add_option("--order", order)->required()->check(CLI::Range(1UL, 4096UL));
    c_constant->add_option("--symbol", symbol)->required();

    auto * c_evans = construct->add_subcommand("evans", "Central groupoid of order m^2");
    c_evans->add_option("--m", order)->required()->check(CLI::Range(1UL, 64UL));

    auto * c_band = construct->add_subcommand("band", "Rectangular band of n x m elements");
    c_band->add_option("--rows", rows)->required()->check(CLI::Range(1UL, 64UL));
    c_band->add_option("--cols", cols)->required()->check(CLI::Range(1UL, 64UL));

    auto * c_blowup = construct->add_subcommand("blowup", "Add one element copying the row and column of a symbol");
    auto * c_left = construct->add_subcommand("left-ext", "Left extension at an idempotent symbol");
    auto * c_right = construct->add_subcommand("right-ext", "Right extension at an idempotent symbol");
    for (auto * sub : {c_blowup, c_left, c_right}) {
        sub->add_option("file", file_a, "Table file")->required();
        sub->add_option("--symbol", symbol)->required();
    }

    auto * c_lsplit = construct->add_subcommand("left-split", "Left split extension of two tables");
    auto * c_rsplit = construct->add_subcommand("right-split", "Right split extension of two tables");
    for (auto * sub : {c_lsplit, c_rsplit}) {
        sub->add_option("a", file_a, "Table of A")->required();
        sub->add_option("b", file_b, "Table of B")->required();
        sub->add_option("--f", map_f, "Images of A in B, comma separated")->required();
        sub->add_option("--g", map_g, "Images of B in A, comma separated")->required();
    }

    auto * c_partition = construct->add_subcommand("partition", "Graph pair of a partition system");
    c_partition->add_option("--order", order)->required()->check(CLI::Range(1UL, 4096UL));
    c_partition->add_option("--base", base, "Base partition, e.g. 0,1|2,3")->required();
    c_partition->add_option("--companion", companions, "One companion partition per base block, in block order")
        ->required();

    auto * c_factor = construct->add_subcommand("factorization", "Cayley graph pair of an exact factorisation G = HK");
    c_factor->set_help_flag("--help", "Print this help message and exit"); // -h would clash with --h
    c_factor->add_option("--group", group, "cyclic:N, product:N1,N2,... or symmetric:K")->required();
    c_factor->add_option("--h", h_set)->required();
    c_factor->add_option("--k", k_set)->required();

    auto * c_coset = construct->add_subcommand("coset", "Partitioned pair from the cosets of a subgroup");
    c_coset->set_help_flag("--help", "Print this help message and exit"); // -h would clash with --h
    c_coset->add_option("--group", group, "cyclic:N, product:N1,N2,... or symmetric:K")->required();
    c_coset->add_option("--h", h_set, "Subgroup")->required();
    c_coset->add_option("--t", t_set, "Left transversal containing the identity")->required();

    // enumerate
    auto * enumerate = app.add_subcommand("enumerate", "Census of rectangular or central groupoids, or band blow-ups");
    std::string klass = "rectangular", up_to = "iso", emit = "count", band;
    bool long_run = false;
    enumerate->add_option("--class", klass)->check(CLI::IsMember({"rectangular", "central", "band-blowups"}));
    enumerate->add_option("--order", order, "Order of the census");
    enumerate->add_option("--up-to", up_to)->check(CLI::IsMember({"labeled", "iso", "isotopy"}));
    enumerate->add_option("--band", band, "Band shape NxM for band-blowups");
    enumerate->add_flag("--long-run", long_run, "Allow the order-16 central census");
    enumerate->add_option("--emit", emit)->check(CLI::IsMember({"count", "tables", "json"}));

    // isotopy, transversal
    auto * isotopy = app.add_subcommand("isotopy", "Find an isotopy (or isomorphism) between two tables");
    bool want_iso = false;
    isotopy->add_option("a", file_a)->required();
    isotopy->add_option("b", file_b)->required();
    isotopy->add_flag("--isomorphism", want_iso, "Look for an isomorphism instead");

    auto * transversal = app.add_subcommand("transversal", "Find a transversal of a table");
    transversal->add_option("file", file_a)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e, out, err) == 0 ? success : usage;
    }

    const bool ob = globals.one_based;
    auto print_table = [&](const Groupoid & g) { out << render_table(g, ob); };

    try {
        if (*check) {
            std::optional<Violation> violation;
            bool holds = true;
            auto table = [&] { return detail::load(check_file, parse_table); };
            auto partial = [&] { return detail::load(check_file, parse_partial); };
            if (property == "p2")
                violation = p2_violation(detail::load(check_file, parse_graph_pair));
            else if (property == "p4") {
                auto [a, b] = detail::load(check_file, parse_matrix_pair);
                holds = satisfies_p4(a, b);
            }
            else if (property == "partial-p1")
                violation = partial_p1_violation(partial());
            else if (property == "partial-latin")
                violation = partial_latin_violation(partial());
            else if (property == "blackburn")
                violation = blackburn_violation(partial());
            else {
                auto g = table();
                if (property == "rectangular")
                    violation = rectangularity_violation(g);
                else if (property == "p1")
                    violation = p1_violation(g);
                else if (property == "central")
                    violation = centrality_violation(g);
                else if (property == "idempotent")
                    violation = idempotence_violation(g);
                else if (property == "associative")
                    violation = associativity_violation(g);
                else if (property == "undirected-eq")
                    violation = undirected_eq_violation(g);
                else if (property == "partitioned")
                    violation = partitioned_eqs_violation(g);
                else if (property == "dually-partitioned")
                    violation = dually_partitioned_eqs_violation(g);
                else if (property == "matrix-symmetric")
                    holds = is_matrix_symmetric(g);
                else if (property == "full")
                    holds = is_full(g);
                else if (property == "maximal")
                    holds = is_maximal(g);
            }
            if (violation)
                holds = false;
            out << (holds ? "true" : "false") << '\n';
            if (violation)
                out << detail::witness_line(*violation, ob) << '\n';
            return holds ? success : negative;
        }

        if (*convert) {
            GraphPair gp;
            if (from == "groupoid") {
                auto g = detail::load(convert_file, parse_table);
                if (to == "groupoid") {
                    print_table(g);
                    return success;
                }
                gp = groupoid_to_graph_pair(g);
            }
            else if (from == "graphpair")
                gp = detail::load(convert_file, parse_graph_pair);
            else {
                auto [a, b] = detail::load(convert_file, parse_matrix_pair);
                gp = matrices_to_graph_pair(a, b);
            }
            if (to == "groupoid")
                print_table(graph_pair_to_groupoid(gp));
            else if (to == "graphpair")
                out << render_graph_pair(gp);
            else {
                auto [a, b] = graph_pair_to_matrices(gp);
                out << render_matrix_pair(a, b);
            }
            return success;
        }

        if (*construct) {
            if (*c_constant)
                print_table(constant_groupoid(order, symbol));
            else if (*c_evans)
                print_table(evans_central(order));
            else if (*c_band)
                print_table(rectangular_band(rows, cols));
            else if (*c_blowup || *c_left || *c_right) {
                auto g = detail::load(file_a, parse_table);
                if (*c_blowup)
                    print_table(simple_blow_up(g, symbol));
                else if (*c_left)
                    print_table(left_extension(g, symbol));
                else
                    print_table(right_extension(g, symbol));
            }
            else if (*c_lsplit || *c_rsplit) {
                auto a = detail::load(file_a, parse_table);
                auto b = detail::load(file_b, parse_table);
                Mapping f(b.order(), detail::parse_list(map_f, "--f"));
                Mapping g(a.order(), detail::parse_list(map_g, "--g"));
                print_table(*c_lsplit ? left_split_extension(a, b, f, g) : right_split_extension(a, b, f, g));
            }
            else if (*c_partition) {
                auto base_partition = detail::parse_partition(base, order, "--base");
                std::vector<Partition> comps;
                for (const auto & c : companions)
                    comps.push_back(detail::parse_partition(c, order, "--companion"));
                out << render_graph_pair(partition_construction(PartitionSystem(base_partition, std::move(comps))));
            }
            else if (*c_factor) {
                auto grp = detail::parse_group(group);
                auto hs = detail::parse_list(h_set, "--h");
                auto ks = detail::parse_list(k_set, "--k");
                out << render_graph_pair(group_factorization_pair(grp, hs, ks));
            }
            else if (*c_coset) {
                auto grp = detail::parse_group(group);
                auto hs = detail::parse_list(h_set, "--h");
                auto ts = detail::parse_list(t_set, "--t");
                out << render_graph_pair(coset_construction(grp, hs, ts));
            }
            return success;
        }

        if (*enumerate) {
            EnumerateOptions opts{globals.jobs, long_run};
            nlohmann::json doc;
            doc["class"] = klass;
            if (klass == "band-blowups") {
                auto x = band.find('x');
                if (band.empty() || x == std::string::npos)
                    throw detail::UsageError("band-blowups needs --band NxM");
                auto n = detail::parse_list(band.substr(0, x), "--band");
                auto m = detail::parse_list(band.substr(x + 1), "--band");
                if (n.size() != 1 || m.size() != 1)
                    throw detail::UsageError("band-blowups needs --band NxM");
                if (emit == "tables")
                    throw detail::UsageError("band-blowups reports counts only");
                auto count = enumerate_band_blow_ups(n[0], m[0]);
                if (emit == "count")
                    out << count << '\n';
                else {
                    doc["order"] = n[0] * m[0] + 1;
                    doc["mode"] = "labeled";
                    doc["count"] = count;
                    doc["tables"] = nlohmann::json::array();
                    out << doc.dump(2) << '\n';
                }
                return success;
            }
            if (order == 0)
                throw detail::UsageError("--order is required for class " + klass);
            Census census;
            if (klass == "central") {
                if (up_to != "iso")
                    throw detail::UsageError("the central census is up to isomorphism only (--up-to iso)");
                census = enumerate_central(order, opts);
            }
            else {
                auto mode = up_to == "labeled" ? CountMode::labeled
                            : up_to == "iso"   ? CountMode::isomorphism
                                               : CountMode::isotopy;
                census = enumerate_rectangular(order, mode, opts);
            }
            if (!census.diagnostic.empty() && census.count == 0)
                err << census.diagnostic << '\n';
            if (emit != "count" && census.tables.size() != census.count)
                throw CapacityError("tables are listed up to order " + std::to_string(max_labeled_listing_order)
                                    + " in labeled mode; use --emit count");
            if (emit == "count")
                out << census.count << '\n';
            else if (emit == "tables") {
                for (std::size_t i = 0; i < census.tables.size(); ++i) {
                    if (i)
                        out << '\n';
                    print_table(census.tables[i]);
                }
            }
            else {
                doc["order"] = census.order;
                doc["mode"] = up_to;
                doc["count"] = census.count;
                doc["tables"] = nlohmann::json::array();
                for (const auto & g : census.tables)
                    doc["tables"].push_back(std::vector<Symbol>(g.table().begin(), g.table().end()));
                out << doc.dump(2) << '\n';
            }
            return census.count == 0 ? negative : success;
        }

        if (*isotopy) {
            auto a = detail::load(file_a, parse_table);
            auto b = detail::load(file_b, parse_table);
            const std::size_t shift = ob ? 1 : 0;
            if (want_iso) {
                auto sigma = are_isomorphic(a, b);
                if (!sigma) {
                    out << "none\n";
                    return negative;
                }
                out << "sigma: " << detail::join(sigma->images(), shift) << '\n';
                return success;
            }
            auto t = are_isotopic(a, b);
            if (!t) {
                out << "none\n";
                return negative;
            }
            out << "alpha: " << detail::join(t->alpha.images(), shift) << '\n'
                << "beta: " << detail::join(t->beta.images(), shift) << '\n'
                << "gamma: " << detail::join(t->gamma.images(), shift) << '\n';
            return success;
        }

        if (*transversal) {
            auto g = detail::load(file_a, parse_table);
            auto t = find_transversal(g);
            if (!t) {
                out << "none\n";
                return negative;
            }
            const std::size_t shift = ob ? 1 : 0;
            std::string line;
            for (auto [r, c] : t->cells())
                line += (line.empty() ? "(" : " (") + std::to_string(r + shift) + "," + std::to_string(c + shift) + ")";
            out << line << '\n';
            return success;
        }
    }
    catch (const detail::UsageError & e) {
        err << "error: " << e.what() << '\n' << app.help();
        return usage;
    }
    catch (const CapacityError & e) {
        err << "capacity: " << e.what() << '\n';
        return capacity;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }
    return usage;
}

} // namespace rectangularity::cli
