#include "lambdacol/cli.hpp"

#include "lambdacol/constructions.hpp"
#include "lambdacol/error.hpp"
#include "lambdacol/extremal.hpp"
#include "lambdacol/io.hpp"
#include "lambdacol/solver.hpp"
#include "lambdacol/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <random>

namespace lambdacol::cli {

namespace {

using nlohmann::json;

struct Settings {
    bool json = false;
    int max_n = kDefaultSolverCap;
    std::uint64_t max_shapes = kDefaultMaxShapes;
};

Graph load_graph(const std::string& path)
{
    try {
        return parse_graph(read_file(path));
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

Colouring load_colouring(const std::string& path, int n)
{
    try {
        return parse_colouring(read_file(path), n);
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw Error("cannot write file '" + path + "'");
}

json graph_json(const Graph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"n", g.order()}, {"m", g.size()}, {"edges", edges}};
}

json shapes_json(const std::vector<PartitionShape>& shapes)
{
    json arr = json::array();
    for (const auto& s : shapes)
        arr.push_back(s.sizes());
    return arr;
}

std::string join(const std::vector<int>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? " " : "") + std::to_string(xs[i]);
    return s;
}

void emit_graph(std::ostream& out, const Settings& st, const Graph& g)
{
    if (st.json)
        out << graph_json(g).dump(2) << '\n';
    else
        out << format_graph(g);
}

SolverOptions solver_options(const Settings& st)
{
    return SolverOptions{st.max_n};
}

int cmd_lambda(std::ostream& out, const Settings& st, const std::string& file)
{
    const auto g = load_graph(file);
    const auto r = lambda_number(g, solver_options(st));
    if (st.json) {
        json labels(std::vector<int>(r.witness.labels().begin(), r.witness.labels().end()));
        out << json{{"lambda", r.lambda}, {"holes", r.holes}, {"colouring", labels}}.dump(2) << '\n';
        return kOk;
    }
    out << "lambda " << r.lambda << '\n';
    out << "holes" << (r.holes.empty() ? "" : " ") << join(r.holes) << '\n';
    out << format_colouring(r.witness);
    return kOk;
}

int cmd_check(std::ostream& out, const Settings& st, const std::string& file, const std::string& colouring)
{
    const auto g = load_graph(file);
    const auto c = load_colouring(colouring, g.order());
    const auto bad = first_violation(g, c);
    if (st.json) {
        json j{{"valid", !bad}, {"span", c.span()}};
        if (bad)
            j["violation"] = {bad->u, bad->v};
        out << j.dump(2) << '\n';
    } else if (bad) {
        out << "invalid " << bad->u << ' ' << bad->v << '\n';
    } else {
        out << "valid span " << c.span() << '\n';
    }
    return bad ? kDomainError : kOk;
}

int cmd_construct_gn(std::ostream& out, const Settings& st, int n)
{
    emit_graph(out, st, build_G_n(n));
    return kOk;
}

int cmd_construct_gtl(std::ostream& out, const Settings& st, int t, int l, const std::optional<std::uint64_t>& seed,
                      const std::string& assignment_path)
{
    FamilyMatchings matchings;
    if (seed) {
        std::mt19937_64 rng(*seed);
        matchings = FamilyMatchings::random(t, l, rng);
    }
    const auto member = build_family_member(t, l, matchings);
    if (!assignment_path.empty())
        write_file(assignment_path, format_class_assignment(member.assignment.class_of));
    emit_graph(out, st, member.graph);
    return kOk;
}

int cmd_embed(std::ostream& out, const Settings& st, const std::string& file, const std::string& colouring,
              const std::string& prefix)
{
    const auto g = load_graph(file);
    const auto c = load_colouring(colouring, g.order());
    const auto e = embed_universal(g, c);
    if (!prefix.empty()) {
        write_file(prefix + ".graph", format_graph(e.host));
        write_file(prefix + ".classes", format_class_assignment(e.assignment.class_of));
        write_file(prefix + ".map", format_injection(e.injection));
    }
    if (st.json) {
        json j = graph_json(e.host);
        j["t"] = e.assignment.t;
        j["l"] = e.assignment.l;
        j["class_of"] = e.assignment.class_of;
        j["injection"] = e.injection;
        out << j.dump(2) << '\n';
    } else {
        out << format_graph(e.host);
    }
    return kOk;
}

int cmd_standardise(std::ostream& out, const Settings& st, const std::string& file, const std::string& colouring)
{
    const auto g = load_graph(file);
    const auto c = load_colouring(colouring, g.order());
    const auto s = edge_standardise(g, c);
    if (st.json) {
        json j = graph_json(s.graph);
        j["shape"] = s.shape().sizes();
        out << j.dump(2) << '\n';
    } else {
        out << format_graph(s.graph);
    }
    return kOk;
}

int cmd_shape_value(std::ostream& out, const Settings& st, const std::string& text, bool m)
{
    const auto s = parse_shape(text);
    const int value = m ? M_value(s) : K_value(s);
    if (st.json)
        out << json{{"shape", s.sizes()}, {m ? "M" : "K", value}}.dump(2) << '\n';
    else
        out << value << '\n';
    return kOk;
}

int cmd_maxedges(std::ostream& out, const Settings& st, int n, int t)
{
    const auto r = max_edges(n, t, st.max_shapes);
    if (st.json) {
        out << json{{"n", n}, {"t", t}, {"max_edges", r.max_edges}, {"shapes", shapes_json(r.shapes)}}.dump(2)
            << '\n';
        return kOk;
    }
    out << r.max_edges << '\n';
    for (const auto& s : r.shapes)
        out << to_string(s) << '\n';
    return kOk;
}

int cmd_classify(std::ostream& out, const Settings& st, const std::string& file, const std::string& colouring)
{
    const auto g = load_graph(file);
    ClassifyOptions opts;
    opts.solver = solver_options(st);
    opts.max_shapes = st.max_shapes;
    if (!colouring.empty())
        opts.witness = load_colouring(colouring, g.order());
    const auto r = classify(g, opts);
    const std::string type = r.type ? to_string(*r.type) : "none";
    if (st.json) {
        out << json{{"case", to_string(r.kase)},
                    {"lambda", r.lambda},
                    {"edges", r.edges},
                    {"max_edges", r.max_edges},
                    {"shape", r.witness_shape.sizes()},
                    {"type", type}}
                   .dump(2)
            << '\n';
        return kOk;
    }
    out << "case " << to_string(r.kase) << '\n'
        << "lambda " << r.lambda << '\n'
        << "edges " << r.edges << '\n'
        << "max_edges " << r.max_edges << '\n'
        << "shape " << to_string(r.witness_shape) << '\n'
        << "type " << type << '\n';
    return kOk;
}

int cmd_verify(std::ostream& out, const Settings& st, int n, int t, int census_max_n)
{
    VerifyOptions opts;
    opts.max_shapes = st.max_shapes;
    opts.census_max_n = census_max_n;
    const auto v = verify_classification(n, t, opts);
    if (st.json) {
        out << json{{"n", n},
                    {"t", t},
                    {"pass", v.pass()},
                    {"max_edges", v.max_edges},
                    {"shapes", v.argmax_count},
                    {"census", v.census_checked ? (v.census_match ? "ok" : "FAIL") : "skip"},
                    {"inner_outer", v.inner_outer},
                    {"unexpected", shapes_json(v.unexpected)},
                    {"missing", shapes_json(v.missing)},
                    {"inner_outer_violations", shapes_json(v.inner_outer_violations)}}
                   .dump(2)
            << '\n';
    } else {
        out << v.report_line() << '\n';
    }
    return v.pass() ? kOk : kDomainError;
}

int cmd_census(std::ostream& out, const Settings& st, int n)
{
    const auto table = brute_force_graph_census(n);
    if (st.json) {
        json j = json::object();
        for (auto [lambda, edges] : table)
            j[std::to_string(lambda)] = edges;
        out << json{{"n", n}, {"max_edges", j}}.dump(2) << '\n';
        return kOk;
    }
    for (auto [lambda, edges] : table)
        out << "lambda " << lambda << " max_edges " << edges << '\n';
    return kOk;
}

int cmd_pathcover(std::ostream& out, const Settings& st, const std::string& file)
{
    const auto g = load_graph(file);
    const auto r = lambda_via_path_cover(g, std::min(st.max_n, 22));
    if (st.json) {
        out << json{{"tau", r.tau}, {"exact", r.exact}, {"lambda", r.value}}.dump(2) << '\n';
        return kOk;
    }
    out << "tau " << r.tau << '\n';
    out << (r.exact ? "lambda " : "lambda_at_most ") << r.value << '\n';
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lambda (L(2,1)) colouring toolkit", "lambdacol"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings st;
    app.add_flag("--json", st.json, "Emit JSON instead of plain text");
    app.add_option("--max-n", st.max_n, "Vertex cap for exact solving")->check(CLI::Range(1, kSolverHardLimit));
    app.add_option("--max-shapes", st.max_shapes, "Cap on compositions scanned by shape searches")
        ->check(CLI::PositiveNumber);

    std::string file;
    std::string colouring;
    std::string text;
    std::string prefix;
    std::string assignment;
    int a = 0;
    int b = 0;
    int census_max_n = 6;
    std::optional<std::uint64_t> seed;

    auto* lambda = app.add_subcommand("lambda", "Exact lambda number and optimal colouring");
    lambda->add_option("FILE", file)->required();
    auto* check = app.add_subcommand("check", "Validate a colouring");
    check->add_option("FILE", file)->required();
    check->add_option("COLOURING", colouring)->required();

    auto* construct = app.add_subcommand("construct", "Build a named graph");
    construct->require_subcommand(1);
    auto* gn = construct->add_subcommand("gn", "Recursive graph on n+1 vertices with lambda n");
    gn->add_option("N", a)->required();
    auto* gtl = construct->add_subcommand("gtl", "Member of the equal-class family G(t, l)");
    gtl->add_option("T", a)->required();
    gtl->add_option("L", b)->required();
    gtl->add_option("--seed", seed, "Random matchings from this seed");
    gtl->add_option("--assignment", assignment, "Write the class assignment to this file");

    auto* embed = app.add_subcommand("embed", "Embed a coloured graph in a family member");
    embed->add_option("FILE", file)->required();
    embed->add_option("COLOURING", colouring)->required();
    embed->add_option("--out-prefix", prefix, "Also write PREFIX.graph, PREFIX.classes, PREFIX.map");

    auto* standardise = app.add_subcommand("standardise", "Edge-standardise a coloured graph");
    standardise->add_option("FILE", file)->required();
    standardise->add_option("COLOURING", colouring)->required();

    auto* shape_m = app.add_subcommand("shape-m", "M value of a shape c0,c1,...,ct");
    shape_m->add_option("SHAPE", text)->required();
    auto* shape_k = app.add_subcommand("shape-k", "K value of a shape c0,c1,...,ct");
    shape_k->add_option("SHAPE", text)->required();

    auto* maxedges = app.add_subcommand("maxedges", "Maximum edges over n-vertex graphs with lambda t");
    maxedges->add_option("N", a)->required();
    maxedges->add_option("T", b)->required();

    auto* classify_cmd = app.add_subcommand("classify", "Classify an edge-maximal graph");
    classify_cmd->add_option("FILE", file)->required();
    classify_cmd->add_option("--colouring", colouring, "Classify under this optimal colouring");

    auto* verify = app.add_subcommand("verify", "Check the classification at (n, t)");
    verify->add_option("N", a)->required();
    verify->add_option("T", b)->required();
    verify->add_option("--census-max-n", census_max_n, "Graph census cross-check up to this n")
        ->check(CLI::Range(0, kCensusCap));

    auto* census = app.add_subcommand("census", "Max edges per lambda over all labelled n-vertex graphs");
    census->add_option("N", a)->required();

    auto* pathcover = app.add_subcommand("pathcover", "Lambda from the path covering number of the complement");
    pathcover->add_option("FILE", file)->required();

    for (std::size_t i = 0; i < args.size(); ++i) {
        const auto& arg = args[i];
        if (arg == "--max-n" || arg == "--max-shapes") {
            ++i;
            continue;
        }
        if (arg.empty() || arg[0] == '-')
            continue;
        if (!app.get_subcommand_no_throw(arg)) {
            err << "usage error: unknown command '" << arg << "' (try --help)\n";
            return kUsageError;
        }
        break;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << " (try --help)\n";
        return kUsageError;
    }

    try {
        if (*lambda)
            return cmd_lambda(out, st, file);
        if (*check)
            return cmd_check(out, st, file, colouring);
        if (*gn)
            return cmd_construct_gn(out, st, a);
        if (*gtl)
            return cmd_construct_gtl(out, st, a, b, seed, assignment);
        if (*embed)
            return cmd_embed(out, st, file, colouring, prefix);
        if (*standardise)
            return cmd_standardise(out, st, file, colouring);
        if (*shape_m)
            return cmd_shape_value(out, st, text, true);
        if (*shape_k)
            return cmd_shape_value(out, st, text, false);
        if (*maxedges)
            return cmd_maxedges(out, st, a, b);
        if (*classify_cmd)
            return cmd_classify(out, st, file, colouring);
        if (*verify)
            return cmd_verify(out, st, a, b, census_max_n);
        if (*census)
            return cmd_census(out, st, a);
        if (*pathcover)
            return cmd_pathcover(out, st, file);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    err << "usage error: no command given (try --help)\n";
    return kUsageError;
}

} // namespace lambdacol::cli
