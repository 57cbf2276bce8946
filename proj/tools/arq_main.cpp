// arq: command-line front end for the AR-quiver toolkit.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "arq/ar_quiver.hpp"
#include "arq/orders.hpp"
#include "arq/qaffine.hpp"
#include "arq/render.hpp"
#include "arq/root_system.hpp"
#include "arq/verify.hpp"
#include "json.hpp"

#ifndef ARQ_VERSION
#define ARQ_VERSION "0.0.0"
#endif

using namespace arq;
using nlohmann::json;

namespace {

struct QuiverArgs {
    std::string type = "D";
    int rank = 4;
    std::string arrows;
    std::string xi;
    std::string input;  // JSON written by `build --format json`
};

struct Options {
    std::string format = "ascii";
    std::string out;
    QuiverArgs quiver;
    bool json_flag = false;
    std::string strategy = "u1";
    std::string gamma;
    std::string family = "D1";
    int k = 1;
    int l = 1;
    std::string at;
    std::string triple;
    int rank_max = 4;
    std::string suite = "all";
    int jobs = 1;
    std::string json_out;
    bool timing = false;
};

// Input problems found after CLI11 parsing; reported like parse errors.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

DiagramType parse_type(const std::string& t) {
    if (t == "A" || t == "a") return DiagramType::A;
    if (t == "D" || t == "d") return DiagramType::D;
    throw UsageError("unknown type '" + t + "' (expected A or D)");
}

ARQuiver load_quiver(const QuiverArgs& a) {
    if (!a.input.empty()) {
        std::ifstream in(a.input);
        if (!in) throw UsageError("cannot read " + a.input);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_ar_json(buf.str());
    }
    const CartanDatum datum(parse_type(a.type), a.rank);
    if (a.arrows.empty()) throw UsageError("--arrows is required (or --input)");
    const auto q = parse_quiver(datum, a.arrows);
    if (a.xi.empty()) return ARQuiver::build(q);
    const auto [vertex, value] = parse_anchor(a.xi);
    return ARQuiver::build(q, HeightFunction::anchored(q, vertex, value));
}

void add_quiver_options(CLI::App* cmd, QuiverArgs& a) {
    cmd->add_option("--type", a.type, "Diagram type, A or D")->capture_default_str();
    cmd->add_option("--rank", a.rank, "Rank n")->capture_default_str();
    cmd->add_option("--arrows", a.arrows, "Orientation, e.g. \"2>1,3>2,2>4\"");
    cmd->add_option("--xi", a.xi, "Height anchor \"vertex=value\" (default: vertex n at 0)");
    cmd->add_option("--input", a.input, "Read the quiver from build JSON instead");
}

bool wants_json(const Options& o) { return o.json_flag || o.format == "json"; }

int cmd_roots(const Options& o, std::ostream& out) {
    const auto roots = RootSystem::of(CartanDatum(parse_type(o.quiver.type), o.quiver.rank));
    const bool type_d = roots->datum().type() == DiagramType::D;
    if (wants_json(o)) {
        json list = json::array();
        for (int r = 0; r < roots->size(); ++r) {
            json j{{"index", r}, {"coeffs", roots->root(r).coeffs()}, {"height", roots->root(r).height()}};
            if (type_d) j["eps"] = {roots->epsilon_form(r).a, roots->epsilon_form(r).b};
            list.push_back(j);
        }
        out << list.dump(2) << '\n';
        return 0;
    }
    for (int r = 0; r < roots->size(); ++r) {
        out << roots->root(r).to_string();
        if (type_d) out << "  " << roots->epsilon_form(r).to_string();
        out << "  height " << roots->root(r).height() << '\n';
    }
    return 0;
}

int cmd_build(const Options& o, std::ostream& out) {
    const auto ar = load_quiver(o.quiver);
    if (o.format == "json" || o.json_flag)
        out << render_json(ar);
    else if (o.format == "dot")
        out << render_dot(ar);
    else
        out << render_ascii(ar);
    return 0;
}

int cmd_order(const Options& o, std::ostream& out) {
    const auto ar = load_quiver(o.quiver);
    const Reading r = parse_reading(o.strategy);
    const auto order = canonical_reading(ar, r);
    if (wants_json(o)) {
        json seq = json::array();
        for (int v : order.sequence()) seq.push_back(ar.label(v));
        out << json{{"strategy", to_string(r)}, {"sequence", seq}, {"word", order.word().letters}}.dump(2) << '\n';
        return 0;
    }
    for (std::size_t z = 0; z < order.sequence().size(); ++z)
        out << (z ? " < " : "") << ar.label(order.sequence()[z]);
    out << '\n' << order.word().to_string() << '\n';
    return 0;
}

int cmd_pairs(const Options& o, std::ostream& out) {
    const auto ar = load_quiver(o.quiver);
    if (o.gamma.empty()) throw UsageError("--gamma is required");
    const int gamma = ar.roots().index_or_throw(parse_root(ar.roots(), o.gamma));
    json list = json::array();
    std::ostringstream text;
    for (const auto& p : pairs_of(ar, gamma)) {
        const auto v = classify_pair(ar, gamma, p);
        json j{{"alpha", ar.label(p.alpha)}, {"beta", ar.label(p.beta)}, {"verdict", to_string(v.verdict)}};
        text << "(" << ar.label(p.alpha) << ", " << ar.label(p.beta) << ") " << to_string(v.verdict);
        if (v.witness) {
            const std::string w = "(" + ar.label(v.witness->alpha) + ", " + ar.label(v.witness->beta) + ")";
            j["witness"] = w;
            text << ", dominated by " << w;
        }
        if (v.minimal_under) {
            j["minimal_under"] = to_string(*v.minimal_under);
            text << " in " << to_string(*v.minimal_under);
        }
        if (!v.validated) {
            j["validated"] = false;
            text << " (unvalidated)";
        }
        text << '\n';
        list.push_back(j);
    }
    if (wants_json(o))
        out << json{{"gamma", ar.label(gamma)}, {"pairs", list}}.dump(2) << '\n';
    else
        out << text.str();
    return 0;
}

int cmd_denom(const Options& o, std::ostream& out) {
    const auto family = parse_family(o.family);
    const auto poly = denominator(family, o.quiver.rank, o.k, o.l);
    std::optional<int> mult;
    if (!o.at.empty()) mult = zero_multiplicity(poly, parse_spectral(o.at));
    if (wants_json(o)) {
        json factors = json::array();
        for (const auto& r : poly.roots) factors.push_back({{"u", r.u}, {"p", r.p}});
        json j{{"family", to_string(family)}, {"rank", o.quiver.rank}, {"k", o.k},
               {"l", o.l}, {"factors", factors}, {"factor_text", poly.factors}};
        j["multiplicity"] = mult ? json(*mult) : json(nullptr);
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "d_{" << o.k << "," << o.l << "}(z) =";
    if (poly.factors.empty()) out << " 1";
    for (const auto& f : poly.factors) out << " " << f;
    out << '\n';
    for (const auto& r : poly.roots) out << "  zero " << r.to_string() << '\n';
    if (mult) out << "multiplicity at " << o.at << ": " << *mult << '\n';
    return 0;
}

int cmd_dorey(const Options& o, std::ostream& out) {
    const auto family = parse_family(o.family);
    if (o.triple.empty()) throw UsageError("--triple is required");
    const auto t = parse_triple(o.triple);
    const auto v = family == AffineFamily::D1 ? dorey_D1(o.quiver.rank, t) : dorey_D2(o.quiver.rank, t);
    if (wants_json(o)) {
        out << json{{"family", to_string(family)}, {"rank", o.quiver.rank}, {"triple", t.to_string()},
                    {"holds", v.holds}, {"case", v.matched_case}, {"one_way", v.one_way}}
                   .dump(2)
            << '\n';
        return 0;
    }
    if (v.holds)
        out << "yes (case " << v.matched_case << ")\n";
    else
        out << (v.one_way ? "not covered by the criterion\n" : "no\n");
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.rank_max < 4) throw UsageError("--rank-max must be at least 4");
    const auto report = run_suite(o.rank_max, parse_suites(o.suite), o.jobs);
    if (!o.json_out.empty()) {
        std::ofstream f(o.json_out);
        if (!f) throw UsageError("cannot write " + o.json_out);
        f << report_json(report, o.timing) << '\n';
    }
    for (const auto& r : report.records)
        if (!r.passed)
            out << "FAIL " << r.check_id << " n=" << r.rank << (r.orientation.empty() ? "" : " " + r.orientation)
                << (r.xi.empty() ? "" : " xi=" + r.xi) << ": " << r.counterexample << '\n';
    out << report.records.size() - report.failures() << "/" << report.records.size() << " checks passed\n";
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"AR-quiver toolkit: type D root combinatorics, convex orders, denominators", "arq"};
    app.set_version_flag("--version", std::string("arq ") + ARQ_VERSION);
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"ascii", "dot", "json"}))
        ->capture_default_str();
    app.add_option("--out", o.out, "Write output to a file instead of stdout");

    auto* roots = app.add_subcommand("roots", "List the positive roots");
    roots->add_option("--type", o.quiver.type, "Diagram type, A or D")->capture_default_str();
    roots->add_option("--rank", o.quiver.rank, "Rank n")->capture_default_str();
    roots->add_flag("--json", o.json_flag, "Emit JSON");

    auto* build = app.add_subcommand("build", "Build and render Gamma_Q");
    add_quiver_options(build, o.quiver);

    auto* order = app.add_subcommand("order", "Canonical convex order read off Gamma_Q");
    add_quiver_options(order, o.quiver);
    order->add_option("--strategy", o.strategy, "u1, u2, l1 or l2")->capture_default_str();
    order->add_flag("--json", o.json_flag, "Emit JSON");

    auto* pairs = app.add_subcommand("pairs", "Classify the pairs of a root");
    add_quiver_options(pairs, o.quiver);
    pairs->add_option("--gamma", o.gamma, "Root as [1,2,1,1], e1+e2 or <1,2>")->required();
    pairs->add_flag("--json", o.json_flag, "Emit JSON");

    auto* denom = app.add_subcommand("denom", "Denominator d_{k,l}(z)");
    denom->add_option("--family", o.family, "D1 or D2")->capture_default_str();
    denom->add_option("--rank", o.quiver.rank, "Rank n")->required();
    denom->add_option("-k", o.k, "First index")->required();
    denom->add_option("-l", o.l, "Second index")->required();
    denom->add_option("--at", o.at, "Report the zero multiplicity at this parameter, e.g. \"(-q)^4\"");
    denom->add_flag("--json", o.json_flag, "Emit JSON");

    auto* dorey = app.add_subcommand("dorey", "Evaluate the Dorey-type criterion on a triple");
    dorey->add_option("--family", o.family, "D1 or D2")->capture_default_str();
    dorey->add_option("--rank", o.quiver.rank, "Rank n")->required();
    dorey->add_option("--triple", o.triple, "\"(i,p);(j,p);(k,p)\"")->required();
    dorey->add_flag("--json", o.json_flag, "Emit JSON");

    auto* verify = app.add_subcommand("verify", "Run the check catalog over all orientations");
    verify->add_option("--rank-max", o.rank_max, "Largest rank")->required();
    verify->add_option("--suite", o.suite, "structure, orders, qaffine or all")->capture_default_str();
    verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--json", o.json_out, "Write the report as JSON");
    verify->add_flag("--timing", o.timing, "Include elapsed_ms in the JSON report");

    // --format and --out are accepted before or after the subcommand.
    for (auto* cmd : {roots, build, order, pairs, denom, dorey, verify}) {
        if (cmd != verify)
            cmd->add_option("--format", o.format, "ascii, dot or json")->check(CLI::IsMember({"ascii", "dot", "json"}));
        cmd->add_option("--out", o.out, "Write output to a file instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) {
            std::cerr << "error: cannot write " << o.out << '\n';
            return 2;
        }
    }
    std::ostream& out = o.out.empty() ? std::cout : file;

    try {
        if (*roots) return cmd_roots(o, out);
        if (*build) return cmd_build(o, out);
        if (*order) return cmd_order(o, out);
        if (*pairs) return cmd_pairs(o, out);
        if (*denom) return cmd_denom(o, out);
        if (*dorey) return cmd_dorey(o, out);
        if (*verify) return cmd_verify(o, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
