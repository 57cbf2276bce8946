#include "arq/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace arq {

namespace {

void rstrip(std::string& s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
}

// Vertices sorted by (p, level); the stable order used by DOT and JSON.
std::vector<int> by_column(const ARQuiver& ar) {
    std::vector<int> order(ar.size());
    for (int r = 0; r < ar.size(); ++r) order[r] = r;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const auto& a = ar.coord(x);
        const auto& b = ar.coord(y);
        return std::pair{a.column, a.level} < std::pair{b.column, b.level};
    });
    return order;
}

}  // namespace

std::string render_ascii(const ARQuiver& ar) {
    int lo = 0;
    int hi = 0;
    std::size_t label_width = 0;
    if (ar.size() > 0) lo = hi = ar.coord(0).column;
    for (int r = 0; r < ar.size(); ++r) {
        lo = std::min(lo, ar.coord(r).column);
        hi = std::max(hi, ar.coord(r).column);
        label_width = std::max(label_width, ar.label(r).size());
    }
    // Two text slots per p-step: labels on slot p, connectors between slots.
    const std::size_t half = label_width / 2 + 2;
    const std::size_t lead = 6;
    auto x_of = [&](int column) { return lead + static_cast<std::size_t>(column - lo) * half; };
    const std::size_t width = x_of(hi) + label_width + 1;

    std::ostringstream out;
    std::string header(width, ' ');
    header.replace(0, 5, "(i,p)");
    for (int p = lo; p <= hi; ++p) {
        const std::string t = std::to_string(p);
        header.replace(x_of(p), t.size(), t);
    }
    rstrip(header);
    out << header << '\n';

    const int n = ar.rank();
    for (int i = 1; i <= n; ++i) {
        if (i > 1) {
            std::string link(width, ' ');
            const int upper = i - 1;
            for (auto [s, t] : ar.arrows()) {
                const auto& a = ar.coord(s);
                const auto& b = ar.coord(t);
                const int top = std::min(a.level, b.level);
                const int bottom = std::max(a.level, b.level);
                // Fork arrows n-2 <-> n are drawn in the gap above row n.
                const bool here = ar.datum().type() == DiagramType::D && bottom == n
                                      ? i == n && top == n - 2
                                      : top == upper && bottom == i;
                if (!here) continue;
                const std::size_t x = x_of(a.column) + half / 2 + label_width / 4;
                link[std::min(x, width - 1)] = a.level < b.level ? '\\' : '/';
            }
            rstrip(link);
            out << link << '\n';
        }
        std::string row(width, ' ');
        const std::string name = std::to_string(i);
        row.replace(0, name.size(), name);
        for (int r = 0; r < ar.size(); ++r)
            if (ar.coord(r).level == i) row.replace(x_of(ar.coord(r).column), ar.label(r).size(), ar.label(r));
        rstrip(row);
        out << row << '\n';
    }
    return out.str();
}

std::string render_dot(const ARQuiver& ar) {
    const auto order = by_column(ar);
    std::map<int, std::vector<int>> columns;
    for (int r : order) columns[ar.coord(r).column].push_back(r);
    std::ostringstream out;
    out << "digraph GammaQ {\n  rankdir=LR;\n  node [shape=plaintext];\n";
    for (int r : order)
        out << "  v" << r << " [label=\"" << ar.label(r) << " @" << ar.coord(r).to_string() << "\"];\n";
    for (const auto& [p, members] : columns) {
        out << "  { rank=same;";
        for (int r : members) out << " v" << r << ";";
        out << " }\n";
    }
    for (auto [s, t] : ar.arrows()) out << "  v" << s << " -> v" << t << ";\n";
    out << "}\n";
    return out.str();
}

std::string render_json(const ARQuiver& ar) {
    const auto order = by_column(ar);
    std::vector<int> slot(ar.size());
    for (std::size_t z = 0; z < order.size(); ++z) slot[order[z]] = static_cast<int>(z);
    const bool type_d = ar.datum().type() == DiagramType::D;

    nlohmann::json vertices = nlohmann::json::array();
    for (int r : order) {
        nlohmann::json v{{"level", ar.coord(r).level}, {"p", ar.coord(r).column},
                         {"coeffs", ar.roots().root(r).coeffs()}};
        if (type_d) {
            const auto f = ar.roots().epsilon_form(r);
            v["eps"] = {f.a, f.b};
        }
        vertices.push_back(std::move(v));
    }
    nlohmann::json arrows = nlohmann::json::array();
    for (auto [s, t] : ar.arrows()) arrows.push_back({slot[s], slot[t]});
    std::vector<int> m;
    for (int i = 1; i <= ar.rank(); ++i) m.push_back(ar.m(i));
    const nlohmann::json out{{"type", type_d ? "D" : "A"},
                             {"rank", ar.rank()},
                             {"quiver", ar.quiver().to_string()},
                             {"vertices", vertices},
                             {"arrows", arrows},
                             {"m", m},
                             {"xi", ar.xi().values()}};
    return out.dump(2) + "\n";
}

ARQuiver parse_ar_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        const std::string type = j.at("type").get<std::string>();
        if (type != "A" && type != "D") throw std::invalid_argument("unknown type '" + type + "'");
        const CartanDatum datum(type == "A" ? DiagramType::A : DiagramType::D, j.at("rank").get<int>());
        const auto quiver = parse_quiver(datum, j.at("quiver").get<std::string>());
        const HeightFunction xi(quiver, j.at("xi").get<std::vector<int>>());
        const auto roots = RootSystem::of(datum);

        const auto& vertices = j.at("vertices");
        if (static_cast<int>(vertices.size()) != roots->size())
            throw std::invalid_argument("expected " + std::to_string(roots->size()) + " vertices");
        std::vector<RepCoord> placement(roots->size());
        std::vector<int> root_of_slot;
        std::vector<bool> seen(roots->size(), false);
        for (const auto& v : vertices) {
            const int r = roots->index_or_throw(PositiveRoot(v.at("coeffs").get<std::vector<int>>()));
            if (seen[r]) throw std::invalid_argument("root " + roots->label(r) + " listed twice");
            seen[r] = true;
            placement[r] = {v.at("level").get<int>(), v.at("p").get<int>()};
            root_of_slot.push_back(r);
        }
        std::vector<std::pair<int, int>> arrows;
        for (const auto& a : j.at("arrows")) {
            const auto ends = a.get<std::vector<std::size_t>>();
            if (ends.size() != 2) throw std::invalid_argument("arrow must have two ends");
            arrows.emplace_back(root_of_slot.at(ends[0]), root_of_slot.at(ends[1]));
        }
        auto ar = ARQuiver::from_parts(quiver, xi, std::move(placement), std::move(arrows));
        if (j.contains("m")) {
            const auto m = j.at("m").get<std::vector<int>>();
            for (int i = 1; i <= ar.rank(); ++i)
                if (m.at(i - 1) != ar.m(i)) throw std::invalid_argument("recorded m disagrees with the placement");
        }
        return ar;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed quiver JSON: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(std::string("malformed quiver JSON: ") + e.what());
    }
}

}  // namespace arq
