#include "arq/quiver.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace arq {

std::string to_string(VertexKind kind) {
    switch (kind) {
        case VertexKind::Source: return "source";
        case VertexKind::Sink: return "sink";
        case VertexKind::LeftIntermediate: return "left-intermediate";
        case VertexKind::RightIntermediate: return "right-intermediate";
        case VertexKind::Other: return "other";
    }
    return "?";
}

DynkinQuiver::DynkinQuiver(CartanDatum datum, std::uint32_t mask) : datum_(std::move(datum)), mask_(mask) {}

DynkinQuiver::DynkinQuiver(CartanDatum datum, const std::vector<Arrow>& arrows) : datum_(std::move(datum)) {
    std::vector<bool> covered(datum_.edges().size(), false);
    for (const auto& a : arrows) {
        const int k = edge_index(a.source, a.target);
        if (k < 0)
            throw std::invalid_argument("arrow " + std::to_string(a.source) + ">" + std::to_string(a.target) +
                                        " is not an edge of " + datum_.name());
        if (covered[k])
            throw std::invalid_argument("edge " + std::to_string(a.source) + "-" + std::to_string(a.target) +
                                        " oriented twice");
        covered[k] = true;
        if (a.source > a.target) mask_ |= std::uint32_t{1} << k;
    }
    for (std::size_t k = 0; k < covered.size(); ++k)
        if (!covered[k]) {
            auto [i, j] = datum_.edges()[k];
            throw std::invalid_argument("edge " + std::to_string(i) + "-" + std::to_string(j) + " has no orientation");
        }
}

DynkinQuiver DynkinQuiver::from_mask(CartanDatum datum, std::uint32_t mask) {
    if (mask >= orientation_count(datum)) throw std::out_of_range("orientation mask out of range");
    return DynkinQuiver(std::move(datum), mask);
}

int DynkinQuiver::edge_index(int i, int j) const {
    const auto key = std::minmax(i, j);
    const auto& edges = datum_.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{key.first, key.second});
    if (it == edges.end() || *it != std::pair{key.first, key.second}) return -1;
    return static_cast<int>(it - edges.begin());
}

std::vector<Arrow> DynkinQuiver::arrows() const {
    std::vector<Arrow> out;
    const auto& edges = datum_.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto [i, j] = edges[k];
        if (mask_ >> k & 1U)
            out.push_back({j, i});
        else
            out.push_back({i, j});
    }
    return out;
}

bool DynkinQuiver::has_arrow(int source, int target) const {
    const int k = edge_index(source, target);
    if (k < 0) return false;
    const bool reversed = mask_ >> k & 1U;
    return reversed == (source > target);
}

bool DynkinQuiver::is_source(int i) const {
    const auto& ns = datum_.neighbors(i);
    return std::all_of(ns.begin(), ns.end(), [&](int j) { return has_arrow(i, j); });
}

bool DynkinQuiver::is_sink(int i) const {
    const auto& ns = datum_.neighbors(i);
    return std::all_of(ns.begin(), ns.end(), [&](int j) { return has_arrow(j, i); });
}

VertexKind DynkinQuiver::classify(int b) const {
    if (!datum_.valid_vertex(b)) throw std::out_of_range("vertex " + std::to_string(b));
    if (is_source(b)) return VertexKind::Source;
    if (is_sink(b)) return VertexKind::Sink;
    const int n = rank();
    // Right intermediate: arrows run toward vertex 1 through b; left: away from it.
    auto towards_one = [&](int hi) { return has_arrow(hi, b) && has_arrow(b, b - 1); };
    auto away_from_one = [&](int hi) { return has_arrow(b - 1, b) && has_arrow(b, hi); };
    if (datum_.type() == DiagramType::D && b == n - 2) {
        if (towards_one(n - 1) && towards_one(n)) return VertexKind::RightIntermediate;
        if (away_from_one(n - 1) && away_from_one(n)) return VertexKind::LeftIntermediate;
        return VertexKind::Other;
    }
    if (b >= 2 && datum_.valid_vertex(b + 1)) {
        if (towards_one(b + 1)) return VertexKind::RightIntermediate;
        if (away_from_one(b + 1)) return VertexKind::LeftIntermediate;
    }
    return VertexKind::Other;
}

DynkinQuiver DynkinQuiver::reflect(int i) const {
    if (!datum_.valid_vertex(i)) throw std::out_of_range("vertex " + std::to_string(i));
    std::uint32_t mask = mask_;
    for (int j : datum_.neighbors(i)) mask ^= std::uint32_t{1} << edge_index(i, j);
    return DynkinQuiver(datum_, mask);
}

namespace {

std::vector<int> reachable(const DynkinQuiver& q, int start, bool forward) {
    std::vector<bool> seen(q.rank() + 1, false);
    std::deque<int> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : q.datum().neighbors(v)) {
            const bool step = forward ? q.has_arrow(v, w) : q.has_arrow(w, v);
            if (step && !seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> out;
    for (int v = 1; v <= q.rank(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

PositiveRoot sum_of_simples(int rank, const std::vector<int>& vertices) {
    std::vector<int> v(rank, 0);
    for (int i : vertices) v[i - 1] = 1;
    return PositiveRoot(std::move(v));
}

}  // namespace

std::vector<int> DynkinQuiver::upstream(int i) const { return reachable(*this, i, false); }
std::vector<int> DynkinQuiver::downstream(int i) const { return reachable(*this, i, true); }

std::string DynkinQuiver::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& a : arrows()) {
        os << (first ? "" : ",") << a.source << '>' << a.target;
        first = false;
    }
    return os.str();
}

DynkinQuiver parse_quiver(const CartanDatum& datum, const std::string& text) {
    static const std::regex item(R"(\s*(\d+)\s*(?:>|->)\s*(\d+)\s*)");
    std::vector<Arrow> arrows;
    std::stringstream ss(text);
    for (std::string token; std::getline(ss, token, ',');) {
        std::smatch m;
        if (!std::regex_match(token, m, item)) throw std::invalid_argument("cannot parse arrow '" + token + "'");
        arrows.push_back({std::stoi(m[1].str()), std::stoi(m[2].str())});
    }
    return DynkinQuiver(datum, arrows);
}

bool is_adapted(const WeylWord& word, const DynkinQuiver& quiver) {
    DynkinQuiver q = quiver;
    for (int letter : word.letters) {
        if (!q.datum().valid_vertex(letter) || !q.is_source(letter)) return false;
        q = q.reflect(letter);
    }
    return true;
}

WeylWord coxeter_word(const DynkinQuiver& quiver) {
    WeylWord word;
    std::vector<bool> used(quiver.rank() + 1, false);
    DynkinQuiver q = quiver;
    while (static_cast<int>(word.size()) < quiver.rank()) {
        int pick = 0;
        for (int i = 1; i <= q.rank() && !pick; ++i)
            if (!used[i] && q.is_source(i)) pick = i;
        if (!pick) throw std::logic_error("no source left while peeling " + quiver.to_string());
        used[pick] = true;
        word.letters.push_back(pick);
        q = q.reflect(pick);
    }
    return word;
}

EtaZeta eta_zeta(const DynkinQuiver& quiver, int i) {
    if (!quiver.datum().valid_vertex(i)) throw std::out_of_range("vertex " + std::to_string(i));
    return {sum_of_simples(quiver.rank(), quiver.upstream(i)), sum_of_simples(quiver.rank(), quiver.downstream(i))};
}

HeightFunction::HeightFunction(const DynkinQuiver& quiver, std::vector<int> values) : values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != quiver.rank())
        throw std::invalid_argument("height function has wrong length");
    for (const auto& a : quiver.arrows())
        if ((*this)[a.target] != (*this)[a.source] - 1)
            throw std::invalid_argument("height function violates arrow " + std::to_string(a.source) + ">" +
                                        std::to_string(a.target));
}

HeightFunction HeightFunction::anchored(const DynkinQuiver& quiver, int vertex, int value) {
    if (!quiver.datum().valid_vertex(vertex)) throw std::out_of_range("anchor vertex " + std::to_string(vertex));
    std::vector<int> xi(quiver.rank(), 0);
    std::vector<bool> seen(quiver.rank() + 1, false);
    std::deque<int> queue{vertex};
    xi[vertex - 1] = value;
    seen[vertex] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : quiver.datum().neighbors(v)) {
            if (seen[w]) continue;
            xi[w - 1] = xi[v - 1] + (quiver.has_arrow(v, w) ? -1 : 1);
            seen[w] = true;
            queue.push_back(w);
        }
    }
    return HeightFunction(quiver, std::move(xi));
}

HeightFunction HeightFunction::shifted(int c) const {
    HeightFunction out = *this;
    for (int& x : out.values_) x += c;
    return out;
}

std::string HeightFunction::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < values_.size(); ++k) os << (k ? "," : "") << values_[k];
    os << ')';
    return os.str();
}

std::pair<int, int> parse_anchor(const std::string& text) {
    static const std::regex pattern(R"(\s*(\d+)\s*=\s*(-?\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw std::invalid_argument("cannot parse anchor '" + text + "'");
    return {std::stoi(m[1].str()), std::stoi(m[2].str())};
}

}  // namespace arq
