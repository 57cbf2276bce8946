#include "arq/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace arq {

namespace {

void require_type_d(const ARQuiver& ar, const char* what) {
    if (ar.datum().type() != DiagramType::D) throw std::domain_error(std::string(what) + " requires type D");
}

std::vector<int> roots_at_level(const ARQuiver& ar, int level) {
    std::vector<int> out;
    for (int k : ar.vertex_order())
        if (ar.coord(k).level == level) out.push_back(k);
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

bool has_summand(const EpsilonForm& form, int signed_index) {
    if (signed_index > 0) return form.a == signed_index || form.b == signed_index;
    return form.b == signed_index;
}

std::vector<RepCoord> simple_root_coords(const ARQuiver& ar) {
    std::vector<RepCoord> out;
    for (int k = 1; k <= ar.rank(); ++k) out.push_back(ar.coord(ar.roots().simple_index(k)));
    return out;
}

std::optional<RepCoord> predicted_simple_root_coord(const ARQuiver& ar, int k) {
    const auto& q = ar.quiver();
    const auto& xi = ar.xi();
    const int n = ar.rank();
    switch (q.classify(k)) {
        case VertexKind::Source: return RepCoord{k, xi[k]};
        case VertexKind::Sink: {
            const int ks = ar.datum().star(k);
            return RepCoord{ks, xi[ks] - 2 * ar.m(ks)};
        }
        case VertexKind::LeftIntermediate:
            if (ar.datum().type() != DiagramType::D) return std::nullopt;
            return RepCoord{1, xi[k] - k + 1};
        case VertexKind::RightIntermediate:
            if (ar.datum().type() != DiagramType::D) return std::nullopt;
            return RepCoord{1, xi[k] - 2 * n + k + 3};
        case VertexKind::Other: break;
    }
    if (ar.datum().type() != DiagramType::D || k != n - 2) return std::nullopt;
    // Trident at n-2 with one fork vertex pointing in and the other out.
    const int in_fork = q.has_arrow(n - 1, n - 2) ? n - 1 : n;
    const int out_fork = in_fork == n ? n - 1 : n;
    if (q.has_arrow(n - 3, n - 2)) return RepCoord{ar.datum().star(out_fork), xi[n - 2] - 2 * n + 5};
    return RepCoord{in_fork, xi[n - 2] - 1};
}

std::vector<int> predicted_m(const ARQuiver& ar) {
    require_type_d(ar, "predicted m-values");
    const int n = ar.rank();
    std::vector<int> m(n, n - 2);
    const int diff = ar.xi()[n] - ar.xi()[n - 1];
    if (n % 2 == 1 && diff == 2) {
        m[n - 2] = n - 3;
        m[n - 1] = n - 1;
    } else if (n % 2 == 1 && diff == -2) {
        m[n - 2] = n - 1;
        m[n - 1] = n - 3;
    }
    return m;
}

int fork_index(const ARQuiver& ar) {
    require_type_d(ar, "fork index");
    const int n = ar.rank();
    return std::abs(ar.xi()[n - 1] - ar.xi()[n]) == 2 ? n - 1 : n;
}

int fork_complement(const ARQuiver& ar) {
    const int n = ar.rank();
    return fork_index(ar) == n ? n - 1 : n;
}

std::optional<LevelPair> level_pair_sum(const ARQuiver& ar, int column) {
    require_type_d(ar, "level pair sum");
    const int n = ar.rank();
    auto upper = ar.at(n - 1, column);
    auto lower = ar.at(n, column);
    if (!upper || !lower) return std::nullopt;
    return LevelPair{ar.roots().epsilon_form(*upper).a, *upper, *lower};
}

RepCoord triangle_apex(const ARQuiver& ar, RepCoord first, RepCoord second) {
    require_type_d(ar, "triangle apex");
    const int n = ar.rank();
    auto at_fork = [&](RepCoord c) { return c.level == n - 1 || c.level == n; };
    if (!at_fork(first) || !at_fork(second))
        throw std::invalid_argument("triangle apex needs coordinates at levels n-1 and n");
    const int gap = std::abs(first.column - second.column);
    if (gap == 0 || gap % 2 != 0)
        throw std::invalid_argument("columns " + std::to_string(first.column) + " and " +
                                    std::to_string(second.column) + " are not a positive even distance apart");
    const int k = gap / 2;
    if (((first.level - second.level) - (k - 1)) % 2 != 0)
        throw std::invalid_argument("level parity does not match distance " + std::to_string(k));
    if (n - 1 - k < 1) throw std::invalid_argument("apex would lie below level 1");
    return {n - 1 - k, (first.column + second.column) / 2};
}

std::vector<SectionalPath> sectional_paths(const ARQuiver& ar) {
    const int n = ar.rank();
    const bool type_d = ar.datum().type() == DiagramType::D;
    std::vector<SectionalPath> out;
    for (PathKind kind : {PathKind::S, PathKind::N}) {
        auto step = [&](int from, int to) {
            const int a = ar.coord(from).level;
            const int b = ar.coord(to).level;
            return kind == PathKind::S ? b > a : b < a;
        };
        std::vector<std::vector<int>> next(ar.size());
        std::vector<bool> has_prev(ar.size(), false);
        for (auto [s, t] : ar.arrows())
            if (step(s, t)) {
                next[s].push_back(t);
                has_prev[t] = true;
            }
        for (int start : ar.vertex_order()) {
            if (has_prev[start]) continue;
            std::vector<int> chain{start};
            auto extend = [&](auto&& self) -> void {
                const int last = chain.back();
                if (next[last].empty()) {
                    SectionalPath p{kind, chain, true, false};
                    if (type_d) {
                        const int edge = kind == PathKind::S ? ar.coord(chain.back()).level : ar.coord(chain.front()).level;
                        p.shallow = edge < n - 1;
                    }
                    out.push_back(std::move(p));
                    return;
                }
                for (int t : next[last]) {
                    chain.push_back(t);
                    self(self);
                    chain.pop_back();
                }
            };
            extend(extend);
        }
    }
    return out;
}

int Swing::s_length(const ARQuiver& ar) const { return ar.rank() - 2 - ar.coord(s_part.front()).level; }
int Swing::n_length(const ARQuiver& ar) const { return ar.rank() - 2 - ar.coord(n_part.back()).level; }

std::vector<int> Swing::members() const {
    std::vector<int> out = s_part;
    out.push_back(fork_upper);
    out.push_back(fork_lower);
    out.insert(out.end(), n_part.begin(), n_part.end());
    return out;
}

std::vector<Swing> swings(const ARQuiver& ar) {
    require_type_d(ar, "swings");
    const int n = ar.rank();
    std::vector<Swing> out;
    for (int k : roots_at_level(ar, n - 1)) {
        const int u = ar.coord(k).column;
        auto pair = level_pair_sum(ar, u);
        if (!pair) continue;
        Swing sw;
        sw.column = u;
        sw.fork_upper = pair->upper;
        sw.fork_lower = pair->lower;
        for (int l = n - 2, p = u - 1; l >= 1; --l, --p) {
            auto r = ar.at(l, p);
            if (!r) break;
            sw.s_part.insert(sw.s_part.begin(), *r);
        }
        for (int l = n - 2, p = u + 1; l >= 1; --l, ++p) {
            auto r = ar.at(l, p);
            if (!r) break;
            sw.n_part.push_back(*r);
        }
        if (sw.s_part.empty() || sw.n_part.empty()) continue;
        sw.a = pair->a;
        out.push_back(std::move(sw));
    }
    return out;
}

SigmaKappa sigma_kappa(const ARQuiver& ar) {
    require_type_d(ar, "sigma/kappa");
    const int n = ar.rank();
    const auto& roots = ar.roots();
    SigmaKappa sk;
    const int simple_upper = roots.simple_index(n - 1);
    const int simple_lower = roots.simple_index(n);
    for (int k : roots_at_level(ar, n - 1))
        if (k != simple_upper && k != simple_lower) {
            sk.sigma.push_back(k);
            sk.sigma_swing.push_back(roots.epsilon_form(k).a);
        }
    sk.kappa = roots_at_level(ar, 1);
    for (int k : sk.kappa) sk.kappa_summand.push_back(roots.epsilon_form(k).b);
    const int tp = fork_complement(ar);
    for (std::size_t s = 1; s < sk.kappa_summand.size(); ++s)
        if (std::abs(sk.kappa_summand[s - 1]) == tp && std::abs(sk.kappa_summand[s]) == tp) {
            sk.fold = static_cast<int>(s) + 1;
            break;
        }
    return sk;
}

RepCoord longest_root_coord(const ARQuiver& ar) {
    require_type_d(ar, "longest root");
    const int n = ar.rank();
    const int xi1 = ar.xi()[1];
    return ar.quiver().is_source(1) ? RepCoord{n - 2, xi1 - n + 1} : RepCoord{n - 2, xi1 - n + 3};
}

bool NonFreeRegion::contains(RepCoord c) const {
    const int depth = rank - 1 - c.level;
    return c.level > 1 && c.level < rank - 1 && j + depth <= c.column && c.column <= i - depth;
}

bool NonFreeRegion::within_band(RepCoord c) const {
    const int depth = rank - 1 - c.level;
    return c.level > 1 && c.level < rank - 1 && j - depth <= c.column && c.column <= i - depth;
}

NonFreeRegion nfree_region(const ARQuiver& ar) {
    require_type_d(ar, "non-free region");
    const int n = ar.rank();
    NonFreeRegion region{n, 0, 0};
    bool first = true;
    for (int k = 0; k < ar.size(); ++k) {
        const auto c = ar.coord(k);
        if (c.level < n - 1 || ar.roots().root(k).height() < 2) continue;
        region.i = first ? c.column : std::max(region.i, c.column);
        region.j = first ? c.column : std::min(region.j, c.column);
        first = false;
    }
    return region;
}

}  // namespace arq
