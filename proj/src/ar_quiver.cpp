#include "arq/ar_quiver.hpp"

#include <algorithm>

namespace arq {

std::string RepCoord::to_string() const {
    return "(" + std::to_string(level) + "," + std::to_string(column) + ")";
}

ARQuiver::ARQuiver(const DynkinQuiver& quiver, const HeightFunction& xi)
    : roots_(RootSystem::of(quiver.datum())),
      quiver_(quiver),
      xi_(quiver, xi.values()),
      coxeter_(coxeter_word(quiver)) {}

ARQuiver ARQuiver::build(const DynkinQuiver& quiver, const HeightFunction& xi) {
    ARQuiver ar(quiver, xi);
    const int n = quiver.rank();
    const int total = ar.roots_->size();
    std::vector<std::optional<RepCoord>> placed(total);
    ar.m_.assign(n, 0);
    for (int i = 1; i <= n; ++i) {
        SignedRoot beta{1, eta_zeta(quiver, i).eta};
        RepCoord c{i, xi[i]};
        for (;;) {
            const int idx = ar.roots_->index_or_throw(beta.root);
            if (placed[idx])
                throw InvariantViolation("root " + ar.label(idx) + " placed at both " + placed[idx]->to_string() +
                                         " and " + c.to_string());
            placed[idx] = c;
            beta = ar.tau(beta);
            if (beta.sign < 0) break;
            c.column -= 2;
            ++ar.m_[i - 1];
            if (ar.m_[i - 1] > total) throw InvariantViolation("tau orbit at level " + std::to_string(i) + " runs away");
        }
    }
    ar.placement_.reserve(total);
    for (int k = 0; k < total; ++k) {
        if (!placed[k]) throw InvariantViolation("root " + ar.label(k) + " has no coordinate");
        ar.placement_.push_back(*placed[k]);
    }
    ar.index_placement();
    for (int k : ar.order_) {
        const RepCoord c = ar.placement_[k];
        for (int j : quiver.datum().neighbors(c.level))
            if (auto t = ar.at(j, c.column + 1)) ar.arrows_.emplace_back(k, *t);
    }
    ar.index_arrows();
    return ar;
}

ARQuiver ARQuiver::from_parts(const DynkinQuiver& quiver, const HeightFunction& xi, std::vector<RepCoord> placement,
                              std::vector<std::pair<int, int>> arrows) {
    ARQuiver ar(quiver, xi);
    if (static_cast<int>(placement.size()) != ar.roots_->size())
        throw std::invalid_argument("placement covers " + std::to_string(placement.size()) + " of " +
                                    std::to_string(ar.roots_->size()) + " roots");
    for (const auto& c : placement) {
        if (!quiver.datum().valid_vertex(c.level)) throw std::invalid_argument("bad level in " + c.to_string());
        if ((c.column - xi[c.level]) % 2 != 0) throw std::invalid_argument(c.to_string() + " is not in ZQ");
    }
    ar.placement_ = std::move(placement);
    ar.index_placement();
    if (static_cast<int>(ar.by_coord_.size()) != ar.size())
        throw std::invalid_argument("placement is not injective");
    ar.m_.assign(quiver.rank(), 0);
    for (const auto& c : ar.placement_)
        ar.m_[c.level - 1] = std::max(ar.m_[c.level - 1], (xi[c.level] - c.column) / 2);
    for (auto [s, t] : arrows)
        if (s < 0 || t < 0 || s >= ar.size() || t >= ar.size()) throw std::invalid_argument("arrow index out of range");
    ar.arrows_ = std::move(arrows);
    ar.index_arrows();
    return ar;
}

void ARQuiver::index_placement() {
    by_coord_.clear();
    for (int k = 0; k < size(); ++k) by_coord_.emplace(placement_[k], k);
    order_.clear();
    for (const auto& [c, k] : by_coord_) order_.push_back(k);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
        const auto& ca = placement_[a];
        const auto& cb = placement_[b];
        return std::pair{ca.column, ca.level} < std::pair{cb.column, cb.level};
    });
}

void ARQuiver::index_arrows() {
    out_.assign(size(), {});
    in_.assign(size(), {});
    for (auto [s, t] : arrows_) {
        out_[s].push_back(t);
        in_[t].push_back(s);
    }
    const std::size_t words = (size() + 63) / 64;
    reach_.assign(size(), std::vector<std::uint64_t>(words, 0));
    // Arrows never decrease the column in a genuine build, but fault-injected
    // copies may contain cycles, so close transitively until stable.
    for (int k = 0; k < size(); ++k) reach_[k][k / 64] |= std::uint64_t{1} << (k % 64);
    for (bool changed = true; changed;) {
        changed = false;
        for (auto it = order_.rbegin(); it != order_.rend(); ++it)
            for (int t : out_[*it])
                for (std::size_t w = 0; w < words; ++w) {
                    const auto merged = reach_[*it][w] | reach_[t][w];
                    if (merged != reach_[*it][w]) {
                        reach_[*it][w] = merged;
                        changed = true;
                    }
                }
    }
}

std::optional<int> ARQuiver::at(RepCoord c) const {
    auto it = by_coord_.find(c);
    if (it == by_coord_.end()) return std::nullopt;
    return it->second;
}

bool ARQuiver::reachable(int from, int to) const { return reach_.at(from).at(to / 64) >> (to % 64) & 1U; }

bool ARQuiver::precedes(int a, int b) const { return a != b && reachable(b, a); }

SignedRoot ARQuiver::tau(const SignedRoot& root) const { return roots_->apply_word(coxeter_, root); }

SignedRoot ARQuiver::tau_inverse(const SignedRoot& root) const {
    WeylWord inverse{{coxeter_.letters.rbegin(), coxeter_.letters.rend()}};
    return roots_->apply_word(inverse, root);
}

}  // namespace arq
