#include "arq/orders.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>

namespace arq {

ConvexOrder ConvexOrder::from_word(const RootSystem& roots, WeylWord word) {
    if (static_cast<int>(word.size()) != roots.size())
        throw std::invalid_argument("word of length " + std::to_string(word.size()) + " cannot reach w0 of length " +
                                    std::to_string(roots.size()));
    auto seq = roots.inversion_sequence(word);
    if (!seq) throw std::invalid_argument("word " + word.to_string() + " is not reduced");
    if (auto bad = convexity_violation(roots, *seq)) throw InvariantViolation(*bad);
    ConvexOrder order;
    order.word_ = std::move(word);
    order.sequence_ = std::move(*seq);
    order.position_.assign(roots.size(), -1);
    for (int z = 0; z < roots.size(); ++z) order.position_[order.sequence_[z]] = z;
    return order;
}

std::optional<std::string> convexity_violation(const RootSystem& roots, const std::vector<int>& sequence) {
    if (static_cast<int>(sequence.size()) != roots.size()) return "sequence does not list every positive root";
    std::vector<int> pos(roots.size(), -1);
    for (int z = 0; z < roots.size(); ++z) {
        if (pos.at(sequence[z]) >= 0) return "root " + roots.label(sequence[z]) + " listed twice";
        pos[sequence[z]] = z;
    }
    for (int g = 0; g < roots.size(); ++g)
        for (auto [a, b] : roots.decompositions(g)) {
            const auto [lo, hi] = std::minmax(pos[a], pos[b]);
            if (!(lo < pos[g] && pos[g] < hi))
                return roots.label(g) + " is not between " + roots.label(a) + " and " + roots.label(b);
        }
    return std::nullopt;
}

std::string to_string(Reading r) {
    switch (r) {
        case Reading::U1: return "U1";
        case Reading::U2: return "U2";
        case Reading::L1: return "L1";
        case Reading::L2: return "L2";
    }
    return "?";
}

Reading parse_reading(const std::string& text) {
    std::string t = text;
    for (char& c : t) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (Reading r : all_readings_tags)
        if (to_string(r) == t) return r;
    throw std::invalid_argument("unknown reading strategy '" + text + "'");
}

std::vector<int> canonical_sequence(const ARQuiver& ar, Reading strategy) {
    std::vector<int> seq = ar.vertex_order();
    if (ar.datum().type() != DiagramType::D) {
        std::sort(seq.begin(), seq.end(), [&](int x, int y) {
            const auto& a = ar.coord(x);
            const auto& b = ar.coord(y);
            return std::pair{-a.column, a.level} < std::pair{-b.column, b.level};
        });
        return seq;
    }
    const auto& roots = ar.roots();
    const auto& datum = ar.datum();
    auto key = [&](int v) {
        const auto& c = ar.coord(v);
        const int d = datum.distance(1, c.level);
        const bool positive_tail = roots.epsilon_form(v).b > 0;
        switch (strategy) {
            case Reading::U1: return std::tuple{d - c.column, -d, -c.level};
            case Reading::U2: return std::tuple{d - c.column, -d, c.level};
            // L-readings: vertices sharing (d, p) are the fork pair <a,t>, <a,-t>;
            // L1 reads the -e_t member first, L2 the +e_t member.
            case Reading::L1: return std::tuple{-(d + c.column), d, positive_tail ? 1 : 0};
            case Reading::L2: return std::tuple{-(d + c.column), d, positive_tail ? 0 : 1};
        }
        return std::tuple{0, 0, 0};
    };
    std::sort(seq.begin(), seq.end(), [&](int x, int y) { return key(x) < key(y); });
    return seq;
}

WeylWord word_of_reading(const ARQuiver& ar, const std::vector<int>& sequence) {
    WeylWord w;
    for (int v : sequence) w.letters.push_back(ar.coord(v).level);
    return w;
}

ConvexOrder canonical_reading(const ARQuiver& ar, Reading strategy) {
    const auto seq = canonical_sequence(ar, strategy);
    auto order = ConvexOrder::from_word(ar.roots(), word_of_reading(ar, seq));
    if (order.sequence() != seq)
        throw InvariantViolation(to_string(strategy) + " reading does not induce the roots it was read from");
    return order;
}

ReadingEnumerator::ReadingEnumerator(const ARQuiver& ar) : ar_(&ar) {
    const int n = ar.size();
    root_of_slot_ = ar.vertex_order();
    slot_of_root_.assign(n, 0);
    for (int s = 0; s < n; ++s) slot_of_root_[root_of_slot_[s]] = s;
    blockers_.assign(n, {});
    blocked_.assign(n, {});
    for (auto [src, dst] : ar.arrows()) {
        blockers_[slot_of_root_[src]].push_back(slot_of_root_[dst]);
        blocked_[slot_of_root_[dst]].push_back(slot_of_root_[src]);
    }
    pending_.assign(n, 0);
    for (int s = 0; s < n; ++s) pending_[s] = static_cast<int>(blockers_[s].size());
    used_.assign(n, false);
}

bool ReadingEnumerator::available(int slot) const { return !used_[slot] && pending_[slot] == 0; }

void ReadingEnumerator::place(int slot) {
    used_[slot] = true;
    for (int w : blocked_[slot]) --pending_[w];
    slots_.push_back(slot);
}

void ReadingEnumerator::unplace(int slot) {
    used_[slot] = false;
    for (int w : blocked_[slot]) ++pending_[w];
    slots_.pop_back();
}

bool ReadingEnumerator::fill_from(int minimum_slot) {
    const int n = static_cast<int>(used_.size());
    for (int lo = minimum_slot; static_cast<int>(slots_.size()) < n; lo = 0) {
        int pick = -1;
        for (int s = lo; s < n && pick < 0; ++s)
            if (available(s)) pick = s;
        if (pick < 0) return false;
        place(pick);
    }
    return true;
}

bool ReadingEnumerator::next() {
    if (done_) return false;
    bool ok = false;
    if (!started_) {
        started_ = true;
        ok = fill_from(0);
    } else {
        while (!slots_.empty() && !ok) {
            const int last = slots_.back();
            unplace(last);
            const int before = static_cast<int>(slots_.size());
            if (fill_from(last + 1)) {
                ok = true;
            } else {
                while (static_cast<int>(slots_.size()) > before) unplace(slots_.back());
            }
        }
    }
    if (!ok) {
        done_ = true;
        return false;
    }
    sequence_.clear();
    for (int s : slots_) sequence_.push_back(root_of_slot_[s]);
    return true;
}

std::set<WeylWord> commutation_class(const CartanDatum& datum, const WeylWord& word) {
    std::set<WeylWord> seen{word};
    std::deque<WeylWord> queue{word};
    while (!queue.empty()) {
        WeylWord w = queue.front();
        queue.pop_front();
        for (std::size_t z = 0; z + 1 < w.size(); ++z) {
            const int a = w.letters[z];
            const int b = w.letters[z + 1];
            if (a == b || datum.adjacent(a, b)) continue;
            WeylWord swapped = w;
            std::swap(swapped.letters[z], swapped.letters[z + 1]);
            if (seen.insert(swapped).second) queue.push_back(std::move(swapped));
        }
    }
    return seen;
}

std::vector<RootPair> pairs_of(const ARQuiver& ar, int gamma) {
    const auto& roots = ar.roots();
    if (roots.root(gamma).is_simple()) throw std::invalid_argument("simple root " + ar.label(gamma) + " has no pairs");
    std::vector<int> u1_position;
    std::vector<RootPair> out;
    for (auto [a, b] : roots.decompositions(gamma)) {
        if (ar.precedes(a, b)) {
            out.push_back({a, b});
        } else if (ar.precedes(b, a)) {
            out.push_back({b, a});
        } else {
            if (u1_position.empty()) {
                u1_position.assign(ar.size(), 0);
                const auto seq = canonical_sequence(ar, Reading::U1);
                for (int z = 0; z < ar.size(); ++z) u1_position[seq[z]] = z;
            }
            out.push_back(u1_position[a] < u1_position[b] ? RootPair{a, b} : RootPair{b, a});
        }
    }
    return out;
}

std::string to_string(Verdict v) { return v == Verdict::Minimal ? "minimal" : "non-minimal"; }

bool minimal_wrt(const std::vector<int>& position, int gamma, RootPair pair, const RootSystem& roots) {
    const auto [lo, hi] = std::minmax(position[pair.alpha], position[pair.beta]);
    for (auto [x, y] : roots.decompositions(gamma)) {
        const auto [in_lo, in_hi] = std::minmax(position[x], position[y]);
        if (lo < in_lo && in_lo < position[gamma] && position[gamma] < in_hi && in_hi < hi) return false;
    }
    return true;
}

bool minimal_wrt(const ConvexOrder& order, int gamma, RootPair pair, const RootSystem& roots) {
    std::vector<int> position(roots.size());
    for (int z = 0; z < roots.size(); ++z) position[order.sequence()[z]] = z;
    return minimal_wrt(position, gamma, pair, roots);
}

namespace {

void check_pair(const ARQuiver& ar, int gamma, RootPair pair) {
    if (ar.roots().sum_index(pair.alpha, pair.beta) != gamma)
        throw std::invalid_argument(ar.label(pair.alpha) + " + " + ar.label(pair.beta) + " is not " + ar.label(gamma));
}

}  // namespace

PairVerdict classify_pair(const ARQuiver& ar, int gamma, RootPair pair) {
    check_pair(ar, gamma, pair);
    PairVerdict v;
    v.gamma = gamma;
    v.pair = pair;
    v.validated = ar.datum().type() == DiagramType::D;
    for (const auto& other : pairs_of(ar, gamma)) {
        if (other == pair) continue;
        if (ar.precedes(pair.alpha, other.alpha) && ar.precedes(other.beta, pair.beta)) {
            v.verdict = Verdict::NonMinimal;
            v.witness = other;
            return v;
        }
    }
    if (ar.datum().type() == DiagramType::D)
        for (Reading r : all_readings_tags) {
            const auto seq = canonical_sequence(ar, r);
            std::vector<int> position(ar.size());
            for (int z = 0; z < ar.size(); ++z) position[seq[z]] = z;
            if (minimal_wrt(position, gamma, pair, ar.roots())) {
                v.minimal_under = r;
                break;
            }
        }
    return v;
}

PairVerdict oracle_classify(const ARQuiver& ar, int gamma, RootPair pair) {
    check_pair(ar, gamma, pair);
    PairVerdict v;
    v.gamma = gamma;
    v.pair = pair;
    v.verdict = Verdict::NonMinimal;
    ReadingEnumerator readings(ar);
    std::vector<int> position(ar.size());
    while (readings.next()) {
        const auto& seq = readings.current();
        for (int z = 0; z < ar.size(); ++z) position[seq[z]] = z;
        if (minimal_wrt(position, gamma, pair, ar.roots())) {
            v.verdict = Verdict::Minimal;
            return v;
        }
    }
    return v;
}

std::vector<std::set<RootPair>> oracle_minimal_pairs(const ARQuiver& ar) {
    const auto& roots = ar.roots();
    std::vector<std::vector<RootPair>> pairs(ar.size());
    for (int g = 0; g < ar.size(); ++g)
        if (!roots.root(g).is_simple()) pairs[g] = pairs_of(ar, g);
    std::vector<std::set<RootPair>> minimal(ar.size());
    ReadingEnumerator readings(ar);
    std::vector<int> position(ar.size());
    while (readings.next()) {
        const auto& seq = readings.current();
        for (int z = 0; z < ar.size(); ++z) position[seq[z]] = z;
        for (int g = 0; g < ar.size(); ++g)
            for (const auto& p : pairs[g])
                if (!minimal[g].count(p) && minimal_wrt(position, g, p, roots)) minimal[g].insert(p);
    }
    return minimal;
}

}  // namespace arq
