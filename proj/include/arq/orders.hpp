#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arq/ar_quiver.hpp"

namespace arq {

// A total order on the positive roots induced by a reduced word of w0.
class ConvexOrder {
public:
    // Throws std::invalid_argument for words that are not reduced of full length,
    // and InvariantViolation if the induced order fails convexity.
    static ConvexOrder from_word(const RootSystem& roots, WeylWord word);

    const WeylWord& word() const { return word_; }
    const std::vector<int>& sequence() const { return sequence_; }
    int position(int root) const { return position_.at(root); }
    bool before(int a, int b) const { return position(a) < position(b); }

private:
    WeylWord word_;
    std::vector<int> sequence_;
    std::vector<int> position_;
};

// First convexity violation as text, if any.
std::optional<std::string> convexity_violation(const RootSystem& roots, const std::vector<int>& sequence);

enum class Reading { U1, U2, L1, L2 };
std::string to_string(Reading r);
Reading parse_reading(const std::string& text);
inline constexpr Reading all_readings_tags[] = {Reading::U1, Reading::U2, Reading::L1, Reading::L2};

// Vertex sequence of a canonical reading; type A falls back to reading
// columns from right to left, top level first.
std::vector<int> canonical_sequence(const ARQuiver& ar, Reading strategy);
ConvexOrder canonical_reading(const ARQuiver& ar, Reading strategy);

// The word whose letters are the levels of a vertex sequence.
WeylWord word_of_reading(const ARQuiver& ar, const std::vector<int>& sequence);

// Lazily enumerates every reading of Gamma_Q, i.e. every linear extension of
// "alpha before beta whenever beta -> alpha", in lexicographic order of
// vertex_order() positions.
class ReadingEnumerator {
public:
    explicit ReadingEnumerator(const ARQuiver& ar);
    // Advances to the next reading; false once exhausted.
    bool next();
    const std::vector<int>& current() const { return sequence_; }

private:
    bool available(int slot) const;
    void place(int slot);
    void unplace(int slot);
    bool fill_from(int minimum_slot);

    const ARQuiver* ar_;
    std::vector<int> slot_of_root_;
    std::vector<int> root_of_slot_;
    std::vector<std::vector<int>> blockers_;  // slots that must be read before a slot
    std::vector<std::vector<int>> blocked_;   // slots waiting on a slot
    std::vector<int> pending_;
    std::vector<bool> used_;
    std::vector<int> slots_;
    std::vector<int> sequence_;
    bool started_ = false;
    bool done_ = false;
};

std::set<WeylWord> commutation_class(const CartanDatum& datum, const WeylWord& word);

struct RootPair {
    int alpha = 0;
    int beta = 0;
    auto operator<=>(const RootPair&) const = default;
};

// All decompositions gamma = alpha + beta, alpha the earlier one in every
// reading (or in U1 when the two are incomparable). Throws for simple gamma.
std::vector<RootPair> pairs_of(const ARQuiver& ar, int gamma);

enum class Verdict { Minimal, NonMinimal };
std::string to_string(Verdict v);

struct PairVerdict {
    int gamma = 0;
    RootPair pair;
    Verdict verdict = Verdict::Minimal;
    std::optional<RootPair> witness;        // dominating pair when non-minimal
    std::optional<Reading> minimal_under;   // canonical reading exhibiting minimality
    bool validated = true;                  // false where exactness is not established (type A)
};

PairVerdict classify_pair(const ARQuiver& ar, int gamma, RootPair pair);

bool minimal_wrt(const std::vector<int>& position, int gamma, RootPair pair, const RootSystem& roots);
bool minimal_wrt(const ConvexOrder& order, int gamma, RootPair pair, const RootSystem& roots);

// Exhaustive ground truth: minimal iff minimal in some reading.
PairVerdict oracle_classify(const ARQuiver& ar, int gamma, RootPair pair);

// Bulk oracle over every reading at once: for each gamma, the pairs that are
// minimal in at least one reading.
std::vector<std::set<RootPair>> oracle_minimal_pairs(const ARQuiver& ar);

}  // namespace arq
