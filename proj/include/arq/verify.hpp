#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arq/ar_quiver.hpp"

namespace arq {

enum class Suite { Structure, Orders, QAffine };
std::string to_string(Suite s);
// "structure", "orders", "qaffine" or "all".
std::set<Suite> parse_suites(const std::string& text);

using Counterexample = std::optional<std::string>;

struct CheckInfo {
    std::string id;
    Suite suite = Suite::Structure;
    std::string statement;  // the property being checked, in words
    int min_rank = 4;
    int max_rank = 0;  // 0: no bound
    bool per_orientation = true;

    bool applies_to(int rank) const { return rank >= min_rank && (max_rank == 0 || rank <= max_rank); }
};

// A check on one built quiver, or a global check on a rank.
struct Check {
    CheckInfo info;
    std::function<Counterexample(const ARQuiver&)> on_quiver;
    std::function<Counterexample(int)> on_rank;
};

const std::vector<Check>& check_catalog();
const Check& find_check(const std::string& id);

struct CheckRecord {
    std::string check_id;
    Suite suite = Suite::Structure;
    int rank = 0;
    std::string orientation;  // empty for global checks
    std::uint32_t mask = 0;
    std::string xi;
    bool passed = true;
    std::string counterexample;
    double elapsed_ms = 0;
};

struct VerifyReport {
    std::vector<CheckRecord> records;

    int failures() const;
    bool all_passed() const { return failures() == 0; }
};

// Runs the selected checks over every orientation of D_n, 4 <= n <= rank_max,
// with xi anchored at xi_n = 0. Records are ordered by (n, global checks first,
// orientation mask, catalog order) whatever the number of workers.
VerifyReport run_suite(int rank_max, const std::set<Suite>& suites, int jobs = 1);

// Per-orientation checks of the selected suites on one quiver.
std::vector<CheckRecord> run_on(const ARQuiver& ar, const std::set<Suite>& suites);

std::string report_json(const VerifyReport& report, bool with_timing = false);

// Copy of ar with the arrow at position index reversed; a self-test for the
// mesh check.
ARQuiver with_flipped_arrow(const ARQuiver& ar, std::size_t index);

}  // namespace arq
