#pragma once

#include <optional>
#include <vector>

#include "arq/ar_quiver.hpp"

namespace arq {

// Signed summand index: +k for e_k, -k for -e_k.
bool has_summand(const EpsilonForm& form, int signed_index);

// phi(alpha_k) as placed by the builder, indexed by k - 1.
std::vector<RepCoord> simple_root_coords(const ARQuiver& ar);

// phi(alpha_k) predicted from the orientation around k alone; nullopt when no
// closed formula applies (intermediate vertices in type A).
std::optional<RepCoord> predicted_simple_root_coord(const ARQuiver& ar, int k);

// The m-values forced by the parity of n and xi_n - xi_{n-1}.
std::vector<int> predicted_m(const ARQuiver& ar);

// The index t in {n-1, n} whose summands live at levels n-1 and n; t' is the other one.
int fork_index(const ARQuiver& ar);
int fork_complement(const ARQuiver& ar);

struct LevelPair {
    int a = 0;
    int upper = 0;  // root at level n-1
    int lower = 0;  // root at level n
};
std::optional<LevelPair> level_pair_sum(const ARQuiver& ar, int column);

// Throws std::invalid_argument unless the two coordinates satisfy the level,
// distance and parity preconditions.
RepCoord triangle_apex(const ARQuiver& ar, RepCoord first, RepCoord second);

enum class PathKind { S, N };

struct SectionalPath {
    PathKind kind = PathKind::S;
    std::vector<int> roots;  // in arrow order
    bool maximal = true;
    bool shallow = false;
};

// Every maximal S- and N-sectional path, including single-vertex ones.
std::vector<SectionalPath> sectional_paths(const ARQuiver& ar);

struct Swing {
    int a = 0;
    int column = 0;           // column of the fork
    std::vector<int> s_part;  // S_r -> ... -> S_{n-2}
    int fork_upper = 0;       // level n-1
    int fork_lower = 0;       // level n
    std::vector<int> n_part;  // N_{n-2} -> ... -> N_s

    int s_length(const ARQuiver& ar) const;
    int n_length(const ARQuiver& ar) const;
    std::vector<int> members() const;
};

std::vector<Swing> swings(const ARQuiver& ar);

struct SigmaKappa {
    std::vector<int> sigma;        // decreasing column
    std::vector<int> sigma_swing;  // swing index of each sigma_k
    std::vector<int> kappa;        // decreasing column
    std::vector<int> kappa_summand;
    int fold = 0;  // position l with |j_{l-1}| = |j_l| = t'; 0 if absent
};
SigmaKappa sigma_kappa(const ARQuiver& ar);

RepCoord longest_root_coord(const ARQuiver& ar);

struct NonFreeRegion {
    int rank = 0;
    int i = 0;  // max column of height >= 2 roots at levels n-1, n
    int j = 0;  // min column of the same
    // The triangle spanned above the fork between columns j and i.
    bool contains(RepCoord c) const;
    // The weaker band j-(n-1-l) <= p <= i-(n-1-l).
    bool within_band(RepCoord c) const;
};
NonFreeRegion nfree_region(const ARQuiver& ar);

}  // namespace arq
