#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace arq {

enum class DiagramType { A, D };

// Vertices are numbered 1..rank throughout the library.
class CartanDatum {
public:
    CartanDatum(DiagramType type, int rank);

    DiagramType type() const { return type_; }
    int rank() const { return rank_; }

    bool valid_vertex(int i) const { return i >= 1 && i <= rank_; }
    bool adjacent(int i, int j) const;
    const std::vector<int>& neighbors(int i) const { return neighbors_.at(i - 1); }
    int distance(int i, int j) const { return distance_.at(i - 1).at(j - 1); }
    int cartan(int i, int j) const;
    int coxeter_number() const;
    int positive_root_count() const;

    // Diagram edges as (min, max), sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // The involution i -> i* induced by -w0.
    int star(int i) const;

    std::string name() const;

    friend bool operator==(const CartanDatum& a, const CartanDatum& b) {
        return a.type_ == b.type_ && a.rank_ == b.rank_;
    }

private:
    DiagramType type_;
    int rank_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<std::vector<int>> distance_;
};

class PositiveRoot {
public:
    PositiveRoot() = default;
    // Rejects empty, zero or negative vectors; membership in the root set is
    // checked by RootSystem.
    explicit PositiveRoot(std::vector<int> coeffs);

    const std::vector<int>& coeffs() const { return coeffs_; }
    int rank() const { return static_cast<int>(coeffs_.size()); }
    int operator[](int i) const { return coeffs_.at(i - 1); }

    int height() const;
    int multiplicity() const;
    std::vector<int> support_at_least(int k) const;
    bool is_simple() const { return height() == 1; }

    std::string to_string() const;

    auto operator<=>(const PositiveRoot&) const = default;

private:
    std::vector<int> coeffs_;
};

struct SignedRoot {
    int sign = 1;
    PositiveRoot root;

    auto operator<=>(const SignedRoot&) const = default;
};

// A type-D positive root e_a + sgn(b) e_|b|.
struct EpsilonForm {
    int a = 0;
    int b = 0;

    std::string to_string() const;  // "<1,-4>"
    auto operator<=>(const EpsilonForm&) const = default;
};

struct RootStats {
    int height = 0;
    std::vector<int> support_at_least;
    int multiplicity = 0;
};

RootStats root_stats(const PositiveRoot& root, int k);

struct WeylWord {
    std::vector<int> letters;

    std::size_t size() const { return letters.size(); }
    std::string to_string() const;  // "s3 s2 s1 s4"
    auto operator<=>(const WeylWord&) const = default;
};

// The positive roots of a datum with reflection and pairing arithmetic.
// Roots are addressed by a dense index, sorted by (height, coeffs).
class RootSystem {
public:
    explicit RootSystem(CartanDatum datum);

    // Shared immutable instance per datum.
    static std::shared_ptr<const RootSystem> of(const CartanDatum& datum);

    const CartanDatum& datum() const { return datum_; }
    int size() const { return static_cast<int>(roots_.size()); }
    const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
    const PositiveRoot& root(int index) const { return roots_.at(index); }
    std::optional<int> index_of(const PositiveRoot& root) const;
    std::optional<int> index_of(const std::vector<int>& coeffs) const;
    int index_or_throw(const PositiveRoot& root) const;
    bool contains(const PositiveRoot& root) const { return index_of(root).has_value(); }

    PositiveRoot simple(int i) const;
    int simple_index(int i) const { return index_or_throw(simple(i)); }

    SignedRoot reflect(int i, const SignedRoot& root) const;
    SignedRoot apply_word(const WeylWord& word, const SignedRoot& root) const;

    // Symmetric bilinear form on the root lattice.
    int pairing(const PositiveRoot& a, const PositiveRoot& b) const;
    std::optional<int> sum_index(int a, int b) const { return sum_index_.at(a).at(b); }
    // Unordered decompositions gamma = a + b into positive roots, a < b by index.
    const std::vector<std::pair<int, int>>& decompositions(int gamma) const { return decompositions_.at(gamma); }

    bool is_reduced(const WeylWord& word) const;
    // The roots s_{i1}...s_{i(z-1)} alpha_{iz} along a word; nullopt if not reduced.
    std::optional<std::vector<int>> inversion_sequence(const WeylWord& word) const;

    // Type D only.
    EpsilonForm epsilon_form(const PositiveRoot& root) const;
    EpsilonForm epsilon_form(int index) const { return epsilon_.at(index); }
    PositiveRoot from_epsilon(const EpsilonForm& form) const;

    // Angle form for type D, coefficient vector otherwise.
    std::string label(int index) const;

private:
    std::vector<int> reflect_coeffs(int i, std::vector<int> v) const;

    CartanDatum datum_;
    std::vector<PositiveRoot> roots_;
    std::map<std::vector<int>, int> index_;
    std::vector<std::vector<std::optional<int>>> sum_index_;
    std::vector<std::vector<std::pair<int, int>>> decompositions_;
    std::vector<EpsilonForm> epsilon_;
};

// Accepts "[1,2,1,1]", "e1+e2", "e1-e3" or "<1,-4>".
PositiveRoot parse_root(const RootSystem& system, const std::string& text);

}  // namespace arq
