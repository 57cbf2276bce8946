#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arq/quiver.hpp"
#include "arq/root_system.hpp"

namespace arq {

struct RepCoord {
    int level = 0;
    int column = 0;

    std::string to_string() const;  // "(3,-4)"
    auto operator<=>(const RepCoord&) const = default;
};

// Raised when a construction breaks one of its structural invariants; this
// points at a bug rather than bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The AR quiver of a Dynkin quiver, embedded in the repetition quiver.
// Vertices are addressed by root index in the underlying RootSystem.
class ARQuiver {
public:
    static ARQuiver build(const DynkinQuiver& quiver, const HeightFunction& xi);
    static ARQuiver build(const DynkinQuiver& quiver) { return build(quiver, HeightFunction::standard(quiver)); }

    // Reassembles a quiver from an explicit placement and arrow list, checking
    // only that the placement is a bijection onto a subset of ZQ.
    static ARQuiver from_parts(const DynkinQuiver& quiver, const HeightFunction& xi,
                               std::vector<RepCoord> placement, std::vector<std::pair<int, int>> arrows);

    const RootSystem& roots() const { return *roots_; }
    const CartanDatum& datum() const { return quiver_.datum(); }
    const DynkinQuiver& quiver() const { return quiver_; }
    const HeightFunction& xi() const { return xi_; }
    int rank() const { return quiver_.rank(); }
    int size() const { return static_cast<int>(placement_.size()); }

    const RepCoord& coord(int root) const { return placement_.at(root); }
    std::optional<int> at(RepCoord c) const;
    std::optional<int> at(int level, int column) const { return at(RepCoord{level, column}); }
    int m(int i) const { return m_.at(i - 1); }

    // Root indices sorted by (column, level).
    const std::vector<int>& vertex_order() const { return order_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    const std::vector<int>& successors(int root) const { return out_.at(root); }
    const std::vector<int>& predecessors(int root) const { return in_.at(root); }

    // a precedes b when Gamma_Q has a path from b to a.
    bool precedes(int a, int b) const;
    bool reachable(int from, int to) const;

    const WeylWord& coxeter() const { return coxeter_; }
    SignedRoot tau(const SignedRoot& root) const;
    SignedRoot tau_inverse(const SignedRoot& root) const;

    std::string label(int root) const { return roots_->label(root); }

    friend bool operator==(const ARQuiver& a, const ARQuiver& b) {
        return a.quiver_ == b.quiver_ && a.xi_ == b.xi_ && a.placement_ == b.placement_ && a.arrows_ == b.arrows_;
    }

private:
    ARQuiver(const DynkinQuiver& quiver, const HeightFunction& xi);
    void index_placement();
    void index_arrows();

    std::shared_ptr<const RootSystem> roots_;
    DynkinQuiver quiver_;
    HeightFunction xi_;
    WeylWord coxeter_;
    std::vector<RepCoord> placement_;
    std::map<RepCoord, int> by_coord_;
    std::vector<int> m_;
    std::vector<int> order_;
    std::vector<std::pair<int, int>> arrows_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<std::vector<std::uint64_t>> reach_;
};

}  // namespace arq
