#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arq/root_system.hpp"

namespace arq {

struct Arrow {
    int source = 0;
    int target = 0;
    auto operator<=>(const Arrow&) const = default;
};

enum class VertexKind { Source, Sink, LeftIntermediate, RightIntermediate, Other };

std::string to_string(VertexKind kind);

class DynkinQuiver {
public:
    // Each diagram edge must appear exactly once.
    DynkinQuiver(CartanDatum datum, const std::vector<Arrow>& arrows);

    // Bit k of the mask refers to the k-th edge (min, max) of datum.edges():
    // 0 orients it min -> max, 1 orients it max -> min.
    static DynkinQuiver from_mask(CartanDatum datum, std::uint32_t mask);
    static std::uint32_t orientation_count(const CartanDatum& datum) {
        return std::uint32_t{1} << datum.edges().size();
    }

    const CartanDatum& datum() const { return datum_; }
    int rank() const { return datum_.rank(); }
    std::uint32_t mask() const { return mask_; }
    std::vector<Arrow> arrows() const;
    bool has_arrow(int source, int target) const;

    bool is_source(int i) const;
    bool is_sink(int i) const;
    VertexKind classify(int i) const;

    DynkinQuiver reflect(int i) const;

    // Vertices j with a path j ~> i (including i), and i ~> j.
    std::vector<int> upstream(int i) const;
    std::vector<int> downstream(int i) const;

    std::string to_string() const;  // "2>1,3>2,2>4"

    friend bool operator==(const DynkinQuiver& a, const DynkinQuiver& b) {
        return a.datum_ == b.datum_ && a.mask_ == b.mask_;
    }

private:
    DynkinQuiver(CartanDatum datum, std::uint32_t mask);
    int edge_index(int i, int j) const;

    CartanDatum datum_;
    std::uint32_t mask_ = 0;
};

// Parses "src>dst,src>dst,...".
DynkinQuiver parse_quiver(const CartanDatum& datum, const std::string& arrows);

bool is_adapted(const WeylWord& word, const DynkinQuiver& quiver);
WeylWord coxeter_word(const DynkinQuiver& quiver);

struct EtaZeta {
    PositiveRoot eta;
    PositiveRoot zeta;
};
EtaZeta eta_zeta(const DynkinQuiver& quiver, int i);

class HeightFunction {
public:
    HeightFunction() = default;
    // Validates the arrow rule xi_target = xi_source - 1.
    HeightFunction(const DynkinQuiver& quiver, std::vector<int> values);

    static HeightFunction anchored(const DynkinQuiver& quiver, int vertex, int value);
    static HeightFunction standard(const DynkinQuiver& quiver) {
        return anchored(quiver, quiver.rank(), 0);
    }

    int operator[](int i) const { return values_.at(i - 1); }
    const std::vector<int>& values() const { return values_; }
    HeightFunction shifted(int c) const;
    std::string to_string() const;  // "(-2,-1,0,-2)"

    auto operator<=>(const HeightFunction&) const = default;

private:
    std::vector<int> values_;
};

// Parses "vertex=value".
std::pair<int, int> parse_anchor(const std::string& text);

}  // namespace arq
