#pragma once

#include <string>
#include <vector>

#include "arq/ar_quiver.hpp"

namespace arq::test {

// D4 with arrows 2->1, 3->2, 2->4 and xi_3 = 0, the running example.
inline ARQuiver example1() {
    const CartanDatum d(DiagramType::D, 4);
    const auto q = parse_quiver(d, "2>1,3>2,2>4");
    return ARQuiver::build(q, HeightFunction::anchored(q, 3, 0));
}

inline int root(const ARQuiver& ar, const std::string& text) {
    return ar.roots().index_or_throw(parse_root(ar.roots(), text));
}

inline std::vector<std::string> labels(const ARQuiver& ar, const std::vector<int>& seq) {
    std::vector<std::string> out;
    for (int r : seq) out.push_back(ar.label(r));
    return out;
}

// Every orientation of D_n with the standard anchor.
template <class F>
void for_each_orientation(int n, F&& f) {
    const CartanDatum d(DiagramType::D, n);
    for (std::uint32_t m = 0; m < DynkinQuiver::orientation_count(d); ++m)
        f(ARQuiver::build(DynkinQuiver::from_mask(d, m)));
}

}  // namespace arq::test
