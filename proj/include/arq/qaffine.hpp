#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arq/ar_quiver.hpp"
#include "arq/orders.hpp"

namespace arq {

// zeta8^u * q^(p/2), with zeta8^2 = sqrt(-1). Values of the form (-q)^m,
// (-q^2)^(m/2) and +-sqrt(-1) all embed exactly, so equality is decidable.
struct SpectralParam {
    int u = 0;  // phase, kept in 0..7
    int p = 0;  // exponent of q^(1/2)

    static SpectralParam make(int u, int p);
    static SpectralParam mq(int m);        // (-q)^m
    static SpectralParam mq2_half(int m);  // (-q^2)^(m/2)
    static SpectralParam sqrt_m1() { return make(2, 0); }
    static SpectralParam minus_one() { return make(4, 0); }

    SpectralParam operator*(SpectralParam o) const { return make(u + o.u, p + o.p); }
    SpectralParam operator/(SpectralParam o) const { return make(u - o.u, p - o.p); }
    SpectralParam inverse() const { return make(-u, -p); }
    SpectralParam negated() const { return make(u + 4, p); }
    bool same_up_to_sign(SpectralParam o) const { return p == o.p && (u - o.u) % 4 == 0; }

    // m with *this == (-q)^m, if it is a pure (-q)-power.
    std::optional<int> mq_exponent() const;

    std::string to_string() const;  // "(-q)^4", "-(-q)^2", "i*(-q)^3", ...
    auto operator<=>(const SpectralParam&) const = default;
};

// "(-q)^S", "(-q^2)^(S/2)", "(-q^2)^S" or "[u,p]", optionally prefixed by
// "-", "i*" or "-i*".
SpectralParam parse_spectral(const std::string& text);

enum class AffineFamily { D1, D2 };
std::string to_string(AffineFamily f);
AffineFamily parse_family(const std::string& text);

// Zeros of d_{k,l}(z) as a multiset, one factor description per root group.
struct DenominatorPoly {
    std::vector<SpectralParam> roots;  // sorted
    std::vector<std::string> factors;

    int degree() const { return static_cast<int>(roots.size()); }
};

// D_n^(1), 1 <= k,l <= n, n >= 4. Memoized.
DenominatorPoly denom_D1(int n, int k, int l);
// D_{n+1}^(2) with rank-n index set, 1 <= k,l <= n, n >= 3. Memoized.
DenominatorPoly denom_D2(int n, int k, int l);
DenominatorPoly denominator(AffineFamily family, int n, int k, int l);

int zero_multiplicity(const DenominatorPoly& poly, SpectralParam at);

struct ZeroLocus {
    int k = 0;
    int l = 0;
    int s = 0;
    auto operator<=>(const ZeroLocus&) const = default;
};

// Loci of double zeros, z = (-q)^s for D1 and z = (-q^2)^(s/2) for D2,
// enumerated from the closed-form inequalities.
std::set<ZeroLocus> double_zero_set_D1(int n);
std::set<ZeroLocus> double_zero_set_D2(int n);
// The same loci read off the root multisets.
std::set<ZeroLocus> double_zero_set_from_poly(AffineFamily family, int n);

struct Module {
    int level = 0;
    SpectralParam param;
    auto operator<=>(const Module&) const = default;
};

// Candidate Hom(V(w_i)_x (x) V(w_j)_y, V(w_k)_z): first = (i,x), second = (j,y), target = (k,z).
struct HomTriple {
    Module first;
    Module second;
    Module target;
    std::string to_string() const;
};

// "(i,p);(j,p);(k,p)": an integer p stands for (-q)^p, anything else goes
// through parse_spectral, e.g. "(3,i*(-q^2)^(1/2))".
HomTriple parse_triple(const std::string& text);

struct DoreyVerdict {
    bool holds = false;
    std::string matched_case;  // "i", "ii", "iii", "i'", "iii'"
    // True for D2, where the criterion is only sufficient: a negative verdict
    // says nothing about the Hom space.
    bool one_way = false;
};

// Exact criterion for D_n^(1). Throws std::invalid_argument for levels out of
// range or parameters that are not (-q)-powers.
DoreyVerdict dorey_D1(int n, const HomTriple& t);
// Sufficient criterion for D_{n+1}^(2), rank-n index set.
DoreyVerdict dorey_D2(int n, const HomTriple& t);

// Image of V(w_i)_{(-q)^p} of D_{n+1}^(1) in D_{n+1}^(2); rank_plus_one = n+1.
Module star_map(int rank_plus_one, int level, SpectralParam param);

// (beta, alpha, gamma) read off Gamma_Q as fundamental modules at (-q)^column.
HomTriple pair_to_triple(const ARQuiver& ar, int gamma, RootPair pair);

SpectralParam duality_constant(AffineFamily family, int n);

// Multiplicity of (-q)^|column difference| in d_{level alpha, level beta}:
// 1 for minimal pairs, 2 otherwise.
bool multiplicity_theorem_check(const ARQuiver& ar, int gamma, RootPair pair, Verdict verdict);

// Roots on one sectional path give a simple tensor product: no zero of the
// denominator at (-q)^(+-column difference). Throws if they share no path.
bool same_path_commuting_check(const ARQuiver& ar, int alpha, int beta);

}  // namespace arq
