#include "arq/qaffine.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <regex>
#include <stdexcept>
#include <tuple>

#include "arq/structure.hpp"

namespace arq {

namespace {

int mod8(int u) { return ((u % 8) + 8) % 8; }

std::string mq_text(int m) { return "(-q)^" + std::to_string(m); }
std::string mq2_text(int m) {
    return m % 2 == 0 ? "(-q^2)^" + std::to_string(m / 2) : "(-q^2)^(" + std::to_string(m) + "/2)";
}

}  // namespace

SpectralParam SpectralParam::make(int u, int p) { return SpectralParam{mod8(u), p}; }
SpectralParam SpectralParam::mq(int m) { return make(4 * m, 2 * m); }
SpectralParam SpectralParam::mq2_half(int m) { return make(2 * m, 2 * m); }

std::optional<int> SpectralParam::mq_exponent() const {
    if (p % 2 != 0) return std::nullopt;
    if (mod8(4 * (p / 2)) != u) return std::nullopt;
    return p / 2;
}

std::string SpectralParam::to_string() const {
    if (p % 2 != 0) return "[" + std::to_string(u) + "," + std::to_string(p) + "]";
    const int m = p / 2;
    switch (mod8(u - 4 * m)) {
        case 0: return mq_text(m);
        case 4: return "-" + mq_text(m);
        case 2: return "i*" + mq_text(m);
        case 6: return "-i*" + mq_text(m);
        default: return "[" + std::to_string(u) + "," + std::to_string(p) + "]";
    }
}

SpectralParam parse_spectral(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    static const std::regex prefix(R"(^(-)?(i\*)?(.*)$)");
    static const std::regex mq_re(R"(^\(-q\)\^\(?(-?\d+)\)?$)");
    static const std::regex mq2_half_re(R"(^\(-q\^2\)\^\((-?\d+)/2\)$)");
    static const std::regex mq2_re(R"(^\(-q\^2\)\^\(?(-?\d+)\)?$)");
    static const std::regex raw_re(R"(^\[(-?\d+),(-?\d+)\]$)");
    std::smatch pm;
    std::regex_match(t, pm, prefix);
    const std::string body = pm[3];
    SpectralParam value;
    std::smatch m;
    if (std::regex_match(body, m, mq_re)) {
        value = SpectralParam::mq(std::stoi(m[1]));
    } else if (std::regex_match(body, m, mq2_half_re)) {
        value = SpectralParam::mq2_half(std::stoi(m[1]));
    } else if (std::regex_match(body, m, mq2_re)) {
        value = SpectralParam::mq2_half(2 * std::stoi(m[1]));
    } else if (std::regex_match(body, m, raw_re)) {
        value = SpectralParam::make(std::stoi(m[1]), std::stoi(m[2]));
    } else {
        throw std::invalid_argument("cannot parse spectral parameter '" + text + "'");
    }
    if (pm[1].matched) value = value.negated();
    if (pm[2].matched) value = value * SpectralParam::sqrt_m1();
    return value;
}

std::string to_string(AffineFamily f) { return f == AffineFamily::D1 ? "D1" : "D2"; }

AffineFamily parse_family(const std::string& text) {
    if (text == "D1" || text == "d1") return AffineFamily::D1;
    if (text == "D2" || text == "d2") return AffineFamily::D2;
    throw std::invalid_argument("unknown family '" + text + "' (expected D1 or D2)");
}

namespace {

void check_indices(const char* what, int n, int min_rank, int k, int l) {
    if (n < min_rank) throw std::invalid_argument(std::string(what) + " needs rank >= " + std::to_string(min_rank));
    if (k < 1 || k > n || l < 1 || l > n)
        throw std::invalid_argument(std::string(what) + " indices (" + std::to_string(k) + "," + std::to_string(l) +
                                    ") outside 1.." + std::to_string(n));
}

DenominatorPoly compute_D1(int n, int k, int l) {
    DenominatorPoly d;
    auto linear = [&](int e) {
        d.roots.push_back(SpectralParam::mq(e));
        d.factors.push_back("(z - " + mq_text(e) + ")");
    };
    const int lo = std::min(k, l);
    const int hi = std::max(k, l);
    if (hi <= n - 2) {
        for (int s = 1; s <= lo; ++s) {
            linear(hi - lo + 2 * s);
            linear(2 * n - 2 - k - l + 2 * s);
        }
    } else if (lo <= n - 2) {
        for (int s = 1; s <= lo; ++s) linear(n - lo - 1 + 2 * s);
    } else if (lo != hi) {
        for (int s = 1; s <= (n - 1) / 2; ++s) linear(4 * s);
    } else {
        for (int s = 1; s <= n / 2; ++s) linear(4 * s - 2);
    }
    return d;
}

DenominatorPoly compute_D2(int n, int k, int l) {
    DenominatorPoly d;
    // z^2 - (-q^2)^m  and  z^2 + (-q^2)^m
    auto quadratic = [&](int m, bool plus) {
        const SpectralParam r = SpectralParam::mq2_half(m) * (plus ? SpectralParam::sqrt_m1() : SpectralParam{});
        d.roots.push_back(r);
        d.roots.push_back(r.negated());
        d.factors.push_back(std::string("(z^2 ") + (plus ? "+ " : "- ") + mq2_text(2 * m) + ")");
    };
    const int lo = std::min(k, l);
    const int hi = std::max(k, l);
    if (hi <= n - 1) {
        for (int s = 1; s <= lo; ++s) {
            quadratic(hi - lo + 2 * s, false);
            quadratic(2 * n - k - l + 2 * s, false);
        }
    } else if (lo <= n - 1) {
        for (int s = 1; s <= lo; ++s) quadratic(n - lo + 2 * s, true);
    } else {
        for (int s = 1; s <= n; ++s) {
            d.roots.push_back(SpectralParam::mq2_half(2 * s).negated());
            d.factors.push_back("(z + " + mq2_text(2 * s) + ")");
        }
    }
    return d;
}

DenominatorPoly memoized(AffineFamily family, int n, int k, int l) {
    static std::mutex mutex;
    static std::map<std::tuple<AffineFamily, int, int, int>, DenominatorPoly> memo;
    const auto key = std::tuple{family, n, k, l};
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    DenominatorPoly d = family == AffineFamily::D1 ? compute_D1(n, k, l) : compute_D2(n, k, l);
    std::sort(d.roots.begin(), d.roots.end());
    std::lock_guard lock(mutex);
    memo.emplace(key, d);
    return d;
}

}  // namespace

DenominatorPoly denom_D1(int n, int k, int l) {
    check_indices("denom_D1", n, 4, k, l);
    return memoized(AffineFamily::D1, n, k, l);
}

DenominatorPoly denom_D2(int n, int k, int l) {
    check_indices("denom_D2", n, 3, k, l);
    return memoized(AffineFamily::D2, n, k, l);
}

DenominatorPoly denominator(AffineFamily family, int n, int k, int l) {
    return family == AffineFamily::D1 ? denom_D1(n, k, l) : denom_D2(n, k, l);
}

int zero_multiplicity(const DenominatorPoly& poly, SpectralParam at) {
    return static_cast<int>(std::count(poly.roots.begin(), poly.roots.end(), at));
}

namespace {

// 2 <= k,l <= top, k+l > top+1, lower_s-k-l <= s <= k+l, s = k+l mod 2.
std::set<ZeroLocus> double_zero_set(int top, int lower_s) {
    std::set<ZeroLocus> out;
    for (int k = 2; k <= top; ++k)
        for (int l = 2; l <= top; ++l) {
            if (k + l <= top + 1) continue;
            for (int s = lower_s - k - l; s <= k + l; ++s)
                if ((s - k - l) % 2 == 0) out.insert({k, l, s});
        }
    return out;
}

}  // namespace

std::set<ZeroLocus> double_zero_set_D1(int n) { return double_zero_set(n - 2, 2 * n); }
std::set<ZeroLocus> double_zero_set_D2(int n) { return double_zero_set(n - 1, 2 * n + 2); }

std::set<ZeroLocus> double_zero_set_from_poly(AffineFamily family, int n) {
    std::set<ZeroLocus> out;
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            const auto d = denominator(family, n, k, l);
            for (const auto& r : d.roots) {
                if (zero_multiplicity(d, r) != 2) continue;
                if (family == AffineFamily::D1) {
                    if (auto e = r.mq_exponent()) out.insert({k, l, *e});
                } else if (r.p % 2 == 0 && r == SpectralParam::mq2_half(r.p / 2)) {
                    out.insert({k, l, r.p / 2});
                }
            }
        }
    return out;
}

std::string HomTriple::to_string() const {
    auto v = [](const Module& m) { return "V(" + std::to_string(m.level) + ")_" + m.param.to_string(); };
    return v(first) + " (x) " + v(second) + " -> " + v(target);
}

HomTriple parse_triple(const std::string& text) {
    // "(level,param)" where param is an integer p for (-q)^p or any spectral form.
    static const std::regex module_re(R"(^\s*\(\s*(\d+)\s*,\s*(.+?)\s*\)\s*$)");
    static const std::regex integer_re(R"(^-?\d+$)");
    const auto fail = [&] {
        return std::invalid_argument("cannot parse triple '" + text + "' (expected \"(i,p);(j,p);(k,p)\")");
    };
    std::vector<Module> modules;
    std::size_t from = 0;
    while (from <= text.size()) {
        const auto cut = std::min(text.find(';', from), text.size());
        const std::string part = text.substr(from, cut - from);
        std::smatch m;
        if (!std::regex_match(part, m, module_re)) throw fail();
        const std::string param = m[2];
        modules.push_back({std::stoi(m[1]), std::regex_match(param, integer_re) ? SpectralParam::mq(std::stoi(param))
                                                                                : parse_spectral(param)});
        from = cut + 1;
    }
    if (modules.size() != 3) throw fail();
    return {modules[0], modules[1], modules[2]};
}

namespace {

void check_levels(const char* what, int n, const HomTriple& t) {
    for (const Module* m : {&t.first, &t.second, &t.target})
        if (m->level < 1 || m->level > n)
            throw std::invalid_argument(std::string(what) + ": level " + std::to_string(m->level) + " outside 1.." +
                                        std::to_string(n));
}

struct LevelShape {
    int i, j, k;
    int smallest, largest;
    int sum() const { return i + j + k; }
};

}  // namespace

DoreyVerdict dorey_D1(int n, const HomTriple& t) {
    if (n < 4) throw std::invalid_argument("dorey_D1 needs rank >= 4");
    check_levels("dorey_D1", n, t);
    for (const Module* m : {&t.first, &t.second, &t.target})
        if (!m->param.mq_exponent())
            throw std::invalid_argument("dorey_D1: " + m->param.to_string() + " is not a power of (-q)");
    const int i = t.first.level;
    const int j = t.second.level;
    const int k = t.target.level;
    const int x = *(t.first.param / t.target.param).mq_exponent();
    const int y = *(t.second.param / t.target.param).mq_exponent();
    const LevelShape sh{i, j, k, std::min({i, j, k}), std::max({i, j, k})};
    auto yes = [](const char* c) { return DoreyVerdict{true, c, false}; };

    const int l = sh.largest;
    if (l <= n - 2 && sh.sum() - l == l) {
        std::pair<int, int> want;
        if (l == k)
            want = {-j, i};
        else if (l == i)
            want = {-j, -i + 2 * n - 2};
        else
            want = {j - 2 * n + 2, i};
        if (std::pair{x, y} == want) return yes("i");
    }
    if (i + j >= n && k == 2 * n - 2 - i - j && l <= n - 2 && x == -j && y == i) return yes("ii");
    const int s = sh.smallest;
    auto spin = [&](int v) { return v == n - 1 || v == n; };
    const int others[2] = {s == i ? j : i, s == k ? j : k};
    if (s <= n - 2 && spin(others[0]) && spin(others[1])) {
        // l - m* differs from l - m in parity exactly when the star swaps n-1 and n.
        const int shift = (s != k && n % 2 == 1) ? 1 : 0;
        const bool parity = ((n - s) - (others[0] - others[1]) - shift) % 2 == 0;
        std::pair<int, int> want;
        if (s == k)
            want = {-n + k + 1, n - k - 1};
        else if (s == i)
            want = {-n + i + 1, 2 * i};
        else
            want = {-2 * j, n - j - 1};
        if (parity && std::pair{x, y} == want) return yes("iii");
    }
    return {};
}

DoreyVerdict dorey_D2(int n, const HomTriple& t) {
    if (n < 3) throw std::invalid_argument("dorey_D2 needs rank >= 3");
    check_levels("dorey_D2", n, t);
    const int i = t.first.level;
    const int j = t.second.level;
    const int k = t.target.level;
    const SpectralParam x = t.first.param / t.target.param;
    const SpectralParam y = t.second.param / t.target.param;
    const LevelShape sh{i, j, k, std::min({i, j, k}), std::max({i, j, k})};
    using SP = SpectralParam;
    const SP im = SP::sqrt_m1();
    auto yes = [](const char* c) { return DoreyVerdict{true, c, true}; };
    auto matches = [&](SP a, SP b) { return x.same_up_to_sign(a) && y.same_up_to_sign(b); };

    const int l = sh.largest;
    if (l <= n - 1 && sh.sum() - l == l) {
        bool ok;
        if (l == k)
            ok = matches(SP::mq2_half(-j), SP::mq2_half(i));
        else if (l == i)
            ok = matches(SP::mq2_half(-j), SP::mq2_half(2 * n - i));
        else
            ok = matches(SP::mq2_half(j - 2 * n), SP::mq2_half(i));
        if (ok) return {true, "i'", true};
    }
    const int s = sh.smallest;
    const int others[2] = {s == i ? j : i, s == k ? j : k};
    if (s <= n - 1 && others[0] == n && others[1] == n) {
        bool ok;
        if (s == k)  // the signs are opposite, so x/z * y/z = 1 exactly
            ok = matches(im * SP::mq2_half(k - n), im * SP::mq2_half(n - k)) && x * y == SP{};
        else if (s == i)
            ok = matches(im * SP::mq2_half(i - n), SP::mq2_half(2 * i));
        else
            ok = matches(SP::mq2_half(-2 * j), im * SP::mq2_half(n - j));
        if (ok) return yes("iii'");
    }
    return {false, "", true};
}

Module star_map(int rank_plus_one, int level, SpectralParam param) {
    const int n = rank_plus_one - 1;
    if (level < 1 || level > rank_plus_one)
        throw std::invalid_argument("star_map: level " + std::to_string(level) + " outside 1.." +
                                    std::to_string(rank_plus_one));
    if (level <= n - 1) {
        const int delta = (rank_plus_one - level) % 2 == 0 ? 1 : 0;
        return {level, SpectralParam::make(2 * (delta + 1), 0) * param};
    }
    return {n, SpectralParam::make(4 * level, 0) * param};
}

HomTriple pair_to_triple(const ARQuiver& ar, int gamma, RootPair pair) {
    if (ar.roots().sum_index(pair.alpha, pair.beta) != gamma)
        throw std::invalid_argument(ar.label(pair.alpha) + " + " + ar.label(pair.beta) + " is not " + ar.label(gamma));
    auto module = [&](int root) {
        const auto& c = ar.coord(root);
        return Module{c.level, SpectralParam::mq(c.column)};
    };
    return {module(pair.beta), module(pair.alpha), module(gamma)};
}

SpectralParam duality_constant(AffineFamily family, int n) {
    if (family == AffineFamily::D1) return SpectralParam::mq(2 * n - 2);
    return SpectralParam::mq2_half(2 * n).negated();
}

bool multiplicity_theorem_check(const ARQuiver& ar, int gamma, RootPair pair, Verdict verdict) {
    if (ar.roots().sum_index(pair.alpha, pair.beta) != gamma)
        throw std::invalid_argument(ar.label(pair.alpha) + " + " + ar.label(pair.beta) + " is not " + ar.label(gamma));
    const auto& a = ar.coord(pair.alpha);
    const auto& b = ar.coord(pair.beta);
    const auto d = denom_D1(ar.rank(), a.level, b.level);
    const int mult = zero_multiplicity(d, SpectralParam::mq(std::abs(a.column - b.column)));
    return mult == (verdict == Verdict::Minimal ? 1 : 2);
}

bool same_path_commuting_check(const ARQuiver& ar, int alpha, int beta) {
    if (alpha == beta) throw std::invalid_argument("same_path_commuting_check needs two distinct roots");
    bool shared = false;
    for (const auto& path : sectional_paths(ar)) {
        const auto has = [&](int r) { return std::find(path.roots.begin(), path.roots.end(), r) != path.roots.end(); };
        if (has(alpha) && has(beta)) {
            shared = true;
            break;
        }
    }
    if (!shared)
        throw std::invalid_argument(ar.label(alpha) + " and " + ar.label(beta) + " share no sectional path");
    const auto& a = ar.coord(alpha);
    const auto& b = ar.coord(beta);
    const auto d = denom_D1(ar.rank(), a.level, b.level);
    const int gap = a.column - b.column;
    return zero_multiplicity(d, SpectralParam::mq(gap)) == 0 && zero_multiplicity(d, SpectralParam::mq(-gap)) == 0;
}

}  // namespace arq
