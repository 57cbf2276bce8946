#include "arq/root_system.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace arq {

namespace {

std::string type_letter(DiagramType t) { return t == DiagramType::A ? "A" : "D"; }

}  // namespace

CartanDatum::CartanDatum(DiagramType type, int rank) : type_(type), rank_(rank) {
    const int min_rank = type == DiagramType::D ? 4 : 1;
    if (rank < min_rank)
        throw std::invalid_argument("rank " + std::to_string(rank) + " below minimum " +
                                    std::to_string(min_rank) + " for type " + type_letter(type));
    const int chain_end = type == DiagramType::D ? rank - 1 : rank;
    for (int i = 1; i + 1 <= chain_end; ++i) edges_.emplace_back(i, i + 1);
    if (type == DiagramType::D) edges_.emplace_back(rank - 2, rank);
    std::sort(edges_.begin(), edges_.end());

    neighbors_.assign(rank, {});
    for (auto [i, j] : edges_) {
        neighbors_[i - 1].push_back(j);
        neighbors_[j - 1].push_back(i);
    }
    for (auto& ns : neighbors_) std::sort(ns.begin(), ns.end());

    distance_.assign(rank, std::vector<int>(rank, -1));
    for (int s = 1; s <= rank; ++s) {
        auto& row = distance_[s - 1];
        std::deque<int> queue{s};
        row[s - 1] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : neighbors_[v - 1])
                if (row[w - 1] < 0) {
                    row[w - 1] = row[v - 1] + 1;
                    queue.push_back(w);
                }
        }
    }
}

bool CartanDatum::adjacent(int i, int j) const {
    if (!valid_vertex(i) || !valid_vertex(j)) return false;
    const auto& ns = neighbors_[i - 1];
    return std::binary_search(ns.begin(), ns.end(), j);
}

int CartanDatum::cartan(int i, int j) const {
    if (i == j) return 2;
    return adjacent(i, j) ? -1 : 0;
}

int CartanDatum::coxeter_number() const {
    return type_ == DiagramType::D ? 2 * rank_ - 2 : rank_ + 1;
}

int CartanDatum::positive_root_count() const {
    return type_ == DiagramType::D ? rank_ * (rank_ - 1) : rank_ * (rank_ + 1) / 2;
}

int CartanDatum::star(int i) const {
    if (!valid_vertex(i)) throw std::out_of_range("vertex " + std::to_string(i));
    if (type_ == DiagramType::A) return rank_ + 1 - i;
    if (i <= rank_ - 2 || rank_ % 2 == 0) return i;
    return i == rank_ ? rank_ - 1 : rank_;
}

std::string CartanDatum::name() const { return type_letter(type_) + std::to_string(rank_); }

PositiveRoot::PositiveRoot(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("empty coefficient vector");
    bool nonzero = false;
    for (int c : coeffs_) {
        if (c < 0) throw std::invalid_argument("negative coefficient in positive root");
        nonzero = nonzero || c > 0;
    }
    if (!nonzero) throw std::invalid_argument("zero vector is not a root");
}

int PositiveRoot::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

int PositiveRoot::multiplicity() const {
    return coeffs_.empty() ? 0 : *std::max_element(coeffs_.begin(), coeffs_.end());
}

std::vector<int> PositiveRoot::support_at_least(int k) const {
    std::vector<int> out;
    for (int i = 0; i < rank(); ++i)
        if (coeffs_[i] >= k) out.push_back(i + 1);
    return out;
}

std::string PositiveRoot::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << coeffs_[i];
    os << ']';
    return os.str();
}

std::string EpsilonForm::to_string() const {
    return "<" + std::to_string(a) + "," + std::to_string(b) + ">";
}

RootStats root_stats(const PositiveRoot& root, int k) {
    return {root.height(), root.support_at_least(k), root.multiplicity()};
}

std::string WeylWord::to_string() const {
    std::ostringstream os;
    for (std::size_t z = 0; z < letters.size(); ++z) os << (z ? " " : "") << 's' << letters[z];
    return os.str();
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
    const int n = datum_.rank();
    // Orbit closure of the simple roots under simple reflections, keeping
    // positive images only.
    std::map<std::vector<int>, bool> seen;
    std::deque<std::vector<int>> queue;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> v(n, 0);
        v[i - 1] = 1;
        seen[v] = true;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (int i = 1; i <= n; ++i) {
            auto w = reflect_coeffs(i, v);
            if (std::all_of(w.begin(), w.end(), [](int c) { return c >= 0; }) && !seen.count(w)) {
                seen[w] = true;
                queue.push_back(std::move(w));
            }
        }
    }
    for (auto& [v, _] : seen) roots_.emplace_back(v);
    std::stable_sort(roots_.begin(), roots_.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
        return a.height() < b.height();
    });
    if (size() != datum_.positive_root_count())
        throw std::logic_error("root enumeration produced " + std::to_string(size()) + " roots");
    for (int k = 0; k < size(); ++k) index_[roots_[k].coeffs()] = k;

    sum_index_.assign(size(), std::vector<std::optional<int>>(size()));
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) {
            std::vector<int> s(n);
            for (int i = 0; i < n; ++i) s[i] = roots_[a].coeffs()[i] + roots_[b].coeffs()[i];
            sum_index_[a][b] = index_of(s);
        }
    decompositions_.assign(size(), {});
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (auto g = sum_index_[a][b]) decompositions_[*g].emplace_back(a, b);

    if (datum_.type() == DiagramType::D)
        for (const auto& r : roots_) epsilon_.push_back(epsilon_form(r));
}

std::shared_ptr<const RootSystem> RootSystem::of(const CartanDatum& datum) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const RootSystem>> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(static_cast<int>(datum.type()), datum.rank());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_shared<const RootSystem>(datum)).first;
    return it->second;
}

std::optional<int> RootSystem::index_of(const std::vector<int>& coeffs) const {
    auto it = index_.find(coeffs);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> RootSystem::index_of(const PositiveRoot& root) const { return index_of(root.coeffs()); }

int RootSystem::index_or_throw(const PositiveRoot& root) const {
    auto idx = index_of(root);
    if (!idx) throw std::invalid_argument(root.to_string() + " is not a positive root of " + datum_.name());
    return *idx;
}

PositiveRoot RootSystem::simple(int i) const {
    if (!datum_.valid_vertex(i)) throw std::out_of_range("vertex " + std::to_string(i));
    std::vector<int> v(datum_.rank(), 0);
    v[i - 1] = 1;
    return PositiveRoot(std::move(v));
}

std::vector<int> RootSystem::reflect_coeffs(int i, std::vector<int> v) const {
    int pairing = 2 * v[i - 1];
    for (int j : datum_.neighbors(i)) pairing -= v[j - 1];
    v[i - 1] -= pairing;
    return v;
}

SignedRoot RootSystem::reflect(int i, const SignedRoot& root) const {
    if (!datum_.valid_vertex(i)) throw std::out_of_range("vertex " + std::to_string(i));
    auto v = root.root.coeffs();
    for (int& c : v) c *= root.sign;
    v = reflect_coeffs(i, std::move(v));
    int sign = std::any_of(v.begin(), v.end(), [](int c) { return c < 0; }) ? -1 : 1;
    for (int& c : v) c *= sign;
    return {sign, PositiveRoot(std::move(v))};
}

SignedRoot RootSystem::apply_word(const WeylWord& word, const SignedRoot& root) const {
    SignedRoot out = root;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) out = reflect(*it, out);
    return out;
}

int RootSystem::pairing(const PositiveRoot& a, const PositiveRoot& b) const {
    int s = 0;
    for (int i = 1; i <= datum_.rank(); ++i)
        for (int j = 1; j <= datum_.rank(); ++j) s += a[i] * datum_.cartan(i, j) * b[j];
    return s;
}

std::optional<std::vector<int>> RootSystem::inversion_sequence(const WeylWord& word) const {
    std::vector<int> seq;
    seq.reserve(word.size());
    WeylWord prefix;
    for (int letter : word.letters) {
        if (!datum_.valid_vertex(letter)) throw std::out_of_range("letter " + std::to_string(letter));
        auto beta = apply_word(prefix, {1, simple(letter)});
        if (beta.sign < 0) return std::nullopt;
        seq.push_back(index_or_throw(beta.root));
        prefix.letters.push_back(letter);
    }
    return seq;
}

bool RootSystem::is_reduced(const WeylWord& word) const { return inversion_sequence(word).has_value(); }

EpsilonForm RootSystem::epsilon_form(const PositiveRoot& root) const {
    if (datum_.type() != DiagramType::D) throw std::domain_error("epsilon form requires type D");
    const int n = datum_.rank();
    if (root.rank() != n) throw std::invalid_argument("rank mismatch");
    // a_k = e_k - e_{k+1} (k < n), a_n = e_{n-1} + e_n.
    std::vector<int> e(n + 1, 0);
    for (int j = 1; j <= n - 2; ++j) e[j] = root[j] - (j > 1 ? root[j - 1] : 0);
    e[n - 1] = root[n - 1] - root[n - 2] + root[n];
    e[n] = root[n] - root[n - 1];
    std::vector<int> support;
    for (int j = 1; j <= n; ++j)
        if (e[j] != 0) support.push_back(j);
    if (support.size() != 2 || e[support[0]] != 1 || std::abs(e[support[1]]) != 1)
        throw std::invalid_argument(root.to_string() + " is not a positive root of " + datum_.name());
    return {support[0], e[support[1]] * support[1]};
}

PositiveRoot RootSystem::from_epsilon(const EpsilonForm& form) const {
    if (datum_.type() != DiagramType::D) throw std::domain_error("epsilon form requires type D");
    const int n = datum_.rank();
    const int b = std::abs(form.b);
    if (form.a < 1 || form.a >= b || b > n)
        throw std::invalid_argument("invalid epsilon form " + form.to_string());
    std::vector<int> e(n + 1, 0);
    e[form.a] = 1;
    e[b] = form.b > 0 ? 1 : -1;
    std::vector<int> c(n + 1, 0);
    for (int j = 1; j <= n - 2; ++j) c[j] = e[j] + c[j - 1];
    const int twice_n = e[n - 1] + c[n - 2] + e[n];
    c[n] = twice_n / 2;
    c[n - 1] = (e[n - 1] + c[n - 2] - e[n]) / 2;
    return PositiveRoot(std::vector<int>(c.begin() + 1, c.end()));
}

std::string RootSystem::label(int index) const {
    if (datum_.type() == DiagramType::D) return epsilon_.at(index).to_string();
    return roots_.at(index).to_string();
}

PositiveRoot parse_root(const RootSystem& system, const std::string& text) {
    static const std::regex bracket(R"(\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]\s*)");
    static const std::regex epsilon(R"(\s*e(\d+)\s*([+-])\s*e(\d+)\s*)");
    static const std::regex angle(R"(\s*<\s*(\d+)\s*,\s*([+-]?\d+)\s*>\s*)");
    std::smatch m;
    PositiveRoot root;
    if (std::regex_match(text, m, bracket)) {
        std::vector<int> v;
        std::stringstream ss(m[1].str());
        for (std::string item; std::getline(ss, item, ',');) v.push_back(std::stoi(item));
        if (static_cast<int>(v.size()) != system.datum().rank())
            throw std::invalid_argument("root '" + text + "' has wrong length");
        root = PositiveRoot(std::move(v));
    } else if (std::regex_match(text, m, epsilon)) {
        const int b = std::stoi(m[3].str());
        root = system.from_epsilon({std::stoi(m[1].str()), m[2].str() == "-" ? -b : b});
    } else if (std::regex_match(text, m, angle)) {
        root = system.from_epsilon({std::stoi(m[1].str()), std::stoi(m[2].str())});
    } else {
        throw std::invalid_argument("cannot parse root '" + text + "'");
    }
    if (!system.contains(root))
        throw std::invalid_argument("'" + text + "' is not a positive root of " + system.datum().name());
    return root;
}

}  // namespace arq
