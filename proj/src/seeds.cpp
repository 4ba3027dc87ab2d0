#include "clusterwp/seeds.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace clusterwp {

// ---- ExchangeMatrix --------------------------------------------------------------

ExchangeMatrix::ExchangeMatrix(std::size_t mutable_count, std::size_t total, std::vector<long> entries)
    : m_(mutable_count), n_(total), entries_(std::move(entries)) {
    if (m_ > n_) throw SeedError("more mutable rows than variables");
    if (entries_.size() != m_ * n_) throw SeedError("exchange matrix entry count != m*n");
}

ExchangeMatrix::ExchangeMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    m_ = rows.size();
    n_ = m_ == 0 ? 0 : rows.begin()->size();
    for (const auto& row : rows) {
        if (row.size() != n_) throw SeedError("ragged exchange matrix");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    if (m_ > n_) throw SeedError("more mutable rows than variables");
}

std::string ExchangeMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
    const std::size_t m = b.mutable_count(), n = b.size();
    if (k >= m) throw SeedError("mutation index " + std::to_string(k + 1) + " is not mutable");
    std::vector<long> out(m * n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const long bij = b(i, j);
            if (i == k || j == k) {
                out[i * n + j] = -bij;
            } else {
                const long bik = b(i, k), bkj = b(k, j);
                out[i * n + j] = bij + (std::labs(bik) * bkj + bik * std::labs(bkj)) / 2;
            }
        }
    }
    return ExchangeMatrix(m, n, std::move(out));
}

std::variant<std::vector<long>, NotSkewSymmetrizable> find_skew_symmetrizer(const ExchangeMatrix& b) {
    const std::size_t m = b.mutable_count();
    for (std::size_t i = 0; i < m; ++i)
        if (b(i, i) != 0) return NotSkewSymmetrizable{i, i, "diagonal entry is nonzero"};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const long bij = b(i, j), bji = b(j, i);
            if ((bij == 0) != (bji == 0))
                return NotSkewSymmetrizable{i, j, "exactly one of the entries is zero"};
            if (bij != 0 && (bij > 0) == (bji > 0))
                return NotSkewSymmetrizable{i, j, "entries have the same sign"};
        }
    }

    std::vector<std::optional<Rational>> d(m);
    std::vector<long> result(m, 1);
    for (std::size_t root = 0; root < m; ++root) {
        if (d[root]) continue;
        std::vector<std::size_t> component{root};
        d[root] = Rational(1);
        for (std::size_t head = 0; head < component.size(); ++head) {
            const std::size_t i = component[head];
            for (std::size_t j = 0; j < m; ++j) {
                if (b(i, j) == 0) continue;
                // d_i B_ij = -d_j B_ji
                Rational dj = *d[i] * Rational(b(i, j)) / Rational(-b(j, i));
                if (!d[j]) {
                    d[j] = dj;
                    component.push_back(j);
                } else if (!(*d[j] == dj)) {
                    return NotSkewSymmetrizable{std::min(i, j), std::max(i, j), "entry ratios are inconsistent around a cycle"};
                }
            }
        }
        mpz_class lcm_den = 1, gcd_num = 0;
        for (std::size_t i : component) lcm_den = lcm(lcm_den, d[i]->denominator());
        for (std::size_t i : component) gcd_num = gcd(gcd_num, (*d[i] * Rational(lcm_den, 1)).numerator());
        for (std::size_t i : component) {
            mpz_class v = (*d[i] * Rational(lcm_den, 1)).numerator() / gcd_num;
            result[i] = v.get_si();
        }
    }
    return result;
}

AcyclicityResult is_acyclic(const ExchangeMatrix& b) {
    const std::size_t m = b.mutable_count();
    enum class Color { white, gray, black };
    std::vector<Color> color(m, Color::white);
    std::vector<std::size_t> stack;
    AcyclicityResult result;

    std::function<bool(std::size_t)> visit = [&](std::size_t i) {
        color[i] = Color::gray;
        stack.push_back(i);
        for (std::size_t j = 0; j < m; ++j) {
            if (b(i, j) <= 0) continue;
            if (color[j] == Color::gray) {
                auto start = std::find(stack.begin(), stack.end(), j);
                result.cycle.assign(start, stack.end());
                result.cycle.push_back(j);
                return true;
            }
            if (color[j] == Color::white && visit(j)) return true;
        }
        stack.pop_back();
        color[i] = Color::black;
        return false;
    };
    for (std::size_t i = 0; i < m; ++i) {
        if (color[i] == Color::white && visit(i)) {
            result.acyclic = false;
            return result;
        }
    }
    return result;
}

// ---- Naming ------------------------------------------------------------------------

std::string PrimeNaming::name_after(const Seed& before, std::size_t k) const {
    std::string name = before.names()[k];
    if (!name.empty() && name.back() == '\'')
        name.pop_back();
    else
        name.push_back('\'');
    return name;
}

namespace {

std::optional<std::pair<int, int>> parse_diagonal(const std::string& name) {
    if (name.size() != 3 || name[0] != 'x' || !std::isdigit(static_cast<unsigned char>(name[1])) ||
        !std::isdigit(static_cast<unsigned char>(name[2])))
        return std::nullopt;
    return std::make_pair(name[1] - '0', name[2] - '0');
}

}  // namespace

std::string PolygonNaming::name_after(const Seed& before, std::size_t k) const {
    std::set<std::pair<int, int>> edges;
    auto add_edge = [&](int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); };
    for (int v = 1; v <= vertices_; ++v) add_edge(v, v % vertices_ + 1);
    std::optional<std::pair<int, int>> flipped;
    for (std::size_t j = 0; j < before.size(); ++j) {
        auto d = parse_diagonal(before.names()[j]);
        if (!d) return PrimeNaming{}.name_after(before, k);
        add_edge(d->first, d->second);
        if (j == k) flipped = d;
    }
    std::vector<int> apexes;
    for (int c = 1; c <= vertices_; ++c) {
        if (c == flipped->first || c == flipped->second) continue;
        if (edges.count({std::min(c, flipped->first), std::max(c, flipped->first)}) &&
            edges.count({std::min(c, flipped->second), std::max(c, flipped->second)}))
            apexes.push_back(c);
    }
    if (apexes.size() != 2) return PrimeNaming{}.name_after(before, k);
    return "x" + std::to_string(apexes[0]) + std::to_string(apexes[1]);
}

std::string IndexedNaming::name(long index) {
    return index < 0 ? "xm" + std::to_string(-index) : "x" + std::to_string(index);
}

std::optional<long> IndexedNaming::index(const std::string& name) {
    if (name.size() < 2 || name[0] != 'x') return std::nullopt;
    std::size_t start = 1;
    long sign = 1;
    if (name[1] == 'm') {
        sign = -1;
        start = 2;
    }
    if (start >= name.size()) return std::nullopt;
    for (std::size_t p = start; p < name.size(); ++p)
        if (!std::isdigit(static_cast<unsigned char>(name[p]))) return std::nullopt;
    return sign * std::stol(name.substr(start));
}

std::string IndexedNaming::name_after(const Seed& before, std::size_t k) const {
    if (before.size() != 2) return PrimeNaming{}.name_after(before, k);
    auto self = index(before.names()[k]);
    auto other = index(before.names()[1 - k]);
    if (!self || !other || std::labs(*self - *other) != 1) return PrimeNaming{}.name_after(before, k);
    return name(2 * *other - *self);
}

// ---- Seed --------------------------------------------------------------------------

namespace {

void validate_seed(const ExchangeMatrix& matrix, const std::vector<std::string>& names) {
    if (names.size() != matrix.size())
        throw SeedError("seed has " + std::to_string(names.size()) + " names but the matrix has " +
                        std::to_string(matrix.size()) + " columns");
    auto d = find_skew_symmetrizer(matrix);
    if (auto* bad = std::get_if<NotSkewSymmetrizable>(&d))
        throw SeedError("matrix is not skew-symmetrizable at pair (" + std::to_string(bad->i + 1) + "," +
                        std::to_string(bad->j + 1) + "): " + bad->reason);
}

}  // namespace

Seed::Seed(ExchangeMatrix matrix, std::vector<std::string> names, std::shared_ptr<const NamingRule> naming)
    : matrix_(std::move(matrix)), names_(std::move(names)), naming_(std::move(naming)) {
    validate_seed(matrix_, names_);
    chart_vars_ = make_vars(names_);
    for (const auto& name : names_) expansions_.push_back(LaurentPoly::variable(chart_vars_, name));
}

Seed::Seed(ExchangeMatrix matrix, std::vector<std::string> names, std::vector<LaurentPoly> expansions,
           std::shared_ptr<const NamingRule> naming)
    : matrix_(std::move(matrix)), names_(std::move(names)), expansions_(std::move(expansions)),
      naming_(std::move(naming)) {
    validate_seed(matrix_, names_);
    if (expansions_.size() != names_.size()) throw SeedError("one expansion per cluster variable required");
    chart_vars_ = make_vars(names_);
}

Seed Seed::with_name(std::size_t k, std::string name) const {
    Seed s(*this);
    s.names_[k] = std::move(name);
    s.chart_vars_ = make_vars(s.names_);
    return s;
}

Seed Seed::with_naming(std::shared_ptr<const NamingRule> naming) const {
    Seed s(*this);
    s.naming_ = std::move(naming);
    return s;
}

bool operator==(const Seed& a, const Seed& b) {
    return a.matrix_ == b.matrix_ && a.names_ == b.names_ && a.expansions_ == b.expansions_;
}

LaurentPoly exchange_binomial(const ExchangeMatrix& b, std::size_t k, const std::vector<LaurentPoly>& values) {
    const VarTablePtr& vars = values.front().vars();
    LaurentPoly pos = LaurentPoly::constant(vars, 1);
    LaurentPoly neg = LaurentPoly::constant(vars, 1);
    for (std::size_t j = 0; j < b.size(); ++j) {
        const long e = b(k, j);
        if (e > 0) pos = pos * values[j].pow(static_cast<unsigned>(e));
        if (e < 0) neg = neg * values[j].pow(static_cast<unsigned>(-e));
    }
    return pos + neg;
}

Seed mutate_seed(const Seed& s, std::size_t k) {
    if (k >= s.mutable_count()) throw SeedError("mutation index " + std::to_string(k + 1) + " is not mutable");
    LaurentPoly binomial = exchange_binomial(s.matrix(), k, s.expansions());
    auto q = exact_divide(binomial, s.expansions()[k]);
    if (!q)
        throw LaurentPhenomenonViolation("mutation at " + std::to_string(k + 1) + " produced a non-Laurent expansion");
    std::vector<LaurentPoly> expansions = s.expansions();
    expansions[k] = std::move(*q);
    std::vector<std::string> names = s.names();
    names[k] = s.naming() ? s.naming()->name_after(s, k) : PrimeNaming{}.name_after(s, k);
    return Seed(mutate_matrix(s.matrix(), k), std::move(names), std::move(expansions), s.naming());
}

Seed mutate_sequence(const Seed& s, const std::vector<std::size_t>& ks) {
    Seed cur = s;
    for (std::size_t k : ks) cur = mutate_seed(cur, k);
    return cur;
}

// ---- Exploration ---------------------------------------------------------------------

namespace {

struct PolyLess {
    bool operator()(const LaurentPoly& a, const LaurentPoly& b) const { return canonical_less(a, b); }
};

using ClusterKey = std::vector<LaurentPoly>;

struct ClusterLess {
    bool operator()(const ClusterKey& a, const ClusterKey& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), PolyLess{});
    }
};

ClusterKey cluster_key(const std::vector<LaurentPoly>& cluster) {
    ClusterKey key = cluster;
    std::sort(key.begin(), key.end(), PolyLess{});
    return key;
}

}  // namespace

std::optional<std::size_t> Exploration::find_cluster(const std::vector<LaurentPoly>& cluster) const {
    const ClusterKey key = cluster_key(cluster);
    for (std::size_t s = 0; s < seeds.size(); ++s)
        if (cluster_key(seeds[s].expansions()) == key) return s;
    return std::nullopt;
}

Exploration explore(const Seed& s, std::size_t max_seeds, std::size_t max_depth, const SeedFilter& admit) {
    if (max_seeds == 0) throw std::invalid_argument("exploration needs a seed budget of at least 1");
    Exploration e;
    std::map<ClusterKey, std::size_t, ClusterLess> index;
    std::map<LaurentPoly, std::string, PolyLess> label_of;
    std::set<std::string> labels;

    auto store = [&](Seed seed, std::size_t depth) {
        index.emplace(cluster_key(seed.expansions()), e.seeds.size());
        for (std::size_t k = 0; k < seed.size(); ++k) {
            if (label_of.emplace(seed.expansions()[k], seed.names()[k]).second) {
                labels.insert(seed.names()[k]);
                e.variables.emplace_back(seed.names()[k], seed.expansions()[k]);
            }
        }
        e.neighbors.emplace_back(seed.mutable_count());
        e.depth.push_back(depth);
        e.seeds.push_back(std::move(seed));
        return e.seeds.size() - 1;
    };

    store(s, 0);
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        const std::size_t cur = frontier.front();
        frontier.pop_front();
        for (std::size_t k = 0; k < e.seeds[cur].mutable_count(); ++k) {
            if (e.neighbors[cur][k]) continue;
            Seed child = mutate_seed(e.seeds[cur], k);
            auto found = index.find(cluster_key(child.expansions()));
            if (found != index.end()) {
                e.neighbors[cur][k] = found->second;
                continue;
            }
            if (e.depth[cur] >= max_depth || e.seeds.size() >= max_seeds || (admit && !admit(child))) {
                e.truncated = true;
                continue;
            }
            auto known = label_of.find(child.expansions()[k]);
            if (known != label_of.end()) {
                child = child.with_name(k, known->second);
            } else {
                std::string label = child.names()[k];
                while (labels.count(label)) label += "'";
                if (label != child.names()[k]) child = child.with_name(k, label);
            }
            const std::size_t added = store(std::move(child), e.depth[cur] + 1);
            e.neighbors[cur][k] = added;
            e.neighbors[added][k] = cur;
            frontier.push_back(added);
        }
    }
    return e;
}

std::optional<AcyclicSeed> find_acyclic_seed(const Seed& s, std::size_t budget) {
    if (budget == 0) throw std::invalid_argument("acyclic search needs a budget of at least 1");
    std::set<ClusterKey, ClusterLess> seen{cluster_key(s.expansions())};
    std::deque<AcyclicSeed> frontier{AcyclicSeed{s, {}}};
    std::size_t visited = 0;
    while (!frontier.empty() && visited < budget) {
        AcyclicSeed cur = std::move(frontier.front());
        frontier.pop_front();
        ++visited;
        if (is_acyclic(cur.seed.matrix()).acyclic) return cur;
        for (std::size_t k = 0; k < cur.seed.mutable_count(); ++k) {
            Seed child = mutate_seed(cur.seed, k);
            if (!seen.insert(cluster_key(child.expansions())).second) continue;
            std::vector<std::size_t> path = cur.path;
            path.push_back(k);
            frontier.push_back(AcyclicSeed{std::move(child), std::move(path)});
        }
    }
    return std::nullopt;
}

// ---- Relations -----------------------------------------------------------------------

LaurentPoly ExchangeRelation::polynomial() const {
    const VarTablePtr& vars = binomial.vars();
    return LaurentPoly::variable(vars, var) * LaurentPoly::variable(vars, partner) - binomial;
}

std::string ExchangeRelation::str() const {
    return var + "*" + partner + " - (" + binomial.str() + ")";
}

namespace {

std::string format_cycle(const std::vector<std::size_t>& cycle) {
    std::string out;
    for (std::size_t k = 0; k < cycle.size(); ++k) out += (k ? " -> " : "") + std::to_string(cycle[k] + 1);
    return out;
}

}  // namespace

Presentation acyclic_presentation(const Seed& s) {
    auto acyclic = is_acyclic(s.matrix());
    if (!acyclic.acyclic)
        throw SeedError("no acyclic presentation: directed cycle " + format_cycle(acyclic.cycle));

    Presentation p;
    std::vector<std::string> names = s.names();
    std::vector<std::string> primes;
    for (std::size_t k = 0; k < s.mutable_count(); ++k) {
        Seed mutated = mutate_seed(s, k);
        std::string name = mutated.names()[k];
        while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
        names.push_back(name);
        primes.push_back(name);
        p.primed.emplace_back(name, mutated.expansions()[k]);
    }
    p.generators = make_vars(names);
    std::vector<LaurentPoly> vars;
    for (std::size_t j = 0; j < s.size(); ++j) vars.push_back(LaurentPoly::variable(p.generators, s.names()[j]));
    for (std::size_t k = 0; k < s.mutable_count(); ++k)
        p.relations.push_back(ExchangeRelation{s.names()[k], primes[k], exchange_binomial(s.matrix(), k, vars)});
    for (std::size_t j = s.mutable_count(); j < s.size(); ++j) p.frozen.insert(s.names()[j]);
    return p;
}

Presentation exploration_relations(const Exploration& e) {
    Presentation p;
    std::vector<std::string> names;
    for (const auto& [name, poly] : e.variables) names.push_back(name);
    p.generators = make_vars(names);
    std::set<std::pair<std::set<std::string>, std::string>> seen;
    for (std::size_t s = 0; s < e.seeds.size(); ++s) {
        const Seed& seed = e.seeds[s];
        std::vector<LaurentPoly> vars;
        for (const auto& name : seed.names()) vars.push_back(LaurentPoly::variable(p.generators, name));
        for (std::size_t k = 0; k < seed.mutable_count(); ++k) {
            if (!e.neighbors[s][k]) continue;
            // A deduplicated neighbor may list its cluster in another order.
            const auto& other = e.seeds[*e.neighbors[s][k]].names();
            auto fresh = std::find_if(other.begin(), other.end(), [&](const std::string& name) {
                return std::find(seed.names().begin(), seed.names().end(), name) == seed.names().end();
            });
            if (fresh == other.end()) continue;
            const std::string& partner = *fresh;
            ExchangeRelation rel{seed.names()[k], partner, exchange_binomial(seed.matrix(), k, vars)};
            if (seen.insert({{rel.var, rel.partner}, rel.binomial.str()}).second) p.relations.push_back(std::move(rel));
        }
        for (std::size_t j = seed.mutable_count(); j < seed.size(); ++j) p.frozen.insert(seed.names()[j]);
    }
    return p;
}

}  // namespace clusterwp
