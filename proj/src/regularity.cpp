#include "clusterwp/regularity.hpp"

#include <algorithm>

namespace clusterwp {

namespace {

bool all_assigned(const LaurentPoly& f, const Point& p) {
    for (std::size_t k : f.support())
        if (!p.count(f.vars()->name(k))) return false;
    return true;
}

const GaussianRational* lookup(const Point& p, const std::string& name) {
    auto it = p.find(name);
    return it == p.end() ? nullptr : &it->second;
}

}  // namespace

std::string RelationViolation::str() const { return relation + " = " + value.str(); }

PointCheck verify_point(const Point& p, const Presentation& context) {
    PointCheck check;
    for (const auto& rel : context.relations) {
        const LaurentPoly poly = rel.polynomial();
        if (!all_assigned(poly, p) || !p.count(rel.var) || !p.count(rel.partner)) continue;
        GaussianRational v = evaluate(poly, p);
        if (!v.is_zero()) check.violations.push_back(RelationViolation{rel.str(), v});
    }
    for (const auto& name : context.frozen) {
        const GaussianRational* v = lookup(p, name);
        if (v && v->is_zero()) check.violations.push_back(RelationViolation{"frozen " + name, *v});
    }
    return check;
}

VanishingPattern vanishing_pattern(const Point& p, const Seed& s) {
    VanishingPattern v;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const GaussianRational* value = lookup(p, s.names()[k]);
        if (!value) throw std::invalid_argument("cluster variable '" + s.names()[k] + "' is unassigned");
        if (!value->is_zero()) continue;
        if (s.is_frozen(k)) throw std::invalid_argument("frozen variable '" + s.names()[k] + "' vanishes");
        v.insert(k);
    }
    return v;
}

Propagation propagate_point(const Point& p, const Exploration& e) {
    const Presentation relations = exploration_relations(e);
    Propagation out{p, {}};
    Point& q = out.point;

    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& rel : relations.relations) {
            if (!all_assigned(rel.binomial, q)) continue;
            const GaussianRational* a = lookup(q, rel.var);
            const GaussianRational* b = lookup(q, rel.partner);
            if ((a == nullptr) == (b == nullptr)) continue;
            const GaussianRational& known = a ? *a : *b;
            if (known.is_zero()) continue;
            const std::string& unknown = a ? rel.partner : rel.var;
            q.emplace(unknown, evaluate(rel.binomial, q) / known);
            changed = true;
        }
    }

    for (const auto& rel : relations.relations) {
        if (!all_assigned(rel.binomial, q)) continue;
        const GaussianRational* a = lookup(q, rel.var);
        const GaussianRational* b = lookup(q, rel.partner);
        const GaussianRational pv = evaluate(rel.binomial, q);
        GaussianRational lhs;
        if (a && b)
            lhs = *a * *b;
        else if ((a && a->is_zero()) || (b && b->is_zero()))
            lhs = GaussianRational(0);
        else
            continue;
        if (lhs != pv) out.inconsistencies.push_back(RelationViolation{rel.str(), lhs - pv});
    }
    return out;
}

std::optional<VanishingPair> check_no_adjacent_vanishing(const Seed& s, const VanishingPattern& v) {
    for (std::size_t a : v) {
        if (s.is_frozen(a)) continue;
        for (std::size_t j : v)
            if (j != a && s.matrix()(a, j) != 0) return VanishingPair{a, j};
    }
    return std::nullopt;
}

std::variant<std::vector<std::size_t>, NoForcedSuccessor> trace_vanishing_cycle(const Seed& s, const VanishingPattern& v,
                                                                               std::size_t a, std::size_t b) {
    const ExchangeMatrix& m = s.matrix();
    if (!v.count(a) || !v.count(b)) throw std::invalid_argument("cycle endpoints must lie in the pattern");
    if (s.is_frozen(a) || s.is_frozen(b)) throw std::invalid_argument("cycle endpoints must be mutable");
    if (m(a, b) == 0) throw std::invalid_argument("B is zero on the starting pair");
    if (m(a, b) < 0) std::swap(a, b);

    std::vector<std::size_t> walk{a, b};
    for (;;) {
        const std::size_t cur = walk.back();
        std::optional<std::size_t> next;
        for (std::size_t c : v) {
            if (!s.is_frozen(c) && m(cur, c) > 0) {
                next = c;
                break;
            }
        }
        if (!next) return NoForcedSuccessor{walk};
        auto seen = std::find(walk.begin(), walk.end(), *next);
        if (seen != walk.end()) {
            std::vector<std::size_t> cycle(seen, walk.end());
            cycle.push_back(*next);
            return cycle;
        }
        walk.push_back(*next);
    }
}

std::variant<SymbolicForm, HypothesisViolated> regularize_at(const Seed& s, const VanishingPattern& v) {
    for (std::size_t k : v)
        if (k >= s.size() || s.is_frozen(k)) throw std::invalid_argument("pattern must list mutable chart indices");
    auto d = find_skew_symmetrizer(s.matrix());
    const auto* diag = std::get_if<std::vector<long>>(&d);
    if (!diag || std::any_of(diag->begin(), diag->end(), [](long x) { return x != 1; }))
        throw std::invalid_argument("local regularization needs a skew-symmetric mutable part");
    if (auto bad = check_no_adjacent_vanishing(s, v)) return HypothesisViolated{*bad};

    const std::size_t n = s.size();
    const ExchangeMatrix& b = s.matrix();
    std::vector<std::string> names = s.names();
    std::map<std::size_t, std::size_t> prime_index;
    for (std::size_t i : v) {
        std::string name = s.naming() ? s.naming()->name_after(s, i) : PrimeNaming{}.name_after(s, i);
        while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
        prime_index[i] = names.size();
        names.push_back(name);
    }
    const VarTablePtr gens = make_vars(names);
    const VarTablePtr& chart = s.chart_vars();

    std::vector<LaurentPoly> chart_values;
    for (const auto& name : s.names()) chart_values.push_back(LaurentPoly::variable(chart, name));
    std::map<std::string, RationalFn> expansions;
    for (std::size_t j = 0; j < n; ++j) expansions.emplace(names[j], RationalFn(chart_values[j]));
    for (const auto& [i, p] : prime_index) {
        std::vector<int> inv(n, 0);
        inv[i] = -1;
        expansions.emplace(names[p], RationalFn(exchange_binomial(b, i, chart_values).mul_monomial(Monomial(inv))));
    }

    SymbolicForm out(gens, std::move(expansions));
    auto term = [&](std::vector<int> exps, long c) {
        return RationalFn(LaurentPoly::monomial(gens, Monomial(std::move(exps)), GaussianRational(c)));
    };

    for (std::size_t i = 0; i < s.mutable_count(); ++i) {
        if (v.count(i)) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (b(i, j) == 0 || v.count(j)) continue;
            std::vector<int> exps(names.size(), 0);
            exps[i] = -1;
            exps[j] = -1;
            out.add_term(term(std::move(exps), b(i, j)), names[i], names[j]);
        }
    }
    for (const auto& [i, p] : prime_index) {
        std::vector<int> posinv(names.size(), 0);
        for (std::size_t j = 0; j < n; ++j)
            if (b(i, j) > 0) posinv[j] = static_cast<int>(-b(i, j));
        out.add_term(term(posinv, 1), names[i], names[p]);
        for (std::size_t j = 0; j < n; ++j) {
            if (b(i, j) >= 0) continue;
            std::vector<int> exps = posinv;
            exps[j] -= 1;
            exps[p] += 1;
            out.add_term(term(std::move(exps), b(i, j)), names[i], names[j]);
        }
    }
    return out;
}

std::set<std::string> denominator_support(const SymbolicForm& f) {
    std::set<std::string> out;
    for (const auto& t : f.terms()) {
        const VarTablePtr& vars = t.coeff.vars();
        for (const auto& [m, c] : t.coeff.num().terms())
            for (std::size_t k = 0; k < m.exps.size(); ++k)
                if (m.exps[k] < 0) out.insert(vars->name(k));
        if (!t.coeff.is_laurent_form())
            for (std::size_t k : t.coeff.den().support()) out.insert(vars->name(k));
    }
    return out;
}

std::optional<RegularizingSeed> find_regularizing_seed(const Seed& start, const PatternOracle& oracle,
                                                       std::size_t max_seeds, std::size_t max_depth) {
    const Exploration e = explore(start, max_seeds, max_depth);
    for (std::size_t k = 0; k < e.seeds.size(); ++k) {
        auto pattern = oracle(e.seeds[k]);
        if (!pattern) continue;
        auto result = regularize_at(e.seeds[k], *pattern);
        if (auto* form = std::get_if<SymbolicForm>(&result))
            return RegularizingSeed{e.seeds[k], e.depth[k], *pattern, std::move(*form)};
    }
    return std::nullopt;
}

std::size_t tangent_dimension(const Presentation& presentation, const Point& p) {
    const VarTablePtr& gens = presentation.generators;
    for (const auto& name : gens->names())
        if (!p.count(name)) throw std::invalid_argument("generator '" + name + "' is unassigned");
    PointCheck check = verify_point(p, presentation);
    if (!check.valid()) throw std::invalid_argument("point violates " + check.violations.front().str());

    ExactMatrix jacobian(presentation.relations.size(), gens->size());
    for (std::size_t r = 0; r < presentation.relations.size(); ++r) {
        const LaurentPoly poly = presentation.relations[r].polynomial();
        for (std::size_t c = 0; c < gens->size(); ++c) jacobian(r, c) = evaluate(partial(poly, c), p);
    }
    return gens->size() - rank(jacobian);
}

DeepWitness deep_witness(const Point& p, const Exploration& e) {
    DeepWitness w;
    w.truncated = e.truncated;
    w.all_avoided = true;
    for (const auto& seed : e.seeds) {
        ClusterStatus status = ClusterStatus::all_nonzero;
        for (const auto& name : seed.names()) {
            const GaussianRational* v = lookup(p, name);
            if (v && v->is_zero()) {
                status = ClusterStatus::has_zero;
                break;
            }
            if (!v) status = ClusterStatus::undetermined;
        }
        w.clusters.push_back(status);
        if (status != ClusterStatus::has_zero) w.all_avoided = false;
    }
    return w;
}

}  // namespace clusterwp
