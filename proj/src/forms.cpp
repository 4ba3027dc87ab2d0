#include "clusterwp/forms.hpp"

#include <functional>
#include <sstream>

namespace clusterwp {

namespace {

RationalFn zero_over(const VarTablePtr& vars) { return RationalFn(vars); }

RationalFn monomial_fn(const VarTablePtr& vars, std::vector<int> exps, const GaussianRational& c) {
    return RationalFn(LaurentPoly::monomial(vars, Monomial(std::move(exps)), c));
}

void require_same_chart(const ChartForm& a, const ChartForm& b) {
    if (a.chart().names() != b.chart().names())
        throw ChartMismatch("forms live on different charts");
}

}  // namespace

// ---- ChartForm ---------------------------------------------------------------------

ChartForm::ChartForm(Seed chart) : chart_(std::move(chart)) {}

RationalFn ChartForm::coeff(std::size_t i, std::size_t j) const {
    if (i == j) return zero_over(vars());
    auto it = coeffs_.find({std::min(i, j), std::max(i, j)});
    if (it == coeffs_.end()) return zero_over(vars());
    return i < j ? it->second : -it->second;
}

void ChartForm::add(std::size_t i, std::size_t j, const RationalFn& c) {
    if (i == j || c.is_zero()) return;
    if (i >= chart_.size() || j >= chart_.size()) throw std::out_of_range("form index outside the chart");
    const Key key{std::min(i, j), std::max(i, j)};
    const RationalFn term = i < j ? c : -c;
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, term);
        return;
    }
    it->second = it->second + term;
    if (it->second.is_zero()) coeffs_.erase(it);
}

ChartForm ChartForm::simplified() const {
    ChartForm out(chart_);
    for (const auto& [key, c] : coeffs_) out.coeffs_.emplace(key, c.simplified());
    return out;
}

ChartForm ChartForm::operator-() const {
    ChartForm out(*this);
    for (auto& [key, c] : out.coeffs_) c = -c;
    return out;
}

ChartForm operator+(const ChartForm& a, const ChartForm& b) {
    require_same_chart(a, b);
    ChartForm out(a);
    for (const auto& [key, c] : b.coeffs_) out.add(key.first, key.second, c);
    return out;
}

ChartForm operator-(const ChartForm& a, const ChartForm& b) { return a + (-b); }

ChartForm operator*(const RationalFn& c, const ChartForm& f) {
    ChartForm out(f.chart_);
    if (c.is_zero()) return out;
    for (const auto& [key, v] : f.coeffs_) out.coeffs_.emplace(key, c * v);
    return out;
}

std::string ChartForm::str() const {
    std::ostringstream os;
    for (const auto& [key, c] : coeffs_)
        os << c.str() << " ; " << vars()->name(key.first) << " ; " << vars()->name(key.second) << "\n";
    return os.str();
}

ChartForm wp_form(const Seed& s) {
    ChartForm form(s);
    const VarTablePtr& vars = s.chart_vars();
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < s.mutable_count(); ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const long b = s.matrix()(i, j);
            if (b == 0) continue;
            std::vector<int> exps(n, 0);
            exps[i] = -1;
            exps[j] = -1;
            form.add(i, j, monomial_fn(vars, std::move(exps), GaussianRational(b)));
        }
    }
    return form;
}

// ---- SymbolicForm ------------------------------------------------------------------

SymbolicForm::SymbolicForm(VarTablePtr generators, std::map<std::string, RationalFn> expansions)
    : generators_(std::move(generators)), expansions_(std::move(expansions)) {
    for (const auto& [name, e] : expansions_)
        if (!generators_->contains(name))
            throw std::invalid_argument("expansion given for unknown generator '" + name + "'");
}

void SymbolicForm::add_term(const RationalFn& coeff, const std::string& g, const std::string& h) {
    if (!generators_->contains(g)) throw std::invalid_argument("unknown generator '" + g + "'");
    if (!generators_->contains(h)) throw std::invalid_argument("unknown generator '" + h + "'");
    if (!same_vars(coeff.vars(), generators_))
        throw std::invalid_argument("coefficient is not written over the generators");
    if (g == h || coeff.is_zero()) return;
    terms_.push_back(FormTerm{coeff, g, h});
}

void SymbolicForm::add_term(const GaussianRational& coeff, const std::string& g, const std::string& h) {
    add_term(RationalFn(LaurentPoly::constant(generators_, coeff)), g, h);
}

SymbolicForm operator+(const SymbolicForm& a, const SymbolicForm& b) {
    if (!same_vars(a.generators_, b.generators_)) throw std::invalid_argument("forms over different generators");
    SymbolicForm out(a);
    for (const auto& [name, e] : b.expansions_) {
        auto [it, inserted] = out.expansions_.emplace(name, e);
        if (!inserted && it->second != e)
            throw std::invalid_argument("generator '" + name + "' has conflicting expansions");
    }
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    return out;
}

std::string SymbolicForm::str() const {
    std::ostringstream os;
    for (const auto& [name, e] : expansions_) {
        const bool identity = e.vars() && e.vars()->contains(name) && e.is_laurent_form() &&
                              e.num() == LaurentPoly::variable(e.vars(), name);
        if (identity) continue;
        os << "gen " << name << " = " << e.str() << "\n";
    }
    for (const auto& t : terms_) os << t.coeff.str() << " ; " << t.g << " ; " << t.h << "\n";
    return os.str();
}

RationalFn partial(const RationalFn& f, std::size_t var_index) {
    if (f.is_laurent_form()) return RationalFn(partial(f.num(), var_index));
    const LaurentPoly dn = partial(f.num(), var_index);
    const LaurentPoly dd = partial(f.den(), var_index);
    if (dd.is_zero()) return RationalFn(dn, f.den());
    return RationalFn(dn * f.den() - f.num() * dd, f.den() * f.den());
}

// ---- Reduction ---------------------------------------------------------------------

ChartForm reduce_to_chart(const SymbolicForm& f, const Seed& chart) {
    const VarTablePtr& target = chart.chart_vars();
    const std::size_t n = chart.size();

    std::map<std::string, RationalFn> bindings;
    for (const auto& name : f.generators()->names()) {
        auto it = f.expansions().find(name);
        if (it != f.expansions().end()) {
            if (!same_vars(it->second.vars(), target))
                throw ChartMismatch("expansion of '" + name + "' is not written in the chart variables");
            bindings.emplace(name, it->second);
        } else if (target->contains(name)) {
            bindings.emplace(name, RationalFn(LaurentPoly::variable(target, name)));
        }
    }

    std::map<std::string, std::vector<std::pair<std::size_t, RationalFn>>> gradients;
    auto gradient = [&](const std::string& g) -> const std::vector<std::pair<std::size_t, RationalFn>>& {
        auto cached = gradients.find(g);
        if (cached != gradients.end()) return cached->second;
        auto b = bindings.find(g);
        if (b == bindings.end()) throw ChartMismatch("generator '" + g + "' has no expansion in the chart");
        std::vector<std::pair<std::size_t, RationalFn>> grad;
        for (std::size_t i = 0; i < n; ++i) {
            RationalFn d = partial(b->second, i);
            if (!d.is_zero()) grad.emplace_back(i, std::move(d));
        }
        return gradients.emplace(g, std::move(grad)).first->second;
    };

    ChartForm out(chart);
    for (const auto& t : f.terms()) {
        const auto& dg = gradient(t.g);
        const auto& dh = gradient(t.h);
        if (dg.empty() || dh.empty()) continue;
        const RationalFn c = substitute(t.coeff, bindings, target);
        if (c.is_zero()) continue;
        for (const auto& [i, gi] : dg)
            for (const auto& [j, hj] : dh)
                if (i != j) out.add(i, j, c * gi * hj);
    }
    return out.simplified();
}

ChartForm pullback(const ChartForm& f, const Seed& target, std::size_t k) {
    const Seed expected = mutate_seed(target, k);
    const Seed& source = f.chart();
    if (source.expansions() != expected.expansions() || source.matrix() != expected.matrix())
        throw ChartMismatch("form chart is not the mutation of the target at " + std::to_string(k + 1));

    const VarTablePtr& tvars = target.chart_vars();
    std::vector<LaurentPoly> vars;
    for (const auto& name : target.names()) vars.push_back(LaurentPoly::variable(tvars, name));

    std::map<std::string, RationalFn> expansions;
    for (std::size_t j = 0; j < source.size(); ++j) {
        if (j == k) {
            std::vector<int> inv(target.size(), 0);
            inv[k] = -1;
            expansions.emplace(source.names()[j],
                               RationalFn(exchange_binomial(target.matrix(), k, vars).mul_monomial(Monomial(inv))));
        } else {
            expansions.emplace(source.names()[j], RationalFn(vars[j]));
        }
    }
    SymbolicForm symbolic(source.chart_vars(), std::move(expansions));
    for (const auto& [key, c] : f.coeffs())
        symbolic.add_term(c, source.names()[key.first], source.names()[key.second]);
    return reduce_to_chart(symbolic, target);
}

bool forms_equal(const ChartForm& a, const ChartForm& b) {
    require_same_chart(a, b);
    for (const auto& [key, c] : a.coeffs())
        if (c != b.coeff(key.first, key.second)) return false;
    for (const auto& [key, c] : b.coeffs())
        if (!a.coeffs().count(key)) return false;
    return true;
}

ChartForm difference(const ChartForm& a, const ChartForm& b) { return (a - b).simplified(); }

// ---- Invariance --------------------------------------------------------------------

bool InvarianceReport::all_pass() const {
    return std::all_of(sequences.begin(), sequences.end(), [](const SequenceResult& r) { return r.pass; });
}

std::vector<std::vector<std::size_t>> InvarianceReport::failures() const {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& r : sequences)
        if (!r.pass) out.push_back(r.sequence);
    return out;
}

InvarianceReport check_invariance(const Seed& s, std::size_t depth) {
    if (depth == 0) throw std::invalid_argument("invariance depth must be at least 1");
    const ChartForm omega = wp_form(s);
    InvarianceReport report;
    std::vector<Seed> chain{s};
    std::vector<std::size_t> seq;

    std::function<void()> visit = [&]() {
        for (std::size_t k = 0; k < s.mutable_count(); ++k) {
            seq.push_back(k);
            chain.push_back(mutate_seed(chain.back(), k));
            ChartForm form = wp_form(chain.back());
            for (std::size_t t = seq.size(); t-- > 0;) form = pullback(form, chain[t], seq[t]);
            report.sequences.push_back(SequenceResult{seq, forms_equal(form, omega)});
            if (seq.size() < depth) visit();
            chain.pop_back();
            seq.pop_back();
        }
    };
    visit();
    return report;
}

// ---- Grading -----------------------------------------------------------------------

namespace {

long weight_of(const Weights& weights, const std::string& name) {
    auto it = weights.find(name);
    if (it == weights.end()) throw std::invalid_argument("no weight for variable '" + name + "'");
    return it->second;
}

}  // namespace

std::optional<long> form_degree(const ChartForm& f, const Weights& weights) {
    if (f.is_zero()) throw ZeroPolynomial("degree of the zero form");
    std::optional<long> common;
    for (const auto& [key, c] : f.coeffs()) {
        auto d = weighted_degree(c, weights);
        if (!d) return std::nullopt;
        const long total =
            *d + weight_of(weights, f.vars()->name(key.first)) + weight_of(weights, f.vars()->name(key.second)) - 2;
        if (common && *common != total) return std::nullopt;
        common = total;
    }
    return common;
}

std::optional<long> form_degree(const SymbolicForm& f, const Weights& weights) {
    if (f.terms().empty()) throw ZeroPolynomial("degree of the zero form");
    std::optional<long> common;
    for (const auto& t : f.terms()) {
        auto d = weighted_degree(t.coeff, weights);
        if (!d) return std::nullopt;
        const long total = *d + weight_of(weights, t.g) + weight_of(weights, t.h) - 2;
        if (common && *common != total) return std::nullopt;
        common = total;
    }
    return common;
}

}  // namespace clusterwp
