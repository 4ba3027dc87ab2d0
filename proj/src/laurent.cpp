#include "clusterwp/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace clusterwp {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t k = 0; k < names_.size(); ++k) {
        if (!index_.emplace(names_[k], k).second)
            throw std::invalid_argument("duplicate variable name '" + names_[k] + "'");
    }
}

std::optional<std::size_t> VarTable::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VarTablePtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
}

bool same_vars(const VarTablePtr& a, const VarTablePtr& b) {
    if (a == b || !a || !b) return true;
    return *a == *b;
}

namespace {

const VarTablePtr& pick_vars(const VarTablePtr& a, const VarTablePtr& b) {
    if (!same_vars(a, b)) throw std::invalid_argument("polynomials over different variable tables");
    return a ? a : b;
}

}  // namespace

// ---- Monomial ------------------------------------------------------------

long Monomial::degree() const {
    long d = 0;
    for (int e : exps) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t k = 0; k < exps.size(); ++k) r.exps[k] += o.exps[k];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t k = 0; k < exps.size(); ++k) r.exps[k] -= o.exps[k];
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    for (std::size_t k = 0; k < exps.size(); ++k)
        if (exps[k] < o.exps[k]) return false;
    return true;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const long da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t k = 0; k < a.exps.size(); ++k)
        if (a.exps[k] != b.exps[k]) return a.exps[k] > b.exps[k];
    return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int e : m.exps) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(e))) * 0x100000001b3ull;
    return h;
}

// ---- LaurentPoly ---------------------------------------------------------

LaurentPoly LaurentPoly::constant(VarTablePtr vars, const GaussianRational& c) {
    const std::size_t n = vars->size();
    return monomial(std::move(vars), Monomial(n), c);
}

LaurentPoly LaurentPoly::variable(VarTablePtr vars, const std::string& name) {
    auto k = vars->index_of(name);
    if (!k) throw std::invalid_argument("unknown variable '" + name + "'");
    Monomial m(vars->size());
    m.exps[*k] = 1;
    return monomial(std::move(vars), std::move(m));
}

LaurentPoly LaurentPoly::monomial(VarTablePtr vars, Monomial m, const GaussianRational& c) {
    LaurentPoly p(std::move(vars));
    if (m.exps.size() != p.vars_->size()) throw std::invalid_argument("monomial length != variable count");
    if (!c.is_zero()) p.terms_.emplace_back(std::move(m), c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(VarTablePtr vars, std::vector<Term> terms) {
    LaurentPoly p(std::move(vars));
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return GrlexGreater{}(a.first, b.first); });
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second.is_one();
}

Monomial LaurentPoly::min_exponents() const {
    if (terms_.empty()) return Monomial(vars_ ? vars_->size() : 0);
    Monomial m = terms_[0].first;
    for (const auto& [mono, c] : terms_)
        for (std::size_t k = 0; k < m.exps.size(); ++k) m.exps[k] = std::min(m.exps[k], mono.exps[k]);
    return m;
}

std::vector<std::size_t> LaurentPoly::support() const {
    std::vector<std::size_t> out;
    if (!vars_) return out;
    for (std::size_t k = 0; k < vars_->size(); ++k) {
        for (const auto& t : terms_) {
            if (t.first.exps[k] != 0) {
                out.push_back(k);
                break;
            }
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    vars_ = pick_vars(vars_, o.vars_);
    if (o.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    GrlexGreater gt;
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && gt(a->first, b->first))) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || gt(b->first, a->first)) {
            merged.push_back(*b++);
        } else {
            GaussianRational c = a->second + b->second;
            if (!c.is_zero()) merged.emplace_back(std::move(a->first), std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    return *this += -o;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    return *this = *this * o;
}

LaurentPoly& LaurentPoly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& t : terms_) t.second *= c;
    return *this;
}

LaurentPoly LaurentPoly::mul_monomial(const Monomial& m, const GaussianRational& c) const {
    LaurentPoly r(vars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves graded-lex order.
    for (const auto& [mono, coeff] : terms_) r.terms_.emplace_back(mono * m, coeff * c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    const VarTablePtr& vars = pick_vars(a.vars_, b.vars_);
    if (a.is_zero() || b.is_zero()) return LaurentPoly(vars);
    if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].first, a.terms_[0].second);
    if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].first, b.terms_[0].second);
    std::unordered_map<Monomial, GaussianRational, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto [it, inserted] = acc.try_emplace(ma * mb, ca);
            if (inserted)
                it->second *= cb;
            else
                it->second += ca * cb;
        }
    }
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.emplace_back(m, std::move(c));
    std::sort(terms.begin(), terms.end(),
              [](const LaurentPoly::Term& x, const LaurentPoly::Term& y) { return GrlexGreater{}(x.first, y.first); });
    LaurentPoly r(vars);
    r.terms_ = std::move(terms);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result = constant(vars_, 1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty() && !same_vars(a.vars_, b.vars_)) return false;
    return a.terms_ == b.terms_;
}

bool canonical_less(const LaurentPoly& a, const LaurentPoly& b) {
    GrlexGreater gt;
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t k = 0; k < n; ++k) {
        const auto& [ma, ca] = a.terms_[k];
        const auto& [mb, cb] = b.terms_[k];
        if (gt(ma, mb)) return true;
        if (gt(mb, ma)) return false;
        if (ca.re() != cb.re()) return ca.re() < cb.re();
        if (ca.im() != cb.im()) return ca.im() < cb.im();
    }
    return a.terms_.size() < b.terms_.size();
}

std::size_t LaurentPoly::hash() const {
    std::size_t h = terms_.size();
    MonomialHash mh;
    for (const auto& [m, c] : terms_) h = h * 1000003u ^ (mh(m) + 31 * c.hash());
    return h;
}

namespace {

std::string literal_for_expression(const GaussianRational& c) {
    if (c.is_real()) return c.re().str();
    if (c.re().is_zero()) {
        if (c.im().is_one()) return "i";
        if (c.im() == Rational(-1)) return "-i";
        return c.im().str() + "i";
    }
    return "(" + c.str() + ")";
}

}  // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        GaussianRational coeff = c;
        bool negative = c.is_real() && c.re().sign() < 0;
        if (negative) coeff = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        std::string mono;
        for (std::size_t k = 0; k < m.exps.size(); ++k) {
            if (m.exps[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_->name(k);
            if (m.exps[k] != 1) mono += "^" + std::to_string(m.exps[k]);
        }
        if (mono.empty())
            os << literal_for_expression(coeff);
        else if (coeff.is_one())
            os << mono;
        else
            os << literal_for_expression(coeff) << "*" << mono;
    }
    return os.str();
}

// ---- RationalFn ----------------------------------------------------------

RationalFn::RationalFn(VarTablePtr vars) : num_(vars), den_(LaurentPoly::constant(vars, 1)) {}

RationalFn::RationalFn(LaurentPoly num) : num_(std::move(num)) {
    den_ = LaurentPoly::constant(num_.vars(), 1);
}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (!same_vars(num_.vars(), den_.vars()))
        throw std::invalid_argument("numerator and denominator over different variable tables");
    normalize();
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        const VarTablePtr& vars = num_.vars() ? num_.vars() : den_.vars();
        num_ = LaurentPoly(vars);
        den_ = LaurentPoly::constant(vars, 1);
        return;
    }
    if (den_.is_one()) return;
    Monomial content = den_.min_exponents();
    if (!content.is_one()) {
        Monomial inv = Monomial(den_.vars()->size()) / content;
        den_ = den_.mul_monomial(inv);
        num_ = num_.mul_monomial(inv);
    }
    const GaussianRational lc = den_.leading().second;
    if (!lc.is_one()) {
        const GaussianRational inv = lc.inverse();
        den_ *= inv;
        num_ *= inv;
    }
}

RationalFn RationalFn::operator-() const {
    RationalFn r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return a + (-b);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return RationalFn(pick_vars(a.vars(), b.vars()));
    if (a.den_.is_one() && b.den_.is_one()) return RationalFn(a.num_ * b.num_);
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    if (a.is_zero()) return RationalFn(pick_vars(a.vars(), b.vars()));
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFn RationalFn::simplified() const {
    if (den_.is_one()) return *this;
    if (auto l = as_laurent(*this)) return RationalFn(std::move(*l));
    return *this;
}

std::string RationalFn::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFn poly_arith(const RationalFn& a, const RationalFn& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
        case PolyOp::div: return a / b;
    }
    throw std::invalid_argument("unknown polynomial op");
}

// ---- Division --------------------------------------------------------------

std::optional<LaurentPoly> exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
    const VarTablePtr& vars = pick_vars(num.vars(), den.vars());
    if (num.is_zero()) return LaurentPoly(vars);

    // Shift both to genuine polynomials without monomial content.  A
    // content-free divisor divides a polynomial in the Laurent ring iff it
    // divides it in the polynomial ring, so ordinary division decides it.
    const Monomial num_content = num.min_exponents();
    const Monomial den_content = den.min_exponents();
    const Monomial one(vars->size());
    const LaurentPoly divisor = den.mul_monomial(one / den_content);
    const LaurentPoly dividend = num.mul_monomial(one / num_content);
    const Monomial shift = num_content / den_content;

    if (divisor.is_constant()) return dividend.mul_monomial(shift, divisor.leading().second.inverse());

    const auto& [lead_mono, lead_coeff] = divisor.leading();
    const GaussianRational lead_inv = lead_coeff.inverse();

    std::map<Monomial, GaussianRational, GrlexGreater> work;
    for (const auto& t : dividend.terms()) work.emplace(t.first, t.second);

    std::vector<LaurentPoly::Term> quotient;
    while (!work.empty()) {
        auto top = work.begin();
        // The leading term of the remainder can never be cancelled later.
        if (!top->first.divisible_by(lead_mono)) return std::nullopt;
        Monomial t = top->first / lead_mono;
        GaussianRational tc = top->second * lead_inv;
        for (const auto& [dm, dc] : divisor.terms()) {
            Monomial key = t * dm;
            auto it = work.find(key);
            if (it == work.end()) {
                work.emplace(std::move(key), -(tc * dc));
            } else {
                it->second -= tc * dc;
                if (it->second.is_zero()) work.erase(it);
            }
        }
        quotient.emplace_back(std::move(t), std::move(tc));
    }
    return LaurentPoly::from_terms(vars, std::move(quotient)).mul_monomial(shift);
}

std::optional<LaurentPoly> as_laurent(const RationalFn& f) {
    if (f.den().is_one()) return f.num();
    return exact_divide(f.num(), f.den());
}

// ---- Substitution and evaluation ----------------------------------------------

namespace {

template <class V>
const V& lookup_binding(const std::map<std::string, V>& bindings, const std::string& name) {
    auto it = bindings.find(name);
    if (it == bindings.end())
        throw EvaluationError(EvaluationError::Kind::unbound_variable, "variable '" + name + "' is unbound");
    return it->second;
}

class PowerCache {
public:
    explicit PowerCache(LaurentPoly base) { pows_.push_back(LaurentPoly::constant(base.vars(), 1)); pows_.push_back(std::move(base)); }
    const LaurentPoly& get(unsigned e) {
        while (pows_.size() <= e) pows_.push_back(pows_.back() * pows_[1]);
        return pows_[e];
    }

private:
    std::vector<LaurentPoly> pows_;
};

// Substitutes polynomial bindings p_k / q_k into f, returning num/den
// with f(p/q) = num/den.
RationalFn substitute_poly(const LaurentPoly& f, const std::map<std::string, RationalFn>& bindings,
                           const VarTablePtr& target) {
    if (f.is_zero()) return RationalFn(target);
    const auto support = f.support();
    const std::size_t n = f.vars()->size();
    const Monomial content = f.min_exponents();

    std::vector<int> neg(n, 0), maxdeg(n, 0);
    for (std::size_t k : support) neg[k] = std::max(0, -content.exps[k]);
    for (const auto& [m, c] : f.terms())
        for (std::size_t k : support) maxdeg[k] = std::max(maxdeg[k], m.exps[k] + neg[k]);

    std::vector<std::optional<PowerCache>> pnum(n), pden(n);
    std::vector<bool> trivial_den(n, true);
    for (std::size_t k : support) {
        const RationalFn& b = lookup_binding(bindings, f.vars()->name(k));
        if (!same_vars(b.vars(), target)) throw std::invalid_argument("binding over a foreign variable table");
        pnum[k].emplace(b.num());
        pden[k].emplace(b.den());
        trivial_den[k] = b.den().is_one();
    }

    LaurentPoly num(target);
    for (const auto& [m, c] : f.terms()) {
        LaurentPoly term = LaurentPoly::constant(target, c);
        for (std::size_t k : support) {
            const int e = m.exps[k] + neg[k];
            if (e > 0) term = term * pnum[k]->get(static_cast<unsigned>(e));
            if (!trivial_den[k] && maxdeg[k] - e > 0) term = term * pden[k]->get(static_cast<unsigned>(maxdeg[k] - e));
        }
        num += term;
    }
    LaurentPoly den = LaurentPoly::constant(target, 1);
    for (std::size_t k : support) {
        const int excess = maxdeg[k] - neg[k];
        if (!trivial_den[k] && excess > 0) den = den * pden[k]->get(static_cast<unsigned>(excess));
        if (!trivial_den[k] && excess < 0) num = num * pden[k]->get(static_cast<unsigned>(-excess));
        if (neg[k] > 0) {
            const LaurentPoly& p = pnum[k]->get(static_cast<unsigned>(neg[k]));
            if (p.is_zero())
                throw EvaluationError(EvaluationError::Kind::zero_denominator,
                                      "substitution makes '" + f.vars()->name(k) + "' zero under a negative power");
            den = den * p;
        }
    }
    if (num.is_zero()) return RationalFn(target);
    return RationalFn(std::move(num), std::move(den));
}

}  // namespace

RationalFn substitute(const RationalFn& f, const std::map<std::string, RationalFn>& bindings,
                      const VarTablePtr& target) {
    RationalFn num = substitute_poly(f.num(), bindings, target);
    if (f.den().is_one()) return num;
    RationalFn den = substitute_poly(f.den(), bindings, target);
    if (den.is_zero())
        throw EvaluationError(EvaluationError::Kind::zero_denominator, "substitution makes the denominator zero");
    return num / den;
}

LaurentPoly substitute_laurent(const LaurentPoly& f, const std::map<std::string, LaurentPoly>& bindings,
                               const VarTablePtr& target) {
    LaurentPoly out(target);
    if (f.is_zero()) return out;
    const auto support = f.support();
    std::vector<std::optional<PowerCache>> pos(f.vars()->size()), inv(f.vars()->size());
    for (const auto& [m, c] : f.terms()) {
        LaurentPoly term = LaurentPoly::constant(target, c);
        for (std::size_t k : support) {
            const int e = m.exps[k];
            if (e == 0) continue;
            const LaurentPoly& b = lookup_binding(bindings, f.vars()->name(k));
            if (e > 0) {
                if (!pos[k]) pos[k].emplace(b);
                term = term * pos[k]->get(static_cast<unsigned>(e));
            } else {
                if (!inv[k]) {
                    if (!b.is_monomial())
                        throw std::domain_error("negative power of a non-monomial binding is not Laurent");
                    Monomial one(target->size());
                    inv[k].emplace(LaurentPoly::monomial(target, one / b.leading().first, b.leading().second.inverse()));
                }
                term = term * inv[k]->get(static_cast<unsigned>(-e));
            }
        }
        out += term;
    }
    return out;
}

GaussianRational evaluate(const LaurentPoly& f, const Point& point) {
    if (f.is_zero()) return 0;
    const auto support = f.support();
    std::vector<GaussianRational> values(f.vars()->size());
    for (std::size_t k : support) values[k] = lookup_binding(point, f.vars()->name(k));
    GaussianRational total;
    for (const auto& [m, c] : f.terms()) {
        GaussianRational term = c;
        for (std::size_t k : support) {
            const int e = m.exps[k];
            if (e == 0) continue;
            if (e < 0 && values[k].is_zero())
                throw EvaluationError(EvaluationError::Kind::zero_base_negative_exponent,
                                      "'" + f.vars()->name(k) + "' is zero under a negative exponent");
            term *= values[k].pow(e);
        }
        total += term;
    }
    return total;
}

GaussianRational evaluate(const RationalFn& f, const Point& point) {
    GaussianRational den = evaluate(f.den(), point);
    if (den.is_zero()) throw EvaluationError(EvaluationError::Kind::zero_denominator, "denominator evaluates to zero");
    return evaluate(f.num(), point) / den;
}

// ---- Calculus and grading ----------------------------------------------------

LaurentPoly partial(const LaurentPoly& f, std::size_t var_index) {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& [m, c] : f.terms()) {
        const int e = m.exps[var_index];
        if (e == 0) continue;
        Monomial dm = m;
        dm.exps[var_index] -= 1;
        terms.emplace_back(std::move(dm), c * GaussianRational(e));
    }
    return LaurentPoly::from_terms(f.vars(), std::move(terms));
}

LaurentPoly partial(const LaurentPoly& f, const std::string& var) {
    if (!f.vars()) return f;
    auto k = f.vars()->index_of(var);
    if (!k) return LaurentPoly(f.vars());
    return partial(f, *k);
}

std::optional<long> weighted_degree(const LaurentPoly& f, const Weights& weights) {
    if (f.is_zero()) throw ZeroPolynomial("weighted degree of the zero polynomial");
    const auto support = f.support();
    std::vector<long> w(f.vars()->size(), 0);
    for (std::size_t k : support) {
        auto it = weights.find(f.vars()->name(k));
        if (it == weights.end()) throw std::invalid_argument("no weight for variable '" + f.vars()->name(k) + "'");
        w[k] = it->second;
    }
    std::optional<long> common;
    for (const auto& [m, c] : f.terms()) {
        long d = 0;
        for (std::size_t k : support) d += w[k] * m.exps[k];
        if (common && *common != d) return std::nullopt;
        common = d;
    }
    return common;
}

std::optional<long> weighted_degree(const RationalFn& f, const Weights& weights) {
    if (f.is_zero()) throw ZeroPolynomial("weighted degree of the zero rational function");
    auto dn = weighted_degree(f.num(), weights);
    auto dd = weighted_degree(f.den(), weights);
    if (dn && dd) return *dn - *dd;
    if (auto l = as_laurent(f)) return weighted_degree(*l, weights);
    return std::nullopt;
}

}  // namespace clusterwp
