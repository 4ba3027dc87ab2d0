/*
 * laurent.hpp
 * -----------
 * Sparse multivariate Laurent polynomials over Q(i) and unreduced rational
 * functions built from them.
 *
 * A LaurentPoly is a list of (Monomial, coefficient) terms sorted in
 * decreasing graded-lex order over its VarTable, with no zero coefficients.
 * Exponents may be negative.  RationalFn keeps num/den without any gcd
 * reduction; only the monomial content and the leading coefficient of the
 * denominator are moved into the numerator.  Equality of RationalFn is by
 * cross-multiplication.
 */
#pragma once

#include "clusterwp/coefficients.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace clusterwp {

class VarTable {
public:
    explicit VarTable(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t k) const { return names_[k]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names);
bool same_vars(const VarTablePtr& a, const VarTablePtr& b);

struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::size_t n) : exps(n, 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    long degree() const;
    bool is_one() const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    /// Componentwise exponent >= o's.
    bool divisible_by(const Monomial& o) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Strict "a comes after b" in graded lex: higher total degree first,
/// ties broken lexicographically in VarTable order.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

struct EvaluationError : std::domain_error {
    enum class Kind { unbound_variable, zero_denominator, zero_base_negative_exponent };
    EvaluationError(Kind k, const std::string& what) : std::domain_error(what), kind(k) {}
    Kind kind;
};

using Point = std::map<std::string, GaussianRational>;
using Weights = std::map<std::string, long>;

class LaurentPoly {
public:
    using Term = std::pair<Monomial, GaussianRational>;

    LaurentPoly() = default;
    explicit LaurentPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(VarTablePtr vars, const GaussianRational& c);
    static LaurentPoly variable(VarTablePtr vars, const std::string& name);
    static LaurentPoly monomial(VarTablePtr vars, Monomial m, const GaussianRational& c = 1);
    /// Terms need not be sorted or combined.
    static LaurentPoly from_terms(VarTablePtr vars, std::vector<Term> terms);

    const VarTablePtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const Term& leading() const { return terms_.front(); }

    /// Componentwise minimum exponent over all terms (the monomial content).
    Monomial min_exponents() const;
    /// Variables that occur with nonzero exponent.
    std::vector<std::size_t> support() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const GaussianRational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const GaussianRational& c) { return a *= c; }
    friend LaurentPoly operator*(const GaussianRational& c, LaurentPoly a) { return a *= c; }

    LaurentPoly mul_monomial(const Monomial& m, const GaussianRational& c = 1) const;
    LaurentPoly pow(unsigned e) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Total order used to canonicalize multisets of polynomials.
    friend bool canonical_less(const LaurentPoly& a, const LaurentPoly& b);

    std::size_t hash() const;
    /// Parseable by parse_expression: "2*x0^-1*x1^2 + x0^-1".
    std::string str() const;

private:
    VarTablePtr vars_;
    std::vector<Term> terms_;
};

class RationalFn {
public:
    RationalFn() = default;
    explicit RationalFn(VarTablePtr vars);
    RationalFn(LaurentPoly num);  // NOLINT: Laurent embeds as num/1
    RationalFn(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    const VarTablePtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    /// True when the stored denominator is exactly 1.
    bool is_laurent_form() const { return den_.is_one(); }

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

    /// Cross-multiplication equality.
    friend bool operator==(const RationalFn& a, const RationalFn& b);
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    /// Replaces this by its Laurent form when the denominator divides exactly.
    RationalFn simplified() const;

    std::string str() const;

private:
    void normalize();
    LaurentPoly num_;
    LaurentPoly den_;
};

enum class PolyOp { add, sub, mul, div };

RationalFn poly_arith(const RationalFn& a, const RationalFn& b, PolyOp op);

/// q with q*den == num, or nullopt when den does not divide num.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& num, const LaurentPoly& den);

/// The Laurent polynomial equal to f, or nullopt when f is not Laurent.
std::optional<LaurentPoly> as_laurent(const RationalFn& f);

/// Composes f with name -> value bindings; all values must share `target`.
/// Throws EvaluationError when a denominator becomes zero or a variable is unbound.
RationalFn substitute(const RationalFn& f, const std::map<std::string, RationalFn>& bindings,
                      const VarTablePtr& target);
LaurentPoly substitute_laurent(const LaurentPoly& f, const std::map<std::string, LaurentPoly>& bindings,
                               const VarTablePtr& target);

GaussianRational evaluate(const LaurentPoly& f, const Point& point);
GaussianRational evaluate(const RationalFn& f, const Point& point);

LaurentPoly partial(const LaurentPoly& f, const std::string& var);
LaurentPoly partial(const LaurentPoly& f, std::size_t var_index);

struct ZeroPolynomial : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Common weighted degree of all terms, nullopt when inhomogeneous.
std::optional<long> weighted_degree(const LaurentPoly& f, const Weights& weights);
/// deg(num) - deg(den) for homogeneous parts (after Laurent simplification if possible).
std::optional<long> weighted_degree(const RationalFn& f, const Weights& weights);

/// Parses the expression grammar into a RationalFn over `vars`.  Every
/// identifier must name a variable of `vars`, except a bare `i` which is the
/// imaginary unit when `vars` has no variable of that name.
RationalFn parse_expression(std::string_view text, const VarTablePtr& vars);
/// Identifiers in order of first appearance (the imaginary unit `i` excluded).
std::vector<std::string> expression_identifiers(std::string_view text);

}  // namespace clusterwp
