/*
 * forms.hpp
 * ---------
 * Rational 2-forms on cluster charts.
 *
 * A ChartForm is sum_{i<j} c_ij df_i ^ df_j in the coordinates of one
 * seed's cluster.  A SymbolicForm is a formal sum of c * dg ^ dh over named
 * generators, each generator carrying an expansion in some chart; it is
 * turned into a ChartForm by expanding every differential through formal
 * partial derivatives.
 */
#pragma once

#include "clusterwp/seeds.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace clusterwp {

struct ChartMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class ChartForm {
public:
    using Key = std::pair<std::size_t, std::size_t>;

    ChartForm() = default;
    explicit ChartForm(Seed chart);

    const Seed& chart() const { return chart_; }
    const VarTablePtr& vars() const { return chart_.chart_vars(); }
    const std::map<Key, RationalFn>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of df_i ^ df_j, antisymmetric in (i, j).
    RationalFn coeff(std::size_t i, std::size_t j) const;
    /// Adds c * df_i ^ df_j.  c must live over vars().
    void add(std::size_t i, std::size_t j, const RationalFn& c);
    /// Replaces each coefficient by its Laurent form where one exists.
    ChartForm simplified() const;

    ChartForm operator-() const;
    friend ChartForm operator+(const ChartForm& a, const ChartForm& b);
    friend ChartForm operator-(const ChartForm& a, const ChartForm& b);
    friend ChartForm operator*(const RationalFn& c, const ChartForm& f);

    /// Form-file lines `<coeff> ; <gen> ; <gen>`, one per nonzero slot.
    std::string str() const;

private:
    Seed chart_;
    std::map<Key, RationalFn> coeffs_;
};

/// sum_{i<j, i mutable} B_ij / (f_i f_j) df_i ^ df_j.
ChartForm wp_form(const Seed& s);

struct FormTerm {
    RationalFn coeff;
    std::string g;
    std::string h;
};

class SymbolicForm {
public:
    SymbolicForm() = default;
    /// `generators` is the table coefficients are written over; expansions
    /// map every generator to a RationalFn over a chart's variable table.
    SymbolicForm(VarTablePtr generators, std::map<std::string, RationalFn> expansions);

    const VarTablePtr& generators() const { return generators_; }
    const std::map<std::string, RationalFn>& expansions() const { return expansions_; }
    const std::vector<FormTerm>& terms() const { return terms_; }

    /// Appends coeff * dg ^ dh; terms with g == h are dropped.
    void add_term(const RationalFn& coeff, const std::string& g, const std::string& h);
    void add_term(const GaussianRational& coeff, const std::string& g, const std::string& h);

    /// Terms concatenated; both operands must share generators and expansions.
    friend SymbolicForm operator+(const SymbolicForm& a, const SymbolicForm& b);

    std::string str() const;

private:
    VarTablePtr generators_;
    std::map<std::string, RationalFn> expansions_;
    std::vector<FormTerm> terms_;
};

/// Expands d through each generator's expansion; chart variables without an
/// explicit expansion stand for themselves.
ChartForm reduce_to_chart(const SymbolicForm& f, const Seed& chart);

/// Pulls a form on mutate_seed(target, k)'s chart back to target's chart by
/// substituting f'_k = P_k / f_k.
ChartForm pullback(const ChartForm& f, const Seed& target, std::size_t k);

bool forms_equal(const ChartForm& a, const ChartForm& b);
ChartForm difference(const ChartForm& a, const ChartForm& b);

struct SequenceResult {
    std::vector<std::size_t> sequence;
    bool pass = false;
};

struct InvarianceReport {
    std::vector<SequenceResult> sequences;
    bool all_pass() const;
    std::vector<std::vector<std::size_t>> failures() const;
};

/// Every mutation sequence of length 1..depth, in lexicographic order.
InvarianceReport check_invariance(const Seed& s, std::size_t depth);

/// Common degree of all terms with deg(df) = deg(f) - 1; nullopt when
/// inhomogeneous.  Throws ZeroPolynomial on the zero form.
std::optional<long> form_degree(const ChartForm& f, const Weights& weights);
/// Same over a SymbolicForm's generators.
std::optional<long> form_degree(const SymbolicForm& f, const Weights& weights);

/// Rational partial derivative via the quotient rule.
RationalFn partial(const RationalFn& f, std::size_t var_index);

}  // namespace clusterwp
