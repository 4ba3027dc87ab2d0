/*
 * seeds.hpp
 * ---------
 * Exchange matrices, seeds and mutation.
 *
 * Matrices follow the m x n row convention: rows are the m mutable
 * variables, columns are all n variables, and frozen variables occupy the
 * trailing n - m columns.  All indices in this API are 0-based; the CLI and
 * the file formats are 1-based.
 */
#pragma once

#include "clusterwp/laurent.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace clusterwp {

struct SeedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a mutation produces a non-Laurent expansion.  This can only
/// happen through an arithmetic bug.
struct LaurentPhenomenonViolation : std::logic_error {
    using std::logic_error::logic_error;
};

class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    ExchangeMatrix(std::size_t mutable_count, std::size_t total, std::vector<long> entries);
    /// Rows of equal length; the row length is the variable count.
    ExchangeMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t mutable_count() const { return m_; }
    std::size_t size() const { return n_; }
    long operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const std::vector<long>& entries() const { return entries_; }

    friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

    std::string str() const;

private:
    std::size_t m_ = 0;
    std::size_t n_ = 0;
    std::vector<long> entries_;
};

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

struct NotSkewSymmetrizable {
    std::size_t i = 0;
    std::size_t j = 0;
    std::string reason;

    bool operator==(const NotSkewSymmetrizable&) const = default;
};

/// Smallest positive integer diagonal d (gcd 1 on each connected component
/// of the mutable interaction graph) with d_i B_ij = -d_j B_ji.
std::variant<std::vector<long>, NotSkewSymmetrizable> find_skew_symmetrizer(const ExchangeMatrix& b);

struct AcyclicityResult {
    bool acyclic = true;
    /// Closed walk i_1 -> ... -> i_1 with B positive along each step.
    std::vector<std::size_t> cycle;
};

AcyclicityResult is_acyclic(const ExchangeMatrix& b);

class Seed;

/// Chooses the label of the variable introduced by a mutation.
class NamingRule {
public:
    virtual ~NamingRule() = default;
    virtual std::string name_after(const Seed& before, std::size_t k) const = 0;
};

/// Appends a prime, or strips one when present: x -> x' -> x.
class PrimeNaming final : public NamingRule {
public:
    std::string name_after(const Seed& before, std::size_t k) const override;
};

/// Type A_{N-3}: variables are diagonals of an N-gon named x<a><b>, and
/// mutation flips a diagonal inside its quadrilateral.
class PolygonNaming final : public NamingRule {
public:
    explicit PolygonNaming(int vertices) : vertices_(vertices) {}
    std::string name_after(const Seed& before, std::size_t k) const override;

private:
    int vertices_;
};

/// Rank-2 affine chains x_i with clusters {x_i, x_{i+1}}; negative indices
/// are spelled xm<k>.
class IndexedNaming final : public NamingRule {
public:
    std::string name_after(const Seed& before, std::size_t k) const override;
    static std::string name(long index);
    static std::optional<long> index(const std::string& name);
};

class Seed {
public:
    Seed() = default;
    /// Initial seed: expansions are the variables themselves.  Validates
    /// dimensions and skew-symmetrizability.
    Seed(ExchangeMatrix matrix, std::vector<std::string> names,
         std::shared_ptr<const NamingRule> naming = nullptr);
    Seed(ExchangeMatrix matrix, std::vector<std::string> names, std::vector<LaurentPoly> expansions,
         std::shared_ptr<const NamingRule> naming);

    const ExchangeMatrix& matrix() const { return matrix_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<LaurentPoly>& expansions() const { return expansions_; }
    const std::shared_ptr<const NamingRule>& naming() const { return naming_; }
    std::size_t size() const { return names_.size(); }
    std::size_t mutable_count() const { return matrix_.mutable_count(); }
    bool is_frozen(std::size_t k) const { return k >= matrix_.mutable_count(); }

    /// Variable table of the initial cluster the expansions live in.
    const VarTablePtr& initial_vars() const { return expansions_.front().vars(); }
    /// Variable table whose names are this seed's cluster.
    const VarTablePtr& chart_vars() const { return chart_vars_; }

    Seed with_name(std::size_t k, std::string name) const;
    Seed with_naming(std::shared_ptr<const NamingRule> naming) const;

    /// Same matrix, names and expansions.
    friend bool operator==(const Seed& a, const Seed& b);

private:
    ExchangeMatrix matrix_;
    std::vector<std::string> names_;
    std::vector<LaurentPoly> expansions_;
    std::shared_ptr<const NamingRule> naming_;
    VarTablePtr chart_vars_;
};

/// prod_{B_kj>0} v_j^{B_kj} + prod_{B_kj<0} v_j^{-B_kj}; an empty product is 1.
LaurentPoly exchange_binomial(const ExchangeMatrix& b, std::size_t k, const std::vector<LaurentPoly>& values);

Seed mutate_seed(const Seed& s, std::size_t k);
Seed mutate_sequence(const Seed& s, const std::vector<std::size_t>& ks);

struct Exploration {
    std::vector<Seed> seeds;
    std::vector<std::size_t> depth;
    /// neighbors[s][k]: index of mutate_seed(seeds[s], k) when it was stored.
    std::vector<std::vector<std::optional<std::size_t>>> neighbors;
    /// Distinct cluster variables (frozen included) in discovery order.
    std::vector<std::pair<std::string, LaurentPoly>> variables;
    bool truncated = false;

    std::optional<std::size_t> find_cluster(const std::vector<LaurentPoly>& cluster) const;
};

using SeedFilter = std::function<bool(const Seed&)>;

/// Breadth-first over all mutation directions (ascending, FIFO).  Clusters
/// are deduplicated as unordered multisets of expansions; variable labels
/// are made consistent across the exploration.  Seeds rejected by `admit`
/// are neither stored nor expanded and mark the result truncated.
Exploration explore(const Seed& s, std::size_t max_seeds, std::size_t max_depth, const SeedFilter& admit = {});

struct AcyclicSeed {
    Seed seed;
    std::vector<std::size_t> path;
};

/// First acyclic seed in breadth-first order, visiting at most `budget`
/// seeds.  nullopt is a semi-decision, not a proof of non-acyclicity.
std::optional<AcyclicSeed> find_acyclic_seed(const Seed& s, std::size_t budget);

/// Exchange relation var * partner = binomial over a shared name table.
struct ExchangeRelation {
    std::string var;
    std::string partner;
    LaurentPoly binomial;

    LaurentPoly polynomial() const;
    std::string str() const;
};

struct Presentation {
    VarTablePtr generators;
    std::vector<ExchangeRelation> relations;
    std::set<std::string> frozen;
    /// Expansion of each primed generator in the initial cluster.
    std::vector<std::pair<std::string, LaurentPoly>> primed;
};

/// Generators x_1..x_n, x_1'..x_m' and relations x_i x_i' - P_i read from the
/// rows of an acyclic seed.  Throws SeedError on a cyclic matrix.
Presentation acyclic_presentation(const Seed& s);

/// Exchange relations along every stored edge of an exploration.
Presentation exploration_relations(const Exploration& e);

}  // namespace clusterwp
