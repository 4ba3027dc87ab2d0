/*
 * regularity.hpp
 * --------------
 * Points of cluster varieties, vanishing patterns, and local
 * regularization of the Weil-Petersson form.
 *
 * A point is a partial assignment of Gaussian rationals to generator names.
 * Vanishing patterns are sets of 0-based chart indices.
 */
#pragma once

#include "clusterwp/forms.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace clusterwp {

using VanishingPattern = std::set<std::size_t>;

struct RelationViolation {
    std::string relation;
    GaussianRational value;  // value of var*partner - binomial, or of the frozen generator
    std::string str() const;
};

struct PointCheck {
    std::vector<RelationViolation> violations;
    bool valid() const { return violations.empty(); }
};

/// Checks every relation whose generators are all assigned, and that assigned
/// frozen generators are nonzero.
PointCheck verify_point(const Point& p, const Presentation& context);

/// Indices of s's cluster whose value at p is zero.  Throws
/// std::invalid_argument when a cluster variable is unassigned or a frozen
/// variable vanishes.
VanishingPattern vanishing_pattern(const Point& p, const Seed& s);

struct Propagation {
    Point point;
    std::vector<RelationViolation> inconsistencies;
    bool consistent() const { return inconsistencies.empty(); }
};

/// Extends p through the exchange relations of e until nothing changes.
Propagation propagate_point(const Point& p, const Exploration& e);

using VanishingPair = std::pair<std::size_t, std::size_t>;

/// First (a, j) with a in V mutable, j in V and B_aj != 0, or nullopt.
std::optional<VanishingPair> check_no_adjacent_vanishing(const Seed& s, const VanishingPattern& v);

struct NoForcedSuccessor {
    std::vector<std::size_t> walk;
};

/// Follows smallest forced successors c in V with B_bc > 0 starting from the
/// edge a -> b (swapped when B_ab < 0).  Returns a closed walk, first == last.
std::variant<std::vector<std::size_t>, NoForcedSuccessor> trace_vanishing_cycle(const Seed& s, const VanishingPattern& v,
                                                                               std::size_t a, std::size_t b);

struct HypothesisViolated {
    VanishingPair pair;
};

/// Rewrites omega so that no denominator involves a variable of V.  Requires
/// a skew-symmetric mutable part.
std::variant<SymbolicForm, HypothesisViolated> regularize_at(const Seed& s, const VanishingPattern& v);

/// Generator names occurring in some denominator of f.
std::set<std::string> denominator_support(const SymbolicForm& f);

using PatternOracle = std::function<std::optional<VanishingPattern>(const Seed&)>;

struct RegularizingSeed {
    Seed seed;
    std::size_t depth = 0;
    VanishingPattern pattern;
    SymbolicForm form;
};

/// Breadth-first over the exchange graph; the first seed whose pattern
/// regularizes wins.  Seeds the oracle cannot classify are skipped.
std::optional<RegularizingSeed> find_regularizing_seed(const Seed& start, const PatternOracle& oracle,
                                                       std::size_t max_seeds, std::size_t max_depth);

/// Ambient generator count minus the rank of the relation Jacobian at p.
std::size_t tangent_dimension(const Presentation& presentation, const Point& p);

enum class ClusterStatus { has_zero, all_nonzero, undetermined };

struct DeepWitness {
    std::vector<ClusterStatus> clusters;
    bool all_avoided = false;
    bool truncated = false;
    bool certified() const { return all_avoided && !truncated; }
    bool relative() const { return all_avoided && truncated; }
};

DeepWitness deep_witness(const Point& p, const Exploration& e);

}  // namespace clusterwp
