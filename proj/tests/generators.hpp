#pragma once

#include "clusterwp/seeds.hpp"

#include <random>
#include <string>
#include <vector>

namespace generators {

using namespace clusterwp;

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    GaussianRational coeff() {
        Rational re(integer(-5, 5), integer(1, 4));
        Rational im = integer(0, 3) == 0 ? Rational(integer(-3, 3), integer(1, 3)) : Rational(0);
        GaussianRational c(re, im);
        return c.is_zero() ? GaussianRational(1) : c;
    }

    LaurentPoly laurent(const VarTablePtr& v, int max_terms = 4, int lo = -2, int hi = 2) {
        std::vector<LaurentPoly::Term> terms;
        const long count = integer(1, max_terms);
        for (long t = 0; t < count; ++t) {
            std::vector<int> e(v->size());
            for (auto& x : e) x = static_cast<int>(integer(lo, hi));
            terms.emplace_back(Monomial(e), coeff());
        }
        LaurentPoly p = LaurentPoly::from_terms(v, std::move(terms));
        return p.is_zero() ? LaurentPoly::constant(v, 1) : p;
    }

    LaurentPoly polynomial(const VarTablePtr& v) { return laurent(v, 3, 0, 2); }

    /// B_ij = s_ij d_j, B_ji = -s_ij d_i on the mutable block; random frozen columns.
    ExchangeMatrix skew_symmetrizable(std::size_t m, std::size_t n, bool unit_d = false) {
        std::vector<long> d(m);
        for (auto& x : d) x = unit_d ? 1 : integer(1, 2);
        std::vector<long> b(m * n, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const long s = integer(-1, 1);
                b[i * n + j] = s * d[j];
                b[j * n + i] = -s * d[i];
            }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = m; j < n; ++j) b[i * n + j] = integer(-1, 1);
        return ExchangeMatrix(m, n, std::move(b));
    }

    Seed seed(bool unit_d = false) {
        const auto n = static_cast<std::size_t>(integer(2, 4));
        const auto m = static_cast<std::size_t>(integer(1, static_cast<long>(n)));
        std::vector<std::string> names;
        for (std::size_t k = 0; k < n; ++k) names.push_back("v" + std::to_string(k));
        return Seed(skew_symmetrizable(m, n, unit_d), names);
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace generators
