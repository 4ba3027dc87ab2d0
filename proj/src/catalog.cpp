#include "clusterwp/toolkit.hpp"

#include <algorithm>

namespace clusterwp {

namespace {

CatalogEntry make_sl2() {
    CatalogEntry e;
    e.key = "sl2";
    e.title = "open double Bruhat cell in SL2";
    e.seed = Seed(ExchangeMatrix{{0, 1, 1}}, {"x", "c1", "c2"}, std::make_shared<PrimeNaming>());
    e.points.emplace_back("deep", Point{{"x", 0}, {"x'", 0}, {"c1", 2}, {"c2", Rational(-1, 2)}});
    e.forms.emplace_back("regular", parse_form("gen x' = x^-1*c1*c2 + x^-1\n"
                                               "1/(c1*c2) ; x ; x'\n",
                                               e.seed, "sl2:regular"));
    e.weights = {{"x", 1}, {"c1", 1}, {"c2", 1}};
    return e;
}

CatalogEntry make_a3() {
    CatalogEntry e;
    e.key = "a3";
    e.title = "type A3, diagonals of a hexagon";
    e.seed = Seed(ExchangeMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}, {"x13", "x14", "x15"},
                  std::make_shared<PolygonNaming>(6));
    Point deep;
    for (const char* shorts : {"x13", "x24", "x35", "x46", "x15", "x26"}) deep.emplace(shorts, 0);
    for (const char* longs : {"x14", "x25", "x36"}) deep.emplace(longs, -1);
    e.points.emplace_back("deep", deep);
    e.forms.emplace_back("regular", parse_form("gen x24 = (x14 + 1)/x13\n"
                                               "gen x46 = (x14 + 1)/x15\n"
                                               "x14^-1 ; x13 ; x24\n"
                                               "x14^-1 ; x46 ; x15\n",
                                               e.seed, "a3:regular"));
    e.weights = {{"x13", 1}, {"x14", 1}, {"x15", 1}};
    return e;
}

GaussianRational affine_value(long j, long k) {
    auto mod = [](long a, long m) { return ((a % m) + m) % m; };
    if (mod(k - j, 4) == 0) return GaussianRational::i();
    if (mod(k - j, 4) == 2) return -GaussianRational::i();
    return GaussianRational(0);
}

CatalogEntry make_affine() {
    CatalogEntry e;
    e.key = "affine-a11";
    e.title = "affine type A(1,1), Kronecker quiver";
    e.seed = Seed(ExchangeMatrix{{0, 2}, {-2, 0}}, {"x0", "x1"}, std::make_shared<IndexedNaming>());
    for (long j = 0; j < 4; ++j) {
        Point p;
        for (long k = -2; k <= 5; ++k) p.emplace(IndexedNaming::name(k), affine_value(j, k));
        e.points.emplace_back("p" + std::to_string(j), p);
    }
    const std::string gens =
        "gen x2 = (x1^2 + 1)/x0\n"
        "gen x3 = ((x1^2 + 1)^2 + x0^2)/(x0^2*x1)\n";
    e.forms.emplace_back("global", parse_form(gens +
                                                  "x0*x3 ; x1 ; x2\n"
                                                  "-1/2*x1*x3 ; x0 ; x2\n"
                                                  "-1/2*x0*x2 ; x1 ; x3\n"
                                                  "x1*x2 ; x1 ; x2\n",
                                              e.seed, "affine-a11:global"));
    e.forms.emplace_back("odd", parse_form("gen x2 = (x1^2 + 1)/x0\n"
                                           "x1^-2 ; x0 ; x2\n",
                                           e.seed, "affine-a11:odd"));
    e.forms.emplace_back("even", parse_form("gen xm1 = (x0^2 + 1)/x1\n"
                                            "x0^-2 ; xm1 ; x1\n",
                                            e.seed, "affine-a11:even"));
    e.weights = {{"x0", 1}, {"x1", 1}};
    return e;
}

CatalogEntry make_markov() {
    CatalogEntry e;
    e.key = "markov";
    e.title = "Markov cluster algebra";
    e.seed = Seed(ExchangeMatrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}, {"x1", "x2", "x3"},
                  std::make_shared<PrimeNaming>());
    e.points.emplace_back("p0", Point{{"x1", 0}, {"x2", 0}, {"x3", 0}});
    e.weights = {{"x1", 1}, {"x2", 1}, {"x3", 1}};
    return e;
}

}  // namespace

const Point& CatalogEntry::point(const std::string& name) const {
    for (const auto& [n, p] : points)
        if (n == name) return p;
    throw std::invalid_argument("catalog entry '" + key + "' has no point '" + name + "'");
}

const SymbolicForm& CatalogEntry::form(const std::string& name) const {
    for (const auto& [n, f] : forms)
        if (n == name) return f;
    throw std::invalid_argument("catalog entry '" + key + "' has no form '" + name + "'");
}

std::vector<std::string> catalog_keys() { return {"sl2", "a3", "affine-a11", "markov"}; }

CatalogEntry catalog(const std::string& key) {
    if (key == "sl2") return make_sl2();
    if (key == "a3") return make_a3();
    if (key == "affine-a11") return make_affine();
    if (key == "markov") return make_markov();
    throw std::invalid_argument("unknown catalog key '" + key + "' (known: sl2, a3, affine-a11, markov)");
}

std::optional<std::string> catalog_match(const Seed& s) {
    for (const auto& key : catalog_keys()) {
        CatalogEntry e = catalog(key);
        if (e.seed.matrix() == s.matrix() && e.seed.names() == s.names()) return key;
    }
    return std::nullopt;
}

}  // namespace clusterwp
