#include "clusterwp/toolkit.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

namespace clusterwp {

namespace {

struct SeedSource {
    Seed seed;
    std::optional<CatalogEntry> entry;
};

SeedSource resolve_seed(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) {
        Seed s = parse_seed(read_text_file(arg), arg);
        if (auto key = catalog_match(s)) {
            CatalogEntry e = catalog(*key);
            return SeedSource{s.with_naming(e.seed.naming()), std::move(e)};
        }
        return SeedSource{s, std::nullopt};
    }
    const auto keys = catalog_keys();
    if (std::find(keys.begin(), keys.end(), arg) != keys.end()) {
        CatalogEntry e = catalog(arg);
        Seed s = e.seed;
        return SeedSource{std::move(s), std::move(e)};
    }
    throw FileError(arg, 0, "no such file or catalog key");
}

const CatalogEntry& require_entry(const SeedSource& src, const std::string& ref) {
    if (!src.entry) throw std::invalid_argument("'" + ref + "' needs a catalog seed");
    return *src.entry;
}

Point resolve_point(const std::string& arg, const SeedSource& src) {
    if (!arg.empty() && arg[0] == '@') return require_entry(src, arg).point(arg.substr(1));
    return parse_point(read_text_file(arg), arg);
}

ChartForm resolve_form(const std::string& arg, const SeedSource& src) {
    if (arg == "@wp") return wp_form(src.seed);
    if (!arg.empty() && arg[0] == '@') return reduce_to_chart(require_entry(src, arg).form(arg.substr(1)), src.seed);
    return reduce_to_chart(parse_form(read_text_file(arg), src.seed, arg), src.seed);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

long parse_long(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size()) throw std::invalid_argument(what + " '" + s + "' is not an integer");
    return v;
}

std::size_t chart_index(long one_based, const Seed& s, bool mutable_only) {
    const std::size_t limit = mutable_only ? s.mutable_count() : s.size();
    if (one_based < 1 || static_cast<std::size_t>(one_based) > limit)
        throw std::invalid_argument("index " + std::to_string(one_based) + " is outside 1.." + std::to_string(limit));
    return static_cast<std::size_t>(one_based - 1);
}

std::string join_indices(const std::vector<std::size_t>& v, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k] + 1);
    return out;
}

std::string join_names(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + v[k];
    return out;
}

std::string pattern_names(const Seed& s, const VanishingPattern& v) {
    std::vector<std::string> names;
    for (std::size_t k : v) names.push_back(s.names()[k]);
    return "{" + join_names(names) + "}";
}

SeedFilter window_filter(const std::string& window) {
    if (window.empty()) return {};
    auto parts = split(window, ':');
    if (parts.size() != 2) throw std::invalid_argument("window must be LO:HI");
    const long lo = parse_long(parts[0], "window bound"), hi = parse_long(parts[1], "window bound");
    if (lo > hi) throw std::invalid_argument("empty window " + window);
    return [lo, hi](const Seed& s) {
        return std::all_of(s.names().begin(), s.names().end(), [&](const std::string& name) {
            auto k = IndexedNaming::index(name);
            return k && *k >= lo && *k <= hi;
        });
    };
}

std::string form_text(const ChartForm& f) {
    std::string s = f.str();
    return s.empty() ? "0\n" : s;
}

// ---- Subcommands -------------------------------------------------------------------

int cmd_catalog(const std::string& key, const std::string& point, const std::string& form, std::ostream& out) {
    CatalogEntry e = catalog(key);
    if (!point.empty()) {
        out << emit_point(e.point(point));
    } else if (!form.empty()) {
        out << e.form(form).str();
    } else {
        out << emit_seed(e.seed);
    }
    return 0;
}

int cmd_mutate(const SeedSource& src, const std::vector<long>& ks, std::ostream& out) {
    Seed cur = src.seed;
    for (long k : ks) cur = mutate_seed(cur, chart_index(k, cur, true));
    out << emit_seed(cur);
    for (std::size_t j = 0; j < cur.size(); ++j) out << "# " << cur.names()[j] << " = " << cur.expansions()[j].str() << "\n";
    return 0;
}

int cmd_explore(const SeedSource& src, std::size_t max_seeds, std::size_t max_depth, const std::string& window,
                std::ostream& out) {
    Exploration e = explore(src.seed, max_seeds, max_depth, window_filter(window));
    out << "clusters " << e.seeds.size() << "\n";
    out << "variables " << e.variables.size() << "\n";
    out << "truncated " << (e.truncated ? "yes" : "no") << "\n";
    for (std::size_t s = 0; s < e.seeds.size(); ++s)
        out << "cluster " << s + 1 << " depth " << e.depth[s] << ": " << join_names(e.seeds[s].names()) << "\n";
    for (const auto& [name, poly] : e.variables) out << "variable " << name << " = " << poly.str() << "\n";
    return 0;
}

int cmd_acyclic(const SeedSource& src, std::size_t search, std::ostream& out) {
    auto result = is_acyclic(src.seed.matrix());
    if (result.acyclic) {
        out << "acyclic\n";
        return 0;
    }
    out << "cyclic: " << join_indices(result.cycle, " -> ") << "\n";
    if (search == 0) return 1;
    if (auto found = find_acyclic_seed(src.seed, search)) {
        out << "acyclic seed at depth " << found->path.size() << " via mutations " << join_indices(found->path, ",")
            << "\n";
        out << emit_seed(found->seed);
        return 0;
    }
    out << "no acyclic seed within " << search << " seeds (semi-decision)\n";
    return 1;
}

int cmd_present(const SeedSource& src, std::ostream& out) {
    auto cyc = is_acyclic(src.seed.matrix());
    if (!cyc.acyclic) {
        out << "no acyclic presentation: cycle " << join_indices(cyc.cycle, " -> ") << "\n";
        return 1;
    }
    Presentation p = acyclic_presentation(src.seed);
    out << "generators " << join_names(p.generators->names()) << "\n";
    if (!p.frozen.empty()) out << "frozen " << join_names({p.frozen.begin(), p.frozen.end()}) << "\n";
    for (const auto& rel : p.relations) out << "relation " << rel.str() << "\n";
    for (const auto& [name, poly] : p.primed) out << "gen " << name << " = " << poly.str() << "\n";
    return 0;
}

int cmd_equal(const SeedSource& src, const std::string& a, const std::string& b, std::ostream& out) {
    ChartForm fa = resolve_form(a, src), fb = resolve_form(b, src);
    if (forms_equal(fa, fb)) {
        out << "equal\n";
        return 0;
    }
    out << "not equal\ndifference:\n" << form_text(difference(fa, fb));
    return 1;
}

int cmd_invariance(const SeedSource& src, std::size_t depth, std::ostream& out) {
    InvarianceReport report = check_invariance(src.seed, depth);
    for (const auto& r : report.sequences)
        out << "mu " << join_indices(r.sequence, ",") << ": " << (r.pass ? "pass" : "FAIL") << "\n";
    const auto failures = report.failures();
    out << (failures.empty() ? "all pass" : std::to_string(failures.size()) + " failing") << " ("
        << report.sequences.size() << " sequences)\n";
    return failures.empty() ? 0 : 1;
}

int report_violation(const Seed& s, const VanishingPattern& v, const HypothesisViolated& h, std::ostream& out) {
    const auto [a, b] = h.pair;
    out << "hypothesis violated: " << s.names()[a] << " and " << s.names()[b] << " vanish with B(" << a + 1 << ","
        << b + 1 << ") = " << s.matrix()(a, b) << "\n";
    if (!s.is_frozen(b)) {
        auto traced = trace_vanishing_cycle(s, v, a, b);
        if (auto* cycle = std::get_if<std::vector<std::size_t>>(&traced))
            out << "forced cycle: " << join_indices(*cycle, " -> ") << "\n";
        else
            out << "no forced successor after " << join_indices(std::get<NoForcedSuccessor>(traced).walk, " -> ")
                << "\n";
    }
    return 1;
}

void print_regularized(const Seed& s, const VanishingPattern& v, const SymbolicForm& f, std::ostream& out) {
    const auto denoms = denominator_support(f);
    out << "chart " << join_names(s.names()) << "\n";
    out << "pattern " << pattern_names(s, v) << "\n";
    out << f.str();
    out << "denominators " << join_names({denoms.begin(), denoms.end()}) << "\n";
    out << "reduces to omega " << (forms_equal(reduce_to_chart(f, s), wp_form(s)) ? "yes" : "no") << "\n";
}

int cmd_regularize(const SeedSource& src, const std::string& point_arg, const std::string& pattern_arg,
                   std::size_t search, std::size_t max_depth, std::ostream& out) {
    const Seed& start = src.seed;
    PatternOracle oracle;
    if (!point_arg.empty()) {
        const Point p = resolve_point(point_arg, src);
        const Exploration e = explore(start, std::max<std::size_t>(search, 1), search ? max_depth : 0);
        Propagation prop = propagate_point(p, e);
        if (!prop.consistent()) {
            out << "point is inconsistent: " << prop.inconsistencies.front().str() << "\n";
            return 1;
        }
        oracle = [q = prop.point](const Seed& s) -> std::optional<VanishingPattern> {
            try {
                return vanishing_pattern(q, s);
            } catch (const std::invalid_argument&) {
                return std::nullopt;
            }
        };
    } else if (pattern_arg == "all") {
        oracle = [](const Seed& s) {
            VanishingPattern v;
            for (std::size_t k = 0; k < s.mutable_count(); ++k) v.insert(k);
            return std::optional<VanishingPattern>(v);
        };
    } else {
        VanishingPattern v;
        for (const auto& part : split(pattern_arg, ','))
            v.insert(chart_index(parse_long(part, "pattern index"), start, true));
        oracle = [v, key = start.expansions()](const Seed& s) -> std::optional<VanishingPattern> {
            if (s.expansions() != key) return std::nullopt;
            return v;
        };
    }

    if (search == 0) {
        auto v = oracle(start);
        if (!v) throw std::invalid_argument("the point does not assign every variable of the chart");
        auto result = regularize_at(start, *v);
        if (auto* h = std::get_if<HypothesisViolated>(&result)) return report_violation(start, *v, *h, out);
        print_regularized(start, *v, std::get<SymbolicForm>(result), out);
        return 0;
    }
    if (auto found = find_regularizing_seed(start, oracle, search, max_depth)) {
        out << "regularizing seed at depth " << found->depth << "\n";
        print_regularized(found->seed, found->pattern, found->form, out);
        return 0;
    }
    out << "no regularizing seed within " << search << " seeds and depth " << max_depth << " (semi-decision)\n";
    return 1;
}

int cmd_tangent(const SeedSource& src, const std::string& point_arg, std::ostream& out) {
    auto cyc = is_acyclic(src.seed.matrix());
    if (!cyc.acyclic)
        throw std::invalid_argument("tangent dimension needs an acyclic seed; cycle " + join_indices(cyc.cycle, " -> "));
    const Presentation p = acyclic_presentation(src.seed);
    Point point = resolve_point(point_arg, src);
    if (!std::all_of(p.generators->names().begin(), p.generators->names().end(),
                     [&](const std::string& g) { return point.count(g); }))
        point = propagate_point(point, explore(src.seed, 1 + src.seed.mutable_count(), 1)).point;
    out << tangent_dimension(p, point) << "\n";
    return 0;
}

int cmd_grade(const SeedSource& src, const std::string& weights_arg, std::ostream& out) {
    Weights w;
    if (weights_arg.empty()) {
        for (const auto& name : src.seed.names()) w[name] = 1;
    } else {
        auto parts = split(weights_arg, ',');
        if (parts.size() != src.seed.size())
            throw std::invalid_argument("expected " + std::to_string(src.seed.size()) + " weights");
        for (std::size_t k = 0; k < parts.size(); ++k) w[src.seed.names()[k]] = parse_long(parts[k], "weight");
    }
    auto d = form_degree(wp_form(src.seed), w);
    if (!d) {
        out << "inhomogeneous\n";
        return 1;
    }
    out << *d << "\n";
    return 0;
}

int cmd_verify(const SeedSource& src, const std::string& point_arg, std::size_t max_seeds, std::size_t max_depth,
               const std::string& window, std::ostream& out) {
    const Point p = resolve_point(point_arg, src);
    const Exploration e = explore(src.seed, max_seeds, max_depth, window_filter(window));
    PointCheck check = verify_point(p, exploration_relations(e));
    if (is_acyclic(src.seed.matrix()).acyclic) {
        PointCheck extra = verify_point(p, acyclic_presentation(src.seed));
        check.violations.insert(check.violations.end(), extra.violations.begin(), extra.violations.end());
    }
    if (check.valid()) {
        out << "valid\n";
        return 0;
    }
    for (const auto& v : check.violations) out << "violated " << v.str() << "\n";
    return 1;
}

int cmd_deep(const SeedSource& src, const std::string& point_arg, std::size_t max_seeds, std::size_t max_depth,
             const std::string& window, std::ostream& out) {
    const Point p = resolve_point(point_arg, src);
    const Exploration e = explore(src.seed, max_seeds, max_depth, window_filter(window));
    Propagation prop = propagate_point(p, e);
    if (!prop.consistent()) {
        for (const auto& v : prop.inconsistencies) out << "inconsistent " << v.str() << "\n";
        return 1;
    }
    DeepWitness w = deep_witness(prop.point, e);
    std::size_t open = 0;
    for (std::size_t s = 0; s < e.seeds.size(); ++s) {
        out << "cluster " << s + 1 << " " << join_names(e.seeds[s].names()) << ": ";
        switch (w.clusters[s]) {
            case ClusterStatus::has_zero: {
                const auto& names = e.seeds[s].names();
                auto zero = std::find_if(names.begin(), names.end(), [&](const std::string& n) {
                    auto it = prop.point.find(n);
                    return it != prop.point.end() && it->second.is_zero();
                });
                out << "avoided (" << *zero << " = 0)\n";
                break;
            }
            case ClusterStatus::all_nonzero: out << "torus point\n"; ++open; break;
            case ClusterStatus::undetermined: out << "undetermined\n"; ++open; break;
        }
    }
    if (w.certified()) {
        out << "certified deep\n";
        return 0;
    }
    if (w.relative()) {
        out << "deep relative to a truncated exploration of " << e.seeds.size() << " clusters\n";
        return 0;
    }
    out << "not certified: " << open << " clusters not avoided\n";
    return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Weil-Petersson form toolkit for cluster algebras", "clusterwp"};
    app.require_subcommand(1);
    app.fallthrough(false);

    std::string seed_arg, point_arg, pattern_arg, form_arg, weights_arg, window, form_a, form_b, key;
    std::vector<long> ks;
    std::size_t max_seeds = 100, max_depth = 64, depth = 1, search = 0;

    auto* c_catalog = app.add_subcommand("catalog", "Emit a built-in seed, point or form");
    c_catalog->add_option("key", key, "sl2, a3, affine-a11 or markov")->required();
    c_catalog->add_option("--point", point_arg, "Emit the named point instead");
    c_catalog->add_option("--form", form_arg, "Emit the named form instead");

    auto* c_mutate = app.add_subcommand("mutate", "Apply a mutation sequence");
    c_mutate->add_option("seed", seed_arg, "Seed file or catalog key")->required();
    c_mutate->add_option("k", ks, "1-based mutable indices")->required();

    auto* c_explore = app.add_subcommand("explore", "Breadth-first exchange graph exploration");
    c_explore->add_option("seed", seed_arg)->required();
    c_explore->add_option("--max-seeds", max_seeds)->capture_default_str();
    c_explore->add_option("--max-depth", max_depth)->capture_default_str();
    c_explore->add_option("--window", window, "Index window LO:HI for x<k> names");

    auto* c_acyclic = app.add_subcommand("acyclic", "Test acyclicity, optionally searching for an acyclic seed");
    c_acyclic->add_option("seed", seed_arg)->required();
    c_acyclic->add_option("--search", search, "Seed budget for the search");

    auto* c_present = app.add_subcommand("present", "Presentation from an acyclic seed");
    c_present->add_option("seed", seed_arg)->required();

    auto* c_wp = app.add_subcommand("wp", "Weil-Petersson form in the seed's chart");
    c_wp->add_option("seed", seed_arg)->required();

    auto* c_equal = app.add_subcommand("equal", "Compare two forms on the seed's chart");
    c_equal->add_option("seed", seed_arg)->required();
    c_equal->add_option("a", form_a, "Form file, @wp or @<catalog form>")->required();
    c_equal->add_option("b", form_b, "Form file, @wp or @<catalog form>")->required();

    auto* c_inv = app.add_subcommand("invariance", "Check mutation invariance of the form");
    c_inv->add_option("seed", seed_arg)->required();
    c_inv->add_option("--depth", depth)->capture_default_str();

    auto* c_reg = app.add_subcommand("regularize", "Local regularization at a point or pattern");
    c_reg->add_option("seed", seed_arg)->required();
    auto* reg_point = c_reg->add_option("--point", point_arg, "Point file or @<catalog point>");
    auto* reg_pattern = c_reg->add_option("--pattern", pattern_arg, "1-based indices i,j,... or 'all'");
    reg_point->excludes(reg_pattern);
    c_reg->add_option("--search", search, "Seed budget for a regularizing seed search");
    std::size_t reg_depth = 3;
    c_reg->add_option("--max-depth", reg_depth)->capture_default_str();

    auto* c_tan = app.add_subcommand("tangent", "Zariski tangent dimension at a point");
    c_tan->add_option("seed", seed_arg)->required();
    c_tan->add_option("--point", point_arg)->required();

    auto* c_grade = app.add_subcommand("grade", "Degree of the form under a grading");
    c_grade->add_option("seed", seed_arg)->required();
    c_grade->add_option("--weights", weights_arg, "w1,...,wn (default all 1)");

    auto* c_verify = app.add_subcommand("verify", "Check a point against the exchange relations");
    c_verify->add_option("seed", seed_arg)->required();
    c_verify->add_option("--point", point_arg)->required();
    c_verify->add_option("--max-seeds", max_seeds)->capture_default_str();
    c_verify->add_option("--max-depth", max_depth)->capture_default_str();
    c_verify->add_option("--window", window);

    auto* c_deep = app.add_subcommand("deep", "Certify a deep point against an exploration");
    c_deep->add_option("seed", seed_arg)->required();
    c_deep->add_option("--point", point_arg)->required();
    c_deep->add_option("--max-seeds", max_seeds)->required();
    c_deep->add_option("--max-depth", max_depth)->capture_default_str();
    c_deep->add_option("--window", window);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_catalog->parsed()) return cmd_catalog(key, point_arg, form_arg, out);
        if (max_seeds == 0) throw std::invalid_argument("--max-seeds must be at least 1");
        const SeedSource src = resolve_seed(seed_arg);
        if (c_mutate->parsed()) return cmd_mutate(src, ks, out);
        if (c_explore->parsed()) return cmd_explore(src, max_seeds, max_depth, window, out);
        if (c_acyclic->parsed()) return cmd_acyclic(src, search, out);
        if (c_present->parsed()) return cmd_present(src, out);
        if (c_wp->parsed()) {
            out << form_text(wp_form(src.seed));
            return 0;
        }
        if (c_equal->parsed()) return cmd_equal(src, form_a, form_b, out);
        if (c_inv->parsed()) return cmd_invariance(src, depth, out);
        if (c_reg->parsed()) {
            if (point_arg.empty() && pattern_arg.empty())
                throw std::invalid_argument("regularize needs --point or --pattern");
            return cmd_regularize(src, point_arg, pattern_arg, search, reg_depth, out);
        }
        if (c_tan->parsed()) return cmd_tangent(src, point_arg, out);
        if (c_grade->parsed()) return cmd_grade(src, weights_arg, out);
        if (c_verify->parsed()) return cmd_verify(src, point_arg, max_seeds, max_depth, window, out);
        if (c_deep->parsed()) return cmd_deep(src, point_arg, max_seeds, max_depth, window, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace clusterwp
