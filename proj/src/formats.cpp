#include "clusterwp/toolkit.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace clusterwp {

FileError::FileError(const std::string& file, std::size_t line, const std::string& cause)
    : std::runtime_error(line ? file + ":" + std::to_string(line) + ": " + cause : file + ": " + cause) {}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError(path, 0, "cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

/// Non-blank lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(pos, end - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string t = trim(raw);
        if (!t.empty()) out.push_back(Line{number, std::move(t)});
        pos = end + 1;
    }
    return out;
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
    return true;
}

long parse_count(const std::string& w, const std::string& file, std::size_t line, const std::string& what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(w, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != w.size()) throw FileError(file, line, what + " '" + w + "' is not an integer");
    return v;
}

}  // namespace

// ---- Seeds ---------------------------------------------------------------------------

Seed parse_seed(std::string_view text, const std::string& filename) {
    std::optional<long> rank, mut;
    std::optional<std::vector<std::string>> names;
    std::vector<std::pair<std::size_t, std::vector<long>>> rows;
    std::size_t last_line = 0;

    for (const Line& line : content_lines(text)) {
        last_line = line.number;
        auto w = words(line.text);
        const std::string& key = w.front();
        std::vector<std::string> args(w.begin() + 1, w.end());
        auto single = [&](std::optional<long>& slot) {
            if (slot) throw FileError(filename, line.number, "duplicate '" + key + "' line");
            if (args.size() != 1) throw FileError(filename, line.number, "'" + key + "' takes one integer");
            slot = parse_count(args[0], filename, line.number, key);
            if (*slot < 0) throw FileError(filename, line.number, "'" + key + "' must be nonnegative");
        };
        if (key == "rank") {
            single(rank);
        } else if (key == "mutable") {
            single(mut);
        } else if (key == "names") {
            if (names) throw FileError(filename, line.number, "duplicate 'names' line");
            std::set<std::string> seen;
            for (const auto& a : args) {
                if (!is_identifier(a)) throw FileError(filename, line.number, "invalid variable name '" + a + "'");
                if (!seen.insert(a).second) throw FileError(filename, line.number, "duplicate variable name '" + a + "'");
            }
            names = args;
        } else if (key == "row") {
            std::vector<long> row;
            for (const auto& a : args) row.push_back(parse_count(a, filename, line.number, "entry"));
            rows.emplace_back(line.number, std::move(row));
        } else {
            throw FileError(filename, line.number, "unknown keyword '" + key + "'");
        }
    }

    if (!rank) throw FileError(filename, last_line, "missing 'rank' line");
    if (!mut) throw FileError(filename, last_line, "missing 'mutable' line");
    if (!names) throw FileError(filename, last_line, "missing 'names' line");
    const auto n = static_cast<std::size_t>(*rank), m = static_cast<std::size_t>(*mut);
    if (m > n) throw FileError(filename, last_line, "mutable count exceeds rank");
    if (names->size() != n)
        throw FileError(filename, last_line,
                        "expected " + std::to_string(n) + " names, found " + std::to_string(names->size()));
    if (rows.size() != m)
        throw FileError(filename, last_line,
                        "expected " + std::to_string(m) + " rows, found " + std::to_string(rows.size()));
    std::vector<long> entries;
    for (const auto& [number, row] : rows) {
        if (row.size() != n)
            throw FileError(filename, number,
                            "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
        entries.insert(entries.end(), row.begin(), row.end());
    }
    ExchangeMatrix matrix(m, n, std::move(entries));
    auto d = find_skew_symmetrizer(matrix);
    if (auto* bad = std::get_if<NotSkewSymmetrizable>(&d))
        throw FileError(filename, rows[bad->i].first,
                        "not skew-symmetrizable at pair (" + std::to_string(bad->i + 1) + "," +
                            std::to_string(bad->j + 1) + "): " + bad->reason);
    return Seed(std::move(matrix), std::move(*names), std::make_shared<PrimeNaming>());
}

std::string emit_seed(const Seed& s) {
    std::ostringstream os;
    os << "rank " << s.size() << "\n";
    os << "mutable " << s.mutable_count() << "\n";
    os << "names";
    for (const auto& name : s.names()) os << " " << name;
    os << "\n";
    for (std::size_t i = 0; i < s.mutable_count(); ++i) {
        os << "row";
        for (std::size_t j = 0; j < s.size(); ++j) os << " " << s.matrix()(i, j);
        os << "\n";
    }
    return os.str();
}

// ---- Points --------------------------------------------------------------------------

Point parse_point(std::string_view text, const std::string& filename) {
    Point p;
    for (const Line& line : content_lines(text)) {
        auto eq = line.text.find('=');
        if (eq == std::string::npos) throw FileError(filename, line.number, "expected '<name> = <value>'");
        std::string name = trim(std::string_view(line.text).substr(0, eq));
        std::string value = trim(std::string_view(line.text).substr(eq + 1));
        if (!is_identifier(name)) throw FileError(filename, line.number, "invalid generator name '" + name + "'");
        GaussianRational v;
        try {
            v = GaussianRational::parse(value);
        } catch (const std::exception& ex) {
            throw FileError(filename, line.number, ex.what());
        }
        if (!p.emplace(name, v).second) throw FileError(filename, line.number, "duplicate assignment to '" + name + "'");
    }
    return p;
}

std::string emit_point(const Point& p) {
    std::ostringstream os;
    for (const auto& [name, v] : p) os << name << " = " << v.str() << "\n";
    return os.str();
}

// ---- Forms ---------------------------------------------------------------------------

SymbolicForm parse_form(std::string_view text, const Seed& chart, const std::string& filename) {
    const auto lines = content_lines(text);
    std::vector<std::string> names = chart.names();
    std::vector<std::pair<Line, std::string>> gen_lines;
    std::vector<Line> term_lines;

    for (const Line& line : lines) {
        if (line.text.rfind("gen", 0) == 0 && line.text.size() > 3 && std::isspace(static_cast<unsigned char>(line.text[3]))) {
            auto eq = line.text.find('=');
            if (eq == std::string::npos) throw FileError(filename, line.number, "expected 'gen <name> = <expr>'");
            std::string name = trim(std::string_view(line.text).substr(3, eq - 3));
            if (!is_identifier(name)) throw FileError(filename, line.number, "invalid generator name '" + name + "'");
            if (std::find(names.begin(), names.end(), name) != names.end())
                throw FileError(filename, line.number, "generator '" + name + "' is already defined");
            names.push_back(name);
            gen_lines.emplace_back(line, trim(std::string_view(line.text).substr(eq + 1)));
        } else {
            term_lines.push_back(line);
        }
    }

    const VarTablePtr gens = make_vars(names);
    std::map<std::string, RationalFn> expansions;
    for (std::size_t j = 0; j < chart.size(); ++j)
        expansions.emplace(chart.names()[j], RationalFn(LaurentPoly::variable(chart.chart_vars(), chart.names()[j])));
    for (std::size_t g = 0; g < gen_lines.size(); ++g) {
        const auto& [line, expr] = gen_lines[g];
        try {
            expansions.emplace(names[chart.size() + g], parse_expression(expr, chart.chart_vars()));
        } catch (const std::exception& ex) {
            throw FileError(filename, line.number, ex.what());
        }
    }

    SymbolicForm form(gens, std::move(expansions));
    for (const Line& line : term_lines) {
        auto first = line.text.find(';');
        auto second = first == std::string::npos ? first : line.text.find(';', first + 1);
        if (second == std::string::npos || line.text.find(';', second + 1) != std::string::npos)
            throw FileError(filename, line.number, "expected '<coeff> ; <gen> ; <gen>'");
        std::string coeff = trim(std::string_view(line.text).substr(0, first));
        std::string g = trim(std::string_view(line.text).substr(first + 1, second - first - 1));
        std::string h = trim(std::string_view(line.text).substr(second + 1));
        for (const auto& name : {g, h})
            if (!gens->contains(name)) throw FileError(filename, line.number, "unknown generator '" + name + "'");
        try {
            form.add_term(parse_expression(coeff, gens), g, h);
        } catch (const std::exception& ex) {
            throw FileError(filename, line.number, ex.what());
        }
    }
    return form;
}

}  // namespace clusterwp
