/*
 * toolkit.hpp
 * -----------
 * Built-in example seeds, the text file formats, and the command line.
 *
 * Seed file:   rank <n> / mutable <m> / names <n identifiers> / m x `row <n ints>`
 * Point file:  <name> = <gaussian rational literal>
 * Form file:   gen <name> = <expr>  (expansion in the chart variables)
 *              <coeff expr> ; <gen> ; <gen>
 * All formats are line oriented; `#` starts a comment.
 */
#pragma once

#include "clusterwp/regularity.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clusterwp {

struct CatalogEntry {
    std::string key;
    std::string title;
    Seed seed;
    std::vector<std::pair<std::string, Point>> points;
    std::vector<std::pair<std::string, SymbolicForm>> forms;
    Weights weights;

    const Point& point(const std::string& name) const;
    const SymbolicForm& form(const std::string& name) const;
};

std::vector<std::string> catalog_keys();
/// Throws std::invalid_argument on an unknown key.
CatalogEntry catalog(const std::string& key);
/// Key of the catalog entry whose matrix and names equal s's, if any.
std::optional<std::string> catalog_match(const Seed& s);

/// Diagnostic carrying "file:line: cause"; line 0 means the whole file.
struct FileError : std::runtime_error {
    FileError(const std::string& file, std::size_t line, const std::string& cause);
};

std::string read_text_file(const std::string& path);

Seed parse_seed(std::string_view text, const std::string& filename = "<seed>");
std::string emit_seed(const Seed& s);

Point parse_point(std::string_view text, const std::string& filename = "<point>");
std::string emit_point(const Point& p);

/// Generators are the chart's cluster plus every `gen` line, in order.
SymbolicForm parse_form(std::string_view text, const Seed& chart, const std::string& filename = "<form>");

/// Exit codes: 0 success or true, 1 property false, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clusterwp
