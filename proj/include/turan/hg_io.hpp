#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "turan/family.hpp"

namespace turan {

// ".hg" text format: first data line "<n> <k>", then one edge per line as k
// ascending vertices separated by single spaces. Lines starting with '#' are
// comments; blank lines are ignored. Duplicate edge lines are an error.
struct HgParseError : std::runtime_error {
    int line;
    HgParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

Family read_hg(std::istream& in);
Family read_hg_file(const std::string& path);

void write_hg(std::ostream& out, const Family& family);
void write_hg_file(const std::string& path, const Family& family);
std::string to_hg_string(const Family& family);

}  // namespace turan
