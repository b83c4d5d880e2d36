#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylfact {

/// Bad flags or arguments; reported with exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Command {
    std::string verb;        ///< analyze | factor | verify | diagram
    std::string expression;  ///< operator text; empty when file is set
    std::string file;        ///< JSON operator, or factor output for verify
    std::optional<int> truncation;  ///< default 16; from a file, the file's own N
    std::string mode = "monic";     ///< slopes | characteristic | monic
    std::string format = "json";    ///< json | text
    std::string split;              ///< "s1,s2" in the variable l
    std::vector<std::string> factors;  ///< verify: factor expressions, left to right
};

constexpr int default_truncation = 16;

/// Exit code 0 on success, 1 on a mathematical failure (resonance,
/// obstruction, refused split), 2 on usage or parse errors.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace weylfact
