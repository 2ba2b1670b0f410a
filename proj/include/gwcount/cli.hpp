// Batch command-line front end.
#pragma once

#include "gwcount/exact.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gwcount::cli {

/// Rows for text/csv rendering of tabular commands.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct CommandResult {
    std::string command;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    nlohmann::ordered_json result;
    bool exact = true;
    std::optional<Table> table;

    nlohmann::ordered_json envelope() const;
};

/// Integers within +-(2^53 - 1) as JSON numbers, larger ones as decimal strings.
nlohmann::ordered_json integer_json(const BigInt& v);
/// {"num": "...", "den": "..."}.
nlohmann::ordered_json rational_json(const Rational& r);

/// Runs one command. `args` excludes the program name. Returns the exit code:
/// 0 success, 1 domain error (JSON error object on `out`), 2 usage error
/// (diagnostic on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwcount::cli
