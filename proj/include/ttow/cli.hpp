// Command-line front end. Results go to `out` as JSON; failures go to `err`
// as {"schema", "error": {"kind", "message"}}.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ttow {

enum ExitCode { kOk = 0, kValidation = 2, kComputation = 3 };

// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

// 2 for malformed or inconsistent input, 3 for failures of a computation.
int exit_code_for(const std::string &error_kind);

// Fixture names the CLI understands: "name" or "name-N" for the families
// that take a size.
std::vector<std::string> cli_fixture_names();

} // namespace ttow
