#pragma once

// Command-line front end. Output goes to `out`; the version header,
// usage text and error messages go to `err`.

#include <ostream>
#include <string>
#include <vector>

namespace bdf::cli
{
    enum ExitCode
    {
        kOk = 0,
        kVerificationFailed = 1,
        kBadInput = 2,
        kInconclusive = 3
    };

    constexpr int kSchemaVersion = 1;

    // args excludes the program name.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bdf::cli
