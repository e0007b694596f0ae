#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lahbell::cli {

enum exit_code : int { success = 0, verification_failed = 1, usage_error = 2 };

/// Runs `lahbell <table|poly|value|verify> [flags]`. args excludes the program
/// name. Payload goes to out, diagnostics to err; returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lahbell::cli
