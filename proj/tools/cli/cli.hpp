#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace knotvol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRejected = 2;
inline constexpr int kExitResource = 3;

/// Runs the command line (argv[0] included) and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes via a sibling temporary file and a rename, so readers never see a partial file.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace knotvol::cli
