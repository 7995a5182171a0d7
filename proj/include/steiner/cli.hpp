#pragma once

// Command-line front end. Every subcommand emits a JSON certificate
// {schema_version, command, parameters, result, checks, timing_ms}.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "steiner/designs.hpp"

namespace steiner::cli {

inline constexpr const char* kSchemaVersion = "sv1";

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kResource = 3 };

/// Runs one command line; results go to out, progress and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Cache file name for a block graph.
std::string graph_cache_name(const std::string& space, int n, std::uint32_t q);

/// Writes adjacency lists and the checksum.
void save_graph_cache(const std::filesystem::path& file, const designs::BlockGraph& g);

/// Loads a cached graph; nullopt when missing, malformed or the checksum differs.
std::optional<designs::BlockGraph> load_graph_cache(const std::filesystem::path& file);

}  // namespace steiner::cli
