#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "homconf/io.hpp"
#include "homconf/report.hpp"

namespace homconf::cli {

enum class Format { Text, Json };

/// Newline-delimited records, one per (axiom, tuple), keys in fixed order.
std::string format_json(const std::vector<Report>& reports);
std::string format_text(const std::vector<Report>& reports);

/// Runs the declared tasks, or the kind-appropriate checks of every declaration.
std::vector<Report> run_checks(const DefinitionFile& file, const std::vector<std::string>& axioms);

/// Builds a definition file holding the construction and the inputs it refers to.
DefinitionFile construct(const std::string& kind, const DefinitionFile& file, const std::string& source,
                         const std::string& extra, const std::string& name);

/// Writes `count` randomized instance files and a manifest into `dir`.
void write_corpus(const std::string& dir, std::size_t rank, int degree, std::size_t count, std::uint64_t seed);

/// Exit 0 on success, 1 when a check fails, 2 on usage, parse or certification errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace homconf::cli
