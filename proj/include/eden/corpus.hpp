#ifndef EDEN_CORPUS_HPP
#define EDEN_CORPUS_HPP

#include <string>
#include <vector>

#include "eden/subshift.hpp"

namespace eden {

// Builtin named subshifts used by the CLI, the docs, and the test suite.
std::vector<std::string> corpus_names();
bool is_corpus_name(const std::string& name);
Subshift corpus_shift(const std::string& name);
std::string corpus_definition(const std::string& name);  // text-format source

// Proper containment pairs (Y, Z) with Z a strict subsystem of Y.
std::vector<std::pair<std::string, std::string>> corpus_containments();

} // namespace eden

#endif
