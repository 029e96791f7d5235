#include "eden/corpus.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace eden {

namespace {

struct NamedShift {
    const char* name;
    const char* definition;
};

// One source of truth for the named shifts; data/shifts/*.txt carry the same
// text and a unit test keeps them in sync.
constexpr std::array<NamedShift, 10> kCorpus{{
    {"full-2", "alphabet=2; dim=1\n"},
    {"full-3", "alphabet=3; dim=1\n"},
    {"golden-mean",
     "alphabet=2; dim=1\n"
     "11\n"},
    {"even",
     // even runs of 0 between consecutive 1s
     "alphabet=2; dim=1\n"
     "0 -1-> 0\n"
     "0 -0-> 1\n"
     "1 -0-> 0\n"},
    {"odd",
     // odd runs of 0 between consecutive 1s
     "alphabet=2; dim=1\n"
     "0 -0-> 1\n"
     "1 -1-> 0\n"
     "1 -0-> 0\n"},
    {"rll-1-3",
     // run-length limited: between consecutive 1s, 1 to 3 zeros
     "alphabet=2; dim=1\n"
     "11\n"
     "0000\n"},
    {"no-000",
     "alphabet=2; dim=1\n"
     "000\n"},
    {"spaced-ones",
     // no two 1s at distance exactly 2
     "alphabet=2; dim=1\n"
     "cells=(0):1,(2):1\n"},
    {"alternating",
     "alphabet=2; dim=1\n"
     "00\n"
     "11\n"},
    {"singleton-0",
     "alphabet=2; dim=1\n"
     "1\n"},
}};

} // namespace

std::vector<std::string> corpus_names() {
    std::vector<std::string> out;
    for (const auto& s : kCorpus) out.push_back(s.name);
    return out;
}

bool is_corpus_name(const std::string& name) {
    for (const auto& s : kCorpus)
        if (name == s.name) return true;
    return false;
}

std::string corpus_definition(const std::string& name) {
    for (const auto& s : kCorpus)
        if (name == s.name) return s.definition;
    throw InvalidInputError("unknown corpus shift: " + name);
}

Subshift corpus_shift(const std::string& name) {
    return parse_subshift(corpus_definition(name));
}

std::vector<std::pair<std::string, std::string>> corpus_containments() {
    return {
        {"full-2", "golden-mean"},
        {"full-2", "even"},
        {"full-2", "odd"},
        {"full-2", "rll-1-3"},
        {"full-2", "no-000"},
        {"full-2", "spaced-ones"},
        {"full-2", "alternating"},
        {"full-2", "singleton-0"},
        {"golden-mean", "singleton-0"},
        {"even", "singleton-0"},
        {"odd", "singleton-0"},
        {"spaced-ones", "singleton-0"},
        {"no-000", "alternating"},
    };
}

Subshift load_subshift(const std::string& path_or_name) {
    if (is_corpus_name(path_or_name)) return corpus_shift(path_or_name);
    std::ifstream in(path_or_name);
    if (!in) throw InvalidInputError("no such subshift file or corpus name: " + path_or_name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_subshift(buf.str());
}

} // namespace eden
