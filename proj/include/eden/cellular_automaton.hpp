#ifndef EDEN_CELLULAR_AUTOMATON_HPP
#define EDEN_CELLULAR_AUTOMATON_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eden/subshift.hpp"

namespace eden {

struct GoeWitness {
    Pattern pattern;            // in the codomain language, absent from the image
};

struct ErasablePair {
    Window K;
    Pattern w1, w2;             // distinct, agree on a margin band inside K
    std::string context_check;  // how the certificate was established
};

enum class Verdict { Yes, No, Inconclusive };
std::string verdict_name(Verdict v);

struct ClassificationReport {
    std::string subject;
    Verdict surjective = Verdict::Inconclusive;
    Verdict pre_injective = Verdict::Inconclusive;
    Verdict injective = Verdict::Inconclusive;
    std::optional<GoeWitness> goe;
    std::optional<ErasablePair> erasable;
    std::vector<std::string> flags;   // MOORE_VIOLATION / MYHILL_VIOLATION
    double millis = 0.0;
};

// Sliding-block code given by a neighborhood window and a dense local-rule
// table indexed by radix over the neighborhood cells in sorted order.
class BlockCode {
public:
    // Throws InvalidInputError if the induced map leaves the codomain (d=1).
    BlockCode(Subshift domain, Subshift codomain, Window neighborhood,
              std::vector<int> table, std::string subject = "");

    // Non-throwing variant used by the endomorphism enumerator.
    static std::optional<BlockCode> try_create(Subshift domain, Subshift codomain,
                                               Window neighborhood, std::vector<int> table,
                                               std::string subject = "");

    static BlockCode eca(int rule);                            // elementary CA, 0..255
    static BlockCode linear(std::vector<long> coeffs, long offset, long modulus);

    const Subshift& domain() const { return domain_; }
    const Subshift& codomain() const { return codomain_; }
    const Window& neighborhood() const { return nbhd_; }
    const std::vector<int>& table() const { return table_; }
    const std::string& subject() const { return subject_; }

    int local_rule(const std::vector<int>& nbhd_symbols) const;

    Configuration apply(const Configuration& x) const;
    Pattern apply_pattern(const Pattern& p) const;

    Subshift image() const;                                    // sofic image, d = 1

    bool is_surjective(std::optional<GoeWitness>* witness = nullptr) const;
    bool is_pre_injective(std::optional<ErasablePair>* witness = nullptr) const;
    bool is_injective() const;
    ClassificationReport classify() const;

private:
    Subshift domain_, codomain_;
    Window nbhd_;
    std::vector<int> table_;
    std::string subject_;

    struct PairAnalysis;
    void build_pair_graph(PairAnalysis& out) const;
};

// All endomorphism tables over neighborhood N that map X into X, ascending
// radix order over allowed N-patterns.
std::vector<BlockCode> enumerate_endomorphisms(const Subshift& X, const Window& N);
void enumerate_endomorphisms(const Subshift& X, const Window& N,
                             const std::function<void(const BlockCode&)>& sink);

// `eca:<n>` shorthand or the rule-file format from docs/formats.md.
BlockCode parse_block_code(const std::string& text,
                           std::optional<Subshift> domain = std::nullopt,
                           std::optional<Subshift> codomain = std::nullopt);
BlockCode load_block_code(const std::string& spec_or_path,
                          std::optional<Subshift> domain = std::nullopt,
                          std::optional<Subshift> codomain = std::nullopt);

} // namespace eden

#endif
