#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratint/constant.hpp"

namespace ratint {

// One golden-corpus row (line-delimited JSON on disk).
struct CorpusEntry {
    std::string id;
    std::string op = "integrate";  // integrate | diff | equal
    std::string input;
    std::string var = "x";
    std::optional<std::string> lo, hi;
    std::optional<std::string> expect;
    std::optional<std::string> expect_value;
    std::string source;
};

struct EntryOutcome {
    std::string id;
    bool pass = false;
    std::string detail;  // empty on pass
};

struct CorpusReport {
    std::vector<EntryOutcome> entries;
    int passed = 0;
    int failed = 0;

    std::string text() const;
};

CorpusEntry corpus_entry_from_json(const std::string& line, int lineno);
std::vector<CorpusEntry> load_corpus(const std::string& path);

EntryOutcome run_corpus_entry(const CorpusEntry& e, double value_tol);
CorpusReport run_corpus(const std::string& path, double value_tol = 1e-6);

// Bound of a definite integral: a rational number or a rational multiple of pi.
struct Bound {
    bool pi_multiple = false;
    Rat value;
};
Bound parse_bound(const std::string& text);

}  // namespace ratint
