#pragma once

#include <string>
#include <vector>

namespace hopfstab {

enum class Verdict { Pass, Fail, Undecided, HypothesisUnmet };

std::string to_string(Verdict v);

struct CheckItem {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::string witness;  // first failing multi-index or other evidence; empty on pass
};

/// Outcome of one verifier: a named list of exact checks.
struct Report {
    std::string title;
    std::vector<CheckItem> items;
    std::size_t failure_cap = 10;

    bool passed() const {
        for (const auto& it : items)
            if (it.verdict == Verdict::Fail) return false;
        return true;
    }
    bool all_pass() const {
        for (const auto& it : items)
            if (it.verdict != Verdict::Pass) return false;
        return true;
    }
    void add(const std::string& name, bool ok, const std::string& witness = "") {
        items.push_back({name, ok ? Verdict::Pass : Verdict::Fail, ok ? "" : witness});
    }
    void add_verdict(const std::string& name, Verdict v, const std::string& witness = "") {
        items.push_back({name, v, witness});
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& it : items)
            if (it.verdict == Verdict::Fail) ++n;
        return n;
    }
    std::string text() const;
};

}  // namespace hopfstab
