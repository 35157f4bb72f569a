#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qpa {

enum class LawStatus { Pass, Fail, Vacuous };

inline const char* status_name(LawStatus s)
{
    switch (s) {
        case LawStatus::Pass: return "pass";
        case LawStatus::Fail: return "fail";
        default: return "vacuous";
    }
}

struct Witness {
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string lhs, rhs;
    std::string note;
};

struct LawReport {
    std::string id;      // stable machine id, e.g. "T8", "O6", "A3"
    std::string label;   // the label used in the literature, e.g. "(otros.6)"
    LawStatus status = LawStatus::Pass;
    long long tuples = 0;
    long long skipped = 0;  // tuples excluded by a law's hypothesis
    std::optional<Witness> witness;
};

struct Suite {
    std::vector<LawReport> laws;

    bool all_pass() const
    {
        for (auto& l : laws)
            if (l.status == LawStatus::Fail)
                return false;
        return true;
    }

    void append(const Suite& o) { laws.insert(laws.end(), o.laws.begin(), o.laws.end()); }

    const LawReport* find(const std::string& id) const
    {
        for (auto& l : laws)
            if (l.id == id)
                return &l;
        return nullptr;
    }
};

// Glob with '*' and '?' over law ids.
inline bool glob_match(const std::string& pat, const std::string& s)
{
    size_t p = 0, i = 0, star = std::string::npos, mark = 0;
    while (i < s.size()) {
        if (p < pat.size() && (pat[p] == '?' || pat[p] == s[i])) {
            ++p;
            ++i;
        } else if (p < pat.size() && pat[p] == '*') {
            star = p++;
            mark = i;
        } else if (star != std::string::npos) {
            p = star + 1;
            i = ++mark;
        } else {
            return false;
        }
    }
    while (p < pat.size() && pat[p] == '*')
        ++p;
    return p == pat.size();
}

// Accumulates one law over enumerated tuples.
class LawCheck {
public:
    LawCheck(std::string id, std::string label) : rep_{}
    {
        rep_.id = std::move(id);
        rep_.label = std::move(label);
    }

    // Record one tuple. ok = both sides matched. Returns false once failed
    // so callers may stop enumerating.
    bool tuple(bool ok, const std::function<Witness()>& mk)
    {
        ++rep_.tuples;
        if (!ok && rep_.status != LawStatus::Fail) {
            rep_.status = LawStatus::Fail;
            rep_.witness = mk();
        }
        return rep_.status != LawStatus::Fail;
    }

    void skip() { ++rep_.skipped; }

    // A law whose hypothesis never fired.
    LawReport done(bool mark_vacuous_when_empty = false) const
    {
        LawReport r = rep_;
        if (mark_vacuous_when_empty && r.status == LawStatus::Pass && r.tuples == 0)
            r.status = LawStatus::Vacuous;
        return r;
    }

private:
    LawReport rep_;
};

}  // namespace qpa
