#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace antiramsey {

enum class CheckStatus { pass, fail, not_applicable };

inline std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

struct CheckResult {
    std::string check;
    CheckStatus status = CheckStatus::pass;
    std::string details;
};

/// Ordered list of named verification clauses.
struct Report {
    std::vector<CheckResult> entries;

    void add(std::string check, bool ok, std::string details = {}) {
        entries.push_back({std::move(check), ok ? CheckStatus::pass : CheckStatus::fail, std::move(details)});
    }
    void skip(std::string check, std::string details) {
        entries.push_back({std::move(check), CheckStatus::not_applicable, std::move(details)});
    }
    void append(const Report& other) { entries.insert(entries.end(), other.entries.begin(), other.entries.end()); }

    bool passed() const {
        return std::none_of(entries.begin(), entries.end(),
                            [](const CheckResult& r) { return r.status == CheckStatus::fail; });
    }
    const CheckResult* find(std::string_view check) const {
        for (const auto& r : entries) {
            if (r.check == check) return &r;
        }
        return nullptr;
    }
    std::vector<const CheckResult*> failures() const {
        std::vector<const CheckResult*> out;
        for (const auto& r : entries) {
            if (r.status == CheckStatus::fail) out.push_back(&r);
        }
        return out;
    }
};

}  // namespace antiramsey
