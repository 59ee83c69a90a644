#ifndef SUPERTWIST_REPORT_HPP
#define SUPERTWIST_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace supertwist
{

enum class Status { pass, fail, info };

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::info: return "info";
    }
    return "?";
}

struct ReportEntry
{
    std::string identity;
    std::string formula; // plain text
    std::string backend;
    unsigned truncation_order = 0;
    Status status = Status::pass;
    std::string residual_text;
};

class VerificationReport
{
public:
    void add(ReportEntry e) { m_entries.push_back(std::move(e)); }

    void check(bool ok, std::string identity, std::string formula, std::string backend, unsigned order,
               std::string residual = {})
    {
        add({std::move(identity), std::move(formula), std::move(backend), order, ok ? Status::pass : Status::fail,
             ok ? std::string{} : std::move(residual)});
    }
    void note(std::string identity, std::string text, std::string backend = "-", unsigned order = 0)
    {
        add({std::move(identity), "", std::move(backend), order, Status::info, std::move(text)});
    }

    void merge(const VerificationReport& o) { m_entries.insert(m_entries.end(), o.m_entries.begin(), o.m_entries.end()); }

    const std::vector<ReportEntry>& entries() const noexcept { return m_entries; }
    bool passed() const
    {
        for (const auto& e : m_entries)
            if (e.status == Status::fail) return false;
        return true;
    }
    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto& e : m_entries) n += e.status == Status::fail;
        return n;
    }

    nlohmann::ordered_json to_json() const
    {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& e : m_entries) {
            nlohmann::ordered_json j;
            j["identity"] = e.identity;
            j["formula"] = e.formula;
            j["backend"] = e.backend;
            j["truncation_order"] = e.truncation_order;
            j["status"] = to_string(e.status);
            if (!e.residual_text.empty()) j["residual_text"] = e.residual_text;
            arr.push_back(std::move(j));
        }
        return arr;
    }

    std::string to_text() const
    {
        std::string out;
        for (const auto& e : m_entries) {
            out += "[" + to_string(e.status) + "] " + e.identity;
            if (!e.backend.empty() && e.backend != "-") out += " (" + e.backend + (e.truncation_order ? ", K=" + std::to_string(e.truncation_order) : "") + ")";
            if (!e.formula.empty()) out += "\n    " + e.formula;
            if (!e.residual_text.empty()) out += "\n    " + e.residual_text;
            out += "\n";
        }
        return out;
    }

private:
    std::vector<ReportEntry> m_entries;
};

/// Shorten long residual texts for reports.
inline std::string clip(const std::string& s, std::size_t n = 400)
{
    return s.size() <= n ? s : s.substr(0, n) + " ...";
}

} // namespace supertwist

#endif
