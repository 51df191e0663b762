#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qsv/epr.hpp"
#include "qsv/fixtures.hpp"
#include "qsv/proposition.hpp"

namespace qsv {

enum class Semantics { Super, Classical, Both };

inline Semantics parse_semantics(std::string_view s) {
    if (s == "super") return Semantics::Super;
    if (s == "classical") return Semantics::Classical;
    if (s == "both") return Semantics::Both;
    throw ParseError("unknown semantics '" + std::string(s) + "' (expected super, classical or both)");
}

inline std::string to_string(Semantics s) {
    switch (s) {
    case Semantics::Super: return "super";
    case Semantics::Classical: return "classical";
    case Semantics::Both: return "both";
    }
    return {};
}

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson to_json(std::span<const Scalar> v) {
    OrderedJson out = OrderedJson::array();
    for (const auto& z : v) out.push_back(to_string(z));
    return out;
}

inline OrderedJson to_json(const Population& p) {
    OrderedJson tuples = OrderedJson::array();
    for (const auto& t : p.tuples) tuples.push_back(t);
    return OrderedJson{{"labels", p.labels}, {"tuples", std::move(tuples)}};
}

inline Population population_from_json(const OrderedJson& j) {
    Population p;
    p.labels = j.at("labels").get<std::vector<std::string>>();
    for (const auto& t : j.at("tuples")) p.tuples.insert(t.get<std::vector<int>>());
    return p;
}

inline OrderedJson to_json(const ScenarioReport& r, Semantics semantics) {
    const bool show_super = semantics != Semantics::Classical;
    const bool show_classical = semantics != Semantics::Super;

    const auto rows = [&](const std::vector<ValuationRow>& table) {
        OrderedJson out = OrderedJson::array();
        for (const auto& row : table) {
            OrderedJson entry{{"proposition", to_string(row.proposition)}};
            if (show_super) entry["super"] = to_string(row.super);
            if (show_classical) entry["classical"] = to_string(row.classical);
            out.push_back(std::move(entry));
        }
        return out;
    };

    OrderedJson populations = OrderedJson::object();
    if (show_super) populations["super"] = to_json(r.super_population);
    if (show_classical) populations["classical"] = to_json(r.classical_population);

    OrderedJson out{
        {"axis", std::string(1, to_char(r.axis))},
        {"verified", to_string(r.verified)},
        {"semantics", to_string(semantics)},
        {"state",
         {{"prepared", to_json(std::span<const Scalar>(r.prepared.entries()))},
          {"post", to_json(std::span<const Scalar>(r.post.entries()))}}},
        {"valuations", {{"before", rows(r.before)}, {"after", rows(r.after)}}},
        {"populations", std::move(populations)},
    };
    if (r.fixtures) {
        out["fixtures"] = {{"match", r.fixtures->matched},
                           {"mismatch", r.fixtures->mismatched},
                           {"mismatched", r.fixtures->mismatched_labels}};
    }
    out["note"] = r.note;
    return out;
}

namespace detail {

inline std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

} // namespace detail

/// Aligned plain-text rendering for terminals.
inline std::string to_table(const ScenarioReport& r, Semantics semantics) {
    const bool show_super = semantics != Semantics::Classical;
    const bool show_classical = semantics != Semantics::Super;

    std::size_t width = std::string_view("proposition").size();
    for (const auto* table : {&r.before, &r.after})
        for (const auto& row : *table) width = std::max(width, to_string(row.proposition).size());

    std::ostringstream os;
    os << "EPR run: singlet prepared, verification of " << to_string(r.verified) << "\n";
    os << "  prepared state  " << to_string(r.prepared) << "\n";
    os << "  post state      " << to_string(r.post) << "\n";

    const auto table = [&](const char* title, const std::vector<ValuationRow>& rows) {
        os << "\n" << title << "\n";
        os << "  " << detail::pad("proposition", width);
        if (show_super) os << "  " << detail::pad("super", 13);
        if (show_classical) os << "  classical";
        os << "\n";
        for (const auto& row : rows) {
            std::string line = "  " + detail::pad(to_string(row.proposition), width);
            if (show_super) line += "  " + detail::pad(to_string(row.super), 13);
            if (show_classical) line += "  " + to_string(row.classical);
            while (!line.empty() && line.back() == ' ') line.pop_back();
            os << line << "\n";
        }
    };
    table("before verification", r.before);
    table(("after verification of " + to_string(r.verified)).c_str(), r.after);

    std::string labels;
    for (const auto& l : r.super_population.labels) labels += (labels.empty() ? "" : ", ") + l;
    os << "\npopulation of (" << labels << ")\n";
    if (show_classical) os << "  classical       " << to_string(r.classical_population) << "\n";
    if (show_super) os << "  supervaluation  " << to_string(r.super_population) << "\n";

    if (r.fixtures) {
        os << "\nfixture audit: " << r.fixtures->matched << " match, " << r.fixtures->mismatched << " mismatch";
        if (!r.fixtures->mismatched_labels.empty()) {
            os << " (";
            for (std::size_t k = 0; k < r.fixtures->mismatched_labels.size(); ++k)
                os << (k ? ", " : "") << r.fixtures->mismatched_labels[k];
            os << ")";
        }
        os << "\n";
    }
    os << "\nnote: " << r.note << "\n";
    return os.str();
}

inline OrderedJson to_json(std::span<const FixtureRecord> records) {
    OrderedJson list = OrderedJson::array();
    for (const auto& r : records) {
        list.push_back(OrderedJson{{"label", r.label},
                                   {"kind", to_string(r.kind)},
                                   {"status", to_string(r.status)},
                                   {"derived", r.derived},
                                   {"printed", r.printed},
                                   {"detail", r.detail}});
    }
    const FixtureSummary s = summarize(records);
    return OrderedJson{{"fixtures", std::move(list)}, {"summary", {{"match", s.matched}, {"mismatch", s.mismatched}}}};
}

inline std::string to_table(std::span<const FixtureRecord> records) {
    std::size_t label_width = std::string_view("label").size();
    for (const auto& r : records) label_width = std::max(label_width, r.label.size());

    std::ostringstream os;
    os << detail::pad("label", label_width) << "  " << detail::pad("kind", 6) << "  " << detail::pad("status", 8)
       << "  detail\n";
    for (const auto& r : records) {
        std::string line = detail::pad(r.label, label_width) + "  " + detail::pad(to_string(r.kind), 6) + "  " +
                           detail::pad(to_string(r.status), 8) + "  " + r.detail;
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
        if (r.status == FixtureStatus::Mismatch) {
            os << detail::pad("", label_width) << "    derived: " << r.derived << "\n";
            os << detail::pad("", label_width) << "    printed: " << r.printed << "\n";
        }
    }
    const FixtureSummary s = summarize(records);
    os << "\n" << s.matched << " match, " << s.mismatched << " mismatch\n";
    return os.str();
}

} // namespace qsv
