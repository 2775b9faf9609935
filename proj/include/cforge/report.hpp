#pragma once

// Serialization of check outcomes and search records: json, csv, text.

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "check.hpp"
#include "search.hpp"

namespace cforge {

enum class Format { json, csv, text };

inline Format parse_format(std::string_view s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    throw error(errc::usage, "unknown format '" + std::string(s) + "' (expected json, csv or text)");
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string index_text(const std::optional<long>& i) { return i ? std::to_string(*i) : std::string(); }

// Pads every column to its widest cell.
inline void write_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            line += r[c];
            if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const CheckOutcome& o) {
    nlohmann::ordered_json j;
    j["prime"] = o.prime;
    j["check_id"] = o.check_id;
    j["index"] = o.index ? nlohmann::ordered_json(*o.index) : nlohmann::ordered_json(nullptr);
    j["status"] = std::string(to_string(o.status));
    j["modulus"] = o.modulus;
    j["lhs"] = o.lhs;
    j["rhs"] = o.rhs;
    j["reason"] = o.reason;
    j["paper_anchor"] = o.paper_anchor;
    return j;
}

inline CheckOutcome outcome_from_json(const nlohmann::json& j) {
    CheckOutcome o;
    o.prime = j.at("prime").get<std::uint64_t>();
    o.check_id = j.at("check_id").get<std::string>();
    if (!j.at("index").is_null()) o.index = j.at("index").get<long>();
    o.status = parse_status(j.at("status").get<std::string>());
    o.modulus = j.at("modulus").get<std::string>();
    o.lhs = j.at("lhs").get<std::string>();
    o.rhs = j.at("rhs").get<std::string>();
    o.reason = j.at("reason").get<std::string>();
    o.paper_anchor = j.at("paper_anchor").get<std::string>();
    return o;
}

inline std::vector<CheckOutcome> parse_json_report(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw error(errc::usage, "report must be a JSON array");
    std::vector<CheckOutcome> out;
    for (const auto& j : doc) out.push_back(outcome_from_json(j));
    return out;
}

inline void emit(std::ostream& os, const std::vector<CheckOutcome>& outcomes, Format f) {
    switch (f) {
    case Format::json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& o : outcomes) arr.push_back(to_json(o));
        os << arr.dump(2) << '\n';
        break;
    }
    case Format::csv:
        os << "prime,check_id,index,status,modulus,lhs,rhs,reason\n";
        for (const auto& o : outcomes) {
            os << o.prime << ',' << detail::csv_field(o.check_id) << ',' << detail::index_text(o.index) << ','
               << to_string(o.status) << ',' << o.modulus << ',' << detail::csv_field(o.lhs) << ','
               << detail::csv_field(o.rhs) << ',' << detail::csv_field(o.reason) << '\n';
        }
        break;
    case Format::text: {
        std::vector<std::vector<std::string>> rows{{"prime", "check", "index", "status", "modulus", "lhs", "rhs", "reason"}};
        std::size_t pass = 0, fail = 0, skip = 0;
        for (const auto& o : outcomes) {
            rows.push_back({std::to_string(o.prime), o.check_id, detail::index_text(o.index), std::string(to_string(o.status)),
                            o.modulus, o.lhs, o.rhs, o.reason});
            (o.status == CheckStatus::pass ? pass : o.status == CheckStatus::fail ? fail : skip)++;
        }
        detail::write_table(os, rows);
        os << "summary: " << pass << " pass, " << fail << " fail, " << skip << " skipped\n";
        break;
    }
    }
}

inline std::string emit_string(const std::vector<CheckOutcome>& outcomes, Format f) {
    std::ostringstream os;
    emit(os, outcomes, f);
    return os.str();
}

inline nlohmann::ordered_json to_json(const SearchRecord& r) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(r.kind));
    j["p"] = r.p;
    j["index"] = r.index ? nlohmann::ordered_json(*r.index) : nlohmann::ordered_json(nullptr);
    j["witness"] = r.witness.to_string();
    j["modulus"] = r.witness.modulus.to_string();
    return j;
}

inline void emit(std::ostream& os, const std::vector<SearchRecord>& records, Format f) {
    switch (f) {
    case Format::json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : records) arr.push_back(to_json(r));
        os << arr.dump(2) << '\n';
        break;
    }
    case Format::csv:
        os << "kind,p,index,witness,modulus\n";
        for (const auto& r : records)
            os << to_string(r.kind) << ',' << r.p << ',' << detail::index_text(r.index) << ',' << r.witness.to_string()
               << ',' << r.witness.modulus.to_string() << '\n';
        break;
    case Format::text: {
        std::vector<std::vector<std::string>> rows{{"kind", "p", "index", "witness", "modulus"}};
        for (const auto& r : records)
            rows.push_back({std::string(to_string(r.kind)), std::to_string(r.p), detail::index_text(r.index),
                            r.witness.to_string(), r.witness.modulus.to_string()});
        detail::write_table(os, rows);
        os << "records: " << records.size() << '\n';
        break;
    }
    }
}

}  // namespace cforge
