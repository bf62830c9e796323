#include "cuspidal/record.hpp"

#include <sstream>

#include <json.hpp>

namespace cuspidal {

OutputRecord make_record(const TorsionStructure& ts, bool oracle_checked) {
    OutputRecord rec;
    rec.N = ts.N;
    rec.l = ts.l;
    rec.ordering = ts.ordering;
    rec.oracle_checked = oracle_checked;
    for (const auto& sm : ts.summands)
        rec.summands.push_back({sm.d, to_string(sm.epsilon), sm.valuation,
                                to_string(sm.cyclic_order)});
    return rec;
}

std::string to_json(const OutputRecord& rec) {
    nlohmann::json j;
    j["N"] = rec.N;
    j["l"] = rec.l;
    j["ordering"] = rec.ordering;
    j["oracle_checked"] = rec.oracle_checked;
    j["summands"] = nlohmann::json::array();
    for (const auto& sm : rec.summands) {
        nlohmann::json s;
        s["d"] = sm.d;
        s["epsilon"] = sm.epsilon;
        s["valuation"] = sm.valuation;
        s["order"] = sm.cyclic_order;
        j["summands"].push_back(s);
    }
    return j.dump();
}

OutputRecord record_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    OutputRecord rec;
    rec.N = j.at("N").get<long>();
    rec.l = j.at("l").get<long>();
    rec.ordering = j.at("ordering").get<std::vector<long>>();
    rec.oracle_checked = j.at("oracle_checked").get<bool>();
    for (const auto& s : j.at("summands"))
        rec.summands.push_back({s.at("d").get<long>(),
                                s.at("epsilon").get<std::string>(),
                                s.at("valuation").get<long>(),
                                s.at("order").get<std::string>()});
    return rec;
}

std::string csv_header() {
    return "N,l,d,epsilon,valuation,order,checked,reason";
}

std::vector<std::string> to_csv_rows(const OutputRecord& rec,
                                     const std::string& reason) {
    const std::string checked = rec.oracle_checked ? "true" : "false";
    std::vector<std::string> rows;
    if (rec.summands.empty()) {
        rows.push_back(std::to_string(rec.N) + "," + std::to_string(rec.l) +
                       ",,,,," + checked + "," + reason);
        return rows;
    }
    for (const auto& sm : rec.summands)
        rows.push_back(std::to_string(rec.N) + "," + std::to_string(rec.l) +
                       "," + std::to_string(sm.d) + "," + sm.epsilon + "," +
                       std::to_string(sm.valuation) + "," + sm.cyclic_order +
                       "," + checked + "," + reason);
    return rows;
}

std::string skipped_csv_row(long N, long l,
                            const std::string& reason) {
    return std::to_string(N) + "," + std::to_string(l) + ",,,,,," + reason;
}

std::string to_human(const OutputRecord& rec) {
    std::ostringstream out;
    out << "N = " << rec.N << ", l = " << rec.l << ", prime ordering (";
    for (std::size_t i = 0; i < rec.ordering.size(); ++i)
        out << (i ? ", " : "") << rec.ordering[i];
    out << ")\n";
    bool any = false;
    for (const auto& sm : rec.summands) {
        out << "  d = " << sm.d << ": epsilon = " << sm.epsilon
            << ", v_l = " << sm.valuation;
        if (sm.valuation > 0) {
            out << ", summand Z/" << sm.cyclic_order;
            any = true;
        } else {
            out << ", trivial";
        }
        out << "\n";
    }
    if (rec.summands.empty()) out << "  no divisors with two prime factors\n";
    out << "l-primary torsion: ";
    if (!any) {
        out << "trivial";
    } else {
        bool first = true;
        for (const auto& sm : rec.summands)
            if (sm.valuation > 0) {
                out << (first ? "" : " + ") << "Z/" << sm.cyclic_order;
                first = false;
            }
    }
    out << (rec.oracle_checked ? "  [oracle checked]" : "") << "\n";
    return out.str();
}

}  // namespace cuspidal
