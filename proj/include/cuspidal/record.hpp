#pragma once

#include <string>
#include <vector>

#include "cuspidal/kernel.hpp"

namespace cuspidal {

/// Machine-readable record of one structure computation.  Big integers are
/// serialized as decimal strings so round-trips are exact.
struct SummandRecord {
    long d = 0;
    std::string epsilon;
    long valuation = 0;
    std::string cyclic_order;

    bool operator==(const SummandRecord&) const = default;
};

struct OutputRecord {
    long N = 0;
    long l = 0;
    std::vector<long> ordering;
    std::vector<SummandRecord> summands;
    bool oracle_checked = false;

    bool operator==(const OutputRecord&) const = default;
};

OutputRecord make_record(const TorsionStructure& ts, bool oracle_checked);

std::string to_json(const OutputRecord& rec);
OutputRecord record_from_json(const std::string& text);

/// Fixed column set: N,l,d,epsilon,valuation,order,checked,reason.
std::string csv_header();
/// One row per summand; a single mostly-empty row when there are none.
std::vector<std::string> to_csv_rows(const OutputRecord& rec,
                                     const std::string& reason = "");
std::string skipped_csv_row(long N, long l,
                            const std::string& reason);

std::string to_human(const OutputRecord& rec);

}  // namespace cuspidal
