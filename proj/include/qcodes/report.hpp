/*
   Copyright 2026 The qcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QCODES_REPORT_HPP
#define QCODES_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcodes/code.hpp"
#include "qcodes/tables.hpp"

namespace qcodes {

/// Codeword support as powers of the context generator plus polynomial coordinates.
struct WitnessRecord {
    std::vector<u64> logs;
    std::vector<std::vector<unsigned>> coords;
    std::vector<unsigned> coeffs;

    friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

/// One result line of a CLI command. Schema: docs/report-schema.md.
struct ReportRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    u64 n = 0;
    u64 k = 0;
    unsigned d = 0;
    bool optimal = false;
    std::optional<WitnessRecord> witness;
    double elapsed_ms = 0.0;

    friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

/// Exponent k with alpha^k = x; throws std::domain_error for x = 0.
u64 discrete_log(const FieldContext& ctx, const FieldElement& x);

ReportRecord make_record(const FieldContext& ctx, const CodeVerdict& verdict, std::string command,
                         std::vector<std::pair<std::string, std::string>> inputs, double elapsed_ms);

std::string to_jsonl(const ReportRecord& r);
/// Throws std::runtime_error on malformed input.
ReportRecord record_from_jsonl(const std::string& line);
void write_jsonl(std::ostream& out, const std::vector<ReportRecord>& records);
std::vector<ReportRecord> read_jsonl(std::istream& in);

void write_records_csv(std::ostream& out, const std::vector<ReportRecord>& records);
std::vector<ReportRecord> read_records_csv(std::istream& in);

/// Columns: leader, coset (';'-joined, ascending), length, d, optimal.
void write_catalog_csv(std::ostream& out, const OptimalCatalog& cat);
/// Throws std::runtime_error when a row is malformed or its coset disagrees with (p, m).
OptimalCatalog read_catalog_csv(std::istream& in, unsigned p, unsigned m);

/// Same layout as the reference tables: one orbit per line, starting at the leader.
void write_catalog_table_text(std::ostream& out, const OptimalCatalog& cat);

/// One JSON object per line: each difference, each malformed row, then a summary.
void write_diff_jsonl(std::ostream& out, const TableDiff& diff, const OptimalCatalog& computed,
                      const ReferenceTable& reference);
/// Plain-text version of the same report.
void write_diff_text(std::ostream& out, const TableDiff& diff, const OptimalCatalog& computed,
                     const ReferenceTable& reference);

}  // namespace qcodes

#endif
