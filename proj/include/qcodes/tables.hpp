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

#ifndef QCODES_TABLES_HPP
#define QCODES_TABLES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcodes/cyclotomic.hpp"

namespace qcodes {

/// Cosets whose leader gives an optimal C_(1,e,s), ascending by leader.
struct OptimalCatalog {
    unsigned p = 5;
    unsigned m = 0;
    std::vector<CyclotomicCoset> cosets;
    std::vector<unsigned> d;  ///< minimum distance per coset

    std::size_t count() const noexcept { return cosets.size(); }
    std::vector<u64> leaders() const;

    friend bool operator==(const OptimalCatalog&, const OptimalCatalog&) = default;
};

/// Largest p^m accepted by the enumerators.
inline constexpr u64 kMaxEnumerationOrder = 3125;

/**
 * Runs verify_code on every admissible coset leader and keeps the optimal ones.
 * jobs = 0 uses the OpenMP default thread count. The result does not depend on jobs.
 * Throws std::length_error when p^m exceeds kMaxEnumerationOrder.
 */
OptimalCatalog enumerate_optimal(unsigned p, unsigned m, unsigned jobs = 0);
/// Single-threaded reference for enumerate_optimal.
OptimalCatalog enumerate_optimal_serial(unsigned p, unsigned m);

struct ReferenceEntry {
    CyclotomicCoset coset;
    bool studied = false;  ///< leading '*'
    std::size_t line = 0;
    std::string raw;
};

struct MalformedEntry {
    std::string raw;
    std::string reason;
    std::size_t line = 0;
    std::vector<u64> values;  ///< every digit run in the row
    /// Leader of the coset sharing most values with the entry; reporting only.
    std::optional<u64> closest_leader;
};

struct ErratumApplied {
    std::string raw;
    std::string corrected;
    std::string reason;
    std::size_t line = 0;
};

struct ReferenceTable {
    unsigned p = 5;
    unsigned m = 0;
    std::vector<ReferenceEntry> entries;
    std::vector<MalformedEntry> malformed;
    std::vector<ErratumApplied> errata_applied;
};

class TableFormatError : public std::runtime_error {
   public:
    TableFormatError(const std::string& path, std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

/// Raw row text (whitespace-normalized) mapped to its corrected text and reason.
struct Errata {
    struct Fix {
        std::string corrected;
        std::string reason;
    };
    std::map<std::string, Fix> fixes;
};

/**
 * Format: "raw => corrected # reason", '#' lines are comments.
 * Throws std::runtime_error if unreadable, TableFormatError on a line without "=>".
 */
Errata load_errata(const std::string& path);

/**
 * One coset per line, comma separated, optional leading '*', '#' starts a comment.
 * Rows with values outside [0, p^m - 2], repeated values, values that do not form
 * one full orbit, or digits separated only by blanks go to `malformed`. Any other
 * character is a TableFormatError. Throws std::runtime_error if the file cannot be read.
 */
ReferenceTable load_reference_table(const std::string& path, unsigned m, unsigned p = 5,
                                    const Errata* errata = nullptr);

struct TableDiff {
    std::vector<CyclotomicCoset> missing_from_reference;  ///< computed but not listed
    std::vector<CyclotomicCoset> missing_from_computed;   ///< listed but not computed
    std::vector<MalformedEntry> malformed_reference_entries;
    std::vector<u64> duplicate_reference_leaders;

    bool sets_equal() const { return missing_from_reference.empty() && missing_from_computed.empty(); }
    bool clean() const { return sets_equal() && malformed_reference_entries.empty() && duplicate_reference_leaders.empty(); }
    /// Every set difference is a computed coset that some malformed entry is closest to.
    bool explained_by_malformed() const;
};

/// Set difference on leaders; fills closest_leader of each malformed entry from the catalog.
TableDiff diff_tables(const OptimalCatalog& computed, const ReferenceTable& reference);

}  // namespace qcodes

#endif
