#pragma once

// Transcribed classification tables, the known-discrepancy whitelist and the
// verification suites that compare computed tables against them.

#include <string>
#include <utility>
#include <vector>

#include "bdfkit/bdf.hpp"

namespace bdf
{
    /// A tab-separated table: header line, then rows of the same width.
    struct FixtureTable
    {
        std::string id;
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;

        long column(const std::string &name) const; // throws ConfigurationError when absent
        const std::string &cell(size_t row, const std::string &name) const;
    };

    // $BDFKIT_FIXTURES when set, else the directory configured at build time.
    std::string fixture_dir();
    // <dir>/<id>.tsv; missing file, ragged rows or missing columns raise ConfigurationError.
    FixtureTable load_fixture(const std::string &id, const std::string &dir = "");

    struct WhitelistEntry
    {
        std::string table_id;
        std::string row_key;
        std::string column;
        std::string note;
    };
    std::vector<WhitelistEntry> load_whitelist(const std::string &dir = "");
    const WhitelistEntry *find_whitelisted(const DiscrepancyFlag &flag, const std::vector<WhitelistEntry> &whitelist);

    // Torus tables (table1, table2, table3): rows matched on m and the multiset of (factor, eigenvalue order).
    std::vector<DiscrepancyFlag> compare_with_fixture(const std::vector<TorusFamily> &computed,
                                                      const FixtureTable &fixture);
    // BdF tables (table4, table5, table6): rows matched on m, dim B1 and the multiset of B2 factors.
    std::vector<DiscrepancyFlag> compare_with_fixture(const std::vector<BdFRow> &computed, const FixtureTable &fixture);
    // Computes the table the fixture transcribes and compares.
    std::vector<DiscrepancyFlag> compare_with_fixture(const std::string &fixture_id, const std::string &dir = "");

    // Label tokens of a printed torus name: aliases resolved, powers expanded, "(i), i=1,...,n" expanded.
    std::vector<std::vector<std::string>> expand_printed_label(const std::string &label);

    struct VerifyOptions
    {
        long bits = 128;
        long max_bits = 4096;
        long recovery_bound = 1; // search_lambda bound for unparseable Table 7 rows; 0 disables
        std::string dir;
    };

    struct SuiteRow
    {
        std::string key;
        std::string status; // match, flagged, pass, fail, unparseable
        std::vector<std::pair<std::string, std::string>> fields;
    };

    struct SuiteReport
    {
        std::string suite;
        std::vector<SuiteRow> rows;
        std::vector<DiscrepancyFlag> flags;      // every divergence, notes from the whitelist
        std::vector<DiscrepancyFlag> unexpected; // divergences absent from the whitelist
        std::vector<WhitelistEntry> stale;       // whitelist entries of this suite that were not raised
        long failures = 0;                       // rows that failed a check outright
        bool inconclusive = false;               // some positivity check undecided at max_bits

        bool passed() const { return unexpected.empty() && stale.empty() && failures == 0; }
    };

    std::vector<std::string> suite_names(); // table1 .. table7, propositions
    SuiteReport verify_suite(const std::string &suite, const VerifyOptions &opts = {});

} // namespace bdf
