// Batch driver: run the full check battery over parsed records and
// assemble a report with per-test verdicts, an overall status per
// record, and text/JSON emitters. Pure function of records and options.

#pragma once

#include "amphicheck/linkdata.hpp"
#include "amphicheck/obstruction.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace amphicheck {

enum class OverallStatus { CONSISTENT, OBSTRUCTED, DATA_ERROR };

std::string to_string(OverallStatus status);
std::optional<OverallStatus> overall_status_from_string(std::string_view text);

struct RecordReport {
    std::string name;
    std::vector<Verdict> verdicts;
    OverallStatus overall = OverallStatus::CONSISTENT;
    // Set when the record has an even component count, zero polynomial,
    // and no failing check: the pattern the vanishing conjecture for
    // even split amphicheiral links predicts.
    bool conjecture_flag = false;

    bool operator==(const RecordReport& other) const = default;
};

struct Report {
    std::vector<RecordReport> records;

    bool operator==(const Report& other) const = default;
};

struct BatteryOptions {
    // Empty = run everything; otherwise keep only tests whose id starts
    // with one of these prefixes ("duality", "linking", ...).
    std::vector<std::string> tests;
    // Sign-pattern vectors for the symmetry check; only these run.
    std::vector<std::vector<int>> eps_vectors;
    SignMode sign_mode = SignMode::exists_mode();
    ParitySumOptions parity_options;
};

// Runs, per record: structural validation, duality, collapse checks for
// each deletable component (where data allows), linking screens,
// sign-pattern symmetry (requested vectors), two-variable divisibility
// (r = 2, split), factor extraction and the vanishing tests, the
// parity-sum test, and the diagonal test. Deterministic order.
// Validator failures (structure, duality, collapse, extraction) make
// the record DATA_ERROR; otherwise any FAIL makes it OBSTRUCTED; else
// CONSISTENT.
Report run_battery(const std::vector<RecordParse>& records, const BatteryOptions& options = {});

// Status precedence DATA_ERROR > OBSTRUCTED > CONSISTENT over records.
int exit_code(const Report& report);

std::string emit_text(const Report& report);

// JSON shape: an array of {name, overall, conjecture_flag, verdicts:[...]}
// objects, one per record; an empty report serializes to [].
nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);  // inverse of report_to_json

}  // namespace amphicheck
