#include "amphicheck/report.hpp"

#include <algorithm>
#include <sstream>

namespace amphicheck {

std::string to_string(OverallStatus status) {
    switch (status) {
        case OverallStatus::CONSISTENT: return "CONSISTENT";
        case OverallStatus::OBSTRUCTED: return "OBSTRUCTED";
        case OverallStatus::DATA_ERROR: return "DATA_ERROR";
    }
    return "?";
}

std::optional<OverallStatus> overall_status_from_string(std::string_view text) {
    if (text == "CONSISTENT") return OverallStatus::CONSISTENT;
    if (text == "OBSTRUCTED") return OverallStatus::OBSTRUCTED;
    if (text == "DATA_ERROR") return OverallStatus::DATA_ERROR;
    return std::nullopt;
}

namespace {

bool is_validator_id(const std::string& test_id) {
    return test_id == "schema" || test_id == "structure" || test_id == "duality" ||
           test_id.rfind("torres.", 0) == 0 || test_id == "factor_extraction";
}

class TestSelector {
public:
    explicit TestSelector(const std::vector<std::string>& prefixes) : prefixes_(prefixes) {}

    bool wants(const std::string& test_id) const {
        if (prefixes_.empty()) return true;
        for (const auto& p : prefixes_)
            if (test_id.rfind(p, 0) == 0) return true;
        return false;
    }

private:
    const std::vector<std::string>& prefixes_;
};

void finalize(RecordReport& rep, bool zero_poly, bool even_r) {
    bool data_error = false, obstructed = false;
    for (const Verdict& v : rep.verdicts) {
        if (v.status == Status::DATA_ERROR) data_error = true;
        if (v.status == Status::FAIL) {
            if (is_validator_id(v.test_id))
                data_error = true;
            else
                obstructed = true;
        }
    }
    rep.overall = data_error ? OverallStatus::DATA_ERROR
                             : (obstructed ? OverallStatus::OBSTRUCTED : OverallStatus::CONSISTENT);
    rep.conjecture_flag = even_r && zero_poly && rep.overall == OverallStatus::CONSISTENT;
}

RecordReport battery_for_record(const RecordParse& entry, const BatteryOptions& options) {
    RecordReport rep;
    rep.name = entry.name;
    const TestSelector want(options.tests);

    if (!entry.record) {
        rep.verdicts.push_back(Verdict::data_error("schema", entry.error));
        rep.overall = OverallStatus::DATA_ERROR;
        return rep;
    }
    const LinkRecord& rec = *entry.record;
    if (!rec.name.empty()) rep.name = rec.name;

    const auto problems = structural_problems(rec);
    if (!problems.empty()) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& p : problems) list.push_back(p);
        rep.verdicts.push_back(
            {Status::DATA_ERROR, "structure", {{"reason", "schema invariants violated"},
                                               {"problems", list}}});
        rep.overall = OverallStatus::DATA_ERROR;
        return rep;
    }

    const bool split = is_algebraically_split(rec);
    auto add = [&](Verdict v) {
        if (want.wants(v.test_id)) rep.verdicts.push_back(std::move(v));
    };

    // Validity identities.
    add(check_duality(rec));
    if (rec.r >= 2) {
        for (int d = 1; d <= rec.r; ++d) {
            const std::string id = "torres.delete_" + std::to_string(d);
            if (!want.wants(id)) continue;
            bool all_zero = true;
            for (int i = 1; i <= rec.r; ++i)
                if (i != d && rec.linking(i, d) != 0) all_zero = false;
            const IndexSet remaining =
                IndexSet::full(rec.r).set_minus(IndexSet::singleton(d));
            const bool checkable =
                all_zero || (rec.r == 2 ? rec.has_knot_polys()
                                        : rec.sublinks.count(remaining) != 0);
            if (checkable)
                add(check_torres(rec, d));
            else
                add(Verdict::not_applicable(id, "sublink data absent; identity not checkable"));
        }
    }

    // Linking screens.
    for (Verdict& v : linking_screen(rec)) add(std::move(v));

    // Sign-pattern symmetry, for the requested patterns only.
    for (const auto& eps : options.eps_vectors) {
        const std::string id = "eps_symmetry." + eps_pattern(eps);
        if (!want.wants(id)) continue;
        if (static_cast<int>(eps.size()) != rec.r)
            add(Verdict::not_applicable(id, "pattern length differs from component count"));
        else
            add(check_eps_symmetry(rec, eps));
    }

    // Two-variable divisibility.
    if (rec.r == 2) {
        for (TwoVarMode mode : {TwoVarMode::AMPHI, TwoVarMode::EPS_AMPHI}) {
            const char* id = (mode == TwoVarMode::AMPHI) ? "divisibility.amphicheiral"
                                                         : "divisibility.eps_amphicheiral";
            if (!want.wants(id)) continue;
            if (split)
                add(check_split_divisibility(rec.alexander, mode));
            else
                add(Verdict::not_applicable(id, "needs zero linking numbers"));
        }
    }

    // Factor machinery.
    const char* not_split_reason = "needs an algebraically split link";
    std::optional<SymmetricFactorFamily> family;
    std::string extraction_failure;
    if (split) {
        try {
            family = build_family(rec);
        } catch (const extract_error& e) {
            extraction_failure = e.what();
            nlohmann::json witness = {{"reason", e.what()},
                                      {"kind", e.kind() == extract_error::Kind::not_divisible
                                                   ? "not_divisible"
                                                   : "no_symmetric_rep"}};
            if (e.subset) witness["subset"] = e.subset->to_string();
            add({Status::DATA_ERROR, "factor_extraction", witness});
        }
    }

    auto gated_na = [&](const std::string& id) {
        if (!split) return Verdict::not_applicable(id, not_split_reason);
        return Verdict::not_applicable(id, "factor extraction failed");
    };

    if (family) {
        for (Verdict& v : check_factor_vanishing(*family)) add(std::move(v));
        add(check_parity_sums(*family, options.sign_mode, options.parity_options));
    } else {
        if (want.wants("factor_vanishing.single"))
            add(gated_na("factor_vanishing.single"));
        if (rec.r >= 2)
            for (int i = 1; i <= rec.r; ++i)
                add(gated_na("factor_vanishing.codim1." + std::to_string(i)));
        add(gated_na("parity_sums"));
    }

    // Diagonal specialization (works on the polynomial directly).
    if (split)
        add(check_diagonal_vanishing(rec.alexander));
    else
        add(Verdict::not_applicable("diagonal_vanishing", not_split_reason));

    finalize(rep, rec.alexander.is_zero(), rec.r % 2 == 0);
    return rep;
}

}  // namespace

Report run_battery(const std::vector<RecordParse>& records, const BatteryOptions& options) {
    Report report;
    for (const RecordParse& entry : records)
        report.records.push_back(battery_for_record(entry, options));
    return report;
}

int exit_code(const Report& report) {
    bool obstructed = false;
    for (const RecordReport& rep : report.records) {
        if (rep.overall == OverallStatus::DATA_ERROR) return 2;
        if (rep.overall == OverallStatus::OBSTRUCTED) obstructed = true;
    }
    return obstructed ? 1 : 0;
}

std::string emit_text(const Report& report) {
    std::ostringstream out;
    if (report.records.empty()) {
        out << "0 records\n";
        return out.str();
    }
    std::size_t consistent = 0, obstructed = 0, data_errors = 0;
    for (const RecordReport& rep : report.records) {
        out << "== " << rep.name << ": " << to_string(rep.overall);
        if (rep.conjecture_flag) out << " (zero polynomial, even components)";
        out << "\n";
        for (const Verdict& v : rep.verdicts) {
            out << "  " << to_string(v.status);
            for (std::size_t pad = to_string(v.status).size(); pad < 14; ++pad) out << ' ';
            out << " " << v.test_id;
            if (v.status != Status::PASS && !v.witness.empty())
                out << "  " << v.witness.dump();
            out << "\n";
        }
        switch (rep.overall) {
            case OverallStatus::CONSISTENT: ++consistent; break;
            case OverallStatus::OBSTRUCTED: ++obstructed; break;
            case OverallStatus::DATA_ERROR: ++data_errors; break;
        }
    }
    out << report.records.size() << " records: " << consistent << " consistent, " << obstructed
        << " obstructed, " << data_errors << " data errors\n";
    return out.str();
}

nlohmann::json report_to_json(const Report& report) {
    nlohmann::json records = nlohmann::json::array();
    for (const RecordReport& rep : report.records) {
        nlohmann::json verdicts = nlohmann::json::array();
        for (const Verdict& v : rep.verdicts)
            verdicts.push_back({{"status", to_string(v.status)},
                                {"test_id", v.test_id},
                                {"witness", v.witness}});
        records.push_back({{"name", rep.name},
                           {"overall", to_string(rep.overall)},
                           {"conjecture_flag", rep.conjecture_flag},
                           {"verdicts", verdicts}});
    }
    return records;
}

Report report_from_json(const nlohmann::json& j) {
    Report report;
    if (!j.is_array()) throw std::runtime_error("report JSON must be an array of record reports");
    for (const auto& rec : j) {
        RecordReport rep;
        rep.name = rec.at("name").get<std::string>();
        const auto overall = overall_status_from_string(rec.at("overall").get<std::string>());
        if (!overall) throw std::runtime_error("unknown overall status");
        rep.overall = *overall;
        rep.conjecture_flag = rec.at("conjecture_flag").get<bool>();
        for (const auto& v : rec.at("verdicts")) {
            Verdict verdict;
            const auto status = status_from_string(v.at("status").get<std::string>());
            if (!status) throw std::runtime_error("unknown verdict status");
            verdict.status = *status;
            verdict.test_id = v.at("test_id").get<std::string>();
            verdict.witness = v.at("witness");
            rep.verdicts.push_back(std::move(verdict));
        }
        report.records.push_back(std::move(rep));
    }
    return report;
}

}  // namespace amphicheck
