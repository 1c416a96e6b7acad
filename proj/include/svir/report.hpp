#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace svir {

enum class CheckStatus { Pass, Fail, Evidence };

inline const char* to_cstring(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "evidence";
    }
}

/// One concrete counterexample: the inputs tried and the two sides that
/// should have agreed, all in the library's expression grammar.
struct Witness {
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

/// Structured outcome of a verification sweep or probe.
struct VerificationReport {
    std::string check_name;
    std::string parameters;
    long window = 0;
    long max_deg = 0;
    long max_words = 0;
    CheckStatus status = CheckStatus::Pass;
    bool evidence_only = false;
    long checks = 0;
    long failures = 0;
    double elapsed_seconds = 0.0;
    std::vector<Witness> witnesses;
    std::vector<std::string> witness_rows;

    static constexpr std::size_t kMaxStoredWitnesses = 8;

    bool passed() const { return status != CheckStatus::Fail; }

    void record_failure(std::string inputs, std::string lhs, std::string rhs) {
        status = CheckStatus::Fail;
        ++failures;
        if (witnesses.size() < kMaxStoredWitnesses)
            witnesses.push_back({std::move(inputs), std::move(lhs), std::move(rhs)});
    }

    std::string summary_line() const {
        std::string tag = status == CheckStatus::Fail ? "[FAIL]"
                          : status == CheckStatus::Evidence ? "[EVIDENCE]"
                                                            : "[PASS]";
        std::string out = tag + " " + check_name;
        if (!parameters.empty()) out += " (" + parameters + ")";
        out += ": " + std::to_string(checks) + " checks";
        if (failures > 0) out += ", " + std::to_string(failures) + " failures";
        return out;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["probe"] = check_name;
        j["params"] = parameters;
        j["window"] = window;
        j["max_words"] = max_words;
        j["max_deg"] = max_deg;
        j["outcome"] = to_cstring(status);
        j["evidence_only"] = evidence_only;
        j["checks"] = checks;
        j["failures"] = failures;
        j["elapsed_seconds"] = elapsed_seconds;
        auto warray = nlohmann::ordered_json::array();
        for (const auto& w : witnesses)
            warray.push_back({{"inputs", w.inputs}, {"lhs", w.lhs}, {"rhs", w.rhs}});
        j["witnesses"] = warray;
        j["witness_rows"] = witness_rows;
        return j;
    }
};

}  // namespace svir
