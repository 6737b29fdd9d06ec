#pragma once

#include <ostream>

#include <json.hpp>

namespace quatks {

// JSON Lines sink: one object per check, a summary object last. Field order
// is kept stable (ordered_json) so identical runs are byte-identical.
class ReportWriter {
public:
    explicit ReportWriter(std::ostream& out) : out_(out) {}

    void emit(nlohmann::ordered_json record) {
        bool pass = record.value("pass", false);
        ++checks_;
        if (!pass) ++failures_;
        out_ << record.dump() << "\n";
    }

    void finish() {
        nlohmann::ordered_json summary;
        summary["entry"] = "-";
        summary["check"] = "summary";
        summary["checks"] = checks_;
        summary["failures"] = failures_;
        summary["pass"] = failures_ == 0;
        out_ << summary.dump() << "\n";
    }

    int checks() const { return checks_; }
    int failures() const { return failures_; }

private:
    std::ostream& out_;
    int checks_ = 0;
    int failures_ = 0;
};

}  // namespace quatks
