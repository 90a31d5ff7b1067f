#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace egt {

inline constexpr int kReportSchemaVersion = 1;

enum class Flag : std::uint32_t {
    EgtViolation = 1U << 0,
    BipViolation = 1U << 1,
    SharpEgt = 1U << 2,
    SharpBip = 1U << 3,
    NearSharpEgt = 1U << 4,
    NearSharpBip = 1U << 5,
    Triangular = 1U << 6,
    MindegPass = 1U << 7,
    K4MinusFree = 1U << 8,
    OracleConfirmed = 1U << 9,
};

std::string_view flag_name(Flag f);

/// Flags in serialisation order.
std::span<const Flag> all_flags();

/// Set flags joined by '|' in serialisation order.
std::string format_flags(std::uint32_t flags);

/// One graph's verification result. Slack values are the scaled-integer forms
/// n² − 4(α₁+τ) and n² − 4(α₁+τ_B).
struct VerificationRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    int alpha1 = 0;
    int tau = 0;
    int taub = 0;
    long slack_egt = 0;
    long slack_bip = 0;
    std::uint32_t flags = 0;

    bool has(Flag f) const { return (flags & static_cast<std::uint32_t>(f)) != 0; }
    void set(Flag f) { flags |= static_cast<std::uint32_t>(f); }

    friend bool operator==(const VerificationRecord &, const VerificationRecord &) = default;
};

enum class ReportFormat { Csv, Text };

ReportFormat parse_report_format(std::string_view name);

std::string csv_header();
std::string format_record(const VerificationRecord &r, ReportFormat format);

/// Inverse of format_record for either format; throws std::invalid_argument on bad input.
VerificationRecord parse_record(std::string_view line, ReportFormat format);

/// Writes the csv header (csv mode) followed by one line per record in order.
void emit_report(std::span<const VerificationRecord> records, ReportFormat format, std::ostream &out);

/// Incremental form of emit_report.
class ReportWriter {
public:
    ReportWriter(std::ostream &out, ReportFormat format, bool write_header = true);
    void write(const VerificationRecord &r);

private:
    std::ostream &out_;
    ReportFormat format_;
};

}  // namespace egt
