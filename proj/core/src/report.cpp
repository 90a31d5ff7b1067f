#include "egt/report.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace egt {

namespace {

constexpr std::array kFlags = {
    Flag::EgtViolation, Flag::BipViolation, Flag::SharpEgt,    Flag::SharpBip,
    Flag::NearSharpEgt, Flag::NearSharpBip, Flag::Triangular,  Flag::MindegPass,
    Flag::K4MinusFree,  Flag::OracleConfirmed,
};

constexpr std::array<std::string_view, 9> kFields = {
    "graph6", "n", "m", "alpha1", "tau", "taub", "slack_egt", "slack_bip", "flags",
};

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <typename T>
T to_int(std::string_view s, std::string_view field) {
    T v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw std::invalid_argument("bad integer for " + std::string(field) + ": '" +
                                    std::string(s) + "'");
    return v;
}

std::string flags_text_impl(std::uint32_t flags) {
    std::string out;
    for (Flag f : kFlags) {
        if ((flags & static_cast<std::uint32_t>(f)) == 0) continue;
        if (!out.empty()) out += '|';
        out += flag_name(f);
    }
    return out;
}

std::uint32_t parse_flags(std::string_view s) {
    std::uint32_t flags = 0;
    if (s.empty()) return flags;
    for (auto name : split(s, '|')) {
        bool found = false;
        for (Flag f : kFlags) {
            if (flag_name(f) == name) {
                flags |= static_cast<std::uint32_t>(f);
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("unknown flag '" + std::string(name) + "'");
    }
    return flags;
}

VerificationRecord from_fields(const std::array<std::string_view, 9> &v) {
    VerificationRecord r;
    r.graph6 = std::string(v[0]);
    r.n = to_int<int>(v[1], kFields[1]);
    r.m = to_int<int>(v[2], kFields[2]);
    r.alpha1 = to_int<int>(v[3], kFields[3]);
    r.tau = to_int<int>(v[4], kFields[4]);
    r.taub = to_int<int>(v[5], kFields[5]);
    r.slack_egt = to_int<long>(v[6], kFields[6]);
    r.slack_bip = to_int<long>(v[7], kFields[7]);
    r.flags = parse_flags(v[8]);
    return r;
}

}  // namespace

std::string_view flag_name(Flag f) {
    switch (f) {
    case Flag::EgtViolation: return "egt_violation";
    case Flag::BipViolation: return "bip_violation";
    case Flag::SharpEgt: return "sharp_egt";
    case Flag::SharpBip: return "sharp_bip";
    case Flag::NearSharpEgt: return "near_sharp_egt";
    case Flag::NearSharpBip: return "near_sharp_bip";
    case Flag::Triangular: return "triangular";
    case Flag::MindegPass: return "mindeg_pass";
    case Flag::K4MinusFree: return "k4minus_free";
    case Flag::OracleConfirmed: return "oracle_confirmed";
    }
    return "?";
}

std::span<const Flag> all_flags() { return kFlags; }

std::string format_flags(std::uint32_t flags) { return flags_text_impl(flags); }

ReportFormat parse_report_format(std::string_view name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "text") return ReportFormat::Text;
    throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

std::string csv_header() {
    std::string out;
    for (auto f : kFields) {
        if (!out.empty()) out += ',';
        out += f;
    }
    return out;
}

std::string format_record(const VerificationRecord &r, ReportFormat format) {
    const std::array<std::string, 9> values = {
        r.graph6,
        std::to_string(r.n),
        std::to_string(r.m),
        std::to_string(r.alpha1),
        std::to_string(r.tau),
        std::to_string(r.taub),
        std::to_string(r.slack_egt),
        std::to_string(r.slack_bip),
        flags_text_impl(r.flags),
    };
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (format == ReportFormat::Csv) {
            if (i > 0) out += ',';
        } else {
            if (i > 0) out += ' ';
            out += kFields[i];
            out += '=';
        }
        out += values[i];
    }
    return out;
}

VerificationRecord parse_record(std::string_view line, ReportFormat format) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    const auto parts = split(line, format == ReportFormat::Csv ? ',' : ' ');
    if (parts.size() != kFields.size())
        throw std::invalid_argument("expected " + std::to_string(kFields.size()) + " fields, got " +
                                    std::to_string(parts.size()));
    std::array<std::string_view, 9> values;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (format == ReportFormat::Csv) {
            values[i] = parts[i];
            continue;
        }
        const auto eq = parts[i].find('=');
        if (eq == std::string_view::npos || parts[i].substr(0, eq) != kFields[i])
            throw std::invalid_argument("expected field '" + std::string(kFields[i]) + "'");
        values[i] = parts[i].substr(eq + 1);
    }
    return from_fields(values);
}

void emit_report(std::span<const VerificationRecord> records, ReportFormat format, std::ostream &out) {
    ReportWriter writer(out, format);
    for (const auto &r : records) writer.write(r);
}

ReportWriter::ReportWriter(std::ostream &out, ReportFormat format, bool write_header)
    : out_(out), format_(format) {
    if (write_header && format_ == ReportFormat::Csv) out_ << csv_header() << '\n';
    if (!out_) throw std::runtime_error("report sink write failed");
}

void ReportWriter::write(const VerificationRecord &r) {
    out_ << format_record(r, format_) << '\n';
    if (!out_) throw std::runtime_error("report sink write failed");
}

}  // namespace egt
