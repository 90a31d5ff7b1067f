#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "egt/graph6.hpp"
#include "egt/report.hpp"
#include "support/oracle.hpp"

using namespace egt;

namespace {

Graph6ErrorKind parse_error_kind(std::string_view text) {
    try {
        parse_graph6(text);
    } catch (const Graph6Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for '" << text << "'";
    return Graph6ErrorKind::MalformedHeader;
}

}  // namespace

// Reference strings below were produced by networkx.to_graph6_bytes.
TEST(Graph6, KnownEncodings) {
    EXPECT_EQ(parse_graph6("@"), empty_graph(1));
    EXPECT_EQ(parse_graph6("Bw"), complete(3));
    EXPECT_EQ(parse_graph6("C~"), complete(4));
    EXPECT_EQ(parse_graph6("?"), empty_graph(0));
    EXPECT_EQ(parse_graph6("Dhc"), cycle(5));
    EXPECT_EQ(parse_graph6("EFz_"), complete_bipartite(3, 3));
    EXPECT_EQ(parse_graph6("IheA@GUAo"), petersen());
    EXPECT_EQ(parse_graph6("Bg"), path(3));

    EXPECT_EQ(encode_graph6(complete(3)), "Bw");
    EXPECT_EQ(encode_graph6(empty_graph(1)), "@");
    EXPECT_EQ(encode_graph6(complete(4)), "C~");
    EXPECT_EQ(encode_graph6(petersen()), "IheA@GUAo");
}

TEST(Graph6, AcceptsLineEndingsAndBanner) {
    EXPECT_EQ(parse_graph6("Bw\r\n"), complete(3));
    EXPECT_EQ(parse_graph6(">>graph6<<C~"), complete(4));
}

TEST(Graph6, ExtendedHeader) {
    // '~' then 18-bit n = 63: 0,0,63 -> "??~", no edges.
    const std::string text = "~??~" + std::string((63 * 62 / 2 + 5) / 6, '?');
    const Graph g = parse_graph6(text);
    EXPECT_EQ(g.order(), 63);
    EXPECT_EQ(g.size(), 0);
    EXPECT_EQ(parse_error_kind("~?A?"), Graph6ErrorKind::CapacityExceeded);  // n = 128
    EXPECT_EQ(parse_error_kind("~?@@"), Graph6ErrorKind::CapacityExceeded);  // n = 65
    EXPECT_EQ(parse_graph6("~?@?" + std::string(2016 / 6, '~')), complete(64));
    EXPECT_EQ(parse_error_kind("~~??"), Graph6ErrorKind::MalformedHeader);
    EXPECT_EQ(parse_error_kind("~?"), Graph6ErrorKind::MalformedHeader);
    EXPECT_EQ(parse_error_kind("~???"), Graph6ErrorKind::MalformedHeader);
    EXPECT_THROW(encode_graph6(g), CapacityError);
}

TEST(Graph6, ErrorKinds) {
    EXPECT_EQ(parse_error_kind(""), Graph6ErrorKind::MalformedHeader);
    EXPECT_EQ(parse_error_kind("B w"), Graph6ErrorKind::CharOutOfRange);
    EXPECT_EQ(parse_error_kind("C"), Graph6ErrorKind::TruncatedPayload);
    EXPECT_EQ(parse_error_kind("Bww"), Graph6ErrorKind::TrailingData);
    EXPECT_EQ(parse_error_kind("B~"), Graph6ErrorKind::NonzeroPadding);
    EXPECT_EQ(parse_error_kind("@@"), Graph6ErrorKind::TrailingData);
}

TEST(Graph6, ErrorCarriesLineNumber) {
    try {
        parse_graph6("B~", 17);
        FAIL();
    } catch (const Graph6Error &e) {
        EXPECT_EQ(e.line(), 17U);
        EXPECT_NE(std::string(e.what()).find("line 17"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("nonzero-padding"), std::string::npos);
    }
}

TEST(Graph6, RoundTripProperty) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 3000; ++i) {
        const int n = static_cast<int>(rng() % 63);
        const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const Graph g = egt::testing::random_graph(n, p, rng);
        const std::string text = encode_graph6(g);
        ASSERT_EQ(parse_graph6(text), g) << text;
        EXPECT_EQ(encode_graph6(parse_graph6(text)), text);
        // Padding bits are zero: the last payload char has only the used high bits set.
        const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
        if (bits % 6 != 0) {
            const int last = text.back() - 63;
            EXPECT_EQ(last & ((1 << (6 - bits % 6)) - 1), 0);
        }
    }
}

TEST(GraphStream, YieldsGraphsInOrder) {
    std::istringstream in(">>graph6<<\nBw\n\nC~\n");
    GraphStream stream(in);
    auto a = stream.next();
    ASSERT_TRUE(a && a->ok());
    EXPECT_EQ(a->line, 2U);
    EXPECT_EQ(a->graph(), complete(3));
    auto b = stream.next();
    ASSERT_TRUE(b && b->ok());
    EXPECT_EQ(b->line, 4U);
    EXPECT_EQ(b->graph(), complete(4));
    EXPECT_FALSE(stream.next());
}

TEST(GraphStream, EmptyInput) {
    std::istringstream in("");
    GraphStream stream(in);
    EXPECT_FALSE(stream.next());
}

TEST(GraphStream, LenientModeReportsErrorAndContinues) {
    std::istringstream in("Bw\nB~\nC~\n");
    GraphStream stream(in, /*strict=*/false);
    EXPECT_TRUE(stream.next()->ok());
    auto bad = stream.next();
    ASSERT_TRUE(bad);
    ASSERT_FALSE(bad->ok());
    EXPECT_EQ(bad->error().line(), 2U);
    EXPECT_EQ(bad->error().kind(), Graph6ErrorKind::NonzeroPadding);
    auto last = stream.next();
    ASSERT_TRUE(last && last->ok());
    EXPECT_EQ(last->graph(), complete(4));
}

TEST(GraphStream, StrictModeThrows) {
    std::istringstream in("Bw\nB~\nC~\n");
    GraphStream stream(in);
    EXPECT_TRUE(stream.next()->ok());
    EXPECT_THROW(stream.next(), Graph6Error);
}

TEST(Report, CsvRowForK4) {
    VerificationRecord r{"C~", 4, 6, 2, 2, 2, 0, 0, 0};
    r.set(Flag::SharpEgt);
    r.set(Flag::SharpBip);
    r.set(Flag::Triangular);
    std::ostringstream out;
    emit_report(std::vector{r}, ReportFormat::Csv, out);
    EXPECT_EQ(out.str(),
              "graph6,n,m,alpha1,tau,taub,slack_egt,slack_bip,flags\n"
              "C~,4,6,2,2,2,0,0,sharp_egt|sharp_bip|triangular\n");
}

TEST(Report, EmptyAndMultiple) {
    std::ostringstream empty;
    emit_report({}, ReportFormat::Csv, empty);
    EXPECT_EQ(empty.str(), csv_header() + "\n");

    std::ostringstream text;
    const std::vector<VerificationRecord> rs = {{"Bw", 3, 3, 1, 1, 1, 1, 1, 0},
                                                {"Dhc", 5, 5, 5, 0, 1, 5, 1, 0}};
    emit_report(rs, ReportFormat::Text, text);
    EXPECT_EQ(text.str(),
              "graph6=Bw n=3 m=3 alpha1=1 tau=1 taub=1 slack_egt=1 slack_bip=1 flags=\n"
              "graph6=Dhc n=5 m=5 alpha1=5 tau=0 taub=1 slack_egt=5 slack_bip=1 flags=\n");
}

TEST(Report, RecordsRoundTripThroughBothFormats) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const Graph g = egt::testing::random_graph(static_cast<int>(rng() % 20), 0.5, rng);
        VerificationRecord r{encode_graph6(g), g.order(), g.size(),
                             static_cast<int>(rng() % 50), static_cast<int>(rng() % 50),
                             static_cast<int>(rng() % 50), static_cast<long>(rng() % 200) - 100,
                             static_cast<long>(rng() % 200) - 100,
                             static_cast<std::uint32_t>(rng() % 1024)};
        for (auto format : {ReportFormat::Csv, ReportFormat::Text})
            EXPECT_EQ(parse_record(format_record(r, format), format), r);
    }
    EXPECT_THROW(parse_record("C~,4,6", ReportFormat::Csv), std::invalid_argument);
    EXPECT_THROW(parse_record("C~,4,6,2,2,2,0,0,bogus", ReportFormat::Csv), std::invalid_argument);
}
