#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "qsv/embedded_fixtures.hpp"
#include "qsv/report_io.hpp"

using namespace qsv;

namespace {

ScenarioReport paradox_run() {
    const std::vector<Atom> query{down(Particle::B, Axis::z), up(Particle::B, Axis::x)};
    return run_epr(Axis::z, query);
}

} // namespace

TEST(Semantics, ParseAndPrint) {
    for (auto s : {Semantics::Super, Semantics::Classical, Semantics::Both}) EXPECT_EQ(parse_semantics(to_string(s)), s);
    EXPECT_THROW(parse_semantics("quantum"), ParseError);
}

TEST(ReportJson, FieldNames) {
    const OrderedJson j = to_json(paradox_run(), Semantics::Both);
    for (const char* key : {"axis", "verified", "semantics", "state", "valuations", "populations", "note"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["state"]["prepared"], OrderedJson({"0", "1", "-1", "0"}));
    EXPECT_EQ(j["state"]["post"], OrderedJson({"0", "1", "0", "0"}));
    EXPECT_EQ(j["valuations"]["before"][0]["proposition"], "A.x.up & B.x.down ^ A.x.down & B.x.up");
    EXPECT_EQ(j["valuations"]["before"][0]["super"], "true");
    EXPECT_EQ(j["populations"]["super"]["tuples"], OrderedJson::array());
    EXPECT_EQ(j["populations"]["classical"]["tuples"], OrderedJson::parse("[[1,0],[1,1]]"));
    EXPECT_EQ(j["populations"]["classical"]["labels"], OrderedJson({"B.z.down", "B.x.up"}));
    EXPECT_FALSE(j.contains("fixtures"));
}

TEST(ReportJson, SemanticsFiltersColumns) {
    const ScenarioReport r = paradox_run();
    const OrderedJson super = to_json(r, Semantics::Super);
    EXPECT_TRUE(super["populations"].contains("super"));
    EXPECT_FALSE(super["populations"].contains("classical"));
    EXPECT_FALSE(super["valuations"]["after"][0].contains("classical"));

    const OrderedJson classical = to_json(r, Semantics::Classical);
    EXPECT_FALSE(classical["populations"].contains("super"));
    EXPECT_FALSE(classical["valuations"]["after"][0].contains("super"));
}

TEST(ReportJson, RoundTripIsByteIdentical) {
    ScenarioReport r = paradox_run();
    const auto records = audit_fixtures(load_fixtures(kEmbeddedFixturesJson));
    r.fixtures = summarize(records);
    for (auto s : {Semantics::Super, Semantics::Classical, Semantics::Both}) {
        const std::string text = to_json(r, s).dump(2);
        EXPECT_EQ(OrderedJson::parse(text).dump(2), text);
    }
    const std::string fixtures = to_json(records).dump(2);
    EXPECT_EQ(OrderedJson::parse(fixtures).dump(2), fixtures);
}

TEST(ReportJson, PopulationRoundTrip) {
    const ScenarioReport r = paradox_run();
    EXPECT_EQ(population_from_json(to_json(r.classical_population)), r.classical_population);
    EXPECT_EQ(population_from_json(to_json(r.super_population)), r.super_population);
}

TEST(ReportTable, ShowsBothPopulations) {
    const std::string t = to_table(paradox_run(), Semantics::Both);
    EXPECT_NE(t.find("classical       {(1,0),(1,1)}"), std::string::npos) << t;
    EXPECT_NE(t.find("supervaluation  {}"), std::string::npos) << t;
    EXPECT_NE(t.find("population of (B.z.down, B.x.up)"), std::string::npos) << t;
    EXPECT_EQ(to_table(paradox_run(), Semantics::Both), t);
}

TEST(ReportTable, SemanticsFilter) {
    const std::string t = to_table(paradox_run(), Semantics::Super);
    EXPECT_EQ(t.find("classical"), std::string::npos);
}

TEST(FixtureReport, JsonRecordsAndSummary) {
    const auto records = audit_fixtures(load_fixtures(kEmbeddedFixturesJson));
    const OrderedJson j = to_json(records);
    ASSERT_EQ(j["fixtures"].size(), records.size());
    for (const auto& rec : j["fixtures"])
        for (const char* key : {"label", "kind", "status", "derived", "printed", "detail"}) EXPECT_TRUE(rec.contains(key));
    EXPECT_EQ(j["summary"]["match"], 21);
    EXPECT_EQ(j["summary"]["mismatch"], 6);
}

TEST(FixtureReport, TableListsValuesForMismatches) {
    const auto records = audit_fixtures(load_fixtures(kEmbeddedFixturesJson));
    const std::string t = to_table(records);
    EXPECT_NE(t.find("eq37.final"), std::string::npos);
    EXPECT_NE(t.find("derived: span{[1,0,0,-1],[0,1,-1,0]}"), std::string::npos) << t;
    EXPECT_NE(t.find("21 match, 6 mismatch"), std::string::npos);
}
