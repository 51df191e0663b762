#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <string>

#include "qsv/embedded_fixtures.hpp"
#include "qsv/fixtures.hpp"
#include "qsv/projector.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qsv;
using D = Direction;

namespace {

const Scalar half(Rational(1, 2));
const Scalar quarter(Rational(1, 4));

StateVector e(std::size_t k) {
    Vector v(4);
    v[k - 1] = 1;
    return StateVector(std::move(v));
}

Matrix diag(std::initializer_list<int> d) {
    Matrix m(d.size(), d.size());
    std::size_t k = 0;
    for (int x : d) {
        m(k, k) = x;
        ++k;
    }
    return m;
}

Projector p_z(D a, D b) { return pair_projector(Axis::z, a, b); }
Projector p_x(D a, D b) { return pair_projector(Axis::x, a, b); }

const Matrix kDiffX = half * Matrix{{1, 0, 0, -1}, {0, 1, -1, 0}, {0, -1, 1, 0}, {-1, 0, 0, 1}};
const Matrix kDiffY = half * Matrix{{1, 0, 0, 1}, {0, 1, -1, 0}, {0, -1, 1, 0}, {1, 0, 0, 1}};

} // namespace

TEST(Projector, ConstructorRejectsNonProjectors) {
    EXPECT_THROW(Projector(Matrix(2, 3)), InvalidProjectorError);
    EXPECT_THROW(Projector(Matrix{{1, 1}, {0, 0}}), InvalidProjectorError); // idempotent, not Hermitian
    EXPECT_THROW(Projector(Matrix{{2, 0}, {0, 0}}), InvalidProjectorError); // Hermitian, not idempotent
    EXPECT_NO_THROW(Projector{kDiffX});
    EXPECT_NO_THROW(Projector{kDiffY});
}

TEST(Projector, EveryConstructedProjectorIsHermitianAndIdempotent) {
    gen::Generator g(211);
    for (int k = 0; k < 100; ++k) {
        const Projector p = g.projector(4);
        EXPECT_TRUE(oracle::is_hermitian(p.matrix()));
        EXPECT_EQ(oracle::naive_product(p.matrix(), p.matrix()), p.matrix());
    }
}

TEST(ProjectorFromSpan, Examples) {
    EXPECT_EQ(projector_from_span({e(2)}).matrix(), diag({0, 1, 0, 0}));

    const Matrix expected =
        quarter * Matrix{{1, 1, -1, -1}, {1, 1, -1, -1}, {-1, -1, 1, 1}, {-1, -1, 1, 1}};
    EXPECT_EQ(projector_from_span({StateVector{1, 1, -1, -1}}).matrix(), expected);

    EXPECT_EQ(projector_from_span({e(1), e(2), e(3), e(4)}).matrix(), Matrix::identity(4));
}

TEST(ProjectorFromSpan, Errors) {
    EXPECT_THROW(projector_from_span({StateVector{1, 0}, StateVector{1, 0, 0, 0}}), ShapeError);
    EXPECT_THROW(projector_from_span(std::span<const StateVector>{}), ShapeError);
}

TEST(ProjectorFromSpan, RangeIsTheSpan) {
    gen::Generator g(223);
    for (int k = 0; k < 100; ++k) {
        const Subspace s = g.subspace(4);
        EXPECT_EQ(range_of(projector_onto(s)), s);
    }
}

TEST(RangeOf, Examples) {
    const Projector diff_z(p_z(D::up, D::down).matrix() + p_z(D::down, D::up).matrix());
    EXPECT_EQ(range_of(diff_z), Subspace::span({e(2), e(3)}));
    EXPECT_EQ(range_of(Projector::zero(4)), Subspace::zero(4));
    EXPECT_EQ(range_of(Projector(kDiffX)), Subspace::span({StateVector{1, 0, 0, -1}, StateVector{0, 1, -1, 0}}));
}

TEST(KernelOf, Examples) {
    EXPECT_EQ(kernel_of(Projector::identity(4)), Subspace::zero(4));
    EXPECT_EQ(kernel_of(p_z(D::up, D::down)), Subspace::span({e(1), e(3), e(4)}));
    EXPECT_TRUE(contains(kernel_of(p_z(D::up, D::up)), StateVector{0, 1, -1, 0}));
}

TEST(KernelOf, IsOrthocomplementOfRange) {
    gen::Generator g(227);
    for (int k = 0; k < 100; ++k) {
        const Projector p = g.projector(4);
        EXPECT_EQ(kernel_of(p), orthocomplement(range_of(p)));
    }
    for (auto j : kAxes)
        for (auto a : {D::up, D::down})
            for (auto b : {D::up, D::down}) {
                const Projector p = pair_projector(j, a, b);
                EXPECT_EQ(kernel_of(p), orthocomplement(range_of(p)));
            }
}

TEST(ProjectorMeet, Examples) {
    EXPECT_EQ(projector_meet(p_z(D::up, D::down), p_z(D::down, D::up)), Projector::zero(4));
    const Projector p = p_x(D::up, D::down);
    EXPECT_EQ(projector_meet(p, p), p);

    const Projector diff_z(diag({0, 1, 1, 0}));
    EXPECT_EQ(projector_meet(diff_z, Projector(kDiffX)), projector_from_span({StateVector{0, 1, -1, 0}}));
    EXPECT_THROW(projector_meet(p, Projector::identity(2)), ShapeError);
}

TEST(ProjectorJoin, Examples) {
    EXPECT_EQ(projector_join(p_z(D::up, D::down), p_z(D::down, D::up)).matrix(), diag({0, 1, 1, 0}));
    const Projector p = p_x(D::down, D::up);
    EXPECT_EQ(projector_join(p, Projector::zero(4)), p);
    EXPECT_EQ(projector_join(p_x(D::up, D::down), p_x(D::down, D::up)).matrix(), kDiffX);
    EXPECT_THROW(projector_join(p, Projector::identity(2)), ShapeError);
}

TEST(ProjectorLattice, RangesFollowSubspaceLattice) {
    gen::Generator g(229);
    for (int k = 0; k < 100; ++k) {
        const Projector a = g.projector(4), b = g.projector(4);
        EXPECT_EQ(range_of(projector_meet(a, b)), meet(range_of(a), range_of(b)));
        EXPECT_EQ(range_of(projector_join(a, b)), join(range_of(a), range_of(b)));
    }
}

TEST(ProjectorLattice, OrthogonalJoinIsMatrixSum) {
    gen::Generator g(233);
    int checked = 0;
    for (int k = 0; k < 100; ++k) {
        const Subspace s = g.subspace(4);
        const Projector a = projector_onto(s);
        const Projector b = projector_onto(g.subspace_of(orthocomplement(s)));
        ASSERT_TRUE(orthogonal(a, b));
        EXPECT_EQ(projector_join(a, b).matrix(), a.matrix() + b.matrix());
        ++checked;
    }
    EXPECT_EQ(checked, 100);
}

TEST(ProjectorLattice, CommutingMeetIsProduct) {
    gen::Generator g(239);
    int commuting = 0;
    for (int k = 0; k < 200; ++k) {
        // Sub-projectors of a common orthogonal decomposition commute.
        const Subspace s = g.subspace(4);
        const Subspace t = g.subspace_of(s);
        const Projector a = projector_onto(s);
        const Projector b = g.coin() ? projector_onto(t) : g.projector(4);
        if (!commute(a, b)) continue;
        ++commuting;
        EXPECT_EQ(projector_meet(a, b).matrix(), oracle::naive_product(a.matrix(), b.matrix()));
    }
    EXPECT_GT(commuting, 50);
}

TEST(ProjectorLattice, ComplementIsOrthogonalAndSumsToIdentity) {
    gen::Generator g(241);
    for (int k = 0; k < 50; ++k) {
        const Projector p = g.projector(4);
        const Projector c = complement(p);
        EXPECT_TRUE(orthogonal(p, c));
        EXPECT_EQ(projector_join(p, c), Projector::identity(4));
    }
}

class EmbeddedFixtures : public ::testing::Test {
protected:
    void SetUp() override {
        fixtures_ = load_fixtures(kEmbeddedFixturesJson);
        records_ = audit_fixtures(fixtures_);
        for (const auto& r : records_) by_label_.emplace(r.label, r);
    }

    const FixtureRecord& record(const std::string& label) const { return by_label_.at(label); }

    std::vector<PrintedFixture> fixtures_;
    std::vector<FixtureRecord> records_;
    std::map<std::string, FixtureRecord> by_label_;
};

TEST_F(EmbeddedFixtures, EveryPrintedFixtureHasADerivation) {
    const auto labels = derivable_labels();
    for (const auto& f : fixtures_) EXPECT_TRUE(std::ranges::binary_search(labels, f.label)) << f.label;
    EXPECT_EQ(fixtures_.size(), labels.size());
}

TEST_F(EmbeddedFixtures, ExpectedMatches) {
    for (const char* label :
         {"eq22.zz", "eq23", "eq24", "eq25", "eq26", "eq28", "eq29", "eq30", "eq31.matrix", "eq31.range",
          "eq33.state", "eq34.summand2", "eq34.final", "eq35.updown", "eq35.downup", "eq36.state", "eq36.range",
          "eq37.summand1", "eq37.summand2", "eq38.updown", "eq38.downup"})
        EXPECT_EQ(record(label).status, FixtureStatus::Match) << label << ": " << record(label).detail;
}

TEST_F(EmbeddedFixtures, KnownDiscrepancies) {
    for (const char* label : {"eq22.xx", "eq22.yy", "eq33.range", "eq34.summand1", "eq37.final", "eq39.chain"})
        EXPECT_EQ(record(label).status, FixtureStatus::Mismatch) << label;
    EXPECT_EQ(summarize(records_).mismatched, 6U);
}

TEST_F(EmbeddedFixtures, Eq37FinalDerivedHasPositiveCorners) {
    const auto& r = record("eq37.final");
    EXPECT_EQ(r.derived, to_string(kDiffY));
    EXPECT_EQ(r.detail, "entries differ at (1,4) (4,1)");
}

TEST_F(EmbeddedFixtures, Eq37FinalIsSumOfPrintedSummands) {
    const auto find = [&](const std::string& label) {
        return *std::ranges::find(fixtures_, label, &PrintedFixture::label)->printed_matrix;
    };
    const Matrix summed = find("eq37.summand1") + find("eq37.summand2");
    EXPECT_EQ(summed, kDiffY);
    EXPECT_NE(summed, find("eq37.final"));
}

TEST_F(EmbeddedFixtures, Eq33RangeIsAProperSubspaceOfThePrintedFamily) {
    const auto& r = record("eq33.range");
    EXPECT_EQ(r.derived, "span{[1,0,0,-1],[0,1,-1,0]}");
    EXPECT_EQ(r.detail, "derived dimension 2, printed dimension 3; derived is a proper subspace of printed");
}

TEST_F(EmbeddedFixtures, Eq34FirstSummandIsNotHermitian) {
    const auto& r = record("eq34.summand1");
    EXPECT_NE(r.detail.find("printed matrix is not Hermitian"), std::string::npos) << r.detail;
    EXPECT_EQ(r.derived, to_string(p_x(D::up, D::down).matrix()));
}

TEST_F(EmbeddedFixtures, SingletLiesInEveryDiffRange) {
    for (auto j : kAxes) {
        const Projector diff = projector_join(pair_projector(j, D::up, D::down), pair_projector(j, D::down, D::up));
        EXPECT_TRUE(contains(range_of(diff), StateVector{0, 1, -1, 0}));
    }
}

TEST(FixtureAudit, UnknownLabelAndWrongKindAreReportedNotThrown) {
    const std::string json = R"({"version":1,"fixtures":[
        {"label":"nope","kind":"vector","vector":["1","0"]},
        {"label":"eq25","kind":"vector","vector":["0","1","0","0"]}]})";
    const auto records = audit_fixtures(load_fixtures(json));
    ASSERT_EQ(records.size(), 2U);
    EXPECT_EQ(records[0].status, FixtureStatus::Mismatch);
    EXPECT_EQ(records[1].status, FixtureStatus::Mismatch);
}

TEST(FixtureAudit, ScaleIsApplied) {
    const std::string json = R"({"version":1,"fixtures":[{"label":"eq34.final","kind":"matrix","scale":"1/2",
        "rows":[["1","0","0","-1"],["0","1","-1","0"],["0","-1","1","0"],["-1","0","0","1"]]}]})";
    const auto records = audit_fixtures(load_fixtures(json));
    EXPECT_EQ(records.at(0).status, FixtureStatus::Match);
}

TEST(FixtureAudit, MalformedFilesAreParseErrors) {
    EXPECT_THROW(load_fixtures("{"), ParseError);
    EXPECT_THROW(load_fixtures(R"({"version":2,"fixtures":[]})"), ParseError);
    EXPECT_THROW(load_fixtures(R"({"version":1,"fixtures":[{"label":"eq25","kind":"blob"}]})"), ParseError);
    EXPECT_THROW(load_fixtures(R"({"version":1,"fixtures":[{"label":"eq25","kind":"matrix"}]})"), ParseError);
    EXPECT_THROW(load_fixtures_file("/nonexistent/fixtures.json"), ParseError);
}
