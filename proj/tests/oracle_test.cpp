#include "dblpt/completion.hpp"
#include "dblpt/oracle.hpp"
#include "dblpt/resolution.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace dblpt;

namespace {

OracleConfig with_box(int x, int y, std::uint64_t prime = default_prime, std::uint64_t seed = 0)
{
    OracleConfig cfg;
    cfg.prime = prime;
    cfg.seed = seed;
    cfg.box = Bidegree{x, y};
    return cfg;
}

void expect_table_invariants(const HilbertTable& h, int degree)
{
    const auto box = h.box();
    for (int a = 0; a <= box.x; ++a) {
        for (int b = 0; b <= box.y; ++b) {
            EXPECT_LE(h.at(a, b), long{a + 1} * (b + 1));
            EXPECT_LE(h.at(a, b), degree);
            if (a > 0) {
                EXPECT_GE(h.at(a, b), h.at(a - 1, b));
            }
            if (b > 0) {
                EXPECT_GE(h.at(a, b), h.at(a, b - 1));
            }
        }
    }
    EXPECT_EQ(h.at(box.x, box.y), degree);
}

} // namespace

TEST(Oracle, SingleDoublePoint)
{
    const auto z = double_points_of(lam({1}));
    const auto h = hilbert_function(z, with_box(3, 3));
    EXPECT_EQ(h.at(0, 0), 1);
    for (int a = 1; a <= 3; ++a) {
        EXPECT_EQ(h.at(a, 0), 2);
        EXPECT_EQ(h.at(0, a), 2);
        for (int b = 1; b <= 3; ++b) {
            EXPECT_EQ(h.at(a, b), 3);
        }
    }
}

TEST(Oracle, RunningExampleStabilizesAtDegree)
{
    const auto z = double_points_of(lam({6, 5, 3, 1, 1}));
    const auto h = hilbert_function(z, OracleConfig{});
    EXPECT_EQ(h.box(), (Bidegree{11, 13}));
    expect_table_invariants(h, 48);
}

TEST(Oracle, HilbertFromResolution)
{
    FreeResolution single{{{2, 0}, {1, 1}, {0, 2}}, {{2, 1}, {1, 2}}, {}};
    const auto h = hilbert_from_resolution(single, {3, 3});
    EXPECT_EQ(h.at(1, 1), 3);
    EXPECT_EQ(h.at(2, 0), 2);
    EXPECT_EQ(h.at(0, 0), 1);
    EXPECT_EQ(h, hilbert_function(double_points_of(lam({1})), with_box(3, 3)));
}

TEST(Oracle, RejectsBadConfigurations)
{
    const auto z = double_points_of(lam({2, 1}));
    auto code_of = [&](const OracleConfig& cfg) {
        try {
            hilbert_function(z, cfg);
        } catch (const error& e) {
            return e.code();
        }
        ADD_FAILURE() << "accepted bad config";
        return errc::empty_input;
    };
    EXPECT_EQ(code_of(with_box(3, 3, 999983)), errc::invalid_config);
    EXPECT_EQ(code_of(with_box(3, 3, 1000001)), errc::invalid_config);
    EXPECT_EQ(code_of(with_box(-1, 3)), errc::box_too_small);

    OracleConfig tiny;
    tiny.prime = 3;
    try {
        draw_parameters(5, 1, tiny);
        FAIL() << "three residues cannot host five distinct parameters";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::parameter_collision);
    }

    try {
        verify(lam({2, 1}), with_box(3, 3), false);
        FAIL() << "box misses the shift (4,0)";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::box_too_small);
    }
}

TEST(Oracle, ParametersAreDeterministicAndDistinct)
{
    OracleConfig cfg;
    cfg.seed = 11;
    const auto a = draw_parameters(6, 7, cfg);
    const auto b = draw_parameters(6, 7, cfg);
    EXPECT_EQ(a.rows, b.rows);
    EXPECT_EQ(a.cols, b.cols);
    std::set<std::uint64_t> rows(a.rows.begin(), a.rows.end());
    std::set<std::uint64_t> cols(a.cols.begin(), a.cols.end());
    EXPECT_EQ(rows.size(), 6U);
    EXPECT_EQ(cols.size(), 7U);
}

TEST(Oracle, GeneratorCountsOfSingleDoublePoint)
{
    const auto counts = minimal_generator_counts(double_points_of(lam({1})), with_box(3, 3));
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            const bool expected = (a == 2 && b == 0) || (a == 1 && b == 1) || (a == 0 && b == 2);
            EXPECT_EQ(counts.at(a, b), expected ? 1 : 0) << a << "," << b;
        }
    }
}

TEST(Oracle, GeneratorCountsOfRunningExample)
{
    const auto p = lam({6, 5, 3, 1, 1});
    const auto expected_z = resolve(p).s0;
    const auto counts = minimal_generator_counts(double_points_of(p), OracleConfig{});
    ShiftMultiset found;
    for (int a = 0; a <= counts.box().x; ++a) {
        for (int b = 0; b <= counts.box().y; ++b) {
            ASSERT_GE(counts.at(a, b), 0);
            for (long k = 0; k < counts.at(a, b); ++k) {
                found.add({a, b});
            }
        }
    }
    EXPECT_EQ(found.size(), 15U);
    EXPECT_EQ(found, expected_z);

    const auto counts_y = minimal_generator_counts(completion_scheme(p), OracleConfig{});
    ShiftMultiset found_y;
    for (int a = 0; a <= counts_y.box().x; ++a) {
        for (int b = 0; b <= counts_y.box().y; ++b) {
            for (long k = 0; k < counts_y.at(a, b); ++k) {
                found_y.add({a, b});
            }
        }
    }
    EXPECT_EQ(found_y.size(), 9U);
    EXPECT_EQ(found_y, completion_resolution(p).s0);
}

TEST(Oracle, VerifyReports)
{
    const auto deep = verify(lam({6, 5, 3, 1, 1}), OracleConfig{}, true);
    EXPECT_TRUE(deep.pass);
    EXPECT_TRUE(deep.mismatches.empty());
    EXPECT_EQ(deep.box, (Bidegree{11, 13}));

    EXPECT_TRUE(verify(lam({2, 1}), OracleConfig{}, false).pass);
    EXPECT_TRUE(verify(lam({3, 3, 3}), OracleConfig{}, true).pass);
}

TEST(Oracle, VerifyFlagsACorruptedResolution)
{
    const auto p = lam({3, 2, 1});
    auto res = resolve(p);
    res.s2.add({5, 5});
    res.s1.add({5, 5});
    // Hilbert data cannot see a cancelling pair, the generator count can
    // only see s0: this corruption is invisible by design.
    EXPECT_TRUE(verify(p, res, OracleConfig{}, true).pass);

    auto broken = resolve(p);
    broken.s0.add({3, 3});
    broken.s1.add({4, 3});
    const auto report = verify(p, broken, OracleConfig{}, true);
    EXPECT_FALSE(report.pass);
    ASSERT_FALSE(report.mismatches.empty());
    EXPECT_EQ(report.mismatches.front().bidegree, (Bidegree{3, 3}));
}

TEST(Oracle, FormsLieInTheirIdeals)
{
    const auto p = lam({6, 5, 3, 1, 1});
    const auto y = completion_scheme(p);
    const auto z = double_points_of(p);
    for (const auto& g : generator_exponents_y(p)) {
        EXPECT_TRUE(form_in_ideal(y, g.form, OracleConfig{})) << to_string(g.corner);
    }
    for (const auto& f : generator_exponents_z(p)) {
        EXPECT_TRUE(form_in_ideal(z, f.form, OracleConfig{})) << to_string(f.corner);
        EXPECT_FALSE(form_in_ideal(y, f.form, OracleConfig{})) << to_string(f.corner);
    }
}

TEST(Oracle, IntermediateSchemesMatchSteps)
{
    // Z_ℓ has multiplicities given by the ledger matrix after step ℓ; F_ℓ
    // vanishes on Z_ℓ but not on Z_{ℓ-1}.
    for (const auto& p : {lam({6, 5, 3, 1, 1}), lam({3, 2, 1}), lam({4, 2, 2, 1})}) {
        const auto ledger = corner_ledger(p);
        const auto steps = resolve_steps(p, ledger);
        const auto forms = generator_exponents_z(p);
        FatPointScheme previous = completion_scheme(p);
        for (std::size_t k = 0; k < ledger.size(); ++k) {
            const FatPointScheme current(ledger[k].matrix_after.to_rows());
            const Bidegree box = default_box(current.rows(), current.cols());
            OracleConfig cfg;
            cfg.box = box;
            EXPECT_EQ(hilbert_function(current, cfg), hilbert_from_resolution(steps[k + 1], box))
                << to_string(p) << " step " << k + 1;
            EXPECT_TRUE(form_in_ideal(current, forms[k].form, cfg));
            EXPECT_FALSE(form_in_ideal(previous, forms[k].form, cfg));
            previous = current;
        }
    }
}

TEST(Oracle, PrimeIndependence)
{
    for (const auto& p : enumerate_partitions(3, 3)) {
        const auto z = double_points_of(p);
        OracleConfig a;
        OracleConfig b;
        b.prime = alternate_prime;
        b.seed = 99;
        ASSERT_EQ(hilbert_function(z, a), hilbert_function(z, b)) << to_string(p);
    }
}

TEST(OracleProperties, TableInvariantsOnSmallSchemes)
{
    for (const auto& p : enumerate_partitions(3, 4)) {
        const auto z = double_points_of(p);
        expect_table_invariants(hilbert_function(z, OracleConfig{}), z.degree());
        const auto y = completion_scheme(p);
        expect_table_invariants(hilbert_function(y, OracleConfig{}), y.degree());
    }
}
