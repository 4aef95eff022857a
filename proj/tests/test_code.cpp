#include <gtest/gtest.h>

#include <cmath>

#include "qcent/catalog.hpp"
#include "qcent/code.hpp"
#include "qcent/random.hpp"

using namespace qcent;

namespace {

const CodeSubspace& code_named(const catalog::NamedInstance& inst, const std::string& label) {
    for (const auto& [name, code] : inst.codes) {
        if (name == label) return code;
    }
    throw std::out_of_range(label);
}

}  // namespace

TEST(CodeSubspace, RequiresOrthonormalBasis) {
    EXPECT_THROW(CodeSubspace(2, {Vector{1.0, 0.0}, Vector{1.0, 1.0}}), DomainError);
    EXPECT_THROW(CodeSubspace(3, {Vector{1.0, 0.0}}), ShapeError);
    const auto c = CodeSubspace::from_unnormalized(2, {Vector{1.0, 1.0}, Vector{1.0, -1.0}});
    EXPECT_NEAR(c.projector().trace().real(), 2.0, 1e-15);
}

TEST(KnillLaflamme, NonDegenerateCodeHasFlatLambda) {
    const auto inst = catalog::table1_instances();
    const auto kl = kl_check(inst.channel, code_named(inst, "code1"));
    const double t = 1.0 / 3.0;
    EXPECT_LT(frobenius_norm(kl.lambda.matrix - t * Matrix::identity(3)), 1e-14);
    EXPECT_LT(kl.max_residual, 1e-14);
}

TEST(KnillLaflamme, PartiallyDegenerateLambda) {
    const auto inst = catalog::table1_instances();
    const auto kl = kl_check(inst.channel, code_named(inst, "code2"));
    // X1 acts as the identity on span{|000>+|100>, |011>+|111>}.
    const double t = 1.0 / 3.0;
    const Matrix expected{{t, t, 0.0}, {t, t, 0.0}, {0.0, 0.0, t}};
    EXPECT_LT(frobenius_norm(kl.lambda.matrix - expected), 1e-14);
}

TEST(KnillLaflamme, ViolationReportsResidual) {
    const auto inst = catalog::table1_instances();
    const CodeSubspace bad(8, {Vector::basis(8, 0), Vector::basis(8, 4)});
    EXPECT_THROW(kl_check(inst.channel, bad), NotCorrectable);
    try {
        kl_check(inst.channel, bad);
    } catch (const NotCorrectable& e) {
        EXPECT_GT(e.residual(), e.threshold());
    }
}

TEST(KnillLaflamme, VerdictInvariantUnderKrausRescaling) {
    // A global rescaling of the Kraus list leaves Lambda's normalized form and the verdict unchanged.
    const auto inst = catalog::table1_instances();
    std::vector<Matrix> scaled;
    for (const auto& k : inst.channel.kraus()) scaled.push_back(1e3 * k);
    const QuantumChannel big(std::move(scaled));
    EXPECT_NO_THROW(kl_check(big, code_named(inst, "code2")));
    EXPECT_THROW(kl_check(big, CodeSubspace(8, {Vector::basis(8, 0), Vector::basis(8, 4)})), NotCorrectable);
}

TEST(Classification, TableCodes) {
    const auto inst = catalog::table1_instances();
    const auto r1 = classify_code(inst.channel, code_named(inst, "code1"));
    const auto r2 = classify_code(inst.channel, code_named(inst, "code2"));
    const auto r3 = classify_code(inst.channel, code_named(inst, "code3"));
    EXPECT_EQ(r1.classification, CodeClass::NonDegenerate);
    EXPECT_EQ(r2.classification, CodeClass::PartiallyDegenerate);
    EXPECT_EQ(r3.classification, CodeClass::DecoherenceFree);
    EXPECT_EQ(r1.lambda_rank, 3);
    EXPECT_EQ(r2.lambda_rank, 2);
    EXPECT_EQ(r3.lambda_rank, 1);
    EXPECT_NEAR(r1.entropy_bits, std::log2(3.0), 1e-12);
    EXPECT_NEAR(r2.entropy_bits, std::log2(3.0) - 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(r3.entropy_bits, 0.0, 1e-12);
}

TEST(Classification, UnitarilyCorrectableButNotDecoherenceFree) {
    // Every Kraus operator is proportional to X on the code, so Lambda has rank one.
    const QuantumChannel c = pauli_channel({{0.5, "XX"}, {0.5, "XX"}});
    const CodeSubspace code(4, {Vector::basis(4, 0), Vector::basis(4, 3)});
    const auto r = classify_code(c, code);
    EXPECT_EQ(r.classification, CodeClass::UnitarilyCorrectable);
    EXPECT_FALSE(r.decoherence_free);
}

TEST(Stabilizer, ClosedFormEntropy) {
    Rng rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        const double p = u(rng);
        const double q = u(rng);
        const double r = u(rng);
        EXPECT_NEAR(code_entropy(catalog::bitflip_channel(p, q, r), catalog::stabilizer_code()),
                    catalog::stabilizer_entropy(p, q, r), 1e-10);
    }
}

TEST(SigmaEqualsLambda, HoldsOnTableCodes) {
    const auto inst = catalog::table1_instances();
    for (const auto& [name, code] : inst.codes) EXPECT_TRUE(sigma_equals_lambda_check(inst.channel, code, 5, 1));
}

TEST(Recovery, UndoesErrorsOnCode) {
    const auto inst = catalog::table1_instances();
    for (const auto& [name, code] : inst.codes) {
        const auto rec = build_recovery(inst.channel, code);
        EXPECT_NO_THROW(validate_channel(rec.channel)) << name;
        EXPECT_LT(recovery_residual(rec.channel, inst.channel, code), 1e-10) << name;
        EXPECT_LT(rec.verification_residual, 1e-10) << name;
    }
}

TEST(Recovery, CorrectionCountMatchesLambdaRank) {
    const auto inst = catalog::table1_instances();
    const auto rec = build_recovery(inst.channel, code_named(inst, "code2"));
    EXPECT_EQ(rec.correction_count, 2u);
}

TEST(RankBound, LambdaRankAtMostChoiRank) {
    const auto inst = catalog::stabilizer_instance();
    EXPECT_TRUE(rank_bound_check(inst.channel, catalog::stabilizer_code()));
}
