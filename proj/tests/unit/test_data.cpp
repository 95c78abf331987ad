#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "ddbt/data.hpp"
#include "ddbt/errors.hpp"
#include "ddbt/experiment.hpp"
#include "ddbt/io.hpp"
#include "ddbt/oracle.hpp"
#include "fixtures.hpp"

using namespace ddbt;
using ddbt::testing::deskConfig;
using ddbt::testing::randn;
using ddbt::testing::randomStableModel;

namespace fs = std::filesystem;

TEST(Simulate, ImpulseThroughShiftRegister) {
    StateSpaceModel s{Matrix::Zero(2, 2), Matrix::Identity(2, 2), Matrix::Identity(2, 2), Matrix::Zero(2, 2)};
    const Index L = 4;
    const Vector x0 = Eigen::Vector2d(1, 0);
    const TrajectoryData t = data::simulate(s, Matrix::Zero(2, L), x0, Matrix::Zero(2, L), Matrix::Zero(2, L));
    Matrix X = Matrix::Zero(2, L + 1);
    X(0, 0) = 1;
    EXPECT_EQ(t.Xfull, X);
    EXPECT_EQ(t.Yminus, X.leftCols(L));
}

TEST(Simulate, NoiseFreeDataSatisfiesModelEquations) {
    std::mt19937_64 rng(3);
    const StateSpaceModel s = randomStableModel(rng, 4, 2, 3);
    const Index L = 30;
    const TrajectoryData t =
        data::simulate(s, randn(rng, 2, L), randn(rng, 4, 1).col(0), Matrix::Zero(4, L), Matrix::Zero(3, L));
    Matrix lhs(7, L), rhs(6, L);
    lhs << t.Xplus(), t.Yminus;
    rhs << t.Xminus(), t.Uminus;
    EXPECT_LT((lhs - s.stacked() * rhs).norm(), 1e-12 * (1 + lhs.norm()));
}

TEST(Simulate, DeterministicAndDimensionChecked) {
    std::mt19937_64 rng(5);
    const StateSpaceModel s = randomStableModel(rng, 3, 1, 1);
    const Matrix u = randn(rng, 1, 10), w = randn(rng, 3, 10), z = randn(rng, 1, 10);
    const Vector x0 = randn(rng, 3, 1).col(0);
    EXPECT_EQ(data::simulate(s, u, x0, w, z).Xfull, data::simulate(s, u, x0, w, z).Xfull);
    EXPECT_THROW(data::simulate(s, u, x0, randn(rng, 2, 10), z), DimensionMismatch);
}

TEST(ValidateNoise, Examples) {
    const NoiseModel nm = NoiseModel::energyBound(1.0, 2, 1);
    EXPECT_TRUE(data::validateNoise(nm, Matrix::Zero(1, 1), Matrix::Zero(1, 1)));
    EXPECT_FALSE(data::validateNoise(nm, Matrix::Constant(1, 1, 0.9), Matrix::Constant(1, 1, 0.9)));
    EXPECT_TRUE(data::validateNoise(nm, Matrix::Constant(1, 1, 0.6), Matrix::Constant(1, 1, 0.6)));
}

TEST(NoiseModel, EnergyBoundIsValid) {
    EXPECT_TRUE(NoiseModel::energyBound(0.1, 3, 5).isValid());
    EXPECT_FALSE(NoiseModel::energyBound(-0.1, 3, 5).isValid());
}

TEST(BuildN, LowerRightBlockAndDimensions) {
    const Experiment ex = experiment::generate(deskConfig(0.01, 1));
    const QmiSet N = data::buildN(ex.traj, ex.noise);
    EXPECT_EQ(N.dim(), 14);
    EXPECT_EQ(N.rowDim(), 7);
    EXPECT_EQ(N.colDim(), 7);
    Matrix XU(7, ex.traj.L());
    XU << ex.traj.Xminus(), ex.traj.Uminus;
    const Matrix expected = XU * ex.noise.phi22 * XU.transpose();
    EXPECT_LT((N.psi22() - expected).norm(), 1e-12 * expected.norm());
}

TEST(BuildN, TrueSystemIsMemberWhenNoiseValidates) {
    for (std::uint64_t seed : {1, 2, 3}) {
        const Experiment ex = experiment::generate(deskConfig(0.01, seed));
        ASSERT_TRUE(data::validateNoise(ex.noise, ex.w, ex.z));
        const QmiSet N = data::buildN(ex.traj, ex.noise);
        EXPECT_TRUE(qmi::isMember(N, ex.truth.stacked()));
        EXPECT_TRUE(qmi::checkSlaterByInertia(N));
        EXPECT_EQ(linalg::inertia(N.psi()).nPos, 7);
        EXPECT_TRUE(qmi::checkRegularity(N));
    }
}

TEST(BuildN, NoiseFreeCenterIsTrueSystem) {
    std::mt19937_64 rng(7);
    const StateSpaceModel s = randomStableModel(rng, 3, 2, 2);
    const Index L = 40;
    const TrajectoryData t =
        data::simulate(s, randn(rng, 2, L), randn(rng, 3, 1).col(0), Matrix::Zero(3, L), Matrix::Zero(2, L));
    const QmiSet N = data::buildN(t, NoiseModel::energyBound(1e-6, 5, L));
    EXPECT_TRUE(qmi::checkSlaterByInertia(N));
    EXPECT_LT((qmi::center(N) - s.stacked()).norm(), 1e-9 * s.stacked().norm());
}

TEST(FullRowRank, Examples) {
    std::mt19937_64 rng(9);
    const StateSpaceModel s = randomStableModel(rng, 3, 1, 1);
    const auto run = [&](const Matrix& u, const Vector& x0) {
        const Index L = u.cols();
        return data::simulate(s, u, x0, Matrix::Zero(3, L), Matrix::Zero(1, L));
    };
    EXPECT_FALSE(data::fullRowRankCheck(run(randn(rng, 1, 3), randn(rng, 3, 1).col(0))));
    EXPECT_TRUE(data::fullRowRankCheck(run(randn(rng, 1, 30), randn(rng, 3, 1).col(0))));
    EXPECT_FALSE(data::fullRowRankCheck(run(Matrix::Zero(1, 30), Vector::Zero(3))));
    const Experiment ex = experiment::generate(deskConfig(0.01, 1));
    EXPECT_TRUE(data::fullRowRankCheck(ex.traj));
}

TEST(BuiltinInput, Formula) {
    const Matrix u = data::referenceInput(200);
    ASSERT_EQ(u.rows(), 1);
    ASSERT_EQ(u.cols(), 200);
    for (Index k : {0, 1, 57, 199})
        EXPECT_DOUBLE_EQ(u(0, k), 2 * std::sin(double(k)) + std::cos(0.5 * double(k)));
}

TEST(Experiment, DeterministicInSeed) {
    const Experiment a = experiment::generate(deskConfig(0.02, 42));
    const Experiment b = experiment::generate(deskConfig(0.02, 42));
    const Experiment c = experiment::generate(deskConfig(0.02, 43));
    EXPECT_EQ(a.traj.Xfull, b.traj.Xfull);
    EXPECT_EQ(a.w, b.w);
    EXPECT_NE(a.traj.Xfull, c.traj.Xfull);
}

TEST(Experiment, NoiseModelIsScaledIdentityForm) {
    const Experiment ex = experiment::generate(deskConfig(0.01, 5));
    EXPECT_EQ(ex.phiRescale, 1.0);
    EXPECT_TRUE(ex.noise.phi11.isApprox(1.35 * 1e-4 * Matrix::Identity(7, 7), 1e-14));
    EXPECT_EQ(ex.noise.phi12.norm(), 0.0);
    EXPECT_EQ(ex.noise.phi22, -Matrix::Identity(200, 200));
}

TEST(Experiment, PerSampleModeRescalesWhenNeeded) {
    ExperimentConfig cfg = deskConfig(0.01, 5);
    cfg.normalization = NoiseNormalization::PerSample;
    cfg.maxRedraws = 3;
    const Experiment ex = experiment::generate(cfg);
    EXPECT_GT(ex.phiRescale, 1.0);
    EXPECT_TRUE(data::validateNoise(ex.noise, ex.w, ex.z));
}

TEST(Experiment, DeriveSeedDistinct) {
    EXPECT_NE(experiment::deriveSeed(1, 0), experiment::deriveSeed(1, 1));
    EXPECT_NE(experiment::deriveSeed(1, 0), experiment::deriveSeed(2, 0));
    EXPECT_EQ(experiment::deriveSeed(9, 4), experiment::deriveSeed(9, 4));
}

TEST(Io, CsvRoundTripIsExact) {
    std::mt19937_64 rng(13);
    const Matrix M = randn(rng, 4, 3);
    const fs::path p = fs::temp_directory_path() / "ddbt_test_roundtrip.csv";
    io::writeCsv(p, M);
    EXPECT_EQ(io::readCsv(p), M);
    fs::remove(p);
}

TEST(Io, MalformedCsvRejected) {
    const fs::path p = fs::temp_directory_path() / "ddbt_test_bad.csv";
    std::ofstream(p) << "1,2\n3\n";
    EXPECT_THROW(io::readCsv(p), InvalidConfig);
    std::ofstream(p) << "1,abc\n";
    EXPECT_THROW(io::readCsv(p), InvalidConfig);
    fs::remove(p);
}

TEST(Io, ConfigParsingAndValidation) {
    const io::Json good = io::Json::parse(R"({"system": "builtin:cart_double_pendulum", "L": 100,
        "input": {"type": "paper"}, "noise": {"sigma": 0.02, "phi_scale": 2.0}, "seed": 7, "order_r": 2})");
    const ExperimentConfig cfg = io::parseConfig(good);
    EXPECT_EQ(cfg.L, 100);
    EXPECT_EQ(cfg.sigma, 0.02);
    EXPECT_EQ(cfg.phiScale, 2.0);
    EXPECT_EQ(cfg.seed, 7u);
    EXPECT_EQ(cfg.orderR, 2);
    EXPECT_EQ(io::parseConfig(io::toJson(cfg)).sigma, 0.02);

    EXPECT_THROW(io::parseConfig(io::Json::parse(R"({"bogus": 1})")), InvalidConfig);
    EXPECT_THROW(io::parseConfig(io::Json::parse(R"({"L": -5})")), InvalidConfig);
    EXPECT_THROW(io::parseConfig(io::Json::parse(R"({"noise": {"sigma": "x"}})")), InvalidConfig);
    EXPECT_THROW(io::parseConfig(io::Json::parse(R"({"seed": -1})")), InvalidConfig);
    EXPECT_THROW(io::parseConfig(io::Json::parse(R"({"input": {"type": "file"}})")), InvalidConfig);
}

TEST(Io, FileSystemFromCsv) {
    const fs::path dir = fs::temp_directory_path() / "ddbt_test_sys";
    fs::create_directories(dir);
    const StateSpaceModel t = oracle::builtinTrueSystem();
    io::writeCsv(dir / "A.csv", t.A);
    io::writeCsv(dir / "B.csv", t.B);
    io::writeCsv(dir / "C.csv", t.C);
    io::writeCsv(dir / "D.csv", t.D);
    const io::Json j = io::Json::parse(R"({"system": {"A": "A.csv", "B": "B.csv", "C": "C.csv", "D": "D.csv"}})");
    const ExperimentConfig cfg = io::parseConfig(j, dir);
    EXPECT_EQ(experiment::loadSystem(cfg).A, t.A);
    fs::remove_all(dir);
}
