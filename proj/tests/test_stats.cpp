#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "graspsyn/catalog.hpp"
#include "graspsyn/errors.hpp"
#include "graspsyn/rng.hpp"
#include "graspsyn/stats.hpp"
#include "graspsyn/synthetic.hpp"
#include "graspsyn/types.hpp"
#include "oracles.hpp"

using namespace graspsyn;

namespace {

// Builds a trial whose channels are prescribed verbatim (constant time
// base step, no noise). channels[c] supplies both the samples.
GraspTrial scripted_trial(GraspType type,
                          const std::array<std::vector<double>, 5>& forces,
                          const std::array<std::vector<double>, 5>& angles) {
    GraspTrial trial;
    trial.meta.subject_id = "S01";
    trial.meta.object = ObjectSpec{"Gadget", type, 100.0};
    const std::size_t n = forces[0].size();
    trial.meta.duration_s = static_cast<double>(n) / 40.0;
    for (std::size_t i = 0; i < n; ++i)
        trial.series.t_s.push_back(static_cast<double>(i) / 40.0);
    trial.series.force_n = forces;
    trial.series.angle_deg = angles;
    return trial;
}

std::vector<double> ramp(std::size_t n, double a, double b) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a + (b - a) * static_cast<double>(i) /
                         static_cast<double>(n - 1);
    return out;
}

}  // namespace

TEST_CASE("pearson on a worked example") {
    const std::vector<double> x = {1, 2, 3, 4};
    const std::vector<double> y = {1, 3, 2, 4};
    CHECK(pearson(x, y) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(pearson(y, x) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("pearson agrees with direct summation") {
    SeededRng rng(314);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 64);
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = 10.0 + 3.0 * rng.gaussian();
            y[i] = 0.4 * x[i] + rng.gaussian();
        }
        const double got = pearson(x, y);
        const double want = oracle::direct_pearson(x, y);
        REQUIRE(std::abs(got - want) <= 1e-10);
        REQUIRE(got >= -1.0);
        REQUIRE(got <= 1.0);
    }
}

TEST_CASE("pearson invariances") {
    SeededRng rng(7);
    std::vector<double> x(40), y(40);
    for (std::size_t i = 0; i < 40; ++i) {
        x[i] = 5.0 + 2.0 * rng.gaussian();
        y[i] = -1.0 + 0.5 * rng.gaussian();
    }
    const double r = pearson(x, y);
    // Affine transforms with positive scale leave r unchanged.
    std::vector<double> x2(40), y2(40);
    for (std::size_t i = 0; i < 40; ++i) {
        x2[i] = 3.5 * x[i] - 11.0;
        y2[i] = 0.25 * y[i] + 2.0;
    }
    CHECK(pearson(x2, y2) == doctest::Approx(r).epsilon(1e-12));
    // Negating one side negates r; self-correlation is exactly 1.
    for (double& v : y2) v = -v;
    CHECK(pearson(x2, y2) == doctest::Approx(-r).epsilon(1e-12));
    CHECK(pearson(x, x) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pearson rejects degenerate input") {
    const std::vector<double> x = {1, 2, 3, 4, 5};
    CHECK_THROWS_AS(pearson(x, std::vector<double>{1, 2, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(pearson(std::vector<double>{1.0}, std::vector<double>{2.0}),
                    std::invalid_argument);

    const std::vector<double> constant(5, 3.25);
    CHECK_THROWS_AS(pearson(x, constant), UndefinedCorrelationError);
    // Spread at the level of representation noise counts as constant.
    std::vector<double> nearly(5, 5.0);
    SeededRng rng(1);
    for (double& v : nearly) v += 1e-14 * rng.uniform();
    CHECK_THROWS_AS(pearson(x, nearly), UndefinedCorrelationError);
}

TEST_CASE("grasp type correlations on scripted trials") {
    // Index and middle forces move together; ring opposes them.
    const std::size_t n = 200;
    std::array<std::vector<double>, 5> forces = {
        ramp(n, 1.0, 2.0), ramp(n, 0.5, 4.5), ramp(n, 1.0, 9.0),
        ramp(n, 6.0, 1.0), ramp(n, 2.0, 3.0)};
    std::array<std::vector<double>, 5> angles = {
        ramp(n, 10.0, 40.0), ramp(n, 15.0, 55.0), ramp(n, 20.0, 50.0),
        ramp(n, 18.0, 44.0), ramp(n, 12.0, 30.0)};
    // Break the perfect collinearity so r is informative but < 1.
    SeededRng rng(9);
    for (int c = 0; c < 5; ++c)
        for (std::size_t i = 0; i < n; ++i) {
            forces[c][i] += 0.05 * rng.gaussian();
            angles[c][i] += 0.2 * rng.gaussian();
        }
    const GraspTrial trial =
        scripted_trial(GraspType::CylindricalGrip, forces, angles);

    CorrelationOptions options;
    options.domain = SignalDomain::Force;
    const TypeCorrelations result =
        grasp_type_correlations(std::vector<GraspTrial>{trial}, options);
    REQUIRE(result.by_type.count(GraspType::CylindricalGrip) == 1);
    const CorrelationMatrix& m = result.by_type.at(GraspType::CylindricalGrip);

    for (int i = 0; i < 5; ++i) {
        REQUIRE(m.r[i][i].has_value());
        CHECK(*m.r[i][i] == doctest::Approx(1.0).epsilon(1e-12));
        for (int j = 0; j < 5; ++j) {
            REQUIRE(m.r[i][j].has_value());
            CHECK(*m.r[i][j] == doctest::Approx(*m.r[j][i]).epsilon(1e-12));
        }
    }
    // Matches a direct pearson of the same windows.
    CHECK(*m.r[1][2] ==
          doctest::Approx(oracle::direct_pearson(forces[1], forces[2]))
              .epsilon(1e-12));
    CHECK(*m.r[1][2] > 0.9);
    CHECK(*m.r[2][3] < -0.9);
    CHECK(!m.has_undefined);
}

TEST_CASE("constant channels yield undefined cells, not failures") {
    const std::size_t n = 120;
    std::array<std::vector<double>, 5> forces = {
        ramp(n, 0.5, 3.0), ramp(n, 0.5, 5.0), std::vector<double>(n, 2.0),
        ramp(n, 1.0, 2.0), ramp(n, 1.0, 4.0)};
    std::array<std::vector<double>, 5> angles = {
        ramp(n, 5.0, 30.0), ramp(n, 5.0, 35.0), ramp(n, 5.0, 25.0),
        ramp(n, 5.0, 20.0), ramp(n, 5.0, 28.0)};
    const GraspTrial trial =
        scripted_trial(GraspType::PulpPinch, forces, angles);

    CorrelationOptions options;
    const TypeCorrelations result =
        grasp_type_correlations(std::vector<GraspTrial>{trial}, options);
    const CorrelationMatrix& m = result.by_type.at(GraspType::PulpPinch);
    CHECK(m.has_undefined);
    CHECK(!m.r[2][0].has_value());
    CHECK(!m.r[0][2].has_value());
    CHECK(!m.r[2][2].has_value());  // 0/0 even against itself
    CHECK(m.r[0][1].has_value());
    CHECK(m.r[0][0].has_value());
}

TEST_CASE("no-contact trials are skipped with a warning") {
    const std::size_t n = 120;
    std::array<std::vector<double>, 5> quiet{};
    for (int c = 0; c < 5; ++c) quiet[c].assign(n, 0.01);
    std::array<std::vector<double>, 5> angles = {
        ramp(n, 5.0, 30.0), ramp(n, 5.0, 35.0), ramp(n, 5.0, 25.0),
        ramp(n, 5.0, 20.0), ramp(n, 5.0, 28.0)};
    const GraspTrial trial = scripted_trial(GraspType::HookGrasp, quiet, angles);

    CorrelationOptions options;
    const TypeCorrelations result =
        grasp_type_correlations(std::vector<GraspTrial>{trial}, options);
    CHECK(result.by_type.empty());
    REQUIRE(result.warnings.size() >= 1);
    CHECK(result.warnings.front().find("Gadget") != std::string::npos);
}

TEST_CASE("cross-domain correlations pair force rows with angle columns") {
    const std::size_t n = 160;
    std::array<std::vector<double>, 5> forces{};
    std::array<std::vector<double>, 5> angles{};
    SeededRng rng(21);
    for (int c = 0; c < 5; ++c) {
        forces[c] = ramp(n, 0.5, 2.0 + c);
        angles[c] = ramp(n, 10.0, 60.0 - 4.0 * c);
        for (std::size_t i = 0; i < n; ++i) {
            forces[c][i] += 0.02 * rng.gaussian();
            angles[c][i] += 0.3 * rng.gaussian();
        }
    }
    // Make one angle anti-correlated with its force.
    for (std::size_t i = 0; i < n; ++i) angles[4][i] = 80.0 - 10.0 * forces[4][i];

    const GraspTrial trial =
        scripted_trial(GraspType::SphericalGrasp, forces, angles);
    CorrelationOptions options;
    options.mode = CorrelationMode::CrossDomain;
    const TypeCorrelations result =
        grasp_type_correlations(std::vector<GraspTrial>{trial}, options);
    const CorrelationMatrix& m = result.by_type.at(GraspType::SphericalGrasp);

    CHECK(*m.r[0][0] ==
          doctest::Approx(oracle::direct_pearson(forces[0], angles[0]))
              .epsilon(1e-12));
    CHECK(*m.r[4][4] < -0.999);
    // Cross matrix need not be symmetric.
    CHECK(*m.r[0][4] ==
          doctest::Approx(oracle::direct_pearson(forces[0], angles[4]))
              .epsilon(1e-12));
}

TEST_CASE("hold-only windows honour manual annotations") {
    // Before the hold the thumb force plunges while the index force
    // rises; inside the hold they co-move. The window choice must flip
    // the correlation's sign.
    const std::size_t n = 200;
    std::array<std::vector<double>, 5> forces{};
    std::array<std::vector<double>, 5> angles{};
    for (int c = 0; c < 5; ++c) {
        forces[c] = ramp(n, 1.0, 2.0);
        angles[c] = ramp(n, 10.0, 30.0);
    }
    forces[0] = ramp(n, 8.0, 1.0);
    for (std::size_t i = 100; i < n; ++i)
        forces[0][i] = forces[1][i] + 0.5;  // co-moving in the hold
    SeededRng rng(3);
    for (int c = 0; c < 2; ++c)
        for (std::size_t i = 0; i < n; ++i) forces[c][i] += 0.01 * rng.gaussian();

    GraspTrial trial = scripted_trial(GraspType::TripodPinch, forces, angles);
    trial.meta.manual_phases = PhaseAnnotation{0, 0, 50, 100, 200};

    CorrelationOptions options;
    options.window = CorrelationWindow::HoldOnly;
    const TypeCorrelations hold =
        grasp_type_correlations(std::vector<GraspTrial>{trial}, options);
    options.window = CorrelationWindow::FullTrial;
    const TypeCorrelations full =
        grasp_type_correlations(std::vector<GraspTrial>{trial}, options);

    CHECK(*hold.by_type.at(GraspType::TripodPinch).r[0][1] > 0.9);
    CHECK(*full.by_type.at(GraspType::TripodPinch).r[0][1] < 0.0);
    std::vector<double> f0(forces[0].begin() + 100, forces[0].end());
    std::vector<double> f1(forces[1].begin() + 100, forces[1].end());
    CHECK(*hold.by_type.at(GraspType::TripodPinch).r[0][1] ==
          doctest::Approx(oracle::direct_pearson(f0, f1)).epsilon(1e-12));
}

TEST_CASE("correlation extrema rank types per finger pair") {
    auto matrix_with = [](double r01) {
        CorrelationMatrix m;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) m.r[i][j] = (i == j) ? 1.0 : 0.1;
        m.r[0][1] = m.r[1][0] = r01;
        return m;
    };
    std::map<GraspType, CorrelationMatrix> force;
    force[GraspType::SphericalGrasp] = matrix_with(0.95);
    force[GraspType::LateralPinch] = matrix_with(-0.4);
    force[GraspType::HookGrasp] = matrix_with(0.2);
    std::map<GraspType, CorrelationMatrix> posture;

    const CorrelationExtrema extrema = correlation_extrema(force, posture);
    CHECK(extrema.posture.empty());
    REQUIRE(extrema.force.size() == 10);  // 5 choose 2
    const PairExtremum& thumb_index = extrema.force.front();
    CHECK(thumb_index.first == FingerId::Thumb);
    CHECK(thumb_index.second == FingerId::Index);
    CHECK(thumb_index.max_r == doctest::Approx(0.95));
    CHECK(thumb_index.max_type == GraspType::SphericalGrasp);
    CHECK(thumb_index.min_r == doctest::Approx(-0.4));
    CHECK(thumb_index.min_type == GraspType::LateralPinch);
}

TEST_CASE("planted flat-timing correlations are recovered") {
    // With collapsed timings every sample sits in the hold, so the
    // planted measurement-noise correlation between index and middle
    // becomes the dominant within-trial signal.
    SyntheticConfig cfg;
    cfg.seed = 5;
    cfg.subjects = {"S01"};
    cfg.objects = {*find_object("Apple")};
    cfg.trials_per_object = 30;
    cfg.timings = PhaseTimings{0, 0, 0, 0};
    // Freeze the hold targets so the pooled series varies only through
    // the measurement noise carrying the planted correlation.
    cfg.synergy = SyntheticConfig::default_synergy();
    cfg.synergy.coefficient_sigma = Eigen::VectorXd::Zero(3);
    cfg.angle_target_sigma_deg = {0, 0, 0, 0, 0};
    cfg.force_target_sigma_n = {0, 0, 0, 0, 0};
    Eigen::Matrix<double, 5, 5> corr = Eigen::Matrix<double, 5, 5>::Identity();
    corr(1, 2) = corr(2, 1) = 0.9;
    cfg.force_noise_correlation = corr;
    const SyntheticDataset data = synthesize_dataset(cfg);

    CorrelationOptions options;
    const TypeCorrelations result =
        grasp_type_correlations(data.trials, options);
    const CorrelationMatrix& m = result.by_type.at(GraspType::SphericalGrasp);
    REQUIRE(m.r[1][2].has_value());
    CHECK(*m.r[1][2] == doctest::Approx(0.9).epsilon(0.06));
    CHECK(std::abs(*m.r[3][4]) < 0.2);
}
