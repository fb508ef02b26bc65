#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pfsdist/distance.hpp"
#include "support/generators.hpp"
#include "support/matrix_oracle.hpp"

using namespace pfsdist;

namespace {

PfsSet pair_set(const std::string& name, double mu1, double nu1, double mu2,
                double nu2) {
    return PfsSet(name, {PfsElement("x1", mu1, nu1), PfsElement("x2", mu2, nu2)});
}

PfsSet single(const std::string& name, double mu, double nu) {
    return PfsSet(name, {PfsElement("x", mu, nu)});
}

// Benchmark case pairs used throughout (same data as data/example2_cases.json).
const PfsSet kA1 = pair_set("A1", 0.55, 0.45, 0.63, 0.55);
const PfsSet kB1 = pair_set("B1", 0.39, 0.50, 0.50, 0.59);
const PfsSet kA4 = pair_set("A4", 0.71, 0.63, 0.63, 0.55);
const PfsSet kB4 = pair_set("B4", 0.77, 0.55, 0.55, 0.45);
const PfsSet kA6 = pair_set("A6", 0.30, 0.20, 0.40, 0.30);
const PfsSet kB6 = pair_set("B6", 0.15, 0.25, 0.25, 0.35);
const PfsSet kA8 = pair_set("A8", 0.50, 0.40, 0.40, 0.30);
const PfsSet kB8 = pair_set("B8", 0.40, 0.40, 0.50, 0.40);

}  // namespace

TEST_CASE("method parsing and validation") {
    CHECK(DistanceMethod::parse("matrix")->kind() == MeasureKind::PfsMatrix);
    CHECK(DistanceMethod::parse("ifs-hamming")->kind() == MeasureKind::IfsHamming);
    CHECK(DistanceMethod::parse("chen")->kind() == MeasureKind::PfsChen);
    CHECK_FALSE(DistanceMethod::parse("hausdorff").has_value());
    CHECK(DistanceMethod::chen(1.0).beta() == 1.0);
    CHECK_THROWS_AS(DistanceMethod::chen(0.5), RangeError);
}

TEST_CASE("intuitionistic hamming on raw pairs") {
    CHECK(d_hamming_ifs_norm(kA6, kB6) == doctest::Approx(0.1500).epsilon(1e-12));
    CHECK(d_hamming_ifs_norm(kA1, kB1) == doctest::Approx(0.145).epsilon(1e-12));
    // printed reference rounds to 0.1464; stays within the table tolerance
    CHECK(std::abs(d_hamming_ifs_norm(kA1, kB1) - 0.1464) <= 0.002);
    CHECK(d_hamming_ifs_norm(kA1, kA1) == 0.0);
}

TEST_CASE("intuitionistic euclidean on raw pairs") {
    CHECK(d_euclid_ifs_norm(kA1, kB1) ==
          doctest::Approx(0.129228479833201).epsilon(1e-12));
    CHECK(std::abs(d_euclid_ifs_norm(kA1, kB1) - 0.1298) <= 0.002);
    CHECK(d_euclid_ifs_norm(kA8, kB8) ==
          doctest::Approx(std::sqrt(0.02)).epsilon(1e-12));
    CHECK(d_euclid_ifs_norm(kB4, kB4) == 0.0);
}

TEST_CASE("naive triple keeps the signed residual") {
    const auto t = as_ifs_naive(PfsElement("x", 0.71, 0.63));
    CHECK(t.pi == doctest::Approx(1.0 - 0.71 - 0.63).epsilon(1e-12));
    CHECK(t.pi < 0.0);
}

TEST_CASE("pythagorean hamming") {
    CHECK(d_hamming_pfs_norm(kA1, kB1) == doctest::Approx(0.14865).epsilon(1e-12));
    CHECK(std::abs(d_hamming_pfs_norm(kA1, kB1) - 0.1500) <= 0.002);
    CHECK(d_hamming_pfs_norm(kA6, kB6) == doctest::Approx(0.0825).epsilon(1e-12));
    CHECK(d_hamming_pfs_norm(kA4, kA4) == 0.0);
}

TEST_CASE("pythagorean euclidean") {
    CHECK(d_euclid_pfs_norm(kA1, kB1) ==
          doctest::Approx(0.13170561871082).epsilon(1e-12));
    CHECK(std::abs(d_euclid_pfs_norm(kA1, kB1) - 0.1323) <= 0.002);
    // case 4 disagrees with the printed reference value 0.1414; the
    // regeneration harness reports it instead of patching it.
    CHECK(d_euclid_pfs_norm(kA4, kB4) ==
          doctest::Approx(0.13558288977596).epsilon(1e-12));
    CHECK(d_euclid_pfs_norm(kB8, kB8) == 0.0);
}

TEST_CASE("chen exponent family and its degenerate forms") {
    CHECK_THROWS_AS(d_chen_norm(kA1, kB1, 0.99), RangeError);
    CHECK(d_chen_norm(kA1, kB1, 3.7) >= 0.0);
    CHECK(d_chen_norm(kA1, kA1, 3.7) == 0.0);

    testing::SetGenerator gen(9001);
    for (int i = 0; i < 2000; ++i) {
        const std::size_t n = gen.universe_size();
        const PfsSet a = gen.pfs_set("a", n);
        const PfsSet b = gen.pfs_set("b", n);
        // bitwise, not just within tolerance
        CHECK(d_chen_norm(a, b, 1.0) == d_hamming_pfs_norm(a, b));
        CHECK(d_chen_norm(a, b, 2.0) == d_euclid_pfs_norm(a, b));
    }
}

TEST_CASE("difference vector") {
    const auto m = build_diff_vector(PfsElement("x", 0.6, 0.6),
                                     PfsElement("x", 0.3, 0.3));
    CHECK(m.d_y == doctest::Approx(0.27).epsilon(1e-12));
    CHECK(m.d_n == doctest::Approx(0.27).epsilon(1e-12));
    CHECK(m.d_h == doctest::Approx(-0.54).epsilon(1e-12));

    const auto zero = build_diff_vector(PfsElement("x", 0.4, 0.2),
                                        PfsElement("x", 0.4, 0.2));
    CHECK(zero.d_y == 0.0);
    CHECK(zero.d_n == 0.0);
    CHECK(zero.d_h == 0.0);

    testing::SetGenerator gen(9002);
    for (int i = 0; i < 2000; ++i) {
        const auto [mua, nua] = gen.pfs_pair();
        const auto [mub, nub] = gen.pfs_pair();
        const auto d = build_diff_vector(PfsElement("x", mua, nua),
                                         PfsElement("x", mub, nub));
        CHECK(std::abs(d.d_y + d.d_n + d.d_h) <= 1e-12);
    }
}

TEST_CASE("adjustment matrix bottom row") {
    const auto w = build_adjustment_matrix(PfsElement("x", 0.6, 0.6),
                                           PfsElement("x", 0.3, 0.3));
    CHECK(w.y_weight == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w.n_weight == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w.h_weight == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    // both fully hesitant: the symmetric limit, never a division by zero
    const auto degenerate = build_adjustment_matrix(PfsElement("x", 0.0, 0.0),
                                                    PfsElement("x", 0.0, 0.0));
    CHECK(degenerate.y_weight == 0.5);
    CHECK(degenerate.n_weight == 0.5);
    CHECK(degenerate.h_weight == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    const auto sweep = build_adjustment_matrix(
        PfsElement("x", std::sqrt(0.1), std::sqrt(0.9)), PfsElement("x", 0.0, 1.0));
    CHECK(sweep.y_weight == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(sweep.n_weight == doctest::Approx(0.95).epsilon(1e-12));
    CHECK(sweep.h_weight == doctest::Approx(0.308220700148449).epsilon(1e-12));

    testing::SetGenerator gen(9003);
    for (int i = 0; i < 2000; ++i) {
        const auto [mua, nua] = gen.pfs_pair();
        const auto [mub, nub] = gen.pfs_pair();
        const auto row = build_adjustment_matrix(PfsElement("x", mua, nua),
                                                 PfsElement("x", mub, nub));
        CHECK(row.y_weight >= 0.0);
        CHECK(row.n_weight >= 0.0);
        CHECK(row.h_weight >= 0.0);
        CHECK(row.y_weight <= 1.0);
        CHECK(row.n_weight <= 1.0);
        CHECK(row.h_weight <= 1.0);
        CHECK(std::abs(row.y_weight + row.n_weight - 1.0) <= 1e-12);
        CHECK(std::abs(row.y_weight * row.y_weight + row.n_weight * row.n_weight +
                       row.h_weight * row.h_weight - 1.0) <= 1e-12);
    }
}

TEST_CASE("vector transform against the implied matrix") {
    const DiffVector m{0.27, 0.27, -0.54};
    const AdjustmentMatrix w{0.5, 0.5, std::sqrt(0.5)};
    const auto v = transform_vector(m, w);
    CHECK(v[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(v[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(v[2] == doctest::Approx(-0.381837661840736).epsilon(1e-12));

    const auto zero = transform_vector(DiffVector{0.0, 0.0, 0.0}, w);
    CHECK(zero[0] == 0.0);
    CHECK(zero[1] == 0.0);
    CHECK(zero[2] == 0.0);

    // zero hesitance difference leaves the first two coordinates unchanged
    const auto flat = transform_vector(DiffVector{0.1, -0.1, 0.0},
                                       AdjustmentMatrix{0.05, 0.95, 0.3});
    CHECK(flat[0] == 0.1);
    CHECK(flat[1] == -0.1);
    CHECK(flat[2] == 0.0);
}

TEST_CASE("element ratio") {
    CHECK(element_ratio(PfsElement("x", 0.3, 0.4), PfsElement("x", 0.3, 0.4)) == 0.0);
    CHECK(element_ratio(PfsElement("x", 0.6, 0.6), PfsElement("x", 0.3, 0.3)) ==
          doctest::Approx(0.14207756772559).epsilon(1e-12));
    CHECK(element_ratio(PfsElement("x", std::sqrt(0.5), std::sqrt(0.5)),
                        PfsElement("x", std::sqrt(0.4), std::sqrt(0.6))) ==
          doctest::Approx(0.0196078431372549).epsilon(1e-12));

    testing::SetGenerator gen(9004);
    for (int i = 0; i < 5000; ++i) {
        const auto [mua, nua] = gen.pfs_pair();
        const auto [mub, nub] = gen.pfs_pair();
        const PfsElement a("x", mua, nua);
        const PfsElement b("x", mub, nub);
        const double r = element_ratio(a, b);
        CHECK(r >= 0.0);
        CHECK(r <= 1.0);
        CHECK(r == element_ratio(b, a));  // bitwise swap invariance
    }
}

TEST_CASE("matrix distance reference points") {
    CHECK(d_matrix(kA1, kB1) == doctest::Approx(0.180132947858675).epsilon(1e-12));
    CHECK(std::abs(d_matrix(kA1, kB1) - 0.1801) <= 0.002);
    CHECK(d_matrix(kA1, kA1) == 0.0);

    const PfsSet a = single("A", std::sqrt(0.1), std::sqrt(0.9));
    const PfsSet b = single("B", 0.0, 1.0);
    CHECK(d_matrix(a, b) == doctest::Approx(0.104828483672192).epsilon(1e-12));
}

TEST_CASE("matrix distance collapses hesitant-versus-crisp pairs") {
    // The hesitance mass is redistributed entirely onto the membership
    // channel, so a fully hesitant element sits at distance zero from a
    // fully supporting one. Distinct inputs, zero distance: the measure is
    // not non-degenerate, and triangle chains through such elements break.
    const PfsSet hesitant = single("H", 0.0, 0.0);
    const PfsSet member = single("M", 1.0, 0.0);
    const PfsSet opponent = single("O", 0.0, 1.0);
    CHECK(d_matrix(hesitant, member) == 0.0);
    CHECK(d_matrix(hesitant, opponent) == 0.0);
    CHECK(d_matrix(member, opponent) == 1.0);
    CHECK(d_matrix(member, opponent) >
          d_matrix(member, hesitant) + d_matrix(hesitant, opponent));
}

TEST_CASE("measures are symmetric, zero on equal inputs, and bounded") {
    testing::SetGenerator gen(9005);
    const DistanceMethod methods[] = {
        DistanceMethod::pfs_hamming(), DistanceMethod::pfs_euclidean(),
        DistanceMethod::chen(1.5), DistanceMethod::chen(3.0),
        DistanceMethod::matrix()};
    for (int i = 0; i < 2000; ++i) {
        const std::size_t n = gen.universe_size();
        const PfsSet a = gen.pfs_set("a", n);
        const PfsSet b = gen.pfs_set("b", n);
        for (const auto& m : methods) {
            const double ab = distance(a, b, m);
            CHECK(ab == distance(b, a, m));
            CHECK(ab >= 0.0);
            CHECK(ab <= 1.0);
            CHECK(distance(a, a, m) == 0.0);
        }
        // intuitionistic forms on data valid for them
        const PfsSet c = gen.ifs_valid_set("c", n);
        const PfsSet d = gen.ifs_valid_set("d", n);
        for (const auto& m : {DistanceMethod::ifs_hamming(),
                              DistanceMethod::ifs_euclidean()}) {
            const double cd = distance(c, d, m);
            CHECK(cd == distance(d, c, m));
            CHECK(cd >= 0.0);
            CHECK(cd <= 1.0);
            CHECK(distance(c, c, m) == 0.0);
        }
    }
}

TEST_CASE("composed operations agree with the direct expression") {
    testing::SetGenerator gen(9006);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = gen.universe_size();
        std::vector<std::pair<double, double>> raw_a, raw_b;
        std::vector<PfsElement> ea, eb;
        for (std::size_t k = 0; k < n; ++k) {
            const auto pa = gen.pfs_pair();
            const auto pb = gen.pfs_pair();
            raw_a.push_back(pa);
            raw_b.push_back(pb);
            const std::string label = "x" + std::to_string(k + 1);
            ea.emplace_back(label, pa.first, pa.second);
            eb.emplace_back(label, pb.first, pb.second);
        }
        const PfsSet a("a", std::move(ea));
        const PfsSet b("b", std::move(eb));
        const double expected = testing::matrix_distance_reference(raw_a, raw_b);
        CHECK(d_matrix(a, b) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("distances require conformable sets") {
    const PfsSet a = single("a", 0.5, 0.5);
    const PfsSet b = pair_set("b", 0.5, 0.5, 0.4, 0.3);
    CHECK_THROWS_AS(d_hamming_ifs_norm(a, b), ConformabilityError);
    CHECK_THROWS_AS(d_euclid_ifs_norm(a, b), ConformabilityError);
    CHECK_THROWS_AS(d_hamming_pfs_norm(a, b), ConformabilityError);
    CHECK_THROWS_AS(d_euclid_pfs_norm(a, b), ConformabilityError);
    CHECK_THROWS_AS(d_chen_norm(a, b, 2.0), ConformabilityError);
    CHECK_THROWS_AS(d_matrix(a, b), ConformabilityError);
}
