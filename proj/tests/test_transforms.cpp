#include "armkin/errors.hpp"
#include "armkin/transforms.hpp"
#include "armkin/units.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

using namespace armkin;

namespace {

constexpr double kTol = 1e-12;

void expect_near(const CartesianTarget& p, double x, double y, double z, double tol = kTol) {
    EXPECT_NEAR(p.x, x, tol);
    EXPECT_NEAR(p.y, y, tol);
    EXPECT_NEAR(p.z, z, tol);
}

double max_abs_diff(const Eigen::Matrix4d& a, const Eigen::Matrix4d& b) { return (a - b).cwiseAbs().maxCoeff(); }

Axis random_axis(std::mt19937_64& rng) {
    return static_cast<Axis>(std::uniform_int_distribution<int>(0, 2)(rng));
}

} // namespace

TEST(Transforms, ZeroRotationAndTranslationAreIdentity) {
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        EXPECT_EQ(rot(a, 0.0).matrix(), Eigen::Matrix4d::Identity());
        EXPECT_EQ(trans(a, 0.0).matrix(), Eigen::Matrix4d::Identity());
    }
}

TEST(Transforms, ElementaryRotationsMatchNumericOracle) {
    // RotY = [[c,0,s],[0,1,0],[-s,0,c]] evaluated by hand at pi/2.
    expect_near(rot(Axis::Y, kPi / 2).apply({0, 0, 1}), 1, 0, 0);
    expect_near(rot(Axis::Z, kPi / 2).apply({1, 0, 0}), 0, 1, 0);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-4.0, 4.0);
    for (int i = 0; i < 50; ++i) {
        const double t = angle(rng);
        const oracle::Vec3 p{0.3, -1.2, 2.5};
        const auto y = oracle::apply(oracle::rot_y(t), p);
        const auto z = oracle::apply(oracle::rot_z(t), p);
        expect_near(rot(Axis::Y, t).apply({p[0], p[1], p[2]}), y[0], y[1], y[2]);
        expect_near(rot(Axis::Z, t).apply({p[0], p[1], p[2]}), z[0], z[1], z[2]);
    }
}

TEST(Transforms, TranslationMovesOrigin) {
    expect_near(trans(Axis::Z, 5).apply({0, 0, 0}), 0, 0, 5, 0.0);
    EXPECT_EQ((trans(Axis::Z, 2) * trans(Axis::Z, 3)).matrix(), trans(Axis::Z, 5).matrix());
    EXPECT_EQ(position_of(trans(Axis::Z, 7.25)), (CartesianTarget{0, 0, 7.25}));
    EXPECT_EQ(position_of(HomogeneousTransform::identity()), (CartesianTarget{0, 0, 0}));
}

TEST(Transforms, PositionOfRotatedTranslationMatchesOracle) {
    const auto expected = oracle::mul(oracle::rot_z(kPi / 2), oracle::trans_x(1));
    const CartesianTarget p = position_of(rot(Axis::Z, kPi / 2) * trans(Axis::X, 1));
    expect_near(p, expected[0][3], expected[1][3], expected[2][3]);
    expect_near(p, 0, 1, 0);
}

TEST(Transforms, NonFiniteInputsAreDomainErrors) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    EXPECT_THROW(rot(Axis::X, nan), DomainError);
    EXPECT_THROW(rot(Axis::Z, inf), DomainError);
    EXPECT_THROW(trans(Axis::Y, inf), DomainError);
}

TEST(Transforms, FromMatrixRejectsBrokenInvariants) {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m(3, 2) = 1e-20;
    EXPECT_THROW(HomogeneousTransform::from_matrix(m), DomainError);

    Eigen::Matrix4d scaled = Eigen::Matrix4d::Identity();
    scaled(0, 0) = 2.0;
    EXPECT_THROW(HomogeneousTransform::from_matrix(scaled), DomainError);

    Eigen::Matrix4d mirror = Eigen::Matrix4d::Identity();
    mirror(2, 2) = -1.0;
    EXPECT_THROW(HomogeneousTransform::from_matrix(mirror), DomainError);

    const auto good = (rot(Axis::X, 0.4) * trans(Axis::Y, 3)).matrix();
    EXPECT_EQ(HomogeneousTransform::from_matrix(good).matrix(), good);
}

TEST(TransformsProperty, RotationsAreProperAndInvertible) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const Axis a = random_axis(rng);
        const double t = angle(rng);
        const auto r = rot(a, t);
        ASSERT_TRUE(is_rigid(r, 1e-12));
        ASSERT_LE(max_abs_diff((r * rot(a, -t)).matrix(), Eigen::Matrix4d::Identity()), 1e-12);
    }
}

TEST(TransformsProperty, SameAxisAnglesAdd) {
    EXPECT_LE(max_abs_diff((rot(Axis::Z, 0.3) * rot(Axis::Z, 0.4)).matrix(), rot(Axis::Z, 0.7).matrix()), 1e-12);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int i = 0; i < 1000; ++i) {
        const Axis a = random_axis(rng);
        const double s = angle(rng);
        const double t = angle(rng);
        ASSERT_LE(max_abs_diff((rot(a, s) * rot(a, t)).matrix(), rot(a, s + t).matrix()), 1e-12);
    }
}

TEST(TransformsProperty, CompositionIsAssociativeWithExactBottomRow) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_real_distribution<double> length(-50.0, 50.0);
    auto random_transform = [&] {
        return rot(random_axis(rng), angle(rng)) * trans(random_axis(rng), length(rng)) *
               rot(random_axis(rng), angle(rng));
    };
    for (int i = 0; i < 1000; ++i) {
        const auto a = random_transform();
        const auto b = random_transform();
        const auto c = random_transform();
        const Eigen::Matrix4d left = ((a * b) * c).matrix();
        const Eigen::Matrix4d right = (a * (b * c)).matrix();
        ASSERT_LE(max_abs_diff(left, right), 1e-12);
        ASSERT_TRUE(is_rigid(a * b * c, 1e-12));
        const Eigen::RowVector4d bottom = left.row(3);
        ASSERT_EQ(bottom, Eigen::RowVector4d(0, 0, 0, 1));
        ASSERT_EQ((HomogeneousTransform::identity() * a).matrix(), a.matrix());
    }
}

TEST(TransformsProperty, CollinearTranslationsSumExactly) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> mm(-100000, 100000);
    for (int i = 0; i < 200; ++i) {
        const double d1 = mm(rng) / 8.0;
        const double d2 = mm(rng) / 8.0;
        ASSERT_EQ(position_of(trans(Axis::Z, d1) * trans(Axis::Z, d2)), (CartesianTarget{0, 0, d1 + d2}));
    }
}

TEST(Units, WrapAngleIntoHalfOpenInterval) {
    EXPECT_DOUBLE_EQ(wrap_angle(0.0), 0.0);
    EXPECT_DOUBLE_EQ(wrap_angle(kPi), kPi);
    EXPECT_DOUBLE_EQ(wrap_angle(-kPi), kPi);
    EXPECT_NEAR(wrap_angle(3 * kPi / 2), -kPi / 2, 1e-15);
    EXPECT_NEAR(wrap_angle(-7.0), -7.0 + 2 * kPi, 1e-15);
}
