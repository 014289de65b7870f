#include "support.hpp"

using namespace weightsys;
using namespace wtest;

namespace {

MetricLieAlgebra so3_identity_form() {
    std::vector<Complex> bracket(27, 0.0), gram(9, 0.0);
    const auto eps = so3_eps();
    for (int i = 0; i < 3; ++i) {
        gram[i * 3 + i] = 1.0;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) bracket[(i * 3 + j) * 3 + k] = eps(i, j, k).get_d();
    }
    return {3, bracket, gram};
}

}  // namespace

TEST(Generators, SmallExamples) {
    const auto ab = abelian(5);
    for (const auto& v : ab.entries()) EXPECT_EQ(v, 0);
    const auto e = so3_eps();
    EXPECT_EQ(e(0, 1, 2), 1);
    EXPECT_EQ(e(1, 0, 2), -1);
    EXPECT_EQ(e(0, 0, 1), 0);
    EXPECT_EQ(so_n_rational(4).dim(), 6);
    EXPECT_EQ(so_n_rational(5).dim(), 10);
    const auto so5 = so_n_rational(5);
    for (const auto& v : so5.entries()) EXPECT_TRUE(v == 0 || v == 1 || v == -1);
}

TEST(Generators, ExactOnesPassAllChecks) {
    std::vector<RationalTensor> gens = {abelian(1), abelian(4), so3_eps(), so_n_rational(3), so_n_rational(4),
                                        so_n_rational(5)};
    for (const auto& c : gens) {
        EXPECT_EQ(cyclic_check(c), 0);
        EXPECT_EQ(antisymmetry_check(c), 0);
        EXPECT_EQ(jacobi_check(c), 0);
        EXPECT_TRUE(c.is_lie());
    }
}

TEST(Generators, ComplexOnesPassAllChecks) {
    std::vector<ComplexTensor> gens = {sl2_killing(), sl_n_trace(2), sl_n_trace(3), gl_n_trace(2),
                                       orthonormalize(so_n_algebra(4))};
    for (const auto& c : gens) {
        EXPECT_LE(cyclic_check(c), 1e-12);
        EXPECT_LE(antisymmetry_check(c), 1e-12);
        EXPECT_LE(jacobi_check(c), 1e-12);
        EXPECT_TRUE(c.is_lie());
    }
}

TEST(Generators, ThetaMatchesClassicalKillingScalings) {
    // theta = dim * (Killing form / chosen form); Killing(sl_n) = 2n tr, Killing(so_n) = (n-2) tr.
    for (int n = 2; n <= 3; ++n) {
        const Complex v = partition_function(sl_n_trace(n), theta());
        EXPECT_NEAR(v.real(), 2.0 * n * (n * n - 1), 1e-9);
        EXPECT_NEAR(v.imag(), 0.0, 1e-9);
        const Complex g = partition_function(gl_n_trace(n), theta());
        EXPECT_NEAR(g.real(), 2.0 * n * (n * n - 1), 1e-9);
    }
    for (int n = 3; n <= 5; ++n) {
        const Complex v = partition_function(orthonormalize(so_n_algebra(n)), theta());
        EXPECT_NEAR(v.real(), n * (n - 1) * (n - 2) / 2.0, 1e-9);
        // Killing = -2(n-2) times the form -tr/2
        EXPECT_EQ(partition_function(so_n_rational(n), theta()), -n * (n - 1) * (n - 2));
    }
    EXPECT_NEAR(partition_function(sl2_killing(), theta()).real(), 3.0, 1e-12);
}

TEST(MetricLieAlgebra, KillingFormOfSl2) {
    const auto k = sl2_algebra().killing_form();  // basis H, E, F
    EXPECT_NEAR(k[0].real(), 8.0, 1e-12);
    EXPECT_NEAR(k[1 * 3 + 2].real(), 4.0, 1e-12);
    EXPECT_NEAR(std::abs(k[0 * 3 + 1]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(k[1 * 3 + 1]), 0.0, 1e-12);
}

TEST(MetricLieAlgebra, Residuals) {
    for (const auto& g : {sl2_algebra(), sl_n_algebra(3), gl_n_algebra(2), so_n_algebra(4), so3_identity_form()}) {
        EXPECT_LE(g.bracket_antisymmetry_residual(), 1e-12);
        EXPECT_LE(g.jacobi_residual(), 1e-12);
        EXPECT_LE(g.ad_invariance_residual(), 1e-12);
        EXPECT_LE(g.gram_symmetry_residual(), 1e-12);
    }
}

TEST(Orthonormalize, Examples) {
    const auto z = orthonormalize(MetricLieAlgebra(2, std::vector<Complex>(8, 0.0), {1.0, 0.0, 0.0, 1.0}));
    for (const auto& v : z.entries()) EXPECT_EQ(v, Complex(0.0));

    const auto e = orthonormalize(so3_identity_form());
    const auto eps = so3_eps();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) EXPECT_NEAR(std::abs(e(i, j, k) - eps(i, j, k).get_d()), 0.0, 1e-15);

    const auto s = sl2_algebra();
    const auto killing = orthonormalize(s.with_gram(s.killing_form()));
    EXPECT_NEAR(std::abs(partition_function(killing, theta()) - Complex(3.0)), 0.0, 1e-12);
}

TEST(Orthonormalize, IsotropicStartIsHandled) {
    // <x,y> = [[0,1],[1,0]] : both basis vectors isotropic.
    const auto c = orthonormalize(MetricLieAlgebra(2, std::vector<Complex>(8, 0.0), {0.0, 1.0, 1.0, 0.0}));
    EXPECT_TRUE(c.is_lie());
    // sl(2) with the trace form: E and F are isotropic.
    const auto c2 = orthonormalize(sl2_algebra());
    EXPECT_NEAR(std::abs(partition_function(c2, theta()) - Complex(12.0)), 0.0, 1e-9);
}

TEST(Orthonormalize, BasisIndependenceOnCorpus) {
    const auto s = sl2_algebra();
    const auto a = sl2_killing();
    const auto b = orthonormalize(s.with_gram(s.killing_form()));
    auto graphs = small_three_graphs();
    graphs.resize(std::min<std::size_t>(graphs.size(), 10));
    ASSERT_GE(graphs.size(), 5u);
    for (const auto& g : graphs) {
        const Complex x = partition_function(a, g), y = partition_function(b, g);
        EXPECT_LE(std::abs(x - y), 1e-9 * std::max(1.0, std::abs(x)));
    }
}

TEST(Orthonormalize, Errors) {
    EXPECT_ERROR_KIND(orthonormalize(MetricLieAlgebra(2, std::vector<Complex>(8, 0.0), std::vector<Complex>(4, 0.0))),
                      ErrorKind::DegenerateForm);
    auto s = sl2_algebra();
    std::vector<Complex> rank_one = {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    EXPECT_ERROR_KIND(orthonormalize(s.with_gram(rank_one)), ErrorKind::DegenerateForm);
    EXPECT_ERROR_KIND(orthonormalize(MetricLieAlgebra(2, std::vector<Complex>(8, 0.0), {1.0, 1.0, 0.0, 1.0})),
                      ErrorKind::InvalidAlgebra);
    EXPECT_ERROR_KIND(MetricLieAlgebra(2, std::vector<Complex>(7, 0.0), std::vector<Complex>(4, 0.0)),
                      ErrorKind::InvalidAlgebra);
}

TEST(Checks, NonAntisymmetricCyclicTensor) {
    RationalTensor c(3);
    c.set_cyclic(0, 1, 2, Rational(1));
    EXPECT_EQ(cyclic_check(c), 0);
    EXPECT_GT(antisymmetry_check(c), 0);
    RationalTensor z(3);
    EXPECT_EQ(jacobi_check(z), 0);
    EXPECT_EQ(antisymmetry_check(z), 0);
}

TEST(Checks, CyclicCheckDetectsAsymmetry) {
    RationalTensor c(2);
    c(0, 0, 1) = 1;
    EXPECT_EQ(cyclic_check(c), 1);
}

TEST(DirectSum, Basics) {
    EXPECT_EQ(direct_sum(abelian(1), abelian(2)), abelian(3));
    const auto s = direct_sum(so3_eps(), so3_eps());
    EXPECT_EQ(s.dim(), 6);
    EXPECT_TRUE(s.is_lie());
    EXPECT_EQ(partition_function(s, theta()), -12);
    EXPECT_EQ(s(3, 4, 5), 1);
    EXPECT_EQ(s(0, 1, 5), 0);
    EXPECT_ERROR_KIND(direct_sum(AnyTensor(so3_eps()), AnyTensor(sl2_killing())), ErrorKind::BackendMismatch);
}

TEST(ScaleTensor, K4ScalesByFourthPower) {
    EXPECT_EQ(partition_function(scale_tensor(so3_eps(), Rational(2)), k4()), 96);
    EXPECT_EQ(brute_force_oracle(scale_tensor(so3_eps(), Rational(2)), k4()), 96);
}

TEST(MakeAlgebra, Names) {
    EXPECT_EQ(dim(make_algebra("so3")), 3);
    EXPECT_EQ(dim(make_algebra("abelian:7")), 7);
    EXPECT_EQ(dim(make_algebra("so:5")), 10);
    EXPECT_EQ(dim(make_algebra("sl:3")), 8);
    EXPECT_EQ(dim(make_algebra("gl:2")), 4);
    EXPECT_EQ(backend_name(make_algebra("sl2-killing")), "complex");
    EXPECT_ERROR_KIND(make_algebra("e8"), ErrorKind::ParseError);
    EXPECT_ERROR_KIND(make_algebra("so:x"), ErrorKind::ParseError);
}
