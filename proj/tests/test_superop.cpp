#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "tlfnoise/spectator.hpp"
#include "tlfnoise/superop.hpp"

using namespace tlfnoise;
using namespace tlfnoise::superop;
using std::complex;

namespace {

// Shared operating point: order-one frequencies, moderate beta omega so both
// rate directions stay resolvable.
struct Setup {
    TlfParams tlf = make_tlf(std::sqrt(0.4), std::sqrt(0.6));  // omega_t = 1
    BathSpec bath = BathSpec(0.02, 40.0);
    Temperature temp = Temperature(8.0);
};

Mat16 kron_conj(const Mat4& u) {
    // superoperator of rho -> U rho U^dagger for the row-major vectorization
    Mat16 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out.block<4, 4>(4 * i, 4 * j) = u(i, j) * u.conjugate();
    return out;
}

Mat4 unvec(const Vec16& v) {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = v(4 * i + j);
    return m;
}

QubitRates closed_form(const Setup& s, double wq, PhiSelector phi) {
    const RateSet r = rate_set_at(s.tlf, wq, s.bath, s.temp);
    if (phi == PhiSelector::sigma_z) {
        return qubit_rates_z(r, tlf_occupations(r), wq);
    }
    return qubit_rates_x(r, s.tlf, wq);
}

std::vector<complex<double>> sorted_eigs(const Mat16& m) {
    Eigen::ComplexEigenSolver<Mat16> es(m);
    std::vector<complex<double>> v(es.eigenvalues().data(), es.eigenvalues().data() + 16);
    std::sort(v.begin(), v.end(), [](auto a, auto b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return v;
}

}  // namespace

TEST_CASE("system hamiltonian") {
    const Setup s;
    const double wq = 1.7;

    SUBCASE("uncoupled spectrum") {
        const Mat4 h = build_hs(s.tlf, wq, 0.0, PhiSelector::sigma_z);
        CHECK(std::abs(h.trace()) <= 1e-15);
        Eigen::SelfAdjointEigenSolver<Mat4> es(h);
        std::vector<double> want = {-(wq + 1.0) / 2, -(wq - 1.0) / 2, (wq - 1.0) / 2,
                                    (wq + 1.0) / 2};
        std::sort(want.begin(), want.end());
        for (int i = 0; i < 4; ++i) {
            CHECK(es.eigenvalues()(i) == doctest::Approx(want[i]).epsilon(1e-14));
        }
        CHECK(h.diagonal().cwiseAbs().sum() ==
              doctest::Approx(h.cwiseAbs().sum()).epsilon(1e-15));  // diagonal at kappa = 0
    }

    SUBCASE("avoided crossing at resonance for sigma_x coupling") {
        const double kappa = 1e-4;
        const Mat4 h = build_hs(s.tlf, s.tlf.omega_t, kappa, PhiSelector::sigma_x);
        Eigen::SelfAdjointEigenSolver<Mat4> es(h);
        // middle pair splits by 2 kappa
        const double gap = es.eigenvalues()(2) - es.eigenvalues()(1);
        CHECK(gap == doctest::Approx(2.0 * kappa).epsilon(1e-3));
    }
}

TEST_CASE("generator structure") {
    const Setup s;
    const double wq = 1.7;

    SUBCASE("trace covector annihilates the generator") {
        std::mt19937 rng(1234);
        std::uniform_real_distribution<double> uk(0.0, 0.01 * wq);
        const Vec16 tr = trace_covector();
        for (int k = 0; k < 5; ++k) {
            const Superoperator lam =
                build_lambda(s.tlf, wq, uk(rng), PhiSelector::sigma_x, s.bath, s.temp);
            const double resid = (tr.transpose() * lam.matrix).cwiseAbs().maxCoeff();
            CHECK(resid <= 1e-12 * lam.matrix.cwiseAbs().maxCoeff());
        }
    }

    SUBCASE("hermiticity is preserved") {
        std::mt19937 rng(77);
        std::normal_distribution<double> g;
        Mat4 a;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a(i, j) = complex<double>(g(rng), g(rng));
        const Mat4 rho = a + a.adjoint();
        Vec16 v;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) v(4 * i + j) = rho(i, j);

        const Superoperator lam =
            build_lambda(s.tlf, wq, 3e-3, PhiSelector::sigma_z, s.bath, s.temp);
        const Mat4 drho = unvec(lam.matrix * v);
        CHECK((drho - drho.adjoint()).cwiseAbs().maxCoeff() <=
              1e-12 * drho.cwiseAbs().maxCoeff());
    }

    SUBCASE("flipping kappa is a qubit-parity similarity") {
        const double kappa = 2e-3;
        Mat4 u = Mat4::Zero();
        u(0, 0) = u(1, 1) = -1.0;
        u(2, 2) = u(3, 3) = 1.0;  // tau_z on the qubit factor
        const Mat16 uu = kron_conj(u);
        const Mat16 lp = build_lambda(s.tlf, wq, kappa, PhiSelector::sigma_x, s.bath, s.temp).matrix;
        const Mat16 lm = build_lambda(s.tlf, wq, -kappa, PhiSelector::sigma_x, s.bath, s.temp).matrix;
        CHECK((lm - uu * lp * uu.inverse()).cwiseAbs().maxCoeff() <=
              1e-12 * lp.cwiseAbs().maxCoeff());
    }
}

TEST_CASE("uncoupled generator against the closed-form blocks") {
    const Setup s;
    const double wq = 1.7;
    const RateSet r = rate_set_at(s.tlf, wq, s.bath, s.temp);
    const Mat16 numeric = build_lambda(s.tlf, wq, 0.0, PhiSelector::sigma_z, s.bath, s.temp).matrix;
    const Superoperator analytic = lambda0_analytic(r, wq, s.tlf.omega_t);
    const double scale = numeric.cwiseAbs().maxCoeff();

    SUBCASE("entrywise match in the bare-product basis") {
        CHECK((numeric - analytic.matrix).cwiseAbs().maxCoeff() <= 1e-12 * scale);
        // independent of the coupling operator at kappa = 0
        const Mat16 numeric_x =
            build_lambda(s.tlf, wq, 0.0, PhiSelector::sigma_x, s.bath, s.temp).matrix;
        CHECK((numeric - numeric_x).cwiseAbs().maxCoeff() <= 1e-14 * scale);
    }

    SUBCASE("signed permutation reaches the block-diagonal arrangement") {
        const SignedPermutation perm = block_basis_permutation();
        const Mat16 sp = perm.matrix();
        CHECK((sp * sp.transpose() - Mat16::Identity()).cwiseAbs().maxCoeff() == 0.0);
        const Mat16 blocks = block_diagonal_form(r, wq, s.tlf.omega_t);
        CHECK((sp * analytic.matrix * sp.transpose() - blocks).cwiseAbs().maxCoeff() <=
              1e-14 * scale);
        CHECK((sp * numeric * sp.transpose() - blocks).cwiseAbs().maxCoeff() <= 1e-12 * scale);
    }

    SUBCASE("eigenvalue multiset") {
        const auto got = sorted_eigs(numeric);
        auto want = sorted_eigs(block_diagonal_form(r, wq, s.tlf.omega_t));
        for (const auto g : got) {
            auto best = std::min_element(want.begin(), want.end(), [&](auto a, auto b) {
                return std::abs(g - a) < std::abs(g - b);
            });
            REQUIRE(best != want.end());
            CHECK(std::abs(g - *best) <= 1e-10 * scale);
            want.erase(best);
        }
        const auto all = sorted_eigs(numeric);
        // the population block eigenvalues 0 and -(gamma_up + gamma_down)
        const bool has_grate =
            std::any_of(all.begin(), all.end(), [&](complex<double> c) {
                return std::abs(c + (r.gamma_up + r.gamma_down)) <= 1e-10 * scale;
            });
        CHECK(has_grate);
    }

    SUBCASE("pure-dephasing block vanishes for the cubic bath") {
        CHECK(r.gamma_zero == 0.0);
        // TLF-coherence components evolve purely by phase at kappa = 0
        CHECK(std::abs(analytic.matrix(1, 4)) == 0.0);
        CHECK(analytic.matrix(1, 1) == complex<double>(0.0, -s.tlf.omega_t));
    }
}

TEST_CASE("degenerate subspace") {
    const Setup s;
    const double wq = 1.7;
    const RateSet r = rate_set_at(s.tlf, wq, s.bath, s.temp);
    const DegenerateSubspace sub = degenerate_subspace(r);
    const Mat16 l0 = build_lambda(s.tlf, wq, 0.0, PhiSelector::sigma_z, s.bath, s.temp).matrix;
    const double scale = l0.cwiseAbs().maxCoeff();

    CHECK((l0 * sub.rho_g).cwiseAbs().maxCoeff() <= 1e-12 * scale);
    CHECK((l0 * sub.rho_e).cwiseAbs().maxCoeff() <= 1e-12 * scale);
    CHECK((sub.phi_g.transpose() * l0).cwiseAbs().maxCoeff() <= 1e-12 * scale);
    CHECK((sub.phi_e.transpose() * l0).cwiseAbs().maxCoeff() <= 1e-12 * scale);

    const Mat16& p = sub.projector;
    CHECK((p * p - p).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::abs(p.trace() - 2.0) <= 1e-12);  // rank 2

    CHECK(std::abs((sub.phi_g.transpose() * sub.rho_e)(0)) == 0.0);
    CHECK(std::abs((sub.phi_e.transpose() * sub.rho_g)(0)) == 0.0);
    CHECK(std::abs((sub.phi_g.transpose() * sub.rho_g)(0) - 1.0) <= 1e-14);
    CHECK(std::abs((sub.phi_e.transpose() * sub.rho_e)(0) - 1.0) <= 1e-14);
}

TEST_CASE("expansion of the generator in the coupling") {
    const Setup s;
    const double wq = 1.7;
    const RateSet r = rate_set_at(s.tlf, wq, s.bath, s.temp);
    const DegenerateSubspace sub = degenerate_subspace(r);

    for (PhiSelector phi : {PhiSelector::sigma_z, PhiSelector::sigma_x}) {
        auto build = [&](double k) {
            return build_lambda(s.tlf, wq, k, phi, s.bath, s.temp).matrix;
        };

        const LambdaExpansion e1 = expand_lambda(build, 1e-2 * wq);
        const LambdaExpansion e2 = expand_lambda(build, 0.5e-2 * wq);

        // no first-order action inside the degenerate subspace
        const double l1scale = e1.lambda1.cwiseAbs().maxCoeff();
        CHECK((sub.projector * e1.lambda1 * sub.projector).cwiseAbs().maxCoeff() <=
              1e-12 * l1scale);

        // halving kappa0 moves lambda2 by O(kappa0^2)
        const double l2scale = e1.lambda2.cwiseAbs().maxCoeff();
        const double d21 = (e1.lambda2 - e2.lambda2).cwiseAbs().maxCoeff() / l2scale;
        CHECK(d21 <= 1e-3);
    }
}

TEST_CASE("effective two-state generator") {
    const Setup s;
    const double wq = 1.7;
    const RateSet r = rate_set_at(s.tlf, wq, s.bath, s.temp);
    const DegenerateSubspace sub = degenerate_subspace(r);
    auto build = [&](double k) {
        return build_lambda(s.tlf, wq, k, PhiSelector::sigma_z, s.bath, s.temp).matrix;
    };
    const EffectiveGenerator eff = effective_lambda_m(expand_lambda(build, 1e-4 * wq), sub);
    const Mat2& m = eff.two_state;

    // probability is conserved inside the pair: columns sum to zero and one
    // eigenvalue is exactly zero
    const double scale = m.cwiseAbs().maxCoeff();
    CHECK(std::abs(m(0, 0) + m(1, 0)) <= 1e-10 * scale);
    CHECK(std::abs(m(0, 1) + m(1, 1)) <= 1e-10 * scale);
    Eigen::ComplexEigenSolver<Mat2> es(m);
    const double e0 = std::abs(es.eigenvalues()(0));
    const double e1 = std::abs(es.eigenvalues()(1));
    CHECK(std::min(e0, e1) <= 1e-10 * std::max(e0, e1));

    // transition-rate interpretation
    CHECK(m(0, 1).real() >= 0.0);
    CHECK(m(1, 0).real() >= 0.0);
    CHECK(eff.sigma_min_retained > 0.0);
}

TEST_CASE("perturbative rates against the closed forms") {
    const Setup s;
    for (PhiSelector phi : {PhiSelector::sigma_z, PhiSelector::sigma_x}) {
        for (double wq : {0.3, 0.77, 1.3, 2.5}) {
            const PtResult pt = rates_from_pt(s.tlf, wq, phi, s.bath, s.temp);
            const QubitRates cf = closed_form(s, wq, phi);
            CHECK(pt.status == OracleStatus::ok);
            CHECK(pt.rates.down == doctest::Approx(cf.down).epsilon(1e-5));
            CHECK(pt.rates.up == doctest::Approx(cf.up).epsilon(1e-5));
        }
    }

    SUBCASE("near-resonance point is flagged") {
        const double wq = s.tlf.omega_t * (1.0 + 5e-4);
        const PtResult pt = rates_from_pt(s.tlf, wq, PhiSelector::sigma_x, s.bath, s.temp);
        CHECK(pt.status == OracleStatus::reduced_accuracy_near_resonance);
    }

    SUBCASE("extracted rates obey detailed balance") {
        // the ratio error is pure kappa0^2 truncation; the rounding noise of
        // the finite differences cancels between the two matrix elements
        for (double wq : {0.77, 1.7}) {
            const PtResult pt =
                rates_from_pt(s.tlf, wq, PhiSelector::sigma_z, s.bath, s.temp, 1e-5 * wq);
            const double want = std::exp(-s.temp.beta() * wq);
            CHECK(pt.rates.up / pt.rates.down == doctest::Approx(want).epsilon(1e-8));
        }
    }
}

TEST_CASE("eigendecomposition rates") {
    const Setup s;
    const double wq = 1.7;

    SUBCASE("one-percent agreement at kappa = 1e-3 wq") {
        for (PhiSelector phi : {PhiSelector::sigma_z, PhiSelector::sigma_x}) {
            const double kappa = 1e-3 * wq;
            const Superoperator lam = build_lambda(s.tlf, wq, kappa, phi, s.bath, s.temp);
            const DegenerateSubspace sub =
                degenerate_subspace(rate_set_at(s.tlf, wq, s.bath, s.temp));
            const EigenRatesResult er = rates_from_eigen(lam, sub, kappa);
            const QubitRates cf = closed_form(s, wq, phi);
            CHECK(er.rates.down == doctest::Approx(cf.down).epsilon(1e-2));
            CHECK(er.rates.up == doctest::Approx(cf.up).epsilon(1e-2));
            CHECK(er.mode_separation > 10.0);
            CHECK(er.chi1.real() < 0.0);
            CHECK(std::abs(er.chi1.imag()) <= 1e-6 * std::abs(er.chi1.real()));

            // two-state algebra: |chi1| recovers the total rate
            const double total = (er.rates.up + er.rates.down) * kappa * kappa;
            CHECK(std::abs(er.chi1) == doctest::Approx(total).epsilon(1e-2));
        }
    }

    SUBCASE("error shrinks at least linearly in kappa") {
        const DegenerateSubspace sub =
            degenerate_subspace(rate_set_at(s.tlf, wq, s.bath, s.temp));
        const QubitRates cf = closed_form(s, wq, PhiSelector::sigma_z);
        for (double kf : {1e-3, 1e-4, 1e-5}) {
            const double kappa = kf * wq;
            const Superoperator lam =
                build_lambda(s.tlf, wq, kappa, PhiSelector::sigma_z, s.bath, s.temp);
            const EigenRatesResult er = rates_from_eigen(lam, sub, kappa);
            CHECK(std::abs(er.rates.down / cf.down - 1.0) <= kf);
            CHECK(std::abs(er.rates.up / cf.up - 1.0) <= kf);
        }
    }

    SUBCASE("mode amplitudes balance at order kappa^2") {
        const double kappa = 1e-3 * wq;
        const Superoperator lam =
            build_lambda(s.tlf, wq, kappa, PhiSelector::sigma_z, s.bath, s.temp);
        const DegenerateSubspace sub =
            degenerate_subspace(rate_set_at(s.tlf, wq, s.bath, s.temp));
        Eigen::ComplexEigenSolver<Mat16> es(lam.matrix);
        const Mat16 w = es.eigenvectors().inverse();
        std::array<int, 16> order;
        for (int i = 0; i < 16; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::abs(es.eigenvalues()(a)) < std::abs(es.eigenvalues()(b));
        });
        complex<double> transfer = 0.0;
        for (int j : {order[0], order[1]}) {
            transfer += (sub.phi_g.transpose() * es.eigenvectors().col(j))(0) *
                        (w.row(j) * sub.rho_e)(0);
        }
        // initial ground population is zero; the two slow modes reproduce it
        // up to the fast-mode weight of order kappa^2
        CHECK(std::abs(transfer) <= 100.0 * kappa * kappa);
    }
}

TEST_CASE("relaxation-fit rates") {
    const Setup s;
    const double wq = 1.7;
    const double kappa = 1e-3 * wq;
    const DegenerateSubspace sub = degenerate_subspace(rate_set_at(s.tlf, wq, s.bath, s.temp));

    for (PhiSelector phi : {PhiSelector::sigma_z, PhiSelector::sigma_x}) {
        const QubitRates cf = closed_form(s, wq, phi);
        const double total = (cf.up + cf.down) * kappa * kappa;
        const Superoperator lam = build_lambda(s.tlf, wq, kappa, phi, s.bath, s.temp);
        const OdeFitResult fit = rates_from_ode(lam, sub, kappa, 5.0 / total);

        CHECK(fit.rates.down + fit.rates.up ==
              doctest::Approx(cf.down + cf.up).epsilon(1e-2));
        CHECK(fit.rates.down == doctest::Approx(cf.down).epsilon(1e-2));
        CHECK(fit.rms_residual <= 1e-4 * fit.ground_population_eq);

        // asymptotic populations obey detailed balance
        const double ratio = (1.0 - fit.ground_population_eq) / fit.ground_population_eq;
        CHECK(ratio == doctest::Approx(std::exp(-s.temp.beta() * wq)).epsilon(1e-2));
    }

    SUBCASE("zero coupling stays stationary") {
        const Superoperator lam =
            build_lambda(s.tlf, wq, 0.0, PhiSelector::sigma_z, s.bath, s.temp);
        const OdeFitResult fit = rates_from_ode(lam, sub, 1.0, 1e4, 64);
        CHECK(fit.stationary_drift <= 1e-10);
        CHECK(std::abs(fit.ground_population_eq) <= 1e-8);
    }
}

TEST_CASE("matrix dump round trip and regression") {
    const Setup s;
    const Superoperator lam =
        build_lambda(s.tlf, 1.7, 1e-3, PhiSelector::sigma_x, s.bath, s.temp);

    std::stringstream ss;
    write_matrix_dump(ss, lam.matrix);
    const Mat16 back = read_matrix_dump(ss);
    CHECK((back - lam.matrix).cwiseAbs().maxCoeff() == 0.0);  // 17 digits round-trip exactly

    std::ifstream golden(TLFNOISE_TEST_DATA_DIR "/lambda_dump_golden.txt");
    REQUIRE(golden.good());
    const Mat16 ref = read_matrix_dump(golden);
    CHECK((ref - lam.matrix).cwiseAbs().maxCoeff() <= 1e-13 * ref.cwiseAbs().maxCoeff());
}
