#include "tlfnoise/superop.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace tlfnoise::superop {

namespace {

using std::complex;
constexpr complex<double> kI{0.0, 1.0};

// Product-basis index order {e1, e0, g1, g0}; vec index v = 4*i + j.
Mat4 kron2(const Mat2& a, const Mat2& b) {
    Mat4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

Mat16 kron4(const Mat4& a, const Mat4& b) {
    Mat16 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
    return out;
}

// vec(A rho B) = (A kron B^T) vec(rho) for the row-major stacking.
Mat16 left_right(const Mat4& a, const Mat4& b) {
    return kron4(a, b.transpose());
}

Mat2 pauli_z_excited_first() {
    // Excited state listed first carries tau_z = -1 so that -wq/2 tau_z is
    // positive on it.
    Mat2 m;
    m << -1.0, 0.0, 0.0, 1.0;
    return m;
}

Mat2 pauli_x() {
    Mat2 m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

}  // namespace

Mat4 build_hs(const TlfParams& tlf, double omega_q, double kappa, PhiSelector phi) {
    const Mat2 tz = pauli_z_excited_first();
    const Mat2 sz = pauli_z_excited_first();
    const Mat2 sx = pauli_x();
    const Mat2 id = Mat2::Identity();
    const Mat2& ph = (phi == PhiSelector::sigma_z) ? sz : sx;
    return -0.5 * omega_q * kron2(tz, id) + kappa * kron2(pauli_x(), ph) -
           0.5 * tlf.omega_t * kron2(id, sz);
}

Superoperator build_lambda(const TlfParams& tlf, double omega_q, double kappa,
                           PhiSelector phi, const BathSpec& bath, const Temperature& temp) {
    const Mat4 h = build_hs(tlf, omega_q, kappa, phi);
    Eigen::SelfAdjointEigenSolver<Mat4> es(h);
    if (es.info() != Eigen::Success) {
        throw EigensolverError("eigendecomposition of the system Hamiltonian failed");
    }
    const Eigen::Vector4d energies = es.eigenvalues();
    std::array<Mat4, 4> proj;
    for (int i = 0; i < 4; ++i) {
        proj[i] = es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
    }

    const Mat4 x = kron2(Mat2::Identity(), pauli_x());
    const Mat4 id4 = Mat4::Identity();

    Superoperator out;
    out.matrix = -kI * (kron4(h, id4) - kron4(id4, h.transpose()));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double g = bath_gamma(-(energies(i) - energies(j)), tlf, bath, temp);
            if (g == 0.0) continue;
            const Mat4 pix = proj[i] * x;
            const Mat4 pjx = proj[j] * x;
            const Mat4 xpix = x * proj[i] * x;
            out.matrix += 0.5 * g *
                          (left_right(pix, pjx) - left_right(xpix, proj[j]) +
                           left_right(x * proj[j], x * proj[i]) - left_right(proj[j], xpix));
        }
    }
    return out;
}

Superoperator lambda0_analytic(const RateSet& r, double omega_q, double omega_t) {
    const complex<double> iwq = kI * omega_q;
    const complex<double> iwt = kI * omega_t;
    const double a = r.gamma_down_minus + r.gamma_down_plus;
    const double b = r.gamma_up_minus + r.gamma_up_plus;
    const double c = 0.5 * (r.gamma_plus + r.gamma_minus);
    const double g0 = r.gamma_zero;

    Superoperator out;
    Mat16& m = out.matrix;
    m.setZero();

    // TLF populations inside each qubit-population sector: {ee11, ee00} and
    // {gg11, gg00} relax with the bare up/down rates.
    for (int base : {0, 10}) {  // v0/v5 and v10/v15
        const int p1 = base, p0 = base + 5;
        m(p1, p1) = -r.gamma_down;
        m(p1, p0) = r.gamma_up;
        m(p0, p1) = r.gamma_down;
        m(p0, p0) = -r.gamma_up;
    }
    // TLF populations inside the qubit coherences: {eg11, eg00} at phase -wq,
    // {ge11, ge00} at +wq, mixed by the +- rate combinations.
    {
        const int eg1 = 2, eg0 = 7;
        m(eg1, eg1) = -iwq - 0.5 * a;
        m(eg1, eg0) = 0.5 * b;
        m(eg0, eg1) = 0.5 * a;
        m(eg0, eg0) = -iwq - 0.5 * b;
        const int ge1 = 8, ge0 = 13;
        m(ge1, ge1) = iwq - 0.5 * a;
        m(ge1, ge0) = 0.5 * b;
        m(ge0, ge1) = 0.5 * a;
        m(ge0, ge0) = iwq - 0.5 * b;
    }
    // TLF coherences inside the qubit populations: pure gamma(0) dephasing.
    for (int base : {1, 11}) {  // {ee10, ee01} and {gg10, gg01}
        const int c10 = base, c01 = base + 3;
        m(c10, c10) = -iwt - g0;
        m(c10, c01) = g0;
        m(c01, c10) = g0;
        m(c01, c01) = iwt - g0;
    }
    // Doubly off-diagonal sector, phases -(wq +- wt) and +(wq -+ wt).
    {
        const int eg10 = 3, eg01 = 6;
        m(eg10, eg10) = -iwq - iwt - c;
        m(eg10, eg01) = c;
        m(eg01, eg10) = c;
        m(eg01, eg01) = -iwq + iwt - c;
        const int ge10 = 9, ge01 = 12;
        m(ge10, ge10) = iwq - iwt - c;
        m(ge10, ge01) = c;
        m(ge01, ge10) = c;
        m(ge01, ge01) = iwq + iwt - c;
    }
    return out;
}

Mat16 block_diagonal_form(const RateSet& r, double omega_q, double omega_t) {
    const complex<double> iwq = kI * omega_q;
    const complex<double> iwt = kI * omega_t;
    Mat16 m;
    m.setZero();

    Mat2 m1;
    m1 << -r.gamma_up, r.gamma_down, r.gamma_up, -r.gamma_down;
    Mat2 m2;
    const double su = r.gamma_up_minus + r.gamma_up_plus;
    const double sd = r.gamma_down_minus + r.gamma_down_plus;
    m2 << -su, -sd, -su, -sd;
    m2 *= 0.5;
    Mat2 m3;
    m3 << 1.0, -1.0, -1.0, 1.0;
    m3 *= -r.gamma_zero;
    Mat2 m4;
    m4 << 1.0, 1.0, 1.0, 1.0;
    m4 *= -0.5 * (r.gamma_plus + r.gamma_minus);
    const Mat2 zphase = (Mat2() << -iwt, 0.0, 0.0, iwt).finished();

    m.block<2, 2>(0, 0) = m1;
    m.block<2, 2>(2, 2) = m1;
    m.block<2, 2>(4, 4) = m2 - iwq * Mat2::Identity();
    m.block<2, 2>(6, 6) = m2 + iwq * Mat2::Identity();
    m.block<2, 2>(8, 8) = m3 + zphase;
    m.block<2, 2>(10, 10) = m3 + zphase;
    m.block<2, 2>(12, 12) = m4 - iwq * Mat2::Identity() + zphase;
    m.block<2, 2>(14, 14) = m4 + iwq * Mat2::Identity() + zphase;
    return m;
}

SignedPermutation block_basis_permutation() {
    // Block order: M1(ee), M1(gg), M2 -iwq (eg), M2 +iwq (ge), M3 (ee), M3 (gg),
    // M4 -iwq (eg), M4 +iwq (ge). The second member of every M2/M4 pair picks
    // up a sign flip relative to the raw matrix unit.
    SignedPermutation p;
    p.index = {5, 0, 15, 10, 7, 2, 13, 8, 1, 4, 11, 14, 3, 6, 9, 12};
    p.sign = {1, 1, 1, 1, 1, -1, 1, -1, 1, 1, 1, 1, 1, -1, 1, -1};
    return p;
}

Mat16 SignedPermutation::matrix() const {
    Mat16 s;
    s.setZero();
    for (int k = 0; k < 16; ++k) s(k, index[k]) = sign[k];
    return s;
}

DegenerateSubspace degenerate_subspace(const RateSet& rates) {
    const double total = rates.gamma_up + rates.gamma_down;
    const double p0 = rates.gamma_down / total;
    const double p1 = rates.gamma_up / total;

    DegenerateSubspace s;
    s.rho_g.setZero();
    s.rho_e.setZero();
    s.phi_g.setZero();
    s.phi_e.setZero();
    s.rho_e(0) = p1;   // ee11
    s.rho_e(5) = p0;   // ee00
    s.rho_g(10) = p1;  // gg11
    s.rho_g(15) = p0;  // gg00
    s.phi_e(0) = 1.0;
    s.phi_e(5) = 1.0;
    s.phi_g(10) = 1.0;
    s.phi_g(15) = 1.0;
    // (phi_a|rho_a) = p0 + p1 = 1, so the projector needs no denominators.
    s.projector = s.rho_g * s.phi_g.transpose() + s.rho_e * s.phi_e.transpose();
    return s;
}

Vec16 trace_covector() {
    Vec16 t;
    t.setZero();
    t(0) = t(5) = t(10) = t(15) = 1.0;
    return t;
}

LambdaExpansion expand_lambda(const std::function<Mat16(double)>& build, double kappa0) {
    if (!(kappa0 > 0.0)) {
        throw InvalidParameter("expand_lambda requires kappa0 > 0");
    }
    const Mat16 lp = build(kappa0);
    const Mat16 lm = build(-kappa0);
    LambdaExpansion e;
    e.kappa0 = kappa0;
    e.lambda0 = build(0.0);
    e.lambda1 = (lp - lm) / (2.0 * kappa0);
    e.lambda2 = (lp - 2.0 * e.lambda0 + lm) / (kappa0 * kappa0);
    return e;
}

EffectiveGenerator effective_lambda_m(const LambdaExpansion& exp, const DegenerateSubspace& sub) {
    const Mat16& p = sub.projector;
    const Mat16 q = Mat16::Identity() - p;

    Eigen::JacobiSVD<Mat16> svd(exp.lambda0, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cut = 1e-12 * sv(0);
    Vec16 inv_sv;
    double sigma_min = 0.0;
    for (int i = 0; i < 16; ++i) {
        if (sv(i) > cut) {
            inv_sv(i) = 1.0 / sv(i);
            sigma_min = sv(i);
        } else {
            inv_sv(i) = 0.0;
        }
    }
    const Mat16 pinv = svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint();

    EffectiveGenerator out;
    out.sigma_min_retained = sigma_min;
    out.full = p * exp.lambda2 * p - p * exp.lambda1 * q * pinv * q * exp.lambda1 * p;
    out.two_state(0, 0) = sub.phi_g.transpose() * out.full * sub.rho_g;
    out.two_state(0, 1) = sub.phi_g.transpose() * out.full * sub.rho_e;
    out.two_state(1, 0) = sub.phi_e.transpose() * out.full * sub.rho_g;
    out.two_state(1, 1) = sub.phi_e.transpose() * out.full * sub.rho_e;
    return out;
}

PtResult rates_from_pt(const TlfParams& tlf, double omega_q, PhiSelector phi,
                       const BathSpec& bath, const Temperature& temp, double kappa0) {
    if (kappa0 <= 0.0) kappa0 = 1e-4 * omega_q;
    const auto build = [&](double k) { return build_lambda(tlf, omega_q, k, phi, bath, temp).matrix; };
    const LambdaExpansion exp = expand_lambda(build, kappa0);
    const DegenerateSubspace sub = degenerate_subspace(rate_set_at(tlf, omega_q, bath, temp));
    const EffectiveGenerator eff = effective_lambda_m(exp, sub);

    PtResult res;
    res.kappa0 = kappa0;
    res.sigma_min_retained = eff.sigma_min_retained;
    res.rates.down = eff.two_state(0, 1).real();
    res.rates.up = eff.two_state(1, 0).real();
    if (std::abs(omega_q - tlf.omega_t) <= 10.0 * kappa0) {
        res.status = OracleStatus::reduced_accuracy_near_resonance;
    }
    return res;
}

EigenRatesResult rates_from_eigen(const Superoperator& lambda, const DegenerateSubspace& sub,
                                  double kappa, double min_separation) {
    Eigen::ComplexEigenSolver<Mat16> es(lambda.matrix);
    if (es.info() != Eigen::Success) {
        throw EigensolverError("eigendecomposition of the generator failed");
    }
    const auto& chis = es.eigenvalues();
    const Mat16& v = es.eigenvectors();
    Eigen::FullPivLU<Mat16> lu(v);
    if (!lu.isInvertible()) {
        throw EigensolverError("generator eigenbasis is singular");
    }
    const Mat16 w = lu.inverse();  // rows biorthonormal to the columns of v

    std::array<int, 16> order;
    for (int i = 0; i < 16; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return std::abs(chis(a)) < std::abs(chis(b)); });
    const int j1 = order[1];
    const double sep = std::abs(chis(order[2])) / std::abs(chis(j1));
    if (sep < min_separation) {
        throw EigensolverError("depolarization mode not separated from the fast spectrum");
    }

    const complex<double> chi1 = chis(j1);
    const complex<double> gdn = (sub.phi_g.transpose() * v.col(j1))(0) * (w.row(j1) * sub.rho_e)(0) * chi1;
    const complex<double> gup = (sub.phi_e.transpose() * v.col(j1))(0) * (w.row(j1) * sub.rho_g)(0) * chi1;

    EigenRatesResult out;
    out.chi1 = chi1;
    out.mode_separation = sep;
    out.rates.down = gdn.real() / (kappa * kappa);
    out.rates.up = gup.real() / (kappa * kappa);
    return out;
}

namespace {

struct ExpFit {
    double asymptote;
    double rate;
    double rms;
};

// Least-squares fit of y(t) = A + (y0 - A) e^{-r t} with y0 = y(0) pinned.
ExpFit fit_exponential(const std::vector<double>& ts, const std::vector<double>& ys,
                       double guess_rate) {
    const double y0 = ys.front();
    double a = ys.back();
    double r = guess_rate;
    const int n = static_cast<int>(ts.size());
    for (int it = 0; it < 100; ++it) {
        double h11 = 0, h12 = 0, h22 = 0, g1 = 0, g2 = 0;
        for (int k = 0; k < n; ++k) {
            const double e = std::exp(-r * ts[k]);
            const double res = ys[k] - (a + (y0 - a) * e);
            const double ja = 1.0 - e;
            const double jr = -(y0 - a) * ts[k] * e;
            h11 += ja * ja;
            h12 += ja * jr;
            h22 += jr * jr;
            g1 += ja * res;
            g2 += jr * res;
        }
        const double det = h11 * h22 - h12 * h12;
        if (det == 0.0) break;
        const double da = (h22 * g1 - h12 * g2) / det;
        const double dr = (h11 * g2 - h12 * g1) / det;
        a += da;
        r += dr;
        if (std::abs(da) <= 1e-14 * std::abs(a) + 1e-300 &&
            std::abs(dr) <= 1e-14 * std::abs(r) + 1e-300) {
            break;
        }
    }
    double ss = 0;
    for (int k = 0; k < n; ++k) {
        const double res = ys[k] - (a + (y0 - a) * std::exp(-r * ts[k]));
        ss += res * res;
    }
    return {a, r, std::sqrt(ss / n)};
}

}  // namespace

OdeFitResult rates_from_ode(const Superoperator& lambda, const DegenerateSubspace& sub,
                            double kappa, double t_max, int samples) {
    if (samples < 8) throw InvalidParameter("rates_from_ode needs at least 8 samples");
    if (!(t_max > 0.0)) throw InvalidParameter("rates_from_ode requires t_max > 0");

    const double dt = t_max / (samples - 1);
    const Mat16 prop = (lambda.matrix * dt).exp();

    std::vector<double> ts(samples), from_e(samples), from_g(samples);
    Vec16 se = sub.rho_e;
    Vec16 sg = sub.rho_g;
    for (int k = 0; k < samples; ++k) {
        ts[k] = k * dt;
        from_e[k] = (sub.phi_g.transpose() * se)(0).real();
        from_g[k] = (sub.phi_g.transpose() * sg)(0).real();
        if (k + 1 < samples) {
            se = prop * se;
            sg = prop * sg;
        }
    }

    const ExpFit fit = fit_exponential(ts, from_e, 3.0 / t_max);

    OdeFitResult out;
    out.total_rate = fit.rate;
    out.ground_population_eq = fit.asymptote;
    out.rms_residual = fit.rms;
    const double k2 = kappa * kappa;
    out.rates.down = fit.asymptote * fit.rate / k2;
    out.rates.up = (1.0 - fit.asymptote) * fit.rate / k2;

    double drift = 0.0;
    for (int k = 0; k < samples; ++k) {
        drift = std::max(drift, std::abs(from_g[k] - from_g[0]));
    }
    out.stationary_drift = drift;
    return out;
}

void write_matrix_dump(std::ostream& os, const Mat16& m) {
    char buf[64];
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g", m(i, j).real(), m(i, j).imag());
            os << buf << (j + 1 < 16 ? " " : "\n");
        }
    }
}

Mat16 read_matrix_dump(std::istream& is) {
    Mat16 m;
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            std::string tok;
            if (!(is >> tok)) {
                throw InvalidParameter("matrix dump truncated");
            }
            const auto comma = tok.find(',');
            if (comma == std::string::npos) {
                throw InvalidParameter("matrix dump entry missing ',' separator");
            }
            m(i, j) = {std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1))};
        }
    }
    return m;
}

}  // namespace tlfnoise::superop
