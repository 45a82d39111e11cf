#include "dipgpe/virial.hpp"

#include <cmath>

#include "dipgpe/fft.hpp"
#include "dipgpe/spectral_ops.hpp"

namespace dipgpe::virial {

namespace {

// Solve the 6x6 Vandermonde-style system for the transition quintic once.
std::array<double, 6> transition_coefficients() {
    // rows: p(1)=1, p'(1)=2, p''(1)=2, p'(2)=0, p''(2)=0, p'''(2)=0
    double m[6][7] = {};
    auto fill_row = [&](int row, double r, int der, double rhs) {
        for (int k = 0; k < 6; ++k) {
            double c = 1.0;
            for (int d = 0; d < der; ++d) c *= (k - d);
            m[row][k] = (k - der >= 0) ? c * std::pow(r, k - der) : 0.0;
        }
        m[row][6] = rhs;
    };
    fill_row(0, 1.0, 0, 1.0);
    fill_row(1, 1.0, 1, 2.0);
    fill_row(2, 1.0, 2, 2.0);
    fill_row(3, 2.0, 1, 0.0);
    fill_row(4, 2.0, 2, 0.0);
    fill_row(5, 2.0, 3, 0.0);

    for (int col = 0; col < 6; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 6; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        for (int k = 0; k < 7; ++k) std::swap(m[col][k], m[pivot][k]);
        for (int r = 0; r < 6; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int k = col; k < 7; ++k) m[r][k] -= f * m[col][k];
        }
    }
    std::array<double, 6> a;
    for (int k = 0; k < 6; ++k) a[k] = m[k][6] / m[k][k];
    return a;
}

double poly(const std::array<double, 6>& a, double r, int der) {
    double sum = 0.0;
    for (int k = der; k < 6; ++k) {
        double c = a[k];
        for (int d = 0; d < der; ++d) c *= (k - d);
        sum += c * std::pow(r, k - der);
    }
    return sum;
}

} // namespace

CutoffSpec::CutoffSpec(double R) : R_(R) {
    if (!(R > 0.0)) throw DomainError("CutoffSpec: R must be positive");
    a_ = transition_coefficients();
    plateau_ = poly(a_, 2.0, 0);
}

double CutoffSpec::chi(double rho) const {
    if (rho <= 1.0) return rho * rho;
    if (rho >= 2.0) return plateau_;
    return poly(a_, rho, 0);
}
double CutoffSpec::chi_d1(double rho) const {
    if (rho <= 1.0) return 2.0 * rho;
    if (rho >= 2.0) return 0.0;
    return poly(a_, rho, 1);
}
double CutoffSpec::chi_d2(double rho) const {
    if (rho <= 1.0) return 2.0;
    if (rho >= 2.0) return 0.0;
    return poly(a_, rho, 2);
}
double CutoffSpec::chi_d3(double rho) const {
    if (rho <= 1.0 || rho >= 2.0) return 0.0;
    return poly(a_, rho, 3);
}
double CutoffSpec::chi_d4(double rho) const {
    if (rho <= 1.0 || rho >= 2.0) return 0.0;
    return poly(a_, rho, 4);
}

double CutoffSpec::laplacian(double rho) const {
    if (rho <= 1.0) return 6.0;
    if (rho >= 2.0) return 0.0;
    return chi_d2(rho) + 2.0 * chi_d1(rho) / rho;
}

double CutoffSpec::bilaplacian(double rho) const {
    if (rho <= 1.0 || rho >= 2.0) return 0.0;
    return chi_d4(rho) + 4.0 * chi_d3(rho) / rho;
}

double CutoffSpec::hessian_bound() const {
    double worst = 2.0;
    for (int i = 0; i <= 2000; ++i) {
        const double rho = 1.0 + i / 2000.0;
        worst = std::max({worst, std::abs(chi_d2(rho)), std::abs(chi_d1(rho) / rho)});
    }
    return worst;
}

VirialDerivatives z_and_derivative(const ComplexField& u, const CutoffSpec& cut) {
    const GridSpec& g = u.grid;
    const double R = cut.R();
    const auto grad = spectral::gradient(u);

    double z = 0.0, dz = 0.0;
    for (int i3 = 0; i3 < g.points(2); ++i3) {
        const double x3 = g.coordinate(2, i3);
        for (int i2 = 0; i2 < g.points(1); ++i2) {
            const double x2 = g.coordinate(1, i2);
            for (int i1 = 0; i1 < g.points(0); ++i1) {
                const double x1 = g.coordinate(0, i1);
                const std::size_t idx = g.flat_index(i1, i2, i3);
                const double r = std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
                const double rho = r / R;
                z += cut.chi(rho) * std::norm(u.values[idx]);
                if (r > 0.0) {
                    const double slope = cut.chi_d1(rho) / r; // grad chi = chi' x/(R rho)
                    const cplx dir = x1 * grad[0].values[idx] +
                                     x2 * grad[1].values[idx] +
                                     x3 * grad[2].values[idx];
                    dz += slope * std::imag(dir * std::conj(u.values[idx]));
                }
            }
        }
    }
    const double h3 = g.cell_volume();
    return {R * R * z * h3, 2.0 * R * dz * h3};
}

namespace {

// Everything downstream of the transforms, shared by the decomposition and
// the scan: density, |grad u|, grad(K*|u|^2).
struct Workspace {
    const GridSpec& g;
    rvec density;
    std::array<ComplexField, 3> grad;
    std::array<rvec, 3> conv_grad;

    Workspace(const ComplexField& u)
        : g(u.grid), density(g.size()), grad(spectral::gradient(u)),
          conv_grad{rvec(g.size()), rvec(g.size()), rvec(g.size())} {
        for (std::size_t i = 0; i < g.size(); ++i) density[i] = std::norm(u.values[i]);

        cvec half(fft::half_spectrum_size(g)), work(half.size());
        fft::raw_forward_r2c(g, density.data(), half.data());
        const int h1 = g.points(0) / 2 + 1;
        const double scale = 1.0 / static_cast<double>(g.size());
        for (int axis = 0; axis < 3; ++axis) {
            std::size_t idx = 0;
            for (int i3 = 0; i3 < g.points(2); ++i3) {
                const double k3 = g.wavenumber(2, i3);
                for (int i2 = 0; i2 < g.points(1); ++i2) {
                    const double k2 = g.wavenumber(1, i2);
                    for (int i1 = 0; i1 < h1; ++i1, ++idx) {
                        const double k1 = g.wavenumber(0, i1);
                        const double sym = spectral::dipolar_symbol(k1, k2, k3);
                        const double comp = axis == 0 ? k1 : axis == 1 ? k2 : k3;
                        work[idx] = half[idx] * sym * cplx(0.0, comp);
                    }
                }
            }
            fft::raw_inverse_c2r(g, work.data(), conv_grad[axis].data());
            for (double& v : conv_grad[axis]) v *= scale;
        }
    }
};

VirialSplit decomposition_with(const Workspace& ws, const ComplexField& u,
                               const PhysParams& p, const CutoffSpec& cut) {
    const GridSpec& g = ws.g;
    const double R = cut.R();

    double dirichlet = 0.0, hessian_shell = 0.0, bilap_shell = 0.0;
    double quartic_in = 0.0, quartic_shell = 0.0, b_term = 0.0;

    for (int i3 = 0; i3 < g.points(2); ++i3) {
        const double x3 = g.coordinate(2, i3);
        for (int i2 = 0; i2 < g.points(1); ++i2) {
            const double x2 = g.coordinate(1, i2);
            for (int i1 = 0; i1 < g.points(0); ++i1) {
                const double x1 = g.coordinate(0, i1);
                const std::size_t idx = g.flat_index(i1, i2, i3);
                const double r = std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
                const double rho = r / R;
                const double w = ws.density[idx];

                const cplx g1 = ws.grad[0].values[idx];
                const cplx g2 = ws.grad[1].values[idx];
                const cplx g3 = ws.grad[2].values[idx];
                const double grad_sq =
                    std::norm(g1) + std::norm(g2) + std::norm(g3);

                if (rho <= 1.0) {
                    dirichlet += grad_sq;
                    quartic_in += w * w;
                } else if (rho < 2.0) {
                    // (hess chi (x/R)) grad u . conj(grad u)
                    const double c1 = cut.chi_d1(rho), c2 = cut.chi_d2(rho);
                    const cplx radial = (x1 * g1 + x2 * g2 + x3 * g3) / r;
                    hessian_shell += (c2 - c1 / rho) * std::norm(radial) +
                                     (c1 / rho) * grad_sq;
                    bilap_shell += cut.bilaplacian(rho) * w;
                    quartic_shell += cut.laplacian(rho) * w * w;
                }
                if (rho < 2.0 && r > 0.0) {
                    const double slope = cut.chi_d1(rho) / r;
                    b_term += slope * (x1 * ws.conv_grad[0][idx] +
                                       x2 * ws.conv_grad[1][idx] +
                                       x3 * ws.conv_grad[2][idx]) * w;
                }
            }
        }
    }
    const double h3 = g.cell_volume();
    VirialSplit out;
    out.A = 4.0 * dirichlet * h3 + 2.0 * hessian_shell * h3 -
            bilap_shell * h3 / (2.0 * R * R) + 6.0 * p.lambda1 * quartic_in * h3 +
            p.lambda1 * quartic_shell * h3;
    out.B = b_term * h3;
    out.total = out.A - 2.0 * p.lambda2 * R * out.B;
    return out;
}

} // namespace

VirialSplit second_derivative_decomposition(const ComplexField& u, const PhysParams& p,
                                            const CutoffSpec& cut) {
    Workspace ws(u);
    return decomposition_with(ws, u, p, cut);
}

ErrorBudget error_budget(const ComplexField& u, const CutoffSpec& cut) {
    const GridSpec& g = u.grid;
    const double R = cut.R();
    const auto grad = spectral::gradient(u);

    ErrorBudget out;
    for (int i3 = 0; i3 < g.points(2); ++i3) {
        const double x3 = g.coordinate(2, i3);
        for (int i2 = 0; i2 < g.points(1); ++i2) {
            const double x2 = g.coordinate(1, i2);
            for (int i1 = 0; i1 < g.points(0); ++i1) {
                const double x1 = g.coordinate(0, i1);
                const std::size_t idx = g.flat_index(i1, i2, i3);
                const double r = std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
                const double w = std::norm(u.values[idx]);
                const double grad_sq = std::norm(grad[0].values[idx]) +
                                       std::norm(grad[1].values[idx]) +
                                       std::norm(grad[2].values[idx]);
                const double integrand = grad_sq + w / (R * R) + w * w;
                if (r >= R) out.eps1 += integrand;
                if (r >= R / 10.0) out.eps2 += integrand;
            }
        }
    }
    out.eps1 *= g.cell_volume();
    out.eps2 *= g.cell_volume();
    return out;
}

std::vector<ScanRow> virial_convergence_scan(const ComplexField& u, const PhysParams& p,
                                             const std::vector<double>& r_list) {
    if (r_list.empty() || !std::is_sorted(r_list.begin(), r_list.end()))
        throw DomainError("virial_convergence_scan: R list must be increasing");
    const FunctionalReport r = report(u, p);
    const double four_g = 4.0 * r.g;

    Workspace ws(u);
    std::vector<ScanRow> rows;
    rows.reserve(r_list.size());
    for (double R : r_list) {
        CutoffSpec cut(R);
        const VirialSplit split = decomposition_with(ws, u, p, cut);
        const ErrorBudget budget = error_budget(u, cut);
        rows.push_back({R, split.total, four_g, std::abs(split.total - four_g),
                        budget.eps1, budget.eps2});
    }
    return rows;
}

} // namespace dipgpe::virial
