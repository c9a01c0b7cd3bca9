#include "toriclag/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

namespace toriclag {

namespace {

constexpr double pi = std::numbers::pi;

Eigen::MatrixXd gamma_matrix(const LagrangianModel& m) {
    const IntMatrix& g = m.quadrics.gamma;
    Eigen::MatrixXd out(static_cast<Eigen::Index>(g.rows()), static_cast<Eigen::Index>(g.cols()));
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = g(r, c).get_d();
    return out;
}

Eigen::VectorXd delta_vector(const LagrangianModel& m) {
    Eigen::VectorXd d(static_cast<Eigen::Index>(m.quadrics.delta.size()));
    for (std::size_t j = 0; j < m.quadrics.delta.size(); ++j) d(static_cast<Eigen::Index>(j)) = m.quadrics.delta[j].get_d();
    return d;
}

std::vector<std::vector<double>> vertex_slacks(const LagrangianModel& m) {
    std::vector<std::vector<double>> out;
    for (const auto& v : m.vertices) {
        const RatVector s = m.presentation.slack(v.point);
        std::vector<double> d(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) d[i] = s[i].get_d();
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<double> dual_vector(const LagrangianModel& m, std::size_t i) {
    const auto& eps = m.torus.dual.vectors.at(i);
    std::vector<double> e(eps.size());
    for (std::size_t j = 0; j < eps.size(); ++j) e[j] = eps[j].get_d();
    return e;
}

using Frame = std::vector<Eigen::VectorXd>;

double omega(const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
    double s = 0;
    for (Eigen::Index i = 0; i < v.size() / 2; ++i) s += v(2 * i) * w(2 * i + 1) - v(2 * i + 1) * w(2 * i);
    return s;
}

Frame tangent_frame(const LagrangianModel& m, const Eigen::MatrixXd& gamma, const SamplePoint& x,
                    const std::optional<FramePerturbation>& perturb) {
    const auto n = static_cast<Eigen::Index>(x.u.size());
    const Eigen::Index rel = gamma.rows();
    const auto ang = coordinate_angles(m, x.phi);

    Frame frame;
    for (Eigen::Index j = 0; j < rel; ++j) {
        Eigen::VectorXd v(2 * n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double th = pi * ang[static_cast<std::size_t>(i)];
            const double c = x.u[static_cast<std::size_t>(i)] * pi * gamma(j, i);
            v(2 * i) = -c * std::sin(th);
            v(2 * i + 1) = c * std::cos(th);
        }
        frame.push_back(v);
    }

    Eigen::VectorXd u = Eigen::Map<const Eigen::VectorXd>(x.u.data(), n);
    if (perturb) {
        for (Eigen::Index i = 0; i < n; ++i)
            if (gamma(static_cast<Eigen::Index>(perturb->quadric_row), i) != 0) u(i) *= perturb->scale;
    }
    const Eigen::MatrixXd jt = (2.0 * gamma * u.asDiagonal()).transpose();
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(jt);
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
    for (Eigen::Index c = rel; c < n; ++c) {
        Eigen::VectorXd v(2 * n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double th = pi * ang[static_cast<std::size_t>(i)];
            v(2 * i) = q(i, c) * std::cos(th);
            v(2 * i + 1) = q(i, c) * std::sin(th);
        }
        frame.push_back(v);
    }
    return frame;
}

}  // namespace

std::vector<double> base_point(const LagrangianModel& m) {
    const auto slacks = vertex_slacks(m);
    if (slacks.empty()) throw Error("model has no vertices");
    std::vector<double> u(slacks.front().size(), 0.0);
    for (const auto& s : slacks)
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += s[i];
    for (auto& x : u) x = std::sqrt(x / static_cast<double>(slacks.size()));
    return u;
}

SampleSet sample_lagrangian(const LagrangianModel& m, std::size_t count, std::uint64_t seed, double residual_tol) {
    SampleSet set;
    set.seed = seed;
    set.residual_tol = residual_tol;
    if (count == 0) return set;
    const auto slacks = vertex_slacks(m);
    if (slacks.empty()) throw Error("model has no vertices");
    const Eigen::MatrixXd gamma = gamma_matrix(m);
    const Eigen::VectorXd delta = delta_vector(m);
    const std::size_t n = slacks.front().size();
    const std::size_t rel = m.quadrics.relation_count();

    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> weight(1.0);
    std::bernoulli_distribution flip(0.5);
    std::uniform_real_distribution<double> coeff(0.0, 2.0);

    for (std::size_t s = 0; s < count; ++s) {
        std::vector<double> w(slacks.size());
        double total = 0;
        for (auto& x : w) total += (x = weight(rng));
        Eigen::VectorXd u = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
        for (std::size_t j = 0; j < slacks.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) u(static_cast<Eigen::Index>(i)) += w[j] / total * slacks[j][i];
        for (Eigen::Index i = 0; i < u.size(); ++i) {
            u(i) = std::sqrt(std::max(u(i), 0.0));
            if (flip(rng)) u(i) = -u(i);
        }

        double res = 0;
        for (int iter = 0; iter < 50; ++iter) {
            const Eigen::VectorXd r = gamma * u.cwiseProduct(u) - delta;
            res = rel ? r.cwiseAbs().maxCoeff() : 0.0;
            if (res <= residual_tol * 1e-2) break;
            const Eigen::MatrixXd j = 2.0 * gamma * u.asDiagonal();
            // minimum-norm Gauss-Newton step
            const Eigen::VectorXd y = (j * j.transpose()).ldlt().solve(r);
            u -= j.transpose() * y;
        }
        {
            const Eigen::VectorXd r = gamma * u.cwiseProduct(u) - delta;
            res = rel ? r.cwiseAbs().maxCoeff() : 0.0;
        }
        if (!(res <= residual_tol))
            throw Error("sample " + std::to_string(s) + " did not converge: residual " + std::to_string(res));
        set.max_residual = std::max(set.max_residual, res);

        SamplePoint pt;
        pt.u.assign(u.data(), u.data() + u.size());
        pt.phi.assign(rel, 0.0);
        for (std::size_t i = 0; i < rel; ++i) {
            const double c = coeff(rng);
            const auto e = dual_vector(m, i);
            for (std::size_t j = 0; j < rel; ++j) pt.phi[j] += c * e[j];
        }
        set.points.push_back(std::move(pt));
    }
    return set;
}

double lagrangian_residual(const LagrangianModel& m, const SampleSet& s, std::optional<FramePerturbation> perturb) {
    if (s.points.empty()) throw Error("no samples");
    if (perturb && perturb->quadric_row >= m.quadrics.relation_count()) throw Error("no such quadric");
    const Eigen::MatrixXd gamma = gamma_matrix(m);
    double worst = 0;
    for (std::size_t idx = 0; idx < s.points.size(); ++idx) {
        Frame frame = tangent_frame(m, gamma, s.points[idx], perturb);
        Eigen::MatrixXd f(frame.front().size(), static_cast<Eigen::Index>(frame.size()));
        for (std::size_t c = 0; c < frame.size(); ++c) {
            const double norm = frame[c].norm();
            if (norm < 1e-12) throw Error("degenerate tangent vector at sample " + std::to_string(idx));
            frame[c] /= norm;
            f.col(static_cast<Eigen::Index>(c)) = frame[c];
        }
        const Eigen::JacobiSVD<Eigen::MatrixXd> svd(f);
        if (svd.singularValues().minCoeff() < 1e-8)
            throw Error("rank-deficient tangent frame at sample " + std::to_string(idx));
        for (std::size_t a = 0; a < frame.size(); ++a)
            for (std::size_t b = a + 1; b < frame.size(); ++b) worst = std::max(worst, std::abs(omega(frame[a], frame[b])));
    }
    return worst;
}

double cycle_area_numeric(const LagrangianModel& m, std::size_t i, std::size_t steps, std::span<const double> u) {
    if (i >= m.torus.dual.size()) throw Error("generator index out of range");
    if (steps < 3) throw Error("need at least three steps");
    const IntMatrix& g = m.quadrics.gamma;
    const auto e = dual_vector(m, i);
    double area = 0;
    for (std::size_t c = 0; c < g.cols(); ++c) {
        double w = 0;
        for (std::size_t j = 0; j < g.rows(); ++j) w += g(j, c).get_d() * e[j];
        // coordinate c turns through 2 pi w as s goes from 0 to 1
        double x0 = u[c], y0 = 0, acc = 0;
        for (std::size_t step = 1; step <= steps; ++step) {
            const double th = 2.0 * pi * w * static_cast<double>(step) / static_cast<double>(steps);
            const double x1 = u[c] * std::cos(th), y1 = u[c] * std::sin(th);
            acc += x0 * y1 - x1 * y0;
            x0 = x1;
            y0 = y1;
        }
        area += 0.5 * acc;
    }
    return area;
}

double cycle_area_numeric(const LagrangianModel& m, std::size_t i, std::size_t steps) {
    const auto u = base_point(m);
    return cycle_area_numeric(m, i, steps, u);
}

double cycle_area_exact(const LagrangianModel& m, std::size_t i) {
    if (i >= m.torus.dual.size()) throw Error("generator index out of range");
    return pi * dot(m.torus.dual.vectors[i], m.quadrics.delta).get_d();
}

std::vector<long> coordinate_windings(const DiscSpec& d, std::size_t boundary_samples) {
    if (boundary_samples < 8) throw Error("too few boundary samples");
    std::vector<long> out;
    for (const auto& c : d.coords) {
        if (c.amplitude == 0) {
            out.push_back(0);
            continue;
        }
        double total = 0;
        double prev = pi * c.phase;
        for (std::size_t s = 1; s <= boundary_samples; ++s) {
            const double th = 2.0 * pi * static_cast<double>(s) / static_cast<double>(boundary_samples);
            const std::complex<double> z = std::polar(c.amplitude, pi * c.phase + static_cast<double>(c.exponent) * th);
            const double a = std::arg(z);
            total += std::remainder(a - prev, 2.0 * pi);
            prev = a;
        }
        const double raw = total / (2.0 * pi);
        const double snap = std::round(raw);
        if (std::abs(raw - snap) >= 0.01) throw Error("winding number did not settle; use more boundary samples");
        out.push_back(static_cast<long>(snap));
    }
    return out;
}

bool disc_boundary_on_lagrangian(const LagrangianModel& m, const DiscSpec& d, std::size_t boundary_samples,
                                 double tol) {
    const IntMatrix& g = m.quadrics.gamma;
    if (d.coords.size() != g.cols()) return false;
    std::vector<double> amp;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < d.coords.size(); ++i) {
        amp.push_back(d.coords[i].amplitude);
        if (d.coords[i].amplitude != 0) support.push_back(i);
    }
    if (!membership(m.quadrics, amp, tol)) return false;
    // arguments must be <gamma_i, phi> mod 1 for one phi: test every integer relation among supported gamma_i
    const IntMatrix rel = kernel_saturated(g.select_cols(support));
    for (std::size_t s = 0; s < boundary_samples; ++s) {
        const double th = 2.0 * pi * static_cast<double>(s) / static_cast<double>(boundary_samples);
        for (std::size_t r = 0; r < rel.rows(); ++r) {
            double acc = 0;
            for (std::size_t c = 0; c < support.size(); ++c) {
                const auto& dc = d.coords[support[c]];
                const double a = std::arg(std::polar(1.0, pi * dc.phase + static_cast<double>(dc.exponent) * th)) / pi;
                acc += rel(r, c).get_d() * a;
            }
            if (std::abs(acc - std::round(acc)) > 1e-6) return false;
        }
    }
    return true;
}

Integer disc_index_winding(const LagrangianModel& m, const DiscSpec& d, std::size_t boundary_samples) {
    if (!disc_boundary_on_lagrangian(m, d, boundary_samples)) throw Error("disc boundary is not on the Lagrangian");
    const IntMatrix& g = m.quadrics.gamma;
    const auto wind = coordinate_windings(d, boundary_samples);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < d.coords.size(); ++i)
        if (d.coords[i].amplitude != 0) support.push_back(i);
    RatMatrix sys(support.size(), g.rows());
    RatVector rhs(support.size());
    for (std::size_t r = 0; r < support.size(); ++r) {
        for (std::size_t j = 0; j < g.rows(); ++j) sys(r, j) = g(j, support[r]);
        rhs[r] = wind[support[r]];
    }
    if (rank(sys) < g.rows()) throw Error("choose another representative coordinate: supported coordinates miss a torus direction");
    const auto w = solve_unique(sys, rhs);
    if (!w) throw Error("windings are inconsistent with the torus action");
    const Rational index = 2 * dot(m.t, *w);
    if (index.get_den() != 1) throw Error("non-integral index");
    return index.get_num();
}

namespace {

void fill_block(DiscSpec& d, std::size_t begin, std::size_t size, double total, long exponent) {
    for (std::size_t i = begin; i < begin + size; ++i)
        d.coords[i] = {std::sqrt(total / static_cast<double>(size)), 0.0, exponent};
}

}  // namespace

DiscSpec explicit_disc(const FamilyModel& f, const DiscClass& c) {
    DiscSpec d;
    d.coords.assign(static_cast<std::size_t>(f.n), DiscCoordinate{});
    const auto p = static_cast<std::size_t>(f.p), k = static_cast<std::size_t>(f.k);
    const double dn = static_cast<double>(f.n), dp = static_cast<double>(f.p), dk = static_cast<double>(f.k);
    if (f.kind == FamilyKind::simplex_product) {
        if (c.branch == Branch::A) {
            d.coords[k] = {std::sqrt(dp), 0.0, c.lambda1};
            d.coords[p] = {std::sqrt(dn - dp + dk), 0.0, c.lambda2};
        } else {
            if (k == 0) throw Error("branch B disc needs k >= 1");
            d.coords[0] = {std::sqrt(dp), 0.0, c.lambda1};
            d.coords[p] = {std::sqrt(dn - 2 * dp + dk), 0.0, c.lambda2};
        }
        return d;
    }
    if (c.branch == Branch::A) {
        const double outer = (dk / 2 + 1) / 2;
        fill_block(d, 0, p, outer, c.lambda2);
        fill_block(d, p, p, 0.5, c.lambda1 + f.k * c.lambda2);
        fill_block(d, 2 * p, p, 0.5, c.lambda1);
        fill_block(d, 3 * p, p, outer, c.lambda2);
    } else {
        fill_block(d, 0, p, 0.5, c.lambda2);
        fill_block(d, p, p, 1.0, c.lambda1);
        fill_block(d, 3 * p, p, 0.5, c.lambda2);
    }
    return d;
}

DiscSpec stretched_h_disc(const FamilyModel& f) {
    if (f.kind == FamilyKind::simplex_product) throw Error("not a stretched family");
    DiscSpec d;
    const auto p = static_cast<std::size_t>(f.p);
    d.coords.assign(4 * p, DiscCoordinate{});
    fill_block(d, 0, p, 0.5, 1);
    fill_block(d, p, p, 1.0, f.k);
    fill_block(d, 3 * p, p, 0.5, 1);
    return d;
}

}  // namespace toriclag
