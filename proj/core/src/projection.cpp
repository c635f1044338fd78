#include "kspoly/projection.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "kspoly/error.hpp"

namespace kspoly {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kRingTolerance = 1e-6;
constexpr double kAngleTolerance = 1e-4;

VectorXd to_eigen(const std::vector<double>& v) { return Eigen::Map<const VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())); }

MatrixXd reflection(const VectorXd& r) {
    const auto d = r.size();
    return MatrixXd::Identity(d, d) - 2.0 * r * r.transpose() / r.squaredNorm();
}

// Simple roots: positive roots whose reflection sends exactly one positive root to a negative one.
std::vector<VectorXd> simple_roots(const std::vector<VectorXd>& roots) {
    const auto d = roots.front().size();
    VectorXd t(d);
    for (Eigen::Index i = 0; i < d; ++i) t[i] = std::pow(0.1, static_cast<double>(i)) * std::sqrt(static_cast<double>(i + 2));
    std::vector<VectorXd> positive;
    for (const auto& r : roots) {
        const double s = t.dot(r);
        if (std::abs(s) < 1e-9) throw InconsistentData("functional is not generic for the root system");
        positive.push_back(s > 0 ? r : VectorXd(-r));
    }
    std::vector<VectorXd> simple;
    for (const auto& r : positive) {
        int flipped = 0;
        for (const auto& x : positive) {
            const VectorXd y = x - 2.0 * x.dot(r) / r.squaredNorm() * r;
            if (t.dot(y) < 0) ++flipped;
        }
        if (flipped == 1) simple.push_back(r);
    }
    if (static_cast<Eigen::Index>(simple.size()) != d)
        throw InconsistentData("found " + std::to_string(simple.size()) + " simple roots in dimension " + std::to_string(d));
    return simple;
}

double wrap_degrees(double a) {
    a = std::fmod(a, 360.0);
    if (a < 0) a += 360.0;
    if (a >= 360.0) a -= 360.0;
    return a;
}

}  // namespace

CoxeterProjection coxeter_projection(const std::vector<std::vector<double>>& rays,
                                     const std::vector<std::vector<double>>& roots) {
    if (rays.empty() || roots.empty()) throw DomainError("projection needs rays and roots");
    const auto d = static_cast<Eigen::Index>(roots.front().size());
    std::vector<VectorXd> root_vectors;
    for (const auto& r : roots) {
        if (static_cast<Eigen::Index>(r.size()) != d) throw DomainError("roots of different dimensions");
        root_vectors.push_back(to_eigen(r));
    }
    const auto simple = simple_roots(root_vectors);

    MatrixXd c = MatrixXd::Identity(d, d);
    for (const auto& r : simple) c = c * reflection(r);

    Eigen::EigenSolver<MatrixXd> solver(c);
    if (solver.info() != Eigen::Success) throw InconsistentData("eigen decomposition of the Coxeter element failed");
    const std::complex<double> target = std::polar(1.0, 2.0 * std::numbers::pi / 30.0);
    Eigen::Index best = -1;
    double best_err = 1.0;
    int close = 0;
    for (Eigen::Index i = 0; i < d; ++i) {
        const double err = std::abs(solver.eigenvalues()[i] - target);
        if (err < 1e-6) ++close;
        if (err < best_err) {
            best_err = err;
            best = i;
        }
    }
    if (best < 0 || best_err > 1e-6 || close != 1)
        throw InconsistentData("Coxeter element has no isolated eigenvalue exp(2 pi i / 30)");
    const Eigen::VectorXcd v = solver.eigenvectors().col(best);
    VectorXd u = v.real();
    VectorXd w = v.imag();
    u.normalize();
    w -= w.dot(u) * u;
    if (w.norm() < 1e-9) throw InconsistentData("degenerate Coxeter plane");
    w.normalize();

    CoxeterProjection out;
    out.simple_root_count = simple.size();
    double max_radius = 0.0;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (static_cast<Eigen::Index>(rays[i].size()) != d) throw DomainError("ray dimension differs from the roots");
        const VectorXd x = to_eigen(rays[i]);
        const double px = x.dot(u), py = x.dot(w);
        ProjectedRay pr;
        pr.ray = static_cast<RayId>(i + 1);
        pr.radius = std::hypot(px, py);
        pr.angle_deg = wrap_degrees(std::atan2(py, px) * 180.0 / std::numbers::pi);
        max_radius = std::max(max_radius, pr.radius);
        out.rays.push_back(pr);
    }
    if (max_radius <= 0) throw InconsistentData("every ray projects to the origin");
    for (auto& r : out.rays) r.radius /= max_radius;

    std::vector<std::size_t> order(out.rays.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return out.rays[a].radius > out.rays[b].radius; });

    std::vector<std::vector<std::size_t>> groups;
    for (auto i : order) {
        if (groups.empty() || out.rays[groups.back().front()].radius - out.rays[i].radius > kRingTolerance)
            groups.emplace_back();
        groups.back().push_back(i);
    }

    auto phase = [](double a, double period) {
        double p = std::fmod(a, period);
        if (p < 0) p += period;
        return p;
    };
    for (const auto& g : groups) {
        // Both signs of a ray sit 180 = 7*24 + 12 degrees apart, so exactly one of them has
        // phase mod 24 in [0, 12); keep that one. Rays on one circle may still come from
        // two pentadecagons, which differ in that phase.
        std::vector<std::pair<double, std::size_t>> by_phase;
        for (auto i : g) {
            double a = out.rays[i].angle_deg;
            if (phase(a, 24.0) >= 12.0) a = wrap_degrees(a + 180.0);
            double q = phase(a, 24.0);
            if (q > 12.0 - kAngleTolerance) {  // numerically on the 0/12 boundary
                a = wrap_degrees(a + 180.0);
                q = phase(a, 24.0);
                if (q > 12.0) q -= 24.0;
            }
            out.rays[i].angle_deg = a;
            by_phase.emplace_back(q, i);
        }
        std::sort(by_phase.begin(), by_phase.end());
        std::vector<std::vector<std::size_t>> rings;
        double last = 0.0;
        for (const auto& [q, i] : by_phase) {
            if (rings.empty() || q - last > kAngleTolerance) rings.emplace_back();
            rings.back().push_back(i);
            last = q;
        }
        for (const auto& members_in : rings) {
            ProjectionRing ring;
            double sum = 0.0, start = 360.0;
            for (auto i : members_in) {
                sum += out.rays[i].radius;
                double q = phase(out.rays[i].angle_deg, 24.0);
                if (q > 12.0) q -= 24.0;
                start = std::min(start, q);
            }
            ring.radius = sum / static_cast<double>(members_in.size());
            ring.start_angle_deg = start < 0 ? start + 24.0 : start;

            std::vector<std::size_t> members = members_in;
            auto key = [&](std::size_t i) { return wrap_degrees(out.rays[i].angle_deg - start + 12.0); };
            std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
            for (std::size_t k = 0; k < members.size(); ++k) {
                ring.rays.push_back(out.rays[members[k]].ray);
                double diff = std::abs(out.rays[members[k]].angle_deg - (start + 24.0 * static_cast<double>(k)));
                diff = std::fmod(diff, 360.0);
                diff = std::min(diff, 360.0 - diff);
                ring.max_spacing_error_deg = std::max(ring.max_spacing_error_deg, diff);
            }
            out.rings.push_back(std::move(ring));
        }
    }
    return out;
}

namespace {

template <class V>
std::vector<std::vector<double>> real_vectors(const std::vector<V>& vs) {
    std::vector<std::vector<double>> out;
    for (const auto& v : vs) {
        const auto r = to_real(v);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

}  // namespace

CoxeterProjection coxeter_projection(const GoldenRaySet& rs) {
    const auto v = real_vectors(rs.vectors);
    return coxeter_projection(v, v);
}

CoxeterProjection coxeter_projection(const IntRaySet& rs) {
    const auto v = real_vectors(rs.vectors);
    return coxeter_projection(v, v);
}

CoxeterProjection coxeter_projection(const GoldenRaySet& rs, const GoldenRaySet& root_rays) {
    return coxeter_projection(real_vectors(rs.vectors), real_vectors(root_rays.vectors));
}

std::string projection_csv(const CoxeterProjection& p) {
    std::string out = "ray,radius,angle_deg\n";
    char buf[96];
    for (const auto& r : p.rays) {
        std::snprintf(buf, sizeof buf, "%d,%.7f,%.6f\n", r.ray, r.radius, r.angle_deg);
        out += buf;
    }
    return out;
}

}  // namespace kspoly
