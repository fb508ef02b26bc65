#include "pfsdist/distance.hpp"

#include <cmath>

namespace pfsdist {

DistanceMethod DistanceMethod::chen(double beta) {
    if (!(beta >= 1.0)) {
        throw RangeError("chen: beta = " + std::to_string(beta) +
                         " must be >= 1");
    }
    return DistanceMethod(MeasureKind::PfsChen, beta);
}

std::optional<DistanceMethod> DistanceMethod::parse(std::string_view name) {
    if (name == "ifs-hamming") return ifs_hamming();
    if (name == "ifs-euclid") return ifs_euclidean();
    if (name == "pfs-hamming") return pfs_hamming();
    if (name == "pfs-euclid") return pfs_euclidean();
    if (name == "chen") return chen(2.0);
    if (name == "matrix") return matrix();
    return std::nullopt;
}

std::string DistanceMethod::name() const {
    switch (kind_) {
        case MeasureKind::IfsHamming: return "ifs-hamming";
        case MeasureKind::IfsEuclidean: return "ifs-euclid";
        case MeasureKind::PfsHamming: return "pfs-hamming";
        case MeasureKind::PfsEuclidean: return "pfs-euclid";
        case MeasureKind::PfsChen: return "chen";
        case MeasureKind::PfsMatrix: return "matrix";
    }
    return "unknown";
}

NaiveIfsTriple as_ifs_naive(const PfsElement& e) {
    return NaiveIfsTriple{e.mu(), e.nu(), 1.0 - e.mu() - e.nu()};
}

double d_hamming_ifs_norm(const PfsSet& a, const PfsSet& b) {
    require_conformable(a, b);
    const std::size_t n = a.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const NaiveIfsTriple ta = as_ifs_naive(a[i]);
        const NaiveIfsTriple tb = as_ifs_naive(b[i]);
        sum += std::abs(ta.mu - tb.mu) + std::abs(ta.nu - tb.nu) +
               std::abs(ta.pi - tb.pi);
    }
    return sum / (2.0 * static_cast<double>(n));
}

double d_euclid_ifs_norm(const PfsSet& a, const PfsSet& b) {
    require_conformable(a, b);
    const std::size_t n = a.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const NaiveIfsTriple ta = as_ifs_naive(a[i]);
        const NaiveIfsTriple tb = as_ifs_naive(b[i]);
        const double dm = ta.mu - tb.mu;
        const double dn = ta.nu - tb.nu;
        const double dp = ta.pi - tb.pi;
        sum += dm * dm + dn * dn + dp * dp;
    }
    return std::sqrt(sum / (2.0 * static_cast<double>(n)));
}

double d_hamming_pfs_norm(const PfsSet& a, const PfsSet& b) {
    require_conformable(a, b);
    const std::size_t n = a.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += std::abs(a[i].mu2() - b[i].mu2()) +
               std::abs(a[i].nu2() - b[i].nu2()) +
               std::abs(a[i].h2() - b[i].h2());
    }
    return sum / (2.0 * static_cast<double>(n));
}

double d_euclid_pfs_norm(const PfsSet& a, const PfsSet& b) {
    require_conformable(a, b);
    const std::size_t n = a.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dy = a[i].mu2() - b[i].mu2();
        const double dn = a[i].nu2() - b[i].nu2();
        const double dh = a[i].h2() - b[i].h2();
        sum += dy * dy + dn * dn + dh * dh;
    }
    return std::sqrt(sum / (2.0 * static_cast<double>(n)));
}

namespace {

// pow with a runtime exponent is off by an ulp from the exact square or
// identity, which would break the degeneration to the Hamming and Euclidean
// forms; compute the integral exponents exactly.
double power_term(double magnitude, double beta) {
    if (beta == 1.0) return magnitude;
    if (beta == 2.0) return magnitude * magnitude;
    return std::pow(magnitude, beta);
}

}  // namespace

double d_chen_norm(const PfsSet& a, const PfsSet& b, double beta) {
    if (!(beta >= 1.0)) {
        throw RangeError("d_chen_norm: beta = " + std::to_string(beta) +
                         " must be >= 1");
    }
    require_conformable(a, b);
    const std::size_t n = a.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += power_term(std::abs(a[i].mu2() - b[i].mu2()), beta) +
               power_term(std::abs(a[i].nu2() - b[i].nu2()), beta) +
               power_term(std::abs(a[i].h2() - b[i].h2()), beta);
    }
    const double mean = sum / (2.0 * static_cast<double>(n));
    if (beta == 1.0) return mean;
    if (beta == 2.0) return std::sqrt(mean);
    return std::pow(mean, 1.0 / beta);
}

DiffVector build_diff_vector(const PfsElement& a, const PfsElement& b) {
    return DiffVector{a.mu2() - b.mu2(), a.nu2() - b.nu2(), a.h2() - b.h2()};
}

AdjustmentMatrix build_adjustment_matrix(const PfsElement& a, const PfsElement& b) {
    const double sy = a.mu2() + b.mu2();
    const double sn = a.nu2() + b.nu2();
    const double s = sy + sn;
    double y = 0.5;
    double n = 0.5;
    if (s > 0.0) {
        y = sy / s;
        n = sn / s;
    }
    // 1 - y^2 - n^2 can round to a tiny negative; clamp before the root.
    const double h = std::sqrt(std::max(0.0, 1.0 - (y * y + n * n)));
    return AdjustmentMatrix{y, n, h};
}

std::array<double, 3> transform_vector(const DiffVector& m, const AdjustmentMatrix& w) {
    return {m.d_y + m.d_h * w.y_weight,
            m.d_n + m.d_h * w.n_weight,
            m.d_h * w.h_weight};
}

double element_ratio(const PfsElement& a, const PfsElement& b) {
    const DiffVector m = build_diff_vector(a, b);
    const AdjustmentMatrix w = build_adjustment_matrix(a, b);
    const std::array<double, 3> v = transform_vector(m, w);
    const double num = (v[0] * v[0] + v[1] * v[1]) + v[2] * v[2];
    // Pairwise grouping keeps the expression bitwise symmetric in (a, b).
    const double den = (a.mu2() * a.mu2() + b.mu2() * b.mu2()) +
                       (a.nu2() * a.nu2() + b.nu2() * b.nu2()) +
                       (a.h2() * a.h2() + b.h2() * b.h2());
    return num / den;
}

double d_matrix(const PfsSet& a, const PfsSet& b) {
    require_conformable(a, b);
    const std::size_t n = a.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += element_ratio(a[i], b[i]);
    }
    return std::sqrt(sum / static_cast<double>(n));
}

double distance(const PfsSet& a, const PfsSet& b, const DistanceMethod& method) {
    switch (method.kind()) {
        case MeasureKind::IfsHamming: return d_hamming_ifs_norm(a, b);
        case MeasureKind::IfsEuclidean: return d_euclid_ifs_norm(a, b);
        case MeasureKind::PfsHamming: return d_hamming_pfs_norm(a, b);
        case MeasureKind::PfsEuclidean: return d_euclid_pfs_norm(a, b);
        case MeasureKind::PfsChen: return d_chen_norm(a, b, method.beta());
        case MeasureKind::PfsMatrix: return d_matrix(a, b);
    }
    throw RangeError("distance: unknown method kind");
}

}  // namespace pfsdist
