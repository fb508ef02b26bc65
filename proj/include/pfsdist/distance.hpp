#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "pfsdist/core.hpp"

namespace pfsdist {

enum class MeasureKind {
    IfsHamming,
    IfsEuclidean,
    PfsHamming,
    PfsEuclidean,
    PfsChen,
    PfsMatrix,
};

/// A distance-measure selection. Chen's measure carries its exponent beta;
/// beta >= 1 is enforced at construction.
class DistanceMethod {
public:
    static DistanceMethod ifs_hamming() { return DistanceMethod(MeasureKind::IfsHamming); }
    static DistanceMethod ifs_euclidean() { return DistanceMethod(MeasureKind::IfsEuclidean); }
    static DistanceMethod pfs_hamming() { return DistanceMethod(MeasureKind::PfsHamming); }
    static DistanceMethod pfs_euclidean() { return DistanceMethod(MeasureKind::PfsEuclidean); }
    static DistanceMethod chen(double beta);
    static DistanceMethod matrix() { return DistanceMethod(MeasureKind::PfsMatrix); }

    /// Accepts the CLI spellings: ifs-hamming, ifs-euclid, pfs-hamming,
    /// pfs-euclid, chen, matrix. Chen defaults to beta = 2 until configured.
    static std::optional<DistanceMethod> parse(std::string_view name);

    MeasureKind kind() const { return kind_; }
    double beta() const { return beta_; }
    std::string name() const;

private:
    explicit DistanceMethod(MeasureKind kind, double beta = 2.0)
        : kind_(kind), beta_(beta) {}

    MeasureKind kind_;
    double beta_;
};

/// Raw (mu, nu) pair read as an intuitionistic element without enforcing
/// mu + nu <= 1; pi = 1 - mu - nu may be negative. This is the documented
/// interpretation used when the intuitionistic formulas are applied to
/// Pythagorean data, and is only meaningful in that context.
struct NaiveIfsTriple {
    double mu;
    double nu;
    double pi;
};

NaiveIfsTriple as_ifs_naive(const PfsElement& e);

// Normalized distance families. Each is the averaged-over-universe form;
// a single-element set yields the plain per-element measure.

/// (1/2n) * sum(|d mu| + |d nu| + |d pi|) with pi = 1 - mu - nu unclamped.
double d_hamming_ifs_norm(const PfsSet& a, const PfsSet& b);

/// sqrt((1/2n) * sum(d mu^2 + d nu^2 + d pi^2)), same naive pi.
double d_euclid_ifs_norm(const PfsSet& a, const PfsSet& b);

/// (1/2n) * sum(|d mu^2| + |d nu^2| + |d h^2|).
double d_hamming_pfs_norm(const PfsSet& a, const PfsSet& b);

/// sqrt((1/2n) * sum((d mu^2)^2 + (d nu^2)^2 + (d h^2)^2)).
double d_euclid_pfs_norm(const PfsSet& a, const PfsSet& b);

/// [(1/2n) * sum(|d mu^2|^beta + |d nu^2|^beta + |d h^2|^beta)]^(1/beta).
/// beta = 1 degenerates to the Hamming form and beta = 2 to the Euclidean
/// form, matching them term for term.
double d_chen_norm(const PfsSet& a, const PfsSet& b, double beta);

// Building blocks of the matrix-weighted measure. Per element pair the
// squared-degree difference vector is multiplied by a 3x3 matrix whose upper
// rows are the identity and whose bottom row (Y, N, H) redistributes the
// hesitance difference onto the membership channels in proportion to their
// pooled squared degrees.

/// Signed squared-degree differences; coordinates sum to zero.
struct DiffVector {
    double d_y;
    double d_n;
    double d_h;
};

/// Bottom row of the adjustment matrix. Y + N = 1 and Y^2 + N^2 + H^2 = 1.
struct AdjustmentMatrix {
    double y_weight;
    double n_weight;
    double h_weight;
};

DiffVector build_diff_vector(const PfsElement& a, const PfsElement& b);

/// Y = (mu_a^2 + mu_b^2) / s, N = (nu_a^2 + nu_b^2) / s with s the pooled
/// squared degrees; H = sqrt(1 - Y^2 - N^2). When both elements are fully
/// hesitant, s = 0 and the symmetric limit (0.5, 0.5, sqrt(0.5)) is returned;
/// the diff vector is zero there, so the distance contribution is zero under
/// any choice.
AdjustmentMatrix build_adjustment_matrix(const PfsElement& a, const PfsElement& b);

/// Row-vector times the implied 3x3 matrix:
/// (d_y + d_h*Y, d_n + d_h*N, d_h*H).
std::array<double, 3> transform_vector(const DiffVector& m, const AdjustmentMatrix& w);

/// Squared norm of the transformed difference vector over the pooled fourth
/// powers of the degrees. Always in [0, 1]; the denominator is bounded below
/// by 2/3 because each element's squared degrees sum to one.
double element_ratio(const PfsElement& a, const PfsElement& b);

/// Matrix-weighted distance: sqrt((1/n) * sum_i element_ratio(a_i, b_i)).
double d_matrix(const PfsSet& a, const PfsSet& b);

/// Dispatch on a DistanceMethod.
double distance(const PfsSet& a, const PfsSet& b, const DistanceMethod& method);

}  // namespace pfsdist
