#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfsdist/errors.hpp"

namespace pfsdist {

/// Validation slack for the membership constraint. Published datasets round
/// degrees to two decimals, which can push mu^2 + nu^2 slightly past 1
/// (e.g. mu = 0.20, nu = 0.98 gives 1.0004), so the default admits a small
/// overshoot. Use strict() to reject anything past the exact bound.
struct ValidationPolicy {
    double epsilon = 1e-3;

    static ValidationPolicy strict() { return ValidationPolicy{0.0}; }
};

/// One universe point of an intuitionistic fuzzy set: membership mu and
/// non-membership nu with mu + nu <= 1. Hesitance is always derived.
class IfsElement {
public:
    IfsElement(std::string label, double mu, double nu,
               const ValidationPolicy& policy = {});

    const std::string& label() const { return label_; }
    double mu() const { return mu_; }
    double nu() const { return nu_; }

    /// 1 - mu - nu, clamped at zero for slack-admitted boundary inputs.
    double hesitance() const;

private:
    std::string label_;
    double mu_ = 0.0;
    double nu_ = 0.0;
};

/// One universe point of a Pythagorean fuzzy set: mu^2 + nu^2 <= 1.
class PfsElement {
public:
    PfsElement(std::string label, double mu, double nu,
               const ValidationPolicy& policy = {});

    const std::string& label() const { return label_; }
    double mu() const { return mu_; }
    double nu() const { return nu_; }

    double mu2() const { return mu_ * mu_; }
    double nu2() const { return nu_ * nu_; }

    /// Squared hesitance 1 - mu^2 - nu^2, clamped at zero.
    double h2() const;

    /// sqrt(max(0, 1 - mu^2 - nu^2)).
    double hesitance() const;

private:
    std::string label_;
    double mu_ = 0.0;
    double nu_ = 0.0;
};

/// Ordered collection of PfsElements over a named universe. Element order is
/// part of the identity: two sets are conformable only if their label
/// sequences are identical, and every distance below is index-aligned.
class PfsSet {
public:
    PfsSet(std::string name, std::vector<PfsElement> elements);

    const std::string& name() const { return name_; }
    std::span<const PfsElement> elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const PfsElement& operator[](std::size_t i) const { return elements_[i]; }

    bool conformable_with(const PfsSet& other) const;

private:
    std::string name_;
    std::vector<PfsElement> elements_;
};

/// Throws ConformabilityError naming both sets if their universes differ.
void require_conformable(const PfsSet& a, const PfsSet& b);

PfsElement make_pfs_element(std::string label, double mu, double nu,
                            const ValidationPolicy& policy = {});

double hesitance_ifs(const IfsElement& e);
double hesitance_pfs(const PfsElement& e);

/// mu - nu; sign indicates the lean, magnitude the certainty.
double score_ifs(const IfsElement& e);

/// mu^2 - nu^2.
double score_pfs(const PfsElement& e);

// Set algebra. All binary operations require conformable operands.

bool pfs_subset(const PfsSet& a, const PfsSet& b);

/// Componentwise equality of mu and nu within 1e-12.
bool pfs_equals(const PfsSet& a, const PfsSet& b);

PfsSet pfs_intersect(const PfsSet& a, const PfsSet& b);
PfsSet pfs_union(const PfsSet& a, const PfsSet& b);

/// Elementwise product: mu' = mu_a * mu_b,
/// nu' = sqrt(nu_a^2 + nu_b^2 - nu_a^2 * nu_b^2).
PfsSet pfs_product(const PfsSet& a, const PfsSet& b);

/// Elementwise power: mu' = mu^n, nu' = sqrt(1 - (1 - nu^2)^n). Requires n >= 1.
PfsSet pfs_power(const PfsSet& a, int n);

}  // namespace pfsdist
