#include "pfsdist/core.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace pfsdist {

namespace {

constexpr double kEqualityTolerance = 1e-12;

void check_degree_range(const std::string& label, const char* which, double v) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        throw RangeError("element '" + label + "': " + which + " degree " +
                         std::to_string(v) + " outside [0,1]");
    }
}

}  // namespace

IfsElement::IfsElement(std::string label, double mu, double nu,
                       const ValidationPolicy& policy)
    : label_(std::move(label)), mu_(mu), nu_(nu) {
    check_degree_range(label_, "membership", mu_);
    check_degree_range(label_, "non-membership", nu_);
    if (mu_ + nu_ > 1.0 + policy.epsilon) {
        throw ConstraintError("element '" + label_ + "': mu + nu = " +
                              std::to_string(mu_ + nu_) + " exceeds 1");
    }
}

double IfsElement::hesitance() const {
    return std::max(0.0, 1.0 - mu_ - nu_);
}

PfsElement::PfsElement(std::string label, double mu, double nu,
                       const ValidationPolicy& policy)
    : label_(std::move(label)), mu_(mu), nu_(nu) {
    check_degree_range(label_, "membership", mu_);
    check_degree_range(label_, "non-membership", nu_);
    const double sum = mu_ * mu_ + nu_ * nu_;
    if (sum > 1.0 + policy.epsilon) {
        throw ConstraintError("element '" + label_ + "': mu^2 + nu^2 = " +
                              std::to_string(sum) + " exceeds 1");
    }
}

double PfsElement::h2() const {
    return std::max(0.0, 1.0 - mu_ * mu_ - nu_ * nu_);
}

double PfsElement::hesitance() const {
    return std::sqrt(h2());
}

PfsSet::PfsSet(std::string name, std::vector<PfsElement> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw RangeError("set '" + name_ + "' has no elements");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& e : elements_) {
        if (!seen.insert(e.label()).second) {
            throw RangeError("set '" + name_ + "': duplicate label '" +
                             e.label() + "'");
        }
    }
}

bool PfsSet::conformable_with(const PfsSet& other) const {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
        if (elements_[i].label() != other.elements_[i].label()) return false;
    }
    return true;
}

void require_conformable(const PfsSet& a, const PfsSet& b) {
    if (!a.conformable_with(b)) {
        throw ConformabilityError("sets '" + a.name() + "' and '" + b.name() +
                                  "' are not defined over the same ordered universe");
    }
}

PfsElement make_pfs_element(std::string label, double mu, double nu,
                            const ValidationPolicy& policy) {
    return PfsElement(std::move(label), mu, nu, policy);
}

double hesitance_ifs(const IfsElement& e) { return e.hesitance(); }
double hesitance_pfs(const PfsElement& e) { return e.hesitance(); }

double score_ifs(const IfsElement& e) { return e.mu() - e.nu(); }
double score_pfs(const PfsElement& e) { return e.mu2() - e.nu2(); }

bool pfs_subset(const PfsSet& a, const PfsSet& b) {
    require_conformable(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].mu() > b[i].mu() || a[i].nu() < b[i].nu()) return false;
    }
    return true;
}

bool pfs_equals(const PfsSet& a, const PfsSet& b) {
    require_conformable(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i].mu() - b[i].mu()) > kEqualityTolerance ||
            std::abs(a[i].nu() - b[i].nu()) > kEqualityTolerance) {
            return false;
        }
    }
    return true;
}

PfsSet pfs_intersect(const PfsSet& a, const PfsSet& b) {
    require_conformable(a, b);
    std::vector<PfsElement> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.emplace_back(a[i].label(), std::min(a[i].mu(), b[i].mu()),
                         std::max(a[i].nu(), b[i].nu()));
    }
    return PfsSet("(" + a.name() + " & " + b.name() + ")", std::move(out));
}

PfsSet pfs_union(const PfsSet& a, const PfsSet& b) {
    require_conformable(a, b);
    std::vector<PfsElement> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.emplace_back(a[i].label(), std::max(a[i].mu(), b[i].mu()),
                         std::min(a[i].nu(), b[i].nu()));
    }
    return PfsSet("(" + a.name() + " | " + b.name() + ")", std::move(out));
}

PfsSet pfs_product(const PfsSet& a, const PfsSet& b) {
    require_conformable(a, b);
    std::vector<PfsElement> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double mu = a[i].mu() * b[i].mu();
        const double na = a[i].nu2();
        const double nb = b[i].nu2();
        // Probabilistic sum of the squared non-memberships stays in [0,1],
        // and nu' >= max(nu_a, nu_b) keeps the result inside the constraint.
        const double nu = std::sqrt(na + nb - na * nb);
        out.emplace_back(a[i].label(), mu, std::min(nu, 1.0));
    }
    return PfsSet("(" + a.name() + " * " + b.name() + ")", std::move(out));
}

PfsSet pfs_power(const PfsSet& a, int n) {
    if (n < 1) {
        throw RangeError("pfs_power: exponent " + std::to_string(n) +
                         " must be a positive integer");
    }
    std::vector<PfsElement> out;
    out.reserve(a.size());
    for (const auto& e : a.elements()) {
        const double mu = std::pow(e.mu(), n);
        const double nu = std::sqrt(std::max(0.0, 1.0 - std::pow(1.0 - e.nu2(), n)));
        out.emplace_back(e.label(), mu, std::min(nu, 1.0));
    }
    return PfsSet(a.name() + "^" + std::to_string(n), std::move(out));
}

}  // namespace pfsdist
