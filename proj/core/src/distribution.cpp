#include "mzerase/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace mzerase {

namespace {

constexpr double kNegativeSlack = 1e-12;
constexpr double kSumSlack = 1e-9;

void validate_and_renormalize(std::vector<double>& probs) {
    double sum = 0.0;
    for (double& p : probs) {
        if (p < -kNegativeSlack) {
            throw std::invalid_argument("probability below zero: " + std::to_string(p));
        }
        if (p < 0.0) p = 0.0;
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumSlack) {
        throw std::invalid_argument("probabilities sum to " + std::to_string(sum) + ", expected 1");
    }
    for (double& p : probs) p /= sum;
}

}  // namespace

OutcomeDistribution::OutcomeDistribution(std::vector<std::string> labels,
                                         std::vector<double> probabilities)
    : labels_(std::move(labels)), probs_(std::move(probabilities)) {
    if (labels_.size() != probs_.size()) {
        throw std::invalid_argument("label count does not match probability count");
    }
    if (probs_.empty()) {
        throw std::invalid_argument("empty distribution");
    }
    validate_and_renormalize(probs_);
}

JointDistribution::JointDistribution(std::vector<std::string> a_labels,
                                     std::vector<std::string> b_labels,
                                     std::vector<double> table)
    : a_labels_(std::move(a_labels)), b_labels_(std::move(b_labels)), table_(std::move(table)) {
    if (a_labels_.empty() || b_labels_.empty()) {
        throw std::invalid_argument("empty joint distribution");
    }
    if (table_.size() != a_labels_.size() * b_labels_.size()) {
        throw std::invalid_argument("joint table size does not match label counts");
    }
    validate_and_renormalize(table_);
}

double JointDistribution::probability(std::size_t a, std::size_t b) const {
    if (a >= a_size() || b >= b_size()) {
        throw std::out_of_range("joint distribution index out of range");
    }
    return table_[a * b_size() + b];
}

OutcomeDistribution JointDistribution::marginal_a() const {
    std::vector<double> probs(a_size(), 0.0);
    for (std::size_t a = 0; a < a_size(); ++a) {
        for (std::size_t b = 0; b < b_size(); ++b) {
            probs[a] += table_[a * b_size() + b];
        }
    }
    return {a_labels_, std::move(probs)};
}

OutcomeDistribution JointDistribution::marginal_b() const {
    std::vector<double> probs(b_size(), 0.0);
    for (std::size_t a = 0; a < a_size(); ++a) {
        for (std::size_t b = 0; b < b_size(); ++b) {
            probs[b] += table_[a * b_size() + b];
        }
    }
    return {b_labels_, std::move(probs)};
}

OutcomeDistribution JointDistribution::flattened() const {
    std::vector<std::string> labels;
    labels.reserve(table_.size());
    for (const auto& a : a_labels_) {
        for (const auto& b : b_labels_) {
            labels.push_back(a + "," + b);
        }
    }
    return {std::move(labels), table_};
}

}  // namespace mzerase
