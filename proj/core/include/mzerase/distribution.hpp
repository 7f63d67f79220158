// Labeled discrete probability distributions: the common currency for
// detector statistics, measurement outcomes and guessing-game entropies.
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace mzerase {

// Distribution over named outcomes. Probabilities must be nonnegative
// (entries below -1e-12 are rejected, smaller negatives are clamped) and
// sum to one within 1e-9; the stored values are renormalized exactly.
class OutcomeDistribution {
public:
    OutcomeDistribution(std::vector<std::string> labels, std::vector<double> probabilities);

    std::size_t size() const { return probs_.size(); }
    double probability(std::size_t i) const { return probs_.at(i); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::span<const double> probabilities() const { return probs_; }

private:
    std::vector<std::string> labels_;
    std::vector<double> probs_;
};

// Joint distribution over an outcome pair (A, B), stored as a dense
// row-major table. Marginals fall out by summation.
class JointDistribution {
public:
    JointDistribution(std::vector<std::string> a_labels,
                      std::vector<std::string> b_labels,
                      std::vector<double> table);

    std::size_t a_size() const { return a_labels_.size(); }
    std::size_t b_size() const { return b_labels_.size(); }
    double probability(std::size_t a, std::size_t b) const;
    const std::string& a_label(std::size_t i) const { return a_labels_.at(i); }
    const std::string& b_label(std::size_t i) const { return b_labels_.at(i); }

    OutcomeDistribution marginal_a() const;
    OutcomeDistribution marginal_b() const;
    // the joint viewed as a single flat distribution over (a, b) pairs
    OutcomeDistribution flattened() const;

private:
    std::vector<std::string> a_labels_;
    std::vector<std::string> b_labels_;
    std::vector<double> table_;
};

}  // namespace mzerase
