#pragma once

#include <cstdint>
#include <vector>

namespace ecuprint {

// One-vs-rest linear SVM trained by regularized hinge-loss subgradient
// descent (Pegasos schedule). Scores are signed decision values.
struct LinearSvm {
    std::vector<std::vector<double>> weights;  // [class][dim]
    std::vector<double> bias;                  // [class]

    std::vector<double> scores(const std::vector<double>& x) const;
};

LinearSvm train_linear_svm(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
                           int n_classes, double c, int epochs, uint64_t seed);

// One-vs-rest RBF SVM via the kernelized subgradient dual: alpha counts
// over training points, folded into per-support coefficients after
// training.
struct RbfSvm {
    double gamma = 0;
    std::vector<std::vector<double>> support;  // training inputs
    std::vector<std::vector<double>> coef;     // [class][support]

    std::vector<double> scores(const std::vector<double>& x) const;
};

RbfSvm train_rbf_svm(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
                     int n_classes, double c, double gamma, int epochs, uint64_t seed);

}  // namespace ecuprint
