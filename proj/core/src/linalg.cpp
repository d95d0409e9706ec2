#include "bdae/linalg.hpp"

#include <cmath>

#include "bdae/error.hpp"

namespace bdae {

Eigen::MatrixXd ridge_solve_left(const Eigen::Ref<const Eigen::MatrixXd>& a,
                                 const Eigen::Ref<const Eigen::MatrixXd>& b,
                                 const RidgeParams& params) {
    if (a.cols() != b.cols()) {
        throw DimensionError("ridge_solve_left: A and B must have the same column count");
    }
    if (params.epsilon < 0.0) {
        throw std::invalid_argument("ridge_solve_left: epsilon must be nonnegative");
    }
    Eigen::MatrixXd gram(b.rows(), b.rows());
    gram.setZero();
    gram.selfadjointView<Eigen::Lower>().rankUpdate(b);
    gram.diagonal().array() += params.epsilon;
    gram.triangularView<Eigen::StrictlyUpper>() = gram.transpose();

    // (B B^T + eps I) W^T = B A^T
    const Eigen::MatrixXd cross = b * a.transpose();
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success || llt.rcond() < 1e-14) {
        throw SolverError("ridge_solve_left: normal matrix is singular (epsilon = " +
                          std::to_string(params.epsilon) + ")");
    }
    return llt.solve(cross).transpose();
}

CgResult cg_solve(const LinearOperator& apply, const Eigen::VectorXd& rhs,
                  const Eigen::VectorXd& x0, double tol, int max_iterations) {
    if (x0.size() != rhs.size()) {
        throw DimensionError("cg_solve: initial guess and right-hand side differ in size");
    }
    CgResult res;
    res.x = x0;
    const double rhs_norm = rhs.norm();
    if (rhs_norm == 0.0) {
        res.x.setZero();
        res.converged = true;
        return res;
    }

    Eigen::VectorXd r = rhs - apply(res.x);
    double rr = r.squaredNorm();
    const double target = tol * rhs_norm;
    if (std::sqrt(rr) <= target) {
        res.relative_residual = std::sqrt(rr) / rhs_norm;
        res.converged = true;
        return res;
    }

    Eigen::VectorXd p = r;
    while (res.iterations < max_iterations) {
        const Eigen::VectorXd q = apply(p);
        const double pq = p.dot(q);
        if (!(pq > 0.0)) {
            break;  // operator not SPD along p, or breakdown
        }
        const double alpha = rr / pq;
        res.x.noalias() += alpha * p;
        r.noalias() -= alpha * q;
        ++res.iterations;
        const double rr_next = r.squaredNorm();
        if (std::sqrt(rr_next) <= target) {
            rr = rr_next;
            res.converged = true;
            break;
        }
        p = r + (rr_next / rr) * p;
        rr = rr_next;
    }
    res.relative_residual = std::sqrt(rr) / rhs_norm;
    return res;
}

CgResult cg_solve(const LinearOperator& apply, const Eigen::VectorXd& rhs, double tol,
                  int max_iterations) {
    return cg_solve(apply, rhs, Eigen::VectorXd::Zero(rhs.size()), tol, max_iterations);
}

double spectral_norm(const Eigen::Ref<const Eigen::MatrixXd>& m, int max_iterations, double tol) {
    if (m.size() == 0) {
        return 0.0;
    }
    // Fixed, non-symmetric start so structured matrices do not leave it
    // orthogonal to the dominant singular vector.
    Eigen::VectorXd v(m.cols());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v[i] = 1.0 + 0.1 * static_cast<double>(i % 7);
    }
    v.normalize();
    double sigma = 0.0;
    for (int k = 0; k < max_iterations; ++k) {
        const Eigen::VectorXd u = m * v;
        Eigen::VectorXd next = m.transpose() * u;
        const double norm = next.norm();
        if (norm == 0.0) {
            return 0.0;
        }
        const double estimate = std::sqrt(norm);
        next /= norm;
        const bool done = std::abs(estimate - sigma) <= tol * estimate;
        sigma = estimate;
        v = std::move(next);
        if (done) {
            break;
        }
    }
    return sigma;
}

}  // namespace bdae
