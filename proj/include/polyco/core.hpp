#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <utility>

namespace polyco {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Single tolerance used for row comparison, feasibility and redundancy slack.
inline constexpr double kDefaultTol = 1e-8;

// Tolerance on objective-space distances in multi-objective solves.
inline constexpr double kDefaultMolpTol = 1e-7;

struct EmptyPolyhedron : std::runtime_error {
    explicit EmptyPolyhedron(const std::string& what = "polyhedron is empty")
        : std::runtime_error(what) {}
};

struct EmptyFeasible : std::runtime_error {
    explicit EmptyFeasible(const std::string& what = "query has no feasible point")
        : std::runtime_error(what) {}
};

struct DimensionCap : std::runtime_error {
    int dim;
    int cap;
    DimensionCap(int dim_, int cap_)
        : std::runtime_error("dimension " + std::to_string(dim_) +
                             " exceeds enumeration cap " + std::to_string(cap_)),
          dim(dim_), cap(cap_) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct LabelCollision : std::runtime_error {
    std::string label;
    explicit LabelCollision(std::string label_)
        : std::runtime_error("duplicate coordinate label '" + label_ + "'"),
          label(std::move(label_)) {}
};

struct NotMonotone : std::runtime_error {
    int row;
    int col;  // column within the offending side (functionality or resource block)
    NotMonotone(int row_, int col_, const std::string& side)
        : std::runtime_error("monotonicity sign test failed at row " + std::to_string(row_) +
                             ", " + side + " column " + std::to_string(col_)),
          row(row_), col(col_) {}
};

struct MalformedGraph : std::runtime_error {
    explicit MalformedGraph(const std::string& what) : std::runtime_error(what) {}
};

struct UnboundedObjective : std::runtime_error {
    int objective;
    Vector ray;  // certifying recession direction in decision space
    UnboundedObjective(int objective_, Vector ray_)
        : std::runtime_error("objective " + std::to_string(objective_) +
                             " is unbounded on the feasible set"),
          objective(objective_), ray(std::move(ray_)) {}
};

struct NumericFailure : std::runtime_error {
    explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

struct OracleInconsistent : std::runtime_error {
    explicit OracleInconsistent(const std::string& what) : std::runtime_error(what) {}
};

struct PointBeyondReference : std::runtime_error {
    explicit PointBeyondReference(const std::string& what) : std::runtime_error(what) {}
};

struct ConvexityViolated : std::runtime_error {
    explicit ConvexityViolated(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polyco
