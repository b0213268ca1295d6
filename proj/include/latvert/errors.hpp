#pragma once

#include <stdexcept>
#include <string>

namespace latvert {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent caller input (bad matrix, wrong sizes, ...).
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : InvalidInput {
    explicit DimensionMismatch(const std::string& msg) : InvalidInput(msg) {}
};

// Fiber enumeration on a lattice that meets the nonnegative orthant.
struct UnboundedFiber : Error {
    explicit UnboundedFiber(const std::string& msg) : Error(msg) {}
};

// Q-polyhedron enumeration on an unbounded polyhedron.
struct UnboundedPolyhedron : Error {
    explicit UnboundedPolyhedron(const std::string& msg) : Error(msg) {}
};

// Projection dropped the lattice dimension.
struct DimensionDrop : Error {
    explicit DimensionDrop(const std::string& msg) : Error(msg) {}
};

// Weight vector not strictly positive on the nonnegative lattice monoid.
struct NonPositiveWeight : Error {
    explicit NonPositiveWeight(const std::string& msg) : Error(msg) {}
};

// Operation defined only for proper monomial ideals.
struct UnitIdealError : Error {
    explicit UnitIdealError(const std::string& msg) : Error(msg) {}
};

// Inequality system without full-dimensional solution cone.
struct DegenerateCone : Error {
    explicit DegenerateCone(const std::string& msg) : Error(msg) {}
};

// Enumeration or completion exceeded its configured cap.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// 64-bit lattice-vector range guard tripped.
struct ValueOutOfRange : Error {
    explicit ValueOutOfRange(const std::string& msg) : Error(msg) {}
};

}  // namespace latvert
