#ifndef QGC_ERRORS_HPP
#define QGC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgc {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

// q -> 1 limit does not exist: a factor (s-1) survives in the denominator.
struct pole_error : error {
    explicit pole_error(const std::string& what = "pole at q = 1") : error(what) {}
};

// q -> 1 limit exists as a rational function of h but not as a polynomial.
struct non_polynomial_error : error {
    explicit non_polynomial_error(const std::string& what = "limit is not polynomial in h")
        : error(what) {}
};

struct substitution_pole : error {
    explicit substitution_pole(const std::string& what) : error(what) {}
};

struct index_out_of_range : error {
    explicit index_out_of_range(const std::string& what) : error(what) {}
};

struct missing_factor_dims : error {
    explicit missing_factor_dims(const std::string& what = "matrix carries no tensor factor dimensions")
        : error(what) {}
};

struct singular_matrix : error {
    explicit singular_matrix(const std::string& what = "matrix is singular") : error(what) {}
};

// The two defining expressions of a twisted R-matrix disagree.
struct expression_mismatch : error {
    explicit expression_mismatch(const std::string& what) : error(what) {}
};

struct non_confluent : error {
    explicit non_confluent(const std::string& what) : error(what) {}
};

struct degree_bound_exceeded : error {
    explicit degree_bound_exceeded(const std::string& what) : error(what) {}
};

struct solve_dimension_error : error {
    explicit solve_dimension_error(const std::string& what) : error(what) {}
};

struct invalid_labels : error {
    explicit invalid_labels(const std::string& what) : error(what) {}
};

} // namespace qgc

#endif
