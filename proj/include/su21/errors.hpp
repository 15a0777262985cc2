#pragma once

#include <stdexcept>
#include <string>

namespace su21 {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct not_real : error {
    explicit not_real(const std::string& what) : error(what) {}
};

struct singular_matrix : error {
    singular_matrix() : error("matrix is singular") {}
};

struct domain_mismatch : error {
    domain_mismatch() : error("scalar domains differ") {}
};

struct not_closed : error {
    explicit not_closed(const std::string& what) : error(what) {}
};

struct not_a_cocycle : error {
    explicit not_a_cocycle(const std::string& what) : error(what) {}
};

struct not_in_sl3 : error {
    not_in_sl3() : error("determinant is not 1") {}
};

struct binding_out_of_range : error {
    explicit binding_out_of_range(const std::string& what) : error(what) {}
};

struct singular_sample : error {
    singular_sample() : error("family parameter is not invertible") {}
};

struct io_failure : error {
    explicit io_failure(const std::string& what) : error(what) {}
};

} // namespace su21
