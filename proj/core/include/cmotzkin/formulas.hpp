#pragma once

#include "cmotzkin/bigint.hpp"

namespace cmotzkin {

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt catalan(int n);
BigInt central_binomial(int n);

/// Closed-form count of standard Young tableaux with n cells and at most
/// `rows` rows. Known for rows in {2, 3, 4, 5}; other bounds throw
/// std::invalid_argument (use count_syt_dp instead). The rows == 5 case is
/// evaluated in exact rationals and asserts integrality of the result.
BigInt syt_count_formula(int n, int rows);

}  // namespace cmotzkin
