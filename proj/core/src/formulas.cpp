#include "cmotzkin/formulas.hpp"

#include <stdexcept>

namespace cmotzkin {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial with negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact at every step
  }
  return out;
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

BigInt central_binomial(int n) { return binomial(n, n / 2); }

BigInt syt_count_formula(int n, int rows) {
  if (n < 0) throw std::invalid_argument("negative cell count");
  switch (rows) {
    case 2:
      return binomial(n, n / 2);
    case 3: {
      BigInt sum = 0;
      for (int i = 0; 2 * i <= n; ++i) sum += binomial(n, 2 * i) * catalan(i);
      return sum;
    }
    case 4:
      // floor and ceiling of (n+1)/2
      return catalan((n + 1) / 2) * catalan((n + 2) / 2);
    case 5: {
      BigRat sum = 0;
      for (int i = 0; 2 * i <= n; ++i) {
        const BigInt numerator =
            binomial(n, 2 * i) * factorial(2 * i + 2) * catalan(i);
        const BigInt denominator = factorial(i + 2) * factorial(i + 3);
        sum += BigRat(numerator, denominator);
      }
      sum *= 6;
      if (boost::multiprecision::denominator(sum) != 1)
        throw std::logic_error("six times the sum must be an integer");
      return boost::multiprecision::numerator(sum);
    }
    default:
      throw std::invalid_argument(
          "closed forms exist for row bounds 2 to 5 only");
  }
}

}  // namespace cmotzkin
