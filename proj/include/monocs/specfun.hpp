#pragma once

#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "monocs/rational.hpp"

namespace monocs {

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x);

// Meijer G^{1,1}_{1,1}(u | a; b) = Gamma(1-a+b) u^b (1+u)^{a-b-1}.
double meijer_g1111(double u, double a, double b);

template <class T>
T pow_int(T base, long e) {
    if (e < 0) {
        if (base == T(0)) throw std::domain_error("pow_int: zero base, negative exponent");
        base = T(1) / base;
        e = -e;
    }
    T acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

template <class T>
T pochhammer(const T& a, int n) {
    T acc(1);
    for (int i = 0; i < n; ++i) acc *= a + i;
    return acc;
}

// Generalized binomial coefficient top*(top-1)*...*(top-n+1) / n!.
template <class T>
T binomial_coeff(const T& top, int n) {
    if (n < 0) throw std::domain_error("binomial_coeff: negative count");
    T acc(1);
    for (int i = 0; i < n; ++i) {
        acc *= top - i;
        acc /= i + 1;
    }
    return acc;
}

// Terminating Gauss series 2F1(-k, b; c; x) = sum_{s=0}^{k} ((-k)_s (b)_s / (c)_s) x^s / s!.
// Terms advance by the Pochhammer ratio recursion. A zero of (c)_s reached while
// the numerator is still active is a parameter error.
template <class T>
T hyp2f1_terminating(int k, const T& b, const T& c, const T& x) {
    if (k < 0) throw std::domain_error("hyp2f1_terminating: negative degree");
    T term(1);
    T total(1);
    for (int s = 0; s < k; ++s) {
        T num = (b + s) * (-k + s);
        if (num == 0) break;  // series terminated by the numerator
        if (c + s == 0) throw std::invalid_argument("hyp2f1_terminating: lower parameter pole");
        term *= num;
        term *= x;
        term /= (c + s) * (s + 1);
        total += term;
    }
    return total;
}

namespace detail {

// If alpha is a negative integer -l with 1 <= l <= k, return l; else 0.
inline int negative_integer_order(double alpha, int k) {
    if (alpha >= 0 || alpha != std::nearbyint(alpha)) return 0;
    long l = std::lround(-alpha);
    return l <= k ? static_cast<int>(l) : 0;
}

inline int negative_integer_order(const Rational& alpha, int k) {
    if (alpha >= 0 || !is_integer(alpha)) return 0;
    long l = -alpha.get_num().get_si();
    return l <= k ? static_cast<int>(l) : 0;
}

// Explicit binomial sum for P_k^{(alpha,beta)}(t) (Jacobi), any real parameters.
template <class T>
T jacobi_sum(int k, const T& alpha, const T& beta, const T& t) {
    T tm = (t - 1) / 2;
    T tp = (t + 1) / 2;
    T total(0);
    for (int s = 0; s <= k; ++s) {
        T c = binomial_coeff<T>(alpha + k, k - s) * binomial_coeff<T>(beta + k, s);
        total += c * pow_int<T>(tm, s) * pow_int<T>(tp, k - s);
    }
    return total;
}

}  // namespace detail

// Jacobi polynomial P_k^{(alpha,beta)}(t). Negative integer alpha = -l with
// 1 <= l <= k goes through the reduction
//   P_k^{(-l,b)} = [G(k+b+1)/G(k+b+1-l)] [(k-l)!/k!] ((t-1)/2)^l P_{k-l}^{(l,b)}
// which keeps the vanishing leading binomials out of the sum.
template <class T>
T jacobi(int k, const T& alpha, const T& beta, const T& t) {
    if (k < 0) throw std::domain_error("jacobi: negative degree");
    int l = detail::negative_integer_order(alpha, k);
    if (l == 0) return detail::jacobi_sum(k, alpha, beta, t);
    T c = pochhammer<T>(beta + (k - l + 1), l);  // G(k+b+1)/G(k+b+1-l)
    for (int i = k - l + 1; i <= k; ++i) c /= i; // (k-l)!/k!
    T tm = (t - 1) / 2;
    return c * pow_int<T>(tm, l) * detail::jacobi_sum(k - l, T(l), beta, t);
}

// P_n^{(alpha,beta)}(1) = (alpha+1)_n / n!, independent of beta.
template <class T>
T jacobi_at_one(int n, const T& alpha) {
    if constexpr (std::is_floating_point_v<T>) {
        if (alpha > -1 && n + alpha > 60)
            return std::exp(log_gamma(n + alpha + 1) - log_gamma(n + 1.0) - log_gamma(alpha + 1));
    }
    return binomial_coeff<T>(alpha + n, n);
}

}  // namespace monocs
