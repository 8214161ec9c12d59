#include "monocs/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace monocs {

Rational parse_rational(const std::string& text) {
    std::string::size_type slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r(text, 10);
            r.canonicalize();
            return r;
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) throw std::invalid_argument("empty part");
        Rational r(num + "/" + den, 10);
        if (r.get_den() == 0) throw std::domain_error("zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
}

std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Rational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(z);
}

double log_gamma(double x) {
    if (!(x > 0)) throw std::domain_error("log_gamma: requires x > 0");
    return std::lgamma(x);
}

double hermite(int n, double x) {
    if (n < 0) throw std::domain_error("hermite: negative degree");
    if (n == 0) return 1.0;
    double prev = 1.0, cur = 2 * x;
    for (int i = 1; i < n; ++i) {
        double next = 2 * x * cur - 2 * i * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double meijer_g1111(double u, double a, double b) {
    if (u < 0) throw std::domain_error("meijer_g1111: requires u >= 0");
    if (u == 0 && b < 0) throw std::domain_error("meijer_g1111: u^b singular at u = 0");
    double g = 1 - a + b;
    if (g <= 0 && g == std::nearbyint(g))
        throw std::domain_error("meijer_g1111: gamma pole at 1 - a + b");
    return std::tgamma(g) * std::pow(u, b) * std::pow(1 + u, a - b - 1);
}

}  // namespace monocs
