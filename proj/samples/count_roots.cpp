// Minimal library walkthrough: parse a polynomial, count its distinct real
// roots by the two independent routes, and print the symmetric tridiagonal
// determinantal representation p(x) = det(J) * det(xJ - Td) whose signature
// matrix certifies the count.
//
//   $ ./count_roots "x^5 - 5*x^3 + 4*x"

#include "tridet/detrep.hpp"
#include "tridet/errors.hpp"
#include "tridet/hankel.hpp"
#include "tridet/parse.hpp"
#include "tridet/srems.hpp"

#include <iostream>
#include <string>

using namespace tridet;

int main(int argc, char** argv) {
    const std::string text = argc > 1 ? argv[1] : "x^5 - 5*x^3 + 4*x";
    try {
        const Poly p = monic(parse_poly(text));
        std::cout << "p = " << p << "\n";

        // Route one: signed remainder sequence sign variations.
        // Route two: signature of the Hankel matrix of power sums.
        std::cout << "real roots (remainder route): " << srems::sturm_count(p) << "\n";
        std::cout << "real roots (signature route): "
                  << hankel::signature(hankel::newton_sums(p)) << "\n";

        // The representation: diag/offdiag are stored bottom-up, J top-down.
        const detrep::Rep rep = detrep::build(p, /*seed=*/0);
        const int n = static_cast<int>(rep.diag.size());
        std::cout << "Td diagonal (top-down):";
        for (int i = n - 1; i >= 0; --i) std::cout << " " << to_string(rep.diag[i]);
        std::cout << "\nTd off-diagonal (top-down):";
        for (int i = n - 2; i >= 0; --i) {
            const auto& o = rep.offdiag[i];
            std::cout << " " << (o.sign < 0 ? "-" : "") << "sqrt(" << to_string(o.radicand)
                      << ")";
        }
        std::cout << "\nJ (top-down):";
        for (int j : rep.J) std::cout << " " << j;
        std::cout << "\nsgn(J) = " << rep.sgn_J()
                  << "   det(J)*det(xJ - Td) = " << detrep::rep_char_poly(rep) << "\n";
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return 1;
    }
}
