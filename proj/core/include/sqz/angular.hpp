#pragma once

namespace sqz {

// Condon-Shortley Clebsch-Gordan coefficient <j1 m1 j2 m2 | J M>.
// Arguments are integers or half-integers; anything else, or |m| > j, or a
// triangle violation, throws std::domain_error. Non-conserving M returns 0.
double clebsch_gordan(double j1, double m1, double j2, double m2, double J,
                      double M);

// Wigner 3j and 6j symbols, same argument conventions.
double wigner_3j(double j1, double j2, double j3, double m1, double m2,
                 double m3);
double wigner_6j(double j1, double j2, double j3, double j4, double j5,
                 double j6);

// Relative dipole amplitude of a hyperfine line F -> F' inside a fine
// transition Jg -> Je with nuclear spin I:
//   (-1)^{F+Je+1+I} sqrt((2Je+1)(2F+1)) {Je F' I; F Jg 1}.
// Normalized so that the sum over ground F of the square is 1 for each
// fixed F' (every excited hyperfine level carries unit total decay
// strength when the full ground manifold is kept).
double hyperfine_amplitude(double Jg, double Je, double I, double F,
                           double Fp);

}  // namespace sqz
