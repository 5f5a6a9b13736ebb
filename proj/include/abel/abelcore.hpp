#ifndef ABEL_ABELCORE_HPP
#define ABEL_ABELCORE_HPP

#include "abel/power_function.hpp"

namespace abel {

/* Closed-form solution pipeline for the two-sided equation

     alpha aDx^{-(1-mu)} psi + beta xDb^{-(1-mu)} psi = aDx^{-1} f + c

   on (a,b), 0 < alpha, beta < 1, alpha + beta = 1, 0 < mu < 1. Raising
   both sides by mu turns it into the dominant singular equation

     A psi(x) + (B/pi) PV int w(x,t) psi(t)/(t-x) dt = f(x),
     A = alpha - beta cos(mu pi),  B = beta sin(mu pi),

   whose solution J admits four equivalent weighted-PV representations
   indexed by the angle theta, arg((A-iB)/(A+iB)) in [0, 2pi). Then
   psi = aDx^{-mu} J and, for 0 < sigma < 1 with the representation
   matched to sigma, K_sigma = aDx^{sigma} J lies in H*(a,b) and
   psi = aDx^{-(mu+sigma)} K_sigma. */

struct ProblemSpec {
  Interval interval;
  double alpha;
  double beta;
  double mu;
  PowerFunction f;
  double c = 0.0;

  // validates 0 < alpha, beta < 1, |alpha+beta-1| <= 1e-12,
  // mu in [1e-3, 1-1e-3], and that f lives on `interval`
  ProblemSpec(const Interval& iv, double alpha_, double beta_, double mu_,
              PowerFunction f_, double c_ = 0.0);
};

struct AngleData {
  double A = 0.0;
  double B = 0.0;
  double theta = 0.0;       // in (2 pi mu, 2 pi)
  double theta_norm = 0.0;  // theta / (2 pi)
};

struct RepresentationChoice {
  int index = 1;  // 1..4
  double exp_a = 0.0;
  double exp_b = 0.0;
};

struct SolutionBundle {
  ProblemSpec spec;
  double sigma = 0.0;
  AngleData angle;
  RepresentationChoice choice;
  PowerFunction J;
  PowerFunction K_sigma;
  PowerFunction psi;
  double residual = 0.0;
  double c_hat = 0.0;  // fitted additive constant
};

// theta = 2 pi - 2 atan2(B, A); throws std::invalid_argument on bad
// coefficients and std::logic_error if theta leaves (2 pi mu, 2 pi).
AngleData compute_angle(double alpha, double beta, double mu);

// alpha aDx^{-(1-mu)} u + beta xDb^{-(1-mu)} u (RL-normalized form)
PowerFunction apply_forward(const PowerFunction& u, const ProblemSpec& spec);

// raw-kernel form: differs from apply_forward by the factor Gamma(1-mu)
PowerFunction apply_forward_kernel(const PowerFunction& u,
                                   const ProblemSpec& spec);

// general solution (homogeneous constant = 0) of the dominant equation
//   c1 psi(x) + (c2/pi) PV int psi(t)/(t-x) dt = F(x).
// The inversion weights are derived from the angle of (c1, c2) and
// choice.index alone: indices 2..4 are unconditionally solvable forms,
// index 1 (the both-endpoints-bounded class) solves only when F meets
// the compatibility condition of that class.
PowerFunction solve_dominant(const PowerFunction& F, double c1, double c2,
                             const RepresentationChoice& choice);

// the four equivalent weight pairs for J
RepresentationChoice make_representation(int index, const AngleData& angle,
                                         double mu);

// case table matching the representation to sigma; the returned
// exponents satisfy sigma - 1 < exp <= sigma.
RepresentationChoice select_representation(double sigma,
                                           const AngleData& angle, double mu);

// J = A f / (A^2+B^2) - (B / pi (A^2+B^2)) * weighted PV of f
PowerFunction solve_J(const ProblemSpec& spec,
                      const RepresentationChoice& choice);

// psi = aDx^{-mu} J
PowerFunction reconstruct_psi(const PowerFunction& J, double mu);

// K_sigma = aDx^{sigma} J; throws if the result leaves H* (declared
// endpoint exponent <= -1)
PowerFunction extract_K(const PowerFunction& J, double sigma);

// full pipeline with forward-substitution residual and fitted constant
SolutionBundle solve(const ProblemSpec& spec, double sigma);

}  // namespace abel

#endif
