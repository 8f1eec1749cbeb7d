#pragma once

#include <random>

#include "nashcert/multi_poly.hpp"

namespace nashcert::testing {

inline GaussianRational random_coef(std::mt19937_64& rng, int bound, bool complex_coefs) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  mpq_class re(d(rng), den(rng));
  re.canonicalize();
  mpq_class im = 0;
  if (complex_coefs) {
    im = mpq_class(d(rng), den(rng));
    im.canonicalize();
  }
  return {re, im};
}

/// Up to max_terms random terms in space, each slot exponent <= max_exp.
inline MultiPoly random_poly(std::mt19937_64& rng, const VarSpace& space, int max_terms, unsigned max_exp,
                             bool complex_coefs = true, int bound = 5) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<Term> terms;
  const int k = nterms(rng);
  for (int j = 0; j < k; ++j) {
    Exponents exps(space.size());
    for (auto& x : exps) x = e(rng);
    terms.push_back({std::move(exps), random_coef(rng, bound, complex_coefs)});
  }
  return MultiPoly(space, std::move(terms));
}

inline MultiPoly random_nonzero_poly(std::mt19937_64& rng, const VarSpace& space, int max_terms, unsigned max_exp,
                                     bool complex_coefs = true) {
  for (;;) {
    MultiPoly p = random_poly(rng, space, max_terms, max_exp, complex_coefs);
    if (!p.is_zero()) return p;
  }
}

inline std::complex<double> random_point(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng)};
}

inline std::vector<std::complex<double>> random_slots(std::mt19937_64& rng, const VarSpace& space,
                                                      double scale = 1.0) {
  std::vector<std::complex<double>> v(space.size());
  for (auto& x : v) x = random_point(rng, scale);
  return v;
}

}  // namespace nashcert::testing
