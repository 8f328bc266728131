// Sparsify a random instance and check the result against one predicate.

#include "addsparse/addsparse.hpp"

#include <iostream>

int main() {
  using namespace addsparse;
  const Hypergraph g = generate(10, 3, 250, /*seed=*/5);

  SparsifyOptions opt;
  opt.domains = {2, 3};
  const Sparsifier sp = sparsify(g, Rational(1, 2), 5, opt);
  std::cout << "kept " << sp.kept_count() << " of " << g.edge_count() << " edges after "
            << sp.attempts << " attempt(s)\n";

  Rng rng = make_rng(11);
  const Predicate p = random_predicate(3, 3, rng);
  const CertReport r = certify(g, sp, p, BoundSpec{BoundMode::all_but_one, Rational(1, 2)});
  std::cout << "random q=3 predicate: max margin " << to_string(r.max_margin) << ", smallest eps "
            << to_string(r.min_feasible) << '\n';

  const Assignment a(2, {0, 0, 0, 1, 1, 1, 1, 0, 1, 0});
  std::cout << "Val of Cut on G at a: " << value(g, cut_predicate(3), a) << '\n';
  return r.holds() ? 0 : 1;
}
