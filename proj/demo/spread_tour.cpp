// A short tour: the osculating tangents over a few prime fields, with what
// becomes of them in each regime.

#include <iostream>

#include "osculant/osculant.hpp"

using namespace osculant;

int main() {
  for (std::uint32_t p : {2u, 5u, 7u}) {
    const PrimeField f(p);
    const auto o = build_O(f);
    const auto partial = certify_partial_spread(f);
    const auto covering = certify_covering(f);
    std::cout << f.name() << ": " << o.size() << " lines, regime " << regime_name(classify_field(f)) << "\n";
    std::cout << "  pairwise skew: " << (partial.holds ? "yes" : "no");
    if (partial.witness) {
      std::cout << " (tangents at " << to_string(partial.witness->first.first) << ","
                << to_string(partial.witness->first.second) << " and " << to_string(partial.witness->second.first)
                << "," << to_string(partial.witness->second.second) << " meet)";
    }
    std::cout << "\n  points covered: " << covering.covered << " of " << covering.points << "\n";
  }

  const RationalField q;
  const auto tangent = osculating_tangent(q, q.one(), q.one());
  std::cout << "over Q the tangent at P(1,1) is " << to_string(tangent.line) << "\n";
  std::cout << "  Klein image " << to_string(kappa(tangent.line)) << "\n";
  if (const auto w = uncovered_witness_rational(2)) std::cout << "  first uncovered point " << to_string(*w) << "\n";

  const auto probe = pencil_closure_probe(2, 60, 7);
  std::cout << "degree-2 forms through 60 sampled Klein images: " << probe.nullspace_dimension
            << ", all vanish on the pencil line: " << (probe.pencil_vanishing ? "yes" : "no") << "\n";
}
