// Classifies one parameter pair, prints the witness, and builds a short certificate.

#include <iostream>

#include "lpc/lpc.hpp"

int main() {
  const lpc::QuotientSpec spec = lpc::QuotientSpec::parse("4", "5");
  const lpc::MembershipVerdict v = lpc::classify(spec);
  std::cout << "status: " << lpc::to_string(v.status) << "\n";
  if (!v.member()) return 1;
  std::cout << "witness z0: " << *v.witness << "\n";
  std::cout << "phi(z0): " << *v.witness_value << "\n";

  const lpc::SignChainCertificate cert = lpc::build_certificate(spec, *v.witness, 6);
  for (const auto& z : cert.zero_counts) std::cout << "zeros in |x| < rho_" << z.j << ": " << z.count << "\n";
  std::cout << "complete: " << std::boolalpha << cert.complete() << "\n";

  const lpc::Interval q = lpc::compute_qinf(lpc::kDefaultPrecision, 1e-10);
  std::cout << "q_inf in " << q << "\n";
  return 0;
}
