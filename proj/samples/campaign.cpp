// Runs the Theorem 1 campaign on small graphs and prints the CSV summary.
#include <cstdlib>
#include <iostream>

#include "srclab/srclab.hpp"

int main(int argc, char** argv) {
  srclab::CampaignOptions options;
  options.n_max = argc > 1 ? std::atoi(argv[1]) : 5;
  options.m_max = argc > 2 ? std::atoi(argv[2]) : 10;
  const auto report = srclab::validate_theorem1(options);
  std::cout << report.to_csv();
  for (const auto* entry : report.counterexamples()) std::cout << "counterexample " << entry->graph6 << '\n';
  return report.summary.ok() ? 0 : 1;
}
