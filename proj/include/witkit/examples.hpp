#ifndef WITKIT_EXAMPLES_HPP
#define WITKIT_EXAMPLES_HPP

#include <map>
#include <string>
#include <vector>

#include "witkit/lab.hpp"
#include "witkit/matrix.hpp"
#include "witkit/witness.hpp"

namespace witkit {

/// Bundled reference constructions ex3, ex4, ex5: the published witness and
/// state matrices (kept in their display normalization) together with the
/// recipe that reproduces the witness up to a positive scalar.
struct ExampleBundle {
  std::string id;
  CMatrix witness_display;
  CMatrix state_display;       // as printed; ex3's trace is 852/579, not 1
  std::string basis_preset;    // gellmann:3 | mub3
  std::string grouping_preset; // ex3 | ex4 | ex5
  std::string rotation_preset; // cycle:M | identity:M
  int N = 0;                   // groups participating
  int M = 0;
  int L = 0;
  std::vector<double> weights; // empty unless the weighted form is used
  std::map<std::string, Complex> constants;
  std::string notes;           // normalization caveats worth surfacing
};

std::vector<std::string> example_ids();

/// Throws Error for an unknown id.
ExampleBundle load_example(const std::string& id);

/// Executes the bundle's recipe through the witness factory.
Witness build_example_witness(const ExampleBundle& bundle);

/// Recipe-vs-display comparison plus the indecomposability certificate of
/// the display state against the display witness.
struct ReproduceReport {
  std::string id;
  double ratio = 0.0;          // built = ratio * display
  double max_deviation = 0.0;  // on the display scale
  bool matched = false;        // max_deviation <= 1e-8
  CertificateReport certificate;
  double display_expectation = 0.0;
  // ex5 only: the unboosted witness must not detect the state
  bool has_unboosted_check = false;
  double unboosted_expectation = 0.0;
};
ReproduceReport reproduce(const std::string& id);

}  // namespace witkit

#endif
