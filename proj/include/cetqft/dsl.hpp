#pragma once
#include "cetqft/reps.hpp"

#include <string>

namespace cetqft {

// Genus-1 Heegaard presentation:
//   word S T^2 S
//   framing 0
struct HeegaardPresentation {
  int genus = 1;
  std::string word;
  long framing = 0;
};

HeegaardPresentation parse_presentation(const std::string& text);
std::string read_text_file(const std::string& path);

// "(re, im)" with 12 significant digits, negative zero printed as 0.
std::string format_complex(cplx z);
std::string format_real(double x);

}  // namespace cetqft
