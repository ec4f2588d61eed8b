#pragma once
#include "cetqft/basicdata.hpp"

#include <string>
#include <vector>

namespace cetqft {

struct Record {
  std::string command;
  int r = 0;
  std::string id;
  std::string value;
  double residual = 0.0;
  bool pass = true;
};

std::vector<Record> verify_records(const BasicData& B, bool signs_on, double tol);
// Full check battery for each r; deterministic.
std::vector<Record> report_records(const std::vector<int>& rs, double tol = 1e-8);

std::string render_text(const std::vector<Record>& recs);
// One JSON object per line.
std::string render_records(const std::vector<Record>& recs);
bool all_pass(const std::vector<Record>& recs);

}  // namespace cetqft
