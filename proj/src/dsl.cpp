#include "cetqft/dsl.hpp"

#include "cetqft/framing.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cetqft {

HeegaardPresentation parse_presentation(const std::string& text) {
  HeegaardPresentation h;
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  bool have_word = false;
  while (std::getline(in, line)) {
    ++ln;
    if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    auto where = "line " + std::to_string(ln) + ": ";
    if (key == "genus") {
      h.genus = std::stoi(rest);
      if (h.genus != 1) throw std::invalid_argument(where + "only genus 1 presentations are supported");
    } else if (key == "word") {
      h.word = rest;
      try {
        parse_torus_word(h.word);
      } catch (const std::exception& e) {
        throw std::invalid_argument(where + e.what());
      }
      have_word = true;
    } else if (key == "framing") {
      try {
        h.framing = std::stol(rest);
      } catch (const std::exception&) {
        throw std::invalid_argument(where + "framing must be an integer");
      }
    } else {
      throw std::invalid_argument(where + "unknown key '" + key + "'");
    }
  }
  if (!have_word) throw std::invalid_argument("presentation has no word line");
  return h;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

std::string format_complex(cplx z) {
  auto clean = [](double v) { return std::abs(v) < 1e-14 ? 0.0 : v; };
  return "(" + format_real(clean(z.real())) + ", " + format_real(clean(z.imag())) + ")";
}

}  // namespace cetqft
