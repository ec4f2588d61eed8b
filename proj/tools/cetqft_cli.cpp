#include "cetqft/diagrams.hpp"
#include "cetqft/dsl.hpp"
#include "cetqft/msverify.hpp"
#include "cetqft/report.hpp"
#include "cetqft/surface.hpp"
#include "cetqft/tqft.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cetqft;

namespace {

struct Common {
  int r = 4;
  std::string format = "text";
};

void add_common(CLI::App* sc, Common& c) {
  sc->add_option("--r", c.r, "level r >= 3")->required()->check(CLI::Range(3, 64));
  sc->add_option("--format", c.format, "text | records")->check(CLI::IsMember({"text", "records"}));
}

void emit(const std::vector<Record>& recs, const std::string& format, std::ostream& os) {
  os << (format == "records" ? render_records(recs) : render_text(recs));
}

std::vector<int> parse_labels(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

std::vector<Record> matrix_records(const std::string& cmd, int r, const std::string& prefix, const Mat& m,
                                   const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<Record> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out.push_back({cmd, r, prefix + "[" + std::to_string(rows[i]) + "][" + std::to_string(cols[j]) + "]",
                     format_complex(m(i, j)), 0.0, true});
  return out;
}

std::vector<int> iota_labels(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum sl(2) basic data, Moore-Seiberg checks and invariants"};
  app.require_subcommand(1);

  Common vc;
  bool signs_off = false;
  double tol = 1e-8;
  std::string only_id;
  auto* verify = app.add_subcommand("verify", "check the relation suite");
  add_common(verify, vc);
  verify->add_flag("--signs-off", signs_off, "replace every K by the identity");
  verify->add_option("--tol", tol, "residual tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--id", only_id, "single relation id");

  Common fc;
  int fm = 0, fn = 0;
  auto* fusion = app.add_subcommand("fusion", "fusion rules, or β_p^{mn} with --m --n");
  add_common(fusion, fc);
  fusion->add_option("--m", fm);
  fusion->add_option("--n", fn);

  Common sc;
  auto* smatrix = app.add_subcommand("smatrix", "torus S-matrix");
  add_common(smatrix, sc);

  Common Fc;
  int F_m = 1, F_n = 1, F_k = 1, F_l = 1;
  auto* fmatrix = app.add_subcommand("fmatrix", "F block for V^{mn}⊗V^{kl}");
  add_common(fmatrix, Fc);
  fmatrix->add_option("--m", F_m)->required();
  fmatrix->add_option("--n", F_n)->required();
  fmatrix->add_option("--k", F_k)->required();
  fmatrix->add_option("--l", F_l)->required();

  Common dc;
  std::string surface_file, labels_str;
  auto* dim = app.add_subcommand("dim", "dimension of V(σ, l)");
  add_common(dim, dc);
  dim->add_option("--surface", surface_file, "surface DSL file")->required()->check(CLI::ExistingFile);
  dim->add_option("--labels", labels_str, "comma separated boundary labels");

  Common ec;
  std::string diagram_file;
  auto* evald = app.add_subcommand("eval-diagram", "evaluate a tangle diagram");
  add_common(evald, ec);
  evald->add_option("--diagram", diagram_file)->required()->check(CLI::ExistingFile);

  Common ic;
  std::string word_file;
  auto* inv = app.add_subcommand("invariant", "closed invariant of a genus-1 Heegaard presentation");
  add_common(inv, ic);
  inv->add_option("--word", word_file, "presentation file")->required()->check(CLI::ExistingFile);

  std::vector<int> report_rs{3, 4, 5, 6};
  std::string report_format = "text", report_out;
  auto* report = app.add_subcommand("report", "run the full check battery");
  report->add_option("--r", report_rs, "levels")->check(CLI::Range(3, 16));
  report->add_option("--format", report_format)->check(CLI::IsMember({"text", "records"}));
  report->add_option("--out", report_out, "write the summary here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      BasicData B(vc.r);
      std::vector<Record> recs;
      if (only_id.empty()) {
        recs = verify_records(B, !signs_off, tol);
      } else {
        auto rep = cetqft::verify(only_id, B, !signs_off, tol);
        recs.push_back({"verify", vc.r, rep.id, std::to_string(rep.labelings), rep.residual, rep.pass});
      }
      emit(recs, vc.format, std::cout);
      return all_pass(recs) ? 0 : 1;
    }
    if (*fusion) {
      Params P(fc.r);
      std::vector<Record> recs;
      if (fm && fn) {
        FusionBasis B(P);
        for (int p : fusion_range(fm, fn, P)) {
          Mat b = B.beta(p, fm, fn);
          std::vector<int> rows = iota_labels(static_cast<int>(b.rows()));
          std::vector<int> cols = iota_labels(static_cast<int>(b.cols()));
          auto m = matrix_records("fusion", fc.r, "beta_" + std::to_string(p), b, rows, cols);
          recs.insert(recs.end(), m.begin(), m.end());
        }
      } else {
        for (int m = 1; m < fc.r; ++m)
          for (int n = 1; n < fc.r; ++n) {
            std::string ps;
            for (int p : fusion_range(m, n, P)) ps += (ps.empty() ? "" : " ") + std::to_string(p);
            recs.push_back({"fusion", fc.r, std::to_string(m) + "x" + std::to_string(n), ps, 0.0, true});
          }
      }
      emit(recs, fc.format, std::cout);
      return 0;
    }
    if (*smatrix) {
      BasicData B(sc.r);
      auto L = iota_labels(sc.r - 1);
      emit(matrix_records("smatrix", sc.r, "S", B.torus_S(), L, L), sc.format, std::cout);
      return 0;
    }
    if (*fmatrix) {
      BasicData B(Fc.r);
      const Block& blk = B.move_F(F_m, F_n, F_k, F_l);
      if (blk.empty()) throw std::invalid_argument("F block is empty for these labels");
      emit(matrix_records("fmatrix", Fc.r, "F", blk.m, blk.rows, blk.cols), Fc.format, std::cout);
      return 0;
    }
    if (*dim) {
      CeSurface s = parse_surface(read_text_file(surface_file));
      auto labels = parse_labels(labels_str);
      long d = dim_V(s, labels, dc.r);
      emit({{"dim", dc.r, surface_file, std::to_string(d), 0.0, true}}, dc.format, std::cout);
      return 0;
    }
    if (*evald) {
      FusionBasis B(Params(ec.r));
      auto d = parse_diagram(read_text_file(diagram_file), B);
      LinearMap f = evaluate(d, B);
      auto rows = iota_labels(static_cast<int>(f.m.rows())), cols = iota_labels(static_cast<int>(f.m.cols()));
      emit(matrix_records("eval", ec.r, "M", f.m, rows, cols), ec.format, std::cout);
      return 0;
    }
    if (*inv) {
      auto h = parse_presentation(read_text_file(word_file));
      BasicData B(ic.r);
      Tqft T(B);
      auto z = T.invariant_closed(h.word, h.framing);
      emit({{"invariant", ic.r, word_file, format_complex(z.value) + " framing=" + std::to_string(z.framing) +
                                               " word_framing=" + std::to_string(z.word_framing),
             0.0, true}},
           ic.format, std::cout);
      return 0;
    }
    if (*report) {
      auto recs = report_records(report_rs);
      std::string doc = report_format == "records" ? render_records(recs) : render_text(recs);
      if (report_out.empty()) {
        std::cout << doc;
      } else {
        std::ofstream f(report_out);
        if (!f) throw std::runtime_error("cannot write " + report_out);
        f << doc;
      }
      return all_pass(recs) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
