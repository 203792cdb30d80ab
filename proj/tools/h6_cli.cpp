// Command-line front door: construct, verify, region, equiv, catalog, mub,
// variants. Exit codes: 0 success, 1 usage error, 2 validation failure,
// 3 I/O error.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "h6/catalog.hpp"
#include "h6/cubic.hpp"
#include "h6/deltoid.hpp"
#include "h6/equivalence.hpp"
#include "h6/linalg.hpp"
#include "h6/matrix_io.hpp"
#include "h6/mub.hpp"
#include "h6/x6.hpp"

namespace {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

h6::Complex parse_complex_pair(const std::string& s, const char* what) {
  std::istringstream in(s);
  double re, im;
  char comma;
  if (!(in >> re >> comma) || comma != ',' || !(in >> im) ||
      (in >> std::ws, !in.eof()))
    throw CLI::ValidationError(std::string(what) +
                               ": expected '<re>,<im>' decimals");
  return {re, im};
}

void write_matrix_output(const h6::ComplexMatrix& m, const std::string& path) {
  if (path.empty())
    std::cout << h6::matrix_to_text(m);
  else
    h6::save_matrix(path, m);
}

void print_diag(std::ostream& out, const char* name,
                const h6::DiagonalPhases& d) {
  out << name << ":\n";
  h6::ComplexMatrix row(1, d.size());
  for (std::size_t j = 0; j < d.size(); ++j) row(0, j) = d[j].value();
  out << h6::matrix_to_text(row);
}

void print_perm(std::ostream& out, const char* name,
                std::span<const int> perm) {
  out << name << ":";
  for (int p : perm) out << ' ' << p;
  out << '\n';
}

int cmd_construct(const std::string& alpha_s, bool transpose, bool block,
                  const std::string& out_path) {
  h6::Complex alpha = parse_complex_pair(alpha_s, "--alpha");
  if (!h6::in_region(alpha))
    throw ValidationError(
        "alpha outside region: D[a]=" +
        h6::format_real(h6::discriminant(alpha)) +
        " D[-a]=" + h6::format_real(h6::discriminant(-alpha)));
  h6::ComplexMatrix m;
  if (block) {
    m = h6::h_block(h6::block_params(h6::quadruple_from_alpha(alpha)));
    if (transpose) m = m.transpose();
  } else {
    m = h6::x6_from_alpha(alpha, transpose ? h6::FamilyVariant::transpose
                                           : h6::FamilyVariant::standard);
  }
  std::cerr << "hadamard residual = " << h6::format_real(h6::hadamard_residual(m))
            << '\n';
  write_matrix_output(m, out_path);
  return 0;
}

int cmd_verify(const std::string& in_path, double tol) {
  h6::ComplexMatrix m = h6::load_matrix(in_path);
  double res = h6::hadamard_residual(m);
  bool sa = m.square() && h6::is_self_adjoint(m, tol);
  std::cout << "hadamard residual = " << h6::format_real(res) << '\n';
  std::cout << "self-adjoint: " << (sa ? "yes" : "no") << '\n';
  if (res > tol)
    throw ValidationError("matrix is not Hadamard at tol=" +
                          h6::format_real(tol));
  return 0;
}

int cmd_region(const std::string& bounds_s, const std::string& grid_s,
               const std::string& out_path) {
  double xmin, xmax, ymin, ymax;
  {
    std::istringstream in(bounds_s);
    char c1, c2, c3;
    if (!(in >> xmin >> c1 >> xmax >> c2 >> ymin >> c3 >> ymax) || c1 != ',' ||
        c2 != ',' || c3 != ',' || (in >> std::ws, !in.eof()))
      throw CLI::ValidationError("--bounds: expected xmin,xmax,ymin,ymax");
  }
  std::size_t nx, ny;
  {
    std::istringstream in(grid_s);
    char c;
    if (!(in >> nx >> c >> ny) || c != ',' || (in >> std::ws, !in.eof()))
      throw CLI::ValidationError("--grid: expected nx,ny");
  }
  std::vector<h6::RegionSample> samples;
  try {
    samples = h6::sample_region(xmin, xmax, ymin, ymax, nx, ny);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  if (out_path.empty()) {
    h6::write_region_csv(std::cout, samples);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::ios_base::failure("cannot open " + out_path);
    h6::write_region_csv(out, samples);
  }
  return 0;
}

int cmd_equiv(const std::string& a_path, const std::string& b_path,
              double tol) {
  h6::ComplexMatrix a = h6::load_matrix(a_path);
  h6::ComplexMatrix b = h6::load_matrix(b_path);
  for (const auto* m : {&a, &b})
    if (h6::hadamard_residual(*m) > tol)
      std::cerr << "warning: input is not Hadamard at tol="
                << h6::format_real(tol) << ", search proceeds\n";
  auto w = h6::are_equivalent(a, b, tol);
  if (!w) {
    std::cout << "INEQUIVALENT at tol=" << h6::format_real(tol) << '\n';
    return 0;
  }
  std::cout << "EQUIVALENT\n";
  print_perm(std::cout, "row_perm", w->row_perm);
  print_perm(std::cout, "col_perm", w->col_perm);
  print_diag(std::cout, "left_diag", w->left);
  print_diag(std::cout, "right_diag", w->right);
  return 0;
}

int cmd_catalog(const std::string& name, const std::vector<double>& params,
                bool witness) {
  auto need = [&](std::size_t n, const char* usage) {
    if (params.size() != n)
      throw CLI::ValidationError(std::string("--params: expected ") + usage);
  };
  if (name == "dita_d") {
    need(1, "1 value (argument of t in radians)");
    h6::Phase t = h6::Phase::polar(params[0]);
    if (witness) {
      h6::CirculantRepWitness w = h6::dita_circulant_witness(t);
      print_perm(std::cout, "row_perm", w.row_perm);
      print_perm(std::cout, "col_perm", w.col_perm);
      print_diag(std::cout, "left_diag", w.left);
      print_diag(std::cout, "right_diag", w.right);
      std::cout << "expected:\n" << h6::matrix_to_text(w.expected);
    } else {
      std::cout << h6::matrix_to_text(h6::dita_D(t));
    }
    return 0;
  }
  if (name == "bn_b") {
    need(3, "3 values (arguments of x, y, z in radians)");
    h6::Phase x = h6::Phase::polar(params[0]);
    h6::Phase y = h6::Phase::polar(params[1]);
    h6::Phase z = h6::Phase::polar(params[2]);
    if (witness) {
      h6::CirculantRepWitness w = h6::bn_circulant_witness(x, y, z);
      print_perm(std::cout, "row_perm", w.row_perm);
      print_perm(std::cout, "col_perm", w.col_perm);
      print_diag(std::cout, "left_diag", w.left);
      print_diag(std::cout, "right_diag", w.right);
      std::cout << "expected:\n" << h6::matrix_to_text(w.expected);
    } else {
      std::cout << h6::matrix_to_text(h6::bn_B(x, y, z));
    }
    return 0;
  }
  if (witness)
    throw CLI::ValidationError("--witness: only dita_d and bn_b have one");
  if (name == "fourier") {
    std::size_t m = 6;
    if (!params.empty()) {
      need(1, "at most 1 value (matrix order, default 6)");
      m = static_cast<std::size_t>(params[0]);
    }
    std::cout << h6::matrix_to_text(h6::fourier_matrix(m));
    return 0;
  }
  if (name == "gfourier") {
    need(2, "2 values (a_phase, b_phase in radians)");
    std::cout << h6::matrix_to_text(h6::generalized_fourier(params[0],
                                                            params[1]));
    return 0;
  }
  throw CLI::ValidationError("--name: unknown catalog id '" + name + "'");
}

int cmd_mub(const std::string& alpha_s, const std::string& prefix) {
  h6::Complex alpha = parse_complex_pair(alpha_s, "--alpha");
  h6::MubTriplet trip;
  try {
    trip = h6::mub_from_alpha(alpha);
  } catch (const std::domain_error& e) {
    throw ValidationError(e.what());
  }
  h6::save_matrix(prefix + "z1.mat", trip.z1);
  h6::save_matrix(prefix + "z2.mat", trip.z2);
  const char* names[3] = {"I", "Z1", "Z2"};
  for (std::size_t b = 0; b < trip.report.unitarity.size(); ++b)
    std::printf("unitarity %s: %.3e\n", names[b], trip.report.unitarity[b]);
  for (const auto& p : trip.report.pairs)
    std::printf("pair (%s, %s): max deviation = %.3e\n", names[p.first],
                names[p.second], p.deviation);
  std::printf("mub triplet: %s\n", trip.report.ok ? "valid" : "INVALID");
  return trip.report.ok ? 0 : 2;
}

int cmd_variants(const std::string& alpha_s) {
  h6::Complex alpha = parse_complex_pair(alpha_s, "--alpha");
  if (!h6::in_region(alpha))
    throw ValidationError("alpha outside region: D[a]=" +
                          h6::format_real(h6::discriminant(alpha)) + " D[-a]=" +
                          h6::format_real(h6::discriminant(-alpha)));
  std::vector<h6::ComplexMatrix> vars = h6::all_variants(alpha);
  for (std::size_t k = 0; k < vars.size(); ++k) {
    std::cout << "# variant " << k << '\n' << h6::matrix_to_text(vars[k]);
  }

  // partition into equivalence classes, then label each class against the
  // standard and transpose representatives
  std::vector<std::size_t> reps;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (h6::are_equivalent(vars[k], vars[reps[c]])) {
        classes[c].push_back(k);
        placed = true;
        break;
      }
    if (!placed) {
      reps.push_back(k);
      classes.push_back({k});
    }
  }
  h6::ComplexMatrix std_m = h6::x6_from_alpha(alpha);
  h6::ComplexMatrix tr_m = std_m.transpose();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::cout << "class " << c << " (";
    bool is_std = h6::are_equivalent(vars[reps[c]], std_m).has_value();
    bool is_tr = h6::are_equivalent(vars[reps[c]], tr_m).has_value();
    if (is_std && is_tr)
      std::cout << "standard and transpose";
    else if (is_std)
      std::cout << "standard";
    else if (is_tr)
      std::cout << "transpose";
    else
      std::cout << "neither";
    std::cout << "):";
    for (std::size_t k : classes[c]) std::cout << ' ' << k;
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-6 complex Hadamard matrices: the X6(alpha) family, "
               "the deltoid parameter region, equivalence testing, catalog "
               "matrices and Zauner MUB triplets"};
  app.require_subcommand(1);

  std::string alpha_s, out_path, in_path, a_path, b_path, bounds_s, grid_s;
  std::string name, prefix;
  std::vector<double> params;
  bool transpose = false, block = false, witness = false;
  double tol = 1e-7;

  auto* construct = app.add_subcommand("construct", "Build X6(alpha)");
  construct->add_option("--alpha", alpha_s, "family parameter '<re>,<im>'")
      ->required();
  construct->add_flag("--transpose", transpose, "transpose variant");
  construct->add_flag("--block", block, "emit the 2-circulant block form H");
  construct->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a matrix file");
  verify->add_option("-i,--input", in_path, "matrix file")->required();
  verify->add_option("--tol", tol, "tolerance (default 1e-7)");

  auto* region = app.add_subcommand("region", "Sample the parameter region");
  region->add_option("--bounds", bounds_s, "xmin,xmax,ymin,ymax")->required();
  region->add_option("--grid", grid_s, "nx,ny")->required();
  region->add_option("-o,--output", out_path, "CSV file (default stdout)");

  auto* equiv = app.add_subcommand("equiv", "Test Hadamard equivalence");
  equiv->add_option("-a", a_path, "first matrix file")->required();
  equiv->add_option("-b", b_path, "second matrix file")->required();
  equiv->add_option("--tol", tol, "tolerance (default 1e-7)");

  auto* catalog = app.add_subcommand("catalog", "Emit a known matrix");
  catalog->add_option("--name", name, "dita_d | bn_b | fourier | gfourier")
      ->required();
  catalog->add_option("--params", params, "constructor parameters");
  catalog->add_flag("--witness", witness, "print the 2-circulant witness");

  auto* mub = app.add_subcommand("mub", "Build a MUB triplet from alpha");
  mub->add_option("--alpha", alpha_s, "family parameter '<re>,<im>'")
      ->required();
  mub->add_option("-o,--output-prefix", prefix, "prefix for z1.mat, z2.mat");

  auto* variants = app.add_subcommand("variants", "All 36 quadruple choices");
  variants->add_option("--alpha", alpha_s, "family parameter '<re>,<im>'")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(construct))
      return cmd_construct(alpha_s, transpose, block, out_path);
    if (app.got_subcommand(verify)) return cmd_verify(in_path, tol);
    if (app.got_subcommand(region)) return cmd_region(bounds_s, grid_s, out_path);
    if (app.got_subcommand(equiv)) return cmd_equiv(a_path, b_path, tol);
    if (app.got_subcommand(catalog)) return cmd_catalog(name, params, witness);
    if (app.got_subcommand(mub)) return cmd_mub(alpha_s, prefix);
    if (app.got_subcommand(variants)) return cmd_variants(alpha_s);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const h6::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
