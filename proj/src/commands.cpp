#include "qorbit/commands.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "qorbit/bloch.hpp"
#include "qorbit/density.hpp"
#include "qorbit/matrix_io.hpp"
#include "qorbit/strata.hpp"

namespace qorbit {

VerifySummary verify_grad_psd(int d, long n, std::uint64_t seed, double tol) {
  if (d < 2 || n < 1) {
    throw std::invalid_argument("verify_grad_psd: need dim >= 2 and n >= 1");
  }
  VerifySummary sum;
  sum.dim = d;
  sum.n = n;
  sum.seed = seed;
  sum.tol = tol;
  sum.min_grad_eigenvalue = std::numeric_limits<double>::infinity();
  for (long i = 0; i < n; ++i) {
    const int rank = 1 + static_cast<int>(i % d);
    const Eigen::MatrixXcd rho =
        random_density(d, rank, stream_seed(seed, static_cast<std::uint64_t>(i)));
    const Eigen::VectorXd t = trace_invariants(rho, d);
    const PsdVerdict v = psd_classify(grad_matrix(t), tol);
    if (v.cls == PsdClass::indefinite) ++sum.violations;
    if (v.min_eigenvalue < sum.min_grad_eigenvalue) {
      sum.min_grad_eigenvalue = v.min_eigenvalue;
    }
  }
  return sum;
}

std::string render_text(const VerifySummary& s) {
  std::ostringstream os;
  os << "verify:\n";
  os << "  dim: " << s.dim << "\n";
  os << "  n: " << s.n << "\n";
  os << "  seed: " << s.seed << "\n";
  os << "  tol: " << format_full(s.tol) << "\n";
  os << "  violations: " << s.violations << "\n";
  os << "  min_grad_eigenvalue_overall: " << format_full(s.min_grad_eigenvalue)
     << "\n";
  return os.str();
}

std::string render_json(const VerifySummary& s) {
  nlohmann::json j;
  j["verify"] = {{"dim", s.dim},
                 {"n", s.n},
                 {"seed", s.seed},
                 {"tol", s.tol},
                 {"violations", s.violations},
                 {"min_grad_eigenvalue_overall", s.min_grad_eigenvalue}};
  return j.dump(2) + "\n";
}

void write_region_csv_header(std::ostream& os) {
  os << "c2,c3,c4,s2,s3,s4,s_ok,grad_min_eig,grad_ok,ps1,ps2,ps3\n";
}

void write_region_csv_row(std::ostream& os, const QuditRegionSample& s) {
  os << format_full(s.c.c2) << ',' << format_full(s.c.c3) << ','
     << format_full(s.c.c4) << ',' << format_full(s.s2) << ','
     << format_full(s.s3) << ',' << format_full(s.s4) << ','
     << (s.s_ok ? 1 : 0) << ',' << format_full(s.grad_min_eig) << ','
     << (s.grad_ok ? 1 : 0) << ',' << format_full(s.ps[0]) << ','
     << format_full(s.ps[1]) << ',' << format_full(s.ps[2]) << '\n';
}

namespace {

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) {
    throw std::runtime_error("cannot write output file: " + p.string());
  }
  return out;
}

void write_curve(const std::filesystem::path& p, double lo, double hi,
                 int points, double (*curve)(double)) {
  std::ofstream out = open_out(p);
  out << "t2,t3\n";
  for (int i = 0; i < points; ++i) {
    const double t2 = (i == 0) ? lo
                    : (i == points - 1)
                          ? hi
                          : lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    out << format_full(t2) << ',' << format_full(curve(t2)) << '\n';
  }
}

}  // namespace

void figure_qutrit(const std::filesystem::path& dir, int nx, int ny,
                   int curve_points, double tol) {
  if (nx < 2 || ny < 2 || curve_points < 2) {
    throw std::invalid_argument("figure_qutrit: grid too small");
  }
  std::filesystem::create_directories(dir);

  const double t2_lo = 0.3, t2_hi = 1.05;
  const double t3_lo = 0.0, t3_hi = 1.05;
  std::ofstream grid = open_out(dir / "qutrit_grid.csv");
  grid << "t2,t3,location\n";
  for (int i = 0; i < nx; ++i) {
    const double t2 = t2_lo + (t2_hi - t2_lo) * static_cast<double>(i) / (nx - 1);
    for (int j = 0; j < ny; ++j) {
      const double t3 =
          t3_lo + (t3_hi - t3_lo) * static_cast<double>(j) / (ny - 1);
      const RegionVerdict v = qutrit_region(t2, t3, tol);
      grid << format_full(t2) << ',' << format_full(t3) << ','
           << to_string(v.location) << '\n';
    }
  }

  write_curve(dir / "qutrit_curve_AB.csv", 1.0 / 3.0, 1.0, curve_points,
              &qutrit_curve_ab);
  write_curve(dir / "qutrit_curve_AC.csv", 1.0 / 3.0, 0.5, curve_points,
              &qutrit_curve_ac);
  write_curve(dir / "qutrit_curve_BC.csv", 0.5, 1.0, curve_points,
              &qutrit_curve_bc);
}

void figure_qudit(const std::filesystem::path& dir, const QuditGrid& grid,
                  double tol) {
  std::filesystem::create_directories(dir);
  std::ofstream pos = open_out(dir / "qudit_rho_pos.csv");
  std::ofstream both = open_out(dir / "qudit_rho_pos_grad_pos.csv");
  write_region_csv_header(pos);
  write_region_csv_header(both);
  region_scan(grid, tol, [&pos, &both](const QuditRegionSample& s) {
    if (!s.s_ok) return;
    write_region_csv_row(pos, s);
    if (s.grad_ok) write_region_csv_row(both, s);
  });
}

void sample_states(int d, long n, int rank, std::uint64_t seed,
                   const std::filesystem::path& out, double tol) {
  if (d < 2 || n < 1 || rank < 0 || rank > d) {
    throw std::invalid_argument("sample_states: bad dim/n/rank");
  }
  std::ofstream os = open_out(out);

  os << "index,rank";
  for (int k = 1; k <= d; ++k) os << ",t" << k;
  for (int k = 1; k <= d; ++k) os << ",S" << k;
  os << ",membership";
  if (d == 3) os << ",region";
  if (d == 4) os << ",c2,c3,c4,s2,s3,s4,s_ok,grad4_min_eig,grad4_ok";
  os << "\n";

  const SuBasis basis = (d == 4) ? su_basis(4) : SuBasis{};
  for (long i = 0; i < n; ++i) {
    const int r = (rank == 0) ? 1 + static_cast<int>(i % d) : rank;
    const Eigen::MatrixXcd rho =
        random_density(d, r, stream_seed(seed, static_cast<std::uint64_t>(i)));
    const Eigen::VectorXd t = trace_invariants(rho, d);
    const Eigen::VectorXd S = newton_t_to_S(t);
    const MembershipVerdict member = membership(t, true, tol);

    os << i << ',' << r;
    for (int k = 0; k < d; ++k) os << ',' << format_full(t[k]);
    for (int k = 0; k < d; ++k) os << ',' << format_full(S[k]);
    os << ',' << to_string(member.cls);
    if (d == 3) {
      os << ',' << to_string(qutrit_region(t[1], t[2], tol).location);
    }
    if (d == 4) {
      const CasimirPoint c = casimirs_d4(bloch_encode(rho, basis), basis);
      const QuditRegionSample s = evaluate_region_sample(c, tol);
      os << ',' << format_full(c.c2) << ',' << format_full(c.c3) << ','
         << format_full(c.c4) << ',' << format_full(s.s2) << ','
         << format_full(s.s3) << ',' << format_full(s.s4) << ','
         << (s.s_ok ? 1 : 0) << ',' << format_full(s.grad_min_eig) << ','
         << (s.grad_ok ? 1 : 0);
    }
    os << '\n';
  }
}

}  // namespace qorbit
