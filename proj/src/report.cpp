#include "qorbit/report.hpp"

#include <json.hpp>

#include <sstream>

#include "qorbit/matrix_io.hpp"
#include "qorbit/qudit4.hpp"

namespace qorbit {

AnalysisReport analyze(const Eigen::MatrixXcd& m, double tol) {
  require_square(m, "analyze");
  AnalysisReport rep;
  rep.dim = static_cast<int>(m.rows());
  rep.validity = validate(m, tol);

  const Eigen::MatrixXcd herm = ((m + m.adjoint()) / 2.0).eval();
  const Eigen::VectorXd x = eigenvalues_desc(herm, tol);
  rep.t = power_sums(x, rep.dim);
  rep.char_coeffs = newton_t_to_S(rep.t);
  rep.grad_verdict = psd_classify(grad_matrix(rep.t), tol);

  const bool normalized = std::abs(rep.t[0] - 1.0) <= tol * 2.0;
  rep.member = membership(rep.t, false, tol);

  if (rep.dim == 3 && normalized) {
    rep.region = qutrit_region(rep.t[1], rep.t[2], tol);
    if (rep.validity.physical()) {
      const SuBasis basis = su_basis(3);
      rep.stratum = stratum_classify(herm, basis);
    }
  }
  if (rep.dim == 4) {
    const SuBasis basis = su_basis(4);
    const CasimirPoint c = casimirs_d4(bloch_encode(herm, basis), basis);
    rep.casimirs = c;
    rep.ps_values = ps_inequalities(c);
  }
  return rep;
}

namespace {

std::string vec_text(const Eigen::VectorXd& v) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < v.size(); ++i) {
    os << format_full(v[i]) << (i + 1 < v.size() ? ", " : "");
  }
  os << "]";
  return os.str();
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string render_text(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "dim: " << rep.dim << "\n";
  os << "validity:\n";
  os << "  hermitian: " << bool_text(rep.validity.hermitian) << "\n";
  os << "  unit_trace: " << bool_text(rep.validity.unit_trace) << "\n";
  os << "  psd: " << bool_text(rep.validity.psd) << "\n";
  os << "  min_eigenvalue: " << format_full(rep.validity.min_eigenvalue) << "\n";
  os << "  rank: " << rep.validity.rank << "\n";
  os << "  physical: " << bool_text(rep.validity.physical()) << "\n";
  os << "invariants:\n";
  os << "  t: " << vec_text(rep.t) << "\n";
  os << "  S: " << vec_text(rep.char_coeffs) << "\n";
  os << "grad:\n";
  os << "  class: " << to_string(rep.grad_verdict.cls) << "\n";
  os << "  min_eigenvalue: " << format_full(rep.grad_verdict.min_eigenvalue)
     << "\n";
  os << "membership:\n";
  os << "  class: " << to_string(rep.member.cls) << "\n";
  os << "  disc_min_eigenvalue: " << format_full(rep.member.disc_min_eig)
     << "\n";
  os << "  disc_det: " << format_full(rep.member.disc_det) << "\n";
  if (rep.region) {
    os << "region:\n";
    os << "  location: " << to_string(rep.region->location) << "\n";
    os << "  binding: [";
    for (std::size_t i = 0; i < rep.region->binding.size(); ++i) {
      os << to_string(rep.region->binding[i])
         << (i + 1 < rep.region->binding.size() ? ", " : "");
    }
    os << "]\n";
  }
  if (rep.stratum) {
    os << "stratum:\n";
    os << "  orbit_dim: " << rep.stratum->orbit_dim << "\n";
    os << "  stability_group: " << rep.stratum->stability_group << "\n";
    os << "  location: " << to_string(rep.stratum->location) << "\n";
  }
  if (rep.casimirs) {
    os << "casimirs:\n";
    os << "  c2: " << format_full(rep.casimirs->c2) << "\n";
    os << "  c3: " << format_full(rep.casimirs->c3) << "\n";
    os << "  c4: " << format_full(rep.casimirs->c4) << "\n";
  }
  if (rep.ps_values) {
    os << "ps_values: [" << format_full((*rep.ps_values)[0]) << ", "
       << format_full((*rep.ps_values)[1]) << ", "
       << format_full((*rep.ps_values)[2]) << "]\n";
  }
  return os.str();
}

std::string render_json(const AnalysisReport& rep) {
  nlohmann::json j;
  j["dim"] = rep.dim;
  j["validity"] = {{"hermitian", rep.validity.hermitian},
                   {"unit_trace", rep.validity.unit_trace},
                   {"psd", rep.validity.psd},
                   {"min_eigenvalue", rep.validity.min_eigenvalue},
                   {"rank", rep.validity.rank},
                   {"physical", rep.validity.physical()}};
  j["invariants"]["t"] = std::vector<double>(rep.t.begin(), rep.t.end());
  j["invariants"]["S"] =
      std::vector<double>(rep.char_coeffs.begin(), rep.char_coeffs.end());
  j["grad"] = {{"class", to_string(rep.grad_verdict.cls)},
               {"min_eigenvalue", rep.grad_verdict.min_eigenvalue}};
  j["membership"] = {{"class", to_string(rep.member.cls)},
                     {"disc_min_eigenvalue", rep.member.disc_min_eig},
                     {"disc_det", rep.member.disc_det}};
  if (rep.region) {
    std::vector<std::string> binding;
    for (auto c : rep.region->binding) binding.emplace_back(to_string(c));
    j["region"] = {{"location", to_string(rep.region->location)},
                   {"binding", binding}};
  }
  if (rep.stratum) {
    j["stratum"] = {{"orbit_dim", rep.stratum->orbit_dim},
                    {"stability_group", rep.stratum->stability_group},
                    {"location", to_string(rep.stratum->location)}};
  }
  if (rep.casimirs) {
    j["casimirs"] = {{"c2", rep.casimirs->c2},
                     {"c3", rep.casimirs->c3},
                     {"c4", rep.casimirs->c4}};
  }
  if (rep.ps_values) {
    j["ps_values"] = *rep.ps_values;
  }
  return j.dump(2) + "\n";
}

int exit_code_for(const AnalysisReport& rep) {
  return rep.validity.physical() ? 0 : 2;
}

}  // namespace qorbit
