#include <cstdio>
#include <nlohmann/json.hpp>

#include "hql/boundary_rep.hpp"
#include "hql/format_util.hpp"
#include "hql/probes.hpp"
#include "hql/variety.hpp"

namespace hql {

using ordered_json = nlohmann::ordered_json;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  std::string s(buf);
  // Prefer the shortest representation that still round-trips.
  for (int prec = 1; prec < 17; ++prec) {
    char b2[64];
    std::snprintf(b2, sizeof(b2), "%.*g", prec, x);
    double back = 0.0;
    std::sscanf(b2, "%lf", &back);
    if (back == x) return std::string(b2);
  }
  return s;
}

std::string fmt_complex(std::complex<double> z) {
  return fmt_double(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt_double(std::abs(z.imag())) + "i";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

std::string to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::NonCompactCertificate:
      return "NonCompactCertificate";
    case ProbeVerdict::VanishingSequence:
      return "VanishingSequence";
    case ProbeVerdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

static ordered_json complex_pair(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

std::string ProbeReport::to_json_string() const {
  ordered_json j;
  j["probe"] = probe;
  j["param_key"] = param_key;
  ordered_json trailj = ordered_json::array(), mj = ordered_json::array(),
               cj = ordered_json::array();
  for (cplx t : trail) trailj.push_back(complex_pair(t));
  for (cplx m : measured) mj.push_back(complex_pair(m));
  for (cplx c : closed_form) cj.push_back(complex_pair(c));
  j["trail"] = trailj;
  j["measured"] = mj;
  j["closed_form"] = cj;
  j["max_deviation"] = max_deviation;
  j["tolerance"] = tolerance;
  j["verdict"] = to_string(verdict);
  return j.dump(2);
}

std::vector<std::string> ProbeReport::to_csv_rows() const {
  std::vector<std::string> rows;
  rows.push_back("trail_point_re,trail_point_im,measured_re,measured_im,closed_form_re,closed_form_im,deviation");
  for (size_t i = 0; i < trail.size(); ++i) {
    const cplx m = i < measured.size() ? measured[i] : cplx(0.0);
    const cplx c = i < closed_form.size() ? closed_form[i] : cplx(0.0);
    rows.push_back(fmt_double(trail[i].real()) + "," + fmt_double(trail[i].imag()) + "," +
                   fmt_double(m.real()) + "," + fmt_double(m.imag()) + "," +
                   fmt_double(c.real()) + "," + fmt_double(c.imag()) + "," +
                   fmt_double(std::abs(m - c)));
  }
  return rows;
}

std::string to_string(BoundaryVerdict v) {
  switch (v) {
    case BoundaryVerdict::Boundary:
      return "Boundary";
    case BoundaryVerdict::NotBoundary:
      return "NotBoundary";
    case BoundaryVerdict::OutOfScope:
      return "OutOfScope";
  }
  return "OutOfScope";
}

std::string to_string(CertificateCase c) {
  switch (c) {
    case CertificateCase::I:
      return "I";
    case CertificateCase::II:
      return "II";
    case CertificateCase::III:
      return "III";
    case CertificateCase::IV:
      return "IV";
    case CertificateCase::Multiplicity:
      return "multiplicity";
    case CertificateCase::None:
      return "none";
  }
  return "none";
}

static ordered_json poly_terms(const MPoly& p) {
  ordered_json out = ordered_json::array();
  for (const auto& [k, c] : p.terms()) {
    ordered_json term;
    term["k"] = k.exponents();
    term["re"] = c.real();
    term["im"] = c.imag();
    out.push_back(term);
  }
  return out;
}

std::string CertificateReport::to_json_string() const {
  ordered_json j;
  j["p"] = poly_terms(p);
  j["essentially_normal"] = essentially_normal;
  j["p2_form"] = p2_form;
  j["verdict"] = to_string(verdict);
  j["case"] = to_string(case_tag);
  if (q)
    j["q"] = poly_terms(*q);
  else
    j["q"] = nullptr;
  if (epsilon)
    j["epsilon"] = *epsilon;
  else
    j["epsilon"] = nullptr;
  j["sup_norm_on_spectrum"] = sup_norm_on_spectrum;
  j["operator_norm_lower_bound"] = operator_norm_lower_bound;
  j["margin"] = margin;
  j["caps"] = caps;
  j["resolution"] = resolution;
  return j.dump(2);
}

std::string CertificateReport::to_csv_row() const {
  std::string poly;
  for (const auto& [k, c] : p.terms()) {
    if (!poly.empty()) poly += " ";
    poly += "z1^" + std::to_string(k[0]) + "z2^" + std::to_string(k[1]) + ":" + fmt_complex(c);
  }
  std::string capstr;
  for (size_t i = 0; i < caps.size(); ++i)
    capstr += (i ? "x" : "") + std::to_string(caps[i]);
  return "\"" + poly + "\"," + (essentially_normal ? "yes" : "no") + "," + p2_form + "," +
         to_string(verdict) + "," + to_string(case_tag) + "," + fmt_double(sup_norm_on_spectrum) +
         "," + fmt_double(operator_norm_lower_bound) + "," + fmt_double(margin) + "," + capstr;
}

std::string NormJobResult::to_json_string() const {
  ordered_json j;
  j["norm"] = norm;
  j["norm_sq"] = norm_sq;
  j["quadrature_error_estimate"] = quadrature_error_estimate;
  ordered_json cv = ordered_json::array();
  for (cplx v : critical_values) cv.push_back(complex_pair(v));
  j["critical_values"] = cv;
  return j.dump(2);
}

}  // namespace hql
