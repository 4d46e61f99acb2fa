#include "helmsens/json_io.hpp"

#include <cstdio>

namespace helmsens::jsonio {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void Writer::comma() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ += ',';
    first_.back() = false;
  }
}

Writer& Writer::begin_object() {
  comma();
  out_ += '{';
  first_.push_back(true);
  return *this;
}

Writer& Writer::end_object() {
  out_ += '}';
  first_.pop_back();
  return *this;
}

Writer& Writer::begin_array() {
  comma();
  out_ += '[';
  first_.push_back(true);
  return *this;
}

Writer& Writer::end_array() {
  out_ += ']';
  first_.pop_back();
  return *this;
}

Writer& Writer::key(const std::string& k) {
  comma();
  out_ += '"';
  out_ += k;
  out_ += "\":";
  pending_key_ = true;
  return *this;
}

Writer& Writer::value(const std::string& s) {
  comma();
  out_ += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out_ += '\\';
    out_ += c;
  }
  out_ += '"';
  return *this;
}

Writer& Writer::value(const char* s) { return value(std::string(s)); }

Writer& Writer::value(double x) {
  comma();
  out_ += format_double(x);
  return *this;
}

Writer& Writer::value(long long n) {
  comma();
  out_ += std::to_string(n);
  return *this;
}

Writer& Writer::value(int n) { return value(static_cast<long long>(n)); }

Writer& Writer::value(bool b) {
  comma();
  out_ += b ? "true" : "false";
  return *this;
}

void write_field(Writer& w, const BoundaryField& f) {
  w.begin_array();
  for (std::size_t j = 0; j < f.size(); ++j) {
    w.begin_array();
    w.value(f[j].real());
    w.value(f[j].imag());
    w.end_array();
  }
  w.end_array();
}

void write_curve(Writer& w, const StarCurve& c) {
  w.begin_object();
  w.key("rho").begin_array();
  for (const Complex& z : c.radius_coefficients()) {
    w.begin_array();
    w.value(z.real());
    w.value(z.imag());
    w.end_array();
  }
  w.end_array();
  w.key("N").value(static_cast<long long>(c.size()));
  w.end_object();
}

namespace {

void indexed(Writer& w, const SobolevIndex& idx,
             const reg::SpaceDescriptor& d) {
  w.begin_object();
  w.key("index").value(idx.str());
  w.key("space").value(reg::render_space(d));
  w.end_object();
}

void indexed(Writer& w, const reg::IndexedSpace& s) {
  w.begin_object();
  w.key("index").value(s.index.str());
  w.key("space").value(s.rendered);
  w.end_object();
}

}  // namespace

void write_regularity(Writer& w, const reg::RegularityReport& rep) {
  const auto& q = rep.query;
  w.begin_object();
  w.key("schema").value(1);
  w.key("query").begin_object();
  w.key("r").value(q.r.str());
  w.key("q").value(q.q.str());
  w.key("k").value(q.k.str());
  w.key("beta").value(static_cast<int>(q.beta));
  w.key("mode").value(q.mode == reg::ShiftMode::Sharp ? "sharp" : "classic");
  w.end_object();
  w.key("solution");
  indexed(w, rep.solution);
  w.key("perturbed").begin_object();
  w.key("composed").value(rep.perturbed.composed.str());
  w.key("uncomposed").value(rep.perturbed.uncomposed.str());
  w.end_object();
  w.key("md");
  indexed(w, rep.md);
  w.key("sd");
  indexed(w, rep.sd);

  const reg::SpaceCarrier volume =
      q.beta == reg::ProblemKind::Transmission ? reg::SpaceCarrier::VolumePair
                                               : reg::SpaceCarrier::VolumeExterior;
  w.key("data").begin_object();
  w.key("f");
  indexed(w, rep.data.f, {rep.data.f, volume, reg::SpaceWeighting::None});
  w.key("m");
  indexed(w, rep.data.m,
          {rep.data.m, reg::SpaceCarrier::BoundaryScalar,
           reg::SpaceWeighting::None});
  w.key("g0");
  indexed(w, rep.data.g_dirichlet,
          {rep.data.g_dirichlet, reg::SpaceCarrier::BoundaryScalar,
           reg::SpaceWeighting::None});
  w.key("g1");
  indexed(w, rep.data.g_neumann,
          {rep.data.g_neumann, reg::SpaceCarrier::BoundaryScalar,
           reg::SpaceWeighting::None});
  w.end_object();

  w.key("cauchy").begin_object();
  w.key("md");
  indexed(w, rep.cauchy_md_space);
  w.key("sd");
  indexed(w, rep.cauchy_sd_space);
  w.end_object();
  w.end_object();
}

void write_study(Writer& w, const StudyReport& rep) {
  w.begin_object();
  w.key("schema").value(1);
  w.key("ts").begin_array();
  for (double t : rep.ts) w.value(t);
  w.end_array();
  w.key("remainders").begin_array();
  for (double r : rep.remainders) w.value(r);
  w.end_array();
  w.key("slope").value(rep.slope);
  w.key("reference_scale").value(rep.reference_scale);
  w.key("degenerate").value(rep.degenerate);
  w.end_object();
}

std::string study_csv(const StudyReport& rep) {
  std::string out = "t,remainder\n";
  for (std::size_t i = 0; i < rep.ts.size(); ++i) {
    out += format_double(rep.ts[i]);
    out += ',';
    out += format_double(rep.remainders[i]);
    out += '\n';
  }
  return out;
}

}  // namespace helmsens::jsonio
