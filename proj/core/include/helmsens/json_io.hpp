#ifndef HELMSENS_JSON_IO_HPP
#define HELMSENS_JSON_IO_HPP

#include <string>
#include <vector>

#include "helmsens/curve.hpp"
#include "helmsens/regularity.hpp"
#include "helmsens/verify.hpp"

namespace helmsens::jsonio {

// 17 significant digits, locale-independent; the same bits always print the
// same bytes.
std::string format_double(double x);

// Minimal streaming JSON writer: keys appear in call order, numbers go
// through format_double, no whitespace surprises. Enough for byte-stable
// regression fixtures without dragging in a DOM.
class Writer {
public:
  Writer& begin_object();
  Writer& end_object();
  Writer& begin_array();
  Writer& end_array();
  Writer& key(const std::string& k);
  Writer& value(const std::string& s);
  Writer& value(const char* s);
  Writer& value(double x);
  Writer& value(long long n);
  Writer& value(int n);
  Writer& value(bool b);

  std::string str() const { return out_; }

private:
  void comma();
  std::string out_;
  std::vector<bool> first_;  // per nesting level
  bool pending_key_ = false;
};

// [[re, im], ...] aligned to the nodes.
void write_field(Writer& w, const BoundaryField& f);
// {"rho": [[re, im], ...], "N": n} with the one-sided radius coefficients.
void write_curve(Writer& w, const StarCurve& c);

void write_regularity(Writer& w, const reg::RegularityReport& rep);

// {"ts": [...], "remainders": [...], "slope": ..., ...}
void write_study(Writer& w, const StudyReport& rep);
// CSV ladder, one row per t.
std::string study_csv(const StudyReport& rep);

}  // namespace helmsens::jsonio

#endif
