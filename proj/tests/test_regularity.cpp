#include <string>

#include "doctest.h"
#include "helmsens/regularity.hpp"

using namespace helmsens;
using namespace helmsens::reg;

namespace {

// Independent transcription of the index formulas in twice-the-value integer
// arithmetic (the engine is queried only through its public API; the battery
// holds a third copy in plain doubles).
long long tmin(long long a, long long b) { return a < b ? a : b; }
long long tmin(long long a, long long b, long long c) {
  return tmin(tmin(a, b), c);
}

struct Twice {
  long long sol, comp, uncomp, md, sd, mdat, f, m, gd, gn;
};

// r, q, k as twice-values; r and k are even (integers).
Twice expected(long long r2, long long q2, long long k2, int beta,
               bool sharp) {
  Twice t;
  t.sol = sharp ? tmin(q2, r2 + 1) : q2;
  t.comp = tmin(q2, k2);
  t.uncomp = sharp ? tmin(q2, k2 + 1) : tmin(q2, k2);
  t.md = beta == 0 ? tmin(q2, k2) : tmin(q2, r2 - 1, k2);
  t.sd = sharp ? tmin(q2 - 2, r2 - 1, k2 + 1) : tmin(q2 - 2, k2 + 1);
  t.mdat = tmin(q2, r2 - 1, k2 + 1);
  t.f = tmin(q2, k2) - 2;
  t.m = t.mdat - 1;
  t.gd = t.sd + 1;
  t.gn = t.sd - 1;
  return t;
}

RegularityQuery make_query(long long r, long long q2, long long k, int beta,
                           bool sharp) {
  RegularityQuery q;
  q.r = SobolevIndex::integer(r);
  q.q = SobolevIndex::half(q2);
  q.k = SobolevIndex::integer(k);
  q.beta = static_cast<ProblemKind>(beta);
  q.mode = sharp ? ShiftMode::Sharp : ShiftMode::Classic;
  return q;
}

}  // namespace

TEST_CASE("exhaustive grid matches the literal transcription") {
  long long mismatches = 0;
  for (long long r = 1; r <= 6; ++r)
    for (long long q2 = 0; q2 <= 13; ++q2)
      for (long long k = 0; k <= r; ++k)
        for (int beta = 0; beta <= 3; ++beta)
          for (int mode = 0; mode < 2; ++mode) {
            const bool sharp = mode == 1;
            const RegularityQuery query = make_query(r, q2, k, beta, sharp);
            const bool base_ok = sharp || q2 <= 2 * r;
            const bool md_ok = base_ok && q2 >= 2 && k >= 1;
            const Twice e = expected(2 * r, q2, 2 * k, beta, sharp);

            bool ok = true;
            try {
              ok = ok && solution_index(query).twice() == e.sol;
              const PerturbedIndices p = perturbed_index(query);
              ok = ok && p.composed.twice() == e.comp &&
                   p.uncomposed.twice() == e.uncomp;
              ok = ok && sd_index(query).twice() == e.sd;
              if (!base_ok) ok = false;
            } catch (const Error&) {
              if (base_ok) ok = false;
            }
            try {
              ok = ok && md_index(query).twice() == e.md;
              ok = ok && md_datum_index(query).twice() == e.mdat;
              const DatumIndices d = datum_indices(query);
              ok = ok && d.f.twice() == e.f && d.m.twice() == e.m &&
                   d.g_dirichlet.twice() == e.gd && d.g_neumann.twice() == e.gn;
              const CauchyIndices c = cauchy_indices(query);
              ok = ok && c.cmd.twice() == e.md && c.csd.twice() == e.sd;
              if (!md_ok) ok = false;
            } catch (const Error&) {
              if (md_ok) ok = false;
            }
            if (!ok) ++mismatches;
          }
  CHECK(mismatches == 0);
}

TEST_CASE("closed-form spot values") {
  CHECK(md_index(make_query(3, 4, 1, 1, false)) == SobolevIndex::integer(1));
  CHECK(sd_index(make_query(2, 4, 1, 0, false)) == SobolevIndex::integer(1));
  CHECK(solution_index(make_query(1, 6, 1, 0, true)) == SobolevIndex::half(3));
}

TEST_CASE("precondition messages name the violated bound") {
  RegularityQuery q = make_query(1, 1, 1, 1, false);  // q = 1/2
  CHECK_THROWS_WITH_AS(md_index(q),
                       "material derivative requires q >= 1, got q = 1/2",
                       PreconditionViolated);
  RegularityQuery c = make_query(2, 6, 1, 0, false);  // q = 3 > r = 2, Classic
  CHECK_THROWS_AS(solution_index(c), ClassicModeRange);
  RegularityQuery kbig = make_query(2, 4, 3, 0, false);  // k = 3 > r = 2
  CHECK_THROWS_AS(solution_index(kbig), PreconditionViolated);
  RegularityQuery half_k = make_query(2, 4, 1, 0, false);
  half_k.k = SobolevIndex::half(3);
  CHECK_THROWS_AS(solution_index(half_k), PreconditionViolated);
  half_k.allow_half_integer_k = true;
  CHECK_NOTHROW(solution_index(half_k));
}

TEST_CASE("space rendering round-trips") {
  const RegularityReport rep = full_report(make_query(2, 4, 1, 1, true));
  for (const IndexedSpace* s :
       {&rep.solution, &rep.md, &rep.sd, &rep.cauchy_md_space}) {
    const SpaceDescriptor back = parse_space(s->rendered);
    CHECK(back == s->space);
  }
  const RegularityReport tr = full_report(make_query(2, 4, 1, 3, false));
  CHECK(tr.solution.space.carrier == SpaceCarrier::VolumePair);
  CHECK(parse_space(tr.solution.rendered) == tr.solution.space);
}
