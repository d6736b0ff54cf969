#include "prodstruct/bounds.h"

#include <algorithm>

#include "prodstruct/errors.h"
#include "prodstruct/lift.h"

namespace prodstruct {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

BoundClass parse_bound_class(const std::string& s) {
  if (s == "kplanar") return BoundClass::kplanar;
  if (s == "one-planar" || s == "1planar") return BoundClass::one_planar;
  if (s == "power") return BoundClass::power;
  if (s == "shortcut") return BoundClass::shortcut;
  if (s == "p-centered") return BoundClass::p_centered;
  if (s == "nonrepetitive") return BoundClass::nonrepetitive;
  if (s == "knn") return BoundClass::knn;
  if (s == "draw") return BoundClass::draw;
  throw MalformedInput("unknown bound class: " + s);
}

std::vector<BoundRow> bound_report(BoundClass c, const BoundParams& bp) {
  if (bp.k < 0 || bp.p < 1 || bp.delta < 0 || bp.ell < 1 || bp.t < 0 || bp.d < 0 || bp.chi_h < 1)
    throw MalformedInput("bound_report: parameter out of range");
  std::vector<BoundRow> rows;
  const long long k = bp.k, p = bp.p;
  switch (c) {
    case BoundClass::kplanar: {
      long long w = 18 * k * k + 48 * k + 30;
      long long tw = binom(bp.k + 4, 3) - 1;
      rows.push_back({"layered width (K_l factor)", w, "18k^2+48k+30"});
      rows.push_back({"treewidth of H", tw, "binom(k+4,3)-1"});
      rows.push_back({"unrefined layered width", 6 * ((k + 1) * (k + 1) * (k + 1) + 3 * (k + 1)),
                      "6((k+1)^3+3(k+1))"});
      if (tw + 1 <= 30) rows.push_back({"non-repetitive colours", w * ipow(4, static_cast<int>(tw + 1)), "(18k^2+48k+30)*4^binom(k+4,3)"});
      break;
    }
    case BoundClass::one_planar:
      rows.push_back({"layered width (K_l factor)", 30, "30"});
      rows.push_back({"treewidth of H", 3, "3"});
      rows.push_back({"per-layer part size before pairing", 15, "15"});
      rows.push_back({"queue-number", 3 * 30 * 5 + (3 * 30) / 2, "3*30*5+floor(3/2*30)"});
      rows.push_back({"non-repetitive colours", 30 * ipow(4, 4), "30*4^4"});
      rows.push_back({"p-centered colours", 5 * (p + 3) * (p + 2) * (p + 1) * (p + 1),
                      "5(p+3)(p+2)(p+1)^2"});
      break;
    case BoundClass::power: {
      long long dk = ipow(bp.delta, bp.k);
      rows.push_back({"shortcut load", 2 * k * dk, "2k*Delta^k"});
      rows.push_back({"layered width (K_l factor)", 2 * k * bp.ell * dk * (k * k * k + 3 * k),
                      "2k*l*Delta^k*(k^3+3k)"});
      rows.push_back({"treewidth of J", binom(bp.k + bp.t, bp.t) - 1, "binom(k+t,t)-1"});
      break;
    }
    case BoundClass::shortcut: {
      long long dd = std::max(1, bp.d);
      rows.push_back({"fine layered width", dd * bp.ell * (k * k + 3), "d*l*(k^2+3)"});
      rows.push_back({"layered width", dd * bp.ell * (k * k * k + 3 * k), "d*l*(k^3+3k)"});
      rows.push_back({"bag size of J", binom(bp.k + bp.t, bp.t), "binom(k+t,t)"});
      break;
    }
    case BoundClass::p_centered:
      rows.push_back({"p-centered colours", bp.ell * (p + 1) * bp.chi_h, "l*(p+1)*chi_p(H)"});
      rows.push_back({"chi_p(H) for treewidth t", binom(bp.p + bp.t, bp.t), "binom(p+t,t)"});
      break;
    case BoundClass::nonrepetitive:
      rows.push_back({"non-repetitive colours", bp.ell * ipow(4, bp.t + 1), "l*4^(t+1)"});
      rows.push_back({"queue-number", 3LL * bp.ell * ipow(2, bp.t) - (3LL * bp.ell + 1) / 2,
                      "3l*2^tw(H)-ceil(3l/2)"});
      break;
    case BoundClass::knn:
      rows.push_back({"maximum degree", 6 * k, "6k"});
      rows.push_back({"crossings per edge", 78 * k * k - 6 * k, "78k^2-6k"});
      rows.push_back({"treewidth of H", -1, "O(k^6)"});
      rows.push_back({"layered width", -1, "O(k^4)"});
      break;
    case BoundClass::draw:
      rows.push_back({"crossings per edge", 2 * k * (k + 1) * ipow(bp.delta, bp.k),
                      "2k(k+1)*Delta^k"});
      break;
  }
  return rows;
}

}  // namespace prodstruct
