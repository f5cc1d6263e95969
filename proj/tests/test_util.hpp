#pragma once

#include <string>
#include <vector>

#include <doctest.h>

#include "monoendo/char_param.hpp"
#include "monoendo/laurent.hpp"

namespace testutil {

inline monoendo::CharParam param(const monoendo::DatumPtr& d, std::vector<std::string> v) {
  return monoendo::CharParam::parse(d, v);
}

// Every parameter with all values in (1/N)Z/Z.
inline std::vector<monoendo::CharParam> all_params(const monoendo::DatumPtr& d, int n) {
  std::vector<monoendo::CharParam> out;
  const int r = d->rank();
  std::vector<int> digits(r, 0);
  while (true) {
    monoendo::RatVec v;
    for (int x : digits) v.emplace_back(x, n);
    out.emplace_back(d, v);
    int k = 0;
    while (k < r && ++digits[k] == n) digits[k++] = 0;
    if (k == r) break;
  }
  return out;
}

// One representative per W-orbit among all_params(d, n).
inline std::vector<monoendo::CharParam> orbit_reps(const monoendo::DatumPtr& d, int n) {
  std::vector<monoendo::CharParam> reps;
  std::vector<monoendo::OrbitData> seen;
  for (const auto& c : all_params(d, n)) {
    bool found = false;
    for (const auto& o : seen)
      if (o.contains(c)) found = true;
    if (found) continue;
    reps.push_back(c);
    seen.push_back(monoendo::orbit(c));
  }
  return reps;
}

}  // namespace testutil

namespace doctest {
template <>
struct StringMaker<monoendo::LaurentPoly> {
  static String convert(const monoendo::LaurentPoly& p) { return p.to_string().c_str(); }
};
}  // namespace doctest
