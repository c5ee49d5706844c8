#pragma once

#include <cmath>

#include "tcshift/measure.hpp"
#include "tcshift/tc_shift.hpp"

namespace fixtures {

using tcshift::AtomicMeasure1D;

inline AtomicMeasure1D delta(double x) { return AtomicMeasure1D::dirac(x); }
inline AtomicMeasure1D half01() { return {{0.0, 0.5}, {1.0, 0.5}}; }

/// (U+, U+): every measure delta_1, a = 1.
inline tcshift::TCInstance trivial(int depth = tcshift::kDefaultDepth) {
  return tcshift::TCInstance::build(delta(1), delta(1), delta(1), delta(1), 1.0, depth);
}

inline tcshift::TCInstance f1(int depth = tcshift::kDefaultDepth) {
  return tcshift::TCInstance::build(half01(), half01(), delta(1), delta(1), std::sqrt(0.5), depth);
}

inline tcshift::TCInstance n1(int depth = tcshift::kDefaultDepth) {
  return tcshift::TCInstance::build(AtomicMeasure1D{{0.0, 0.1}, {1.0, 0.9}}, half01(), delta(1),
                                    delta(1), std::sqrt(0.5), depth);
}

inline tcshift::FlatInstance flat_f1() {
  tcshift::FlatInstance f;
  f.p = f.q = 0.5;
  f.l = f.m = 0.5;
  f.b = 1.0;
  f.a = std::sqrt(0.5);
  return f;
}

inline tcshift::FlatInstance flat_n1() {
  auto f = flat_f1();
  f.p = 0.1;
  f.q = 0.9;
  return f;
}

}  // namespace fixtures
