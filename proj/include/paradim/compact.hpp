#pragma once

#include "paradim/exactmath.hpp"

namespace paradim {

struct CompactDims {
  long p;
  long f1;
  long f2;
  Integer total;
  Integer trace;
  Integer plus;
  Integer minus;
};

// Dimension of algebraic modular forms of weight (f1, f2) on the non-principal genus.
Integer dim_M_total(long p, long f1, long f2);
Rational dim_M_total_exact(long p, long f1, long f2);
// Trace of the Atkin-Lehner operator R(pi).
Integer trace_R(long p, long f1, long f2);
Rational trace_R_exact(long p, long f1, long f2);
CompactDims dim_M_signed(long p, long f1, long f2);

struct ClassType {
  Integer H;
  Integer T;
};
ClassType class_and_type(long p);

}  // namespace paradim
