#pragma once

#include "paradim/exactmath.hpp"

namespace paradim {

enum class ALSign { plus, minus };

// dim S_k(SL2(Z)); 0 for odd k and k = 0.
long dim_cusp_level1(long k);
// dim M_k(SL2(Z)), Eisenstein series included.
long dim_modular_level1(long k);
// Newforms of weight k on Gamma0(p); k even >= 2.
long dim_new_gamma0(long p, long k);
// dim(+) - dim(-) for the Atkin-Lehner involution on newforms.
Rational dim_new_gamma0_difference(long p, long k);
long dim_new_gamma0_signed(long p, long k, ALSign sign);

}  // namespace paradim
