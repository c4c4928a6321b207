#pragma once

#include <map>
#include <string>

#include "paradim/exactmath.hpp"

namespace paradim {

// Generating function of dim S_{k,j}(Sp(2,Z)) in k for j in {0, 2, 4}.
const RationalGF& level1_series(long j);

// dim S_{k,j}(Sp(2,Z)); j in {0, 2, 4} or a registered table.
Integer dim_cusp_sp4(long k, long j);

// Supplies values for j >= 6; each j may be registered once.
void register_level1_table(long j, const std::map<long, Integer>& dims);
// Reads CSV rows "j,k,dim" and registers one table per j.
void register_level1_csv(const std::string& csv_text);

}  // namespace paradim
