/**************************************************************************
 * Copyright 2026 The qdk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <string>
#include <vector>

#include "run_binary.hpp"

namespace qdk::testing {

struct Case {
    std::string args;
    std::string schema;
    std::vector<std::string> keys;  // required payload keys
};

inline std::vector<Case> documented_commands() {
    const std::string d3 = fixture("d3_gl23.txt"), planes = fixture("f2_3_planes.txt");
    return {
        {"field create --p 2 --m 3", "qdk.field.create.v1", {"p", "m", "q", "modulus", "primitive", "primitive_order"}},
        {"field inspect --p 3 --m 2 --element 1,1 --subfield 1 --frobenius 1", "qdk.field.inspect.v1",
         {"element", "order", "inverse", "frobenius", "minimal_polynomial"}},
        {"poly cosets --n 7 --q 2", "qdk.poly.cosets.v1", {"n", "q", "cosets"}},
        {"poly factor-xn1 --n 15 --q 2", "qdk.poly.factor-xn1.v1", {"n", "q", "factors"}},
        {"poly count-split --n 2 --q 3", "qdk.poly.count-split.v1",
         {"formula", "formula_is_integer", "binomial", "monic_distinct_roots", "affine_orbits"}},
        {"gaussian --n 4 --k 2 --q 2", "qdk.gaussian.v1", {"value"}},
        {"grassmann enumerate --n 4 --k 2 --q 2", "qdk.grassmann.enumerate.v1", {"n", "k", "q", "count", "subspaces"}},
        {"group closure --group dihedral:5,3", "qdk.group.closure.v1", {"n", "q", "order", "generators", "elements"}},
        {"group closure --group-file " + d3 + " --q 3 --sympower 2", "qdk.group.closure.v1", {"order", "elements"}},
        {"group singer --p 2 --n 4", "qdk.group.singer.v1", {"matrix", "order"}},
        {"group sympower --q 3 --matrix '0 2;1 2' --deg 2", "qdk.group.sympower.v1", {"deg", "matrix"}},
        {"group orbit --group singer:2,1,3 --subspace '1 0 0'", "qdk.group.orbit.v1",
         {"subspace", "group_order", "orbit_size", "orbit"}},
        {"group invariant --group-file " + d3 + " --q 3 --sympower 2 --k 2", "qdk.group.invariant.v1",
         {"n", "k", "count", "subspaces"}},
        {"design verify --blocks all --n 3 --k 2 --q 2 --t 1", "qdk.design.verify.v1",
         {"t", "lambda_min", "lambda_max", "lambda", "is_design", "num_t_subspaces", "histogram", "num_blocks"}},
        {"design verify --blocks-file " + planes + " --n 3 --k 2 --q 2 --t 1", "qdk.design.verify.v1",
         {"lambda", "is_design", "histogram"}},
        {"design profile --blocks all --n 4 --k 2 --q 2", "qdk.design.profile.v1", {"profile"}},
        {"design splitting --p 2 --r 2 --s 2 --t 1", "qdk.design.splitting.v1",
         {"S", "N", "gl_order", "quotient_check", "S_conjugate", "witnesses", "report"}},
        {"design pg-lines --m 4", "qdk.design.pg-lines.v1", {"m", "v", "b", "pair_min", "pair_max", "is_steiner"}},
        {"design triangle --group-file " + d3 + " --q 3 --sympower 2 --k 1 --t 1", "qdk.design.triangle.v1",
         {"n", "group_order", "report"}},
        {"code cyclic --n 7 --q 2 --roots 1,2,4 --min-distance", "qdk.code.cyclic.v1",
         {"n", "k", "d", "mds", "generator_poly", "root_exponents"}},
        {"cyclic --n 7 --q 2 --roots 0", "qdk.code.cyclic.v1", {"n", "k", "generator_poly", "root_exponents"}},
        {"code rs --q 4 --k 2 --len 5 --min-distance", "qdk.code.rs.v1", {"n", "k", "generator_matrix", "d", "mds"}},
        {"code min-distance --q 2 --n 3 --matrix '1 1 0;0 1 1'", "qdk.code.min-distance.v1", {"n", "k", "d", "mds"}},
        {"code arc --deg 2 --q 3 --r 3", "qdk.code.arc.v1", {"points", "is_arc"}},
        {"code count-cyclic --n 15 --q 2", "qdk.code.count-cyclic.v1", {"oracle", "num_cosets", "formula_values"}},
    };
}

}  // namespace qdk::testing
