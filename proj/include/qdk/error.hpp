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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdk {

/// Machine-readable failure categories. The CLI reports these verbatim as
/// `error_kind`.
enum class errc {
    not_prime,
    cap_exceeded,
    spec_mismatch,
    division_by_zero,
    not_a_subfield,
    both_zero,
    not_coprime,
    index_out_of_range,
    ambient_mismatch,
    not_invertible,
    wrong_dimension,
    dimension_mismatch,
    group_not_closed,
    bad_factorization,
    empty_ambient,
    not_coset_closed,
    bad_parameters,
    internal,
};

constexpr std::string_view to_string(errc e) noexcept {
    switch (e) {
        case errc::not_prime: return "NotPrime";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::spec_mismatch: return "SpecMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::not_a_subfield: return "NotASubfield";
        case errc::both_zero: return "BothZero";
        case errc::not_coprime: return "NotCoprime";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::ambient_mismatch: return "AmbientMismatch";
        case errc::not_invertible: return "NotInvertible";
        case errc::wrong_dimension: return "WrongDimension";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::group_not_closed: return "GroupNotClosed";
        case errc::bad_factorization: return "BadFactorization";
        case errc::empty_ambient: return "EmptyAmbient";
        case errc::not_coset_closed: return "NotCosetClosed";
        case errc::bad_parameters: return "BadParameters";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void raise(errc kind, const std::string& what) { throw error(kind, what); }

}  // namespace qdk
