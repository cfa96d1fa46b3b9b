// Integer homology of the mapping torus of a Dehn twist: exact Smith normal
// form over arbitrary-precision integers, the twist's action on first
// homology, and the documented homology groups of the total space.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pfh {

using BigInt = boost::multiprecision::cpp_int;

// Dense exact-integer matrix, row major.
struct IntegerMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<BigInt> entries;

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    BigInt& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const {
        return entries[r * cols + c];
    }

    static IntegerMatrix identity(std::size_t n);
    IntegerMatrix operator*(const IntegerMatrix& o) const;
    IntegerMatrix operator-(const IntegerMatrix& o) const;

    bool operator==(const IntegerMatrix&) const = default;
};

// Exact determinant (Bareiss fraction-free elimination). Square only.
BigInt determinant(const IntegerMatrix& m);

struct SmithResult {
    IntegerMatrix u, d, v;         // u * input * v = d, u and v unimodular
    std::vector<BigInt> factors;   // nonzero diagonal of d, d1 | d2 | ...
};

// Smith normal form with transform tracking; invariant factors are positive
// and in divisibility order.
SmithResult smith_normal_form(const IntegerMatrix& m);

struct AbelianGroup {
    int free_rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1, divisibility order

    std::string to_string() const;
    bool operator==(const AbelianGroup&) const = default;
};

// Cokernel of a matrix acting on Z^rows, by Smith normal form.
AbelianGroup cokernel(const IntegerMatrix& m);

// Action of the twist on H_1 of a genus-g surface in the symplectic basis
// (a1, b1, ..., ag, bg): the transvection b1 -> b1 + a1 (or, with
// along_dual, a1 -> a1 - b1, the twist along the dual curve). Requires g >= 1.
IntegerMatrix dehn_twist_action(int g, bool along_dual = false);

// H_1 of the mapping torus: Z (base circle) plus coker(1 - twist action).
// Free of rank 2g for the non-separating twist. Requires g >= 1.
AbelianGroup h1_mapping_torus(int g);

// Documented homology of the total space of the elementary fibration with
// fiber genus g; recorded constants, not recomputed.
struct LefschetzConstants {
    AbelianGroup h2_total;           // Z, generated by the fiber class
    AbelianGroup h2_total_rel_bdry;  // Z
    AbelianGroup h1_total;           // Z^(2g-1)
    std::string note;
};

LefschetzConstants lefschetz_constants(int g);

}  // namespace pfh
