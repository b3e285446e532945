#pragma once

#include "tate/matrix.hpp"

namespace tate {

// The split exact category of finite dimensional vector spaces over a fixed
// field, kept skeletal: an object is its dimension, a morphism is a matrix.
struct VectObject {
    int dim;
    const FieldInfo* field;
    friend bool operator==(const VectObject& a, const VectObject& b) {
        return a.dim == b.dim && a.field == b.field;
    }
};

// A kernel-cokernel pair presented by its two maps.
struct ShortExactSequence {
    FieldMatrix i;  // monic X -> Y
    FieldMatrix p;  // epic  Y -> Z
};

struct SubObject {
    VectObject obj;
    FieldMatrix embed;  // basis of the subspace, one column per dimension
};

struct QuotientObject {
    VectObject obj;
    FieldMatrix project;  // surjection with the subspace as kernel
};

struct Pushout {
    VectObject obj;
    FieldMatrix from_y;  // structure map Y -> P
    FieldMatrix from_z;  // structure map Z -> P (a monic when i is)
};

// ker(f) with its embedding; the basis is the canonical one read off the
// reduced echelon form of f.
SubObject kernel(const FieldMatrix& f);

// coker(f) realized as the projection onto the first-independent-coordinate
// complement of im(f).
QuotientObject cokernel(const FieldMatrix& f);

// Pushout of the admissible monic i : X -> Y along f : X -> Z, computed as
// (Y + Z)/(i, -f).
Pushout pushout_along_monic(const FieldMatrix& i, const FieldMatrix& f);

bool check_exact(const ShortExactSequence& s);

// A retraction of the monic in an exact sequence; every exact sequence in
// this category splits.
FieldMatrix splitting_retraction(const ShortExactSequence& s);

}  // namespace tate
