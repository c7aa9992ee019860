#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetcalc {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input data that violates a documented schema or shape requirement.
struct MalformedInput : Error {
    using Error::Error;
};

/// Two objects over incompatible fields were combined.
struct FieldMismatch : Error {
    using Error::Error;
};

/// Shapes do not line up (matrix/vector/module dimensions).
struct DimensionMismatch : Error {
    using Error::Error;
};

/// An operation that is only defined over a commutative base algebra was
/// invoked on a noncommutative one.
struct NoncommutativeBase : Error {
    using Error::Error;
};

/// An operator that was required to satisfy the first-order condition does not.
struct NotFirstOrder : Error {
    using Error::Error;
};

/// A supplied derivation pair fails one of its structural invariants.
struct InvalidWitness : Error {
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct InternalCheck : Error {
    using Error::Error;
};

/// Structure constants that are not associative. Indices identify the first
/// basis triple (e_i e_j) e_k != e_i (e_j e_k).
struct AssociativityViolation : Error {
    std::size_t i, j, k;
    AssociativityViolation(std::size_t i_, std::size_t j_, std::size_t k_)
        : Error("associativity fails at basis triple (" + std::to_string(i_) + ", " +
                std::to_string(j_) + ", " + std::to_string(k_) + ")"),
          i(i_), j(j_), k(k_) {}
};

/// The designated unit vector fails a unit law against basis element i.
struct UnitViolation : Error {
    std::size_t i;
    explicit UnitViolation(std::size_t i_)
        : Error("unit law fails against basis element " + std::to_string(i_)), i(i_) {}
};

/// A module action axiom fails on a basis triple.
struct AxiomViolation : Error {
    std::string axiom;
    std::size_t i, j, k;
    AxiomViolation(std::string axiom_, std::size_t i_, std::size_t j_, std::size_t k_)
        : Error("module axiom '" + axiom_ + "' fails at basis triple (" + std::to_string(i_) +
                ", " + std::to_string(j_) + ", " + std::to_string(k_) + ")"),
          axiom(std::move(axiom_)), i(i_), j(j_), k(k_) {}
};

/// A module that was required to be central has ap != pa.
struct CentralityViolation : Error {
    std::size_t a, p;
    CentralityViolation(std::size_t a_, std::size_t p_)
        : Error("central module required but a p != p a at basis pair (" + std::to_string(a_) +
                ", " + std::to_string(p_) + ")"),
          a(a_), p(p_) {}
};

}  // namespace jetcalc
