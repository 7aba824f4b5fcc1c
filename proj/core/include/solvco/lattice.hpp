#ifndef SOLVCO_LATTICE_HPP
#define SOLVCO_LATTICE_HPP

#include <optional>
#include <string>
#include <vector>

#include "solvco/cdga.hpp"

namespace solvco {

// Semidirect product R^n x_phi R^m given by commuting action derivations,
// with lattice generator coordinates in the R^n factor.
struct SolvmanifoldSpec {
    size_t abelian_dim = 0;                 // n
    size_t fiber_dim = 0;                   // m
    std::vector<Matrix> derivations;        // n commuting m x m matrices
    std::vector<Vec> lattice_generators;    // coordinates in the R^n factor
    ParamTable params;
    std::vector<std::string> base_names;    // optional; defaults t1..tn
    std::vector<std::string> fiber_names;   // optional; defaults x1..xm
};

// Structure constants of the semidirect sum: [e_i, f_j] = D_i f_j.
// Throws NonCommutingAction.
LieAlgebra assemble_algebra(const SolvmanifoldSpec& spec);

// Value of a weight on each lattice generator, split as re + pi_coeff*pi*i.
struct CharacterValue {
    struct PerGenerator {
        ScalarValue re;
        ScalarValue pi_coeff;
    };
    std::vector<PerGenerator> on_generators;
};

// Throws UnsupportedTranscendence when a value does not have the
// re + (pi-free)*pi*i shape.
CharacterValue character_on_lattice(const WeightVector& lambda, const SolvmanifoldSpec& spec);

// exp(lambda(gamma)) = 1 for every generator.  Throws
// UndecidableWithParameters when the pi coefficient carries parameters.
bool is_trivial_on_lattice(const CharacterValue& cv);

enum class Triviality { Trivial, NonTrivial };

// Robust decision on the weight itself: a decidably nonzero real part on
// any generator settles non-triviality before the representation-sensitive
// imaginary part is inspected.
Triviality trivial_on_lattice(const WeightVector& lambda, const SolvmanifoldSpec& spec);

struct CriterionReport {
    bool passes = false;
    // The offending index subset of the diagonal basis, when failing.
    std::optional<std::vector<size_t>> offending_subset;
    std::optional<std::string> offending_weight;
    // For the lattice criterion: both Betti computations, cross-checked.
    std::vector<size_t> betti_invariant_subcomplex;
    std::vector<size_t> betti_ce;
};

// Every nonzero subset-sum character must stay nontrivial on the lattice;
// on success the untwisted Betti numbers equal the plain CE Betti numbers.
CriterionReport criterion_C(SliceCache& cache, const SolvmanifoldSpec& spec);

// No nonzero subset-sum character may be unitary (vanishing real part);
// lattice-independent.
CriterionReport criterion_D(SliceCache& cache);

// Betti numbers of the compact quotient: cohomology of the sub-DGA of the
// minimal model spanned by monomials whose character restricts trivially.
std::vector<size_t> untwisted_betti(SliceCache& cache, const SolvmanifoldSpec& spec);

} // namespace solvco

#endif
