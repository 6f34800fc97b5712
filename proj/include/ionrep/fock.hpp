#ifndef IONREP_FOCK_HPP
#define IONREP_FOCK_HPP

#include <array>
#include <cstddef>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "ionrep/ion_register.hpp"

namespace ionrep {

using SparseOp = Eigen::SparseMatrix<cd>;

/*
 * Truncation of the optical (a), mechanical (b) and two ion-motion (c2, c3)
 * modes. Mode order in the tensor product is
 *   optical (x) mechanical (x) ion 2 (x) ion 3,
 * each ion being the composite level (x) motion with level g = 0, e = 1, so
 * the ion-local index is level * d_c + n.
 */
struct FockDims {
    int d_a = 4;
    int d_b = 4;
    int d_c = 2;

    int ion_dim() const { return 2 * d_c; }
    std::size_t total() const;
};

inline constexpr std::size_t kDefaultMaxDim = 4096;

// Throws DimensionError for truncations < 2 or a total above max_dim.
void validate(const FockDims& dims, std::size_t max_dim = kDefaultMaxDim);

struct FockOperator {
    FockDims dims;
    SparseOp matrix;

    FockOperator adjoint() const { return {dims, SparseOp(matrix.adjoint())}; }
};

// Operator alphabet on one truncated space.
struct ModeOperators {
    explicit ModeOperators(const FockDims& dims);

    FockDims dims;
    SparseOp identity;
    SparseOp a;         // optical annihilation
    SparseOp b;         // mechanical annihilation
    SparseOp c2, c3;    // ion vibrational annihilation
    SparseOp sm2, sm3;  // sigma_- = |g><e|
    SparseOp sz2, sz3;  // sigma_z = |e><e| - |g><g|
    SparseOp lower2, lower3;  // Sigma_- = c sigma_-
    SparseOp raise2, raise3;  // Sigma_+ = c^dag sigma_+
};

std::size_t fock_index(const FockDims& dims, int n_a, int n_b, int ion2, int ion3);

// Ion-local index of the encoded levels: G = |g,0> -> 0, E = |e,1> -> d_c + 1.
int ion_index(const FockDims& dims, IonLevel level);

// Indices of |0>_a |0>_b (x) {GE, EG, EE, GG} on ions (2,3).
std::array<std::size_t, 4> vacuum_phi_indices(const FockDims& dims);

// max |A - A^dag| entrywise.
double hermiticity_defect(const SparseOp& m);

double max_abs(const SparseOp& m);

// Keeps entries whose row and column both have at most d-2 quanta in the
// optical and mechanical modes, zeroing the rest. Operator identities that
// involve creation operators only hold on this interior block. Ion motion is
// not restricted: Sigma_+- keep it inside {|g,0>, |e,1>}.
SparseOp interior_block(const SparseOp& m, const FockDims& dims);

} // namespace ionrep

#endif // IONREP_FOCK_HPP
