#include "ionrep/fock.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "ionrep/errors.hpp"

namespace ionrep {
namespace {

SparseOp eye(int d) {
    SparseOp m(d, d);
    m.setIdentity();
    return m;
}

SparseOp annihilation(int d) {
    std::vector<Eigen::Triplet<cd>> t;
    for (int n = 1; n < d; ++n)
        t.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
    SparseOp m(d, d);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

SparseOp kron(const SparseOp& x, const SparseOp& y) {
    SparseOp out = Eigen::kroneckerProduct(x, y);
    out.makeCompressed();
    return out;
}

SparseOp kron4(const SparseOp& a, const SparseOp& b, const SparseOp& i2, const SparseOp& i3) {
    return kron(kron(kron(a, b), i2), i3);
}

} // namespace

std::size_t FockDims::total() const {
    return static_cast<std::size_t>(d_a) * d_b * ion_dim() * ion_dim();
}

void validate(const FockDims& dims, std::size_t max_dim) {
    if (dims.d_a < 2 || dims.d_b < 2 || dims.d_c < 2)
        throw DimensionError("every truncation must be at least 2");
    if (dims.total() > max_dim)
        throw DimensionError("Hilbert space dimension " + std::to_string(dims.total()) +
                             " exceeds the limit " + std::to_string(max_dim));
}

ModeOperators::ModeOperators(const FockDims& d) : dims(d) {
    validate(dims);
    const int ion = dims.ion_dim();
    const SparseOp ia = eye(dims.d_a), ib = eye(dims.d_b), ii = eye(ion);

    // Ion-local operators: level (2) (x) motion (d_c).
    const SparseOp motion = kron(eye(2), annihilation(dims.d_c));
    SparseOp lower_level(2, 2);
    lower_level.insert(0, 1) = 1.0;
    SparseOp z_level(2, 2);
    z_level.insert(0, 0) = -1.0;
    z_level.insert(1, 1) = 1.0;
    const SparseOp sm = kron(lower_level, eye(dims.d_c));
    const SparseOp sz = kron(z_level, eye(dims.d_c));
    const SparseOp lower = kron(lower_level, annihilation(dims.d_c));

    identity = eye(static_cast<int>(dims.total()));
    a = kron4(annihilation(dims.d_a), ib, ii, ii);
    b = kron4(ia, annihilation(dims.d_b), ii, ii);
    c2 = kron4(ia, ib, motion, ii);
    c3 = kron4(ia, ib, ii, motion);
    sm2 = kron4(ia, ib, sm, ii);
    sm3 = kron4(ia, ib, ii, sm);
    sz2 = kron4(ia, ib, sz, ii);
    sz3 = kron4(ia, ib, ii, sz);
    lower2 = kron4(ia, ib, lower, ii);
    lower3 = kron4(ia, ib, ii, lower);
    raise2 = lower2.adjoint();
    raise3 = lower3.adjoint();
}

std::size_t fock_index(const FockDims& dims, int n_a, int n_b, int ion2, int ion3) {
    const std::size_t ion = dims.ion_dim();
    return ((static_cast<std::size_t>(n_a) * dims.d_b + n_b) * ion + ion2) * ion + ion3;
}

int ion_index(const FockDims& dims, IonLevel level) {
    return level == IonLevel::G ? 0 : dims.d_c + 1;
}

std::array<std::size_t, 4> vacuum_phi_indices(const FockDims& dims) {
    const int g = ion_index(dims, IonLevel::G);
    const int e = ion_index(dims, IonLevel::E);
    return {fock_index(dims, 0, 0, g, e), fock_index(dims, 0, 0, e, g),
            fock_index(dims, 0, 0, e, e), fock_index(dims, 0, 0, g, g)};
}

double max_abs(const SparseOp& m) {
    double out = 0.0;
    for (int k = 0; k < m.outerSize(); ++k)
        for (SparseOp::InnerIterator it(m, k); it; ++it)
            out = std::max(out, std::abs(it.value()));
    return out;
}

double hermiticity_defect(const SparseOp& m) {
    const SparseOp diff = m - SparseOp(m.adjoint());
    return max_abs(diff);
}

SparseOp interior_block(const SparseOp& m, const FockDims& dims) {
    const std::size_t ion_block = static_cast<std::size_t>(dims.ion_dim()) * dims.ion_dim();
    auto interior = [&](Eigen::Index idx) {
        const std::size_t modes = static_cast<std::size_t>(idx) / ion_block;
        const int nb = static_cast<int>(modes % dims.d_b);
        const int na = static_cast<int>(modes / dims.d_b);
        return na <= dims.d_a - 2 && nb <= dims.d_b - 2;
    };
    SparseOp out = m;
    out.prune([&](Eigen::Index row, Eigen::Index col, const cd&) { return interior(row) && interior(col); });
    return out;
}

} // namespace ionrep
