#include "ionrep/effham.hpp"

#include <cmath>
#include <string>

#include "ionrep/errors.hpp"

namespace ionrep {
namespace {

constexpr cd kI{0.0, 1.0};

bool pump_pair(const HarmonicTerm& x, const HarmonicTerm& y) {
    return x.kind == TermKind::Pump && y.kind == TermKind::Pump;
}

SparseOp commutator_dag(const HarmonicTerm& x, const HarmonicTerm& y) {
    const SparseOp xd = x.h.matrix.adjoint();
    return SparseOp(xd * y.h.matrix) - SparseOp(y.h.matrix * xd);
}

void check_terms(const std::vector<HarmonicTerm>& terms, const FrequencySet& freqs) {
    if (terms.size() != freqs.omega.size())
        throw Error("expected one harmonic term per derived frequency");
    for (std::size_t n = 0; n < terms.size(); ++n)
        if (std::abs(terms[n].omega - freqs.omega[n]) > 1e-12 * std::max(1.0, freqs.omega[n]))
            throw Error("harmonic term " + std::to_string(n + 1) + " frequency does not match");
}

} // namespace

std::vector<HarmonicTerm> harmonic_terms(const ModelParams& p, const FockDims& dims) {
    const FrequencySet f = derived_frequencies(p);
    const ModeOperators ops(dims);
    const SparseOp n_a = ops.a.adjoint() * ops.a;

    std::vector<HarmonicTerm> terms(4);
    terms[0] = {{dims, -p.G * SparseOp(n_a * ops.b)}, f.omega[0], TermKind::Optomechanical, "-G a+a b"};
    terms[1] = {{dims, (kI * p.g2) * SparseOp(ops.a * ops.raise2)}, f.omega[1], TermKind::IonField,
                "i g2 a S+(2)"};
    terms[2] = {{dims, (kI * p.g3) * SparseOp(ops.a * ops.raise3)}, f.omega[2], TermKind::IonField,
                "i g3 a S+(3)"};
    terms[3] = {{dims, (-kI * p.E_P) * ops.a}, f.omega[3], TermKind::Pump, "-i E_P a"};
    for (auto& t : terms)
        t.h.matrix.prune(cd{0.0});
    return terms;
}

FockOperator reassemble(const std::vector<HarmonicTerm>& terms, double t) {
    if (terms.empty())
        throw Error("no harmonic terms");
    const FockDims dims = terms.front().h.dims;
    SparseOp sum(static_cast<Eigen::Index>(dims.total()), static_cast<Eigen::Index>(dims.total()));
    for (const auto& term : terms) {
        const cd ph = std::exp(-kI * (term.omega * t));
        sum += ph * term.h.matrix + std::conj(ph) * SparseOp(term.h.matrix.adjoint());
    }
    return {dims, sum};
}

FockOperator interaction_picture(const FockOperator& h0, const FockOperator& h1, double t) {
    const SparseOp& d = h0.matrix;
    for (int k = 0; k < d.outerSize(); ++k)
        for (SparseOp::InnerIterator it(d, k); it; ++it)
            if (it.row() != it.col() && it.value() != cd{0.0})
                throw Error("interaction_picture requires a diagonal free Hamiltonian");

    // exp(i H0 t) is the diagonal of phases e^{i E_k t}.
    const Eigen::VectorXcd phases = (kI * t * d.diagonal()).array().exp();
    SparseOp out = h1.matrix;
    for (int k = 0; k < out.outerSize(); ++k)
        for (SparseOp::InnerIterator it(out, k); it; ++it)
            it.valueRef() *= phases[it.row()] * std::conj(phases[it.col()]);
    return {h1.dims, out};
}

FockOperator effective_hamiltonian(const std::vector<HarmonicTerm>& terms, const FrequencySet& freqs,
                                   double t) {
    check_terms(terms, freqs);
    const FockDims dims = terms.front().h.dims;
    SparseOp sum(static_cast<Eigen::Index>(dims.total()), static_cast<Eigen::Index>(dims.total()));
    for (std::size_t m = 0; m < terms.size(); ++m) {
        for (std::size_t n = 0; n < terms.size(); ++n) {
            if (pump_pair(terms[m], terms[n]))
                continue;
            const cd coeff = std::exp(kI * ((terms[m].omega - terms[n].omega) * t)) / freqs.omega_ij[m][n];
            sum += coeff * commutator_dag(terms[m], terms[n]);
        }
    }
    sum.prune(cd{0.0});
    return {dims, sum};
}

std::vector<CommutatorEntry> commutator_inventory(const std::vector<HarmonicTerm>& terms,
                                                  const FrequencySet& freqs) {
    check_terms(terms, freqs);
    std::vector<CommutatorEntry> out;
    for (std::size_t m = 0; m < terms.size(); ++m) {
        for (std::size_t n = 0; n < terms.size(); ++n) {
            CommutatorEntry e;
            e.m = static_cast<int>(m) + 1;
            e.n = static_cast<int>(n) + 1;
            e.inverse_mean = 1.0 / freqs.omega_ij[m][n];
            e.beat = terms[m].omega - terms[n].omega;
            e.norm = max_abs(commutator_dag(terms[m], terms[n]));
            e.dropped = pump_pair(terms[m], terms[n]);
            out.push_back(e);
        }
    }
    return out;
}

Eigen::Matrix4cd vacuum_block(const FockOperator& h_eff) {
    const FockDims& dims = h_eff.dims;
    if (dims.d_a < 2 || dims.d_b < 2)
        throw DimensionError("vacuum_block needs d_a, d_b >= 2");
    if (h_eff.matrix.rows() != static_cast<Eigen::Index>(dims.total()) ||
        h_eff.matrix.cols() != static_cast<Eigen::Index>(dims.total()))
        throw DimensionError("operator size does not match its declared dimensions");
    const auto idx = vacuum_phi_indices(dims);
    Eigen::Matrix4cd block;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            block(r, c) = h_eff.matrix.coeff(static_cast<Eigen::Index>(idx[r]), static_cast<Eigen::Index>(idx[c]));
    return block;
}

} // namespace ionrep
