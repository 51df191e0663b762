#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsv/errors.hpp"
#include "qsv/linalg.hpp"
#include "qsv/projector.hpp"
#include "qsv/proposition.hpp"

namespace qsv {

/// Pauli matrix for the given axis.
inline Matrix pauli(Axis axis) {
    const Scalar i = Scalar::i();
    switch (axis) {
    case Axis::x: return Matrix{{0, 1}, {1, 0}};
    case Axis::y: return Matrix{{0, -i}, {i, 0}};
    case Axis::z: return Matrix{{1, 0}, {0, -1}};
    }
    throw ShapeError("unknown axis");
}

/// Exact eigen-relation check: observable * candidate == eigenvalue * candidate.
inline bool eigencheck(const Matrix& observable, const StateVector& candidate, const Scalar& eigenvalue) {
    if (!observable.is_square()) throw ShapeError("eigencheck: observable must be square");
    if (observable.cols() != candidate.dim()) throw ShapeError("eigencheck: dimension mismatch");
    const Vector image = apply(observable, candidate);
    for (std::size_t k = 0; k < image.size(); ++k)
        if (image[k] != eigenvalue * candidate[k]) return false;
    return true;
}

/// Unnormalized spin-1/2 eigenvectors along one axis.
struct SpinBasis {
    Axis axis;
    StateVector up;
    StateVector down;

    const StateVector& operator[](Direction d) const { return d == Direction::up ? up : down; }
};

inline SpinBasis spin_basis(Axis axis) {
    const Scalar i = Scalar::i();
    SpinBasis basis = [&]() -> SpinBasis {
        switch (axis) {
        case Axis::x: return {axis, StateVector{1, 1}, StateVector{1, -1}};
        case Axis::y: return {axis, StateVector{1, i}, StateVector{1, -i}};
        case Axis::z: return {axis, StateVector{1, 0}, StateVector{0, 1}};
        }
        throw ShapeError("unknown axis");
    }();
    const Matrix sigma = pauli(axis);
    if (!eigencheck(sigma, basis.up, 1) || !eigencheck(sigma, basis.down, -1) ||
        !inner_product(basis.up.entries(), basis.down.entries()).is_zero())
        throw InvalidStateError("spin basis failed its eigenvector check");
    return basis;
}

/// |v><v| / <v,v>, the rank-one projector onto the ray of v.
inline Matrix ray_projector(const StateVector& v) {
    const Scalar norm = inner_product(v.entries(), v.entries());
    return norm.inverse() * outer_product(v.entries(), v.entries());
}

/// Single-particle spin projector on C^2.
inline Matrix spin_projector(Axis axis, Direction d) { return ray_projector(spin_basis(axis)[d]); }

/// Single-particle statement embedded in the pair space: P ⊗ 1 for A, 1 ⊗ P for B.
inline Projector atom_projector(const Atom& atom) {
    const Matrix single = spin_projector(atom.axis, atom.direction);
    const Matrix id = Matrix::identity(2);
    return Projector(atom.particle == Particle::A ? tensor_product(single, id) : tensor_product(id, single));
}

/// Projector for "A is `a` and B is `b` along `axis`": |a><a| ⊗ |b><b|.
inline Projector pair_projector(Axis axis, Direction a, Direction b) {
    return Projector(tensor_product(spin_projector(axis, a), spin_projector(axis, b)));
}

/// Atom -> projector map for all twelve atoms.
inline ProjectorContext atom_context() {
    ProjectorContext out;
    for (const auto& a : all_atoms()) out.emplace(a, atom_projector(a));
    return out;
}

/// up ⊗ down - down ⊗ up in the given axis basis; the same ray for every axis.
inline StateVector singlet(Axis axis) {
    const SpinBasis b = spin_basis(axis);
    const Vector ud = tensor_product(std::span<const Scalar>(b.up.entries()), std::span<const Scalar>(b.down.entries()));
    const Vector du = tensor_product(std::span<const Scalar>(b.down.entries()), std::span<const Scalar>(b.up.entries()));
    Vector out(ud.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = ud[k] - du[k];
    return StateVector(std::move(out));
}

/// Pair state plus the ordered list of verifications applied to it.
struct TwoParticleSystem {
    StateVector state;
    std::vector<Atom> history;
};

inline TwoParticleSystem prepare(const StateVector& state) {
    if (state.dim() != 4) throw ShapeError("two-particle state must have dimension 4");
    return {state, {}};
}

/// Verifies `atom` as true (and its flip as false) by applying the atom's
/// projector to the state, unnormalized.
inline TwoParticleSystem verify(const TwoParticleSystem& system, const Atom& atom) {
    Vector post = apply(atom_projector(atom).matrix(), system.state);
    if (is_zero(post))
        throw ImpossibleOutcomeError("verifying " + to_string(atom) + " is impossible in state " +
                                     to_string(system.state));
    TwoParticleSystem out{StateVector(std::move(post)), system.history};
    out.history.push_back(atom);
    return out;
}

struct ValuationRow {
    Proposition proposition;
    TruthValueSet super;     // supervaluation: state membership in ran / ker
    TruthValueSet classical; // values across all bivalent assignments consistent with the premises
};

struct FixtureSummary {
    std::size_t matched = 0;
    std::size_t mismatched = 0;
    std::vector<std::string> mismatched_labels;
};

/// One end-to-end run: singlet preparation, A's verification, and the
/// valuations and populations under both semantics.
struct ScenarioReport {
    Axis axis;
    Atom verified;
    StateVector prepared;
    StateVector post;
    std::vector<ValuationRow> before;
    std::vector<ValuationRow> after;
    std::vector<Atom> query;
    Population super_population;
    Population classical_population;
    std::optional<FixtureSummary> fixtures;
    std::string note;
};

/// Bivalent premises of the singlet: Diff_j true and Same_j false on every axis.
inline std::vector<Constraint> singlet_constraints() {
    std::vector<Constraint> out;
    for (auto j : kAxes) {
        out.emplace_back(diff(j), 1);
        out.emplace_back(same(j), 0);
    }
    return out;
}

inline constexpr std::string_view kCrossRunNote =
    "populations are per run: a verification of another atom is a separate run and is not aggregated here";

inline ScenarioReport run_epr(Axis axis_verify, std::span<const Atom> joint_query) {
    const ProjectorContext context = atom_context();
    const std::vector<Atom> atoms = all_atoms();

    const TwoParticleSystem prepared = prepare(singlet(axis_verify));
    const Atom verified = up(Particle::A, axis_verify);
    const TwoParticleSystem measured = verify(prepared, verified);

    std::vector<Constraint> constraints = singlet_constraints();
    const auto before_solutions = classical_solutions(constraints, atoms);
    constraints.emplace_back(verified, 1);
    const auto after_solutions = classical_solutions(constraints, atoms);

    const auto row = [&](const Proposition& p, const StateVector& state, const std::vector<Assignment>& solutions) {
        return ValuationRow{p, valuate(state, compile(p, context)), classical_value_set(p, solutions)};
    };

    std::vector<ValuationRow> before;
    for (auto j : kAxes) {
        for (const auto& p : {diff(j), same(j)}) before.push_back(row(p, prepared.state, before_solutions));
        for (auto a : {Direction::up, Direction::down})
            for (auto b : {Direction::up, Direction::down})
                before.push_back(row(Atom{Particle::A, j, a} & Atom{Particle::B, j, b}, prepared.state,
                                     before_solutions));
    }

    std::vector<ValuationRow> after;
    for (const auto& a : atoms) after.push_back(row(a, measured.state, after_solutions));
    for (auto j : kAxes)
        for (const auto& p : {diff(j), same(j)}) after.push_back(row(p, measured.state, after_solutions));

    std::vector<std::string> labels;
    std::vector<TruthValueSet> super_components;
    std::vector<TruthValueSet> classical_components;
    for (const auto& q : joint_query) {
        labels.push_back(to_string(q));
        super_components.push_back(valuate(measured.state, atom_projector(q)));
        classical_components.push_back(classical_value_set(q, after_solutions));
    }

    return ScenarioReport{axis_verify,
                          verified,
                          prepared.state,
                          measured.state,
                          std::move(before),
                          std::move(after),
                          {joint_query.begin(), joint_query.end()},
                          population(super_components, labels),
                          population(classical_components, labels),
                          std::nullopt,
                          std::string(kCrossRunNote)};
}

} // namespace qsv
