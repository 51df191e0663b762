#pragma once

#include <cstddef>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qsv/epr.hpp"
#include "qsv/errors.hpp"
#include "qsv/linalg.hpp"
#include "qsv/projector.hpp"
#include "qsv/subspace.hpp"

namespace qsv {

/// How a printed object is compared against its derivation.
enum class FixtureKind {
    Matrix, // entry-wise exact equality
    Vector, // entry-wise exact equality
    Ray,    // equality up to a nonzero scalar
    Range,  // canonical subspace equality
    Chain,  // printed inclusion chain a <= b <= c of ranges
};

inline std::string to_string(FixtureKind k) {
    switch (k) {
    case FixtureKind::Matrix: return "matrix";
    case FixtureKind::Vector: return "vector";
    case FixtureKind::Ray: return "ray";
    case FixtureKind::Range: return "range";
    case FixtureKind::Chain: return "chain";
    }
    return {};
}

inline FixtureKind parse_fixture_kind(std::string_view s) {
    if (s == "matrix") return FixtureKind::Matrix;
    if (s == "vector") return FixtureKind::Vector;
    if (s == "ray") return FixtureKind::Ray;
    if (s == "range") return FixtureKind::Range;
    if (s == "chain") return FixtureKind::Chain;
    throw ParseError("unknown fixture kind '" + std::string(s) + "'");
}

/// A published matrix, vector or range, transcribed verbatim and keyed by
/// its display label.
struct PrintedFixture {
    std::string label;
    FixtureKind kind;
    std::string description;
    std::optional<Matrix> printed_matrix;
    std::optional<Vector> printed_vector;
    std::vector<Subspace> printed_ranges; // one entry, or several for a chain
};

namespace detail {

inline Vector json_vector(const nlohmann::json& row) {
    Vector out;
    for (const auto& entry : row) out.push_back(parse_scalar(entry.get<std::string>()));
    return out;
}

inline Subspace json_range(const nlohmann::json& basis, std::size_t ambient) {
    std::vector<Vector> rows;
    for (const auto& row : basis) rows.push_back(json_vector(row));
    return Subspace::span(ambient, std::span<const Vector>(rows));
}

} // namespace detail

/// Parses the fixture data file (format version 1).
inline std::vector<PrintedFixture> load_fixtures(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("fixture file: ") + e.what());
    }
    if (doc.value("version", 0) != 1) throw ParseError("fixture file: unsupported version");

    std::vector<PrintedFixture> out;
    try {
        for (const auto& f : doc.at("fixtures")) {
            PrintedFixture fixture{f.at("label").get<std::string>(),
                                   parse_fixture_kind(f.at("kind").get<std::string>()),
                                   f.value("description", std::string{}),
                                   std::nullopt,
                                   std::nullopt,
                                   {}};
            const std::size_t ambient = f.value("ambient", std::size_t{4});
            switch (fixture.kind) {
            case FixtureKind::Matrix: {
                std::vector<Vector> rows;
                for (const auto& row : f.at("rows")) rows.push_back(detail::json_vector(row));
                const Scalar scale = parse_scalar(f.value("scale", std::string("1")));
                fixture.printed_matrix = scale * Matrix::from_rows(rows);
                break;
            }
            case FixtureKind::Vector:
            case FixtureKind::Ray:
                fixture.printed_vector = detail::json_vector(f.at("vector"));
                break;
            case FixtureKind::Range:
                fixture.printed_ranges.push_back(detail::json_range(f.at("basis"), ambient));
                break;
            case FixtureKind::Chain:
                for (const auto& basis : f.at("chain")) fixture.printed_ranges.push_back(detail::json_range(basis, ambient));
                break;
            }
            out.push_back(std::move(fixture));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("fixture file: ") + e.what());
    }
    return out;
}

inline std::vector<PrintedFixture> load_fixtures_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open fixture file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_fixtures(buffer.str());
}

/// The object a fixture label refers to, recomputed from spin eigenvectors,
/// outer and tensor products, and sums.
struct DerivedObject {
    std::optional<Matrix> matrix;
    std::optional<StateVector> vector;
    std::vector<Subspace> ranges;
};

namespace detail {

inline Matrix diff_matrix(Axis j) {
    return pair_projector(j, Direction::up, Direction::down).matrix() +
           pair_projector(j, Direction::down, Direction::up).matrix();
}

inline Subspace diff_range(Axis j) { return Subspace::column_space(diff_matrix(j)); }

inline StateVector product_ket(Axis j, Direction a, Direction b) {
    const SpinBasis basis = spin_basis(j);
    return tensor_product(basis[a], basis[b]);
}

inline const std::map<std::string, std::function<DerivedObject()>, std::less<>>& derivations() {
    using D = Direction;
    static const std::map<std::string, std::function<DerivedObject()>, std::less<>> table = {
        {"eq22.zz", [] { return DerivedObject{tensor_product(pauli(Axis::z), pauli(Axis::z)), {}, {}}; }},
        {"eq22.xx", [] { return DerivedObject{tensor_product(pauli(Axis::x), pauli(Axis::x)), {}, {}}; }},
        {"eq22.yy", [] { return DerivedObject{tensor_product(pauli(Axis::y), pauli(Axis::y)), {}, {}}; }},
        {"eq23", [] { return DerivedObject{{}, {}, {range_of(pair_projector(Axis::z, D::up, D::down))}}; }},
        {"eq24", [] { return DerivedObject{{}, {}, {range_of(pair_projector(Axis::z, D::down, D::up))}}; }},
        {"eq25", [] { return DerivedObject{pair_projector(Axis::z, D::up, D::down).matrix(), {}, {}}; }},
        {"eq26", [] { return DerivedObject{pair_projector(Axis::z, D::down, D::up).matrix(), {}, {}}; }},
        {"eq28", [] { return DerivedObject{{}, product_ket(Axis::z, D::up, D::down), {}}; }},
        {"eq29", [] { return DerivedObject{{}, product_ket(Axis::z, D::down, D::up), {}}; }},
        {"eq30", [] { return DerivedObject{{}, singlet(Axis::z), {}}; }},
        {"eq31.matrix", [] { return DerivedObject{diff_matrix(Axis::z), {}, {}}; }},
        {"eq31.range", [] { return DerivedObject{{}, {}, {diff_range(Axis::z)}}; }},
        {"eq33.state", [] { return DerivedObject{{}, singlet(Axis::x), {}}; }},
        {"eq33.range", [] { return DerivedObject{{}, {}, {diff_range(Axis::x)}}; }},
        {"eq34.summand1", [] { return DerivedObject{pair_projector(Axis::x, D::up, D::down).matrix(), {}, {}}; }},
        {"eq34.summand2", [] { return DerivedObject{pair_projector(Axis::x, D::down, D::up).matrix(), {}, {}}; }},
        {"eq34.final", [] { return DerivedObject{diff_matrix(Axis::x), {}, {}}; }},
        {"eq35.updown", [] { return DerivedObject{{}, {}, {range_of(pair_projector(Axis::x, D::up, D::down))}}; }},
        {"eq35.downup", [] { return DerivedObject{{}, {}, {range_of(pair_projector(Axis::x, D::down, D::up))}}; }},
        {"eq36.state", [] { return DerivedObject{{}, singlet(Axis::y), {}}; }},
        {"eq36.range", [] { return DerivedObject{{}, {}, {diff_range(Axis::y)}}; }},
        {"eq37.summand1", [] { return DerivedObject{pair_projector(Axis::y, D::up, D::down).matrix(), {}, {}}; }},
        {"eq37.summand2", [] { return DerivedObject{pair_projector(Axis::y, D::down, D::up).matrix(), {}, {}}; }},
        {"eq37.final", [] { return DerivedObject{diff_matrix(Axis::y), {}, {}}; }},
        {"eq38.updown", [] { return DerivedObject{{}, {}, {range_of(pair_projector(Axis::y, D::up, D::down))}}; }},
        {"eq38.downup", [] { return DerivedObject{{}, {}, {range_of(pair_projector(Axis::y, D::down, D::up))}}; }},
        {"eq39.chain",
         [] { return DerivedObject{{}, {}, {diff_range(Axis::z), diff_range(Axis::x), diff_range(Axis::y)}}; }},
    };
    return table;
}

} // namespace detail

/// Recomputes the object behind a fixture label; nullopt for unknown labels.
inline std::optional<DerivedObject> derive(std::string_view label) {
    const auto& table = detail::derivations();
    const auto it = table.find(label);
    if (it == table.end()) return std::nullopt;
    return it->second();
}

inline std::vector<std::string> derivable_labels() {
    std::vector<std::string> out;
    for (const auto& [label, fn] : detail::derivations()) out.push_back(label);
    return out;
}

enum class FixtureStatus { Match, Mismatch };

inline std::string to_string(FixtureStatus s) { return s == FixtureStatus::Match ? "MATCH" : "MISMATCH"; }

struct FixtureRecord {
    std::string label;
    FixtureKind kind;
    FixtureStatus status;
    std::string derived;
    std::string printed;
    std::string detail;
};

namespace detail {

inline std::string chain_to_string(const std::vector<Subspace>& chain) {
    std::string out;
    for (std::size_t k = 0; k < chain.size(); ++k) out += (k ? " <= " : "") + to_string(chain[k]);
    return out;
}

/// Indices k where chain[k] <= chain[k+1] fails.
inline std::vector<std::size_t> broken_links(const std::vector<Subspace>& chain) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        if (!subspace_leq(chain[k], chain[k + 1])) out.push_back(k);
    return out;
}

inline std::string describe_links(const std::vector<std::size_t>& broken) {
    if (broken.empty()) return "holds";
    std::string out = "fails at link";
    for (auto k : broken) out += " " + std::to_string(k + 1) + "<=" + std::to_string(k + 2);
    return out;
}

inline FixtureRecord compare(const PrintedFixture& f, const DerivedObject& d) {
    FixtureRecord r{f.label, f.kind, FixtureStatus::Match, {}, {}, {}};
    const auto mismatch = [&](std::string detail) {
        r.status = FixtureStatus::Mismatch;
        r.detail = std::move(detail);
    };

    const bool shape_ok = (f.kind == FixtureKind::Matrix && d.matrix) ||
                          ((f.kind == FixtureKind::Vector || f.kind == FixtureKind::Ray) && d.vector) ||
                          (f.kind == FixtureKind::Range && d.ranges.size() == 1) ||
                          (f.kind == FixtureKind::Chain && d.ranges.size() == f.printed_ranges.size());
    if (!shape_ok) {
        mismatch("fixture kind does not fit the derived object");
        return r;
    }

    switch (f.kind) {
    case FixtureKind::Matrix: {
        const Matrix& printed = *f.printed_matrix;
        const Matrix& derived = *d.matrix;
        r.printed = to_string(printed);
        r.derived = to_string(derived);
        if (printed.rows() != derived.rows() || printed.cols() != derived.cols()) {
            mismatch("shape differs");
            break;
        }
        std::string cells;
        for (std::size_t i = 0; i < printed.rows(); ++i)
            for (std::size_t j = 0; j < printed.cols(); ++j)
                if (printed(i, j) != derived(i, j))
                    cells += (cells.empty() ? "" : " ") + ("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        if (!cells.empty()) {
            std::string detail = "entries differ at " + cells;
            if (printed.is_square() && conjugate_transpose(printed) != printed) detail += "; printed matrix is not Hermitian";
            mismatch(std::move(detail));
        }
        break;
    }
    case FixtureKind::Vector:
    case FixtureKind::Ray: {
        const Vector& printed = *f.printed_vector;
        const StateVector& derived = *d.vector;
        r.printed = to_string(std::span<const Scalar>(printed));
        r.derived = to_string(derived);
        if (printed.size() != derived.dim()) {
            mismatch("dimension differs");
        } else if (f.kind == FixtureKind::Vector) {
            if (printed != derived.entries()) mismatch("entries differ");
        } else if (is_zero(printed) ||
                   Subspace::span(derived.dim(), std::span<const Vector>(&printed, 1)) !=
                       Subspace::span({derived})) {
            mismatch("not the same ray");
        }
        break;
    }
    case FixtureKind::Range: {
        const Subspace& printed = f.printed_ranges.front();
        const Subspace& derived = d.ranges.front();
        r.printed = to_string(printed);
        r.derived = to_string(derived);
        if (printed != derived) {
            std::string detail = "derived dimension " + std::to_string(derived.dimension()) + ", printed dimension " +
                                 std::to_string(printed.dimension());
            if (subspace_leq(derived, printed)) detail += "; derived is a proper subspace of printed";
            else if (subspace_leq(printed, derived)) detail += "; printed is a proper subspace of derived";
            mismatch(std::move(detail));
        }
        break;
    }
    case FixtureKind::Chain: {
        r.printed = chain_to_string(f.printed_ranges);
        r.derived = chain_to_string(d.ranges);
        const auto derived_broken = broken_links(d.ranges);
        const auto printed_broken = broken_links(f.printed_ranges);
        const bool same_ranges = f.printed_ranges == d.ranges;
        if (!derived_broken.empty() || !printed_broken.empty() || !same_ranges)
            mismatch("derived chain " + describe_links(derived_broken) + "; printed chain " +
                     describe_links(printed_broken) + (same_ranges ? "" : "; ranges differ"));
        break;
    }
    }
    return r;
}

} // namespace detail

/// Recomputes every fixture and reports MATCH or MISMATCH with both values.
/// Never throws on a mismatch; unknown labels are reported as MISMATCH.
inline std::vector<FixtureRecord> audit_fixtures(std::span<const PrintedFixture> fixtures) {
    std::vector<FixtureRecord> out;
    for (const auto& f : fixtures) {
        const auto derived = derive(f.label);
        if (!derived) {
            out.push_back({f.label, f.kind, FixtureStatus::Mismatch, "", "", "no derivation for this label"});
            continue;
        }
        out.push_back(detail::compare(f, *derived));
    }
    return out;
}

inline FixtureSummary summarize(std::span<const FixtureRecord> records) {
    FixtureSummary s;
    for (const auto& r : records) {
        if (r.status == FixtureStatus::Match) {
            ++s.matched;
        } else {
            ++s.mismatched;
            s.mismatched_labels.push_back(r.label);
        }
    }
    return s;
}

} // namespace qsv
