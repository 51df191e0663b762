#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsv/errors.hpp"
#include "qsv/linalg.hpp"
#include "qsv/projector.hpp"

namespace qsv {

enum class Particle : std::uint8_t { A, B };
enum class Axis : std::uint8_t { x, y, z };
enum class Direction : std::uint8_t { up, down };

inline constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

inline char to_char(Particle p) { return p == Particle::A ? 'A' : 'B'; }
inline char to_char(Axis a) { return "xyz"[static_cast<int>(a)]; }
inline std::string to_string(Direction d) { return d == Direction::up ? "up" : "down"; }

inline Axis parse_axis(std::string_view s) {
    if (s == "x") return Axis::x;
    if (s == "y") return Axis::y;
    if (s == "z") return Axis::z;
    throw ParseError("unknown axis '" + std::string(s) + "' (expected x, y or z)");
}

/// "Particle `particle` has spin projection +1/2 (up) or -1/2 (down) along `axis`."
struct Atom {
    Particle particle;
    Axis axis;
    Direction direction;

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

inline Atom up(Particle p, Axis a) { return {p, a, Direction::up}; }
inline Atom down(Particle p, Axis a) { return {p, a, Direction::down}; }

inline Atom flipped(const Atom& a) {
    return {a.particle, a.axis, a.direction == Direction::up ? Direction::down : Direction::up};
}

/// Text form "A.z.up".
inline std::string to_string(const Atom& a) {
    return std::string(1, to_char(a.particle)) + "." + to_char(a.axis) + "." + to_string(a.direction);
}

inline Atom parse_atom(std::string_view s) {
    const auto bad = [&] { return ParseError("malformed atom '" + std::string(s) + "' (expected e.g. A.z.up)"); };
    if (s.size() < 6 || s[1] != '.' || s[3] != '.') throw bad();
    Atom out{};
    if (s[0] == 'A') out.particle = Particle::A;
    else if (s[0] == 'B') out.particle = Particle::B;
    else throw bad();
    out.axis = parse_axis(s.substr(2, 1));
    const auto dir = s.substr(4);
    if (dir == "up") out.direction = Direction::up;
    else if (dir == "down") out.direction = Direction::down;
    else throw bad();
    return out;
}

/// All twelve atoms in lexicographic order.
inline std::vector<Atom> all_atoms() {
    std::vector<Atom> out;
    for (auto p : {Particle::A, Particle::B})
        for (auto a : kAxes)
            for (auto d : {Direction::up, Direction::down}) out.push_back({p, a, d});
    return out;
}

/// Immutable proposition tree over atoms with conjunction and exclusive or.
class Proposition {
public:
    enum class Kind : std::uint8_t { Atom, And, Xor };

    Proposition(Atom a); // NOLINT(google-explicit-constructor)

    Kind kind() const;
    const Atom& atom() const;
    const Proposition& left() const;
    const Proposition& right() const;

    friend Proposition operator&(Proposition l, Proposition r);
    friend Proposition operator^(Proposition l, Proposition r);

private:
    struct Node;
    explicit Proposition(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Proposition::Node {
    Kind kind;
    Atom atom{};
    std::vector<Proposition> children;
};

inline Proposition::Proposition(Atom a) : node_(std::make_shared<const Node>(Node{Kind::Atom, a, {}})) {}
inline Proposition::Kind Proposition::kind() const { return node_->kind; }
inline const Atom& Proposition::atom() const { return node_->atom; }
inline const Proposition& Proposition::left() const { return node_->children.at(0); }
inline const Proposition& Proposition::right() const { return node_->children.at(1); }

inline Proposition operator&(Proposition l, Proposition r) {
    return Proposition(std::make_shared<const Proposition::Node>(
        Proposition::Node{Proposition::Kind::And, {}, {std::move(l), std::move(r)}}));
}
inline Proposition operator^(Proposition l, Proposition r) {
    return Proposition(std::make_shared<const Proposition::Node>(
        Proposition::Node{Proposition::Kind::Xor, {}, {std::move(l), std::move(r)}}));
}

inline bool operator==(const Proposition& a, const Proposition& b) {
    if (a.kind() != b.kind()) return false;
    if (a.kind() == Proposition::Kind::Atom) return a.atom() == b.atom();
    return a.left() == b.left() && a.right() == b.right();
}

/// Same_j: both spins point the same way along j.
inline Proposition same(Axis j) {
    return (up(Particle::A, j) & up(Particle::B, j)) ^ (down(Particle::A, j) & down(Particle::B, j));
}

/// Diff_j: the spins point opposite ways along j.
inline Proposition diff(Axis j) {
    return (up(Particle::A, j) & down(Particle::B, j)) ^ (down(Particle::A, j) & up(Particle::B, j));
}

inline void collect_atoms(const Proposition& p, std::set<Atom>& out) {
    if (p.kind() == Proposition::Kind::Atom) {
        out.insert(p.atom());
        return;
    }
    collect_atoms(p.left(), out);
    collect_atoms(p.right(), out);
}

inline std::set<Atom> atoms_of(const Proposition& p) {
    std::set<Atom> out;
    collect_atoms(p, out);
    return out;
}

/// Infix form; `&` binds tighter than `^` and both associate to the left.
inline std::string to_string(const Proposition& p) {
    using K = Proposition::Kind;
    switch (p.kind()) {
    case K::Atom:
        return to_string(p.atom());
    case K::And: {
        const auto side = [](const Proposition& c, bool right) {
            const bool wrap = c.kind() == K::Xor || (right && c.kind() == K::And);
            return wrap ? "(" + to_string(c) + ")" : to_string(c);
        };
        return side(p.left(), false) + " & " + side(p.right(), true);
    }
    case K::Xor: {
        const auto& r = p.right();
        const std::string rhs = r.kind() == K::Xor ? "(" + to_string(r) + ")" : to_string(r);
        return to_string(p.left()) + " ^ " + rhs;
    }
    }
    return {};
}

namespace detail {

class PropositionParser {
public:
    explicit PropositionParser(std::string_view text) : text_(text) {}

    Proposition parse() {
        Proposition p = parse_xor();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    Proposition parse_xor() {
        Proposition lhs = parse_and();
        while (consume('^')) lhs = lhs ^ parse_and();
        return lhs;
    }

    Proposition parse_and() {
        Proposition lhs = parse_primary();
        while (consume('&')) lhs = lhs & parse_primary();
        return lhs;
    }

    Proposition parse_primary() {
        skip_space();
        if (consume('(')) {
            Proposition inner = parse_xor();
            if (!consume(')')) fail("missing ')'");
            return inner;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        if (start == pos_) fail("expected an atom");
        return parse_atom(text_.substr(start, pos_ - start));
    }

    bool consume(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("proposition '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses e.g. "A.z.up & B.z.down ^ A.z.down & B.z.up".
inline Proposition parse_proposition(std::string_view text) { return detail::PropositionParser(text).parse(); }

/// The admissible truth values of a proposition: a subset of {0,1}.
/// Gap (the empty set) and Indeterminate ({0,1}) are distinct.
enum class TruthValueSet : std::uint8_t { Gap, FalseOnly, TrueOnly, Indeterminate };

inline std::vector<int> values(TruthValueSet t) {
    switch (t) {
    case TruthValueSet::Gap: return {};
    case TruthValueSet::FalseOnly: return {0};
    case TruthValueSet::TrueOnly: return {1};
    case TruthValueSet::Indeterminate: return {0, 1};
    }
    return {};
}

inline TruthValueSet truth_value_set(bool has_false, bool has_true) {
    if (has_false && has_true) return TruthValueSet::Indeterminate;
    if (has_true) return TruthValueSet::TrueOnly;
    if (has_false) return TruthValueSet::FalseOnly;
    return TruthValueSet::Gap;
}

/// "true", "false", "gap" or "indeterminate".
inline std::string to_string(TruthValueSet t) {
    switch (t) {
    case TruthValueSet::Gap: return "gap";
    case TruthValueSet::FalseOnly: return "false";
    case TruthValueSet::TrueOnly: return "true";
    case TruthValueSet::Indeterminate: return "indeterminate";
    }
    return {};
}

inline TruthValueSet parse_truth_value_set(std::string_view s) {
    if (s == "gap") return TruthValueSet::Gap;
    if (s == "false") return TruthValueSet::FalseOnly;
    if (s == "true") return TruthValueSet::TrueOnly;
    if (s == "indeterminate") return TruthValueSet::Indeterminate;
    throw ParseError("unknown truth value set '" + std::string(s) + "'");
}

using ProjectorContext = std::map<Atom, Projector>;

/// Maps a proposition to its projector. And requires commuting operands and
/// becomes the lattice meet; Xor requires orthogonal operands and becomes the join.
inline Projector compile(const Proposition& p, const ProjectorContext& context) {
    using K = Proposition::Kind;
    if (p.kind() == K::Atom) {
        const auto it = context.find(p.atom());
        if (it == context.end()) throw IncompleteAssignmentError("no projector for atom " + to_string(p.atom()));
        return it->second;
    }
    const Projector lhs = compile(p.left(), context);
    const Projector rhs = compile(p.right(), context);
    if (p.kind() == K::And) {
        if (!commute(lhs, rhs))
            throw UnsupportedConnectiveError("'&' over non-commuting projectors in " + to_string(p));
        return projector_meet(lhs, rhs);
    }
    if (!orthogonal(lhs, rhs))
        throw UnsupportedConnectiveError("'^' over non-orthogonal alternatives in " + to_string(p));
    return projector_join(lhs, rhs);
}

/// Supervaluation: true on ran(p), false on ker(p), a gap everywhere else.
inline TruthValueSet valuate(const StateVector& state, const Projector& p) {
    if (state.dim() != p.dim()) throw ShapeError("valuate: state and projector dimensions differ");
    const Vector image = apply(p.matrix(), state);
    if (image == state.entries()) return TruthValueSet::TrueOnly;
    if (is_zero(image)) return TruthValueSet::FalseOnly;
    return TruthValueSet::Gap;
}

using Assignment = std::map<Atom, bool>;

/// Bivalent evaluation: And is the product, Xor is x + y - 2xy.
inline int classical_valuate(const Proposition& p, const Assignment& a) {
    using K = Proposition::Kind;
    switch (p.kind()) {
    case K::Atom: {
        const auto it = a.find(p.atom());
        if (it == a.end()) throw IncompleteAssignmentError("assignment has no value for " + to_string(p.atom()));
        return it->second ? 1 : 0;
    }
    case K::And:
        return classical_valuate(p.left(), a) * classical_valuate(p.right(), a);
    case K::Xor: {
        const int x = classical_valuate(p.left(), a);
        const int y = classical_valuate(p.right(), a);
        return x + y - 2 * x * y;
    }
    }
    return 0;
}

using Constraint = std::pair<Proposition, int>;

/// Every assignment over `atoms` satisfying all constraints in which exactly
/// one of up/down holds for each (particle, axis) whose both atoms are listed.
/// Enumeration order is lexicographic in the sorted atom list.
inline std::vector<Assignment> classical_solutions(std::span<const Constraint> constraints,
                                                   std::span<const Atom> atoms) {
    std::vector<Atom> sorted(atoms.begin(), atoms.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    for (const auto& [prop, value] : constraints) {
        (void)value;
        for (const auto& a : atoms_of(prop))
            if (!std::binary_search(sorted.begin(), sorted.end(), a))
                throw IncompleteAssignmentError("constraint atom " + to_string(a) + " missing from atom list");
    }

    const std::size_t n = sorted.size();
    if (n >= 31) throw ShapeError("classical_solutions: too many atoms to enumerate");

    std::vector<Assignment> out;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        Assignment a;
        for (std::size_t k = 0; k < n; ++k) a[sorted[k]] = ((mask >> (n - 1 - k)) & 1U) != 0;

        bool ok = true;
        for (const auto& [atom, value] : a) {
            if (atom.direction != Direction::up) continue;
            const auto partner = a.find(flipped(atom));
            if (partner != a.end() && partner->second == value) {
                ok = false;
                break;
            }
        }
        for (std::size_t c = 0; ok && c < constraints.size(); ++c)
            ok = classical_valuate(constraints[c].first, a) == constraints[c].second;
        if (ok) out.push_back(std::move(a));
    }
    return out;
}

/// Values a proposition takes across a set of bivalent assignments; an empty
/// solution set yields Gap.
inline TruthValueSet classical_value_set(const Proposition& p, std::span<const Assignment> solutions) {
    bool has_false = false;
    bool has_true = false;
    for (const auto& a : solutions) (classical_valuate(p, a) ? has_true : has_false) = true;
    return truth_value_set(has_false, has_true);
}

/// Statistical population: the cross product of per-component truth-value sets.
struct Population {
    std::vector<std::string> labels;
    std::set<std::vector<int>> tuples;

    bool empty() const { return tuples.empty(); }
    friend bool operator==(const Population&, const Population&) = default;
};

inline Population population(std::span<const TruthValueSet> components, std::span<const std::string> labels) {
    if (components.size() != labels.size()) throw ShapeError("population: label count differs from component count");
    std::vector<std::vector<int>> partial{{}};
    for (const auto tvs : components) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : partial)
            for (int v : values(tvs)) {
                auto t = prefix;
                t.push_back(v);
                next.push_back(std::move(t));
            }
        partial = std::move(next);
    }
    return {std::vector<std::string>(labels.begin(), labels.end()), {partial.begin(), partial.end()}};
}

/// "{(1,0),(1,1)}"; the empty population prints as "{}".
inline std::string to_string(const Population& p) {
    std::string out = "{";
    bool first = true;
    for (const auto& t : p.tuples) {
        if (!first) out += ",";
        first = false;
        out += "(";
        for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "," : "") + std::to_string(t[k]);
        out += ")";
    }
    return out + "}";
}

} // namespace qsv
