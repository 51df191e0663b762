// qsv: command-line front end for the supervaluation engine.
//
// Exit codes: 0 success, 2 usage error (bad flags, unparsable input),
// 3 domain error (impossible verification, unsupported connective, zero state).

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qsv/embedded_fixtures.hpp"
#include "qsv/qsv.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kDomainError = 3;

struct Options {
    std::string axis = "z";
    std::string semantics = "both";
    std::vector<std::string> query;
    std::string output = "table";
    std::string prop;
    std::string with;
    std::string state;
    std::string fixtures_path;
};

std::vector<qsv::PrintedFixture> fixtures(const Options& opt) {
    if (!opt.fixtures_path.empty()) return qsv::load_fixtures_file(opt.fixtures_path);
    return qsv::load_fixtures(qsv::kEmbeddedFixturesJson);
}

void print_json(const qsv::OrderedJson& j) { std::cout << j.dump(2) << "\n"; }

/// Default joint query: B down along the verified axis, B up along the next axis.
std::vector<qsv::Atom> default_query(qsv::Axis j) {
    const qsv::Axis other = j == qsv::Axis::z ? qsv::Axis::x : qsv::Axis::z;
    return {qsv::down(qsv::Particle::B, j), qsv::up(qsv::Particle::B, other)};
}

int cmd_epr_run(const Options& opt) {
    const qsv::Axis axis = qsv::parse_axis(opt.axis);
    const qsv::Semantics semantics = qsv::parse_semantics(opt.semantics);
    std::vector<qsv::Atom> query;
    for (const auto& q : opt.query) query.push_back(qsv::parse_atom(q));
    if (query.empty()) query = default_query(axis);

    qsv::ScenarioReport report = qsv::run_epr(axis, query);
    const auto records = qsv::audit_fixtures(fixtures(opt));
    report.fixtures = qsv::summarize(records);

    if (opt.output == "json") print_json(qsv::to_json(report, semantics));
    else std::cout << qsv::to_table(report, semantics);
    return 0;
}

int cmd_valuate(const Options& opt) {
    const qsv::Proposition prop = qsv::parse_proposition(opt.prop);
    qsv::Vector raw = opt.state.empty() ? qsv::singlet(qsv::Axis::z).entries() : qsv::parse_vector(opt.state);
    if (raw.size() != 4) throw qsv::ParseError("--state needs 4 comma-separated entries");
    const qsv::StateVector state(std::move(raw));

    const qsv::Projector p = qsv::compile(prop, qsv::atom_context());
    const qsv::TruthValueSet value = qsv::valuate(state, p);
    if (opt.output == "json") {
        print_json(qsv::OrderedJson{{"proposition", qsv::to_string(prop)},
                                    {"state", qsv::to_json(std::span<const qsv::Scalar>(state.entries()))},
                                    {"valuation", qsv::to_string(value)}});
    } else {
        std::cout << qsv::to_string(value) << "\n";
    }
    return 0;
}

int cmd_lattice(const Options& opt) {
    const auto context = qsv::atom_context();
    const qsv::Proposition prop = qsv::parse_proposition(opt.prop);
    const qsv::Projector p = qsv::compile(prop, context);
    const qsv::Subspace range = qsv::range_of(p);

    qsv::OrderedJson out{{"proposition", qsv::to_string(prop)},
                         {"range", qsv::to_string(range)},
                         {"kernel", qsv::to_string(qsv::kernel_of(p))},
                         {"orthocomplement", qsv::to_string(qsv::orthocomplement(range))}};
    if (!opt.with.empty()) {
        const qsv::Proposition other_prop = qsv::parse_proposition(opt.with);
        const qsv::Subspace other = qsv::range_of(qsv::compile(other_prop, context));
        out["with"] = qsv::to_string(other_prop);
        out["with_range"] = qsv::to_string(other);
        out["meet"] = qsv::to_string(qsv::meet(range, other));
        out["join"] = qsv::to_string(qsv::join(range, other));
        out["sum"] = qsv::to_string(qsv::sum(range, other));
        out["leq"] = qsv::subspace_leq(range, other);
        out["geq"] = qsv::subspace_leq(other, range);
        out["orthogonal"] = qsv::orthogonal(range, other);
    }

    if (opt.output == "json") {
        print_json(out);
        return 0;
    }
    std::size_t width = 0;
    for (const auto& [key, value] : out.items()) width = std::max(width, key.size());
    for (const auto& [key, value] : out.items()) {
        std::cout << key << std::string(width - key.size() + 2, ' ')
                  << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    return 0;
}

int cmd_fixture_audit(const Options& opt) {
    const auto records = qsv::audit_fixtures(fixtures(opt));
    if (opt.output == "json") print_json(qsv::to_json(records));
    else std::cout << qsv::to_table(records);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Supervaluation semantics for spin-1/2 pairs: valuations, lattice queries and the EPR run"};
    app.require_subcommand(1);
    Options opt;

    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", opt.output, "table or json")->check(CLI::IsMember({"table", "json"}));
    };

    auto* epr = app.add_subcommand("epr-run", "Singlet preparation, verification of A up, populations");
    epr->add_option("--axis", opt.axis, "verification axis")->check(CLI::IsMember({"x", "y", "z"}));
    epr->add_option("--query", opt.query, "atoms of the joint statement, e.g. B.z.down,B.x.up")->delimiter(',');
    epr->add_option("--semantics", opt.semantics, "super, classical or both")
        ->check(CLI::IsMember({"super", "classical", "both"}));
    epr->add_option("--fixtures", opt.fixtures_path, "fixture data file (defaults to the built-in copy)");
    add_output(epr);

    auto* val = app.add_subcommand("valuate", "Supervaluation of a proposition in a state (default: singlet)");
    val->add_option("--prop", opt.prop, "proposition, e.g. \"A.z.up & B.z.down\"")->required();
    val->add_option("--state", opt.state, "comma-separated entries, e.g. 0,1,-1,0");
    add_output(val);

    auto* lat = app.add_subcommand("lattice", "Range, kernel and lattice operations of compiled propositions");
    lat->add_option("--prop", opt.prop, "proposition")->required();
    lat->add_option("--with", opt.with, "second proposition for meet/join/sum/order");
    add_output(lat);

    auto* check = app.add_subcommand("paper-check", "Audit the published matrices and ranges against derivations");
    check->add_option("--fixtures", opt.fixtures_path, "fixture data file (defaults to the built-in copy)");
    add_output(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (epr->parsed()) return cmd_epr_run(opt);
        if (val->parsed()) return cmd_valuate(opt);
        if (lat->parsed()) return cmd_lattice(opt);
        return cmd_fixture_audit(opt);
    } catch (const qsv::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const qsv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
}
