#include "canord/cli.hpp"

#include "canord/matgroup.hpp"
#include "canord/mckay.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <fstream>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

namespace canord::cli {

Range parse_range(const std::string& s) {
    static const std::regex re(R"(\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad range '" + s + "', expected N or A..B");
    Range r;
    r.lo = std::stoi(m[1]);
    r.hi = m[2].matched ? std::stoi(m[2]) : r.lo;
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + s + "'");
    return r;
}

CanonicalType parse_group(const std::string& s) {
    static const std::regex re(R"(([ADEade])_?(\d+))");
    std::smatch m;
    if (std::regex_match(s, m, re)) {
        CanonicalType t = CanonicalType::ade(static_cast<char>(std::toupper(m[1].str()[0])), std::stoi(m[2]));
        if (t.valid()) return t;
    }
    throw std::invalid_argument("unknown group '" + s + "' (expected A_n, D_n with n >= 4, or E6, E7, E8)");
}

namespace {

const std::vector<Family> all_families{Family::A12, Family::BL, Family::B,   Family::L,
                                       Family::DL,  Family::BD, Family::Anz, Family::ADE};

}  // namespace

std::vector<CanonicalType> expand(const SweepConfig& cfg) {
    const std::vector<Family>& fams = cfg.families.empty() ? all_families : cfg.families;
    std::vector<CanonicalType> rows;
    auto add = [&](const CanonicalType& t) {
        if (t.valid()) rows.push_back(t);
    };
    for (Family f : fams) {
        switch (f) {
            case Family::A12:
                for (int e = cfg.e.lo; e <= cfg.e.hi; ++e) add(CanonicalType::a12(e));
                break;
            case Family::Anz:
                for (int n = cfg.n.lo; n <= cfg.n.hi; ++n)
                    for (int e = cfg.e.lo; e <= cfg.e.hi; ++e) add(CanonicalType::anz(n, e));
                break;
            case Family::ADE:
                for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) add(CanonicalType::ade('A', n));
                for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) add(CanonicalType::ade('D', n));
                // the exceptional rows join whenever the sweep reaches past D4
                if (cfg.n.hi >= 4)
                    for (int n = 6; n <= 8; ++n) add(CanonicalType::ade('E', n));
                break;
            default:
                for (int n = cfg.n.lo; n <= cfg.n.hi; ++n) add(CanonicalType::with_n(f, n));
        }
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Reports in row order; rows are computed on a small thread pool.
std::vector<McKayReport> run_rows(const std::vector<CanonicalType>& rows) {
    std::vector<std::optional<McKayReport>> out(rows.size());
    std::vector<std::exception_ptr> errors(rows.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < rows.size();) {
            try {
                out[i] = verify(rows[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    size_t nthreads = std::min<size_t>(rows.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (size_t k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    std::vector<McKayReport> reports;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        reports.push_back(std::move(*out[i]));
    }
    return reports;
}

std::string table_row(const McKayReport& r) {
    std::ostringstream os;
    os << std::left << std::setw(16) << r.type.label() << " resolution " << std::setw(3) << r.count_resolution
       << " group " << std::setw(3) << r.count_group << " K=0 " << (r.k_trivial ? "yes" : "no ") << "  curves:";
    for (const auto& c : r.breakdown.curves) os << ' ' << c.type.str();
    for (const auto& t : r.torsion)
        os << "  torsion " << (t.order ? std::to_string(*t.order) : "none") << "/" << t.expected;
    if (r.irreps) os << "  irreps " << *r.irreps;
    os << "  " << (r.ok() ? "agree" : "DISAGREE");
    return os.str();
}

std::string dot_name(const std::string& label) {
    std::string s;
    for (char c : label)
        if (std::isalnum(static_cast<unsigned char>(c))) s += c;
        else if (!s.empty() && s.back() != '_') s += '_';
    while (!s.empty() && s.back() == '_') s.pop_back();
    return s;
}

// Emits text to the configured destination.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

int report_exit(const std::vector<McKayReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const McKayReport& r) { return r.ok(); }) ? 0 : 1;
}

std::string reports_json(const std::vector<McKayReport>& reports, bool single) {
    if (single && reports.size() == 1) return to_json(reports[0]).dump(2) + "\n";
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

struct Args {
    std::string type, group, n, e, format, output;
    std::vector<std::string> families;
    bool dot = false;
    bool families_given = false;
};

// The single row named by --type/--group with --n/--e, possibly ranged.
std::vector<CanonicalType> selected_rows(const Args& a) {
    if (!a.group.empty()) {
        if (!a.type.empty() && parse_family(a.type) != Family::ADE)
            throw UsageError("--group only applies to the ADE row");
        return {parse_group(a.group)};
    }
    if (a.type.empty()) throw UsageError("one of --type or --group is required");
    Family f = parse_family(a.type);
    if (f == Family::ADE) throw UsageError("the ADE row needs --group (e.g. --group E6)");
    bool needs_n = f != Family::A12, needs_e = f == Family::A12 || f == Family::Anz;
    if (needs_n && a.n.empty()) throw UsageError("--n is required for " + family_name(f));
    if (needs_e && a.e.empty()) throw UsageError("--e is required for " + family_name(f));
    Range nr = needs_n ? parse_range(a.n) : Range{0, 0};
    Range er = needs_e ? parse_range(a.e) : Range{0, 0};
    std::vector<CanonicalType> rows;
    for (int n = nr.lo; n <= nr.hi; ++n)
        for (int e = er.lo; e <= er.hi; ++e) {
            CanonicalType t = f == Family::A12 ? CanonicalType::a12(e)
                              : f == Family::Anz ? CanonicalType::anz(n, e)
                                                 : CanonicalType::with_n(f, n);
            t.validate();
            rows.push_back(t);
        }
    return rows;
}

int cmd_verify(const Args& a, std::ostream& out) {
    if (a.format == "dot") throw UsageError("verify has no dot output");
    std::vector<McKayReport> reports = run_rows(selected_rows(a));
    std::string text;
    if (a.format == "json") text = reports_json(reports, true);
    else
        for (const auto& r : reports) text += to_text(r);
    emit(text, a.output, out);
    return report_exit(reports);
}

int cmd_table(const Args& a, std::ostream& out) {
    if (a.format == "dot") throw UsageError("table has no dot output");
    SweepConfig cfg;
    if (a.families_given) {
        for (const auto& s : a.families)
            if (!s.empty()) cfg.families.push_back(parse_family(s));
        if (cfg.families.empty()) throw UsageError("--families needs at least one family");
    }
    if (!a.n.empty()) cfg.n = parse_range(a.n);
    if (!a.e.empty()) cfg.e = parse_range(a.e);
    std::vector<CanonicalType> rows = expand(cfg);
    if (rows.empty()) throw UsageError("the sweep selects no valid rows");
    std::vector<McKayReport> reports = run_rows(rows);
    std::string text;
    if (a.format == "json") text = reports_json(reports, false);
    else
        for (const auto& r : reports) text += table_row(r) + "\n";
    emit(text, a.output, out);
    return report_exit(reports);
}

int cmd_quiver(const Args& a, std::ostream& out) {
    if (a.group.empty()) throw UsageError("--group is required");
    CanonicalType t = parse_group(a.group);
    McKayQuiver q = mckay_quiver(ade_group(t.letter, t.rank));
    bool ok = graphs_isomorphic(q.adjacency, affine_diagram(t.letter, t.rank));
    std::string text;
    if (a.format == "json" && !a.dot) {
        nlohmann::json j{{"group", t.label()}, {"dims", q.dims}, {"adjacency", q.adjacency},
                         {"trivial", q.trivial}, {"affineDiagram", ok}};
        text = j.dump(2) + "\n";
    } else {
        text = quiver_dot(q, dot_name(t.label()));
    }
    emit(text, a.output, out);
    return ok ? 0 : 1;
}

int cmd_lattice(const Args& a, std::ostream& out) {
    std::vector<CanonicalType> rows = selected_rows(a);
    if (rows.size() != 1) throw UsageError("lattice takes a single row, not a range");
    ResolutionRamData res = resolution_ram(rows[0]);
    std::string text;
    if (a.format == "json" && !a.dot) text = to_json(res).dump(2) + "\n";
    else text = to_dot(res.lattice, res.ram, dot_name(rows[0].label()));
    emit(text, a.output, out);
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reflexive module counts over canonical orders, checked against the group side", "canord"};
    app.require_subcommand(1);
    Args a;

    auto row_flags = [&](CLI::App* sub) {
        sub->add_option("--type", a.type, "family: A12, BL, B, L, DL, BD, Anz, ADE");
        sub->add_option("--n", a.n, "n or a range a..b");
        sub->add_option("--e", a.e, "e or a range a..b");
        sub->add_option("--group", a.group, "Kleinian group for the ADE row, e.g. E6");
    };

    CLI::App* verify_cmd = app.add_subcommand("verify", "count both ways for one row and run the side checks");
    row_flags(verify_cmd);
    CLI::App* table_cmd = app.add_subcommand("table", "sweep families and print one row each");
    table_cmd->add_option("--families", a.families, "comma-separated families (default all)")->delimiter(',');
    table_cmd->add_option("--n", a.n, "range for n (default 1..6)");
    table_cmd->add_option("--e", a.e, "range for e (default 1..4)");
    CLI::App* quiver_cmd = app.add_subcommand("quiver", "McKay quiver of a Kleinian group");
    quiver_cmd->add_option("--group", a.group, "A_n, D_n or E6, E7, E8");
    quiver_cmd->add_flag("--dot", a.dot, "Graphviz output");
    CLI::App* lattice_cmd = app.add_subcommand("lattice", "resolution configuration with ramification");
    row_flags(lattice_cmd);
    lattice_cmd->add_flag("--dot", a.dot, "Graphviz output");

    // each subcommand gets its own format default
    std::string verify_fmt = "text", table_fmt = "text", quiver_fmt = "dot", lattice_fmt = "dot";
    for (auto [sub, fmt] : {std::pair{verify_cmd, &verify_fmt}, std::pair{table_cmd, &table_fmt},
                            std::pair{quiver_cmd, &quiver_fmt}, std::pair{lattice_cmd, &lattice_fmt}}) {
        sub->add_option("--format", *fmt, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("-o,--output", a.output, "write to this file instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    a.families_given = table_cmd->count("--families") > 0;

    try {
        if (*verify_cmd) {
            a.format = verify_fmt;
            return cmd_verify(a, out);
        }
        if (*table_cmd) {
            a.format = table_fmt;
            return cmd_table(a, out);
        }
        if (*quiver_cmd) {
            a.format = quiver_fmt;
            return cmd_quiver(a, out);
        }
        a.format = lattice_fmt;
        return cmd_lattice(a, out);
    } catch (const CapExceeded& ex) {
        err << "canord: " << ex.what() << " (raise CANORD_CAP)\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        err << "canord: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        // a row that could not be checked counts as a disagreement
        err << "canord: " << ex.what() << "\n";
        return 1;
    }
}

}  // namespace canord::cli
