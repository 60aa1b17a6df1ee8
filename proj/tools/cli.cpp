#include "cli.hpp"

#include "verify.hpp"

#include "tdorbit/classes.hpp"
#include "tdorbit/error.hpp"
#include "tdorbit/model.hpp"
#include "tdorbit/orbits.hpp"
#include "tdorbit/partitions.hpp"
#include "tdorbit/reps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace tdorbit::cli {
namespace {

using nlohmann::json;

struct Table {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    json doc = json::object();
    std::vector<Table> tables;
    bool failed = false;
};

struct Config {
    int n = 0;
    std::uint32_t q = 2;
    std::string format = "table";
    std::string output;
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 1;
    bool enumerate = false;
    bool flocks = false;
    bool containers = false;
    bool char_table = false;
    std::string suite = "all";
};

// Numbers that fit stay JSON numbers; larger ones become decimal strings.
json big(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

std::string str(const BigInt& v) { return v.str(); }

json values(const FqVector& v) { return values_of(v); }

std::string tuple(const FqVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i].value());
    return s + ")";
}

json cyc(const CycInt& c) { return json{{"p", c.p()}, {"coeffs", c.coeffs()}}; }

std::string cyc_str(const CycInt& c) {
    if (c.is_rational()) return std::to_string(c.constant());
    std::string s = "[";
    for (std::size_t i = 0; i < c.coeffs().size(); ++i) s += (i ? "," : "") + std::to_string(c.coeffs()[i]);
    return s + "]";
}

json rational(const ExactRational& r) { return json{{"num", big(r.num())}, {"den", big(r.den())}}; }

std::string rational_str(const ExactRational& r) {
    return r.den() == 1 ? str(r.num()) : str(r.num()) + "/" + str(r.den());
}

json element(const GroupElement& g) { return json{{"alpha", values(g.alpha())}, {"beta", values(g.beta())}}; }

std::string element_str(const GroupElement& g) { return "g" + tuple(g.alpha()) + ";" + tuple(g.beta()); }

json descriptor(const OrbitDescriptor& d) {
    json inv = json::object();
    for (const auto& [r, v] : d.odd_invariants) inv[std::to_string(r)] = v.value();
    return json{{"partition", d.partition.str()},
                {"y", values(d.y)},
                {"invariants", inv},
                {"dimension", dimension(d)},
                {"representative_x", values(canonical_representative(d).x)}};
}

std::string invariants_str(const OrbitDescriptor& d) {
    std::string s;
    for (const auto& [r, v] : d.odd_invariants) s += (s.empty() ? "" : " ") + ("v" + std::to_string(r + 1)) + "=" + std::to_string(v.value());
    return s.empty() ? "-" : s;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

// ---- emitters ----

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void emit_table(const Table& t, std::ostream& os) {
    std::vector<std::size_t> width(t.header.size(), 0);
    for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
    for (const auto& r : t.rows)
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            s += cells[c];
            if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        os << s << '\n';
    };
    if (!t.title.empty()) os << t.title << '\n';
    line(t.header);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : t.rows) line(r);
}

void emit(const Report& r, const std::string& format, std::ostream& os) {
    if (format == "json") {
        os << r.doc.dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < r.tables.size(); ++i) {
        const auto& t = r.tables[i];
        if (i) os << '\n';
        if (format == "csv") {
            if (!t.title.empty()) os << "# " << t.title << '\n';
            auto row = [&](const std::vector<std::string>& cells) {
                for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_field(cells[c]);
                os << '\n';
            };
            row(t.header);
            for (const auto& cells : t.rows) row(cells);
        } else {
            emit_table(t, os);
        }
    }
}

// ---- subcommands ----

ClassCountTable class_counts(const Config& c) {
    return c.n >= 2 ? count_classes_recursive(c.n, c.q) : count_classes_by_strings(c.n, c.q, c.budget);
}

Report cmd_counts(const Config& c) {
    Report r;
    json orbits = json::object();
    Table ot{"orbits by dimension", {"dimension", "count"}, {}};
    for (int k = 0; 2 * k <= c.n; ++k) {
        const auto v = count_by_dimension(c.n, c.q, k);
        if (v == 0) continue;
        orbits[std::to_string(2 * k)] = big(v);
        ot.rows.push_back({std::to_string(2 * k), str(v)});
    }
    const auto ct = class_counts(c);
    json classes = json::object();
    Table cls{"classes by dimension (class size q^k)", {"k", "light", "heavy", "total"}, {}};
    for (int k = 0; k < c.n; ++k) {
        if (ct.total(k) == 0) continue;
        classes[std::to_string(k)] = big(ct.total(k));
        cls.rows.push_back({std::to_string(k), str(ct.light[k]), str(ct.heavy[k]), str(ct.total(k))});
    }
    r.doc = json{{"orbits", orbits}, {"classes", classes}};
    r.tables = {ot, cls};
    return r;
}

Report cmd_orbits(const Config& c) {
    Report r;
    if (!c.enumerate) {
        Table t{"orbits per partition", {"partition", "dimension", "orbits"}, {}};
        json parts = json::array();
        auto comps = all_compositions(c.n);
        std::sort(comps.begin(), comps.end());
        BigInt total = 0;
        for (const auto& p : comps) {
            const auto v = orbits_for_partition(p, c.q);
            total += v;
            const int dim = c.n - p.odd_parts();
            parts.push_back(json{{"partition", p.str()}, {"dimension", dim}, {"orbits", big(v)}});
            t.rows.push_back({p.str(), std::to_string(dim), str(v)});
        }
        r.doc = json{{"n", c.n}, {"q", c.q}, {"partitions", parts}, {"total", big(total)}};
        r.tables = {t};
        return r;
    }
    const auto ds = enumerate_descriptors(c.n, c.q, c.budget);
    Table t{"coadjoint orbits", {"#", "partition", "y", "invariants", "dimension", "x"}, {}};
    json list = json::array();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        list.push_back(descriptor(ds[i]));
        t.rows.push_back({std::to_string(i), ds[i].partition.str(), tuple(ds[i].y), invariants_str(ds[i]),
                          std::to_string(dimension(ds[i])), tuple(canonical_representative(ds[i]).x)});
    }
    r.doc = json{{"n", c.n}, {"q", c.q}, {"orbits", list}, {"total", ds.size()}};
    r.tables = {t};
    return r;
}

Report cmd_classes(const Config& c) {
    Report r;
    if (!c.enumerate) {
        const auto ct = class_counts(c);
        Table t{"classes by dimension", {"k", "light", "heavy", "total"}, {}};
        json rows = json::object();
        for (int k = 0; k < c.n; ++k) {
            rows[std::to_string(k)] = json{{"light", big(ct.light[k])}, {"heavy", big(ct.heavy[k])}};
            t.rows.push_back({std::to_string(k), str(ct.light[k]), str(ct.heavy[k]), str(ct.total(k))});
        }
        r.doc = json{{"n", c.n}, {"q", c.q}, {"by_dimension", rows}, {"total", big(ct.grand_total())}};
        r.tables = {t};
        return r;
    }
    const ClassTable table(c.n, c.q, c.budget);
    Table t{"conjugacy classes", {"#", "a", "b", "size", "invariants"}, {}};
    json list = json::array();
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& g = table.representatives()[i];
        json inv = json::object();
        std::string inv_s;
        for (const auto& ni : named_invariants(g)) {
            inv[ni.label] = ni.value.value();
            inv_s += (inv_s.empty() ? "" : " ") + ni.label + "=" + std::to_string(ni.value.value());
        }
        list.push_back(json{{"a", values(g.alpha())}, {"b", values(g.beta())}, {"size", table.sizes()[i]}, {"invariants", inv}});
        t.rows.push_back({std::to_string(i), tuple(g.alpha()), tuple(g.beta()), std::to_string(table.sizes()[i]),
                          inv_s.empty() ? "-" : inv_s});
    }
    r.doc = json{{"n", c.n}, {"q", c.q}, {"classes", list}, {"total", table.size()}};
    r.tables = {t};
    return r;
}

json flock_json(const Flock& f) {
    json members = json::array();
    for (const auto& m : f.members()) members.push_back(m.digits());
    return json{{"head", f.head.digits()}, {"tail", f.tail.digits()}, {"k", f.k()},
                {"dotted_dividers", f.dotted_dividers}, {"members", members},
                {"container", container_of_flock(f).str()}};
}

std::string members_str(const Flock& f) {
    std::string s = "{";
    const auto ms = f.members();
    for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? "," : "") + ms[i].digits();
    return s + "}";
}

Report cmd_partitions(const Config& c) {
    Report r;
    auto comps = all_compositions(c.n);
    json list = json::array();
    Table t{"compositions", {"partition", "type", "k", "mu", "nu"}, {}};
    for (const auto& p : comps) {
        list.push_back(json{{"partition", p.digits()}, {"type", to_string(type_of(p))}, {"k", p.k()},
                            {"mu", p.even_parts()}, {"nu", p.odd_parts()}});
        t.rows.push_back({p.digits(), to_string(type_of(p)), std::to_string(p.k()), std::to_string(p.even_parts()),
                          std::to_string(p.odd_parts())});
    }
    r.doc = json{{"n", c.n}, {"compositions", list}, {"q_even", q_even(c.n)}, {"q_odd", q_odd(c.n)}};
    r.tables.push_back(t);
    r.tables.push_back(Table{"type counts", {"Q_even", "Q_odd"}, {{std::to_string(q_even(c.n)), std::to_string(q_odd(c.n))}}});

    if (c.flocks || c.containers) {
        json flocks = json::object();
        for (auto type : {FlockType::Odd, FlockType::Even}) {
            const auto fs = all_flocks(c.n, type);
            json arr = json::array();
            Table ft{std::string(to_string(type)) + " flocks (" + std::to_string(fs.size()) + ")", {}, {}};
            ft.header = c.containers ? std::vector<std::string>{"members", "head", "tail", "dotted", "container"}
                                     : std::vector<std::string>{"members", "head", "tail", "dotted"};
            for (const auto& f : fs) {
                arr.push_back(flock_json(f));
                std::vector<std::string> row{members_str(f), f.head.digits(), f.tail.digits(),
                                             f.dotted_dividers.empty() ? "-" : join(f.dotted_dividers)};
                if (c.containers) row.push_back(container_of_flock(f).str());
                ft.rows.push_back(row);
            }
            flocks[to_string(type)] = arr;
            r.tables.push_back(ft);
        }
        r.doc["flocks"] = flocks;
    }
    if (c.containers) {
        json cs = json::array();
        Table ct{"containers", {"I", "I-", "I+"}, {}};
        for (const auto& s : sparse_sequences(c.n)) {
            const auto nb = iminus_iplus(s, c.n);
            cs.push_back(json{{"I", s.indices}, {"label", s.str()}, {"minus", nb.minus}, {"plus", nb.plus}});
            ct.rows.push_back({s.str(), "{" + join(nb.minus) + "}", "{" + join(nb.plus) + "}"});
        }
        r.doc["containers"] = cs;
        r.tables.push_back(ct);
    }
    return r;
}

Report cmd_irreps(const Config& c) {
    Report r;
    const auto ds = enumerate_descriptors(c.n, c.q, c.budget);
    json list = json::array();
    Table t{"irreducible representations", {"#", "partition", "y", "invariants", "dim"}, {}};
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const IrreducibleRepresentation rep(ds[i]);
        auto d = descriptor(ds[i]);
        d["dim"] = rep.dim();
        list.push_back(d);
        t.rows.push_back({std::to_string(i), ds[i].partition.str(), tuple(ds[i].y), invariants_str(ds[i]),
                          std::to_string(rep.dim())});
    }
    r.doc = json{{"n", c.n}, {"q", c.q}, {"irreducibles", list}};
    r.tables = {t};
    if (c.char_table) {
        const ClassTable table(c.n, c.q, c.budget);
        const auto chars = character_table(table, c.jobs, c.budget);
        json cols = json::array();
        Table ch{"character table (rows: irreducibles, columns: class representatives)", {"#"}, {}};
        for (std::size_t k = 0; k < table.size(); ++k) {
            cols.push_back(element(table.representatives()[k]));
            ch.header.push_back(element_str(table.representatives()[k]));
        }
        json rows = json::array();
        for (std::size_t i = 0; i < chars.size(); ++i) {
            json row = json::array();
            std::vector<std::string> cells{std::to_string(i)};
            for (const auto& v : chars[i].values) {
                row.push_back(cyc(v));
                cells.push_back(cyc_str(v));
            }
            rows.push_back(row);
            ch.rows.push_back(cells);
        }
        r.doc["class_representatives"] = cols;
        r.doc["class_sizes"] = table.sizes();
        r.doc["character_table"] = rows;
        r.tables.push_back(ch);
    }
    return r;
}

Report cmd_model(const Config& c) {
    Report r;
    const ClassTable table(c.n, c.q, c.budget);
    const auto census = m_classes(c.n, c.q, c.budget);
    const auto assignments = assign_characters(census, c.n, c.q);
    const auto chars = character_table(table, c.jobs, c.budget);
    const auto model = build_model(census, assignments, table, c.jobs);
    const auto report = multiplicity_report(model, chars, table);

    json list = json::array();
    Table at{"stabilizer character assignment", {"container", "a", "b", "flock", "slots"}, {}};
    for (const auto& a : assignments) {
        const auto& mc = census.classes[a.m_class];
        const auto& cont = census.containers[mc.container];
        json slots = json::array();
        std::string slot_s;
        for (const auto& s : a.slots) {
            slots.push_back(json{{"slot", s.slot}, {"source", s.source}});
            slot_s += (slot_s.empty() ? "" : " ") + s.slot + "<-" + s.source;
        }
        list.push_back(json{{"container", cont.I.str()},
                            {"a", values(mc.cls.a)},
                            {"b", values(mc.cls.b_coset)},
                            {"flock", json{{"head", a.flock.head.digits()}, {"tail", a.flock.tail.digits()},
                                           {"type", to_string(a.flock.type)}}},
                            {"A", values(a.chi.A)},
                            {"B", values(a.chi.B)},
                            {"slots", slots}});
        at.rows.push_back({cont.I.str(), tuple(mc.cls.a), tuple(mc.cls.b_coset),
                           std::string(to_string(a.flock.type)) + "[" + a.flock.head.digits() + "," +
                               a.flock.tail.digits() + "]",
                           slot_s.empty() ? "-" : slot_s});
    }
    json mult = json::array();
    Table mt{"multiplicities", {"#", "partition", "dim", "multiplicity"}, {}};
    const auto ds = enumerate_descriptors(c.n, c.q, c.budget);
    for (std::size_t i = 0; i < chars.size(); ++i) {
        mult.push_back(rational(report.multiplicities[i]));
        mt.rows.push_back({std::to_string(i), ds[i].partition.str(), std::to_string(chars[i].dim),
                           rational_str(report.multiplicities[i])});
    }
    r.doc = json{{"n", c.n},
                 {"q", c.q},
                 {"assignments", list},
                 {"multiplicities", mult},
                 {"deviations", report.deviations},
                 {"model_dimension", report.model_dimension},
                 {"irreducible_dimension_sum", report.irreducible_dimension_sum},
                 {"ok", report.ok()}};
    r.tables = {at, mt,
                Table{"summary", {"model dim", "sum of irreducible dims", "deviations", "ok"},
                      {{std::to_string(report.model_dimension), std::to_string(report.irreducible_dimension_sum),
                        std::to_string(report.deviations.size()), report.ok() ? "yes" : "no"}}}};
    r.failed = !report.ok();
    return r;
}

Report cmd_verify(const Config& c) {
    Report r;
    const auto checks = run_suite(c.suite, VerifyOptions{c.n, c.q, c.jobs, c.budget});
    json list = json::array();
    Table t{"verification n=" + std::to_string(c.n) + " q=" + std::to_string(c.q), {"suite", "check", "result", "detail"}, {}};
    bool all = true;
    for (const auto& ch : checks) {
        all = all && ch.pass;
        list.push_back(json{{"suite", ch.suite}, {"check", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
        t.rows.push_back({ch.suite, ch.name, ch.pass ? "PASS" : "FAIL", ch.detail});
    }
    r.doc = json{{"n", c.n}, {"q", c.q}, {"suite", c.suite}, {"checks", list}, {"ok", all}};
    r.tables = {t};
    r.failed = !all;
    return r;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("TDORBIT_JOBS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    return 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    cfg.jobs = default_jobs();

    CLI::App app{"Exact orbit method for two-diagonal unitriangular groups over F_q", "tdorbit"};
    app.require_subcommand(1);
    const auto prime = CLI::Validator(
        [](std::string& s) -> std::string {
            try {
                const auto v = std::stoul(s);
                if (v > std::numeric_limits<std::uint32_t>::max() || !is_prime(static_cast<std::uint32_t>(v)))
                    return "q must be prime";
            } catch (const std::exception&) {
                return "q must be an integer";
            }
            return {};
        },
        "PRIME");

    std::function<Report(const Config&)> action;
    auto common = [&](CLI::App* sub, bool needs_q) {
        sub->add_option("--n", cfg.n, "size of the group")->required()->check(CLI::Range(1, 40));
        auto q = sub->add_option("--q", cfg.q, "prime field order")->check(prime);
        if (needs_q) q->required();
        sub->add_option("--format", cfg.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--output", cfg.output, "write the report to this file");
        sub->add_option("--budget", cfg.budget, "ceiling on enumerated objects")->check(CLI::PositiveNumber);
        sub->add_option("--jobs", cfg.jobs, "worker threads (default TDORBIT_JOBS or 1)")->check(CLI::Range(1u, 1024u));
    };

    auto* counts = app.add_subcommand("counts", "orbit and class counts by dimension");
    common(counts, true);
    counts->callback([&] { action = cmd_counts; });

    auto* orbits = app.add_subcommand("orbits", "coadjoint orbits");
    common(orbits, true);
    orbits->add_flag("--enumerate", cfg.enumerate, "list every orbit descriptor");
    orbits->callback([&] { action = cmd_orbits; });

    auto* classes = app.add_subcommand("classes", "conjugacy classes");
    common(classes, true);
    classes->add_flag("--enumerate", cfg.enumerate, "list every class");
    classes->callback([&] { action = cmd_classes; });

    auto* partitions = app.add_subcommand("partitions", "compositions, flocks and containers");
    common(partitions, false);
    partitions->add_flag("--flocks", cfg.flocks, "list the flocks of both types");
    partitions->add_flag("--containers", cfg.containers, "list containers and the flock of each");
    partitions->callback([&] { action = cmd_partitions; });

    auto* irreps = app.add_subcommand("irreps", "irreducible representations");
    common(irreps, true);
    irreps->add_flag("--char-table", cfg.char_table, "print the full character table");
    irreps->callback([&] { action = cmd_irreps; });

    auto* model = app.add_subcommand("model", "Gelfand model assignment and multiplicities");
    common(model, true);
    model->callback([&] { action = cmd_model; });

    auto* verify = app.add_subcommand("verify", "run exact verification suites");
    common(verify, true);
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("--suite", cfg.suite, "orbits, classes, chars, model, combinatorics or all")
        ->check(CLI::IsMember(suites));
    verify->callback([&] { action = cmd_verify; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        if (app.get_subcommands().empty()) err << "run with --help for usage\n";
        return kBadFlags;
    }

    Report report;
    try {
        report = action(cfg);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (raise --budget)\n";
        return kBudgetExceeded;
    } catch (const Overflow& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kBadFlags;
    }

    if (cfg.output.empty()) {
        emit(report, cfg.format, out);
    } else {
        std::ofstream file(cfg.output);
        if (!file) {
            err << "error: cannot open " << cfg.output << '\n';
            return kBadFlags;
        }
        emit(report, cfg.format, file);
    }
    return report.failed ? kVerifyFailed : kOk;
}

}  // namespace tdorbit::cli
