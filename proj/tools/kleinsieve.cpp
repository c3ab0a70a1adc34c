// kleinsieve: command-line front end.
//
// Exit codes: 0 success (and zero survivors for `eliminate`), 1 survivors
// remain, 2 usage or data error.

#include <kleinsieve/kleinsieve.hpp>

#include <CLI11.hpp>
#include <fnmatch.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace ks = kleinsieve;
namespace rep = kleinsieve::report;

namespace {

enum class Format { table, csv, json };

struct Options {
    Format format = Format::table;
    std::uint64_t cap = ks::kDefaultWeylCap;
};

std::filesystem::path resolve_data_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("KLEINSIEVE_DATA_DIR"); env && *env) return env;
    return "data";
}

void emit(const Options& opt, const rep::Table& table, const nlohmann::json& doc) {
    switch (opt.format) {
    case Format::table: rep::write_table(std::cout, table); break;
    case Format::csv: rep::write_csv(std::cout, table); break;
    case Format::json: std::cout << doc.dump(2) << '\n'; break;
    }
}

bool glob_match(const std::string& pattern, const std::string& text) {
    return fnmatch(pattern.c_str(), text.c_str(), FNM_NOESCAPE) == 0;
}

int cmd_catalog(const Options& opt, const ks::DataSet& data, const std::string& pattern) {
    std::vector<ks::RealFormCatalog::Ptr> rows;
    std::optional<ks::SimpleType> type;
    try {
        if (!pattern.empty()) type = ks::SimpleType::parse(pattern);
    } catch (const ks::InvalidType&) {
    }
    for (const auto& r : data.catalog.records()) {
        if (pattern.empty() || (type && r->complex_type == *type && type->name() == pattern) ||
            glob_match(pattern, r->name))
            rows.push_back(r);
    }
    if (rows.empty()) throw ks::DataError("no real form matches '" + pattern + "'");
    emit(opt, rep::catalog_table(rows), rep::catalog_json(rows));
    return 0;
}

int cmd_sieve(const Options& opt, const ks::DataSet& data, const std::string& g) {
    const auto rows = g.empty() ? ks::sieve_all_exceptional(data.catalog, data.s_catalog)
                                : ks::potential_pairs(data.catalog.ptr(g), data.catalog, data.s_catalog);
    emit(opt, rep::sieve_table(rows), rep::sieve_json(rows));
    return 0;
}

int cmd_eliminate(const Options& opt, const ks::DataSet& data, const std::vector<std::string>& without,
                  const std::string& from_json) {
    ks::FactSet facts = data.facts;
    for (const auto& key : without) facts = facts.without(key);

    std::vector<ks::TripleCandidate> triples;
    if (from_json.empty()) {
        triples = ks::sieve_all_exceptional(data.catalog, data.s_catalog);
    } else if (from_json == "-") {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(std::cin);
        } catch (const nlohmann::json::exception& e) {
            throw ks::DataError(std::string("stdin: ") + e.what());
        }
        triples = rep::triples_from_json(doc, data.catalog);
    } else {
        triples = rep::triples_from_json(ks::json_util::read_file(from_json), data.catalog);
    }

    const auto res = ks::eliminate_all(triples, {&data.classes, &facts});
    std::vector<std::string> keys;
    for (const auto& f : facts.facts()) keys.push_back(f.key);
    emit(opt, rep::eliminate_table(res), rep::eliminate_json(res, keys));
    const std::string summary = "survivors: " + std::to_string(res.survivors());
    if (opt.format == Format::table) std::cout << summary << '\n';
    else if (opt.format == Format::csv) std::cerr << summary << '\n';
    return res.survivors() == 0 ? 0 : 1;
}

int cmd_hyperbolic(const Options& opt, const ks::DataSet& data, const std::string& name) {
    std::vector<rep::HyperbolicRow> rows;
    if (!name.empty()) {
        rows.push_back(rep::hyperbolic_row(data.catalog.ptr(name)));
    } else {
        for (const auto& r : data.catalog.records())
            if (!r->is_compact()) rows.push_back(rep::hyperbolic_row(r));
    }
    emit(opt, rep::hyperbolic_table(rows), rep::hyperbolic_json(rows));
    return 0;
}

int cmd_proper(const Options& opt, const ks::DataSet& data, const std::string& file) {
    const auto q = ks::PropernessQuery::load(file, data.catalog);
    const auto r = ks::properness_test(q, opt.cap);
    emit(opt, rep::proper_table(q, r), rep::proper_json(q, r));
    return 0;
}

int cmd_subalgebras(const Options& opt, const ks::DataSet& data, const std::string& type, bool regular_only) {
    const auto t = ks::SimpleType::parse(type);
    std::vector<ks::SubalgebraRecord> rows;
    if (regular_only) {
        for (const auto& s : ks::regular_subalgebra_types(t))
            if (!(s.is_simple() && s.factors().front() == t))
                rows.push_back({t, s, true, false, data.classes.count(t, s)});
    } else {
        rows = ks::semisimple_subalgebra_types(t, data.s_catalog, &data.classes);
    }
    emit(opt, rep::subalgebra_table(rows), rep::subalgebra_json(rows));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Candidate triples for compact Clifford-Klein forms of exceptional homogeneous spaces"};
    app.require_subcommand(1);
    Options opt;
    std::string data_dir;
    app.option_defaults()->always_capture_default();
    app.add_option("--data-dir", data_dir, "Directory with the data files (default: $KLEINSIEVE_DATA_DIR, then ./data)");
    const std::map<std::string, Format> formats{{"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};
    auto* format_opt =
        app.add_option("--format", opt.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    bool json_flag = false;
    app.add_flag("--json", json_flag, "Same as --format json")->excludes(format_opt);
    app.add_option("--cap", opt.cap, "Largest Weyl group enumerated")->check(CLI::PositiveNumber);
    app.fallthrough();

    std::string pattern, g_name, form_name, query_file, from_json, type_name;
    std::vector<std::string> without;
    bool regular_only = false;

    auto* catalog = app.add_subcommand("catalog", "List real forms with their invariants");
    catalog->add_option("pattern", pattern, "Name glob (e.g. 'e6*') or complex type (e.g. E6)");
    auto* sieve = app.add_subcommand("sieve", "Candidate triples (all noncompact exceptional forms by default)");
    sieve->add_option("g", g_name, "Restrict to one ambient real form");
    auto* eliminate = app.add_subcommand("eliminate", "Apply the elimination rules to the candidate triples");
    eliminate->add_option("--without-fact", without, "Drop an external fact by key (repeatable)");
    eliminate->add_option("--from-json", from_json, "Read triples from a sieve JSON report ('-' for stdin)");
    auto* hyperbolic = app.add_subcommand("hyperbolic", "Weight patterns and invariant witness of a real form");
    hyperbolic->add_option("name", form_name, "Real form (all noncompact forms if omitted)");
    auto* proper = app.add_subcommand("proper", "Properness test on explicit subspaces of a");
    proper->add_option("query", query_file, "Query file")->required();
    auto* subalgebras = app.add_subcommand("subalgebras", "Semisimple subalgebra types of a simple type");
    subalgebras->add_option("type", type_name, "Simple type, e.g. E6")->required();
    subalgebras->add_flag("--regular-only", regular_only, "Only regular subalgebras");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (json_flag) opt.format = Format::json;

    try {
        const auto data = ks::DataSet::load(resolve_data_dir(data_dir));
        if (*catalog) return cmd_catalog(opt, data, pattern);
        if (*sieve) return cmd_sieve(opt, data, g_name);
        if (*eliminate) return cmd_eliminate(opt, data, without, from_json);
        if (*hyperbolic) return cmd_hyperbolic(opt, data, form_name);
        if (*proper) return cmd_proper(opt, data, query_file);
        if (*subalgebras) return cmd_subalgebras(opt, data, type_name, regular_only);
    } catch (const ks::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
